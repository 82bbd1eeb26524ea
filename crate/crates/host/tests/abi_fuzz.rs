//! Random arguments to every ABI entry point must return documented codes,
//! stay inside their output windows and leave the host usable.

mod common;

use common::fuzz::{campaign, Entry};

fn run(entry: Entry, seed: u64) {
    let report = campaign(entry, 10_000, seed).unwrap_or_else(|e| panic!("{}: {e}", entry.import_name()));
    assert_eq!(report.calls, 10_000);
    // every campaign must reach both success and failure paths
    assert!(report.codes.len() >= 2, "{entry:?}: {:?}", report.codes);
}

#[test]
fn load() {
    run(Entry::Load, 1);
}

#[test]
fn close() {
    run(Entry::Close, 2);
}

#[test]
fn attach() {
    run(Entry::Attach, 3);
}

#[test]
fn poll() {
    run(Entry::Poll, 4);
}

#[test]
fn fd_by_name() {
    run(Entry::FdByName, 5);
}

#[test]
fn map_operate() {
    run(Entry::MapOperate, 6);
}

#[test]
fn guard_catches_undeclared_writes() {
    common::fuzz::guard_self_check().unwrap();
}
