#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(rel: &str) -> String {
    fixtures().join(rel).to_string_lossy().into_owned()
}

#[derive(Clone, Default)]
pub struct Capture(pub Arc<Mutex<Vec<u8>>>);

impl Write for Capture {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        self.0.lock().unwrap().extend_from_slice(buf);
        Ok(buf.len())
    }
    fn flush(&mut self) -> std::io::Result<()> {
        Ok(())
    }
}

impl Capture {
    pub fn text(&self) -> String {
        String::from_utf8_lossy(&self.0.lock().unwrap()).into_owned()
    }
}

/// Run the CLI in-process: (exit code, stdout, stderr).
pub fn wbpf(args: &[&str]) -> (i32, String, String) {
    let (out, err) = (Capture::default(), Capture::default());
    let argv = std::iter::once("wbpf").chain(args.iter().copied());
    let code = wbpf_cli::main_with_args(argv, Box::new(out.clone()), Box::new(err.clone()));
    (code, out.text(), err.text())
}

/// Event script with one exec event per `(pid, ppid, comm)`.
pub fn exec_script(events: &[(u32, u32, String)]) -> String {
    let mut s = String::from("# generated exec events\n");
    for (pid, ppid, comm) in events {
        let mut ctx = Vec::with_capacity(24);
        ctx.extend_from_slice(&pid.to_le_bytes());
        ctx.extend_from_slice(&ppid.to_le_bytes());
        let mut c = comm.as_bytes().to_vec();
        c.resize(16, 0);
        ctx.extend_from_slice(&c);
        s.push_str(&format!("trigger tracepoint/sched/sched_process_exec {}\n", hex::encode(ctx)));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecLine {
    pub pid: u32,
    pub ts: u64,
    pub comm: String,
    pub raw: Vec<u8>,
}

/// Parse `exec pid=<dec> ts=<dec> comm=<text> (<hex>)`.
pub fn parse_exec_line(line: &str) -> Option<ExecLine> {
    let rest = line.strip_prefix("exec pid=")?;
    let (pid, rest) = rest.split_once(" ts=")?;
    let (ts, rest) = rest.split_once(" comm=")?;
    let (comm, rest) = rest.rsplit_once(" (")?;
    let raw = hex::decode(rest.strip_suffix(')')?).ok()?;
    Some(ExecLine {
        pid: pid.parse().ok()?,
        ts: ts.parse().ok()?,
        comm: comm.to_string(),
        raw,
    })
}

/// Blank out the timestamp in both its decimal and its raw-byte form.
pub fn mask_ts(stdout: &str) -> String {
    stdout
        .lines()
        .map(|l| match parse_exec_line(l) {
            Some(e) => {
                let mut raw = e.raw.clone();
                raw[8..16].fill(0);
                format!("exec pid={} ts=* comm={} ({})", e.pid, e.comm, hex::encode(raw))
            }
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}
