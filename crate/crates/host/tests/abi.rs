mod common;

use std::collections::BTreeSet;
use std::sync::atomic::Ordering;
use std::time::{Duration, Instant};

use common::*;
use wbpf_host::error::*;
use wbpf_host::{HostError, RunError, WasmBpfRuntime};

const CB: i32 = 0;
const CB_WRONG_SHAPE: i32 = 1;
const CB_TRAP: i32 = 2;

fn ring_output(abi: &Abi, fd: i32, bytes: &[u8]) {
    let store = abi.inst.state().maps().get(fd).unwrap();
    store.ringbuf().unwrap().output(bytes).unwrap();
}

#[test]
fn load_returns_handles_from_one() {
    let mut abi = Abi::new("linux-6.10");
    let obj = object_bytes("bootstrap");
    assert_eq!(abi.load(&obj), 1);
    assert_eq!(abi.load(&obj), 2);
    assert_eq!(abi.inst.state().handles().len(), 2);
}

#[test]
fn load_failures_return_zero() {
    let mut abi = Abi::new("linux-6.10");
    let h: i64 = abi.inst.call("load", (OBJ_AT, 0), None).unwrap();
    assert_eq!(h, 0);
    assert_eq!(abi.inst.state().last_error(), Some(&HostError::EmptyObject));

    let mem = abi.inst.memory().len() as i32;
    let h: i64 = abi.inst.call("load", (mem - 4, 64), None).unwrap();
    assert_eq!(h, 0);
    assert!(matches!(
        abi.inst.state().last_error(),
        Some(HostError::OutOfBoundsGuestPointer { .. })
    ));

    assert_eq!(abi.load(b"not an elf file at all"), 0);
    assert!(matches!(abi.inst.state().last_error(), Some(HostError::Elf(_))));

    // the legacy fixture is rejected by the parser; nothing may leak
    assert_eq!(abi.load(&object_bytes("legacy")), 0);
    assert_eq!(abi.inst.state().handles().len(), 0);
    // failures do not consume handles
    assert_eq!(abi.load(&object_bytes("bootstrap")), 1);
}

#[test]
fn close_lifecycle() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("maps"));
    let fd = abi.fd(h, "counts");
    assert!(fd > 0);
    abi.put(BUF_AT, &1u32.to_le_bytes());
    abi.put(BUF_AT + 8, &5u64.to_le_bytes());
    assert_eq!(abi.map_op(fd, 2, BUF_AT, BUF_AT + 8, 0, 0), OK);

    assert_eq!(abi.close(0), E_BAD_HANDLE);
    assert_eq!(abi.close(h), OK);
    assert_eq!(abi.close(h), E_BAD_HANDLE);
    assert_eq!(abi.map_op(fd, 1, BUF_AT, BUF_AT + 8, 0, 0), E_BAD_HANDLE);
    assert_eq!(abi.fd(h, "counts"), E_BAD_HANDLE);
    assert_eq!(abi.attach(h, "count_events", ""), E_BAD_HANDLE);
    // handles are never reused
    assert_eq!(abi.load(&object_bytes("maps")), h + 1);
}

#[test]
fn attach_rules() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    assert_eq!(abi.attach(h, "handle_exec", ""), 0);
    assert_eq!(abi.attach(h, "handle_exec", "custom/source"), 1);
    assert_eq!(abi.attach(h, "handle_exce", ""), E_NOT_FOUND);
    assert_eq!(abi.inst.state().hub().attached("tracepoint/sched/sched_process_exec"), 1);
    assert_eq!(abi.inst.state().hub().attached("custom/source"), 1);
    let obj = abi.inst.state().handles().get(h).unwrap();
    assert_eq!(obj.links.len(), 2);
    assert!(obj.links.iter().all(|l| l.is_active()));

    // unterminated string
    let n = 0x2000;
    let fill = vec![b'a'; 600];
    abi.put(n, &fill);
    let t = abi.cstr(1, "");
    let r: i32 = abi.inst.call("attach", (h as i64, n, t), None).unwrap();
    assert_eq!(r, E_BAD_ARGUMENT);
    assert_eq!(abi.inst.state().last_error(), Some(&HostError::BadString(n as u32)));
}

#[test]
fn lsm_on_linux_5_5_is_unsupported() {
    let mut abi = Abi::new("linux-5.5");
    let h = abi.load(&object_bytes("lsm"));
    assert!(h > 0, "{:?}", abi.inst.state().last_error());
    assert_eq!(abi.attach(h, "restrict_open", ""), E_UNSUPPORTED);
    let err = abi.inst.state().last_error().unwrap().to_string();
    assert!(err.contains("restrict_open"), "{err}");
    assert_eq!(abi.attach(h, "note_open", ""), 0);

    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("lsm"));
    assert_eq!(abi.attach(h, "restrict_open", ""), 0);
}

#[test]
fn poll_delivers_one_record() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    let fd = abi.fd(h, "rb");
    let record: Vec<u8> = (0..16).collect();
    ring_output(&abi, fd, &record);
    let before = abi.inst.state().copy_stats();
    assert_eq!(abi.poll(h, fd, CB, 77, BUF_AT, 64, 0), 1);
    assert_eq!(abi.counter("calls"), 1);
    assert_eq!(abi.counter("last_size"), 16);
    assert_eq!(abi.counter("last_ctx"), 77);
    assert_eq!(abi.counter("last_data"), BUF_AT);
    assert_eq!(abi.get(BUF_AT, 16), record);
    let after = abi.inst.state().copy_stats();
    assert_eq!(after.into_guest - before.into_guest, 1);
    assert_eq!(after.into_guest_bytes - before.into_guest_bytes, 16);
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 0), 0);
}

#[test]
fn poll_timeout_without_records() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    let fd = abi.fd(h, "rb");
    let t = Instant::now();
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 10), 0);
    let waited = t.elapsed();
    assert!(waited >= Duration::from_millis(10), "{waited:?}");
    assert!(waited < Duration::from_secs(2), "{waited:?}");
}

#[test]
fn poll_skips_oversize_records() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    let fd = abi.fd(h, "rb");
    ring_output(&abi, fd, &[1; 100]);
    ring_output(&abi, fd, &[2; 8]);
    abi.put(BUF_AT, &[0xee; 64]);
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 0), 1);
    assert_eq!(abi.counter("last_size"), 8);
    assert_eq!(abi.get(BUF_AT, 9), [2, 2, 2, 2, 2, 2, 2, 2, 0xee]);
    assert_eq!(abi.inst.state().dropped_records(), 1);
    assert!(matches!(
        abi.inst.state().last_error(),
        Some(HostError::RecordTooLarge { len: 100, max: 64 })
    ));
    // the consumer moved past the big record
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 0), 0);
}

#[test]
fn poll_errors() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    let fd = abi.fd(h, "rb");
    let m = abi.load(&object_bytes("maps"));
    let counts = abi.fd(m, "counts");
    assert_eq!(abi.fd(h, "nope"), E_NOT_FOUND);
    assert_eq!(abi.poll(99, fd, CB, 0, BUF_AT, 64, 0), E_BAD_HANDLE);
    assert_eq!(abi.poll(m, counts, CB, 0, BUF_AT, 64, 0), E_BAD_ARGUMENT);
    assert_eq!(abi.inst.state().last_error(), Some(&HostError::NotARingbuf(counts)));
    // a ring buffer of a different object
    assert_eq!(abi.poll(m, fd, CB, 0, BUF_AT, 64, 0), E_BAD_ARGUMENT);
    let mem = abi.inst.memory().len() as i32;
    assert_eq!(abi.poll(h, fd, CB, 0, mem - 10, 64, 0), E_OUT_OF_BOUNDS);
    ring_output(&abi, fd, &[1; 4]);
    assert_eq!(abi.poll(h, fd, CB_WRONG_SHAPE, 0, BUF_AT, 64, 0), E_BAD_ARGUMENT);
    assert_eq!(abi.inst.state().last_error(), Some(&HostError::BadCallback(1)));
    assert_eq!(abi.poll(h, fd, 17, 0, BUF_AT, 64, 0), E_BAD_ARGUMENT);
    // nothing was consumed by the failed calls
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 0), 1);
}

#[test]
fn poll_callback_can_stop_delivery() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    let fd = abi.fd(h, "rb");
    for i in 0..5u8 {
        ring_output(&abi, fd, &[i; 4]);
    }
    abi.inst.call::<(i32,), ()>("set_stop_after", (2,), None).unwrap();
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 0), 2);
    abi.inst.call::<(i32,), ()>("set_stop_after", (0,), None).unwrap();
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 0), 3);
    assert_eq!(abi.get(BUF_AT, 4), [4; 4]);
}

#[test]
fn callback_trap_reports_abi_trace() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    let fd = abi.fd(h, "rb");
    ring_output(&abi, fd, &[1; 4]);
    let err = abi
        .inst
        .call::<(i64, i32, i32, i32, i32, i32, i32), i32>("poll", (h as i64, fd, CB_TRAP, 0, BUF_AT, 64, 0), None)
        .unwrap_err();
    match err {
        RunError::GuestTrap { trace, message } => {
            assert!(message.contains("unreachable"), "{message}");
            let names: Vec<_> = trace.iter().map(|c| c.func).collect();
            assert_eq!(
                names,
                ["wasm_load_bpf_object", "wasm_bpf_map_fd_by_name", "wasm_bpf_buffer_poll"]
            );
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn shutdown_interrupts_empty_poll() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    let fd = abi.fd(h, "rb");
    let flag = abi.inst.shutdown_flag();
    let setter = std::thread::spawn(move || {
        std::thread::sleep(Duration::from_millis(30));
        flag.store(true, Ordering::Release);
    });
    let t = Instant::now();
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, -1), E_INTERRUPTED);
    assert!(t.elapsed() < Duration::from_secs(5));
    setter.join().unwrap();
    // pending records are still delivered after shutdown
    ring_output(&abi, fd, &[1; 4]);
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, -1), 1);
}

#[test]
fn poll_wakes_on_event_from_another_thread() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("bootstrap"));
    assert_eq!(abi.attach(h, "handle_exec", ""), 0);
    let fd = abi.fd(h, "rb");
    let hub = abi.inst.hub();
    let firer = std::thread::spawn(move || {
        std::thread::sleep(Duration::from_millis(20));
        let mut ctx = vec![0u8; 24];
        ctx[..4].copy_from_slice(&99u32.to_le_bytes());
        ctx[8..12].copy_from_slice(b"sh\0\0");
        hub.trigger_event("tracepoint/sched/sched_process_exec", &ctx)
    });
    assert_eq!(abi.poll(h, fd, CB, 0, BUF_AT, 64, 5000), 1);
    assert_eq!(firer.join().unwrap(), 1);
    assert_eq!(abi.counter("last_size"), 32);
    let ev = abi.get(BUF_AT, 32);
    assert_eq!(u32::from_le_bytes(ev[..4].try_into().unwrap()), 99);
    assert_eq!(&ev[16..18], b"sh");
}

#[test]
fn map_operate_roundtrip_and_errors() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("maps"));
    let fd = abi.fd(h, "counts");
    let (k, v, out) = (BUF_AT, BUF_AT + 16, BUF_AT + 32);
    abi.put(k, &7u32.to_le_bytes());
    abi.put(v, &0x0102_0304_0506_0708u64.to_le_bytes());
    let before = abi.inst.state().copy_stats();
    assert_eq!(abi.map_op(fd, 2, k, v, 0, 0), OK);
    assert_eq!(abi.map_op(fd, 1, k, out, 0, 0), OK);
    let after = abi.inst.state().copy_stats();
    assert_eq!(abi.get(out, 8), abi.get(v, 8));
    assert_eq!((after.from_guest - before.from_guest, after.into_guest - before.into_guest), (1, 1));

    assert_eq!(abi.map_op(fd, 9, k, v, 0, 0), E_BAD_ARGUMENT);
    assert_eq!(abi.map_op(fd, 2, k, v, 0, 1), E_EXISTS);
    assert_eq!(abi.map_op(1234, 1, k, v, 0, 0), E_BAD_HANDLE);
    let mem = abi.inst.memory().len() as i32;
    assert_eq!(abi.map_op(fd, 1, k, mem - 4, 0, 0), E_OUT_OF_BOUNDS);
    assert_eq!(abi.map_op(fd, 1, mem, v, 0, 0), E_OUT_OF_BOUNDS);
    assert_eq!(abi.map_op(fd, 3, k, 0, 0, 0), OK);
    assert_eq!(abi.map_op(fd, 3, k, 0, 0, 0), E_NOT_FOUND);
    assert_eq!(abi.map_op(fd, 1, k, out, 0, 0), E_NOT_FOUND);

    let stats = abi.fd(h, "stats");
    abi.put(k, &4u32.to_le_bytes());
    assert_eq!(abi.map_op(stats, 1, k, out, 0, 0), E_NOT_FOUND);
    assert_eq!(abi.map_op(stats, 3, k, 0, 0, 0), E_UNSUPPORTED);
}

#[test]
fn get_next_key_enumerates_all_keys() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("maps"));
    let fd = abi.fd(h, "counts");
    let inserted: BTreeSet<u32> = [3, 1_000_000, 17, 0, 42, 9].into_iter().collect();
    for &key in &inserted {
        abi.put(BUF_AT, &key.to_le_bytes());
        abi.put(BUF_AT + 8, &(key as u64).to_le_bytes());
        assert_eq!(abi.map_op(fd, 2, BUF_AT, BUF_AT + 8, 0, 0), OK);
    }
    let mut seen = BTreeSet::new();
    let (cur, next) = (BUF_AT + 64, BUF_AT + 128);
    let mut r = abi.map_op(fd, 4, 0, 0, next, 0);
    while r == OK {
        let key = u32::from_le_bytes(abi.get(next, 4).try_into().unwrap());
        assert!(seen.insert(key), "key {key} repeated");
        abi.put(cur, &key.to_le_bytes());
        r = abi.map_op(fd, 4, cur, 0, next, 0);
    }
    assert_eq!(r, E_NOT_FOUND);
    assert_eq!(seen, inserted);
}

#[test]
fn trigger_runs_every_attached_program() {
    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("maps"));
    assert_eq!(abi.attach(h, "update_then_lookup", ""), 0);
    assert_eq!(abi.attach(h, "count_events", ""), 1);
    let hub = abi.inst.hub();
    assert_eq!(hub.trigger_event("tracepoint/syscalls/sys_enter_openat", &[]), 2);
    assert_eq!(hub.trigger_event("tracepoint/syscalls/sys_enter_openat", &[]), 2);
    assert_eq!(hub.trigger_event("no/such/source", &[]), 0);
    let (counts, stats) = (abi.fd(h, "counts"), abi.fd(h, "stats"));
    abi.put(BUF_AT, &1u32.to_le_bytes());
    assert_eq!(abi.map_op(counts, 1, BUF_AT, BUF_AT + 8, 0, 0), OK);
    assert_eq!(abi.get(BUF_AT + 8, 8), 7u64.to_le_bytes());
    abi.put(BUF_AT, &0u32.to_le_bytes());
    assert_eq!(abi.map_op(stats, 1, BUF_AT, BUF_AT + 8, 0, 0), OK);
    assert_eq!(abi.get(BUF_AT + 8, 8), 2u64.to_le_bytes());

    assert_eq!(abi.close(h), OK);
    assert_eq!(hub.trigger_event("tracepoint/syscalls/sys_enter_openat", &[]), 0);
}

#[test]
fn unknown_imports_are_rejected() {
    let wasm = wat::parse_str(
        r#"(module (import "wasm_bpf" "wasm_bpf_teleport" (func (param i32))) (memory (export "memory") 1))"#,
    )
    .unwrap();
    let rt = WasmBpfRuntime::new().unwrap();
    match rt.compile(&wasm) {
        Err(RunError::MissingImport { module, name }) => {
            assert_eq!((module.as_str(), name.as_str()), ("wasm_bpf", "wasm_bpf_teleport"));
        }
        other => panic!("unexpected {:?}", other.map(|_| ())),
    }
    let wasm = wat::parse_str(r#"(module (import "env" "f" (func)))"#).unwrap();
    assert!(matches!(rt.compile(&wasm), Err(RunError::MissingImport { .. })));
    assert!(matches!(rt.compile(b"\0asm garbage"), Err(RunError::ModuleInvalid(_))));
}

#[test]
fn missing_memory_is_reported() {
    let wasm = wat::parse_str(r#"(module (func (export "_start")))"#).unwrap();
    let rt = WasmBpfRuntime::new().unwrap();
    let r = rt.load(&wasm, config("linux-6.10"), Box::new(std::io::sink()), Box::new(std::io::sink()));
    assert!(matches!(r, Err(RunError::NoMemory)));
}

#[test]
fn target_btf_is_found_on_search_path() {
    let mut cfg = config("linux-6.10");
    cfg.env.btf_search_paths = vec![fixtures().join("btf/6.10/vmlinux.btf")];
    let mut abi = Abi::with_config(cfg);
    let h = abi.load(&object_bytes("core"));
    assert!(h > 0, "{:?}", abi.inst.state().last_error());
    let warnings = abi.inst.state().warnings();
    assert!(warnings.iter().all(|w| !w.contains("no target BTF")), "{warnings:?}");

    let mut abi = Abi::new("linux-6.10");
    let h = abi.load(&object_bytes("core"));
    assert!(h > 0);
    assert!(abi.inst.state().warnings().iter().any(|w| w.contains("no target BTF")));
}

#[test]
fn field_missing_in_target_fails_load() {
    let mut cfg = config("linux-6.10");
    cfg.env.btf_search_paths = vec![fixtures().join("btf/notgid/vmlinux.btf")];
    let mut abi = Abi::with_config(cfg);
    assert_eq!(abi.load(&object_bytes("core")), 0);
    assert!(matches!(abi.inst.state().last_error(), Some(HostError::Core(_))));
    assert_eq!(abi.inst.state().maps().get(1).map(|_| ()), None);
}
