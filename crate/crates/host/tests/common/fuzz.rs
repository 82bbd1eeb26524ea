//! Random-argument campaigns against single ABI entry points. Guest memory
//! is filled with a guard pattern and shadowed; after every call the only
//! bytes allowed to differ are the call's declared output window.

use std::collections::BTreeMap;
use std::ops::Range;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wbpf_host::error::E_NO_SPACE;
use wbpf_host::RunError;

use super::{object_bytes, Abi, BUF_AT, OBJ_AT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Entry {
    Load,
    Close,
    Attach,
    Poll,
    FdByName,
    MapOperate,
}

impl Entry {
    pub const ALL: [Entry; 6] = [
        Entry::Load,
        Entry::Close,
        Entry::Attach,
        Entry::Poll,
        Entry::FdByName,
        Entry::MapOperate,
    ];

    pub fn import_name(self) -> &'static str {
        match self {
            Entry::Load => "wasm_load_bpf_object",
            Entry::Close => "wasm_close_bpf_object",
            Entry::Attach => "wasm_attach_bpf_program",
            Entry::Poll => "wasm_bpf_buffer_poll",
            Entry::FdByName => "wasm_bpf_map_fd_by_name",
            Entry::MapOperate => "wasm_bpf_map_operate",
        }
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub calls: usize,
    /// Result code histogram (load results are folded to 1 = handle, 0 = failure).
    pub codes: BTreeMap<i64, usize>,
    pub guest_traps: usize,
    pub slowest: Duration,
}

const TRAPPING_CALLBACK: i32 = 2;
/// No single call may take longer than this; polls in the campaign never block.
pub const CALL_LIMIT: Duration = Duration::from_secs(1);

fn guard_byte(i: usize) -> u8 {
    ((i as u32).wrapping_mul(0x9e37_79b1) >> 24) as u8 ^ 0xa5
}

struct Guarded {
    abi: Abi,
    shadow: Vec<u8>,
    rng: StdRng,
    objects: [Vec<u8>; 2],
    handles: Vec<u64>,
}

impl Guarded {
    fn new(seed: u64) -> Self {
        let mut abi = Abi::new("linux-6.10");
        let mem = abi.inst.memory_mut();
        for (i, b) in mem.iter_mut().enumerate() {
            *b = guard_byte(i);
        }
        let shadow = abi.inst.memory().to_vec();
        let mut g = Guarded {
            abi,
            shadow,
            rng: StdRng::seed_from_u64(seed),
            objects: [object_bytes("bootstrap"), object_bytes("maps")],
            handles: Vec::new(),
        };
        for i in 0..2 {
            g.reload(i);
        }
        g
    }

    fn mem_len(&self) -> i32 {
        self.shadow.len() as i32
    }

    /// Test-side write: lands in memory and shadow alike.
    fn put(&mut self, at: i32, bytes: &[u8]) {
        self.abi.put(at, bytes);
        self.shadow[at as usize..][..bytes.len()].copy_from_slice(bytes);
    }

    fn cstr(&mut self, slot: i32, s: &str) -> i32 {
        let at = self.abi.cstr(slot, s);
        let n = s.len() + 1;
        self.shadow[at as usize..][..n].copy_from_slice(&self.abi.get(at, n));
        at
    }

    fn reload(&mut self, which: usize) -> u64 {
        let obj = self.objects[which % 2].clone();
        self.put(OBJ_AT, &obj);
        let h = self.abi.inst.call::<_, i64>("load", (OBJ_AT, obj.len() as i32), None).unwrap() as u64;
        assert!(h > 0, "fixture failed to load: {:?}", self.abi.inst.state().last_error());
        self.handles.push(h);
        h
    }

    fn ptr(&mut self) -> i32 {
        let mem = self.mem_len();
        match self.rng.gen_range(0..7) {
            0 => 0,
            1 => self.rng.gen(),
            2 => mem - self.rng.gen_range(0..64),
            3 => self.rng.gen_range(-8..8),
            4 => BUF_AT + self.rng.gen_range(0..256),
            _ => self.rng.gen_range(0..mem),
        }
    }

    fn len(&mut self) -> i32 {
        match self.rng.gen_range(0..5) {
            0 => 0,
            1 => self.rng.gen(),
            2 => self.rng.gen_range(-4..4),
            _ => self.rng.gen_range(0..4096),
        }
    }

    fn handle(&mut self) -> i64 {
        if self.rng.gen_bool(0.7) {
            self.handles[self.rng.gen_range(0..self.handles.len())] as i64
        } else {
            match self.rng.gen_range(0..3) {
                0 => self.rng.gen(),
                1 => -1,
                _ => self.rng.gen_range(0..64),
            }
        }
    }

    fn valid_fd(&mut self) -> i32 {
        let h = self.handles[self.rng.gen_range(0..self.handles.len())];
        let name = ["rb", "counts", "stats", "nosuch"][self.rng.gen_range(0..4)];
        let at = self.cstr(2, name);
        self.abi.inst.call("fd_by_name", (h as i64, at), None).unwrap()
    }

    fn random_junk(&mut self) {
        if self.rng.gen_bool(0.2) {
            let junk: Vec<u8> = (0..self.rng.gen_range(0..48)).map(|_| self.rng.gen()).collect();
            let at = self.rng.gen_range(0x100..0x3000);
            self.put(at, &junk);
        }
    }

    /// Compare memory to the shadow outside `window`, then adopt the window.
    fn check_guard(&mut self, window: Option<Range<usize>>, what: &str) -> Result<(), String> {
        let mem = self.abi.inst.memory();
        if mem.len() != self.shadow.len() {
            return Err(format!("{what}: guest memory resized to {}", mem.len()));
        }
        if let Some(w) = window {
            let w = w.start.min(mem.len())..w.end.min(mem.len());
            self.shadow[w.clone()].copy_from_slice(&mem[w]);
        }
        if mem != self.shadow.as_slice() {
            let at = mem.iter().zip(&self.shadow).position(|(a, b)| a != b).unwrap();
            let end = (at + 16).min(mem.len());
            return Err(format!(
                "{what}: wrote guest byte {at:#x} outside its output window ({} != {})",
                hex::encode(&mem[at..end]),
                hex::encode(&self.shadow[at..end])
            ));
        }
        Ok(())
    }

    fn window(ptr: i32, len: u64) -> Option<Range<usize>> {
        let start = ptr as u32 as usize;
        Some(start..start.saturating_add(len as usize))
    }

    /// Issue one random call to `entry`; returns (result, output window, description).
    fn step(&mut self, entry: Entry) -> Result<(Result<i64, RunError>, Option<Range<usize>>, String), String> {
        self.random_junk();
        Ok(match entry {
            Entry::Load => {
                let (ptr, size) = match self.rng.gen_range(0..4) {
                    0 => {
                        // a truncated or corrupted copy of a fixture
                        let mut obj = self.objects[self.rng.gen_range(0..2)].clone();
                        obj.truncate(self.rng.gen_range(0..=obj.len()));
                        for _ in 0..self.rng.gen_range(0..4) {
                            if !obj.is_empty() {
                                let i = self.rng.gen_range(0..obj.len());
                                obj[i] = self.rng.gen();
                            }
                        }
                        self.put(OBJ_AT, &obj);
                        (OBJ_AT, obj.len() as i32)
                    }
                    1 => {
                        let obj = self.objects[self.rng.gen_range(0..2)].clone();
                        self.put(OBJ_AT, &obj);
                        (OBJ_AT, obj.len() as i32)
                    }
                    _ => (self.ptr(), self.len()),
                };
                let r = self.abi.inst.call::<_, i64>("load", (ptr, size), None);
                if let Ok(h) = r {
                    if h > 0 {
                        // keep the map registry bounded
                        let c: i32 = self.abi.inst.call("close", (h,), None).unwrap();
                        if c != 0 {
                            return Err(format!("close of fresh handle {h} returned {c}"));
                        }
                    }
                }
                (r.map(|h| (h > 0) as i64), None, format!("load({ptr:#x}, {size})"))
            }
            Entry::Close => {
                let h = self.handle();
                let r = self.abi.inst.call::<_, i32>("close", (h,), None).map(i64::from);
                if matches!(r, Ok(0)) {
                    self.handles.retain(|&x| x as i64 != h);
                    let which = self.rng.gen_range(0..2);
                    self.reload(which);
                }
                (r, None, format!("close({h})"))
            }
            Entry::Attach => {
                let h = self.handle();
                let names = ["handle_exec", "count_events", "update_then_lookup", "nosuch", ""];
                let n = if self.rng.gen_bool(0.5) {
                    let name = names[self.rng.gen_range(0..names.len())];
                    self.cstr(0, name)
                } else {
                    self.ptr()
                };
                let t = if self.rng.gen_bool(0.5) { self.cstr(1, "") } else { self.ptr() };
                let r = self.abi.inst.call::<_, i32>("attach", (h, n, t), None).map(i64::from);
                if self.rng.gen_bool(0.01) {
                    // detach everything now and then so links stay bounded
                    let h = self.handles.remove(0);
                    assert_eq!(self.abi.close(h), 0);
                    self.reload(h as usize);
                }
                (r, None, format!("attach({h}, {n:#x}, {t:#x})"))
            }
            Entry::Poll => {
                let h = self.handle();
                let fd = if self.rng.gen_bool(0.6) { self.valid_fd() } else { self.rng.gen_range(-2..16) };
                if self.rng.gen_bool(0.3) {
                    let n = self.rng.gen_range(1..64);
                    let payload: Vec<u8> = (0..n).map(|_| self.rng.gen()).collect();
                    if let Some(rb) = self.abi.inst.state().maps().get(fd).as_ref().and_then(|m| m.ringbuf()) {
                        let _ = rb.output(&payload);
                    }
                }
                let func = match self.rng.gen_range(0..6) {
                    0 => self.rng.gen(),
                    1 => 1,
                    2 => TRAPPING_CALLBACK,
                    3 => -1,
                    _ => 0,
                };
                let (ctx, data, max) = (self.ptr(), self.ptr(), self.len());
                let timeout = self.rng.gen_range(0..=2);
                let r = self
                    .abi
                    .inst
                    .call::<_, i32>("poll", (h, fd, func, ctx, data, max, timeout), None)
                    .map(i64::from);
                let w = if max > 0 { Self::window(data, max as u64) } else { None };
                (r, w, format!("poll({h}, {fd}, {func}, {ctx:#x}, {data:#x}, {max}, {timeout})"))
            }
            Entry::FdByName => {
                let h = self.handle();
                let n = match self.rng.gen_range(0..3) {
                    0 => {
                        let name = ["rb", "counts", "stats", "nosuch", ""][self.rng.gen_range(0..5)];
                        self.cstr(2, name)
                    }
                    1 => {
                        // unterminated run longer than any accepted name
                        let run = vec![b'a'; 700];
                        self.put(0x2000, &run);
                        0x2000
                    }
                    _ => self.ptr(),
                };
                let r = self.abi.inst.call::<_, i32>("fd_by_name", (h, n), None).map(i64::from);
                (r, None, format!("fd_by_name({h}, {n:#x})"))
            }
            Entry::MapOperate => {
                let fd = if self.rng.gen_bool(0.7) { self.valid_fd() } else { self.rng.gen() };
                let cmd = if self.rng.gen_bool(0.9) { self.rng.gen_range(0..6) } else { self.rng.gen() };
                let (key, value, next) = (self.ptr(), self.ptr(), self.ptr());
                let flags = if self.rng.gen_bool(0.8) { self.rng.gen_range(0i64..4) } else { self.rng.gen() };
                let sizes = self
                    .abi
                    .inst
                    .state()
                    .maps()
                    .get(fd)
                    .map(|m| (m.def().key_size as u64, m.def().value_size as u64));
                let r = self
                    .abi
                    .inst
                    .call::<_, i32>("map_op", (fd, cmd, key, value, next, flags), None)
                    .map(i64::from);
                let w = match (cmd, sizes) {
                    (1, Some((_, vs))) => Self::window(value, vs),
                    (4, Some((ks, _))) => Self::window(next, ks),
                    _ => None,
                };
                (r, w, format!("map_operate({fd}, {cmd}, {key:#x}, {value:#x}, {next:#x}, {flags})"))
            }
        })
    }
}

/// Run `iters` random calls to `entry`. Err names the first call that
/// returned an undocumented result, trapped unexpectedly, ran past
/// `CALL_LIMIT` or touched guest memory outside its output window.
pub fn campaign(entry: Entry, iters: usize, seed: u64) -> Result<Report, String> {
    let mut g = Guarded::new(seed);
    g.check_guard(None, "setup")?;
    let mut report = Report::default();
    for i in 0..iters {
        let start = Instant::now();
        let (result, window, what) = g.step(entry)?;
        let took = start.elapsed();
        report.slowest = report.slowest.max(took);
        if took > CALL_LIMIT {
            return Err(format!("call {i} {what} took {took:?}"));
        }
        match result {
            Ok(code) => {
                if code < E_NO_SPACE as i64 {
                    return Err(format!("call {i} {what} returned undocumented {code}"));
                }
                *report.codes.entry(code.min(1)).or_default() += 1;
            }
            // the trapping callback is the guest's own fault and surfaces as a trap
            Err(RunError::GuestTrap { .. }) if entry == Entry::Poll && what.contains(", 2, ") => {
                report.guest_traps += 1;
            }
            Err(e) => return Err(format!("call {i} {what}: {e}")),
        }
        g.check_guard(window, &format!("call {i} {what}"))?;
        report.calls += 1;
    }
    // the host still works afterwards
    let h = g.reload(0);
    let fd = g.valid_fd_for(h, "rb");
    g.abi.inst.state().maps().get(fd).unwrap().ringbuf().unwrap().output(&[9; 8]).unwrap();
    let got = g.abi.poll(h, fd, 0, 0, BUF_AT, 64, 0);
    if got != 1 {
        return Err(format!("host unusable after campaign: poll returned {got}"));
    }
    Ok(report)
}

impl Guarded {
    fn valid_fd_for(&mut self, h: u64, name: &str) -> i32 {
        let at = self.cstr(2, name);
        self.abi.inst.call("fd_by_name", (h as i64, at), None).unwrap()
    }
}

/// Negative control: a successful lookup checked without its output window
/// must trip the guard.
pub fn guard_self_check() -> Result<(), String> {
    let mut g = Guarded::new(0);
    let h = g.handles[1];
    let fd = g.valid_fd_for(h, "stats");
    g.put(BUF_AT, &0u32.to_le_bytes());
    let code = g.abi.map_op(fd, 1, BUF_AT, BUF_AT + 64, 0, 0);
    if code != 0 {
        return Err(format!("control lookup returned {code}"));
    }
    match g.check_guard(None, "control") {
        Err(_) => Ok(()),
        Ok(()) => Err("guard missed a write".into()),
    }
}
