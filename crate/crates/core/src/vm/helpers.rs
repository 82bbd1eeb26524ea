//! Helper functions callable from eBPF programs, numbered as in the kernel.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use super::{Grant, Trap, VmState, MAP_BASE};
use crate::elf::MapType;
use crate::maps::{MapError, MapRegistry, MapStore};

pub const MAP_LOOKUP_ELEM: u32 = 1;
pub const MAP_UPDATE_ELEM: u32 = 2;
pub const MAP_DELETE_ELEM: u32 = 3;
pub const KTIME_GET_NS: u32 = 5;
pub const GET_CURRENT_PID_TGID: u32 = 14;
pub const RINGBUF_OUTPUT: u32 = 130;
pub const RINGBUF_RESERVE: u32 = 131;
pub const RINGBUF_SUBMIT: u32 = 132;
pub const RINGBUF_DISCARD: u32 = 133;

const EINVAL: i64 = -22;

/// What helpers may ask of the embedding runtime.
pub trait HelperEnv: Sync {
    fn map(&self, handle: i32) -> Option<Arc<MapStore>>;
    fn ktime_ns(&self) -> u64;
    fn pid_tgid(&self) -> u64;
}

fn process_start() -> Instant {
    static START: OnceLock<Instant> = OnceLock::new();
    *START.get_or_init(Instant::now)
}

/// Monotonic nanoseconds since the first call in this process.
pub fn monotonic_ns() -> u64 {
    process_start().elapsed().as_nanos() as u64
}

/// Default environment: a map registry, the process clock and the host pid.
pub struct ExecEnv<'a> {
    pub maps: &'a MapRegistry,
    pub pid_tgid: u64,
}

impl<'a> ExecEnv<'a> {
    pub fn new(maps: &'a MapRegistry) -> Self {
        let pid = std::process::id() as u64;
        ExecEnv {
            maps,
            pid_tgid: pid << 32 | pid,
        }
    }
}

impl HelperEnv for ExecEnv<'_> {
    fn map(&self, handle: i32) -> Option<Arc<MapStore>> {
        self.maps.get(handle)
    }

    fn ktime_ns(&self) -> u64 {
        monotonic_ns()
    }

    fn pid_tgid(&self) -> u64 {
        self.pid_tgid
    }
}

pub type HelperFn = fn(&mut VmState, &dyn HelperEnv, [u64; 5]) -> Result<u64, Trap>;

#[derive(Debug, Clone)]
pub struct HelperTable {
    entries: BTreeMap<u32, (&'static str, HelperFn)>,
}

impl HelperTable {
    pub fn empty() -> Self {
        HelperTable {
            entries: BTreeMap::new(),
        }
    }

    pub fn standard() -> &'static HelperTable {
        static TABLE: OnceLock<HelperTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let mut t = HelperTable::empty();
            t.register(MAP_LOOKUP_ELEM, "map_lookup_elem", map_lookup_elem);
            t.register(MAP_UPDATE_ELEM, "map_update_elem", map_update_elem);
            t.register(MAP_DELETE_ELEM, "map_delete_elem", map_delete_elem);
            t.register(KTIME_GET_NS, "ktime_get_ns", |_, env, _| Ok(env.ktime_ns()));
            t.register(GET_CURRENT_PID_TGID, "get_current_pid_tgid", |_, env, _| Ok(env.pid_tgid()));
            t.register(RINGBUF_OUTPUT, "ringbuf_output", ringbuf_output);
            t.register(RINGBUF_RESERVE, "ringbuf_reserve", ringbuf_reserve);
            t.register(RINGBUF_SUBMIT, "ringbuf_submit", |s, _, a| ringbuf_commit(s, a, false));
            t.register(RINGBUF_DISCARD, "ringbuf_discard", |s, _, a| ringbuf_commit(s, a, true));
            t
        })
    }

    pub fn register(&mut self, id: u32, name: &'static str, f: HelperFn) {
        self.entries.insert(id, (name, f));
    }

    pub fn get(&self, id: u32) -> Option<HelperFn> {
        self.entries.get(&id).map(|(_, f)| *f)
    }

    pub fn name(&self, id: u32) -> Option<&'static str> {
        self.entries.get(&id).map(|(n, _)| *n)
    }

    pub fn ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }
}

fn fault(state: &VmState, id: u32, reason: impl Into<String>) -> Trap {
    Trap::HelperFault {
        pc: state.pc,
        id,
        reason: reason.into(),
    }
}

fn map_arg(state: &VmState, env: &dyn HelperEnv, id: u32, ptr: u64) -> Result<Arc<MapStore>, Trap> {
    let handle = ptr
        .checked_sub(MAP_BASE)
        .filter(|h| *h <= i32::MAX as u64)
        .ok_or_else(|| fault(state, id, format!("argument {ptr:#x} is not a map pointer")))?;
    env.map(handle as i32)
        .ok_or_else(|| fault(state, id, format!("map handle {handle} is not loaded")))
}

fn errno(e: MapError) -> u64 {
    e.errno() as u64
}

fn map_lookup_elem(state: &mut VmState, env: &dyn HelperEnv, a: [u64; 5]) -> Result<u64, Trap> {
    let map = map_arg(state, env, MAP_LOOKUP_ELEM, a[0])?;
    let key = state.read_vec(a[1], map.def().key_size as usize)?;
    match map.lookup_ref(&key) {
        Ok(Some(value)) => {
            let len = map.def().value_size as usize;
            Ok(state.grant(Grant::MapValue { map, value, len }).unwrap_or(0))
        }
        Ok(None) => Ok(0),
        Err(e) => Err(fault(state, MAP_LOOKUP_ELEM, e.to_string())),
    }
}

fn map_update_elem(state: &mut VmState, env: &dyn HelperEnv, a: [u64; 5]) -> Result<u64, Trap> {
    let map = map_arg(state, env, MAP_UPDATE_ELEM, a[0])?;
    let key = state.read_vec(a[1], map.def().key_size as usize)?;
    let value = state.read_vec(a[2], map.def().value_size as usize)?;
    Ok(match map.update(&key, &value, a[3]) {
        Ok(()) => 0,
        Err(e) => errno(e),
    })
}

fn map_delete_elem(state: &mut VmState, env: &dyn HelperEnv, a: [u64; 5]) -> Result<u64, Trap> {
    let map = map_arg(state, env, MAP_DELETE_ELEM, a[0])?;
    let key = state.read_vec(a[1], map.def().key_size as usize)?;
    Ok(match map.delete(&key) {
        Ok(()) => 0,
        Err(e) => errno(e),
    })
}

fn ring_map(state: &VmState, env: &dyn HelperEnv, id: u32, ptr: u64) -> Result<Arc<MapStore>, Trap> {
    let map = map_arg(state, env, id, ptr)?;
    if map.def().map_type != MapType::Ringbuf {
        return Err(fault(state, id, "map is not a ring buffer"));
    }
    Ok(map)
}

fn ringbuf_output(state: &mut VmState, env: &dyn HelperEnv, a: [u64; 5]) -> Result<u64, Trap> {
    let map = ring_map(state, env, RINGBUF_OUTPUT, a[0])?;
    let rb = map.ringbuf().expect("checked ring map");
    if a[2] == 0 || a[2] > rb.size() {
        return Ok(EINVAL as u64);
    }
    let data = state.read_vec(a[1], a[2] as usize)?;
    Ok(match rb.output(&data) {
        Ok(()) => 0,
        Err(e) => errno(e.into()),
    })
}

fn ringbuf_reserve(state: &mut VmState, env: &dyn HelperEnv, a: [u64; 5]) -> Result<u64, Trap> {
    let map = ring_map(state, env, RINGBUF_RESERVE, a[0])?;
    let Ok(len) = u32::try_from(a[1]) else { return Ok(0) };
    let res = match map.ringbuf().expect("checked ring map").reserve(len) {
        Ok(r) => r,
        Err(_) => return Ok(0),
    };
    match state.grant(Grant::Reservation {
        map: map.clone(),
        res,
        live: true,
    }) {
        Some(addr) => Ok(addr),
        None => {
            let _ = map.ringbuf().expect("checked ring map").discard(&res);
            Ok(0)
        }
    }
}

fn ringbuf_commit(state: &mut VmState, a: [u64; 5], discard: bool) -> Result<u64, Trap> {
    let id = if discard { RINGBUF_DISCARD } else { RINGBUF_SUBMIT };
    let pc = state.pc;
    let bad = |reason: &str| Trap::HelperFault {
        pc,
        id,
        reason: reason.to_string(),
    };
    let Some(Grant::Reservation { map, res, live }) = state.grant_at(a[0]) else {
        return Err(bad("argument is not a ring buffer reservation"));
    };
    if !*live {
        return Err(bad("reservation already submitted or discarded"));
    }
    let rb = map.ringbuf().expect("reservation on ring map");
    let r = if discard { rb.discard(res) } else { rb.submit(res) };
    *live = false;
    r.map_err(|e| bad(&e.to_string()))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elf::{EbpfProgramImage, MapDef, ProgType};
    use crate::insn::*;
    use crate::vm::{execute, VmError};

    fn def(name: &str, map_type: MapType, k: u32, v: u32, n: u32) -> MapDef {
        MapDef {
            name: name.into(),
            map_type,
            key_size: k,
            value_size: v,
            max_entries: n,
            btf_key_type_id: None,
            btf_value_type_id: None,
        }
    }

    fn ld_map(dst: u8, handle: i32) -> [Insn; 2] {
        [Insn::new(LD_IMM64, dst, PSEUDO_MAP_FD, 0, handle), Insn::new(0, 0, 0, 0, 0)]
    }

    fn run(insns: Vec<Insn>, reg: &MapRegistry) -> Result<u64, VmError> {
        let img = EbpfProgramImage::new("t", "tracepoint/t", ProgType::Tracepoint, insns);
        execute(&img, &mut [0u8; 8], &ExecEnv::new(reg))
    }

    #[test]
    fn update_then_lookup_returns_value() {
        let reg = MapRegistry::new();
        let h = reg.create(def("m", MapType::Hash, 4, 8, 16)).unwrap();
        let mut p = vec![
            Insn::new(BPF_ST | BPF_MEM | BPF_W, 10, 0, -4, 1),
            Insn::new(BPF_ST | BPF_MEM | BPF_DW, 10, 0, -16, 7),
        ];
        p.extend(ld_map(1, h));
        p.extend([
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_X, 2, 10, 0, 0),
            Insn::new(BPF_ALU64 | BPF_ADD | BPF_K, 2, 0, 0, -4),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_X, 3, 10, 0, 0),
            Insn::new(BPF_ALU64 | BPF_ADD | BPF_K, 3, 0, 0, -16),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 4, 0, 0, 0),
            Insn::new(CALL, 0, 0, 0, MAP_UPDATE_ELEM as i32),
        ]);
        p.extend(ld_map(1, h));
        p.extend([
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_X, 2, 10, 0, 0),
            Insn::new(BPF_ALU64 | BPF_ADD | BPF_K, 2, 0, 0, -4),
            Insn::new(CALL, 0, 0, 0, MAP_LOOKUP_ELEM as i32),
            Insn::new(BPF_JMP | BPF_JEQ | BPF_K, 0, 0, 1, 0),
            Insn::new(BPF_LDX | BPF_MEM | BPF_DW, 0, 0, 0, 0),
            Insn::new(EXIT, 0, 0, 0, 0),
        ]);
        assert_eq!(run(p, &reg), Ok(7));
        let mut out = [0u8; 8];
        reg.get(h).unwrap().lookup(&1u32.to_le_bytes(), &mut out).unwrap();
        assert_eq!(u64::from_le_bytes(out), 7);
    }

    #[test]
    fn reserve_write_submit() {
        let reg = MapRegistry::new();
        let h = reg.create(def("rb", MapType::Ringbuf, 0, 0, 4096)).unwrap();
        let mut p = Vec::new();
        p.extend(ld_map(1, h));
        p.extend([
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 2, 0, 0, 16),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 3, 0, 0, 0),
            Insn::new(CALL, 0, 0, 0, RINGBUF_RESERVE as i32),
            Insn::new(BPF_JMP | BPF_JEQ | BPF_K, 0, 0, 5, 0),
            Insn::new(BPF_ST | BPF_MEM | BPF_DW, 0, 0, 8, 99),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_X, 1, 0, 0, 0),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 2, 0, 0, 0),
            Insn::new(CALL, 0, 0, 0, RINGBUF_SUBMIT as i32),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 0, 0, 0, 1),
            Insn::new(EXIT, 0, 0, 0, 0),
        ]);
        assert_eq!(run(p, &reg), Ok(1));
        let rb = reg.get(h).unwrap();
        let mut got = Vec::new();
        rb.ringbuf().unwrap().consume(|b| {
            got.push(b.to_vec());
            crate::maps::ConsumeAction::Continue
        });
        assert_eq!(got.len(), 1);
        assert_eq!(got[0][8..], 99u64.to_le_bytes());
    }

    #[test]
    fn unsubmitted_reservation_is_discarded() {
        let reg = MapRegistry::new();
        let h = reg.create(def("rb", MapType::Ringbuf, 0, 0, 4096)).unwrap();
        let mut p = Vec::new();
        p.extend(ld_map(1, h));
        p.extend([
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 2, 0, 0, 8),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 3, 0, 0, 0),
            Insn::new(CALL, 0, 0, 0, RINGBUF_RESERVE as i32),
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 0, 0, 0, 0),
            Insn::new(EXIT, 0, 0, 0, 0),
        ]);
        run(p, &reg).unwrap();
        let store = reg.get(h).unwrap();
        let rb = store.ringbuf().unwrap();
        assert!(rb.has_committed());
        assert_eq!(rb.consume(|_| crate::maps::ConsumeAction::Continue), 0);
    }

    #[test]
    fn non_map_pointer_faults() {
        let reg = MapRegistry::new();
        let p = vec![
            Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 1, 0, 0, 5),
            Insn::new(CALL, 0, 0, 0, MAP_LOOKUP_ELEM as i32),
            Insn::new(EXIT, 0, 0, 0, 0),
        ];
        assert!(matches!(run(p, &reg), Err(VmError::Trap(Trap::HelperFault { .. }))));
    }
}
