//! The six `wasm_bpf` host functions.

use std::sync::atomic::Ordering;
use std::sync::Arc;
use std::time::{Duration, Instant};

use wasmtime::{Caller, Linker, Memory, Table};
use wbpf_core::maps::ringbuf::Polled;
use wbpf_core::maps::{MapCmd, MapError, MapStore};

use crate::error::{HostError, E_INTERRUPTED, OK};
use crate::guest;
use crate::object::{load_object, Attachment, LoadContext};
use crate::runtime::{AbiCall, HostState};

pub const MODULE: &str = "wasm_bpf";

pub const FUNCTIONS: &[&str] = &[
    "wasm_load_bpf_object",
    "wasm_close_bpf_object",
    "wasm_attach_bpf_program",
    "wasm_bpf_buffer_poll",
    "wasm_bpf_map_fd_by_name",
    "wasm_bpf_map_operate",
];

/// Slice length for blocking polls, so shutdown and deadlines are noticed.
const POLL_SLICE: Duration = Duration::from_millis(20);

fn memory(caller: &Caller<'_, HostState>) -> Result<Memory, HostError> {
    caller.data().memory.ok_or(HostError::NoMemory)
}

fn strings(caller: &mut Caller<'_, HostState>, ptrs: &[i32]) -> Result<Vec<String>, HostError> {
    let mem = memory(caller)?;
    let data = mem.data(&*caller);
    ptrs.iter().map(|&p| guest::read_cstr(data, p as u32)).collect()
}

pub fn load(caller: &mut Caller<'_, HostState>, ptr: i32, size: i32) -> u64 {
    let result = (|| {
        let mem = memory(caller)?;
        let (data, state) = mem.data_and_store_mut(&mut *caller);
        if size == 0 {
            return Err(HostError::EmptyObject);
        }
        let bytes = guest::copy_from_guest(data, ptr as u32, size as u32 as u64, &mut state.copies)?;
        state.ensure_target_btf();
        let cx = LoadContext {
            env: &state.env,
            target_btf: state.target_btf.as_ref(),
            maps: &state.maps,
        };
        let obj = load_object(&bytes, &cx)?;
        state.warnings.extend(obj.warnings.iter().cloned());
        for &h in obj.maps.values() {
            let store = state.maps.get(h);
            state.set_map(h, store);
        }
        Ok(state.handles.insert(obj))
    })();
    match result {
        Ok(h) => h,
        Err(e) => {
            caller.data_mut().fail(e);
            0
        }
    }
}

pub fn close(state: &mut HostState, handle: u64) -> i32 {
    match state.handles.remove(handle) {
        Some(obj) => {
            state.hub.detach_object(handle);
            for &h in obj.maps.values() {
                state.maps.remove(h);
                state.set_map(h, None);
            }
            OK
        }
        None => state.fail(HostError::BadHandle(handle)),
    }
}

pub fn attach(caller: &mut Caller<'_, HostState>, handle: u64, name_ptr: i32, target_ptr: i32) -> i32 {
    let result = (|| {
        if caller.data().handles.get(handle).is_none() {
            return Err(HostError::BadHandle(handle));
        }
        let s = strings(caller, &[name_ptr, target_ptr])?;
        let (name, target) = (&s[0], &s[1]);
        let state = caller.data_mut();
        let hub = state.hub.clone();
        let obj = state.handles.get_mut(handle).ok_or(HostError::BadHandle(handle))?;
        let prog = obj.programs.get(name).ok_or_else(|| HostError::NoSuchProgram(name.clone()))?;
        let verified = match &prog.program {
            Ok(p) => p.clone(),
            Err(report) => return Err(HostError::UnsupportedAttachType(report.to_string())),
        };
        let target = if target.is_empty() { prog.section_name.clone() } else { target.clone() };
        let link_id = obj.next_link;
        obj.next_link += 1;
        let active = hub.attach(&target, handle, link_id, verified);
        obj.links.push(Attachment {
            link_id,
            program: name.clone(),
            target,
            active,
        });
        Ok(link_id)
    })();
    result.unwrap_or_else(|e| caller.data_mut().fail(e))
}

pub fn map_fd_by_name(caller: &mut Caller<'_, HostState>, handle: u64, name_ptr: i32) -> i32 {
    let result = (|| {
        if caller.data().handles.get(handle).is_none() {
            return Err(HostError::BadHandle(handle));
        }
        let name = strings(caller, &[name_ptr])?.remove(0);
        let obj = caller.data().handles.get(handle).ok_or(HostError::BadHandle(handle))?;
        obj.maps.get(&name).copied().ok_or(HostError::NoSuchMap(name))
    })();
    result.unwrap_or_else(|e| caller.data_mut().fail(e))
}

type Callback = wasmtime::TypedFunc<(i32, i32, i32), i32>;

fn poll_setup(
    caller: &mut Caller<'_, HostState>,
    handle: u64,
    map_fd: i32,
    sample_func: i32,
    data_ptr: i32,
    max_size: i32,
) -> Result<(Arc<MapStore>, Memory, Callback), HostError> {
    let state = caller.data();
    let obj = state.handles.get(handle).ok_or(HostError::BadHandle(handle))?;
    if !obj.maps.values().any(|&h| h == map_fd) {
        return Err(HostError::NotARingbuf(map_fd));
    }
    let store = state.map(map_fd).cloned().ok_or(HostError::NotARingbuf(map_fd))?;
    if store.ringbuf().is_none() {
        return Err(HostError::NotARingbuf(map_fd));
    }
    let mem = memory(caller)?;
    guest::check_range(mem.data_size(&*caller), data_ptr as u32, max_size as u32 as u64)?;
    let bad = HostError::BadCallback(sample_func as u32);
    let table: Table = caller.data().table.ok_or(bad.clone())?;
    let func = table
        .get(&mut *caller, sample_func as u32 as u64)
        .and_then(|r| r.as_func().flatten().cloned())
        .ok_or(bad.clone())?
        .typed::<(i32, i32, i32), i32>(&*caller)
        .map_err(|_| bad)?;
    Ok((store, mem, func))
}

/// Deliver pending records. The outer error is a trap from the guest
/// callback; the inner one is an ABI error code.
#[allow(clippy::too_many_arguments)]
pub fn poll(
    caller: &mut Caller<'_, HostState>,
    handle: u64,
    map_fd: i32,
    sample_func: i32,
    ctx: i32,
    data_ptr: i32,
    max_size: i32,
    timeout_ms: i32,
) -> wasmtime::Result<Result<i32, HostError>> {
    let (store, mem, func) = match poll_setup(caller, handle, map_fd, sample_func, data_ptr, max_size) {
        Ok(s) => s,
        Err(e) => return Ok(Err(e)),
    };
    let max = max_size as u32;
    wait_for_records(caller, &store, timeout_ms);
    let ring = store.ringbuf().expect("checked in setup");
    let mut delivered = 0;
    loop {
        let (data, state) = mem.data_and_store_mut(&mut *caller);
        let polled = ring.poll_one(|payload| {
            if payload.len() > max as usize {
                return Err(payload.len());
            }
            // the one copy: ring storage straight into guest memory
            payload.copy_to(&mut data[data_ptr as u32 as usize..][..payload.len()]);
            state.copies.note_into_guest(payload.len());
            Ok(payload.len())
        });
        let len = match polled {
            Polled::Empty => break,
            Polled::Record(Err(len)) => {
                state.dropped_records += 1;
                state.last_error = Some(HostError::RecordTooLarge { len, max });
                log::warn!("ring record of {len} bytes dropped; guest buffer holds {max}");
                continue;
            }
            Polled::Record(Ok(len)) => len,
        };
        delivered += 1;
        if func.call(&mut *caller, (ctx, data_ptr, len as i32))? != 0 {
            break;
        }
    }
    if delivered == 0 && caller.data().shutdown.load(Ordering::Acquire) {
        return Ok(Ok(E_INTERRUPTED));
    }
    Ok(Ok(delivered))
}

fn wait_for_records(caller: &Caller<'_, HostState>, store: &MapStore, timeout_ms: i32) {
    let ring = store.ringbuf().expect("ring buffer");
    if timeout_ms == 0 || ring.has_committed() {
        return;
    }
    let state = caller.data();
    let wanted = (timeout_ms > 0).then(|| Instant::now() + Duration::from_millis(timeout_ms as u64));
    let limit = match (wanted, state.deadline) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    loop {
        if state.shutdown.load(Ordering::Acquire) {
            return;
        }
        let slice = match limit {
            Some(l) => {
                let now = Instant::now();
                if now >= l {
                    return;
                }
                (l - now).min(POLL_SLICE)
            }
            None => POLL_SLICE,
        };
        if ring.wait(slice) {
            return;
        }
    }
}

pub fn map_operate(
    caller: &mut Caller<'_, HostState>,
    map_fd: i32,
    cmd: i32,
    key_ptr: i32,
    value_ptr: i32,
    next_key_ptr: i32,
    flags: i64,
) -> Result<(), HostError> {
    let cmd = MapCmd::from_i32(cmd)?;
    let mem = memory(caller)?;
    let (data, state) = mem.data_and_store_mut(&mut *caller);
    // field borrow, so the copy counters stay writable
    let map = map_slot(&state.map_table, map_fd).ok_or(MapError::BadHandle(map_fd))?;
    let key_size = map.def().key_size as u64;
    let value_size = map.def().value_size as u64;
    let key_range = guest::check_range(data.len(), key_ptr as u32, key_size);
    match cmd {
        MapCmd::Lookup => {
            let kr = key_range?;
            let vr = guest::check_range(data.len(), value_ptr as u32, value_size)?;
            // key and value may overlap in guest memory, so the key is copied first
            let mut small = [0u8; 64];
            let heap;
            let key: &[u8] = if kr.len() <= small.len() {
                small[..kr.len()].copy_from_slice(&data[kr.clone()]);
                &small[..kr.len()]
            } else {
                heap = data[kr].to_vec();
                &heap
            };
            map.lookup(key, &mut data[vr])?;
            state.copies.note_into_guest(value_size as usize);
        }
        MapCmd::Update => {
            let kr = key_range?;
            let vr = guest::check_range(data.len(), value_ptr as u32, value_size)?;
            map.update(&data[kr], &data[vr], flags as u64)?;
            state.copies.note_from_guest(value_size as usize);
        }
        MapCmd::Delete => {
            map.delete(&data[key_range?])?;
        }
        MapCmd::GetNextKey => {
            let nr = guest::check_range(data.len(), next_key_ptr as u32, key_size)?;
            let key = if key_ptr == 0 { None } else { Some(data[key_range?].to_vec()) };
            map.get_next_key(key.as_deref(), &mut data[nr])?;
            state.copies.note_into_guest(key_size as usize);
        }
    }
    Ok(())
}

pub(crate) fn map_slot(table: &[Option<Arc<MapStore>>], handle: i32) -> Option<&Arc<MapStore>> {
    table.get(usize::try_from(handle).ok()?)?.as_ref()
}

fn code_of(state: &mut HostState, r: Result<(), HostError>) -> i32 {
    match r {
        Ok(()) => OK,
        Err(e) => state.fail(e),
    }
}

pub fn add_to_linker(linker: &mut Linker<HostState>) -> wasmtime::Result<()> {
    linker.func_wrap(MODULE, "wasm_load_bpf_object", |mut c: Caller<'_, HostState>, ptr: i32, size: i32| -> i64 {
        let h = load(&mut c, ptr, size);
        c.data_mut().record(AbiCall::new("wasm_load_bpf_object", &[ptr as i64, size as i64], h as i64));
        h as i64
    })?;
    linker.func_wrap(MODULE, "wasm_close_bpf_object", |mut c: Caller<'_, HostState>, handle: i64| -> i32 {
        let state = c.data_mut();
        let r = close(state, handle as u64);
        state.record(AbiCall::new("wasm_close_bpf_object", &[handle], r as i64));
        r
    })?;
    linker.func_wrap(
        MODULE,
        "wasm_attach_bpf_program",
        |mut c: Caller<'_, HostState>, handle: i64, name: i32, target: i32| -> i32 {
            let r = attach(&mut c, handle as u64, name, target);
            c.data_mut().record(AbiCall::new(
                "wasm_attach_bpf_program",
                &[handle, name as i64, target as i64],
                r as i64,
            ));
            r
        },
    )?;
    linker.func_wrap(
        MODULE,
        "wasm_bpf_buffer_poll",
        |mut c: Caller<'_, HostState>,
         handle: i64,
         fd: i32,
         func: i32,
         ctx: i32,
         data: i32,
         max: i32,
         timeout: i32|
         -> wasmtime::Result<i32> {
            let args = [handle, fd as i64, func as i64, ctx as i64, data as i64, max as i64, timeout as i64];
            let r = match poll(&mut c, handle as u64, fd, func, ctx, data, max, timeout) {
                Ok(Ok(n)) => n,
                Ok(Err(e)) => c.data_mut().fail(e),
                Err(trap) => {
                    c.data_mut().record(AbiCall::new("wasm_bpf_buffer_poll", &args, i64::MIN));
                    return Err(trap);
                }
            };
            c.data_mut().record(AbiCall::new("wasm_bpf_buffer_poll", &args, r as i64));
            Ok(r)
        },
    )?;
    linker.func_wrap(
        MODULE,
        "wasm_bpf_map_fd_by_name",
        |mut c: Caller<'_, HostState>, handle: i64, name: i32| -> i32 {
            let r = map_fd_by_name(&mut c, handle as u64, name);
            c.data_mut().record(AbiCall::new("wasm_bpf_map_fd_by_name", &[handle, name as i64], r as i64));
            r
        },
    )?;
    linker.func_wrap(
        MODULE,
        "wasm_bpf_map_operate",
        |mut c: Caller<'_, HostState>, fd: i32, cmd: i32, key: i32, value: i32, next: i32, flags: i64| -> i32 {
            let r = map_operate(&mut c, fd, cmd, key, value, next, flags);
            let state = c.data_mut();
            let code = code_of(state, r);
            state.record(AbiCall::new(
                "wasm_bpf_map_operate",
                &[fd as i64, cmd as i64, key as i64, value as i64, next as i64, flags],
                code as i64,
            ));
            code
        },
    )?;
    Ok(())
}
