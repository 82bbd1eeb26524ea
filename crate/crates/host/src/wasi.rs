//! The slice of WASI preview1 that guests need: stdout/stderr, exit, clocks,
//! randomness and empty args/environment.

use std::io::Write;

use wasmtime::{Caller, Linker};

use crate::guest;
use crate::runtime::HostState;

pub const MODULE: &str = "wasi_snapshot_preview1";

pub const FUNCTIONS: &[&str] = &[
    "fd_write",
    "proc_exit",
    "clock_time_get",
    "random_get",
    "args_sizes_get",
    "args_get",
    "environ_sizes_get",
    "environ_get",
    "fd_close",
    "fd_seek",
    "fd_fdstat_get",
    "sched_yield",
];

const ESUCCESS: i32 = 0;
const EBADF: i32 = 8;
const EFAULT: i32 = 21;
const EINVAL: i32 = 28;
const ESPIPE: i32 = 70;

/// Raised by `proc_exit` to unwind the guest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GuestExit(pub i32);

impl std::fmt::Display for GuestExit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "guest exited with status {}", self.0)
    }
}

impl std::error::Error for GuestExit {}

/// Guest-visible process state.
pub struct WasiCtx {
    pub args: Vec<String>,
    pub stdout: Box<dyn Write + Send>,
    pub stderr: Box<dyn Write + Send>,
    rng: u64,
}

impl WasiCtx {
    pub fn new(args: Vec<String>, stdout: Box<dyn Write + Send>, stderr: Box<dyn Write + Send>) -> Self {
        WasiCtx {
            args,
            stdout,
            stderr,
            rng: 0x9e37_79b9_7f4a_7c15,
        }
    }

    fn next_random(&mut self) -> u64 {
        // splitmix64; deterministic so runs are reproducible
        self.rng = self.rng.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.rng;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

fn mem<'a>(caller: &'a mut Caller<'_, HostState>) -> Option<(&'a mut [u8], &'a mut HostState)> {
    let memory = caller.data().memory?;
    Some(memory.data_and_store_mut(caller))
}

fn put_u32(mem: &mut [u8], ptr: i32, v: u32) -> Result<(), i32> {
    guest::slice_mut(mem, ptr as u32, 4)
        .map(|s| s.copy_from_slice(&v.to_le_bytes()))
        .map_err(|_| EFAULT)
}

fn fd_write(mut caller: Caller<'_, HostState>, fd: i32, iovs: i32, iovs_len: i32, nwritten: i32) -> i32 {
    let Some((mem, state)) = mem(&mut caller) else { return EFAULT };
    let mut out = Vec::new();
    for i in 0..iovs_len.max(0) as u32 {
        let Ok(iov) = guest::slice(mem, (iovs as u32).wrapping_add(i * 8), 8) else { return EFAULT };
        let ptr = u32::from_le_bytes(iov[..4].try_into().unwrap());
        let len = u32::from_le_bytes(iov[4..].try_into().unwrap());
        match guest::slice(mem, ptr, len as u64) {
            Ok(s) => out.extend_from_slice(s),
            Err(_) => return EFAULT,
        }
    }
    let sink: &mut dyn Write = match fd {
        1 => &mut *state.wasi.stdout,
        2 => &mut *state.wasi.stderr,
        _ => return EBADF,
    };
    if sink.write_all(&out).is_err() {
        return EBADF;
    }
    match put_u32(mem, nwritten, out.len() as u32) {
        Ok(()) => ESUCCESS,
        Err(e) => e,
    }
}

fn write_strings(caller: &mut Caller<'_, HostState>, list: &[String], ptrs: i32, buf: i32) -> i32 {
    let Some((mem, _)) = mem(caller) else { return EFAULT };
    let mut at = buf as u32;
    for (i, s) in list.iter().enumerate() {
        let bytes: Vec<u8> = s.bytes().chain([0]).collect();
        if put_u32(mem, ptrs.wrapping_add(i as i32 * 4), at).is_err() {
            return EFAULT;
        }
        match guest::slice_mut(mem, at, bytes.len() as u64) {
            Ok(d) => d.copy_from_slice(&bytes),
            Err(_) => return EFAULT,
        }
        at += bytes.len() as u32;
    }
    ESUCCESS
}

pub fn add_to_linker(linker: &mut Linker<HostState>) -> wasmtime::Result<()> {
    linker.func_wrap(MODULE, "fd_write", fd_write)?;
    linker.func_wrap(MODULE, "proc_exit", |_: Caller<'_, HostState>, code: i32| -> wasmtime::Result<()> {
        Err(wasmtime::Error::new(GuestExit(code)))
    })?;
    linker.func_wrap(
        MODULE,
        "clock_time_get",
        |mut caller: Caller<'_, HostState>, id: i32, _precision: i64, out: i32| -> i32 {
            let now = match id {
                0 => std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_nanos() as u64)
                    .unwrap_or(0),
                1 => wbpf_core::vm::helpers::monotonic_ns(),
                _ => return EINVAL,
            };
            let Some((mem, _)) = mem(&mut caller) else { return EFAULT };
            match guest::slice_mut(mem, out as u32, 8) {
                Ok(s) => {
                    s.copy_from_slice(&now.to_le_bytes());
                    ESUCCESS
                }
                Err(_) => EFAULT,
            }
        },
    )?;
    linker.func_wrap(MODULE, "random_get", |mut caller: Caller<'_, HostState>, buf: i32, len: i32| -> i32 {
        let Some((mem, state)) = mem(&mut caller) else { return EFAULT };
        let Ok(dst) = guest::slice_mut(mem, buf as u32, len as u32 as u64) else { return EFAULT };
        for chunk in dst.chunks_mut(8) {
            let r = state.wasi.next_random().to_le_bytes();
            chunk.copy_from_slice(&r[..chunk.len()]);
        }
        ESUCCESS
    })?;
    linker.func_wrap(
        MODULE,
        "args_sizes_get",
        |mut caller: Caller<'_, HostState>, count: i32, size: i32| -> i32 {
            let args = &caller.data().wasi.args;
            let n = args.len() as u32;
            let bytes = args.iter().map(|a| a.len() as u32 + 1).sum();
            let Some((mem, _)) = mem(&mut caller) else { return EFAULT };
            match put_u32(mem, count, n).and_then(|_| put_u32(mem, size, bytes)) {
                Ok(()) => ESUCCESS,
                Err(e) => e,
            }
        },
    )?;
    linker.func_wrap(MODULE, "args_get", |mut caller: Caller<'_, HostState>, ptrs: i32, buf: i32| -> i32 {
        let args = caller.data().wasi.args.clone();
        write_strings(&mut caller, &args, ptrs, buf)
    })?;
    linker.func_wrap(
        MODULE,
        "environ_sizes_get",
        |mut caller: Caller<'_, HostState>, count: i32, size: i32| -> i32 {
            let Some((mem, _)) = mem(&mut caller) else { return EFAULT };
            match put_u32(mem, count, 0).and_then(|_| put_u32(mem, size, 0)) {
                Ok(()) => ESUCCESS,
                Err(e) => e,
            }
        },
    )?;
    linker.func_wrap(MODULE, "environ_get", |_: Caller<'_, HostState>, _: i32, _: i32| -> i32 { ESUCCESS })?;
    linker.func_wrap(MODULE, "fd_close", |_: Caller<'_, HostState>, _: i32| -> i32 { EBADF })?;
    linker.func_wrap(
        MODULE,
        "fd_seek",
        |_: Caller<'_, HostState>, _: i32, _: i64, _: i32, _: i32| -> i32 { ESPIPE },
    )?;
    linker.func_wrap(MODULE, "fd_fdstat_get", |mut caller: Caller<'_, HostState>, fd: i32, out: i32| -> i32 {
        if !(0..=2).contains(&fd) {
            return EBADF;
        }
        let Some((mem, _)) = mem(&mut caller) else { return EFAULT };
        let Ok(dst) = guest::slice_mut(mem, out as u32, 24) else { return EFAULT };
        dst.fill(0);
        // filetype character_device; fs_rights_base allows fd_write
        dst[0] = 2;
        dst[8] = 1 << 6;
        ESUCCESS
    })?;
    linker.func_wrap(MODULE, "sched_yield", |_: Caller<'_, HostState>| -> i32 {
        std::thread::yield_now();
        ESUCCESS
    })?;
    Ok(())
}
