#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use wbpf_core::select::EnvironmentProfile;
use wbpf_host::{HostConfig, Instance, WasmBpfRuntime};

pub mod fuzz;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn profile(name: &str) -> EnvironmentProfile {
    let text = std::fs::read_to_string(fixtures().join(format!("profiles/{name}.profile"))).unwrap();
    EnvironmentProfile::parse(&text).unwrap()
}

pub fn object_bytes(name: &str) -> Vec<u8> {
    std::fs::read(fixtures().join(format!("bpf/{name}.bpf.o"))).unwrap()
}

pub fn guest_wasm(name: &str) -> Vec<u8> {
    std::fs::read(fixtures().join(format!("guests/{name}.wasm"))).unwrap()
}

pub fn abi_wasm() -> Vec<u8> {
    wat::parse_file(fixtures().join("guests/src/abi.wat")).unwrap()
}

/// Shared in-memory writer for guest stdout.
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

pub fn config(profile_name: &str) -> HostConfig {
    let mut c = HostConfig::new(profile(profile_name));
    c.pid_tgid = Some(4242 << 32 | 4242);
    c
}

pub fn instance(wasm: &[u8], config: HostConfig) -> (Instance, Capture) {
    let out = Capture::default();
    let rt = WasmBpfRuntime::new().unwrap();
    let inst = rt
        .load(wasm, config, Box::new(out.clone()), Box::new(std::io::sink()))
        .unwrap();
    (inst, out)
}

/// Driver for the ABI wrapper guest. Scratch strings live at 0x100..0x1000,
/// objects are placed at 0x10000.
pub struct Abi {
    pub inst: Instance,
}

pub const OBJ_AT: i32 = 0x10000;
pub const BUF_AT: i32 = 0x1000;

impl Abi {
    pub fn new(profile_name: &str) -> Self {
        Abi::with_config(config(profile_name))
    }

    pub fn with_config(config: HostConfig) -> Self {
        Abi {
            inst: instance(&abi_wasm(), config).0,
        }
    }

    pub fn put(&mut self, at: i32, bytes: &[u8]) {
        self.inst.memory_mut()[at as usize..][..bytes.len()].copy_from_slice(bytes);
    }

    pub fn get(&self, at: i32, len: usize) -> Vec<u8> {
        self.inst.memory()[at as usize..][..len].to_vec()
    }

    /// Write a NUL-terminated string into scratch slot `slot` and return its address.
    pub fn cstr(&mut self, slot: i32, s: &str) -> i32 {
        let at = 0x100 + slot * 0x100;
        let mut b = s.as_bytes().to_vec();
        b.push(0);
        self.put(at, &b);
        at
    }

    pub fn load(&mut self, object: &[u8]) -> u64 {
        self.put(OBJ_AT, object);
        self.inst
            .call::<(i32, i32), i64>("load", (OBJ_AT, object.len() as i32), None)
            .unwrap() as u64
    }

    pub fn close(&mut self, h: u64) -> i32 {
        self.inst.call("close", (h as i64,), None).unwrap()
    }

    pub fn attach(&mut self, h: u64, name: &str, target: &str) -> i32 {
        let n = self.cstr(0, name);
        let t = self.cstr(1, target);
        self.inst.call("attach", (h as i64, n, t), None).unwrap()
    }

    pub fn fd(&mut self, h: u64, name: &str) -> i32 {
        let n = self.cstr(2, name);
        self.inst.call("fd_by_name", (h as i64, n), None).unwrap()
    }

    #[allow(clippy::too_many_arguments)]
    pub fn poll(&mut self, h: u64, fd: i32, func: i32, ctx: i32, data: i32, max: i32, timeout: i32) -> i32 {
        self.inst
            .call("poll", (h as i64, fd, func, ctx, data, max, timeout), None)
            .unwrap()
    }

    pub fn map_op(&mut self, fd: i32, cmd: i32, key: i32, value: i32, next: i32, flags: i64) -> i32 {
        self.inst.call("map_op", (fd, cmd, key, value, next, flags), None).unwrap()
    }

    pub fn counter(&mut self, name: &str) -> i32 {
        self.inst.call::<(), i32>(name, (), None).unwrap()
    }
}
