#![no_main]

//! Drives the six wasm_bpf imports through a guest that re-exports them.

use std::cell::RefCell;

use libfuzzer_sys::arbitrary::{self, Arbitrary};
use libfuzzer_sys::fuzz_target;
use wbpf_core::select::EnvironmentProfile;
use wbpf_host::{HostConfig, Instance, WasmBpfRuntime};

const ABI_WAT: &str = include_str!("../../fixtures/guests/src/abi.wat");
const OBJECTS: [&[u8]; 2] = [
    include_bytes!("../../fixtures/bpf/bootstrap.bpf.o"),
    include_bytes!("../../fixtures/bpf/maps.bpf.o"),
];
const PROFILE: &str = include_str!("../../fixtures/profiles/linux-6.10.profile");

#[derive(Arbitrary, Debug)]
enum Call {
    Write { at: u16, bytes: Vec<u8> },
    LoadFixture { which: bool },
    Load { ptr: i32, size: i32 },
    Close { handle: i64 },
    Attach { handle: i64, name: i32, target: i32 },
    Poll { handle: i64, fd: i32, func: i32, ctx: i32, data: i32, max: i32 },
    FdByName { handle: i64, name: i32 },
    MapOperate { fd: i32, cmd: i32, key: i32, value: i32, next: i32, flags: i64 },
}

fn fresh() -> Instance {
    let rt = WasmBpfRuntime::new().unwrap();
    let wasm = wat::parse_str(ABI_WAT).unwrap();
    let env = EnvironmentProfile::parse(PROFILE).unwrap();
    rt.load(&wasm, HostConfig::new(env), Box::new(std::io::sink()), Box::new(std::io::sink()))
        .unwrap()
}

thread_local! {
    static RT: RefCell<Option<Instance>> = const { RefCell::new(None) };
}

fuzz_target!(|calls: Vec<Call>| {
    RT.with(|slot| {
        let mut slot = slot.borrow_mut();
        let inst = slot.insert(fresh());
        for call in calls.into_iter().take(64) {
            let r: i64 = match call {
                Call::Write { at, bytes } => {
                    let mem = inst.memory_mut();
                    let at = at as usize;
                    let n = bytes.len().min(mem.len() - at);
                    mem[at..at + n].copy_from_slice(&bytes[..n]);
                    0
                }
                Call::LoadFixture { which } => {
                    let obj = OBJECTS[which as usize];
                    inst.memory_mut()[0x10000..0x10000 + obj.len()].copy_from_slice(obj);
                    inst.call::<_, i64>("load", (0x10000, obj.len() as i32), None).unwrap()
                }
                Call::Load { ptr, size } => inst.call::<_, i64>("load", (ptr, size), None).unwrap(),
                Call::Close { handle } => inst.call::<_, i32>("close", (handle,), None).unwrap() as i64,
                Call::Attach { handle, name, target } => {
                    inst.call::<_, i32>("attach", (handle, name, target), None).unwrap() as i64
                }
                Call::Poll { handle, fd, func, ctx, data, max } => {
                    // the trapping callback is allowed to trap
                    match inst.call::<_, i32>("poll", (handle, fd, func, ctx, data, max, 0), None) {
                        Ok(r) => r as i64,
                        Err(_) if func == 2 => 0,
                        Err(e) => panic!("poll: {e}"),
                    }
                }
                Call::FdByName { handle, name } => inst.call::<_, i32>("fd_by_name", (handle, name), None).unwrap() as i64,
                Call::MapOperate { fd, cmd, key, value, next, flags } => {
                    inst.call::<_, i32>("map_op", (fd, cmd, key, value, next, flags), None).unwrap() as i64
                }
            };
            assert!(r >= -8, "undocumented result {r}");
        }
    });
});
