//! Host side of the `wasm_bpf` ABI: a Wasm runtime whose guests load eBPF
//! objects, attach their programs to synthetic event sources, poll ring
//! buffers and operate on maps.

pub mod abi;
pub mod error;
pub mod events;
pub mod guest;
pub mod object;
pub mod runtime;
pub mod script;
pub mod wasi;

pub use error::HostError;
pub use events::{EventHub, HubStats};
pub use runtime::{AbiCall, HostConfig, HostState, Instance, RunError, WasmBpfRuntime};
