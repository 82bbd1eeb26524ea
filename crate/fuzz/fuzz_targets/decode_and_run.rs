#![no_main]

use libfuzzer_sys::fuzz_target;
use wbpf_core::maps::MapRegistry;
use wbpf_core::vm::helpers::ExecEnv;
use wbpf_core::vm::{run, ExecOptions, VerifiedProgram};
use wbpf_core::{decode_instructions, EbpfProgramImage, ProgType};

// Anything that decodes and verifies must run to an exit or a VM error
// within the instruction budget.
fuzz_target!(|data: &[u8]| {
    let Ok(insns) = decode_instructions(data) else { return };
    let image = EbpfProgramImage::new("fuzz", "socket", ProgType::SocketFilter, insns);
    let Ok(prog) = VerifiedProgram::new(image) else { return };
    let maps = MapRegistry::new();
    let mut ctx = [0u8; 64];
    if let Ok(out) = run(&prog, &mut ctx, &ExecEnv::new(&maps), &ExecOptions::default()) {
        assert!(out.guards_intact);
    }
});
