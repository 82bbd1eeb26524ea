#![no_main]

use libfuzzer_sys::fuzz_target;
use wbpf_core::btf::{parse_btf, parse_btf_ext};

// Input: u16 BTF length, BTF blob, then the .BTF.ext blob.
fuzz_target!(|data: &[u8]| {
    if data.len() < 2 {
        return;
    }
    let n = u16::from_le_bytes([data[0], data[1]]) as usize;
    let rest = &data[2..];
    let (btf, ext) = rest.split_at(n.min(rest.len()));
    if let Ok(graph) = parse_btf(btf) {
        let _ = parse_btf_ext(ext, &graph);
    }
});
