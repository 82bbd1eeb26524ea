#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(obj) = wbpf_core::parse_object(data) {
        // exercise the lazily parsed sections too
        if let Some(Ok(btf)) = obj.btf() {
            let _ = btf.type_count();
        }
        for p in &obj.programs {
            let _ = p.insns.len();
        }
    }
});
