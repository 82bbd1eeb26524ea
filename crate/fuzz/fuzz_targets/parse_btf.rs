#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(graph) = wbpf_core::btf::parse_btf(data) {
        // resolution must terminate even on cyclic type chains
        let ids: Vec<_> = graph.types().map(|(id, _)| id).collect();
        for id in ids {
            let _ = graph.size_of(id);
            let _ = graph.display_name(id);
        }
    }
});
