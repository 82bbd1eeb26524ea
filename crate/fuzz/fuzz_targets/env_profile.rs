#![no_main]

use libfuzzer_sys::fuzz_target;
use wbpf_core::select::EnvironmentProfile;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = EnvironmentProfile::parse(text) {
            let _ = p.validate();
        }
    }
});
