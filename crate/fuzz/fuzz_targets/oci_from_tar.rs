#![no_main]

use libfuzzer_sys::fuzz_target;
use wbpf_core::oci::OciLayout;

fuzz_target!(|data: &[u8]| {
    if let Ok(layout) = OciLayout::from_tar(data) {
        let _ = layout.validate();
        let _ = layout.unpack();
    }
});
