use std::collections::BTreeMap;

use proptest::prelude::*;
use wbpf_core::oci::*;

fn meta() -> OciMetadata {
    OciMetadata {
        name: "app".into(),
        version: "1.0".into(),
        annotations: BTreeMap::new(),
    }
}

proptest! {
    #[test]
    fn roundtrip_is_identity(body in proptest::collection::vec(any::<u8>(), 4..4096)) {
        let mut module = WASM_MAGIC.to_vec();
        module.extend(body);
        let layout = OciLayout::build(&module, &meta()).unwrap();
        let (out, md) = layout.unpack().unwrap();
        prop_assert_eq!(out, module);
        prop_assert_eq!(md, meta());
    }

    #[test]
    fn any_blob_bit_flip_is_detected(which in 0usize..3, bit in any::<prop::sample::Index>()) {
        let mut module = WASM_MAGIC.to_vec();
        module.extend(b"\x01\0\0\0 some module body".iter());
        let mut layout = OciLayout::build(&module, &meta()).unwrap();
        let path = layout.files.keys().filter(|k| k.starts_with("blobs/")).nth(which).unwrap().clone();
        let blob = layout.files.get_mut(&path).unwrap();
        let i = bit.index(blob.len() * 8);
        blob[i / 8] ^= 1 << (i % 8);
        prop_assert!(layout.validate().is_err());
    }
}

#[test]
fn directory_and_tar_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let tar = dir.path().join("image.tar");
    let module = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/bpf/maps.bpf.o")).unwrap();
    assert!(matches!(pack(&module, &meta(), &dir.path().join("x"), None), Err(OciError::NotAWasmModule)));

    let mut module = WASM_MAGIC.to_vec();
    module.extend([1, 0, 0, 0]);
    module.extend(vec![7u8; 72 * 1024]);
    let layout_dir = dir.path().join("layout");
    let layout = pack(&module, &meta(), &layout_dir, Some(&tar)).unwrap();
    assert_eq!(unpack(&layout_dir).unwrap().0, module);
    assert_eq!(unpack(&tar).unwrap().0, module);

    let report = inspect(&layout_dir).unwrap();
    assert_eq!(report.kind, ArtifactKind::OciLayout);
    assert_eq!(report.total_bytes, layout.total_bytes());
    assert_eq!(report.entries.len(), 5);
    let layer = report.entries.iter().find(|e| e.media_type.as_deref() == Some(MEDIA_WASM_LAYER)).unwrap();
    assert_eq!(layer.bytes, module.len() as u64);
    assert_eq!(inspect(&tar).unwrap().kind, ArtifactKind::OciTar);

    let wasm = dir.path().join("m.wasm");
    std::fs::write(&wasm, &module).unwrap();
    let r = inspect(&wasm).unwrap();
    assert_eq!(r.total_bytes, module.len() as u64);
    assert!(r.ratio_to_baseline < 0.2);

    // blob truncated on disk
    let blob = layout_dir.join("blobs/sha256").join(&sha256_digest(&module)["sha256:".len()..]);
    std::fs::write(&blob, &module[..100]).unwrap();
    match unpack(&layout_dir) {
        Err(OciError::DigestMismatch { digest }) => assert_eq!(digest, sha256_digest(&module)),
        other => panic!("{other:?}"),
    }
    std::fs::remove_file(&blob).unwrap();
    assert!(matches!(unpack(&layout_dir), Err(OciError::MissingBlob { .. })));
}
