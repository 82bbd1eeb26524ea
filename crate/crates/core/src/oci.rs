//! OCI image layout packing for a single Wasm module.
//!
//! On disk: `oci-layout`, `index.json` and `blobs/sha256/<hex>` holding the
//! config, the Wasm layer and the manifest. The same tree can be exported as
//! one deterministic tar file.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const WASM_MAGIC: &[u8; 4] = b"\0asm";
pub const LAYOUT_VERSION: &str = "1.0.0";
pub const MEDIA_INDEX: &str = "application/vnd.oci.image.index.v1+json";
pub const MEDIA_MANIFEST: &str = "application/vnd.oci.image.manifest.v1+json";
pub const MEDIA_CONFIG: &str = "application/vnd.oci.image.config.v1+json";
pub const MEDIA_WASM_LAYER: &str = "application/vnd.wasm.content.layer.v1+wasm";

pub const ANNOTATION_TITLE: &str = "org.opencontainers.image.title";
pub const ANNOTATION_VERSION: &str = "org.opencontainers.image.version";
pub const ANNOTATION_ARCH_INDEPENDENT: &str = "io.wasm-bpf.arch-independent";

/// Minimal container image for the native bootstrap tool, "1.3M" read as MiB.
pub const CONTAINER_BASELINE_BYTES: u64 = 1_363_149;

#[derive(Debug, Error)]
pub enum OciError {
    #[error("input is not a WebAssembly module")]
    NotAWasmModule,
    #[error("I/O error: {0}")]
    IoError(#[from] io::Error),
    #[error("blob {digest} does not match its digest")]
    DigestMismatch { digest: String },
    #[error("blob {digest} is missing")]
    MissingBlob { digest: String },
    #[error("bad index: {0}")]
    BadIndex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OciMetadata {
    pub name: String,
    pub version: String,
    pub annotations: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Descriptor {
    pub media_type: String,
    pub digest: String,
    pub size: u64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub annotations: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct Index {
    schema_version: u32,
    media_type: String,
    manifests: Vec<Descriptor>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct Manifest {
    schema_version: u32,
    media_type: String,
    config: Descriptor,
    layers: Vec<Descriptor>,
    #[serde(default)]
    annotations: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ImageConfig {
    architecture: String,
    os: String,
    rootfs: RootFs,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RootFs {
    #[serde(rename = "type")]
    kind: String,
    diff_ids: Vec<String>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct LayoutMarker {
    image_layout_version: String,
}

pub fn sha256_digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

fn blob_path(digest: &str) -> Option<String> {
    let hex = digest.strip_prefix("sha256:")?;
    (hex.len() == 64 && hex.bytes().all(|b| b.is_ascii_hexdigit() && !b.is_ascii_uppercase()))
        .then(|| format!("blobs/sha256/{hex}"))
}

/// In-memory image layout: relative path -> file bytes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OciLayout {
    pub files: BTreeMap<String, Vec<u8>>,
}

fn to_json<T: Serialize>(v: &T) -> Vec<u8> {
    serde_json::to_vec_pretty(v).expect("serializable")
}

impl OciLayout {
    /// Build the layout for `module`. Output depends only on the inputs.
    pub fn build(module: &[u8], meta: &OciMetadata) -> Result<OciLayout, OciError> {
        if module.len() < 8 || &module[..4] != WASM_MAGIC {
            return Err(OciError::NotAWasmModule);
        }
        let mut files = BTreeMap::new();
        let mut put = |bytes: Vec<u8>, media_type: &str, annotations: BTreeMap<String, String>| {
            let digest = sha256_digest(&bytes);
            let d = Descriptor {
                media_type: media_type.to_string(),
                digest: digest.clone(),
                size: bytes.len() as u64,
                annotations,
            };
            files.insert(blob_path(&digest).expect("sha256 digest"), bytes);
            d
        };

        let layer_digest = sha256_digest(module);
        let config = ImageConfig {
            architecture: "wasm".into(),
            os: "wasip1".into(),
            rootfs: RootFs {
                kind: "layers".into(),
                diff_ids: vec![layer_digest],
            },
        };
        let config = put(to_json(&config), MEDIA_CONFIG, BTreeMap::new());
        let layer_title = BTreeMap::from([(ANNOTATION_TITLE.to_string(), format!("{}.wasm", meta.name))]);
        let layer = put(module.to_vec(), MEDIA_WASM_LAYER, layer_title);

        let mut annotations = meta.annotations.clone();
        annotations.insert(ANNOTATION_TITLE.into(), meta.name.clone());
        annotations.insert(ANNOTATION_VERSION.into(), meta.version.clone());
        annotations.insert(ANNOTATION_ARCH_INDEPENDENT.into(), "true".into());
        let manifest = Manifest {
            schema_version: 2,
            media_type: MEDIA_MANIFEST.into(),
            config,
            layers: vec![layer],
            annotations: annotations.clone(),
        };
        let manifest = put(to_json(&manifest), MEDIA_MANIFEST, annotations);

        let index = Index {
            schema_version: 2,
            media_type: MEDIA_INDEX.into(),
            manifests: vec![manifest],
        };
        files.insert("index.json".into(), to_json(&index));
        files.insert(
            "oci-layout".into(),
            to_json(&serde_json::json!({ "imageLayoutVersion": LAYOUT_VERSION })),
        );
        Ok(OciLayout { files })
    }

    pub fn blob_count(&self) -> usize {
        self.files.keys().filter(|k| k.starts_with("blobs/")).count()
    }

    pub fn total_bytes(&self) -> u64 {
        self.files.values().map(|v| v.len() as u64).sum()
    }

    fn blob(&self, d: &Descriptor) -> Result<&[u8], OciError> {
        let path = blob_path(&d.digest).ok_or_else(|| OciError::BadIndex(format!("unsupported digest {:?}", d.digest)))?;
        let bytes = self.files.get(&path).ok_or_else(|| OciError::MissingBlob {
            digest: d.digest.clone(),
        })?;
        if sha256_digest(bytes) != d.digest || bytes.len() as u64 != d.size {
            return Err(OciError::DigestMismatch {
                digest: d.digest.clone(),
            });
        }
        Ok(bytes)
    }

    fn manifest(&self) -> Result<Manifest, OciError> {
        let marker = self.files.get("oci-layout").ok_or_else(|| OciError::BadIndex("missing oci-layout".into()))?;
        let marker: LayoutMarker =
            serde_json::from_slice(marker).map_err(|e| OciError::BadIndex(format!("oci-layout: {e}")))?;
        if marker.image_layout_version != LAYOUT_VERSION {
            return Err(OciError::BadIndex(format!("layout version {}", marker.image_layout_version)));
        }
        let index = self.files.get("index.json").ok_or_else(|| OciError::BadIndex("missing index.json".into()))?;
        let index: Index = serde_json::from_slice(index).map_err(|e| OciError::BadIndex(format!("index.json: {e}")))?;
        let [desc] = index.manifests.as_slice() else {
            return Err(OciError::BadIndex(format!("expected one manifest, found {}", index.manifests.len())));
        };
        if desc.media_type != MEDIA_MANIFEST {
            return Err(OciError::BadIndex(format!("manifest media type {}", desc.media_type)));
        }
        let manifest: Manifest =
            serde_json::from_slice(self.blob(desc)?).map_err(|e| OciError::BadIndex(format!("manifest: {e}")))?;
        if manifest.layers.len() != 1 {
            return Err(OciError::BadIndex(format!("expected one layer, found {}", manifest.layers.len())));
        }
        Ok(manifest)
    }

    /// Check every descriptor and every stored blob against its digest.
    pub fn validate(&self) -> Result<(), OciError> {
        let manifest = self.manifest()?;
        self.blob(&manifest.config)?;
        let layer = &manifest.layers[0];
        if layer.media_type != MEDIA_WASM_LAYER {
            return Err(OciError::BadIndex(format!("layer media type {}", layer.media_type)));
        }
        self.blob(layer)?;
        for (path, bytes) in &self.files {
            if let Some(hex) = path.strip_prefix("blobs/sha256/") {
                let digest = format!("sha256:{hex}");
                if sha256_digest(bytes) != digest {
                    return Err(OciError::DigestMismatch { digest });
                }
            }
        }
        Ok(())
    }

    /// Validate and return the module bytes and metadata.
    pub fn unpack(&self) -> Result<(Vec<u8>, OciMetadata), OciError> {
        self.validate()?;
        let manifest = self.manifest()?;
        let module = self.blob(&manifest.layers[0])?.to_vec();
        let mut annotations = manifest.annotations;
        let name = annotations.remove(ANNOTATION_TITLE).unwrap_or_default();
        let version = annotations.remove(ANNOTATION_VERSION).unwrap_or_default();
        annotations.remove(ANNOTATION_ARCH_INDEPENDENT);
        Ok((
            module,
            OciMetadata {
                name,
                version,
                annotations,
            },
        ))
    }

    pub fn write_dir(&self, dir: &Path) -> Result<(), OciError> {
        for (rel, bytes) in &self.files {
            let path = dir.join(rel);
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(path, bytes)?;
        }
        Ok(())
    }

    pub fn read_dir(dir: &Path) -> Result<OciLayout, OciError> {
        let mut files = BTreeMap::new();
        for name in ["oci-layout", "index.json"] {
            match fs::read(dir.join(name)) {
                Ok(b) => {
                    files.insert(name.to_string(), b);
                }
                Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                Err(e) => return Err(e.into()),
            }
        }
        let blobs = dir.join("blobs/sha256");
        if blobs.is_dir() {
            for entry in fs::read_dir(&blobs)? {
                let entry = entry?;
                if entry.file_type()?.is_file() {
                    let name = entry.file_name().to_string_lossy().into_owned();
                    files.insert(format!("blobs/sha256/{name}"), fs::read(entry.path())?);
                }
            }
        }
        Ok(OciLayout { files })
    }

    /// Tar with sorted entries, zero timestamps and fixed ownership.
    pub fn to_tar(&self) -> Result<Vec<u8>, OciError> {
        let mut builder = tar::Builder::new(Vec::new());
        builder.mode(tar::HeaderMode::Deterministic);
        for (rel, bytes) in &self.files {
            let mut h = tar::Header::new_ustar();
            h.set_size(bytes.len() as u64);
            h.set_mode(0o644);
            h.set_mtime(0);
            h.set_uid(0);
            h.set_gid(0);
            h.set_entry_type(tar::EntryType::Regular);
            builder.append_data(&mut h, rel, bytes.as_slice())?;
        }
        Ok(builder.into_inner()?)
    }

    pub fn from_tar(bytes: &[u8]) -> Result<OciLayout, OciError> {
        let mut archive = tar::Archive::new(bytes);
        let mut files = BTreeMap::new();
        for entry in archive.entries()? {
            let mut entry = entry?;
            if !entry.header().entry_type().is_file() {
                continue;
            }
            let path = entry.path()?.to_string_lossy().trim_start_matches("./").to_string();
            let mut data = Vec::new();
            entry.read_to_end(&mut data)?;
            files.insert(path, data);
        }
        Ok(OciLayout { files })
    }

    /// Read a layout from a directory or a tar file.
    pub fn open(path: &Path) -> Result<OciLayout, OciError> {
        if path.is_dir() {
            OciLayout::read_dir(path)
        } else {
            OciLayout::from_tar(&fs::read(path)?)
        }
    }
}

/// Write the layout for `module` into `dir`, and into `tar` when given.
pub fn pack(module: &[u8], meta: &OciMetadata, dir: &Path, tar: Option<&Path>) -> Result<OciLayout, OciError> {
    let layout = OciLayout::build(module, meta)?;
    layout.write_dir(dir)?;
    if let Some(tar) = tar {
        fs::write(tar, layout.to_tar()?)?;
    }
    Ok(layout)
}

pub fn unpack(path: &Path) -> Result<(Vec<u8>, OciMetadata), OciError> {
    OciLayout::open(path)?.unpack()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArtifactKind {
    WasmModule,
    OciLayout,
    OciTar,
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeEntry {
    pub name: String,
    pub media_type: Option<String>,
    pub bytes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeReport {
    pub path: PathBuf,
    pub kind: ArtifactKind,
    pub total_bytes: u64,
    pub entries: Vec<SizeEntry>,
    pub baseline_bytes: u64,
    /// total / baseline
    pub ratio_to_baseline: f64,
}

fn media_types(layout: &OciLayout) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    if let Ok(m) = layout.manifest() {
        for d in std::iter::once(&m.config).chain(&m.layers) {
            if let Some(p) = blob_path(&d.digest) {
                out.insert(p, d.media_type.clone());
            }
        }
    }
    if let Some(index) = layout
        .files
        .get("index.json")
        .and_then(|b| serde_json::from_slice::<Index>(b).ok())
    {
        for d in &index.manifests {
            if let Some(p) = blob_path(&d.digest) {
                out.insert(p, d.media_type.clone());
            }
        }
    }
    out
}

fn layout_entries(layout: &OciLayout) -> Vec<SizeEntry> {
    let types = media_types(layout);
    layout
        .files
        .iter()
        .map(|(name, bytes)| SizeEntry {
            name: name.clone(),
            media_type: types.get(name).cloned(),
            bytes: bytes.len() as u64,
        })
        .collect()
}

/// Size breakdown of a Wasm module, layout directory or layout tar.
pub fn inspect(path: &Path) -> Result<SizeReport, OciError> {
    let (kind, total_bytes, entries) = if path.is_dir() {
        let layout = OciLayout::read_dir(path)?;
        (ArtifactKind::OciLayout, layout.total_bytes(), layout_entries(&layout))
    } else {
        let bytes = fs::read(path)?;
        let total = bytes.len() as u64;
        if bytes.starts_with(WASM_MAGIC) {
            let entry = SizeEntry {
                name: path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default(),
                media_type: Some(MEDIA_WASM_LAYER.into()),
                bytes: total,
            };
            (ArtifactKind::WasmModule, total, vec![entry])
        } else {
            match OciLayout::from_tar(&bytes) {
                Ok(layout) if layout.files.contains_key("index.json") => {
                    (ArtifactKind::OciTar, total, layout_entries(&layout))
                }
                _ => (ArtifactKind::Other, total, Vec::new()),
            }
        }
    };
    Ok(SizeReport {
        path: path.to_path_buf(),
        kind,
        total_bytes,
        entries,
        baseline_bytes: CONTAINER_BASELINE_BYTES,
        ratio_to_baseline: total_bytes as f64 / CONTAINER_BASELINE_BYTES as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(n: usize) -> Vec<u8> {
        let mut m = b"\0asm\x01\0\0\0".to_vec();
        m.extend((0..n).map(|i| (i * 31 % 251) as u8));
        m
    }

    fn meta() -> OciMetadata {
        OciMetadata {
            name: "bootstrap".into(),
            version: "0.1.0".into(),
            annotations: BTreeMap::from([("org.example.note".into(), "x".into())]),
        }
    }

    #[test]
    fn three_blobs() {
        let l = OciLayout::build(&module(72 * 1024), &meta()).unwrap();
        assert_eq!(l.blob_count(), 3);
        assert_eq!(l.files.len(), 5);
        l.validate().unwrap();
    }

    #[test]
    fn deterministic() {
        let a = OciLayout::build(&module(100), &meta()).unwrap();
        let b = OciLayout::build(&module(100), &meta()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_tar().unwrap(), b.to_tar().unwrap());
    }

    #[test]
    fn rejects_non_wasm() {
        assert!(matches!(OciLayout::build(b"\x7fELF\x02\x01\x01\0", &meta()), Err(OciError::NotAWasmModule)));
        assert!(matches!(OciLayout::build(b"\0as", &meta()), Err(OciError::NotAWasmModule)));
    }

    #[test]
    fn roundtrip_with_metadata() {
        let m = module(500);
        let l = OciLayout::build(&m, &meta()).unwrap();
        let (out, md) = l.unpack().unwrap();
        assert_eq!(out, m);
        assert_eq!(md, meta());
        let t = OciLayout::from_tar(&l.to_tar().unwrap()).unwrap();
        assert_eq!(t, l);
    }

    #[test]
    fn truncated_blob_names_digest() {
        let m = module(500);
        let mut l = OciLayout::build(&m, &meta()).unwrap();
        let digest = sha256_digest(&m);
        let path = blob_path(&digest).unwrap();
        l.files.get_mut(&path).unwrap().truncate(100);
        match l.unpack() {
            Err(OciError::DigestMismatch { digest: d }) => assert_eq!(d, digest),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_blob() {
        let m = module(10);
        let mut l = OciLayout::build(&m, &meta()).unwrap();
        l.files.remove(&blob_path(&sha256_digest(&m)).unwrap());
        assert!(matches!(l.unpack(), Err(OciError::MissingBlob { .. })));
    }

    #[test]
    fn bad_index() {
        let mut l = OciLayout::build(&module(10), &meta()).unwrap();
        l.files.insert("index.json".into(), b"{".to_vec());
        assert!(matches!(l.validate(), Err(OciError::BadIndex(_))));
        l.files.remove("index.json");
        assert!(matches!(l.validate(), Err(OciError::BadIndex(_))));
    }

    #[test]
    fn digest_path_shape() {
        assert_eq!(blob_path("sha256:abc"), None);
        assert_eq!(blob_path(&format!("sha256:{}", "A".repeat(64))), None);
        assert_eq!(blob_path(&format!("sha256:{}", "../".repeat(21) + "a")), None);
    }
}
