//! Loaded eBPF objects and the handle table that names them.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use wbpf_core::btf::ptregs::ptregs_accesses_from_core;
use wbpf_core::btf::{apply_core_relocations, relocate_ptregs, ArchName, ArchProfile, BtfTypeGraph};
use wbpf_core::maps::MapRegistry;
use wbpf_core::select::{compiled_arch, select_loadable, BackendDescriptor, EnvironmentProfile, UnsupportedReport};
use wbpf_core::vm::VerifiedProgram;
use wbpf_core::{bind_maps, parse_object, ElfError, ProgType};

use crate::error::HostError;

/// A program of a loaded object. Programs the environment cannot run are
/// kept with their report so attaching them fails with a clear reason.
#[derive(Debug, Clone)]
pub struct LoadedProgram {
    pub section_name: String,
    pub prog_type: ProgType,
    pub program: Result<Arc<VerifiedProgram>, UnsupportedReport>,
}

#[derive(Debug, Clone)]
pub struct Attachment {
    pub link_id: i32,
    pub program: String,
    pub target: String,
    pub(crate) active: Arc<AtomicBool>,
}

impl Attachment {
    pub fn is_active(&self) -> bool {
        self.active.load(Ordering::Acquire)
    }
}

#[derive(Debug)]
pub struct LoadedObject {
    pub programs: BTreeMap<String, LoadedProgram>,
    /// Map name to registry handle.
    pub maps: BTreeMap<String, i32>,
    pub links: Vec<Attachment>,
    pub backend: BackendDescriptor,
    pub warnings: Vec<String>,
    pub(crate) next_link: i32,
}

/// Live objects keyed by handle. Handles start at 1 and are never reused.
#[derive(Debug)]
pub struct HandleTable {
    objects: BTreeMap<u64, LoadedObject>,
    next_handle: u64,
}

impl Default for HandleTable {
    fn default() -> Self {
        HandleTable {
            objects: BTreeMap::new(),
            next_handle: 1,
        }
    }
}

impl HandleTable {
    pub fn insert(&mut self, obj: LoadedObject) -> u64 {
        let h = self.next_handle;
        self.next_handle += 1;
        self.objects.insert(h, obj);
        h
    }

    pub fn get(&self, handle: u64) -> Option<&LoadedObject> {
        self.objects.get(&handle)
    }

    pub fn get_mut(&mut self, handle: u64) -> Option<&mut LoadedObject> {
        self.objects.get_mut(&handle)
    }

    pub fn remove(&mut self, handle: u64) -> Option<LoadedObject> {
        self.objects.remove(&handle)
    }

    pub fn handles(&self) -> impl Iterator<Item = u64> + '_ {
        self.objects.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }
}

/// What the loader needs from its instance.
pub struct LoadContext<'a> {
    pub env: &'a EnvironmentProfile,
    pub target_btf: Option<&'a BtfTypeGraph>,
    pub maps: &'a MapRegistry,
}

/// parse -> select -> create maps -> bind -> register-frame pass -> CO-RE ->
/// verify. On failure every map created so far is released.
pub fn load_object(bytes: &[u8], cx: &LoadContext<'_>) -> Result<LoadedObject, HostError> {
    if bytes.is_empty() {
        return Err(HostError::EmptyObject);
    }
    let obj = parse_object(bytes)?;
    let (backend, verdicts) = select_loadable(&obj, cx.env).map_err(HostError::Unsupported)?;

    let mut created: HashMap<String, i32> = HashMap::new();
    let release = |created: &HashMap<String, i32>| {
        for h in created.values() {
            cx.maps.remove(*h);
        }
    };
    for def in &obj.map_defs {
        match cx.maps.create(def.clone()) {
            Ok(h) => {
                created.insert(def.name.clone(), h);
            }
            Err(e) => {
                release(&created);
                return Err(e.into());
            }
        }
    }

    let result = (|| {
        let images = bind_maps(&obj, &created)?;
        let mut warnings = Vec::new();
        let local = match obj.btf() {
            Some(r) => Some(r.map_err(|e| HostError::Elf(ElfError::Btf(e)))?),
            None => None,
        };
        let from_arch = compiled_arch(&obj).unwrap_or(ArchName::X86_64);
        let from = ArchProfile::builtin(from_arch);
        let to = ArchProfile::builtin(cx.env.arch);

        let mut programs = BTreeMap::new();
        for ((blob, image), verdict) in obj.programs.iter().zip(images).zip(&verdicts) {
            let program = match &verdict.result {
                Err(report) => {
                    warnings.push(format!("program {} not loadable: {}", blob.name, report.rule));
                    Err(report.clone())
                }
                Ok(_) => {
                    let mut image = image;
                    if let (Some(local), false) = (&local, blob.core_relos.is_empty()) {
                        let (frame, rest) = ptregs_accesses_from_core(&image, &blob.core_relos, local, &from)?;
                        if !frame.is_empty() && from.name != to.name {
                            image = relocate_ptregs(&image, &frame, &from, &to)?;
                        }
                        if !rest.is_empty() {
                            let target = match cx.target_btf {
                                Some(t) => t,
                                None => {
                                    warnings.push(format!(
                                        "program {}: no target BTF, relocating against the object's own types",
                                        blob.name
                                    ));
                                    local
                                }
                            };
                            image = apply_core_relocations(&image, &rest, local, target)?;
                        }
                    }
                    image.arch = Some(cx.env.arch);
                    let verified = VerifiedProgram::new(image).map_err(|error| HostError::Verify {
                        program: blob.name.clone(),
                        error,
                    })?;
                    Ok(Arc::new(verified))
                }
            };
            programs.insert(
                blob.name.clone(),
                LoadedProgram {
                    section_name: blob.section_name.clone(),
                    prog_type: blob.prog_type,
                    program,
                },
            );
        }
        for w in &warnings {
            log::warn!("{w}");
        }
        Ok(LoadedObject {
            programs,
            maps: created.iter().map(|(k, v)| (k.clone(), *v)).collect(),
            links: Vec::new(),
            backend,
            warnings,
            next_link: 0,
        })
    })();
    if result.is_err() {
        release(&created);
    }
    result
}
