//! Developer-facing listing of an eBPF object.

use std::fmt::Write;
use std::path::Path;

use serde::Serialize;
use wbpf_core::btf::ext::CoreReloKind;
use wbpf_core::{parse_object, ElfError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProgramInfo {
    pub name: String,
    pub section: String,
    pub prog_type: String,
    pub insns: usize,
    pub map_refs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapInfo {
    pub name: String,
    pub map_type: String,
    pub key_size: u32,
    pub value_size: u32,
    pub max_entries: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReloInfo {
    pub program: String,
    pub insn: u32,
    pub kind: String,
    pub type_name: String,
    pub access: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObjectReport {
    pub license: String,
    pub programs: Vec<ProgramInfo>,
    pub maps: Vec<MapInfo>,
    pub btf_types: Option<usize>,
    pub core_relocations: Vec<ReloInfo>,
}

fn kind_name(k: CoreReloKind) -> String {
    match k {
        CoreReloKind::FieldByteOffset => "field_byte_offset".into(),
        CoreReloKind::FieldExists => "field_exists".into(),
        CoreReloKind::Other(n) => format!("kind_{n}"),
    }
}

pub fn object_report(bytes: &[u8]) -> Result<ObjectReport, ElfError> {
    let obj = parse_object(bytes)?;
    let btf = obj.btf().transpose().map_err(ElfError::Btf)?;
    let mut relos = Vec::new();
    for p in &obj.programs {
        for r in &p.core_relos {
            relos.push(ReloInfo {
                program: p.name.clone(),
                insn: r.insn_off / 8,
                kind: kind_name(r.kind),
                type_name: btf.as_ref().map(|b| b.display_name(r.type_id)).unwrap_or_default(),
                access: r.access_spec.iter().map(u32::to_string).collect::<Vec<_>>().join(":"),
            });
        }
    }
    Ok(ObjectReport {
        license: obj.license.clone(),
        programs: obj
            .programs
            .iter()
            .map(|p| ProgramInfo {
                name: p.name.clone(),
                section: p.section_name.clone(),
                prog_type: p.prog_type.as_str().into(),
                insns: p.insns.len(),
                map_refs: p.map_relocs.iter().map(|(_, m)| m.clone()).collect(),
            })
            .collect(),
        maps: obj
            .map_defs
            .iter()
            .map(|m| MapInfo {
                name: m.name.clone(),
                map_type: m.map_type.as_str().into(),
                key_size: m.key_size,
                value_size: m.value_size,
                max_entries: m.max_entries,
            })
            .collect(),
        btf_types: btf.as_ref().map(|b| b.type_count()),
        core_relocations: relos,
    })
}

pub fn is_elf(path: &Path) -> bool {
    let mut magic = [0u8; 4];
    std::fs::File::open(path)
        .and_then(|mut f| std::io::Read::read_exact(&mut f, &mut magic))
        .is_ok()
        && magic == *b"\x7fELF"
}

impl ObjectReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "license: {}", self.license);
        let _ = writeln!(s, "programs: {}", self.programs.len());
        for p in &self.programs {
            let _ = writeln!(s, "  {} [{}] {} insns={}", p.name, p.section, p.prog_type, p.insns);
            if !p.map_refs.is_empty() {
                let _ = writeln!(s, "    maps: {}", p.map_refs.join(", "));
            }
        }
        let _ = writeln!(s, "maps: {}", self.maps.len());
        for m in &self.maps {
            let _ = writeln!(
                s,
                "  {} {} key={} value={} max_entries={}",
                m.name, m.map_type, m.key_size, m.value_size, m.max_entries
            );
        }
        match self.btf_types {
            Some(n) => {
                let _ = writeln!(s, "btf types: {n}");
            }
            None => {
                let _ = writeln!(s, "btf types: none");
            }
        }
        let _ = writeln!(s, "core relocations: {}", self.core_relocations.len());
        for r in &self.core_relocations {
            let _ = writeln!(
                s,
                "  {} insn {} {} {} access {}",
                r.program, r.insn, r.kind, r.type_name, r.access
            );
        }
        s
    }
}
