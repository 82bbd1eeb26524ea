//! Relocatable eBPF ELF objects: programs, BTF-defined maps, BTF blobs and
//! map relocations.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::btf::{self, parse_btf, parse_btf_ext, ArchName, BtfKind, BtfTypeGraph, CoreRelo, TypeId};
use crate::insn::{decode_instructions_with, DecodeError, Insn, EXIT, INSN_SIZE, PSEUDO_MAP_FD};
use crate::Endianness;

pub const EM_BPF: u16 = 247;

const SHT_PROGBITS: u32 = 1;
const SHT_SYMTAB: u32 = 2;
const SHT_REL: u32 = 9;
const SHF_EXECINSTR: u64 = 0x4;
const STT_OBJECT: u8 = 1;
const STT_FUNC: u8 = 2;
const STT_SECTION: u8 = 3;
const SHN_UNDEF: u16 = 0;
const SHN_LORESERVE: u16 = 0xff00;
const R_BPF_64_64: u32 = 1;
const R_BPF_64_32: u32 = 10;

const BPF_MAP_TYPE_HASH: u32 = 1;
const BPF_MAP_TYPE_ARRAY: u32 = 2;
const BPF_MAP_TYPE_PERF_EVENT_ARRAY: u32 = 4;
const BPF_MAP_TYPE_RINGBUF: u32 = 27;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElfError {
    #[error("not an ELF file")]
    NotElf,
    #[error("ELF machine {0} is not eBPF ({EM_BPF})")]
    WrongMachine(u16),
    #[error("malformed section: {0}")]
    MalformedSection(String),
    #[error("no recognized program section")]
    NoPrograms,
    #[error("legacy `maps` section is not supported; use BTF-defined maps in `.maps`")]
    LegacyMaps,
    #[error("program {program} references global data in {section}")]
    GlobalData { program: String, section: String },
    #[error("program {program} uses bpf-to-bpf calls, which are not supported")]
    BpfToBpfCall { program: String },
    #[error("map {name}: unsupported map type {map_type}")]
    UnsupportedMapType { name: String, map_type: u32 },
    #[error("map {name}: {reason}")]
    InvalidMapDef { name: String, reason: String },
    #[error("BTF: {0}")]
    Btf(#[from] btf::BtfError),
    #[error(".BTF.ext: {0}")]
    BtfExt(#[from] btf::ExtError),
    #[error("program {program}: {source}")]
    Decode { program: String, source: DecodeError },
    #[error("map {0:?} is referenced but has no assigned handle")]
    UnboundMap(String),
    #[error("big-endian objects are not supported by the interpreter")]
    BigEndian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProgType {
    Kprobe,
    Uprobe,
    Tracepoint,
    Xdp,
    Sockops,
    Lsm,
    SocketFilter,
}

/// Section prefix table. Exact names (`xdp`, `sockops`) match with or
/// without a `/suffix`.
const SECTION_PREFIXES: &[(&str, ProgType)] = &[
    ("kprobe", ProgType::Kprobe),
    ("kretprobe", ProgType::Kprobe),
    ("uprobe", ProgType::Uprobe),
    ("uretprobe", ProgType::Uprobe),
    ("tracepoint", ProgType::Tracepoint),
    ("tp", ProgType::Tracepoint),
    ("xdp", ProgType::Xdp),
    ("sockops", ProgType::Sockops),
    ("lsm", ProgType::Lsm),
    ("socket", ProgType::SocketFilter),
];

impl ProgType {
    pub const ALL: [ProgType; 7] = [
        ProgType::Kprobe,
        ProgType::Uprobe,
        ProgType::Tracepoint,
        ProgType::Xdp,
        ProgType::Sockops,
        ProgType::Lsm,
        ProgType::SocketFilter,
    ];

    pub fn from_section(section: &str) -> Option<ProgType> {
        let head = section.split('/').next().unwrap_or(section);
        SECTION_PREFIXES
            .iter()
            .find(|(p, _)| *p == head)
            .map(|(_, t)| *t)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ProgType::Kprobe => "kprobe",
            ProgType::Uprobe => "uprobe",
            ProgType::Tracepoint => "tracepoint",
            ProgType::Xdp => "xdp",
            ProgType::Sockops => "sockops",
            ProgType::Lsm => "lsm",
            ProgType::SocketFilter => "socket_filter",
        }
    }

    /// Whether programs of this type may write their context.
    pub fn ctx_writable(&self) -> bool {
        matches!(self, ProgType::Xdp | ProgType::Sockops | ProgType::SocketFilter)
    }
}

impl fmt::Display for ProgType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapType {
    Hash,
    Array,
    Ringbuf,
    PerfEventArray,
}

impl MapType {
    pub fn from_code(code: u32) -> Option<MapType> {
        match code {
            BPF_MAP_TYPE_HASH => Some(MapType::Hash),
            BPF_MAP_TYPE_ARRAY => Some(MapType::Array),
            BPF_MAP_TYPE_RINGBUF => Some(MapType::Ringbuf),
            BPF_MAP_TYPE_PERF_EVENT_ARRAY => Some(MapType::PerfEventArray),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            MapType::Hash => "hash",
            MapType::Array => "array",
            MapType::Ringbuf => "ringbuf",
            MapType::PerfEventArray => "perf_event_array",
        }
    }
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapDef {
    pub name: String,
    pub map_type: MapType,
    pub key_size: u32,
    pub value_size: u32,
    pub max_entries: u32,
    pub btf_key_type_id: Option<TypeId>,
    pub btf_value_type_id: Option<TypeId>,
}

impl MapDef {
    pub fn validate(&self) -> Result<(), ElfError> {
        let bad = |reason: &str| {
            Err(ElfError::InvalidMapDef {
                name: self.name.clone(),
                reason: reason.to_string(),
            })
        };
        match self.map_type {
            MapType::Ringbuf => {
                if self.key_size != 0 || self.value_size != 0 {
                    return bad("ringbuf maps must have key_size = 0 and value_size = 0");
                }
                if !self.max_entries.is_power_of_two() || self.max_entries < 16 {
                    return bad("ringbuf max_entries must be a power of two of at least 16");
                }
            }
            MapType::Array => {
                if self.key_size != 4 {
                    return bad("array maps must have key_size = 4");
                }
                if self.value_size == 0 || self.max_entries == 0 {
                    return bad("array maps need a value size and at least one entry");
                }
            }
            MapType::Hash => {
                if self.key_size == 0 || self.value_size == 0 || self.max_entries == 0 {
                    return bad("hash maps need key_size, value_size and max_entries");
                }
            }
            MapType::PerfEventArray => {}
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgramBlob {
    pub name: String,
    pub section_name: String,
    /// Byte offset of the program inside its section.
    pub section_offset: u64,
    pub insns: Vec<Insn>,
    pub prog_type: ProgType,
    /// `(insn_index, map_name)` for each LD_IMM64 map reference.
    pub map_relocs: Vec<(usize, String)>,
    /// CO-RE relocations with `insn_off` relative to this program.
    pub core_relos: Vec<CoreRelo>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElfBpfObject {
    pub programs: Vec<ProgramBlob>,
    pub map_defs: Vec<MapDef>,
    pub btf_blob: Option<Vec<u8>>,
    pub btf_ext_blob: Option<Vec<u8>>,
    pub license: String,
    pub endianness: Endianness,
}

impl ElfBpfObject {
    pub fn program(&self, name: &str) -> Option<&ProgramBlob> {
        self.programs.iter().find(|p| p.name == name)
    }

    pub fn map_def(&self, name: &str) -> Option<&MapDef> {
        self.map_defs.iter().find(|m| m.name == name)
    }

    pub fn btf(&self) -> Option<Result<BtfTypeGraph, btf::BtfError>> {
        self.btf_blob.as_deref().map(parse_btf)
    }

    pub fn core_relo_count(&self) -> usize {
        self.programs.iter().map(|p| p.core_relos.len()).sum()
    }
}

/// A program with map handles patched in, ready for the VM.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EbpfProgramImage {
    pub name: String,
    pub section_name: String,
    pub prog_type: ProgType,
    pub insns: Vec<Insn>,
    pub map_handles: BTreeMap<String, i32>,
    /// Register-frame architecture the image was relocated for, if any.
    pub arch: Option<ArchName>,
}

impl EbpfProgramImage {
    pub fn new(name: &str, section_name: &str, prog_type: ProgType, insns: Vec<Insn>) -> Self {
        EbpfProgramImage {
            name: name.to_string(),
            section_name: section_name.to_string(),
            prog_type,
            insns,
            map_handles: BTreeMap::new(),
            arch: None,
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        crate::insn::encode_instructions(&self.insns)
    }
}

struct Section<'a> {
    name: String,
    sh_type: u32,
    flags: u64,
    link: u32,
    info: u32,
    data: &'a [u8],
}

struct Symbol {
    name: String,
    kind: u8,
    shndx: u16,
    value: u64,
    size: u64,
}

struct Reader<'a> {
    data: &'a [u8],
    big: bool,
}

impl<'a> Reader<'a> {
    fn bytes(&self, off: u64, len: u64) -> Result<&'a [u8], ElfError> {
        let start = usize::try_from(off).map_err(|_| malformed("offset out of range"))?;
        let len = usize::try_from(len).map_err(|_| malformed("length out of range"))?;
        let end = start.checked_add(len).ok_or_else(|| malformed("offset overflow"))?;
        self.data
            .get(start..end)
            .ok_or_else(|| malformed(format!("range {start}..{end} past end of file ({})", self.data.len())))
    }

    fn u16(&self, off: u64) -> Result<u16, ElfError> {
        let b: [u8; 2] = self.bytes(off, 2)?.try_into().unwrap();
        Ok(if self.big { u16::from_be_bytes(b) } else { u16::from_le_bytes(b) })
    }

    fn u32(&self, off: u64) -> Result<u32, ElfError> {
        let b: [u8; 4] = self.bytes(off, 4)?.try_into().unwrap();
        Ok(if self.big { u32::from_be_bytes(b) } else { u32::from_le_bytes(b) })
    }

    fn u64(&self, off: u64) -> Result<u64, ElfError> {
        let b: [u8; 8] = self.bytes(off, 8)?.try_into().unwrap();
        Ok(if self.big { u64::from_be_bytes(b) } else { u64::from_le_bytes(b) })
    }
}

fn malformed(msg: impl Into<String>) -> ElfError {
    ElfError::MalformedSection(msg.into())
}

fn cstr(table: &[u8], off: u32) -> Result<String, ElfError> {
    let start = off as usize;
    let tail = table
        .get(start..)
        .ok_or_else(|| malformed(format!("string offset {off} out of range")))?;
    let end = tail
        .iter()
        .position(|&b| b == 0)
        .ok_or_else(|| malformed(format!("unterminated string at {off}")))?;
    Ok(String::from_utf8_lossy(&tail[..end]).into_owned())
}

fn read_sections<'a>(r: &Reader<'a>) -> Result<Vec<Section<'a>>, ElfError> {
    let shoff = r.u64(0x28)?;
    let shentsize = r.u16(0x3a)? as u64;
    let shnum = r.u16(0x3c)? as u64;
    let shstrndx = r.u16(0x3e)? as u64;
    if shnum == 0 {
        return Err(malformed("no section headers"));
    }
    if shentsize < 64 {
        return Err(malformed(format!("section header size {shentsize}")));
    }
    if shstrndx >= shnum {
        return Err(malformed("section name table index out of range"));
    }
    let mut raw = Vec::with_capacity(shnum as usize);
    for i in 0..shnum {
        let h = shoff
            .checked_add(i * shentsize)
            .ok_or_else(|| malformed("section header offset overflow"))?;
        let name_off = r.u32(h)?;
        let sh_type = r.u32(h + 4)?;
        let flags = r.u64(h + 8)?;
        let offset = r.u64(h + 24)?;
        let size = r.u64(h + 32)?;
        let link = r.u32(h + 40)?;
        let info = r.u32(h + 44)?;
        // NOBITS and NULL sections occupy no file bytes.
        let data = if sh_type == 0 || sh_type == 8 { &[][..] } else { r.bytes(offset, size)? };
        raw.push((name_off, sh_type, flags, link, info, data));
    }
    let shstr = raw[shstrndx as usize].5;
    raw.into_iter()
        .map(|(name_off, sh_type, flags, link, info, data)| {
            Ok(Section {
                name: cstr(shstr, name_off)?,
                sh_type,
                flags,
                link,
                info,
                data,
            })
        })
        .collect()
}

fn read_symbols(r: &Reader<'_>, sections: &[Section<'_>]) -> Result<Vec<Symbol>, ElfError> {
    let Some(symtab) = sections.iter().find(|s| s.sh_type == SHT_SYMTAB) else {
        return Ok(Vec::new());
    };
    let strtab = sections
        .get(symtab.link as usize)
        .ok_or_else(|| malformed("symbol string table index out of range"))?
        .data;
    if symtab.data.len() % 24 != 0 {
        return Err(malformed("symbol table size is not a multiple of 24"));
    }
    let sr = Reader { data: symtab.data, big: r.big };
    (0..symtab.data.len() as u64 / 24)
        .map(|i| {
            let base = i * 24;
            Ok(Symbol {
                name: cstr(strtab, sr.u32(base)?)?,
                kind: sr.bytes(base + 4, 1)?[0] & 0x0f,
                shndx: sr.u16(base + 6)?,
                value: sr.u64(base + 8)?,
                size: sr.u64(base + 16)?,
            })
        })
        .collect()
}

/// Integer encoded by `__uint(name, val)`: a pointer to an array of `val` ints.
fn btf_uint(graph: &BtfTypeGraph, type_id: TypeId) -> Option<u32> {
    let ptr = graph.resolved(type_id)?;
    let BtfKind::Ptr { type_id: arr } = ptr.kind else { return None };
    match graph.resolved(arr)?.kind {
        BtfKind::Array { nelems, .. } => Some(nelems),
        _ => None,
    }
}

/// Type encoded by `__type(name, T)`: a pointer to `T`.
fn btf_pointee(graph: &BtfTypeGraph, type_id: TypeId) -> Option<TypeId> {
    match graph.resolved(type_id)?.kind {
        BtfKind::Ptr { type_id } => Some(type_id),
        _ => None,
    }
}

fn parse_btf_map(graph: &BtfTypeGraph, name: &str, var_type: TypeId) -> Result<MapDef, ElfError> {
    let invalid = |reason: String| ElfError::InvalidMapDef {
        name: name.to_string(),
        reason,
    };
    let def = graph
        .resolved(var_type)
        .ok_or_else(|| invalid("map variable has no type".into()))?;
    let BtfKind::Struct { members, .. } = &def.kind else {
        return Err(invalid("map definition is not a struct".into()));
    };
    let mut map_type = None;
    let (mut key_size, mut value_size, mut max_entries) = (0u32, 0u32, 0u32);
    let (mut key_id, mut value_id) = (None, None);
    for m in members {
        match m.name.as_str() {
            "type" => map_type = btf_uint(graph, m.type_id),
            "max_entries" => max_entries = btf_uint(graph, m.type_id).unwrap_or(0),
            "key_size" => key_size = btf_uint(graph, m.type_id).unwrap_or(0),
            "value_size" => value_size = btf_uint(graph, m.type_id).unwrap_or(0),
            "key" => {
                let t = btf_pointee(graph, m.type_id).ok_or_else(|| invalid("`key` is not a pointer".into()))?;
                key_size = graph
                    .size_of(t)
                    .and_then(|s| u32::try_from(s).ok())
                    .ok_or_else(|| invalid("key type has no size".into()))?;
                key_id = Some(t);
            }
            "value" => {
                let t = btf_pointee(graph, m.type_id).ok_or_else(|| invalid("`value` is not a pointer".into()))?;
                value_size = graph
                    .size_of(t)
                    .and_then(|s| u32::try_from(s).ok())
                    .ok_or_else(|| invalid("value type has no size".into()))?;
                value_id = Some(t);
            }
            other => log::debug!("map {name}: ignoring attribute {other}"),
        }
    }
    let code = map_type.ok_or_else(|| invalid("missing `type`".into()))?;
    let map_type = MapType::from_code(code).ok_or_else(|| ElfError::UnsupportedMapType {
        name: name.to_string(),
        map_type: code,
    })?;
    if map_type == MapType::PerfEventArray {
        if key_size == 0 {
            key_size = 4;
        }
        if value_size == 0 {
            value_size = 4;
        }
    }
    let def = MapDef {
        name: name.to_string(),
        map_type,
        key_size,
        value_size,
        max_entries,
        btf_key_type_id: key_id,
        btf_value_type_id: value_id,
    };
    def.validate()?;
    Ok(def)
}

fn is_global_data(name: &str) -> bool {
    [".data", ".rodata", ".bss"]
        .iter()
        .any(|p| name == *p || name.starts_with(&format!("{p}.")))
}

/// Parse a relocatable eBPF object.
pub fn parse_object(bytes: &[u8]) -> Result<ElfBpfObject, ElfError> {
    if bytes.len() < 64 || bytes[..4] != [0x7f, b'E', b'L', b'F'] {
        return Err(ElfError::NotElf);
    }
    if bytes[4] != 2 {
        return Err(malformed("only 64-bit ELF objects are supported"));
    }
    let endianness = match bytes[5] {
        1 => Endianness::Little,
        2 => Endianness::Big,
        _ => return Err(malformed("unknown ELF data encoding")),
    };
    let r = Reader {
        data: bytes,
        big: endianness == Endianness::Big,
    };
    let machine = r.u16(18)?;
    if machine != EM_BPF {
        return Err(ElfError::WrongMachine(machine));
    }
    let sections = read_sections(&r)?;
    let symbols = read_symbols(&r, &sections)?;

    if sections.iter().any(|s| s.name == "maps") {
        return Err(ElfError::LegacyMaps);
    }

    let btf_blob = sections.iter().find(|s| s.name == ".BTF").map(|s| s.data.to_vec());
    let btf_ext_blob = sections.iter().find(|s| s.name == ".BTF.ext").map(|s| s.data.to_vec());
    let license = sections
        .iter()
        .find(|s| s.name == "license")
        .map(|s| {
            let end = s.data.iter().position(|&b| b == 0).unwrap_or(s.data.len());
            String::from_utf8_lossy(&s.data[..end]).into_owned()
        })
        .unwrap_or_default();

    let graph = btf_blob.as_deref().map(parse_btf).transpose()?;

    // Maps: symbols in `.maps`, typed by the `.maps` DATASEC.
    let mut map_defs = Vec::new();
    let maps_idx = sections.iter().position(|s| s.name == ".maps");
    if let Some(maps_idx) = maps_idx {
        let graph = graph
            .as_ref()
            .ok_or_else(|| malformed("`.maps` section present without `.BTF`"))?;
        let datasec = graph
            .types()
            .find(|(_, t)| t.name == ".maps" && matches!(t.kind, BtfKind::Datasec { .. }));
        // DATASEC offsets are left zero by compilers; match variables to symbols by name.
        let mut by_name: HashMap<String, TypeId> = HashMap::new();
        if let Some((_, ds)) = datasec {
            let BtfKind::Datasec { vars, .. } = &ds.kind else { unreachable!() };
            for v in vars {
                let var = graph.get(v.type_id).ok_or_else(|| malformed("bad .maps variable"))?;
                let BtfKind::Var { type_id, .. } = var.kind else {
                    return Err(malformed(".maps DATASEC entry is not a VAR"));
                };
                by_name.insert(var.name.clone(), type_id);
            }
        }
        let mut map_syms: Vec<&Symbol> = symbols
            .iter()
            .filter(|s| s.shndx as usize == maps_idx && s.kind != STT_SECTION && !s.name.is_empty())
            .collect();
        map_syms.sort_by_key(|s| s.value);
        for sym in map_syms {
            let var_type = *by_name
                .get(&sym.name)
                .ok_or_else(|| malformed(format!("map {} has no BTF definition", sym.name)))?;
            map_defs.push(parse_btf_map(graph, &sym.name, var_type)?);
        }
        let mut seen = HashSet::new();
        for m in &map_defs {
            if !seen.insert(m.name.as_str()) {
                return Err(malformed(format!("duplicate map name {}", m.name)));
            }
        }
    }

    let core_by_section: HashMap<String, Vec<CoreRelo>> = match (&btf_ext_blob, &graph) {
        (Some(ext), Some(g)) => parse_btf_ext(ext, g)?.into_iter().collect(),
        _ => HashMap::new(),
    };

    let mut programs = Vec::new();
    for (idx, sec) in sections.iter().enumerate() {
        if sec.sh_type != SHT_PROGBITS || sec.flags & SHF_EXECINSTR == 0 || sec.data.is_empty() {
            continue;
        }
        if sec.name == ".text" {
            continue;
        }
        let Some(prog_type) = ProgType::from_section(&sec.name) else {
            log::warn!("skipping section {:?}: unrecognized program type", sec.name);
            continue;
        };
        let all_insns = decode_instructions_with(sec.data, endianness).map_err(|source| ElfError::Decode {
            program: sec.name.clone(),
            source,
        })?;

        let mut funcs: Vec<&Symbol> = symbols
            .iter()
            .filter(|s| s.shndx as usize == idx && s.kind == STT_FUNC)
            .collect();
        funcs.sort_by_key(|s| s.value);
        let spans: Vec<(String, u64, u64)> = if funcs.is_empty() {
            vec![(sec.name.clone(), 0, sec.data.len() as u64)]
        } else {
            funcs.iter().map(|f| (f.name.clone(), f.value, f.size)).collect()
        };

        // Relocations for this section.
        let mut relocs: Vec<(u64, &Symbol, u32)> = Vec::new();
        for rel in sections.iter().filter(|s| s.sh_type == SHT_REL && s.info as usize == idx) {
            if rel.data.len() % 16 != 0 {
                return Err(malformed(format!("{}: size is not a multiple of 16", rel.name)));
            }
            let rr = Reader { data: rel.data, big: r.big };
            for i in 0..rel.data.len() as u64 / 16 {
                let offset = rr.u64(i * 16)?;
                let info = rr.u64(i * 16 + 8)?;
                let sym = symbols
                    .get((info >> 32) as usize)
                    .ok_or_else(|| malformed(format!("{}: symbol index out of range", rel.name)))?;
                relocs.push((offset, sym, info as u32));
            }
        }

        let core = core_by_section.get(&sec.name);
        for (name, start, size) in spans {
            if start % INSN_SIZE as u64 != 0 || size % INSN_SIZE as u64 != 0 || size == 0 {
                return Err(malformed(format!("program {name} is not instruction aligned")));
            }
            let first = (start / 8) as usize;
            let count = (size / 8) as usize;
            let insns = all_insns
                .get(first..first + count)
                .ok_or_else(|| malformed(format!("program {name} extends past its section")))?
                .to_vec();
            if insns.last().map(|i| i.opcode) != Some(EXIT) {
                return Err(malformed(format!("program {name} does not end with exit")));
            }
            let end = start + size;
            let mut map_relocs = Vec::new();
            for &(off, sym, rtype) in relocs.iter().filter(|(o, _, _)| (start..end).contains(o)) {
                let index = ((off - start) / 8) as usize;
                let target_sec = if sym.shndx == SHN_UNDEF || sym.shndx >= SHN_LORESERVE {
                    None
                } else {
                    sections.get(sym.shndx as usize)
                };
                let target_name = target_sec.map(|s| s.name.as_str()).unwrap_or("");
                if is_global_data(target_name) {
                    return Err(ElfError::GlobalData {
                        program: name.clone(),
                        section: target_name.to_string(),
                    });
                }
                if rtype == R_BPF_64_32 || target_sec.is_some_and(|s| s.flags & SHF_EXECINSTR != 0) {
                    return Err(ElfError::BpfToBpfCall { program: name.clone() });
                }
                if rtype != R_BPF_64_64 || Some(sym.shndx as usize) != maps_idx || sym.kind == STT_SECTION {
                    return Err(malformed(format!(
                        "program {name}: unsupported relocation type {rtype} against {:?}",
                        sym.name
                    )));
                }
                if off % 8 != 0 || !insns.get(index).is_some_and(|i| i.is_ld_imm64()) {
                    return Err(malformed(format!("program {name}: map relocation at {off} is not on LD_IMM64")));
                }
                if !map_defs.iter().any(|m| m.name == sym.name) {
                    return Err(malformed(format!("program {name}: relocation against unknown map {}", sym.name)));
                }
                debug_assert!(sym.kind == STT_OBJECT || sym.kind == 0);
                map_relocs.push((index, sym.name.clone()));
            }
            map_relocs.sort();
            let core_relos = core
                .map(|relos| {
                    relos
                        .iter()
                        .filter(|c| (start..end).contains(&(c.insn_off as u64)))
                        .map(|c| CoreRelo {
                            insn_off: c.insn_off - start as u32,
                            ..c.clone()
                        })
                        .collect()
                })
                .unwrap_or_default();
            programs.push(ProgramBlob {
                name,
                section_name: sec.name.clone(),
                section_offset: start,
                insns,
                prog_type,
                map_relocs,
                core_relos,
            });
        }
    }

    if programs.is_empty() {
        return Err(ElfError::NoPrograms);
    }
    let mut seen = HashSet::new();
    for p in &programs {
        if !seen.insert(p.name.as_str()) {
            return Err(malformed(format!("duplicate program name {}", p.name)));
        }
    }

    Ok(ElfBpfObject {
        programs,
        map_defs,
        btf_blob,
        btf_ext_blob,
        license,
        endianness,
    })
}

/// Patch every map reference with the handle assigned to its map.
pub fn bind_maps(obj: &ElfBpfObject, assignment: &HashMap<String, i32>) -> Result<Vec<EbpfProgramImage>, ElfError> {
    if obj.endianness == Endianness::Big {
        return Err(ElfError::BigEndian);
    }
    obj.programs
        .iter()
        .map(|p| {
            let mut image = EbpfProgramImage::new(&p.name, &p.section_name, p.prog_type, p.insns.clone());
            for (index, map) in &p.map_relocs {
                let handle = *assignment.get(map).ok_or_else(|| ElfError::UnboundMap(map.clone()))?;
                let insn = &mut image.insns[*index];
                insn.src_reg = PSEUDO_MAP_FD;
                insn.imm = handle;
                image.map_handles.insert(map.clone(), handle);
            }
            Ok(image)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insn::{decode_instructions, LD_IMM64};

    fn fixture(name: &str) -> Vec<u8> {
        std::fs::read(format!("{}/../../fixtures/bpf/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
    }

    #[test]
    fn section_prefixes() {
        assert_eq!(ProgType::from_section("kprobe/do_sys_open"), Some(ProgType::Kprobe));
        assert_eq!(ProgType::from_section("tp/sched/x"), Some(ProgType::Tracepoint));
        assert_eq!(ProgType::from_section("xdp"), Some(ProgType::Xdp));
        assert_eq!(ProgType::from_section("lsm/file_open"), Some(ProgType::Lsm));
        assert_eq!(ProgType::from_section("socket"), Some(ProgType::SocketFilter));
        assert_eq!(ProgType::from_section("xdpfoo"), None);
        assert_eq!(ProgType::from_section(".text"), None);
    }

    #[test]
    fn empty_is_not_elf() {
        assert_eq!(parse_object(&[]), Err(ElfError::NotElf));
        assert_eq!(parse_object(b"\0asm\x01\0\0\0"), Err(ElfError::NotElf));
    }

    #[test]
    fn wrong_machine() {
        let mut b = fixture("bootstrap.bpf.o");
        b[18] = 62;
        b[19] = 0;
        assert_eq!(parse_object(&b), Err(ElfError::WrongMachine(62)));
    }

    #[test]
    fn bootstrap_shape() {
        let obj = parse_object(&fixture("bootstrap.bpf.o")).unwrap();
        assert_eq!(obj.programs.len(), 1);
        assert_eq!(obj.map_defs.len(), 1);
        let p = &obj.programs[0];
        assert_eq!(p.prog_type, ProgType::Tracepoint);
        assert_eq!(p.name, "handle_exec");
        assert_eq!(obj.map_defs[0].map_type, MapType::Ringbuf);
        assert_eq!(obj.map_defs[0].max_entries, 256 * 1024);
        assert_eq!(obj.license, "Dual BSD/GPL");
        for (i, _) in &p.map_relocs {
            assert_eq!(p.insns[*i].opcode, LD_IMM64);
        }
    }

    #[test]
    fn two_programs_one_section() {
        let obj = parse_object(&fixture("maps.bpf.o")).unwrap();
        let names: Vec<_> = obj.programs.iter().map(|p| p.name.as_str()).collect();
        assert_eq!(names, ["update_then_lookup", "count_events"]);
        assert_eq!(obj.programs[1].section_offset, obj.programs[0].insns.len() as u64 * 8);
        let counts = obj.map_def("counts").unwrap();
        assert_eq!((counts.map_type, counts.max_entries), (MapType::Hash, 1024));
        let stats = obj.map_def("stats").unwrap();
        assert_eq!((stats.key_size, stats.max_entries), (4, 4));
    }

    #[test]
    fn legacy_and_global_data_rejected() {
        assert_eq!(parse_object(&fixture("legacy.bpf.o")), Err(ElfError::LegacyMaps));
        assert!(matches!(
            parse_object(&fixture("globals.bpf.o")),
            Err(ElfError::GlobalData { .. })
        ));
    }

    #[test]
    fn bind_patches_only_relocated_slots() {
        let obj = parse_object(&fixture("bootstrap.bpf.o")).unwrap();
        let images = bind_maps(&obj, &HashMap::from([("rb".to_string(), 7)])).unwrap();
        let before = &obj.programs[0].insns;
        let after = &images[0].insns;
        let relocated: Vec<usize> = obj.programs[0].map_relocs.iter().map(|(i, _)| *i).collect();
        assert!(!relocated.is_empty());
        for (i, (a, b)) in before.iter().zip(after).enumerate() {
            if relocated.contains(&i) {
                assert_eq!(b.imm, 7);
                assert_eq!(b.src_reg, PSEUDO_MAP_FD);
            } else {
                assert_eq!(a, b);
            }
        }
        assert_eq!(images[0].map_handles["rb"], 7);
    }

    #[test]
    fn bind_missing_map() {
        let obj = parse_object(&fixture("bootstrap.bpf.o")).unwrap();
        assert_eq!(bind_maps(&obj, &HashMap::new()), Err(ElfError::UnboundMap("rb".into())));
    }

    #[test]
    fn bind_identity_without_relocs() {
        let insns = decode_instructions(&[0xb7, 0, 0, 0, 42, 0, 0, 0, 0x95, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        let obj = ElfBpfObject {
            programs: vec![ProgramBlob {
                name: "p".into(),
                section_name: "xdp".into(),
                section_offset: 0,
                insns: insns.clone(),
                prog_type: ProgType::Xdp,
                map_relocs: vec![],
                core_relos: vec![],
            }],
            map_defs: vec![],
            btf_blob: None,
            btf_ext_blob: None,
            license: String::new(),
            endianness: Endianness::Little,
        };
        let images = bind_maps(&obj, &HashMap::new()).unwrap();
        assert_eq!(images[0].insns, insns);
        let mut be = obj.clone();
        be.endianness = Endianness::Big;
        assert_eq!(bind_maps(&be, &HashMap::new()), Err(ElfError::BigEndian));
    }

    #[test]
    fn deterministic() {
        let b = fixture("kprobe.bpf.o");
        assert_eq!(parse_object(&b).unwrap(), parse_object(&b).unwrap());
    }

    #[test]
    fn map_def_rules() {
        let mut m = MapDef {
            name: "rb".into(),
            map_type: MapType::Ringbuf,
            key_size: 0,
            value_size: 0,
            max_entries: 4096,
            btf_key_type_id: None,
            btf_value_type_id: None,
        };
        assert!(m.validate().is_ok());
        m.max_entries = 4000;
        assert!(m.validate().is_err());
        m.map_type = MapType::Array;
        m.key_size = 8;
        m.value_size = 8;
        assert!(m.validate().is_err());
    }
}
