//! BPF Type Format: parsing, CO-RE field relocation, register-frame relocation
//! and shared-layout validation.

pub mod builder;
pub mod core;
pub mod ext;
pub mod layout;
pub mod ptregs;

use std::fmt;

use thiserror::Error;

use crate::Endianness;

pub use self::core::{apply_core_relocations, field_byte_offset, CoreError};
pub use ext::{parse_btf_ext, CoreRelo, CoreReloKind, ExtError};
pub use layout::{validate_shared_layout, LayoutError, LayoutReport};
pub use ptregs::{relocate_ptregs, ArchName, ArchProfile, PtRegsError};

pub const BTF_MAGIC: u16 = 0xeb9f;
const HEADER_LEN: usize = 24;

pub const KIND_INT: u32 = 1;
pub const KIND_PTR: u32 = 2;
pub const KIND_ARRAY: u32 = 3;
pub const KIND_STRUCT: u32 = 4;
pub const KIND_UNION: u32 = 5;
pub const KIND_ENUM: u32 = 6;
pub const KIND_FWD: u32 = 7;
pub const KIND_TYPEDEF: u32 = 8;
pub const KIND_VOLATILE: u32 = 9;
pub const KIND_CONST: u32 = 10;
pub const KIND_RESTRICT: u32 = 11;
pub const KIND_FUNC: u32 = 12;
pub const KIND_FUNC_PROTO: u32 = 13;
pub const KIND_VAR: u32 = 14;
pub const KIND_DATASEC: u32 = 15;
pub const KIND_FLOAT: u32 = 16;
pub const KIND_DECL_TAG: u32 = 17;
pub const KIND_TYPE_TAG: u32 = 18;
pub const KIND_ENUM64: u32 = 19;

pub type TypeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BtfError {
    #[error("bad BTF magic {0:#06x}")]
    BadMagic(u16),
    #[error("truncated BTF header")]
    TruncatedHeader,
    #[error("BTF section bounds exceed blob ({0})")]
    BadSectionBounds(&'static str),
    #[error("truncated type record for type {0}")]
    TruncatedType(TypeId),
    #[error("type {0} has unknown kind {1}")]
    UnknownKind(TypeId, u32),
    #[error("type {type_id} references missing type {referenced}")]
    DanglingTypeRef { type_id: TypeId, referenced: TypeId },
    #[error("string offset {0} outside string table")]
    BadStringOffset(u32),
    #[error("struct type {0} has decreasing member offsets")]
    MemberOrder(TypeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub name: String,
    pub type_id: TypeId,
    pub bit_offset: u32,
    /// Non-zero for bitfield members.
    pub bitfield_size: u32,
}

impl Member {
    pub fn is_bitfield(&self) -> bool {
        self.bitfield_size != 0 || self.bit_offset % 8 != 0
    }

    pub fn byte_offset(&self) -> u32 {
        self.bit_offset / 8
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumValue {
    pub name: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub type_id: TypeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSecinfo {
    pub type_id: TypeId,
    pub offset: u32,
    pub size: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BtfKind {
    Void,
    Int { size: u32, encoding: u8, offset: u8, bits: u8 },
    Ptr { type_id: TypeId },
    Array { elem: TypeId, index: TypeId, nelems: u32 },
    Struct { size: u32, members: Vec<Member> },
    Union { size: u32, members: Vec<Member> },
    Enum { size: u32, values: Vec<EnumValue> },
    Fwd { is_union: bool },
    Typedef { type_id: TypeId },
    Volatile { type_id: TypeId },
    Const { type_id: TypeId },
    Restrict { type_id: TypeId },
    Func { proto: TypeId, linkage: u16 },
    FuncProto { ret: TypeId, params: Vec<Param> },
    Var { type_id: TypeId, linkage: u32 },
    Datasec { size: u32, vars: Vec<VarSecinfo> },
    Float { size: u32 },
    DeclTag { type_id: TypeId, component_idx: i32 },
    TypeTag { type_id: TypeId },
}

impl BtfKind {
    pub fn kind_name(&self) -> &'static str {
        match self {
            BtfKind::Void => "VOID",
            BtfKind::Int { .. } => "INT",
            BtfKind::Ptr { .. } => "PTR",
            BtfKind::Array { .. } => "ARRAY",
            BtfKind::Struct { .. } => "STRUCT",
            BtfKind::Union { .. } => "UNION",
            BtfKind::Enum { .. } => "ENUM",
            BtfKind::Fwd { .. } => "FWD",
            BtfKind::Typedef { .. } => "TYPEDEF",
            BtfKind::Volatile { .. } => "VOLATILE",
            BtfKind::Const { .. } => "CONST",
            BtfKind::Restrict { .. } => "RESTRICT",
            BtfKind::Func { .. } => "FUNC",
            BtfKind::FuncProto { .. } => "FUNC_PROTO",
            BtfKind::Var { .. } => "VAR",
            BtfKind::Datasec { .. } => "DATASEC",
            BtfKind::Float { .. } => "FLOAT",
            BtfKind::DeclTag { .. } => "DECL_TAG",
            BtfKind::TypeTag { .. } => "TYPE_TAG",
        }
    }

    fn references(&self) -> Vec<TypeId> {
        match self {
            BtfKind::Ptr { type_id }
            | BtfKind::Typedef { type_id }
            | BtfKind::Volatile { type_id }
            | BtfKind::Const { type_id }
            | BtfKind::Restrict { type_id }
            | BtfKind::Var { type_id, .. }
            | BtfKind::DeclTag { type_id, .. }
            | BtfKind::TypeTag { type_id } => vec![*type_id],
            BtfKind::Array { elem, index, .. } => vec![*elem, *index],
            BtfKind::Struct { members, .. } | BtfKind::Union { members, .. } => {
                members.iter().map(|m| m.type_id).collect()
            }
            BtfKind::Func { proto, .. } => vec![*proto],
            BtfKind::FuncProto { ret, params } => std::iter::once(*ret)
                .chain(params.iter().map(|p| p.type_id))
                .collect(),
            BtfKind::Datasec { vars, .. } => vars.iter().map(|v| v.type_id).collect(),
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BtfType {
    pub name: String,
    pub kind: BtfKind,
}

/// Indexed BTF type table. Index 0 is the implicit `void` type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BtfTypeGraph {
    types: Vec<BtfType>,
    strings: Vec<u8>,
    endianness: Endianness,
}

struct Reader<'a> {
    data: &'a [u8],
    big: bool,
}

impl Reader<'_> {
    fn u32_at(&self, off: usize) -> Option<u32> {
        let b: [u8; 4] = self.data.get(off..off + 4)?.try_into().ok()?;
        Some(if self.big {
            u32::from_be_bytes(b)
        } else {
            u32::from_le_bytes(b)
        })
    }
}

pub(crate) fn cstr_at(strings: &[u8], off: u32) -> Result<String, BtfError> {
    let start = off as usize;
    if start >= strings.len() {
        return Err(BtfError::BadStringOffset(off));
    }
    let end = strings[start..]
        .iter()
        .position(|&b| b == 0)
        .ok_or(BtfError::BadStringOffset(off))?;
    Ok(String::from_utf8_lossy(&strings[start..start + end]).into_owned())
}

/// Parse a raw `.BTF` blob.
pub fn parse_btf(blob: &[u8]) -> Result<BtfTypeGraph, BtfError> {
    if blob.len() < 2 {
        return Err(BtfError::TruncatedHeader);
    }
    let magic_le = u16::from_le_bytes([blob[0], blob[1]]);
    let big = match magic_le {
        BTF_MAGIC => false,
        m if m.swap_bytes() == BTF_MAGIC => true,
        m => return Err(BtfError::BadMagic(m)),
    };
    if blob.len() < HEADER_LEN {
        return Err(BtfError::TruncatedHeader);
    }
    let r = Reader { data: blob, big };
    let hdr_len = r.u32_at(4).ok_or(BtfError::TruncatedHeader)? as usize;
    if hdr_len < HEADER_LEN || hdr_len > blob.len() {
        return Err(BtfError::TruncatedHeader);
    }
    let field = |i: usize| r.u32_at(8 + 4 * i).ok_or(BtfError::TruncatedHeader);
    let (type_off, type_len, str_off, str_len) = (field(0)?, field(1)?, field(2)?, field(3)?);
    let section = |off: u32, len: u32, what| {
        let start = hdr_len
            .checked_add(off as usize)
            .ok_or(BtfError::BadSectionBounds(what))?;
        let end = start
            .checked_add(len as usize)
            .ok_or(BtfError::BadSectionBounds(what))?;
        if end > blob.len() {
            return Err(BtfError::BadSectionBounds(what));
        }
        Ok(start..end)
    };
    let type_range = section(type_off, type_len, "types")?;
    let str_range = section(str_off, str_len, "strings")?;
    let strings = blob[str_range].to_vec();
    if !strings.is_empty() && strings[0] != 0 {
        return Err(BtfError::BadStringOffset(0));
    }
    let name = |off: u32| -> Result<String, BtfError> {
        if off == 0 {
            Ok(String::new())
        } else {
            cstr_at(&strings, off)
        }
    };

    let mut types = vec![BtfType {
        name: String::new(),
        kind: BtfKind::Void,
    }];
    let mut pos = type_range.start;
    let end = type_range.end;
    while pos < end {
        let id = types.len() as TypeId;
        let truncated = BtfError::TruncatedType(id);
        let rd = |off: usize| -> Result<u32, BtfError> {
            if off + 4 > end {
                return Err(BtfError::TruncatedType(id));
            }
            r.u32_at(off).ok_or(BtfError::TruncatedType(id))
        };
        let name_off = rd(pos)?;
        let info = rd(pos + 4)?;
        let size_type = rd(pos + 8)?;
        pos += 12;
        let vlen = (info & 0xffff) as usize;
        let kind_flag = info >> 31 != 0;
        let kind = (info >> 24) & 0x1f;
        let members = |pos: &mut usize| -> Result<Vec<Member>, BtfError> {
            let mut out = Vec::with_capacity(vlen.min(1024));
            for _ in 0..vlen {
                let m_name = rd(*pos)?;
                let m_type = rd(*pos + 4)?;
                let m_off = rd(*pos + 8)?;
                *pos += 12;
                let (bit_offset, bitfield_size) = if kind_flag {
                    (m_off & 0x00ff_ffff, m_off >> 24)
                } else {
                    (m_off, 0)
                };
                out.push(Member {
                    name: name(m_name)?,
                    type_id: m_type,
                    bit_offset,
                    bitfield_size,
                });
            }
            Ok(out)
        };
        let decoded = match kind {
            KIND_INT => {
                let enc = rd(pos)?;
                pos += 4;
                BtfKind::Int {
                    size: size_type,
                    encoding: ((enc >> 24) & 0x0f) as u8,
                    offset: ((enc >> 16) & 0xff) as u8,
                    bits: (enc & 0xff) as u8,
                }
            }
            KIND_PTR => BtfKind::Ptr { type_id: size_type },
            KIND_ARRAY => {
                let elem = rd(pos)?;
                let index = rd(pos + 4)?;
                let nelems = rd(pos + 8)?;
                pos += 12;
                BtfKind::Array {
                    elem,
                    index,
                    nelems,
                }
            }
            KIND_STRUCT => {
                let members = members(&mut pos)?;
                if members.windows(2).any(|w| w[1].bit_offset < w[0].bit_offset) {
                    return Err(BtfError::MemberOrder(id));
                }
                BtfKind::Struct {
                    size: size_type,
                    members,
                }
            }
            KIND_UNION => BtfKind::Union {
                size: size_type,
                members: members(&mut pos)?,
            },
            KIND_ENUM => {
                let mut values = Vec::with_capacity(vlen.min(1024));
                for _ in 0..vlen {
                    let v_name = rd(pos)?;
                    let v = rd(pos + 4)?;
                    pos += 8;
                    let value = if kind_flag { v as i32 as i64 } else { v as i64 };
                    values.push(EnumValue {
                        name: name(v_name)?,
                        value,
                    });
                }
                BtfKind::Enum {
                    size: size_type,
                    values,
                }
            }
            KIND_ENUM64 => {
                let mut values = Vec::with_capacity(vlen.min(1024));
                for _ in 0..vlen {
                    let v_name = rd(pos)?;
                    let lo = rd(pos + 4)? as u64;
                    let hi = rd(pos + 8)? as u64;
                    pos += 12;
                    values.push(EnumValue {
                        name: name(v_name)?,
                        value: ((hi << 32) | lo) as i64,
                    });
                }
                BtfKind::Enum {
                    size: size_type,
                    values,
                }
            }
            KIND_FWD => BtfKind::Fwd {
                is_union: kind_flag,
            },
            KIND_TYPEDEF => BtfKind::Typedef { type_id: size_type },
            KIND_VOLATILE => BtfKind::Volatile { type_id: size_type },
            KIND_CONST => BtfKind::Const { type_id: size_type },
            KIND_RESTRICT => BtfKind::Restrict { type_id: size_type },
            KIND_FUNC => BtfKind::Func {
                proto: size_type,
                linkage: vlen as u16,
            },
            KIND_FUNC_PROTO => {
                let mut params = Vec::with_capacity(vlen.min(1024));
                for _ in 0..vlen {
                    let p_name = rd(pos)?;
                    let p_type = rd(pos + 4)?;
                    pos += 8;
                    params.push(Param {
                        name: name(p_name)?,
                        type_id: p_type,
                    });
                }
                BtfKind::FuncProto {
                    ret: size_type,
                    params,
                }
            }
            KIND_VAR => {
                let linkage = rd(pos)?;
                pos += 4;
                BtfKind::Var {
                    type_id: size_type,
                    linkage,
                }
            }
            KIND_DATASEC => {
                let mut vars = Vec::with_capacity(vlen.min(1024));
                for _ in 0..vlen {
                    vars.push(VarSecinfo {
                        type_id: rd(pos)?,
                        offset: rd(pos + 4)?,
                        size: rd(pos + 8)?,
                    });
                    pos += 12;
                }
                BtfKind::Datasec {
                    size: size_type,
                    vars,
                }
            }
            KIND_FLOAT => BtfKind::Float { size: size_type },
            KIND_DECL_TAG => {
                let idx = rd(pos)? as i32;
                pos += 4;
                BtfKind::DeclTag {
                    type_id: size_type,
                    component_idx: idx,
                }
            }
            KIND_TYPE_TAG => BtfKind::TypeTag { type_id: size_type },
            other => return Err(BtfError::UnknownKind(id, other)),
        };
        if pos > end {
            return Err(truncated);
        }
        types.push(BtfType {
            name: name(name_off)?,
            kind: decoded,
        });
    }

    let count = types.len() as TypeId;
    for (id, ty) in types.iter().enumerate() {
        for referenced in ty.kind.references() {
            if referenced >= count {
                return Err(BtfError::DanglingTypeRef {
                    type_id: id as TypeId,
                    referenced,
                });
            }
        }
    }

    Ok(BtfTypeGraph {
        types,
        strings,
        endianness: if big {
            Endianness::Big
        } else {
            Endianness::Little
        },
    })
}

impl BtfTypeGraph {
    /// Number of types, excluding the implicit `void`.
    pub fn type_count(&self) -> usize {
        self.types.len() - 1
    }

    pub fn endianness(&self) -> Endianness {
        self.endianness
    }

    pub fn get(&self, id: TypeId) -> Option<&BtfType> {
        self.types.get(id as usize)
    }

    pub fn string_at(&self, off: u32) -> Option<String> {
        cstr_at(&self.strings, off).ok()
    }

    pub fn types(&self) -> impl Iterator<Item = (TypeId, &BtfType)> {
        self.types
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, t)| (i as TypeId, t))
    }

    /// Peel typedefs and qualifiers.
    pub fn resolve(&self, mut id: TypeId) -> TypeId {
        // Reference chains are bounded by the type count; cycles cannot loop forever.
        for _ in 0..self.types.len() {
            match self.get(id).map(|t| &t.kind) {
                Some(BtfKind::Typedef { type_id })
                | Some(BtfKind::Volatile { type_id })
                | Some(BtfKind::Const { type_id })
                | Some(BtfKind::Restrict { type_id })
                | Some(BtfKind::TypeTag { type_id }) => id = *type_id,
                _ => return id,
            }
        }
        id
    }

    pub fn resolved(&self, id: TypeId) -> Option<&BtfType> {
        self.get(self.resolve(id))
    }

    /// Size in bytes of a sized type.
    pub fn size_of(&self, id: TypeId) -> Option<u64> {
        self.size_of_depth(id, 0)
    }

    fn size_of_depth(&self, id: TypeId, depth: usize) -> Option<u64> {
        if depth > self.types.len() {
            return None;
        }
        match &self.resolved(id)?.kind {
            BtfKind::Int { size, .. }
            | BtfKind::Struct { size, .. }
            | BtfKind::Union { size, .. }
            | BtfKind::Enum { size, .. }
            | BtfKind::Float { size } => Some(*size as u64),
            BtfKind::Ptr { .. } => Some(8),
            BtfKind::Array { elem, nelems, .. } => self
                .size_of_depth(*elem, depth + 1)?
                .checked_mul(*nelems as u64),
            _ => None,
        }
    }

    /// Find a named type of the given kind (STRUCT/UNION/...) by its name.
    pub fn find_by_name(&self, name: &str, kind: u32) -> Vec<TypeId> {
        self.types()
            .filter(|(_, t)| t.name == name && kind_code(&t.kind) == kind)
            .map(|(id, _)| id)
            .collect()
    }

    /// Name of a type, with `(anon)` for unnamed types.
    pub fn display_name(&self, id: TypeId) -> String {
        match self.get(id) {
            Some(t) if id == 0 => t.kind.kind_name().to_lowercase(),
            Some(t) if t.name.is_empty() => "(anon)".into(),
            Some(t) => t.name.clone(),
            None => format!("<bad type {id}>"),
        }
    }
}

pub fn kind_code(kind: &BtfKind) -> u32 {
    match kind {
        BtfKind::Void => 0,
        BtfKind::Int { .. } => KIND_INT,
        BtfKind::Ptr { .. } => KIND_PTR,
        BtfKind::Array { .. } => KIND_ARRAY,
        BtfKind::Struct { .. } => KIND_STRUCT,
        BtfKind::Union { .. } => KIND_UNION,
        BtfKind::Enum { .. } => KIND_ENUM,
        BtfKind::Fwd { .. } => KIND_FWD,
        BtfKind::Typedef { .. } => KIND_TYPEDEF,
        BtfKind::Volatile { .. } => KIND_VOLATILE,
        BtfKind::Const { .. } => KIND_CONST,
        BtfKind::Restrict { .. } => KIND_RESTRICT,
        BtfKind::Func { .. } => KIND_FUNC,
        BtfKind::FuncProto { .. } => KIND_FUNC_PROTO,
        BtfKind::Var { .. } => KIND_VAR,
        BtfKind::Datasec { .. } => KIND_DATASEC,
        BtfKind::Float { .. } => KIND_FLOAT,
        BtfKind::DeclTag { .. } => KIND_DECL_TAG,
        BtfKind::TypeTag { .. } => KIND_TYPE_TAG,
    }
}

impl fmt::Display for BtfTypeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, ty) in self.types() {
            let name = if ty.name.is_empty() {
                "(anon)"
            } else {
                &ty.name
            };
            write!(f, "[{id}] {} '{name}'", ty.kind.kind_name())?;
            match &ty.kind {
                BtfKind::Int { size, .. } | BtfKind::Float { size } => write!(f, " size={size}")?,
                BtfKind::Struct { size, members } | BtfKind::Union { size, members } => {
                    write!(f, " size={size} vlen={}", members.len())?;
                    for m in members {
                        write!(
                            f,
                            "\n\t'{}' type_id={} bits_offset={}",
                            m.name, m.type_id, m.bit_offset
                        )?;
                        if m.bitfield_size != 0 {
                            write!(f, " bitfield_size={}", m.bitfield_size)?;
                        }
                    }
                }
                BtfKind::Array { elem, nelems, .. } => {
                    write!(f, " type_id={elem} nr_elems={nelems}")?
                }
                BtfKind::Ptr { type_id }
                | BtfKind::Typedef { type_id }
                | BtfKind::Const { type_id }
                | BtfKind::Volatile { type_id }
                | BtfKind::Restrict { type_id }
                | BtfKind::TypeTag { type_id } => write!(f, " type_id={type_id}")?,
                BtfKind::Var { type_id, .. } => write!(f, " type_id={type_id}")?,
                BtfKind::Enum { size, values } => {
                    write!(f, " size={size} vlen={}", values.len())?
                }
                BtfKind::Datasec { size, vars } => {
                    write!(f, " size={size} vlen={}", vars.len())?
                }
                _ => {}
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
