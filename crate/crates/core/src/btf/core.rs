//! CO-RE field relocation.
//!
//! A relocation names a field by walking an access path through the *local*
//! BTF (the types the program was compiled against). The same field is then
//! located by name in the *target* BTF and the instruction that encodes the
//! local offset is patched with the target offset.

use thiserror::Error;

use super::ext::{CoreRelo, CoreReloKind};
use super::{BtfKind, BtfTypeGraph, Member, TypeId, KIND_STRUCT, KIND_UNION};
use crate::elf::EbpfProgramImage;
use crate::insn::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("type {0} is not a struct or union")]
    NotAStruct(TypeId),
    #[error("access path {path:?} invalid for type {type_id}")]
    BadAccessPath { type_id: TypeId, path: Vec<u32> },
    #[error("member {0:?} is a bitfield; bitfield relocation is not supported")]
    BitfieldUnsupported(String),
    #[error("field {0} not present in target BTF")]
    TargetFieldMissing(String),
    #[error("field {0} resolves to different offsets in multiple target types")]
    AmbiguousTarget(String),
    #[error("relocation at instruction byte offset {0} is out of range")]
    RelocOutOfRange(u32),
    #[error("unsupported CO-RE relocation kind {0}")]
    UnsupportedReloKind(&'static str),
    #[error("instruction {index} (opcode {opcode:#04x}) cannot carry a field relocation")]
    BadRelocInsn { index: usize, opcode: u8 },
    #[error("instruction {index} encodes {found}, expected local value {expected}")]
    UnexpectedLocalValue { index: usize, expected: i64, found: i64 },
}

#[derive(Debug, Clone)]
enum Step {
    Field { name: String, local_type: TypeId },
    Index(u32),
}

#[derive(Debug, Clone)]
struct LocalAccess {
    root_name: String,
    root_kind: u32,
    root_index: u32,
    steps: Vec<Step>,
    offset: u64,
    /// Dotted field path for error messages.
    display: String,
}

fn check_member(m: &Member) -> Result<(), CoreError> {
    if m.is_bitfield() {
        Err(CoreError::BitfieldUnsupported(m.name.clone()))
    } else {
        Ok(())
    }
}

fn members_of(graph: &BtfTypeGraph, id: TypeId) -> Option<&[Member]> {
    match &graph.get(id)?.kind {
        BtfKind::Struct { members, .. } | BtfKind::Union { members, .. } => Some(members),
        _ => None,
    }
}

/// Byte offset of the field reached by `path` (member and array indices) from
/// the struct or union `type_id`, using the offsets recorded in `graph`.
pub fn field_byte_offset(graph: &BtfTypeGraph, type_id: TypeId, path: &[u32]) -> Result<u32, CoreError> {
    let root = graph.resolve(type_id);
    if members_of(graph, root).is_none() {
        return Err(CoreError::NotAStruct(type_id));
    }
    let (offset, _) = walk(graph, root, path).map_err(|e| match e {
        CoreError::BadAccessPath { .. } => CoreError::BadAccessPath {
            type_id,
            path: path.to_vec(),
        },
        other => other,
    })?;
    u32::try_from(offset).map_err(|_| CoreError::BadAccessPath {
        type_id,
        path: path.to_vec(),
    })
}

fn walk(graph: &BtfTypeGraph, root: TypeId, path: &[u32]) -> Result<(u64, Vec<Step>), CoreError> {
    let bad = || CoreError::BadAccessPath {
        type_id: root,
        path: path.to_vec(),
    };
    let mut cur = root;
    let mut offset = 0u64;
    let mut steps = Vec::with_capacity(path.len());
    for &idx in path {
        match &graph.get(cur).ok_or_else(bad)?.kind {
            BtfKind::Struct { members, .. } | BtfKind::Union { members, .. } => {
                let m = members.get(idx as usize).ok_or_else(bad)?;
                check_member(m)?;
                offset += m.byte_offset() as u64;
                steps.push(Step::Field {
                    name: m.name.clone(),
                    local_type: m.type_id,
                });
                cur = graph.resolve(m.type_id);
            }
            BtfKind::Array { elem, nelems, .. } => {
                if *nelems != 0 && idx >= *nelems {
                    return Err(bad());
                }
                let elem_size = graph.size_of(*elem).ok_or_else(bad)?;
                offset += idx as u64 * elem_size;
                steps.push(Step::Index(idx));
                cur = graph.resolve(*elem);
            }
            _ => return Err(bad()),
        }
    }
    Ok((offset, steps))
}

fn local_access(graph: &BtfTypeGraph, relo: &CoreRelo) -> Result<LocalAccess, CoreError> {
    let root = graph.resolve(relo.type_id);
    let root_ty = graph.get(root).ok_or(CoreError::NotAStruct(relo.type_id))?;
    let root_kind = match root_ty.kind {
        BtfKind::Struct { .. } => KIND_STRUCT,
        BtfKind::Union { .. } => KIND_UNION,
        _ => return Err(CoreError::NotAStruct(relo.type_id)),
    };
    let (&root_index, path) = relo.access_spec.split_first().ok_or(CoreError::BadAccessPath {
        type_id: relo.type_id,
        path: Vec::new(),
    })?;
    let root_size = graph.size_of(root).unwrap_or(0);
    let (field_off, steps) = walk(graph, root, path)?;
    let mut display = root_ty.name.clone();
    for s in &steps {
        match s {
            Step::Field { name, .. } if name.is_empty() => display.push_str(".(anon)"),
            Step::Field { name, .. } => {
                display.push('.');
                display.push_str(name);
            }
            Step::Index(i) => display.push_str(&format!("[{i}]")),
        }
    }
    Ok(LocalAccess {
        root_name: essential_name(&root_ty.name).to_string(),
        root_kind,
        root_index,
        steps,
        offset: root_index as u64 * root_size + field_off,
        display,
    })
}

/// Strip a `___flavor` suffix: `task_struct___old` matches `task_struct`.
fn essential_name(name: &str) -> &str {
    match name.find("___") {
        Some(i) => &name[..i],
        None => name,
    }
}

/// Find a named member, descending into anonymous struct/union members.
fn find_member(graph: &BtfTypeGraph, ty: TypeId, name: &str, depth: usize) -> Option<(u64, Member)> {
    if depth > 32 {
        return None;
    }
    let members = members_of(graph, ty)?;
    if let Some(m) = members.iter().find(|m| m.name == name) {
        return Some((m.byte_offset() as u64, m.clone()));
    }
    members.iter().filter(|m| m.name.is_empty()).find_map(|m| {
        let inner = graph.resolve(m.type_id);
        find_member(graph, inner, name, depth + 1).map(|(off, found)| (m.byte_offset() as u64 + off, found))
    })
}

#[derive(PartialEq, Eq)]
enum Family {
    Scalar,
    Ptr,
    Array,
    Composite,
    Other,
}

fn family(graph: &BtfTypeGraph, id: TypeId) -> Family {
    match graph.resolved(id).map(|t| &t.kind) {
        Some(BtfKind::Int { .. }) | Some(BtfKind::Enum { .. }) | Some(BtfKind::Float { .. }) => Family::Scalar,
        Some(BtfKind::Ptr { .. }) => Family::Ptr,
        Some(BtfKind::Array { .. }) => Family::Array,
        Some(BtfKind::Struct { .. }) | Some(BtfKind::Union { .. }) | Some(BtfKind::Fwd { .. }) => Family::Composite,
        _ => Family::Other,
    }
}

fn match_candidate(
    local: &BtfTypeGraph,
    target: &BtfTypeGraph,
    access: &LocalAccess,
    cand: TypeId,
) -> Result<Option<u64>, CoreError> {
    let root_size = target.size_of(cand).unwrap_or(0);
    let mut offset = access.root_index as u64 * root_size;
    let mut cur = target.resolve(cand);
    for step in &access.steps {
        match step {
            Step::Field { name, .. } if name.is_empty() => continue,
            Step::Field { name, local_type } => {
                let Some((off, m)) = find_member(target, cur, name, 0) else {
                    return Ok(None);
                };
                check_member(&m)?;
                if family(local, *local_type) != family(target, m.type_id) {
                    return Ok(None);
                }
                offset += off;
                cur = target.resolve(m.type_id);
            }
            Step::Index(i) => match target.get(cur).map(|t| &t.kind) {
                Some(BtfKind::Array { elem, nelems, .. }) => {
                    if *nelems != 0 && *i >= *nelems {
                        return Ok(None);
                    }
                    let Some(elem_size) = target.size_of(*elem) else {
                        return Ok(None);
                    };
                    offset += *i as u64 * elem_size;
                    cur = target.resolve(*elem);
                }
                _ => return Ok(None),
            },
        }
    }
    Ok(Some(offset))
}

fn target_offset(
    local: &BtfTypeGraph,
    target: &BtfTypeGraph,
    access: &LocalAccess,
) -> Result<Option<u64>, CoreError> {
    let mut found: Option<u64> = None;
    for cand in target.find_by_name(&access.root_name, access.root_kind) {
        if let Some(off) = match_candidate(local, target, access, cand)? {
            match found {
                Some(prev) if prev != off => return Err(CoreError::AmbiguousTarget(access.display.clone())),
                _ => found = Some(off),
            }
        }
    }
    Ok(found)
}

fn is_mem_insn(insn: &Insn) -> bool {
    matches!(insn.class(), BPF_LDX | BPF_ST | BPF_STX) && matches!(insn.opcode & 0xe0, BPF_MEM | BPF_MEMSX)
}

fn is_imm_insn(insn: &Insn) -> bool {
    matches!(insn.class(), BPF_ALU | BPF_ALU64) && insn.opcode & BPF_X == 0
}

/// Patch `image` so every listed field access uses the offsets of `target`.
pub fn apply_core_relocations(
    image: &EbpfProgramImage,
    relos: &[CoreRelo],
    local: &BtfTypeGraph,
    target: &BtfTypeGraph,
) -> Result<EbpfProgramImage, CoreError> {
    let mut out = image.clone();
    for relo in relos {
        let index = relo.insn_index();
        if relo.insn_off % 8 != 0 || index >= out.insns.len() {
            return Err(CoreError::RelocOutOfRange(relo.insn_off));
        }
        match relo.kind {
            CoreReloKind::FieldByteOffset | CoreReloKind::FieldExists => {}
            other => return Err(CoreError::UnsupportedReloKind(other.name())),
        }
        let access = local_access(local, relo)?;
        let target_off = target_offset(local, target, &access)?;
        let (expected, new_value) = match relo.kind {
            CoreReloKind::FieldByteOffset => {
                let off = target_off.ok_or_else(|| CoreError::TargetFieldMissing(access.display.clone()))?;
                (access.offset as i64, off as i64)
            }
            _ => (1, target_off.is_some() as i64),
        };
        patch(&mut out.insns, index, relo.insn_off, expected, new_value)?;
    }
    Ok(out)
}

fn patch(insns: &mut [Insn], index: usize, insn_off: u32, expected: i64, value: i64) -> Result<(), CoreError> {
    let insn = &mut insns[index];
    if is_mem_insn(insn) {
        if insn.offset as i64 != expected {
            return Err(CoreError::UnexpectedLocalValue {
                index,
                expected,
                found: insn.offset as i64,
            });
        }
        insn.offset = i16::try_from(value).map_err(|_| CoreError::RelocOutOfRange(insn_off))?;
    } else if is_imm_insn(insn) || insn.is_ld_imm64() {
        if insn.imm as i64 != expected {
            return Err(CoreError::UnexpectedLocalValue {
                index,
                expected,
                found: insn.imm as i64,
            });
        }
        insn.imm = i32::try_from(value).map_err(|_| CoreError::RelocOutOfRange(insn_off))?;
    } else {
        return Err(CoreError::BadRelocInsn {
            index,
            opcode: insn.opcode,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::builder::BtfBuilder;
    use super::super::parse_btf;
    use super::*;
    use crate::elf::ProgType;

    fn pair_struct(b_offset_bits: u32, size: u32) -> BtfTypeGraph {
        let mut b = BtfBuilder::new();
        let u32t = b.add_int("unsigned int", 4, false);
        let u64t = b.add_int("unsigned long long", 8, false);
        b.add_struct("pair", size, &[("a", u32t, 0), ("b", u64t, b_offset_bits)]);
        parse_btf(&b.build()).unwrap()
    }

    fn image(insns: Vec<Insn>) -> EbpfProgramImage {
        EbpfProgramImage::new("t", "tracepoint/x", ProgType::Tracepoint, insns)
    }

    #[test]
    fn natural_alignment_offset() {
        let g = pair_struct(64, 16);
        assert_eq!(field_byte_offset(&g, 3, &[1]).unwrap(), 8);
        assert_eq!(field_byte_offset(&g, 3, &[0]).unwrap(), 0);
    }

    #[test]
    fn access_past_members() {
        let g = pair_struct(64, 16);
        assert!(matches!(field_byte_offset(&g, 3, &[2]), Err(CoreError::BadAccessPath { .. })));
        assert_eq!(field_byte_offset(&g, 1, &[0]), Err(CoreError::NotAStruct(1)));
    }

    #[test]
    fn bitfields_rejected() {
        let mut b = BtfBuilder::new();
        let u32t = b.add_int("unsigned int", 4, false);
        b.add_struct_bitfields("bf", 4, &[("lo", u32t, 0, 3), ("hi", u32t, 3, 5)]);
        let g = parse_btf(&b.build()).unwrap();
        assert_eq!(field_byte_offset(&g, 2, &[1]), Err(CoreError::BitfieldUnsupported("hi".into())));
    }

    #[test]
    fn relocates_ldx_offset() {
        let local = pair_struct(64, 16);
        let target = pair_struct(128, 24);
        let ldx = Insn::new(BPF_LDX | BPF_MEM | BPF_DW, 0, 1, 8, 0);
        let img = image(vec![ldx, Insn::new(EXIT, 0, 0, 0, 0)]);
        let relo = CoreRelo {
            insn_off: 0,
            type_id: 3,
            access_spec: vec![0, 1],
            kind: CoreReloKind::FieldByteOffset,
        };
        let out = apply_core_relocations(&img, &[relo.clone()], &local, &target).unwrap();
        assert_eq!(out.insns[0].offset, 16);
        let same = apply_core_relocations(&img, &[relo], &local, &local).unwrap();
        assert_eq!(same, img);
    }

    #[test]
    fn field_exists_for_missing_field() {
        let local = pair_struct(64, 16);
        let mut b = BtfBuilder::new();
        let u32t = b.add_int("unsigned int", 4, false);
        b.add_struct("pair", 4, &[("a", u32t, 0)]);
        let target = parse_btf(&b.build()).unwrap();
        let mov = Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 0, 0, 0, 1);
        let img = image(vec![mov, Insn::new(EXIT, 0, 0, 0, 0)]);
        let exists = CoreRelo {
            insn_off: 0,
            type_id: 3,
            access_spec: vec![0, 1],
            kind: CoreReloKind::FieldExists,
        };
        let out = apply_core_relocations(&img, &[exists.clone()], &local, &target).unwrap();
        assert_eq!(out.insns[0].imm, 0);

        let offset = CoreRelo {
            kind: CoreReloKind::FieldByteOffset,
            ..exists
        };
        let ldx = image(vec![Insn::new(BPF_LDX | BPF_MEM | BPF_DW, 0, 1, 8, 0)]);
        assert_eq!(
            apply_core_relocations(&ldx, &[offset], &local, &target),
            Err(CoreError::TargetFieldMissing("pair.b".into()))
        );
    }

    #[test]
    fn rejects_other_kinds_and_bad_offsets() {
        let g = pair_struct(64, 16);
        let img = image(vec![Insn::new(EXIT, 0, 0, 0, 0)]);
        let mut relo = CoreRelo {
            insn_off: 0,
            type_id: 3,
            access_spec: vec![0],
            kind: CoreReloKind::Other(9),
        };
        assert_eq!(
            apply_core_relocations(&img, &[relo.clone()], &g, &g),
            Err(CoreError::UnsupportedReloKind("type_size"))
        );
        relo.kind = CoreReloKind::FieldByteOffset;
        relo.insn_off = 64;
        assert_eq!(apply_core_relocations(&img, &[relo], &g, &g), Err(CoreError::RelocOutOfRange(64)));
    }

    #[test]
    fn finds_members_through_anonymous_unions() {
        let local = pair_struct(64, 16);
        let mut b = BtfBuilder::new();
        let u32t = b.add_int("unsigned int", 4, false);
        let u64t = b.add_int("unsigned long long", 8, false);
        let inner = b.add_union("", 8, &[("b", u64t, 0), ("c", u32t, 0)]);
        b.add_struct("pair", 24, &[("a", u32t, 0), ("", inner, 128)]);
        let target = parse_btf(&b.build()).unwrap();
        let img = image(vec![Insn::new(BPF_LDX | BPF_MEM | BPF_DW, 0, 1, 8, 0)]);
        let relo = CoreRelo {
            insn_off: 0,
            type_id: 3,
            access_spec: vec![0, 1],
            kind: CoreReloKind::FieldByteOffset,
        };
        let out = apply_core_relocations(&img, &[relo], &local, &target).unwrap();
        assert_eq!(out.insns[0].offset, 16);
    }
}
