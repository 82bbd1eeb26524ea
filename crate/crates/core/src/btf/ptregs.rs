//! Architecture register-frame profiles and the kprobe parameter relocation pass.
//!
//! A kprobe program compiled for one architecture reads its function
//! arguments at fixed offsets inside that architecture's `pt_regs`. Moving the
//! program to another architecture means rewriting each of those context
//! loads to the slot of the same argument register on the new frame.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::ext::{CoreRelo, CoreReloKind};
use super::{field_byte_offset, BtfKind, BtfTypeGraph, KIND_STRUCT};
use crate::elf::EbpfProgramImage;
use crate::insn::{BPF_ALU, BPF_ALU64, BPF_LDX, BPF_X};
use crate::Endianness;

const X86_64_PROFILE: &str = include_str!("../../data/arch/x86_64.profile");
const ARM64_PROFILE: &str = include_str!("../../data/arch/arm64.profile");

/// Name of the register-frame struct in BTF.
pub const FRAME_STRUCT: &str = "pt_regs";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArchName {
    X86_64,
    Arm64,
}

impl ArchName {
    pub const ALL: [ArchName; 2] = [ArchName::X86_64, ArchName::Arm64];

    pub fn as_str(&self) -> &'static str {
        match self {
            ArchName::X86_64 => "x86_64",
            ArchName::Arm64 => "arm64",
        }
    }

    pub fn host() -> Option<ArchName> {
        match std::env::consts::ARCH {
            "x86_64" => Some(ArchName::X86_64),
            "aarch64" => Some(ArchName::Arm64),
            _ => None,
        }
    }
}

impl fmt::Display for ArchName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ArchName {
    type Err = PtRegsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x86_64" | "x86-64" | "amd64" => Ok(ArchName::X86_64),
            "arm64" | "aarch64" => Ok(ArchName::Arm64),
            other => Err(PtRegsError::UnknownArch(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PtRegsError {
    #[error("unknown architecture {0:?}")]
    UnknownArch(String),
    #[error("bad architecture profile: {0}")]
    BadProfile(String),
    #[error("instruction {index}: offset {found} does not match parameter slot {expected}")]
    OffsetMismatch { index: usize, expected: u32, found: i64 },
    #[error("parameter {param} out of range ({available} parameter registers)")]
    ParamIndexOutOfRange { param: usize, available: usize },
    #[error("instruction {0} is not a context load")]
    NotAContextLoad(usize),
    #[error("instruction index {0} out of range")]
    InsnOutOfRange(usize),
    #[error("instruction {index} reads register frame offset {offset}, which is not a parameter slot")]
    UnknownRegisterSlot { index: usize, offset: u32 },
    #[error("register frame access: {0}")]
    Core(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchProfile {
    pub name: ArchName,
    /// Byte offsets of the function-argument registers within the frame, in argument order.
    pub param_reg_offsets: Vec<u32>,
    pub param_regs: Vec<String>,
    pub pointer_width: u32,
    pub endianness: Endianness,
    pub frame_size: u32,
    /// A member name that only this architecture's frame struct has.
    pub frame_marker: String,
}

impl ArchProfile {
    pub fn builtin(name: ArchName) -> ArchProfile {
        let text = match name {
            ArchName::X86_64 => X86_64_PROFILE,
            ArchName::Arm64 => ARM64_PROFILE,
        };
        ArchProfile::parse(text).expect("checked-in profile parses")
    }

    /// Parse the `key = value` profile format.
    pub fn parse(text: &str) -> Result<ArchProfile, PtRegsError> {
        let bad = |msg: &str| PtRegsError::BadProfile(msg.to_string());
        let mut name = None;
        let mut offsets = None;
        let mut regs = Vec::new();
        let mut pointer_width = 8;
        let mut endianness = Endianness::Little;
        let mut frame_size = None;
        let mut marker = String::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| bad(line))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.parse::<ArchName>()?),
                "pointer_width" => pointer_width = value.parse().map_err(|_| bad("pointer_width"))?,
                "endianness" => {
                    endianness = match value {
                        "little" => Endianness::Little,
                        "big" => Endianness::Big,
                        _ => return Err(bad("endianness")),
                    }
                }
                "frame_size" => frame_size = Some(value.parse().map_err(|_| bad("frame_size"))?),
                "frame_marker" => marker = value.to_string(),
                "param_regs" => regs = value.split_whitespace().map(str::to_string).collect(),
                "param_reg_offsets" => {
                    offsets = Some(
                        value
                            .split_whitespace()
                            .map(|v| v.parse::<u32>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| bad("param_reg_offsets"))?,
                    )
                }
                other => return Err(bad(&format!("unknown key {other}"))),
            }
        }
        let offsets: Vec<u32> = offsets.ok_or_else(|| bad("missing param_reg_offsets"))?;
        if offsets.len() < 5 {
            return Err(bad("fewer than 5 parameter registers"));
        }
        let mut sorted = offsets.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != offsets.len() {
            return Err(bad("duplicate parameter offsets"));
        }
        let frame_size = frame_size.ok_or_else(|| bad("missing frame_size"))?;
        if offsets.iter().any(|&o| o + pointer_width > frame_size) {
            return Err(bad("parameter slot outside frame"));
        }
        Ok(ArchProfile {
            name: name.ok_or_else(|| bad("missing name"))?,
            param_reg_offsets: offsets,
            param_regs: regs,
            pointer_width,
            endianness,
            frame_size,
            frame_marker: marker,
        })
    }

    /// Which architecture's `pt_regs` a program was compiled against, judged from its local BTF.
    pub fn detect_from_btf(graph: &BtfTypeGraph) -> Option<ArchName> {
        let id = *graph.find_by_name(FRAME_STRUCT, KIND_STRUCT).first()?;
        let BtfKind::Struct { members, .. } = &graph.get(id)?.kind else {
            return None;
        };
        ArchName::ALL.into_iter().find(|arch| {
            let marker = ArchProfile::builtin(*arch).frame_marker;
            members.iter().any(|m| m.name == marker)
        })
    }

    /// A zeroed register frame with `args` placed in the parameter registers.
    pub fn build_frame(&self, args: &[u64]) -> Vec<u8> {
        let mut frame = vec![0u8; self.frame_size as usize];
        for (arg, &off) in args.iter().zip(&self.param_reg_offsets) {
            let bytes = match self.endianness {
                Endianness::Little => arg.to_le_bytes(),
                Endianness::Big => arg.to_be_bytes(),
            };
            frame[off as usize..off as usize + 8].copy_from_slice(&bytes);
        }
        frame
    }
}

fn frame_slot(insn: &crate::insn::Insn) -> Option<i64> {
    match insn.class() {
        BPF_LDX => Some(insn.offset as i64),
        // address arithmetic such as `r1 += offsetof(pt_regs, di)`
        BPF_ALU | BPF_ALU64 if insn.opcode & BPF_X == 0 => Some(insn.imm as i64),
        _ => None,
    }
}

/// Rewrite each `(insn_index, param_index)` context access from the `from`
/// frame layout to the `to` frame layout.
pub fn relocate_ptregs(
    image: &EbpfProgramImage,
    param_accesses: &[(usize, usize)],
    from: &ArchProfile,
    to: &ArchProfile,
) -> Result<EbpfProgramImage, PtRegsError> {
    let mut out = image.clone();
    for &(index, param) in param_accesses {
        let available = from.param_reg_offsets.len().min(to.param_reg_offsets.len());
        if param >= available {
            return Err(PtRegsError::ParamIndexOutOfRange { param, available });
        }
        let insn = out.insns.get_mut(index).ok_or(PtRegsError::InsnOutOfRange(index))?;
        let found = frame_slot(insn).ok_or(PtRegsError::NotAContextLoad(index))?;
        let expected = from.param_reg_offsets[param];
        if found != expected as i64 {
            return Err(PtRegsError::OffsetMismatch { index, expected, found });
        }
        let new = to.param_reg_offsets[param];
        if insn.class() == BPF_LDX {
            insn.offset = new as i16;
        } else {
            insn.imm = new as i32;
        }
    }
    out.arch = Some(to.name);
    Ok(out)
}

/// Split CO-RE relocations into register-frame parameter accesses (resolved
/// against `from`) and the remaining relocations for the generic pass.
pub fn ptregs_accesses_from_core(
    image: &EbpfProgramImage,
    relos: &[CoreRelo],
    local: &BtfTypeGraph,
    from: &ArchProfile,
) -> Result<(Vec<(usize, usize)>, Vec<CoreRelo>), PtRegsError> {
    let mut accesses = Vec::new();
    let mut rest = Vec::new();
    for relo in relos {
        let root = local.resolve(relo.type_id);
        let is_frame = local
            .get(root)
            .map(|t| t.name == FRAME_STRUCT && matches!(t.kind, BtfKind::Struct { .. }))
            .unwrap_or(false);
        if !is_frame || relo.kind != CoreReloKind::FieldByteOffset {
            rest.push(relo.clone());
            continue;
        }
        let index = relo.insn_index();
        if index >= image.insns.len() {
            return Err(PtRegsError::InsnOutOfRange(index));
        }
        let path = relo.access_spec.get(1..).unwrap_or(&[]);
        let offset = field_byte_offset(local, root, path).map_err(|e| PtRegsError::Core(e.to_string()))?;
        let param = from
            .param_reg_offsets
            .iter()
            .position(|&o| o == offset)
            .ok_or(PtRegsError::UnknownRegisterSlot { index, offset })?;
        accesses.push((index, param));
    }
    Ok((accesses, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elf::ProgType;
    use crate::insn::{Insn, BPF_DW, BPF_MEM, EXIT};

    fn ldx(off: i16) -> Insn {
        Insn::new(BPF_LDX | BPF_MEM | BPF_DW, 0, 1, off, 0)
    }

    fn image(insns: Vec<Insn>) -> EbpfProgramImage {
        EbpfProgramImage::new("k", "kprobe/f", ProgType::Kprobe, insns)
    }

    #[test]
    fn builtin_profiles_parse() {
        let x86 = ArchProfile::builtin(ArchName::X86_64);
        let arm = ArchProfile::builtin(ArchName::Arm64);
        assert_eq!(x86.param_reg_offsets[0], 112);
        assert_eq!(arm.param_reg_offsets[0], 0);
        assert!(x86.param_reg_offsets.len() >= 5 && arm.param_reg_offsets.len() >= 5);
    }

    #[test]
    fn first_argument_moves_to_slot_zero() {
        let x86 = ArchProfile::builtin(ArchName::X86_64);
        let arm = ArchProfile::builtin(ArchName::Arm64);
        let img = image(vec![ldx(112), Insn::new(EXIT, 0, 0, 0, 0)]);
        let out = relocate_ptregs(&img, &[(0, 0)], &x86, &arm).unwrap();
        assert_eq!(out.insns[0].offset, 0);
        assert_eq!(out.arch, Some(ArchName::Arm64));
        let back = relocate_ptregs(&out, &[(0, 0)], &arm, &x86).unwrap();
        assert_eq!(back.insns, img.insns);
    }

    #[test]
    fn identity_when_profiles_match() {
        let x86 = ArchProfile::builtin(ArchName::X86_64);
        let img = image(vec![ldx(104), Insn::new(EXIT, 0, 0, 0, 0)]);
        let out = relocate_ptregs(&img, &[(0, 1)], &x86, &x86).unwrap();
        assert_eq!(out.insns, img.insns);
    }

    #[test]
    fn param_out_of_range() {
        let x86 = ArchProfile::builtin(ArchName::X86_64);
        let mut five = x86.clone();
        five.param_reg_offsets.truncate(5);
        let img = image(vec![ldx(112)]);
        assert_eq!(
            relocate_ptregs(&img, &[(0, 7)], &five, &five),
            Err(PtRegsError::ParamIndexOutOfRange { param: 7, available: 5 })
        );
    }

    #[test]
    fn offset_mismatch() {
        let x86 = ArchProfile::builtin(ArchName::X86_64);
        let arm = ArchProfile::builtin(ArchName::Arm64);
        let img = image(vec![ldx(8)]);
        assert!(matches!(
            relocate_ptregs(&img, &[(0, 0)], &x86, &arm),
            Err(PtRegsError::OffsetMismatch { index: 0, expected: 112, found: 8 })
        ));
    }

    #[test]
    fn profile_validation() {
        assert!(ArchProfile::parse("name = x86_64\nframe_size = 64\nparam_reg_offsets = 0 8 16 24").is_err());
        assert!(ArchProfile::parse("name = x86_64\nframe_size = 64\nparam_reg_offsets = 0 8 8 24 32").is_err());
        assert!(ArchProfile::parse("name = sparc\nframe_size = 64\nparam_reg_offsets = 0 8 16 24 32").is_err());
    }

    #[test]
    fn frame_builder_places_arguments() {
        let arm = ArchProfile::builtin(ArchName::Arm64);
        let frame = arm.build_frame(&[7, 9]);
        assert_eq!(frame.len(), 272);
        assert_eq!(frame[0], 7);
        assert_eq!(frame[8], 9);
    }
}
