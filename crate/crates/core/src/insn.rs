//! eBPF instruction encoding.
//!
//! Every instruction is 8 bytes: opcode, a register byte (dst in the low
//! nibble, src in the high nibble on little-endian objects), a signed 16-bit
//! offset and a signed 32-bit immediate. `LD_IMM64` occupies two slots; the
//! second slot carries the upper 32 bits of the constant in its immediate.

use std::fmt;

use thiserror::Error;

use crate::Endianness;

pub const INSN_SIZE: usize = 8;

// instruction classes
pub const BPF_LD: u8 = 0x00;
pub const BPF_LDX: u8 = 0x01;
pub const BPF_ST: u8 = 0x02;
pub const BPF_STX: u8 = 0x03;
pub const BPF_ALU: u8 = 0x04;
pub const BPF_JMP: u8 = 0x05;
pub const BPF_JMP32: u8 = 0x06;
pub const BPF_ALU64: u8 = 0x07;

// size modifiers
pub const BPF_W: u8 = 0x00;
pub const BPF_H: u8 = 0x08;
pub const BPF_B: u8 = 0x10;
pub const BPF_DW: u8 = 0x18;

// mode modifiers
pub const BPF_IMM: u8 = 0x00;
pub const BPF_ABS: u8 = 0x20;
pub const BPF_IND: u8 = 0x40;
pub const BPF_MEM: u8 = 0x60;
pub const BPF_MEMSX: u8 = 0x80;
pub const BPF_ATOMIC: u8 = 0xc0;

// source modifiers
pub const BPF_K: u8 = 0x00;
pub const BPF_X: u8 = 0x08;

// ALU operations
pub const BPF_ADD: u8 = 0x00;
pub const BPF_SUB: u8 = 0x10;
pub const BPF_MUL: u8 = 0x20;
pub const BPF_DIV: u8 = 0x30;
pub const BPF_OR: u8 = 0x40;
pub const BPF_AND: u8 = 0x50;
pub const BPF_LSH: u8 = 0x60;
pub const BPF_RSH: u8 = 0x70;
pub const BPF_NEG: u8 = 0x80;
pub const BPF_MOD: u8 = 0x90;
pub const BPF_XOR: u8 = 0xa0;
pub const BPF_MOV: u8 = 0xb0;
pub const BPF_ARSH: u8 = 0xc0;
pub const BPF_END: u8 = 0xd0;

// jump operations
pub const BPF_JA: u8 = 0x00;
pub const BPF_JEQ: u8 = 0x10;
pub const BPF_JGT: u8 = 0x20;
pub const BPF_JGE: u8 = 0x30;
pub const BPF_JSET: u8 = 0x40;
pub const BPF_JNE: u8 = 0x50;
pub const BPF_JSGT: u8 = 0x60;
pub const BPF_JSGE: u8 = 0x70;
pub const BPF_CALL: u8 = 0x80;
pub const BPF_EXIT: u8 = 0x90;
pub const BPF_JLT: u8 = 0xa0;
pub const BPF_JLE: u8 = 0xb0;
pub const BPF_JSLT: u8 = 0xc0;
pub const BPF_JSLE: u8 = 0xd0;

pub const LD_IMM64: u8 = BPF_LD | BPF_IMM | BPF_DW;
pub const EXIT: u8 = BPF_JMP | BPF_EXIT;
pub const CALL: u8 = BPF_JMP | BPF_CALL;

/// `src_reg` marker on `LD_IMM64` meaning "the immediate is a map reference".
pub const PSEUDO_MAP_FD: u8 = 1;

pub const MAX_REG: u8 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("instruction stream length {0} is not a multiple of 8")]
    BadLength(usize),
    #[error("instruction {index}: register r{reg} out of range")]
    BadRegister { index: usize, reg: u8 },
    #[error("instruction {0}: LD_IMM64 is missing its second slot")]
    TruncatedLdImm64(usize),
}

/// One decoded 8-byte instruction slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Insn {
    pub opcode: u8,
    pub dst_reg: u8,
    pub src_reg: u8,
    pub offset: i16,
    pub imm: i32,
}

impl Insn {
    pub const fn new(opcode: u8, dst_reg: u8, src_reg: u8, offset: i16, imm: i32) -> Self {
        Insn {
            opcode,
            dst_reg,
            src_reg,
            offset,
            imm,
        }
    }

    pub fn class(&self) -> u8 {
        self.opcode & 0x07
    }

    pub fn is_ld_imm64(&self) -> bool {
        self.opcode == LD_IMM64
    }

    /// Access width in bytes for load/store classes.
    pub fn mem_size(&self) -> usize {
        match self.opcode & 0x18 {
            BPF_W => 4,
            BPF_H => 2,
            BPF_B => 1,
            _ => 8,
        }
    }

    pub fn decode(bytes: &[u8; 8], endianness: Endianness) -> Insn {
        match endianness {
            Endianness::Little => Insn {
                opcode: bytes[0],
                dst_reg: bytes[1] & 0x0f,
                src_reg: bytes[1] >> 4,
                offset: i16::from_le_bytes([bytes[2], bytes[3]]),
                imm: i32::from_le_bytes([bytes[4], bytes[5], bytes[6], bytes[7]]),
            },
            Endianness::Big => Insn {
                opcode: bytes[0],
                dst_reg: bytes[1] >> 4,
                src_reg: bytes[1] & 0x0f,
                offset: i16::from_be_bytes([bytes[2], bytes[3]]),
                imm: i32::from_be_bytes([bytes[4], bytes[5], bytes[6], bytes[7]]),
            },
        }
    }

    pub fn encode(&self) -> [u8; 8] {
        let off = self.offset.to_le_bytes();
        let imm = self.imm.to_le_bytes();
        [
            self.opcode,
            (self.src_reg << 4) | (self.dst_reg & 0x0f),
            off[0],
            off[1],
            imm[0],
            imm[1],
            imm[2],
            imm[3],
        ]
    }
}

/// Decode a little-endian instruction stream.
pub fn decode_instructions(bytes: &[u8]) -> Result<Vec<Insn>, DecodeError> {
    decode_instructions_with(bytes, Endianness::Little)
}

pub fn decode_instructions_with(
    bytes: &[u8],
    endianness: Endianness,
) -> Result<Vec<Insn>, DecodeError> {
    if bytes.len() % INSN_SIZE != 0 {
        return Err(DecodeError::BadLength(bytes.len()));
    }
    let insns: Vec<Insn> = bytes
        .chunks_exact(INSN_SIZE)
        .map(|c| Insn::decode(c.try_into().expect("chunk of 8"), endianness))
        .collect();
    let mut i = 0;
    while i < insns.len() {
        let insn = &insns[i];
        for reg in [insn.dst_reg, insn.src_reg] {
            if reg > MAX_REG {
                return Err(DecodeError::BadRegister { index: i, reg });
            }
        }
        if insn.is_ld_imm64() {
            match insns.get(i + 1) {
                Some(next) if next.opcode == 0 && next.dst_reg == 0 && next.src_reg == 0 => i += 2,
                _ => return Err(DecodeError::TruncatedLdImm64(i)),
            }
        } else {
            i += 1;
        }
    }
    Ok(insns)
}

pub fn encode_instructions(insns: &[Insn]) -> Vec<u8> {
    insns.iter().flat_map(|i| i.encode()).collect()
}

fn alu_name(op: u8) -> &'static str {
    match op {
        BPF_ADD => "add",
        BPF_SUB => "sub",
        BPF_MUL => "mul",
        BPF_DIV => "div",
        BPF_OR => "or",
        BPF_AND => "and",
        BPF_LSH => "lsh",
        BPF_RSH => "rsh",
        BPF_NEG => "neg",
        BPF_MOD => "mod",
        BPF_XOR => "xor",
        BPF_MOV => "mov",
        BPF_ARSH => "arsh",
        BPF_END => "end",
        _ => "alu?",
    }
}

fn jmp_name(op: u8) -> &'static str {
    match op {
        BPF_JA => "ja",
        BPF_JEQ => "jeq",
        BPF_JGT => "jgt",
        BPF_JGE => "jge",
        BPF_JSET => "jset",
        BPF_JNE => "jne",
        BPF_JSGT => "jsgt",
        BPF_JSGE => "jsge",
        BPF_JLT => "jlt",
        BPF_JLE => "jle",
        BPF_JSLT => "jslt",
        BPF_JSLE => "jsle",
        _ => "jmp?",
    }
}

fn size_suffix(opcode: u8) -> &'static str {
    match opcode & 0x18 {
        BPF_W => "w",
        BPF_H => "h",
        BPF_B => "b",
        _ => "dw",
    }
}

impl fmt::Display for Insn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = self.opcode & 0xf0;
        let src_x = self.opcode & BPF_X != 0;
        match self.class() {
            BPF_ALU | BPF_ALU64 => {
                let suffix = if self.class() == BPF_ALU { "32" } else { "" };
                if op == BPF_NEG {
                    write!(f, "neg{suffix} r{}", self.dst_reg)
                } else if src_x {
                    write!(f, "{}{suffix} r{}, r{}", alu_name(op), self.dst_reg, self.src_reg)
                } else {
                    write!(f, "{}{suffix} r{}, {}", alu_name(op), self.dst_reg, self.imm)
                }
            }
            BPF_JMP | BPF_JMP32 => match self.opcode {
                EXIT => write!(f, "exit"),
                CALL => write!(f, "call {}", self.imm),
                _ if op == BPF_JA => write!(f, "ja {:+}", self.offset),
                _ => {
                    let suffix = if self.class() == BPF_JMP32 { "32" } else { "" };
                    if src_x {
                        write!(
                            f,
                            "{}{suffix} r{}, r{}, {:+}",
                            jmp_name(op),
                            self.dst_reg,
                            self.src_reg,
                            self.offset
                        )
                    } else {
                        write!(
                            f,
                            "{}{suffix} r{}, {}, {:+}",
                            jmp_name(op),
                            self.dst_reg,
                            self.imm,
                            self.offset
                        )
                    }
                }
            },
            BPF_LDX => write!(
                f,
                "ldx{} r{}, [r{}{:+}]",
                size_suffix(self.opcode),
                self.dst_reg,
                self.src_reg,
                self.offset
            ),
            BPF_STX => write!(
                f,
                "stx{} [r{}{:+}], r{}",
                size_suffix(self.opcode),
                self.dst_reg,
                self.offset,
                self.src_reg
            ),
            BPF_ST => write!(
                f,
                "st{} [r{}{:+}], {}",
                size_suffix(self.opcode),
                self.dst_reg,
                self.offset,
                self.imm
            ),
            _ if self.is_ld_imm64() => {
                if self.src_reg == PSEUDO_MAP_FD {
                    write!(f, "lddw r{}, map[{}]", self.dst_reg, self.imm)
                } else {
                    write!(f, "lddw r{}, {:#x}", self.dst_reg, self.imm as u32)
                }
            }
            _ => write!(f, "op {:#04x}", self.opcode),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference bytes produced by the clang BPF assembler (`clang -target bpf -c`)
    // for `r0 = 42` and `exit`.
    #[test]
    fn decodes_mov_and_exit() {
        let insns = decode_instructions(&[
            0xb7, 0x00, 0x00, 0x00, 0x2a, 0x00, 0x00, 0x00, //
            0x95, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        ])
        .unwrap();
        assert_eq!(insns[0], Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 0, 0, 0, 42));
        assert_eq!(insns[1].opcode, EXIT);
        assert_eq!(insns[0].to_string(), "mov r0, 42");
        assert_eq!(insns[1].to_string(), "exit");
    }

    #[test]
    fn rejects_bad_length() {
        assert_eq!(decode_instructions(&[0; 7]), Err(DecodeError::BadLength(7)));
    }

    #[test]
    fn rejects_bad_register() {
        let bytes = [0xb7, 0x0b, 0, 0, 0, 0, 0, 0];
        assert_eq!(
            decode_instructions(&bytes),
            Err(DecodeError::BadRegister { index: 0, reg: 11 })
        );
    }

    #[test]
    fn rejects_truncated_ld_imm64() {
        let bytes = [0x18, 0x01, 0, 0, 1, 0, 0, 0];
        assert_eq!(
            decode_instructions(&bytes),
            Err(DecodeError::TruncatedLdImm64(0))
        );
    }

    #[test]
    fn big_endian_register_nibbles() {
        let le = Insn::decode(&[0xbf, 0x21, 0, 0, 0, 0, 0, 0], Endianness::Little);
        let be = Insn::decode(&[0xbf, 0x12, 0, 0, 0, 0, 0, 0], Endianness::Big);
        assert_eq!(le, be);
    }

    #[test]
    fn encode_is_inverse_of_decode() {
        let insn = Insn::new(BPF_STX | BPF_MEM | BPF_DW, 10, 3, -16, 0);
        assert_eq!(Insn::decode(&insn.encode(), Endianness::Little), insn);
    }
}
