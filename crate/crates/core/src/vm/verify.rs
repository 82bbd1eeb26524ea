//! Load-time checks. Memory safety is left to the interpreter.

use thiserror::Error;

use crate::insn::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("program is empty")]
    Empty,
    #[error("program does not end with exit")]
    NoExit,
    #[error("instruction {pc}: jump target {target} out of range")]
    BadJump { pc: usize, target: i64 },
    #[error("instruction {pc}: r10 is read-only")]
    WritesR10 { pc: usize },
    #[error("instruction {pc}: register r{reg} out of range")]
    BadRegister { pc: usize, reg: u8 },
    #[error("instruction {pc}: invalid opcode {opcode:#04x}")]
    BadOpcode { pc: usize, opcode: u8 },
    #[error("instruction {pc}: malformed LD_IMM64")]
    BadLdImm64 { pc: usize },
    #[error("instruction {pc}: {what} is not supported")]
    Unsupported { pc: usize, what: &'static str },
}

fn alu_op_valid(op: u8, insn: &Insn, is64: bool) -> bool {
    match op {
        BPF_ADD | BPF_SUB | BPF_MUL | BPF_OR | BPF_AND | BPF_LSH | BPF_RSH | BPF_XOR | BPF_ARSH => insn.offset == 0,
        BPF_DIV | BPF_MOD => insn.offset == 0 || insn.offset == 1,
        BPF_NEG => insn.opcode & BPF_X == 0 && insn.offset == 0,
        BPF_MOV => match insn.offset {
            0 => true,
            8 | 16 => insn.opcode & BPF_X != 0,
            32 => is64 && insn.opcode & BPF_X != 0,
            _ => false,
        },
        BPF_END => matches!(insn.imm, 16 | 32 | 64) && (!is64 || insn.opcode & BPF_X == 0),
        _ => false,
    }
}

/// Check that `insns` is safe to hand to the interpreter.
pub fn verify(insns: &[Insn]) -> Result<(), VerifyError> {
    if insns.is_empty() {
        return Err(VerifyError::Empty);
    }
    if insns.last().map(|i| i.opcode) != Some(EXIT) {
        return Err(VerifyError::NoExit);
    }
    // Second slots of LD_IMM64 are not valid jump targets.
    let mut is_second_slot = vec![false; insns.len()];
    let mut pc = 0;
    while pc < insns.len() {
        if insns[pc].is_ld_imm64() {
            if pc + 1 >= insns.len() {
                return Err(VerifyError::BadLdImm64 { pc });
            }
            is_second_slot[pc + 1] = true;
            pc += 2;
        } else {
            pc += 1;
        }
    }

    let mut pc = 0;
    while pc < insns.len() {
        let insn = insns[pc];
        for reg in [insn.dst_reg, insn.src_reg] {
            if reg > MAX_REG {
                return Err(VerifyError::BadRegister { pc, reg });
            }
        }
        let bad = VerifyError::BadOpcode { pc, opcode: insn.opcode };
        let op = insn.opcode & 0xf0;
        match insn.class() {
            class @ (BPF_ALU | BPF_ALU64) => {
                if !alu_op_valid(op, &insn, class == BPF_ALU64) {
                    return Err(bad);
                }
                if insn.dst_reg == 10 {
                    return Err(VerifyError::WritesR10 { pc });
                }
            }
            class @ (BPF_JMP | BPF_JMP32) => {
                let off = match op {
                    BPF_EXIT if class == BPF_JMP => None,
                    BPF_CALL if class == BPF_JMP => {
                        if insn.src_reg == 1 {
                            return Err(VerifyError::Unsupported { pc, what: "bpf-to-bpf call" });
                        }
                        if insn.src_reg != 0 {
                            return Err(VerifyError::Unsupported { pc, what: "kfunc call" });
                        }
                        None
                    }
                    BPF_JA if class == BPF_JMP => Some(insn.offset as i64),
                    BPF_JA => Some(insn.imm as i64),
                    BPF_JEQ | BPF_JGT | BPF_JGE | BPF_JSET | BPF_JNE | BPF_JSGT | BPF_JSGE | BPF_JLT
                    | BPF_JLE | BPF_JSLT | BPF_JSLE => Some(insn.offset as i64),
                    _ => return Err(bad),
                };
                if let Some(off) = off {
                    let target = pc as i64 + 1 + off;
                    if target < 0 || target >= insns.len() as i64 || is_second_slot[target as usize] {
                        return Err(VerifyError::BadJump { pc, target });
                    }
                }
            }
            BPF_LD => {
                if insn.opcode != LD_IMM64 {
                    return Err(VerifyError::Unsupported { pc, what: "legacy packet access" });
                }
                let next = insns[pc + 1];
                if next.opcode != 0 || next.dst_reg != 0 || next.src_reg != 0 || next.offset != 0 {
                    return Err(VerifyError::BadLdImm64 { pc });
                }
                match insn.src_reg {
                    0 => {}
                    PSEUDO_MAP_FD => {
                        if next.imm != 0 {
                            return Err(VerifyError::BadLdImm64 { pc });
                        }
                    }
                    _ => return Err(VerifyError::Unsupported { pc, what: "LD_IMM64 pseudo source" }),
                }
                if insn.dst_reg == 10 {
                    return Err(VerifyError::WritesR10 { pc });
                }
                pc += 2;
                continue;
            }
            BPF_LDX => {
                let mode = insn.opcode & 0xe0;
                if mode != BPF_MEM && !(mode == BPF_MEMSX && insn.mem_size() < 8) {
                    return Err(bad);
                }
                if insn.dst_reg == 10 {
                    return Err(VerifyError::WritesR10 { pc });
                }
            }
            BPF_ST | BPF_STX => {
                let mode = insn.opcode & 0xe0;
                if mode == BPF_ATOMIC && insn.class() == BPF_STX {
                    return Err(VerifyError::Unsupported { pc, what: "atomic operation" });
                }
                if mode != BPF_MEM {
                    return Err(bad);
                }
            }
            _ => return Err(bad),
        }
        pc += 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mov(dst: u8, imm: i32) -> Insn {
        Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, dst, 0, 0, imm)
    }
    const EXIT_INSN: Insn = Insn::new(EXIT, 0, 0, 0, 0);

    #[test]
    fn accepts_minimal() {
        assert_eq!(verify(&[mov(0, 42), EXIT_INSN]), Ok(()));
    }

    #[test]
    fn structural_errors() {
        assert_eq!(verify(&[]), Err(VerifyError::Empty));
        assert_eq!(verify(&[mov(0, 1)]), Err(VerifyError::NoExit));
        assert_eq!(verify(&[mov(10, 1), EXIT_INSN]), Err(VerifyError::WritesR10 { pc: 0 }));
        let ja = Insn::new(BPF_JMP | BPF_JA, 0, 0, 5, 0);
        assert_eq!(verify(&[ja, EXIT_INSN]), Err(VerifyError::BadJump { pc: 0, target: 6 }));
        let back = Insn::new(BPF_JMP | BPF_JA, 0, 0, -3, 0);
        assert!(matches!(verify(&[back, EXIT_INSN]), Err(VerifyError::BadJump { .. })));
    }

    #[test]
    fn jump_into_ld_imm64_second_slot() {
        let ja = Insn::new(BPF_JMP | BPF_JA, 0, 0, 1, 0);
        let ld = Insn::new(LD_IMM64, 1, 0, 0, 5);
        let hi = Insn::new(0, 0, 0, 0, 0);
        assert!(matches!(verify(&[ja, ld, hi, EXIT_INSN]), Err(VerifyError::BadJump { .. })));
    }

    #[test]
    fn rejects_unsupported() {
        let call = Insn::new(CALL, 0, 1, 0, 2);
        assert!(matches!(verify(&[call, EXIT_INSN]), Err(VerifyError::Unsupported { .. })));
        let xadd = Insn::new(BPF_STX | BPF_ATOMIC | BPF_DW, 1, 2, 0, 0);
        assert!(matches!(verify(&[xadd, EXIT_INSN]), Err(VerifyError::Unsupported { .. })));
        let bad = Insn::new(0xff, 0, 0, 0, 0);
        assert!(matches!(verify(&[bad, EXIT_INSN]), Err(VerifyError::BadOpcode { .. })));
    }
}
