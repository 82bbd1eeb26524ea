//! Arithmetic evaluator for straight-line eBPF ALU programs, written from the
//! ISA description and working on raw instruction bytes.
//!
//! Documented edge cases: x / 0 = 0, x % 0 = x (the 32-bit forms still zero
//! the upper half), signed MIN / -1 = MIN, signed MIN % -1 = 0, shift counts
//! are masked to the operand width.

fn mask(bits: u32) -> u128 {
    (1u128 << bits) - 1
}

fn to_signed(v: u128, bits: u32) -> i128 {
    let v = v & mask(bits);
    if v >> (bits - 1) & 1 == 1 {
        v as i128 - (1i128 << bits)
    } else {
        v as i128
    }
}

fn wrap(v: i128, bits: u32) -> u64 {
    (v.rem_euclid(1i128 << bits)) as u64
}

fn bswap(v: u64, bytes: u32) -> u64 {
    let mut out = 0u64;
    for i in 0..bytes {
        let b = (v >> (8 * i)) & 0xff;
        out |= b << (8 * (bytes - 1 - i));
    }
    out
}

/// Evaluate `code` (8-byte little-endian instructions: ALU/ALU64, LD_IMM64
/// and a final EXIT) from `regs` and return r0.
pub fn eval(code: &[u8], mut regs: [u64; 11]) -> u64 {
    let mut pc = 0;
    while pc + 8 <= code.len() {
        let i = &code[pc..pc + 8];
        let opcode = i[0];
        let dst = (i[1] & 0x0f) as usize;
        let src = (i[1] >> 4) as usize;
        let off = i16::from_le_bytes([i[2], i[3]]);
        let imm = i32::from_le_bytes([i[4], i[5], i[6], i[7]]);
        pc += 8;

        if opcode == 0x95 {
            return regs[0];
        }
        if opcode == 0x18 {
            let hi = i32::from_le_bytes([code[pc + 4], code[pc + 5], code[pc + 6], code[pc + 7]]);
            regs[dst] = (imm as u32 as u64) | ((hi as u32 as u64) << 32);
            pc += 8;
            continue;
        }
        let class = opcode & 7;
        assert!(class == 4 || class == 7, "not an ALU instruction: {opcode:#x}");
        let bits: u32 = if class == 7 { 64 } else { 32 };
        let from_reg = opcode & 8 != 0;
        let op = opcode >> 4;

        let a = regs[dst] as u128 & mask(bits);
        let b = if from_reg {
            regs[src] as u128 & mask(bits)
        } else {
            // immediates are sign extended to 64 bits, then truncated
            (imm as i128 as u128) & mask(bits)
        };
        let sa = to_signed(a, bits);
        let sb = to_signed(b, bits);
        let result: u64 = match op {
            0x0 => wrap(sa + sb, bits),
            0x1 => wrap(sa - sb, bits),
            0x2 => wrap(sa * sb, bits),
            0x3 if b == 0 => 0,
            0x3 if off == 1 => wrap(sa / sb, bits),
            0x3 => (a / b) as u64,
            0x4 => (a | b) as u64,
            0x5 => (a & b) as u64,
            0x6 => wrap((a << (b % bits as u128)) as i128, bits),
            0x7 => (a >> (b % bits as u128)) as u64,
            0x8 => wrap(-sa, bits),
            0x9 if b == 0 => a as u64,
            0x9 if off == 1 => wrap(sa % sb, bits),
            0x9 => (a % b) as u64,
            0xa => (a ^ b) as u64,
            0xb => match off {
                0 => b as u64,
                n => wrap(to_signed(b, n as u32), bits),
            },
            0xc => wrap(sa >> (b % bits as u128), bits),
            0xd => {
                let width = imm as u32;
                let v = regs[dst];
                let swap = from_reg || class == 7;
                let truncated = v & (mask(width) as u64);
                // store full 64-bit result and skip the width truncation below
                regs[dst] = if swap { bswap(truncated, width / 8) } else { truncated };
                continue;
            }
            _ => panic!("unknown ALU op {op:#x}"),
        };
        regs[dst] = result;
    }
    panic!("program fell off the end")
}

#[cfg(test)]
mod tests {
    #[test]
    fn spot_checks() {
        assert_eq!(super::to_signed(0xffff_ffff, 32), -1);
        assert_eq!(super::wrap(-1, 32), 0xffff_ffff);
        assert_eq!(super::bswap(0x1122, 2), 0x2211);
    }
}
