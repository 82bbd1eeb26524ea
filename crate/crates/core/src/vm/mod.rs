//! Userspace eBPF interpreter.
//!
//! Programs see three kinds of memory through opaque 64-bit address tokens:
//! a 512-byte stack, the context region, and regions granted by helpers
//! (map values, ring buffer reservations). Every load and store goes through
//! [`check_mem`]; anything else traps.

pub mod helpers;
pub mod verify;

use std::sync::Arc;

use thiserror::Error;

pub use helpers::{ExecEnv, HelperEnv, HelperFn, HelperTable};
pub use verify::{verify, VerifyError};

use crate::elf::EbpfProgramImage;
use crate::insn::*;
use crate::maps::{MapStore, Reservation, ValueRef};

pub const STACK_SIZE: usize = 512;
pub const DEFAULT_BUDGET: u64 = 1_000_000;

pub const STACK_BASE: u64 = 0x0000_0001_0000_0000;
pub const CTX_BASE: u64 = 0x0000_0002_0000_0000;
/// Map pointers loaded by LD_IMM64 are `MAP_BASE + handle`; they are not dereferenceable.
pub const MAP_BASE: u64 = 0x0000_0003_0000_0000;
pub const GRANT_BASE: u64 = 0x0000_0100_0000_0000;
pub const GRANT_STRIDE: u64 = 1 << 32;
/// Upper bound on live helper grants per execution.
pub const MAX_GRANTS: usize = 4096;

const GUARD_LEN: usize = 64;
const GUARD_BYTE: u8 = 0xa5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Trap {
    #[error("instruction {pc}: {access:?} of {size} bytes at {addr:#x} is out of bounds")]
    OutOfBounds { pc: usize, addr: u64, size: usize, access: Access },
    #[error("instruction budget exhausted")]
    BudgetExhausted,
    #[error("instruction {pc}: unknown helper {id}")]
    UnknownHelper { pc: usize, id: u32 },
    #[error("instruction {pc}: bad jump")]
    BadJump { pc: usize },
    #[error("instruction {pc}: helper {id} failed: {reason}")]
    HelperFault { pc: usize, id: u32, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VmError {
    #[error("verification failed: {0}")]
    Verify(#[from] VerifyError),
    #[error("trap: {0}")]
    Trap(#[from] Trap),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Access {
    Read,
    Write,
}

/// Memory handed to the program by a helper.
#[derive(Debug, Clone)]
pub enum Grant {
    MapValue { map: Arc<MapStore>, value: ValueRef, len: usize },
    Reservation { map: Arc<MapStore>, res: Reservation, live: bool },
}

impl Grant {
    fn len(&self) -> usize {
        match self {
            Grant::MapValue { len, .. } => *len,
            Grant::Reservation { res, .. } => res.len as usize,
        }
    }
}

/// Where a checked access lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Stack(usize),
    Ctx(usize),
    Grant { index: usize, offset: usize },
}

#[derive(Debug)]
pub struct VmState {
    pub regs: [u64; 11],
    /// Stack with guard bands on both sides.
    stack: Vec<u8>,
    /// Context with guard bands on both sides.
    ctx: Vec<u8>,
    ctx_len: usize,
    ctx_writable: bool,
    grants: Vec<Grant>,
    pub pc: usize,
}

fn guarded(payload: &[u8]) -> Vec<u8> {
    let mut v = vec![GUARD_BYTE; GUARD_LEN * 2 + payload.len()];
    v[GUARD_LEN..GUARD_LEN + payload.len()].copy_from_slice(payload);
    v
}

fn region_offset(addr: u64, base: u64, len: usize, size: usize) -> Option<usize> {
    let off = addr.checked_sub(base)?;
    let end = off.checked_add(size as u64)?;
    (end <= len as u64).then_some(off as usize)
}

impl VmState {
    pub fn new(ctx: &[u8], ctx_writable: bool) -> Self {
        let mut regs = [0u64; 11];
        regs[1] = CTX_BASE;
        regs[10] = STACK_BASE + STACK_SIZE as u64;
        VmState {
            regs,
            stack: guarded(&[0; STACK_SIZE]),
            ctx: guarded(ctx),
            ctx_len: ctx.len(),
            ctx_writable,
            grants: Vec::new(),
            pc: 0,
        }
    }

    pub fn ctx(&self) -> &[u8] {
        &self.ctx[GUARD_LEN..GUARD_LEN + self.ctx_len]
    }

    pub fn stack(&self) -> &[u8] {
        &self.stack[GUARD_LEN..GUARD_LEN + STACK_SIZE]
    }

    /// True while no write has landed in the guard bands around stack and context.
    pub fn guards_intact(&self) -> bool {
        let bands = |v: &[u8], len: usize| {
            v[..GUARD_LEN].iter().all(|&b| b == GUARD_BYTE)
                && v[GUARD_LEN + len..].iter().all(|&b| b == GUARD_BYTE)
        };
        bands(&self.stack, STACK_SIZE) && bands(&self.ctx, self.ctx_len)
    }

    pub fn grant(&mut self, g: Grant) -> Option<u64> {
        if self.grants.len() >= MAX_GRANTS {
            return None;
        }
        self.grants.push(g);
        Some(GRANT_BASE + (self.grants.len() as u64 - 1) * GRANT_STRIDE)
    }

    pub fn grant_at(&mut self, addr: u64) -> Option<&mut Grant> {
        let off = addr.checked_sub(GRANT_BASE)?;
        if off % GRANT_STRIDE != 0 {
            return None;
        }
        self.grants.get_mut((off / GRANT_STRIDE) as usize)
    }

    fn oob(&self, addr: u64, size: usize, access: Access) -> Trap {
        Trap::OutOfBounds {
            pc: self.pc,
            addr,
            size,
            access,
        }
    }

    pub fn read_bytes(&self, addr: u64, out: &mut [u8]) -> Result<(), Trap> {
        let size = out.len();
        match check_mem(addr, size, Access::Read, self)? {
            Location::Stack(o) => out.copy_from_slice(&self.stack[GUARD_LEN + o..GUARD_LEN + o + size]),
            Location::Ctx(o) => out.copy_from_slice(&self.ctx[GUARD_LEN + o..GUARD_LEN + o + size]),
            Location::Grant { index, offset } => {
                let ok = match &self.grants[index] {
                    Grant::MapValue { map, value, .. } => map.value_read(value, offset, out).is_ok(),
                    Grant::Reservation { map, res, .. } => map
                        .ringbuf()
                        .is_some_and(|rb| rb.read(res, offset, out).is_ok()),
                };
                if !ok {
                    return Err(self.oob(addr, size, Access::Read));
                }
            }
        }
        Ok(())
    }

    pub fn write_bytes(&mut self, addr: u64, bytes: &[u8]) -> Result<(), Trap> {
        let size = bytes.len();
        match check_mem(addr, size, Access::Write, self)? {
            Location::Stack(o) => self.stack[GUARD_LEN + o..GUARD_LEN + o + size].copy_from_slice(bytes),
            Location::Ctx(o) => self.ctx[GUARD_LEN + o..GUARD_LEN + o + size].copy_from_slice(bytes),
            Location::Grant { index, offset } => {
                let ok = match &self.grants[index] {
                    Grant::MapValue { map, value, .. } => map.value_write(value, offset, bytes).is_ok(),
                    Grant::Reservation { map, res, .. } => map
                        .ringbuf()
                        .is_some_and(|rb| rb.write(res, offset, bytes).is_ok()),
                };
                if !ok {
                    return Err(self.oob(addr, size, Access::Write));
                }
            }
        }
        Ok(())
    }

    pub fn read_vec(&self, addr: u64, len: usize) -> Result<Vec<u8>, Trap> {
        if len > 1 << 20 {
            return Err(self.oob(addr, len, Access::Read));
        }
        let mut v = vec![0; len];
        self.read_bytes(addr, &mut v)?;
        Ok(v)
    }

    fn load(&self, addr: u64, size: usize) -> Result<u64, Trap> {
        let mut b = [0u8; 8];
        self.read_bytes(addr, &mut b[..size])?;
        Ok(u64::from_le_bytes(b))
    }

    fn store(&mut self, addr: u64, size: usize, value: u64) -> Result<(), Trap> {
        self.write_bytes(addr, &value.to_le_bytes()[..size])
    }
}

/// Decide whether `[addr, addr+size)` lies wholly inside the stack, the
/// context (writes only if the program type allows it) or a live grant.
pub fn check_mem(addr: u64, size: usize, access: Access, state: &VmState) -> Result<Location, Trap> {
    let oob = || state.oob(addr, size, access);
    if size == 0 {
        return Err(oob());
    }
    if let Some(o) = region_offset(addr, STACK_BASE, STACK_SIZE, size) {
        return Ok(Location::Stack(o));
    }
    if let Some(o) = region_offset(addr, CTX_BASE, state.ctx_len, size) {
        if access == Access::Write && !state.ctx_writable {
            return Err(oob());
        }
        return Ok(Location::Ctx(o));
    }
    if addr >= GRANT_BASE {
        let rel = addr - GRANT_BASE;
        let index = (rel / GRANT_STRIDE) as usize;
        let offset = (rel % GRANT_STRIDE) as usize;
        if let Some(g) = state.grants.get(index) {
            let live = !matches!(g, Grant::Reservation { live: false, .. });
            if live && offset.checked_add(size).is_some_and(|e| e <= g.len()) {
                return Ok(Location::Grant { index, offset });
            }
        }
    }
    Err(oob())
}

fn sext(v: u64, bits: u32) -> u64 {
    let shift = 64 - bits;
    (((v << shift) as i64) >> shift) as u64
}

/// Execute one ALU or ALU64 instruction against `state.regs`.
///
/// Division by zero sets the destination to 0. Modulo by zero leaves the
/// destination unchanged, except that a 32-bit operation still clears the
/// upper half as every 32-bit operation does.
pub fn step_alu(insn: &Insn, state: &mut VmState) {
    alu(insn, &mut state.regs)
}

fn alu(insn: &Insn, regs: &mut [u64; 11]) {
    let dst = insn.dst_reg as usize;
    let is64 = insn.class() == BPF_ALU64;
    let use_reg = insn.opcode & BPF_X != 0;
    let op = insn.opcode & 0xf0;
    let signed = insn.offset == 1;

    if op == BPF_END {
        let v = regs[dst];
        let bits = insn.imm as u32;
        regs[dst] = match (is64, use_reg) {
            // to_le on a little-endian machine truncates
            (false, false) => match bits {
                16 => v as u16 as u64,
                32 => v as u32 as u64,
                _ => v,
            },
            // to_be and unconditional bswap
            _ => match bits {
                16 => (v as u16).swap_bytes() as u64,
                32 => (v as u32).swap_bytes() as u64,
                _ => v.swap_bytes(),
            },
        };
        return;
    }

    if is64 {
        let a = regs[dst];
        let b = if use_reg {
            regs[insn.src_reg as usize]
        } else {
            insn.imm as i64 as u64
        };
        regs[dst] = match op {
            BPF_ADD => a.wrapping_add(b),
            BPF_SUB => a.wrapping_sub(b),
            BPF_MUL => a.wrapping_mul(b),
            BPF_DIV if b == 0 => 0,
            BPF_DIV if signed => (a as i64).wrapping_div(b as i64) as u64,
            BPF_DIV => a / b,
            BPF_MOD if b == 0 => a,
            BPF_MOD if signed => (a as i64).wrapping_rem(b as i64) as u64,
            BPF_MOD => a % b,
            BPF_OR => a | b,
            BPF_AND => a & b,
            BPF_XOR => a ^ b,
            BPF_LSH => a.wrapping_shl(b as u32 & 63),
            BPF_RSH => a.wrapping_shr(b as u32 & 63),
            BPF_ARSH => ((a as i64) >> (b & 63)) as u64,
            BPF_NEG => (a as i64).wrapping_neg() as u64,
            BPF_MOV => match insn.offset {
                8 | 16 | 32 => sext(b, insn.offset as u32),
                _ => b,
            },
            _ => a,
        };
    } else {
        let a = regs[dst] as u32;
        let b = if use_reg {
            regs[insn.src_reg as usize] as u32
        } else {
            insn.imm as u32
        };
        let r: u32 = match op {
            BPF_ADD => a.wrapping_add(b),
            BPF_SUB => a.wrapping_sub(b),
            BPF_MUL => a.wrapping_mul(b),
            BPF_DIV if b == 0 => 0,
            BPF_DIV if signed => (a as i32).wrapping_div(b as i32) as u32,
            BPF_DIV => a / b,
            BPF_MOD if b == 0 => a,
            BPF_MOD if signed => (a as i32).wrapping_rem(b as i32) as u32,
            BPF_MOD => a % b,
            BPF_OR => a | b,
            BPF_AND => a & b,
            BPF_XOR => a ^ b,
            BPF_LSH => a.wrapping_shl(b & 31),
            BPF_RSH => a.wrapping_shr(b & 31),
            BPF_ARSH => ((a as i32) >> (b & 31)) as u32,
            BPF_NEG => (a as i32).wrapping_neg() as u32,
            BPF_MOV => match insn.offset {
                8 | 16 => sext(b as u64, insn.offset as u32) as u32,
                _ => b,
            },
            _ => a,
        };
        regs[dst] = r as u64;
    }
}

fn jump_taken(op: u8, a: u64, b: u64, is64: bool) -> bool {
    let (a, b, sa, sb) = if is64 {
        (a, b, a as i64, b as i64)
    } else {
        (a as u32 as u64, b as u32 as u64, a as i32 as i64, b as i32 as i64)
    };
    match op {
        BPF_JEQ => a == b,
        BPF_JNE => a != b,
        BPF_JGT => a > b,
        BPF_JGE => a >= b,
        BPF_JLT => a < b,
        BPF_JLE => a <= b,
        BPF_JSET => a & b != 0,
        BPF_JSGT => sa > sb,
        BPF_JSGE => sa >= sb,
        BPF_JSLT => sa < sb,
        BPF_JSLE => sa <= sb,
        _ => false,
    }
}

/// A program that passed [`verify`].
#[derive(Debug, Clone)]
pub struct VerifiedProgram {
    image: EbpfProgramImage,
}

impl VerifiedProgram {
    pub fn new(image: EbpfProgramImage) -> Result<Self, VerifyError> {
        verify(&image.insns)?;
        Ok(VerifiedProgram { image })
    }

    pub fn image(&self) -> &EbpfProgramImage {
        &self.image
    }
}

#[derive(Debug, Clone)]
pub struct ExecOptions<'a> {
    pub budget: u64,
    pub helpers: &'a HelperTable,
}

impl Default for ExecOptions<'static> {
    fn default() -> Self {
        ExecOptions {
            budget: DEFAULT_BUDGET,
            helpers: HelperTable::standard(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecOutcome {
    pub r0: u64,
    pub steps: u64,
    pub guards_intact: bool,
}

/// Verify and run `image` once. Writable contexts are copied back into `ctx`.
pub fn execute(image: &EbpfProgramImage, ctx: &mut [u8], env: &dyn HelperEnv) -> Result<u64, VmError> {
    let prog = VerifiedProgram::new(image.clone())?;
    Ok(run(&prog, ctx, env, &ExecOptions::default())?.r0)
}

/// Run a verified program. Outstanding ring reservations are discarded on
/// exit or trap so the consumer is never blocked by a dead record.
pub fn run(prog: &VerifiedProgram, ctx: &mut [u8], env: &dyn HelperEnv, opts: &ExecOptions<'_>) -> Result<ExecOutcome, Trap> {
    let mut state = VmState::new(ctx, prog.image.prog_type.ctx_writable());
    let result = interpret(&prog.image.insns, &mut state, env, opts);
    for g in &mut state.grants {
        if let Grant::Reservation { map, res, live } = g {
            if *live {
                if let Some(rb) = map.ringbuf() {
                    let _ = rb.discard(res);
                }
                *live = false;
            }
        }
    }
    let guards_intact = state.guards_intact();
    debug_assert!(guards_intact, "guard band overwritten");
    let (r0, steps) = result?;
    if state.ctx_writable {
        ctx.copy_from_slice(state.ctx());
    }
    Ok(ExecOutcome { r0, steps, guards_intact })
}

fn interpret(insns: &[Insn], state: &mut VmState, env: &dyn HelperEnv, opts: &ExecOptions<'_>) -> Result<(u64, u64), Trap> {
    let mut steps = 0u64;
    loop {
        if steps >= opts.budget {
            return Err(Trap::BudgetExhausted);
        }
        steps += 1;
        let pc = state.pc;
        let insn = *insns.get(pc).ok_or(Trap::BadJump { pc })?;
        let dst = insn.dst_reg as usize;
        let src = insn.src_reg as usize;
        let mut next = pc + 1;
        match insn.class() {
            BPF_ALU | BPF_ALU64 => alu(&insn, &mut state.regs),
            class @ (BPF_JMP | BPF_JMP32) => {
                let op = insn.opcode & 0xf0;
                let target = |off: i64| -> Result<usize, Trap> {
                    let t = pc as i64 + 1 + off;
                    if t < 0 || t as usize >= insns.len() {
                        Err(Trap::BadJump { pc })
                    } else {
                        Ok(t as usize)
                    }
                };
                match op {
                    BPF_EXIT => return Ok((state.regs[0], steps)),
                    BPF_CALL => {
                        let id = insn.imm as u32;
                        let f = opts.helpers.get(id).ok_or(Trap::UnknownHelper { pc, id })?;
                        let args = [state.regs[1], state.regs[2], state.regs[3], state.regs[4], state.regs[5]];
                        state.regs[0] = f(state, env, args)?;
                    }
                    BPF_JA if class == BPF_JMP => next = target(insn.offset as i64)?,
                    BPF_JA => next = target(insn.imm as i64)?,
                    _ => {
                        let b = if insn.opcode & BPF_X != 0 {
                            state.regs[src]
                        } else {
                            insn.imm as i64 as u64
                        };
                        if jump_taken(op, state.regs[dst], b, class == BPF_JMP) {
                            next = target(insn.offset as i64)?;
                        }
                    }
                }
            }
            BPF_LD => {
                let hi = insns.get(pc + 1).ok_or(Trap::BadJump { pc })?;
                state.regs[dst] = if insn.src_reg == PSEUDO_MAP_FD {
                    MAP_BASE + insn.imm as u32 as u64
                } else {
                    (insn.imm as u32 as u64) | ((hi.imm as u32 as u64) << 32)
                };
                next = pc + 2;
            }
            BPF_LDX => {
                let size = insn.mem_size();
                let addr = state.regs[src].wrapping_add(insn.offset as i64 as u64);
                let v = state.load(addr, size)?;
                state.regs[dst] = if insn.opcode & 0xe0 == BPF_MEMSX {
                    sext(v, size as u32 * 8)
                } else {
                    v
                };
            }
            BPF_ST => {
                let addr = state.regs[dst].wrapping_add(insn.offset as i64 as u64);
                state.store(addr, insn.mem_size(), insn.imm as i64 as u64)?;
            }
            BPF_STX => {
                let addr = state.regs[dst].wrapping_add(insn.offset as i64 as u64);
                state.store(addr, insn.mem_size(), state.regs[src])?;
            }
            _ => return Err(Trap::BadJump { pc }),
        }
        state.pc = next;
    }
}
