//! Case generators and runners shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::Rng;

use wbpf_core::btf::builder::BtfBuilder;
use wbpf_core::btf::ext::{CoreRelo, CoreReloKind};
use wbpf_core::btf::{apply_core_relocations, parse_btf, TypeId};
use wbpf_core::insn::*;
use wbpf_core::maps::ringbuf::{Polled, RingBuffer, RingError};
use wbpf_core::maps::MapRegistry;
use wbpf_core::vm::helpers::ExecEnv;
use wbpf_core::vm::{run, ExecOptions, VerifiedProgram};
use wbpf_core::{bind_maps, parse_object, EbpfProgramImage, ElfBpfObject, ProgType};

use crate::oracles::alu;
use crate::oracles::layout::{self, Ty};
use crate::oracles::ringq::{Reserve, RingQueue};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn object_bytes(name: &str) -> Vec<u8> {
    std::fs::read(fixtures().join(format!("bpf/{name}.bpf.o"))).unwrap()
}

pub fn object(name: &str) -> ElfBpfObject {
    parse_object(&object_bytes(name)).unwrap()
}

/// Create every map of `obj` in `reg` and return the bound images.
pub fn load(obj: &ElfBpfObject, reg: &MapRegistry) -> (HashMap<String, i32>, Vec<EbpfProgramImage>) {
    let handles: HashMap<String, i32> = obj
        .map_defs
        .iter()
        .map(|d| (d.name.clone(), reg.create(d.clone()).unwrap()))
        .collect();
    let images = bind_maps(obj, &handles).unwrap();
    (handles, images)
}

// ---------------------------------------------------------------- CO-RE

pub struct CoreCase {
    pub local: Ty,
    pub target: Ty,
}

fn random_scalar(rng: &mut impl Rng) -> Ty {
    Ty::Int([1, 2, 4, 8][rng.gen_range(0..4)])
}

fn random_member(rng: &mut impl Rng, nested: &mut u32) -> Ty {
    match rng.gen_range(0..6) {
        0..=2 => random_scalar(rng),
        3 | 4 => Ty::Array(Box::new(random_scalar(rng)), rng.gen_range(2..=4)),
        _ => {
            *nested += 1;
            let n = rng.gen_range(2..=3);
            let fields = (0..n).map(|i| (format!("m{i}"), random_scalar(rng))).collect();
            Ty::Struct(format!("inner{nested}"), fields)
        }
    }
}

fn reorder(ty: &Ty, rng: &mut impl Rng, pads: &mut u32, top: bool) -> Ty {
    let Ty::Struct(name, fields) = ty else { return ty.clone() };
    let mut out: Vec<(String, Ty)> = fields.iter().map(|(n, t)| (n.clone(), reorder(t, rng, pads, false))).collect();
    out.shuffle(rng);
    let inserts = if top { rng.gen_range(1..=3) } else { rng.gen_range(0..=1) };
    for _ in 0..inserts {
        *pads += 1;
        let at = rng.gen_range(0..=out.len());
        out.insert(at, (format!("pad{pads}"), random_scalar(rng)));
    }
    Ty::Struct(name.clone(), out)
}

/// A pointer-free local struct and a target layout with reordered and
/// inserted members.
pub fn random_core_case(rng: &mut impl Rng) -> CoreCase {
    let mut nested = 0;
    let n = rng.gen_range(2..=6);
    let fields = (0..n).map(|i| (format!("f{i}"), random_member(rng, &mut nested))).collect();
    let local = Ty::Struct("sample".into(), fields);
    let target = reorder(&local, rng, &mut 0, true);
    CoreCase { local, target }
}

/// Emit `ty` into `b`, laying members out at the oracle's offsets.
fn emit(b: &mut BtfBuilder, ty: &Ty, index_ty: TypeId) -> TypeId {
    match ty {
        Ty::Int(w) => b.add_int(&format!("u{}", w * 8), *w, false),
        Ty::Array(e, n) => {
            let e = emit(b, e, index_ty);
            b.add_array(e, index_ty, *n)
        }
        Ty::Struct(name, fields) => {
            let ids: Vec<TypeId> = fields.iter().map(|(_, t)| emit(b, t, index_ty)).collect();
            let members: Vec<(&str, TypeId, u32)> = fields
                .iter()
                .zip(&ids)
                .zip(ty.member_offsets())
                .map(|(((n, _), id), off)| (n.as_str(), *id, off * 8))
                .collect();
            b.add_struct(name, ty.size(), &members)
        }
    }
}

fn btf_for(ty: &Ty) -> (Vec<u8>, TypeId) {
    let mut b = BtfBuilder::new();
    let index_ty = b.add_int("int", 4, true);
    let root = emit(&mut b, ty, index_ty);
    (b.build(), root)
}

/// Member index path of `leaf` inside `ty`, as a CO-RE access spec.
fn access_spec(ty: &Ty, leaf: &layout::Leaf) -> Vec<u32> {
    let mut spec = vec![0];
    let mut cur = ty;
    for (name, elem) in leaf.names.iter().zip(&leaf.elems) {
        let Ty::Struct(_, fields) = cur else { unreachable!() };
        let idx = fields.iter().position(|(n, _)| n == name).unwrap();
        spec.push(idx as u32);
        cur = &fields[idx].1;
        if let (Some(k), Ty::Array(e, _)) = (elem, cur) {
            spec.push(*k);
            cur = e;
        }
    }
    spec
}

fn load_op(width: u32) -> u8 {
    BPF_LDX
        | BPF_MEM
        | match width {
            1 => BPF_B,
            2 => BPF_H,
            4 => BPF_W,
            _ => BPF_DW,
        }
}

/// Relocate and run one field-read program per leaf; returns the number of
/// leaves checked or the first disagreement.
pub fn check_core_case(case: &CoreCase, rng: &mut impl Rng) -> Result<usize, String> {
    let (local_blob, local_root) = btf_for(&case.local);
    let (target_blob, _) = btf_for(&case.target);
    let local_btf = parse_btf(&local_blob).map_err(|e| e.to_string())?;
    let target_btf = parse_btf(&target_blob).map_err(|e| e.to_string())?;

    // Fill every target leaf with a distinct value.
    let target_leaves = layout::leaves(&case.target);
    let mut ctx = vec![0u8; case.target.size() as usize];
    let mut placed = Vec::new();
    for (i, leaf) in target_leaves.iter().enumerate() {
        let v: u64 = (rng.gen::<u64>() << 8 | i as u64 + 1) & (u64::MAX >> (64 - leaf.width * 8));
        let at = leaf.offset as usize;
        ctx[at..at + leaf.width as usize].copy_from_slice(&v.to_le_bytes()[..leaf.width as usize]);
        placed.push(v);
    }

    let regs = MapRegistry::new();
    let env = ExecEnv::new(&regs);
    let mut checked = 0;
    for leaf in layout::leaves(&case.local) {
        let t = layout::matching_leaf(&target_leaves, &leaf).ok_or("leaf missing from target")?;
        let expected = placed[target_leaves.iter().position(|x| x == t).unwrap()];
        let insns = vec![
            Insn::new(load_op(leaf.width), 0, 1, leaf.offset as i16, 0),
            Insn::new(EXIT, 0, 0, 0, 0),
        ];
        let image = EbpfProgramImage::new("read", "tracepoint/x", ProgType::Tracepoint, insns);
        let spec = access_spec(&case.local, &leaf);
        let relo = CoreRelo {
            insn_off: 0,
            type_id: local_root,
            access_spec: spec.clone(),
            kind: CoreReloKind::FieldByteOffset,
        };
        let patched = apply_core_relocations(&image, &[relo], &local_btf, &target_btf)
            .map_err(|e| format!("{:?} {spec:?}: {e}", leaf.names))?;
        let prog = VerifiedProgram::new(patched).map_err(|e| e.to_string())?;
        let mut c = ctx.clone();
        let out = run(&prog, &mut c, &env, &ExecOptions::default()).map_err(|e| format!("{:?}: {e}", leaf.names))?;
        if out.r0 != expected {
            return Err(format!(
                "{:?}{:?}: read {:#x}, target holds {:#x} at {}",
                leaf.names, leaf.elems, out.r0, expected, t.offset
            ));
        }
        checked += 1;
    }
    Ok(checked)
}

// ---------------------------------------------------------------- ALU

const ALU_OPS: [u8; 12] = [
    BPF_ADD, BPF_SUB, BPF_MUL, BPF_DIV, BPF_OR, BPF_AND, BPF_LSH, BPF_RSH, BPF_MOD, BPF_XOR, BPF_MOV, BPF_ARSH,
];

fn interesting_imm(rng: &mut impl Rng) -> i32 {
    match rng.gen_range(0..6) {
        0 => 0,
        1 => -1,
        2 => i32::MIN,
        3 => rng.gen_range(-64..64),
        _ => rng.gen(),
    }
}

fn interesting_u64(rng: &mut impl Rng) -> u64 {
    match rng.gen_range(0..6) {
        0 => 0,
        1 => u64::MAX,
        2 => 1 << 63,
        3 => 0x8000_0000,
        4 => rng.gen_range(0..64),
        _ => rng.gen(),
    }
}

fn random_alu_insn(rng: &mut impl Rng) -> Insn {
    let class = if rng.gen_bool(0.5) { BPF_ALU64 } else { BPF_ALU };
    let dst = rng.gen_range(0..10);
    let src = rng.gen_range(0..10);
    match rng.gen_range(0..20) {
        0 => Insn::new(class | BPF_NEG, dst, 0, 0, 0),
        1 => {
            let width = [16, 32, 64][rng.gen_range(0..3)];
            if class == BPF_ALU64 {
                Insn::new(BPF_ALU64 | BPF_END, dst, 0, 0, width)
            } else {
                let to_be = if rng.gen_bool(0.5) { BPF_X } else { BPF_K };
                Insn::new(BPF_ALU | BPF_END | to_be, dst, 0, 0, width)
            }
        }
        2 => {
            let widths: &[i16] = if class == BPF_ALU64 { &[8, 16, 32] } else { &[8, 16] };
            Insn::new(class | BPF_MOV | BPF_X, dst, src, widths[rng.gen_range(0..widths.len())], 0)
        }
        3 | 4 => {
            // signed division and modulo
            let op = if rng.gen_bool(0.5) { BPF_DIV } else { BPF_MOD };
            if rng.gen_bool(0.5) {
                Insn::new(class | op | BPF_X, dst, src, 1, 0)
            } else {
                Insn::new(class | op | BPF_K, dst, 0, 1, interesting_imm(rng))
            }
        }
        _ => {
            let op = ALU_OPS[rng.gen_range(0..ALU_OPS.len())];
            if rng.gen_bool(0.5) {
                Insn::new(class | op | BPF_X, dst, src, 0, 0)
            } else {
                Insn::new(class | op | BPF_K, dst, 0, 0, interesting_imm(rng))
            }
        }
    }
}

/// Straight-line program of at most `max_len` slots: LD_IMM64 of r0..r9,
/// random ALU instructions, EXIT.
pub fn random_alu_program(rng: &mut impl Rng, max_len: usize) -> Vec<Insn> {
    let mut insns = Vec::new();
    for r in 0..10 {
        let v = interesting_u64(rng);
        insns.push(Insn::new(LD_IMM64, r, 0, 0, v as u32 as i32));
        insns.push(Insn::new(0, 0, 0, 0, (v >> 32) as u32 as i32));
    }
    let body = rng.gen_range(1..=max_len - insns.len() - 1);
    insns.extend((0..body).map(|_| random_alu_insn(rng)));
    insns.push(Insn::new(EXIT, 0, 0, 0, 0));
    insns
}

/// Run on the interpreter and the reference evaluator; Err describes a mismatch.
pub fn check_alu_program(insns: &[Insn]) -> Result<u64, String> {
    let code = encode_instructions(insns);
    let expected = alu::eval(&code, [0; 11]);
    let image = EbpfProgramImage::new("alu", "socket", ProgType::SocketFilter, insns.to_vec());
    let prog = VerifiedProgram::new(image).map_err(|e| e.to_string())?;
    let regs = MapRegistry::new();
    let out = run(&prog, &mut [], &ExecEnv::new(&regs), &ExecOptions::default()).map_err(|e| e.to_string())?;
    if !out.guards_intact {
        return Err(format!("guard band overwritten by {insns:?}"));
    }
    let got = out.r0;
    if got == expected {
        Ok(got)
    } else {
        Err(format!("vm {got:#x} != reference {expected:#x} for {insns:?}"))
    }
}

// ---------------------------------------------------------------- ring buffer

/// Replay `ops` random operations against the ring and the queue model.
pub fn ring_model_replay(rng: &mut impl Rng, ops: usize, size: u32) -> Result<(), String> {
    let rb = RingBuffer::new(size).map_err(|e| e.to_string())?;
    let mut model = RingQueue::new(size as u64);
    // model id -> ring reservation
    let mut live = Vec::new();
    for step in 0..ops {
        let fail = |what: String| format!("step {step}: {what}");
        match rng.gen_range(0..10) {
            0..=3 => {
                let len = match rng.gen_range(0..10) {
                    0 => 0,
                    1 => rng.gen_range(size - 16..=size),
                    _ => rng.gen_range(1..=size / 4),
                };
                let payload: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
                let got = rb.reserve(len);
                match (model.reserve(payload.clone()), got) {
                    (Reserve::Ok(id), Ok(res)) => {
                        rb.write(&res, 0, &payload).map_err(|e| fail(e.to_string()))?;
                        live.push((id, res));
                    }
                    (Reserve::ZeroLength, Err(RingError::ZeroLength))
                    | (Reserve::TooLarge, Err(RingError::TooLarge))
                    | (Reserve::Full, Err(RingError::Busy)) => {}
                    (m, r) => return Err(fail(format!("reserve {len}: model {m:?}, ring {r:?}"))),
                }
            }
            4..=6 if !live.is_empty() => {
                let (id, res) = live.swap_remove(rng.gen_range(0..live.len()));
                let discard = rng.gen_bool(0.3);
                let r = if discard { rb.discard(&res) } else { rb.submit(&res) };
                if !model.commit(id, discard) || r.is_err() {
                    return Err(fail(format!("commit {id}: {r:?}")));
                }
            }
            7 if !live.is_empty() => {
                // committing twice must fail without changing state
                let (id, res) = live[rng.gen_range(0..live.len())];
                rb.submit(&res).map_err(|e| fail(e.to_string()))?;
                model.commit(id, false);
                live.retain(|(i, _)| *i != id);
                if rb.submit(&res) != Err(RingError::DoubleSubmit) {
                    return Err(fail("double submit accepted".into()));
                }
            }
            _ => {
                let expected = model.consume();
                let got = match rb.poll_one(|p| p.to_vec()) {
                    Polled::Empty => None,
                    Polled::Record(v) => Some(v),
                };
                if got != expected {
                    return Err(fail(format!("consume: model {expected:?}, ring {got:?}")));
                }
            }
        }
        let stats = rb.stats();
        if stats.producer_pos - stats.consumer_pos != model.used() || stats.outstanding != model.outstanding().len() {
            return Err(fail(format!("accounting: ring {stats:?}, model used {}", model.used())));
        }
    }
    Ok(())
}

/// One producer thread, one consumer thread, `n` records carrying their
/// sequence number. Returns the number delivered.
pub fn ring_spsc_stress(n: u64) -> Result<u64, String> {
    use std::sync::Arc;
    use std::time::Duration;
    let rb = Arc::new(RingBuffer::new(1 << 14).unwrap());
    let producer = {
        let rb = rb.clone();
        std::thread::spawn(move || {
            for seq in 0..n {
                let len = 8 + (seq % 5) as usize * 8;
                let mut payload = vec![(seq % 251) as u8; len];
                payload[..8].copy_from_slice(&seq.to_le_bytes());
                while rb.output(&payload).is_err() {
                    std::thread::yield_now();
                }
            }
        })
    };
    let mut next = 0u64;
    let deadline = std::time::Instant::now() + Duration::from_secs(30);
    while next < n {
        if std::time::Instant::now() > deadline {
            return Err(format!("timed out after {next} records"));
        }
        rb.wait(Duration::from_millis(10));
        let mut err = None;
        rb.consume(|rec| {
            let seq = u64::from_le_bytes(rec[..8].try_into().unwrap());
            let ok = seq == next && rec.len() == 8 + (seq % 5) as usize * 8 && rec[8..].iter().all(|&b| b == (seq % 251) as u8);
            if !ok && err.is_none() {
                err = Some(format!("expected record {next}, got {seq} ({} bytes)", rec.len()));
            }
            next += 1;
            wbpf_core::maps::ringbuf::ConsumeAction::Continue
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    producer.join().map_err(|_| "producer panicked".to_string())?;
    if rb.poll_one(|_| ()) != Polled::Empty {
        return Err("extra records after the last one".into());
    }
    Ok(next)
}

// ---------------------------------------------------------------- robustness

/// One structured mutation of `base`: bit flips, interesting bytes, splices,
/// truncation or extension.
pub fn mutate(rng: &mut impl Rng, base: &[u8]) -> Vec<u8> {
    let mut v = base.to_vec();
    for _ in 0..rng.gen_range(1..=4) {
        if v.is_empty() {
            v.extend((0..rng.gen_range(1..64)).map(|_| rng.gen::<u8>()));
            continue;
        }
        let at = rng.gen_range(0..v.len());
        match rng.gen_range(0..7) {
            0 => v[at] ^= 1 << rng.gen_range(0..8),
            1 => v[at] = [0, 0xff, 0x7f, 0x80, 1][rng.gen_range(0..5)],
            2 => {
                // overwrite a little-endian word, where lengths and offsets live
                let w: u32 = [0, u32::MAX, 0x8000_0000, rng.gen(), rng.gen_range(0..256)][rng.gen_range(0..5)];
                let end = (at + 4).min(v.len());
                v[at..end].copy_from_slice(&w.to_le_bytes()[..end - at]);
            }
            3 => v.truncate(at),
            4 => v.extend((0..rng.gen_range(1..32)).map(|_| rng.gen::<u8>())),
            5 => {
                let from = rng.gen_range(0..v.len());
                let len = rng.gen_range(0..=(v.len() - from).min(64));
                let chunk = v[from..from + len].to_vec();
                let end = (at + len).min(v.len());
                v[at..end].copy_from_slice(&chunk[..end - at]);
            }
            _ => v = (0..rng.gen_range(0..256)).map(|_| rng.gen()).collect(),
        }
    }
    v
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CampaignStats {
    pub accepted: usize,
    pub rejected: usize,
}

/// Feed `iters` mutated inputs to `parse`. Fails on a panic or on any single
/// input taking longer than `per_input`.
pub fn parser_campaign<T, E: std::fmt::Display>(
    seeds: &[Vec<u8>],
    iters: usize,
    seed: u64,
    per_input: std::time::Duration,
    parse: impl Fn(&[u8]) -> Result<T, E>,
) -> Result<CampaignStats, String> {
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut stats = CampaignStats::default();
    for i in 0..iters {
        let input = mutate(&mut rng, &seeds[i % seeds.len()]);
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| parse(&input).is_ok()))
            .map_err(|_| format!("input {i} panicked: {}", hex::encode(&input)))?;
        if start.elapsed() > per_input {
            return Err(format!("input {i} took {:?}", start.elapsed()));
        }
        if outcome {
            stats.accepted += 1;
        } else {
            stats.rejected += 1;
        }
    }
    Ok(stats)
}

pub fn btf_seeds() -> Vec<Vec<u8>> {
    ["5.5", "6.10", "notgid"]
        .iter()
        .map(|d| std::fs::read(fixtures().join(format!("btf/{d}/vmlinux.btf"))).unwrap())
        .collect()
}

pub fn object_seeds() -> Vec<Vec<u8>> {
    ["bootstrap", "core", "kprobe", "maps", "globals", "xdp"].iter().map(|n| object_bytes(n)).collect()
}

/// parse_btf, then resolve the size and name of every type; resolution has
/// to terminate on cyclic chains too.
pub fn parse_btf_deep(bytes: &[u8]) -> Result<usize, wbpf_core::btf::BtfError> {
    let graph = parse_btf(bytes)?;
    let ids: Vec<TypeId> = graph.types().map(|(id, _)| id).collect();
    for &id in &ids {
        let _ = graph.size_of(id);
        let _ = graph.display_name(id);
    }
    Ok(ids.len())
}
