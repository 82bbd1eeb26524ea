//! Synthetic event sources. Firing a source runs every program attached to it.
//!
//! The hub is shared between an instance and any number of threads that
//! fire events; programs run on the firing thread against the shared maps.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use wbpf_core::btf::ArchProfile;
use wbpf_core::maps::MapRegistry;
use wbpf_core::vm::helpers::ExecEnv;
use wbpf_core::vm::{run, ExecOptions, HelperTable, VerifiedProgram, DEFAULT_BUDGET};

struct Entry {
    object: u64,
    link_id: i32,
    program: Arc<VerifiedProgram>,
    active: Arc<AtomicBool>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HubStats {
    pub fired: u64,
    pub runs: u64,
    pub traps: u64,
}

pub struct EventHub {
    maps: Arc<MapRegistry>,
    sources: RwLock<HashMap<String, Vec<Entry>>>,
    arch: ArchProfile,
    pid_tgid: u64,
    budget: u64,
    fired: AtomicU64,
    runs: AtomicU64,
    traps: AtomicU64,
}

impl EventHub {
    pub fn new(maps: Arc<MapRegistry>, arch: ArchProfile, pid_tgid: Option<u64>) -> Self {
        let pid = std::process::id() as u64;
        EventHub {
            maps,
            sources: RwLock::new(HashMap::new()),
            arch,
            pid_tgid: pid_tgid.unwrap_or(pid << 32 | pid),
            budget: DEFAULT_BUDGET,
            fired: AtomicU64::new(0),
            runs: AtomicU64::new(0),
            traps: AtomicU64::new(0),
        }
    }

    pub fn maps(&self) -> &Arc<MapRegistry> {
        &self.maps
    }

    pub fn arch(&self) -> &ArchProfile {
        &self.arch
    }

    pub fn attach(&self, source: &str, object: u64, link_id: i32, program: Arc<VerifiedProgram>) -> Arc<AtomicBool> {
        let active = Arc::new(AtomicBool::new(true));
        let entry = Entry {
            object,
            link_id,
            program,
            active: active.clone(),
        };
        self.sources
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(source.to_string())
            .or_default()
            .push(entry);
        active
    }

    pub fn detach(&self, object: u64, link_id: i32) {
        let mut sources = self.sources.write().unwrap_or_else(|e| e.into_inner());
        for entries in sources.values_mut() {
            entries.retain(|e| {
                let hit = e.object == object && e.link_id == link_id;
                if hit {
                    e.active.store(false, Ordering::Release);
                }
                !hit
            });
        }
    }

    pub fn detach_object(&self, object: u64) {
        let mut sources = self.sources.write().unwrap_or_else(|e| e.into_inner());
        for entries in sources.values_mut() {
            entries.retain(|e| {
                if e.object == object {
                    e.active.store(false, Ordering::Release);
                }
                e.object != object
            });
        }
        sources.retain(|_, v| !v.is_empty());
    }

    pub fn attached(&self, source: &str) -> usize {
        self.sources
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(source)
            .map_or(0, |v| v.len())
    }

    /// Total attachments across all sources.
    pub fn attachment_count(&self) -> usize {
        self.sources
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .values()
            .map(Vec::len)
            .sum()
    }

    /// Run every active program on `source`, each with its own copy of `ctx`.
    /// Returns how many ran; traps are counted in [`HubStats::traps`].
    pub fn trigger_event(&self, source: &str, ctx: &[u8]) -> usize {
        self.fired.fetch_add(1, Ordering::Relaxed);
        let programs: Vec<Arc<VerifiedProgram>> = {
            let sources = self.sources.read().unwrap_or_else(|e| e.into_inner());
            match sources.get(source) {
                Some(entries) => entries
                    .iter()
                    .filter(|e| e.active.load(Ordering::Acquire))
                    .map(|e| e.program.clone())
                    .collect(),
                None => return 0,
            }
        };
        let env = ExecEnv {
            maps: &self.maps,
            pid_tgid: self.pid_tgid,
        };
        let opts = ExecOptions {
            budget: self.budget,
            helpers: HelperTable::standard(),
        };
        for prog in &programs {
            let mut copy = ctx.to_vec();
            if let Err(trap) = run(prog, &mut copy, &env, &opts) {
                self.traps.fetch_add(1, Ordering::Relaxed);
                log::warn!("{source}: program {} trapped: {trap}", prog.image().name);
            }
        }
        self.runs.fetch_add(programs.len() as u64, Ordering::Relaxed);
        programs.len()
    }

    /// Fire `source` with a register frame holding `args` in the active
    /// architecture's parameter registers.
    pub fn trigger_args(&self, source: &str, args: &[u64]) -> usize {
        let frame = self.arch.build_frame(args);
        self.trigger_event(source, &frame)
    }

    pub fn stats(&self) -> HubStats {
        HubStats {
            fired: self.fired.load(Ordering::Relaxed),
            runs: self.runs.load(Ordering::Relaxed),
            traps: self.traps.load(Ordering::Relaxed),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wbpf_core::btf::ArchName;
    use wbpf_core::insn::*;
    use wbpf_core::{EbpfProgramImage, ProgType};

    fn hub() -> EventHub {
        EventHub::new(Arc::new(MapRegistry::new()), ArchProfile::builtin(ArchName::X86_64), Some(7))
    }

    fn prog(insns: Vec<Insn>) -> Arc<VerifiedProgram> {
        let image = EbpfProgramImage::new("p", "tp/x", ProgType::Tracepoint, insns);
        Arc::new(VerifiedProgram::new(image).unwrap())
    }

    fn ret0() -> Arc<VerifiedProgram> {
        prog(vec![Insn::new(BPF_ALU64 | BPF_MOV | BPF_K, 0, 0, 0, 0), Insn::new(EXIT, 0, 0, 0, 0)])
    }

    #[test]
    fn no_attachments() {
        assert_eq!(hub().trigger_event("nothing", &[]), 0);
    }

    #[test]
    fn counts_runs_and_detaches() {
        let h = hub();
        let a = h.attach("src", 1, 0, ret0());
        h.attach("src", 2, 0, ret0());
        assert_eq!(h.trigger_event("src", &[]), 2);
        h.detach_object(1);
        assert!(!a.load(Ordering::Acquire));
        assert_eq!(h.trigger_event("src", &[]), 1);
        h.detach(2, 0);
        h.detach(2, 0);
        assert_eq!(h.trigger_event("src", &[]), 0);
        assert_eq!(h.stats().runs, 3);
    }

    #[test]
    fn traps_are_counted() {
        let h = hub();
        // reads past a 0-byte context
        h.attach("src", 1, 0, prog(vec![Insn::new(BPF_LDX | BPF_MEM | BPF_DW, 0, 1, 0, 0), Insn::new(EXIT, 0, 0, 0, 0)]));
        assert_eq!(h.trigger_event("src", &[]), 1);
        assert_eq!(h.stats().traps, 1);
    }
}
