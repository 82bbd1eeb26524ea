//! Environment model, backend selection and target BTF lookup.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::btf::{parse_btf, ptregs::FRAME_STRUCT, ArchName, ArchProfile, BtfError, BtfKind, BtfTypeGraph};
use crate::elf::{ElfBpfObject, MapType, ProgType, ProgramBlob};

/// Environment variable holding extra BTF search paths (colon separated).
pub const BTF_PATH_ENV: &str = "WASM_BPF_BTF_PATH";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Os {
    Linux,
    Windows,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Feature {
    Kprobe,
    Uprobe,
    Tracepoint,
    Xdp,
    Sockops,
    Lsm,
    Ringbuf,
    PerfEvent,
}

impl Feature {
    pub const ALL: [Feature; 8] = [
        Feature::Kprobe,
        Feature::Uprobe,
        Feature::Tracepoint,
        Feature::Xdp,
        Feature::Sockops,
        Feature::Lsm,
        Feature::Ringbuf,
        Feature::PerfEvent,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Feature::Kprobe => "kprobe",
            Feature::Uprobe => "uprobe",
            Feature::Tracepoint => "tracepoint",
            Feature::Xdp => "xdp",
            Feature::Sockops => "sockops",
            Feature::Lsm => "lsm",
            Feature::Ringbuf => "ringbuf",
            Feature::PerfEvent => "perf_event",
        }
    }

    /// First Linux release with the feature.
    pub fn min_linux(&self) -> (u32, u32) {
        match self {
            Feature::Kprobe => (4, 1),
            Feature::Uprobe => (4, 3),
            Feature::PerfEvent => (4, 3),
            Feature::Tracepoint => (4, 7),
            Feature::Xdp => (4, 8),
            Feature::Sockops => (4, 13),
            Feature::Lsm => (5, 7),
            // No source pins this cutoff; 5.8 is when BPF_MAP_TYPE_RINGBUF was merged.
            Feature::Ringbuf => (5, 8),
        }
    }

    pub fn for_prog_type(t: ProgType) -> Option<Feature> {
        match t {
            ProgType::Kprobe => Some(Feature::Kprobe),
            ProgType::Uprobe => Some(Feature::Uprobe),
            ProgType::Tracepoint => Some(Feature::Tracepoint),
            ProgType::Xdp => Some(Feature::Xdp),
            ProgType::Sockops => Some(Feature::Sockops),
            ProgType::Lsm => Some(Feature::Lsm),
            ProgType::SocketFilter => None,
        }
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Feature {
    type Err = SelectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Feature::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| SelectError::BadConfig(format!("unknown feature {s:?}")))
    }
}

/// Program types eBPF for Windows hooks that are modeled here.
pub const WINDOWS_FEATURES: &[Feature] = &[Feature::Sockops];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelectError {
    #[error("bad environment profile: {0}")]
    BadConfig(String),
    #[error("no target BTF found; tried: {}", .tried.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join(", "))]
    BtfNotFound { tried: Vec<PathBuf> },
    #[error("target BTF {path}: {error}")]
    ParseError { path: PathBuf, error: BtfError },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnvironmentProfile {
    pub os: Os,
    pub kernel_version: Option<(u32, u32)>,
    pub arch: ArchName,
    pub features: BTreeSet<Feature>,
    /// Whether a kernel eBPF runtime is present at all.
    pub kernel_ebpf: bool,
    /// Whether a userspace eBPF runtime may be used as a fallback.
    pub userspace_ebpf: bool,
    pub btf_search_paths: Vec<PathBuf>,
}

fn features_for_linux(version: (u32, u32)) -> BTreeSet<Feature> {
    Feature::ALL.into_iter().filter(|f| version >= f.min_linux()).collect()
}

fn parse_version(s: &str) -> Result<(u32, u32), SelectError> {
    let bad = || SelectError::BadConfig(format!("bad kernel version {s:?}"));
    let mut parts = s.trim().split(['.', '-']);
    let major = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let minor = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    Ok((major, minor))
}

fn parse_bool(key: &str, v: &str) -> Result<bool, SelectError> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(SelectError::BadConfig(format!("{key}: expected a boolean, got {v:?}"))),
    }
}

impl EnvironmentProfile {
    /// Conservative profile: no kernel eBPF, no features.
    pub fn unknown() -> Self {
        EnvironmentProfile {
            os: Os::Other,
            kernel_version: None,
            arch: ArchName::host().unwrap_or(ArchName::X86_64),
            features: BTreeSet::new(),
            kernel_ebpf: false,
            userspace_ebpf: true,
            btf_search_paths: Vec::new(),
        }
    }

    /// Parse a `key = value` profile. Recognized keys: `os`, `kernel`,
    /// `arch`, `features` (comma list; overrides the version rules),
    /// `kernel_ebpf`, `userspace_ebpf`, `btf_path` (repeatable).
    pub fn parse(text: &str) -> Result<Self, SelectError> {
        let mut p = EnvironmentProfile::unknown();
        let mut explicit_features = None;
        let mut kernel_ebpf = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| SelectError::BadConfig(format!("line {}: expected key = value", lineno + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "os" => {
                    p.os = match v {
                        "linux" => Os::Linux,
                        "windows" => Os::Windows,
                        "other" => Os::Other,
                        _ => return Err(SelectError::BadConfig(format!("unknown os {v:?}"))),
                    }
                }
                "kernel" => p.kernel_version = Some(parse_version(v)?),
                "arch" => p.arch = v.parse().map_err(|e| SelectError::BadConfig(format!("{e}")))?,
                "features" => {
                    explicit_features = Some(
                        v.split(',')
                            .map(str::trim)
                            .filter(|s| !s.is_empty())
                            .map(str::parse)
                            .collect::<Result<BTreeSet<_>, _>>()?,
                    )
                }
                "kernel_ebpf" => kernel_ebpf = Some(parse_bool(k, v)?),
                "userspace_ebpf" => p.userspace_ebpf = parse_bool(k, v)?,
                "btf_path" => p.btf_search_paths.push(PathBuf::from(v)),
                _ => return Err(SelectError::BadConfig(format!("unknown key {k:?}"))),
            }
        }
        p.kernel_ebpf = kernel_ebpf.unwrap_or(matches!(p.os, Os::Linux | Os::Windows));
        p.features = match explicit_features {
            Some(f) => f,
            None if !p.kernel_ebpf => BTreeSet::new(),
            None => match (p.os, p.kernel_version) {
                (Os::Linux, Some(v)) => features_for_linux(v),
                (Os::Linux, None) => return Err(SelectError::BadConfig("os = linux needs a kernel version".into())),
                (Os::Windows, _) => WINDOWS_FEATURES.iter().copied().collect(),
                (Os::Other, _) => BTreeSet::new(),
            },
        };
        p.validate()?;
        Ok(p)
    }

    /// Check the feature set against the version rules.
    pub fn validate(&self) -> Result<(), SelectError> {
        if self.os == Os::Linux {
            if let Some(v) = self.kernel_version {
                for f in &self.features {
                    if v < f.min_linux() {
                        let (a, b) = f.min_linux();
                        return Err(SelectError::BadConfig(format!(
                            "feature {f} needs Linux {a}.{b}, profile has {}.{}",
                            v.0, v.1
                        )));
                    }
                }
            }
        }
        if !self.kernel_ebpf && !self.features.is_empty() {
            return Err(SelectError::BadConfig("features listed without kernel eBPF".into()));
        }
        Ok(())
    }

    pub fn platform_label(&self) -> String {
        let arch = match self.arch {
            ArchName::X86_64 => String::new(),
            other => format!(" {other}"),
        };
        match (self.os, self.kernel_version, self.kernel_ebpf) {
            (Os::Linux, Some((a, b)), true) => format!("Linux {a}.{b}{arch}"),
            (Os::Windows, _, _) => "Windows".into(),
            _ => "Userspace eBPF".into(),
        }
    }
}

/// Build a profile from a config text, or from the running host when `None`.
/// Extra search paths from [`BTF_PATH_ENV`] are appended either way.
pub fn probe_environment(config: Option<&str>) -> Result<EnvironmentProfile, SelectError> {
    let mut p = match config {
        Some(text) => EnvironmentProfile::parse(text)?,
        None => introspect(),
    };
    if let Ok(extra) = std::env::var(BTF_PATH_ENV) {
        p.btf_search_paths
            .extend(extra.split(':').filter(|s| !s.is_empty()).map(PathBuf::from));
    }
    Ok(p)
}

fn introspect() -> EnvironmentProfile {
    let mut p = EnvironmentProfile::unknown();
    if cfg!(target_os = "linux") {
        let release = std::fs::read_to_string("/proc/sys/kernel/osrelease").ok();
        if let Some(v) = release.as_deref().and_then(|r| parse_version(r).ok()) {
            p.os = Os::Linux;
            p.kernel_version = Some(v);
            p.kernel_ebpf = Path::new("/sys/fs/bpf").exists();
            if p.kernel_ebpf {
                p.features = features_for_linux(v);
            }
            if Path::new("/sys/kernel/btf/vmlinux").exists() {
                p.btf_search_paths.push("/sys/kernel/btf/vmlinux".into());
            }
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    UserspaceVm,
    /// Declared for the selection policy; never returned.
    KernelStub,
}

/// Which runtime the policy would pick if every backend were shipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Kernel,
    UserspaceFallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BackendDescriptor {
    pub kind: BackendKind,
    pub route: Route,
    pub supported_prog_types: BTreeSet<ProgType>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnsupportedReport {
    pub program: String,
    pub prog_type: ProgType,
    pub platform: String,
    pub rule: String,
}

impl fmt::Display for UnsupportedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "program {} ({}) unsupported on {}: {}", self.program, self.prog_type, self.platform, self.rule)
    }
}

/// Per-program outcome of selection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProgramVerdict {
    pub program: String,
    pub result: Result<Route, UnsupportedReport>,
    pub notes: Vec<String>,
}

/// Whether the userspace runtime can host a program: uprobes, syscall
/// tracepoints and XDP.
pub fn userspace_supports(prog: &ProgramBlob) -> bool {
    match prog.prog_type {
        ProgType::Uprobe | ProgType::Xdp => true,
        ProgType::Tracepoint => {
            let rest = prog
                .section_name
                .strip_prefix("tracepoint/")
                .or_else(|| prog.section_name.strip_prefix("tp/"));
            rest.is_some_and(|r| r.starts_with("syscalls/"))
        }
        _ => false,
    }
}

fn ring_maps_used(obj: &ElfBpfObject, prog: &ProgramBlob) -> Vec<MapType> {
    prog.map_relocs
        .iter()
        .filter_map(|(_, name)| obj.map_def(name).map(|m| m.map_type))
        .collect()
}

/// Decide how one program would run under `env`.
pub fn select_program(obj: &ElfBpfObject, prog: &ProgramBlob, env: &EnvironmentProfile) -> ProgramVerdict {
    let mut notes = Vec::new();
    let report = |rule: String| UnsupportedReport {
        program: prog.name.clone(),
        prog_type: prog.prog_type,
        platform: env.platform_label(),
        rule,
    };
    let maps = ring_maps_used(obj, prog);

    // Kernel first.
    let mut kernel_rule = None;
    if !env.kernel_ebpf {
        kernel_rule = Some("no kernel eBPF runtime".to_string());
    } else if env.os == Os::Other {
        kernel_rule = Some("unknown operating system".to_string());
    } else {
        match Feature::for_prog_type(prog.prog_type) {
            Some(f) if !env.features.contains(&f) => kernel_rule = Some(format!("kernel lacks {f} programs")),
            None if env.os != Os::Linux => kernel_rule = Some(format!("{} programs need Linux", prog.prog_type)),
            _ => {}
        }
        if kernel_rule.is_none() && maps.contains(&MapType::Ringbuf) && !env.features.contains(&Feature::Ringbuf) {
            if env.features.contains(&Feature::PerfEvent) {
                notes.push("ringbuf unavailable in kernel: perf_event fallback selected".to_string());
            } else {
                kernel_rule = Some("kernel has neither ringbuf nor perf_event".to_string());
            }
        }
        if kernel_rule.is_none() && maps.contains(&MapType::PerfEventArray) && !env.features.contains(&Feature::PerfEvent) {
            kernel_rule = Some("kernel lacks perf_event".to_string());
        }
    }
    let Some(kernel_rule) = kernel_rule else {
        return ProgramVerdict {
            program: prog.name.clone(),
            result: Ok(Route::Kernel),
            notes,
        };
    };

    // Userspace fallback.
    notes.clear();
    let result = if env.os == Os::Windows {
        Err(report(format!("{kernel_rule}; no userspace fallback on Windows")))
    } else if !env.userspace_ebpf {
        Err(report(format!("{kernel_rule}; userspace eBPF disabled")))
    } else if !userspace_supports(prog) {
        Err(report(format!(
            "{kernel_rule}; userspace eBPF hosts only uprobe, syscall tracepoint and xdp programs"
        )))
    } else {
        notes.push(format!("{kernel_rule}: using the userspace eBPF runtime"));
        Ok(Route::UserspaceFallback)
    };
    ProgramVerdict {
        program: prog.name.clone(),
        result,
        notes,
    }
}

pub fn select_programs(obj: &ElfBpfObject, env: &EnvironmentProfile) -> Vec<ProgramVerdict> {
    obj.programs.iter().map(|p| select_program(obj, p, env)).collect()
}

/// Choose a backend for the whole object: every program must be runnable.
pub fn select_backend(obj: &ElfBpfObject, env: &EnvironmentProfile) -> Result<BackendDescriptor, UnsupportedReport> {
    let verdicts = select_programs(obj, env);
    let mut notes = Vec::new();
    let mut route = Route::Kernel;
    for v in &verdicts {
        match &v.result {
            Err(r) => return Err(r.clone()),
            Ok(Route::UserspaceFallback) => route = Route::UserspaceFallback,
            Ok(Route::Kernel) => {}
        }
        for n in &v.notes {
            notes.push(format!("{}: {n}", v.program));
        }
    }
    if route == Route::Kernel {
        notes.push("kernel runtime preferred; executing on the userspace VM (the only shipped backend)".into());
    }
    if notes.iter().any(|n| n.contains("perf_event fallback")) {
        notes.push("the userspace VM provides ringbuf, so records still flow through the ring buffer".into());
    }
    Ok(BackendDescriptor {
        kind: BackendKind::UserspaceVm,
        route,
        supported_prog_types: obj.programs.iter().map(|p| p.prog_type).collect(),
        notes,
    })
}

/// Backend for the loadable subset of `obj`, plus every per-program verdict.
/// Err when no program can run.
pub fn select_loadable(
    obj: &ElfBpfObject,
    env: &EnvironmentProfile,
) -> Result<(BackendDescriptor, Vec<ProgramVerdict>), UnsupportedReport> {
    let verdicts = select_programs(obj, env);
    let mut notes = Vec::new();
    let mut route = Route::Kernel;
    let mut types = BTreeSet::new();
    let mut first_err = None;
    for (v, p) in verdicts.iter().zip(&obj.programs) {
        match &v.result {
            Ok(r) => {
                types.insert(p.prog_type);
                if *r == Route::UserspaceFallback {
                    route = Route::UserspaceFallback;
                }
                notes.extend(v.notes.iter().map(|n| format!("{}: {n}", v.program)));
            }
            Err(rep) => {
                notes.push(format!("skipped {rep}"));
                first_err.get_or_insert_with(|| rep.clone());
            }
        }
    }
    if types.is_empty() {
        return Err(first_err.expect("objects have at least one program"));
    }
    Ok((
        BackendDescriptor {
            kind: BackendKind::UserspaceVm,
            route,
            supported_prog_types: types,
            notes,
        },
        verdicts,
    ))
}

/// Whether the program reads function arguments out of the register frame.
pub fn reads_register_frame(obj: &ElfBpfObject, prog: &ProgramBlob) -> bool {
    let Some(Ok(btf)) = obj.btf() else { return false };
    prog.core_relos.iter().any(|r| {
        btf.resolved(r.type_id)
            .is_some_and(|t| t.name == FRAME_STRUCT && matches!(t.kind, BtfKind::Struct { .. }))
    })
}

/// Architecture whose register frame the object was compiled against.
pub fn compiled_arch(obj: &ElfBpfObject) -> Option<ArchName> {
    let btf = obj.btf()?.ok()?;
    ArchProfile::detect_from_btf(&btf)
}

/// Model of a native libbpf control plane on `env`: kernel only, no perf
/// fallback, no register-frame relocation.
pub fn native_supports(obj: &ElfBpfObject, env: &EnvironmentProfile) -> bool {
    if env.os != Os::Linux || !env.kernel_ebpf {
        return false;
    }
    let compile_arch = compiled_arch(obj).unwrap_or(ArchName::X86_64);
    obj.programs.iter().all(|p| {
        let type_ok = Feature::for_prog_type(p.prog_type).is_none_or(|f| env.features.contains(&f));
        let maps = ring_maps_used(obj, p);
        let ring_ok = !maps.contains(&MapType::Ringbuf) || env.features.contains(&Feature::Ringbuf);
        let arch_ok = !reads_register_frame(obj, p) || compile_arch == env.arch;
        type_ok && ring_ok && arch_ok
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetBtf {
    pub path: PathBuf,
    pub graph: BtfTypeGraph,
    pub warnings: Vec<String>,
}

/// Find the first parseable `<path>/<major>.<minor>/vmlinux.btf` (or an
/// explicit BTF file) along the search paths.
pub fn find_target_btf(env: &EnvironmentProfile) -> Result<TargetBtf, SelectError> {
    let mut tried = Vec::new();
    let mut warnings = Vec::new();
    let mut last_err = None;
    for base in &env.btf_search_paths {
        let candidate = if base.is_file() {
            base.clone()
        } else {
            match env.kernel_version {
                Some((a, b)) => base.join(format!("{a}.{b}")).join("vmlinux.btf"),
                None => base.join("vmlinux.btf"),
            }
        };
        tried.push(candidate.clone());
        let Ok(bytes) = std::fs::read(&candidate) else { continue };
        match parse_btf(&bytes) {
            Ok(graph) => {
                return Ok(TargetBtf {
                    path: candidate,
                    graph,
                    warnings,
                })
            }
            Err(e) => {
                let msg = format!("skipping {}: {e}", candidate.display());
                log::warn!("{msg}");
                warnings.push(msg);
                last_err = Some(SelectError::ParseError {
                    path: candidate,
                    error: e,
                });
            }
        }
    }
    Err(last_err.unwrap_or(SelectError::BtfNotFound { tried }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linux_55_features() {
        let p = EnvironmentProfile::parse("os = linux\nkernel = 5.5\n").unwrap();
        assert!(!p.features.contains(&Feature::Ringbuf));
        assert!(!p.features.contains(&Feature::Lsm));
        assert!(p.features.contains(&Feature::PerfEvent));
        assert!(p.kernel_ebpf);
    }

    #[test]
    fn linux_610_features() {
        let p = EnvironmentProfile::parse("os = linux\nkernel = 6.10\narch = arm64").unwrap();
        assert!(p.features.contains(&Feature::Ringbuf));
        assert!(p.features.contains(&Feature::Lsm));
        assert_eq!(p.arch, ArchName::Arm64);
        assert_eq!(p.platform_label(), "Linux 6.10 arm64");
    }

    #[test]
    fn empty_config_is_conservative() {
        let p = EnvironmentProfile::parse("").unwrap();
        assert_eq!(p.os, Os::Other);
        assert!(p.features.is_empty());
        assert!(!p.kernel_ebpf);
    }

    #[test]
    fn inconsistent_features_rejected() {
        let e = EnvironmentProfile::parse("os = linux\nkernel = 5.5\nfeatures = ringbuf").unwrap_err();
        assert!(matches!(e, SelectError::BadConfig(_)));
        assert!(EnvironmentProfile::parse("os = plan9").is_err());
        assert!(EnvironmentProfile::parse("kernel = five").is_err());
        assert!(EnvironmentProfile::parse("garbage").is_err());
    }

    #[test]
    fn windows_defaults() {
        let p = EnvironmentProfile::parse("os = windows").unwrap();
        assert_eq!(p.features, BTreeSet::from([Feature::Sockops]));
    }
}
