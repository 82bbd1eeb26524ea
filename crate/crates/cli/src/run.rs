//! `wbpf run`: one guest instance plus an optional event-script thread.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use thiserror::Error;
use wbpf_core::btf::ArchName;
use wbpf_core::oci::{self, WASM_MAGIC};
use wbpf_core::select::{probe_environment, EnvironmentProfile};
use wbpf_host::script::{parse_script, spawn_replay};
use wbpf_host::{HostConfig, RunError, WasmBpfRuntime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum BackendChoice {
    /// Prefer the kernel route; no userspace fallback.
    Kernel,
    /// Pretend no kernel eBPF is present.
    Userspace,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// A Wasm module, an OCI layout directory or an OCI layout tar.
    pub input: PathBuf,
    pub env_profile: Option<PathBuf>,
    pub arch: Option<ArchName>,
    pub backend: Option<BackendChoice>,
    pub btf_paths: Vec<PathBuf>,
    pub script: Option<PathBuf>,
    pub timeout: Option<Duration>,
    pub args: Vec<String>,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        RunConfig {
            input: input.into(),
            env_profile: None,
            arch: None,
            backend: None,
            btf_paths: Vec::new(),
            script: None,
            timeout: None,
            args: Vec::new(),
        }
    }
}

#[derive(Debug, Error)]
pub enum RunFailure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Load(String),
    #[error("{0}")]
    Trap(String),
}

impl RunFailure {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunFailure::Usage(_) => 1,
            RunFailure::Load(_) => 2,
            RunFailure::Trap(_) => 3,
        }
    }
}

/// Module bytes from a plain module or a packed layout.
pub fn read_module(path: &Path) -> Result<Vec<u8>, RunFailure> {
    if !path.is_dir() {
        let bytes = std::fs::read(path).map_err(|e| RunFailure::Usage(format!("{}: {e}", path.display())))?;
        if bytes.starts_with(WASM_MAGIC) {
            return Ok(bytes);
        }
    }
    oci::unpack(path)
        .map(|(module, _)| module)
        .map_err(|e| RunFailure::Load(format!("{}: {e}", path.display())))
}

pub fn environment(config: &RunConfig) -> Result<EnvironmentProfile, RunFailure> {
    let text = match &config.env_profile {
        Some(p) => Some(std::fs::read_to_string(p).map_err(|e| RunFailure::Usage(format!("{}: {e}", p.display())))?),
        None => None,
    };
    let mut env = probe_environment(text.as_deref()).map_err(|e| RunFailure::Usage(e.to_string()))?;
    if let Some(arch) = config.arch {
        env.arch = arch;
    }
    match config.backend {
        Some(BackendChoice::Kernel) => env.userspace_ebpf = false,
        Some(BackendChoice::Userspace) => {
            env.kernel_ebpf = false;
            env.features.clear();
            env.userspace_ebpf = true;
        }
        None => {}
    }
    let mut paths = config.btf_paths.clone();
    paths.append(&mut env.btf_search_paths);
    env.btf_search_paths = paths;
    env.validate().map_err(|e| RunFailure::Usage(e.to_string()))?;
    Ok(env)
}

/// Run a guest to completion; the result is the guest's exit status.
pub fn run(config: &RunConfig, stdout: Box<dyn Write + Send>, stderr: Box<dyn Write + Send>) -> Result<i32, RunFailure> {
    let env = environment(config)?;
    let steps = match &config.script {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| RunFailure::Usage(format!("{}: {e}", p.display())))?;
            Some(parse_script(&text).map_err(|e| RunFailure::Usage(format!("{}: {e}", p.display())))?)
        }
        None => None,
    };
    let wasm = read_module(&config.input)?;
    let rt = WasmBpfRuntime::new().map_err(|e| RunFailure::Load(e.to_string()))?;
    let mut host = HostConfig::new(env);
    let name = config
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "guest".into());
    host.args = std::iter::once(name).chain(config.args.iter().cloned()).collect();
    let mut inst = rt.load(&wasm, host, stdout, stderr).map_err(|e| RunFailure::Load(e.to_string()))?;

    let replay = steps.map(|steps| {
        let attach_wait = config.timeout.unwrap_or(Duration::from_secs(10)).min(Duration::from_secs(10));
        spawn_replay(steps, inst.hub(), inst.shutdown_flag(), attach_wait)
    });
    let result = inst.run(config.timeout);
    if let Some(handle) = replay {
        // a guest that ends early must not leave the script blocked
        inst.shutdown_flag().store(true, std::sync::atomic::Ordering::Release);
        let runs = handle.join().unwrap_or(0);
        log::info!("event script ran {runs} programs");
    }
    for w in inst.state().warnings() {
        log::warn!("{w}");
    }
    match result {
        Ok(status) => Ok(status),
        Err(e @ (RunError::GuestTrap { .. } | RunError::Timeout { .. })) => Err(RunFailure::Trap(e.to_string())),
        Err(e) => Err(RunFailure::Load(e.to_string())),
    }
}
