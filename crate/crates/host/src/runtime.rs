//! Wasm engine, per-instance host state and the instance lifecycle.

use std::collections::VecDeque;
use std::fmt;
use std::io::Write;
use std::sync::atomic::AtomicBool;
use std::sync::{mpsc, Arc};
use std::time::{Duration, Instant};

use thiserror::Error;
use wasmtime::{Config, Engine, Extern, Linker, Memory, Module, Store, Table, Trap, WasmParams, WasmResults};
use wbpf_core::btf::{ArchProfile, BtfTypeGraph};
use wbpf_core::maps::{MapRegistry, MapStore};
use wbpf_core::select::{find_target_btf, EnvironmentProfile};

use crate::abi;
use crate::error::HostError;
use crate::events::EventHub;
use crate::guest::CopyStats;
use crate::object::HandleTable;
use crate::wasi::{self, GuestExit, WasiCtx};

/// One ABI call as seen by the host, for trap reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbiCall {
    pub func: &'static str,
    args: [i64; 7],
    nargs: u8,
    pub ret: i64,
}

impl AbiCall {
    pub fn new(func: &'static str, a: &[i64], ret: i64) -> Self {
        let mut args = [0; 7];
        args[..a.len()].copy_from_slice(a);
        AbiCall {
            func,
            args,
            nargs: a.len() as u8,
            ret,
        }
    }

    pub fn args(&self) -> &[i64] {
        &self.args[..self.nargs as usize]
    }
}

impl fmt::Display for AbiCall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args().iter().map(|a| a.to_string()).collect();
        write!(f, "{}({}) = {}", self.func, args.join(", "), self.ret)
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("invalid module: {0}")]
    ModuleInvalid(String),
    #[error("module imports unknown host function {module}::{name}")]
    MissingImport { module: String, name: String },
    #[error("guest exports no linear memory named \"memory\"")]
    NoMemory,
    #[error("guest exports no `{0}` function")]
    NoEntryPoint(String),
    #[error("export `{name}` has an unexpected signature: {message}")]
    BadSignature { name: String, message: String },
    #[error("guest trapped: {message}{}", fmt_trace(.trace))]
    GuestTrap { message: String, trace: Vec<AbiCall> },
    #[error("guest exited with status {0}")]
    Exited(i32),
    #[error("guest did not finish within the timeout{}", fmt_trace(.trace))]
    Timeout { trace: Vec<AbiCall> },
}

fn fmt_trace(trace: &[AbiCall]) -> String {
    if trace.is_empty() {
        return String::new();
    }
    let mut s = String::from("\nlast ABI calls:");
    for c in trace {
        s.push_str(&format!("\n  {c}"));
    }
    s
}

/// Settings fixed for the lifetime of an instance.
#[derive(Debug, Clone)]
pub struct HostConfig {
    pub env: EnvironmentProfile,
    /// Target kernel types; searched on `env.btf_search_paths` when `None`.
    pub target_btf: Option<BtfTypeGraph>,
    pub pid_tgid: Option<u64>,
    pub args: Vec<String>,
    pub trace_capacity: usize,
}

impl HostConfig {
    pub fn new(env: EnvironmentProfile) -> Self {
        HostConfig {
            env,
            target_btf: None,
            pid_tgid: None,
            args: vec!["guest".into()],
            trace_capacity: 32,
        }
    }
}

pub struct HostState {
    pub(crate) env: EnvironmentProfile,
    pub(crate) target_btf: Option<BtfTypeGraph>,
    btf_searched: bool,
    pub(crate) handles: HandleTable,
    pub(crate) maps: Arc<MapRegistry>,
    /// Map handle to store for this instance's live objects, so the ABI
    /// path skips the shared registry lock.
    pub(crate) map_table: Vec<Option<Arc<MapStore>>>,
    pub(crate) hub: Arc<EventHub>,
    pub(crate) last_error: Option<HostError>,
    pub(crate) dropped_records: u64,
    trace: VecDeque<AbiCall>,
    trace_capacity: usize,
    pub(crate) copies: CopyStats,
    pub(crate) shutdown: Arc<AtomicBool>,
    pub(crate) deadline: Option<Instant>,
    pub(crate) memory: Option<Memory>,
    pub(crate) table: Option<Table>,
    pub(crate) wasi: WasiCtx,
    pub(crate) warnings: Vec<String>,
}

impl HostState {
    fn new(config: HostConfig, stdout: Box<dyn Write + Send>, stderr: Box<dyn Write + Send>) -> Self {
        let maps = Arc::new(MapRegistry::new());
        let hub = Arc::new(EventHub::new(
            maps.clone(),
            ArchProfile::builtin(config.env.arch),
            config.pid_tgid,
        ));
        let btf_searched = config.target_btf.is_some();
        HostState {
            env: config.env,
            target_btf: config.target_btf,
            btf_searched,
            handles: HandleTable::default(),
            maps,
            map_table: Vec::new(),
            hub,
            last_error: None,
            dropped_records: 0,
            trace: VecDeque::new(),
            trace_capacity: config.trace_capacity,
            copies: CopyStats::default(),
            shutdown: Arc::new(AtomicBool::new(false)),
            deadline: None,
            memory: None,
            table: None,
            wasi: WasiCtx::new(config.args, stdout, stderr),
            warnings: Vec::new(),
        }
    }

    pub(crate) fn map(&self, handle: i32) -> Option<&Arc<MapStore>> {
        crate::abi::map_slot(&self.map_table, handle)
    }

    pub(crate) fn set_map(&mut self, handle: i32, store: Option<Arc<MapStore>>) {
        let Ok(i) = usize::try_from(handle) else { return };
        if i >= self.map_table.len() {
            self.map_table.resize(i + 1, None);
        }
        self.map_table[i] = store;
    }

    pub(crate) fn record(&mut self, call: AbiCall) {
        if self.trace_capacity == 0 {
            return;
        }
        if self.trace.len() == self.trace_capacity {
            self.trace.pop_front();
        }
        self.trace.push_back(call);
    }

    pub(crate) fn fail(&mut self, e: HostError) -> i32 {
        let code = e.code();
        log::debug!("ABI error {code}: {e}");
        self.last_error = Some(e);
        code
    }

    /// Search for target BTF once; later loads reuse the outcome.
    pub(crate) fn ensure_target_btf(&mut self) {
        if self.btf_searched {
            return;
        }
        self.btf_searched = true;
        if self.env.btf_search_paths.is_empty() {
            return;
        }
        match find_target_btf(&self.env) {
            Ok(t) => {
                self.warnings.extend(t.warnings);
                self.target_btf = Some(t.graph);
            }
            Err(e) => self.warnings.push(e.to_string()),
        }
    }

    pub fn handles(&self) -> &HandleTable {
        &self.handles
    }

    pub fn maps(&self) -> &Arc<MapRegistry> {
        &self.maps
    }

    pub fn hub(&self) -> &Arc<EventHub> {
        &self.hub
    }

    pub fn env(&self) -> &EnvironmentProfile {
        &self.env
    }

    /// Detail for the most recent failing ABI call.
    pub fn last_error(&self) -> Option<&HostError> {
        self.last_error.as_ref()
    }

    /// Records skipped by buffer polling because they did not fit.
    pub fn dropped_records(&self) -> u64 {
        self.dropped_records
    }

    pub fn abi_trace(&self) -> Vec<AbiCall> {
        self.trace.iter().copied().collect()
    }

    pub fn copy_stats(&self) -> CopyStats {
        self.copies
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Engine plus a linker with the `wasm_bpf` and WASI functions defined.
#[derive(Clone)]
pub struct WasmBpfRuntime {
    engine: Engine,
    linker: Arc<Linker<HostState>>,
}

impl WasmBpfRuntime {
    pub fn new() -> Result<Self, RunError> {
        let mut config = Config::new();
        config.epoch_interruption(true);
        let engine = Engine::new(&config).map_err(|e| RunError::ModuleInvalid(e.to_string()))?;
        let mut linker = Linker::new(&engine);
        abi::add_to_linker(&mut linker).map_err(|e| RunError::ModuleInvalid(e.to_string()))?;
        wasi::add_to_linker(&mut linker).map_err(|e| RunError::ModuleInvalid(e.to_string()))?;
        Ok(WasmBpfRuntime {
            engine,
            linker: Arc::new(linker),
        })
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    /// Compile `wasm` and check that it imports only known host functions.
    pub fn compile(&self, wasm: &[u8]) -> Result<Module, RunError> {
        let module = Module::new(&self.engine, wasm).map_err(|e| RunError::ModuleInvalid(format!("{e:#}")))?;
        for import in module.imports() {
            let known = match import.module() {
                abi::MODULE => abi::FUNCTIONS.contains(&import.name()),
                wasi::MODULE => wasi::FUNCTIONS.contains(&import.name()),
                _ => false,
            };
            if !known {
                return Err(RunError::MissingImport {
                    module: import.module().to_string(),
                    name: import.name().to_string(),
                });
            }
        }
        Ok(module)
    }

    pub fn instantiate(
        &self,
        module: &Module,
        config: HostConfig,
        stdout: Box<dyn Write + Send>,
        stderr: Box<dyn Write + Send>,
    ) -> Result<Instance, RunError> {
        let mut store = Store::new(&self.engine, HostState::new(config, stdout, stderr));
        store.set_epoch_deadline(u64::MAX / 2);
        let instance = self
            .linker
            .instantiate(&mut store, module)
            .map_err(|e| RunError::ModuleInvalid(format!("{e:#}")))?;
        let memory = instance.get_memory(&mut store, "memory").ok_or(RunError::NoMemory)?;
        let table = instance.get_table(&mut store, "__indirect_function_table").or_else(|| {
            instance.exports(&mut store).find_map(|e| match e.into_extern() {
                Extern::Table(t) => Some(t),
                _ => None,
            })
        });
        store.data_mut().memory = Some(memory);
        store.data_mut().table = table;
        Ok(Instance {
            store,
            instance,
            engine: self.engine.clone(),
        })
    }

    /// Compile and instantiate in one step.
    pub fn load(
        &self,
        wasm: &[u8],
        config: HostConfig,
        stdout: Box<dyn Write + Send>,
        stderr: Box<dyn Write + Send>,
    ) -> Result<Instance, RunError> {
        let module = self.compile(wasm)?;
        self.instantiate(&module, config, stdout, stderr)
    }
}

pub struct Instance {
    store: Store<HostState>,
    instance: wasmtime::Instance,
    engine: Engine,
}

impl Instance {
    pub fn state(&self) -> &HostState {
        self.store.data()
    }

    pub fn state_mut(&mut self) -> &mut HostState {
        self.store.data_mut()
    }

    pub fn hub(&self) -> Arc<EventHub> {
        self.store.data().hub.clone()
    }

    /// Set to make polls with no pending records return `E_INTERRUPTED`.
    pub fn shutdown_flag(&self) -> Arc<AtomicBool> {
        self.store.data().shutdown.clone()
    }

    pub fn memory(&self) -> &[u8] {
        let mem = self.store.data().memory.expect("instantiated with memory");
        mem.data(&self.store)
    }

    pub fn memory_mut(&mut self) -> &mut [u8] {
        let mem = self.store.data().memory.expect("instantiated with memory");
        mem.data_mut(&mut self.store)
    }

    fn classify(&self, err: wasmtime::Error) -> RunError {
        if let Some(exit) = err.downcast_ref::<GuestExit>() {
            return RunError::Exited(exit.0);
        }
        let trace = self.store.data().abi_trace();
        if matches!(err.downcast_ref::<Trap>(), Some(Trap::Interrupt)) {
            return RunError::Timeout { trace };
        }
        RunError::GuestTrap {
            message: format!("{err:#}"),
            trace,
        }
    }

    /// Call an exported function, with an optional wall-clock limit.
    pub fn call<P: WasmParams, R: WasmResults>(
        &mut self,
        name: &str,
        params: P,
        timeout: Option<Duration>,
    ) -> Result<R, RunError> {
        let func = self
            .instance
            .get_func(&mut self.store, name)
            .ok_or_else(|| RunError::NoEntryPoint(name.to_string()))?
            .typed::<P, R>(&self.store)
            .map_err(|e| RunError::BadSignature {
                name: name.to_string(),
                message: format!("{e:#}"),
            })?;
        let cancel = timeout.map(|t| {
            self.store.data_mut().deadline = Some(Instant::now() + t);
            self.store.set_epoch_deadline(1);
            let (tx, rx) = mpsc::channel::<()>();
            let engine = self.engine.clone();
            std::thread::spawn(move || {
                if rx.recv_timeout(t) == Err(mpsc::RecvTimeoutError::Timeout) {
                    engine.increment_epoch();
                }
            });
            tx
        });
        let result = func.call(&mut self.store, params);
        if let Some(tx) = cancel {
            let _ = tx.send(());
            self.store.data_mut().deadline = None;
            self.store.set_epoch_deadline(u64::MAX / 2);
        }
        result.map_err(|e| self.classify(e))
    }

    /// Run `_start`; the result is the guest's exit status.
    pub fn run(&mut self, timeout: Option<Duration>) -> Result<i32, RunError> {
        let result = self.call::<(), ()>("_start", (), timeout);
        let status = match result {
            Ok(()) => Ok(0),
            Err(RunError::Exited(code)) => Ok(code),
            Err(e) => Err(e),
        };
        let _ = self.store.data_mut().wasi.stdout.flush();
        status
    }
}
