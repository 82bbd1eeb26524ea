//! Micro-benchmarks: guest-through-ABI paths against host-direct baselines,
//! start-up latency and artifact sizes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;
use wbpf_core::maps::ringbuf::Polled;
use wbpf_core::maps::MapStore;
use wbpf_core::oci::{self, OciMetadata, CONTAINER_BASELINE_BYTES};
use wbpf_core::parse_object;
use wbpf_core::select::EnvironmentProfile;
use wbpf_host::{HostConfig, Instance, WasmBpfRuntime};

/// Reference figures, average ns per operation: (wasm, native).
pub const REFERENCE_MAP_ACCESS_NS: (f64, f64) = (1885.26, 1117.43);
pub const REFERENCE_RINGBUF_NS: (f64, f64) = (3186.83, 1509.18);
/// Start-up seconds: (lightweight Wasm container, Docker).
pub const REFERENCE_STARTUP_S: (f64, f64) = (0.176, 0.656);

/// Ring records per timed drain.
const RING_BATCH: usize = 64;
/// Map round trips (update + lookup) per timed sample.
const MAP_BATCH: i32 = 50;
const EVENT_BYTES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    MapAccess,
    RingbufPoll,
    Startup,
    Sizes,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::MapAccess, Suite::RingbufPoll, Suite::Startup, Suite::Sizes];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::MapAccess => "map_access",
            Suite::RingbufPoll => "ringbuf_poll",
            Suite::Startup => "startup",
            Suite::Sizes => "sizes",
        }
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("fixture missing: {0}")]
    FixtureMissing(PathBuf),
    #[error("{0}")]
    Setup(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimingRow {
    pub suite: Suite,
    pub name: String,
    /// Operations measured.
    pub iterations: u64,
    pub mean_ns: f64,
    pub p50_ns: f64,
    pub p99_ns: f64,
    /// mean / baseline mean for the suite.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeRow {
    pub name: String,
    pub kind: String,
    pub bytes: u64,
    pub baseline_bytes: u64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StartupReport {
    pub runs: u64,
    pub instantiate_ms: f64,
    pub load_attach_ms: f64,
    pub total_ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<TimingRow>,
    pub startup: Option<StartupReport>,
    pub sizes: Vec<SizeRow>,
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub fixtures: PathBuf,
    /// Timed samples per micro-benchmark.
    pub samples: usize,
    pub startup_runs: usize,
}

impl BenchOptions {
    pub fn new(fixtures: impl Into<PathBuf>) -> Self {
        BenchOptions {
            fixtures: fixtures.into(),
            samples: 2000,
            startup_runs: 5,
        }
    }
}

/// Mean, p50 and p99 of per-operation samples.
pub fn summarize(samples: &mut [f64]) -> (f64, f64, f64) {
    samples.sort_by(|a, b| a.total_cmp(b));
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    let pick = |q: f64| samples[((n as f64 * q).ceil() as usize).clamp(1, n) - 1];
    (mean, pick(0.5), pick(0.99))
}

fn read(path: PathBuf) -> Result<Vec<u8>, BenchError> {
    std::fs::read(&path).map_err(|_| BenchError::FixtureMissing(path))
}

fn profile() -> EnvironmentProfile {
    EnvironmentProfile::parse("os = linux\nkernel = 6.10\narch = x86_64\n").expect("built-in profile")
}

fn instance(rt: &WasmBpfRuntime, wasm: &[u8]) -> Result<Instance, BenchError> {
    rt.load(wasm, HostConfig::new(profile()), Box::new(std::io::sink()), Box::new(std::io::sink()))
        .map_err(|e| BenchError::Setup(e.to_string()))
}

fn setup(inst: &mut Instance) -> Result<(), BenchError> {
    let r: i32 = inst.call("setup", (), None).map_err(|e| BenchError::Setup(e.to_string()))?;
    if r < 0 {
        return Err(BenchError::Setup(format!("guest setup returned {r}")));
    }
    Ok(())
}

fn pair(suite: Suite, names: [&str; 2], mut wasm: Vec<f64>, mut native: Vec<f64>, ops: u64) -> Vec<TimingRow> {
    let (wm, w50, w99) = summarize(&mut wasm);
    let (nm, n50, n99) = summarize(&mut native);
    vec![
        TimingRow {
            suite,
            name: names[0].into(),
            iterations: ops,
            mean_ns: wm,
            p50_ns: w50,
            p99_ns: w99,
            ratio: wm / nm,
        },
        TimingRow {
            suite,
            name: names[1].into(),
            iterations: ops,
            mean_ns: nm,
            p50_ns: n50,
            p99_ns: n99,
            ratio: 1.0,
        },
    ]
}

/// Guest `map_roundtrip` through `wasm_bpf_map_operate` against the same
/// update + lookup issued on the map store directly.
pub fn map_access(opts: &BenchOptions) -> Result<Vec<TimingRow>, BenchError> {
    let wasm = read(opts.fixtures.join("guests/maps.wasm"))?;
    let rt = WasmBpfRuntime::new().map_err(|e| BenchError::Setup(e.to_string()))?;
    let mut inst = instance(&rt, &wasm)?;
    setup(&mut inst)?;
    let obj = parse_object(&read(opts.fixtures.join("bpf/maps.bpf.o"))?).map_err(|e| BenchError::Setup(e.to_string()))?;
    let def = obj.map_def("counts").cloned().ok_or_else(|| BenchError::Setup("no counts map".into()))?;
    let store = MapStore::new(1, def).map_err(|e| BenchError::Setup(e.to_string()))?;

    let ops_per_sample = 2.0 * MAP_BATCH as f64;
    let warm = |inst: &mut Instance| inst.call::<(i32,), i64>("map_roundtrip", (MAP_BATCH,), None);
    for _ in 0..20 {
        warm(&mut inst).map_err(|e| BenchError::Setup(e.to_string()))?;
    }
    let mut guest = Vec::with_capacity(opts.samples);
    let mut native = Vec::with_capacity(opts.samples);
    let key = 42u32.to_le_bytes();
    let mut out = [0u8; 8];
    for _ in 0..opts.samples {
        let t = Instant::now();
        let r = warm(&mut inst).map_err(|e| BenchError::Setup(e.to_string()))?;
        guest.push(t.elapsed().as_nanos() as f64 / ops_per_sample);
        if r < 0 {
            return Err(BenchError::Setup(format!("map_roundtrip returned {r}")));
        }

        let t = Instant::now();
        for i in 0..MAP_BATCH as u64 {
            store.update(&key, &i.to_le_bytes(), 0).map_err(|e| BenchError::Setup(e.to_string()))?;
            store.lookup(&key, &mut out).map_err(|e| BenchError::Setup(e.to_string()))?;
        }
        std::hint::black_box(&out);
        native.push(t.elapsed().as_nanos() as f64 / ops_per_sample);
    }
    let ops = (opts.samples as f64 * ops_per_sample) as u64;
    Ok(pair(Suite::MapAccess, ["wasm", "native-baseline"], guest, native, ops))
}

/// Per-record delivery: guest callback via `wasm_bpf_buffer_poll` against a
/// host consumer copying each record out of the same ring.
pub fn ringbuf_poll(opts: &BenchOptions) -> Result<Vec<TimingRow>, BenchError> {
    let wasm = read(opts.fixtures.join("guests/bootstrap.wasm"))?;
    let rt = WasmBpfRuntime::new().map_err(|e| BenchError::Setup(e.to_string()))?;
    let mut inst = instance(&rt, &wasm)?;
    setup(&mut inst)?;
    let handle = inst.state().handles().handles().next().expect("setup loaded an object");
    let fd = inst.state().handles().get(handle).unwrap().maps["rb"];
    let store = inst.state().maps().get(fd).expect("ring map");
    let ring = store.ringbuf().expect("ring buffer");
    let record = [0x5au8; EVENT_BYTES];
    let fill = || {
        for _ in 0..RING_BATCH {
            ring.output(&record).expect("ring has room");
        }
    };

    let mut guest = Vec::with_capacity(opts.samples);
    let mut native = Vec::with_capacity(opts.samples);
    let mut buf = [0u8; 64];
    let mut delivered = 0u64;
    for _ in 0..opts.samples {
        fill();
        let t = Instant::now();
        let n: i32 = inst.call("drain", (0,), None).map_err(|e| BenchError::Setup(e.to_string()))?;
        guest.push(t.elapsed().as_nanos() as f64 / RING_BATCH as f64);
        if n < 0 {
            return Err(BenchError::Setup(format!("drain returned {n}")));
        }

        fill();
        let t = Instant::now();
        while let Polled::Record(len) = ring.poll_one(|p| {
            p.copy_to(&mut buf[..p.len()]);
            p.len()
        }) {
            delivered += std::hint::black_box(len) as u64;
        }
        native.push(t.elapsed().as_nanos() as f64 / RING_BATCH as f64);
    }
    std::hint::black_box(delivered);
    let ops = (opts.samples * RING_BATCH) as u64;
    Ok(pair(Suite::RingbufPoll, ["wasm", "native-baseline"], guest, native, ops))
}

/// Cold start: engine + compile + instantiate, then load + attach through
/// the guest's `setup`.
pub fn startup(opts: &BenchOptions) -> Result<StartupReport, BenchError> {
    let wasm = read(opts.fixtures.join("guests/bootstrap.wasm"))?;
    let mut inst_ms = Vec::new();
    let mut load_ms = Vec::new();
    for _ in 0..opts.startup_runs.max(1) {
        let t = Instant::now();
        let rt = WasmBpfRuntime::new().map_err(|e| BenchError::Setup(e.to_string()))?;
        let mut inst = instance(&rt, &wasm)?;
        let t1 = Instant::now();
        setup(&mut inst)?;
        let t2 = Instant::now();
        inst_ms.push((t1 - t).as_secs_f64() * 1e3);
        load_ms.push((t2 - t1).as_secs_f64() * 1e3);
    }
    let (_, i50, _) = summarize(&mut inst_ms);
    let (_, l50, _) = summarize(&mut load_ms);
    Ok(StartupReport {
        runs: opts.startup_runs.max(1) as u64,
        instantiate_ms: i50,
        load_attach_ms: l50,
        total_ms: i50 + l50,
    })
}

/// Every fixture guest, raw and packed.
pub fn sizes(opts: &BenchOptions) -> Result<Vec<SizeRow>, BenchError> {
    let dir = opts.fixtures.join("guests");
    let mut guests: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|_| BenchError::FixtureMissing(dir.clone()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "wasm"))
        .collect();
    guests.sort();
    if guests.is_empty() {
        return Err(BenchError::FixtureMissing(dir));
    }
    let tmp = tempfile::tempdir().map_err(|e| BenchError::Setup(e.to_string()))?;
    let mut rows = Vec::new();
    for g in guests {
        let name = g.file_stem().unwrap().to_string_lossy().into_owned();
        let module = read(g.clone())?;
        let layout_dir = tmp.path().join(&name);
        let tar = tmp.path().join(format!("{name}.tar"));
        let meta = OciMetadata {
            name: name.clone(),
            version: env!("CARGO_PKG_VERSION").into(),
            ..Default::default()
        };
        oci::pack(&module, &meta, &layout_dir, Some(&tar)).map_err(|e| BenchError::Setup(e.to_string()))?;
        for (label, path) in [("wasm", &g), ("oci-layout", &layout_dir), ("oci-tar", &tar)] {
            let r = oci::inspect(path).map_err(|e| BenchError::Setup(e.to_string()))?;
            rows.push(SizeRow {
                name: format!("{name}.{label}"),
                kind: serde_json::to_value(r.kind).unwrap().as_str().unwrap_or("").to_string(),
                bytes: r.total_bytes,
                baseline_bytes: CONTAINER_BASELINE_BYTES,
                ratio: r.ratio_to_baseline,
            });
        }
    }
    Ok(rows)
}

pub fn run_suites(suites: &[Suite], opts: &BenchOptions) -> Result<BenchReport, BenchError> {
    let mut report = BenchReport::default();
    for s in suites {
        match s {
            Suite::MapAccess => report.rows.extend(map_access(opts)?),
            Suite::RingbufPoll => report.rows.extend(ringbuf_poll(opts)?),
            Suite::Startup => report.startup = Some(startup(opts)?),
            Suite::Sizes => report.sizes = sizes(opts)?,
        }
    }
    Ok(report)
}

pub const CSV_HEADER: &str = "suite,name,iterations,mean_ns,p50_ns,p99_ns,ratio,bytes";

impl BenchReport {
    /// One row per measurement; columns that do not apply are empty.
    pub fn to_csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{:.2},{:.2},{:.2},{:.4},",
                r.suite.as_str(),
                r.name,
                r.iterations,
                r.mean_ns,
                r.p50_ns,
                r.p99_ns,
                r.ratio
            );
        }
        if let Some(st) = &self.startup {
            for (name, ms) in [("instantiate", st.instantiate_ms), ("load_attach", st.load_attach_ms), ("total", st.total_ms)] {
                let ns = ms * 1e6;
                let _ = writeln!(s, "startup,{name},{},{ns:.0},{ns:.0},,,", st.runs);
            }
        }
        for r in &self.sizes {
            let _ = writeln!(s, "sizes,{},,,,,{:.4},{}", r.name, r.ratio, r.bytes);
        }
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let mut suite = None;
        for r in &self.rows {
            if suite != Some(r.suite) {
                suite = Some(r.suite);
                let _ = writeln!(s, "\n{}", r.suite.as_str());
                let _ = writeln!(
                    s,
                    "  {:<16} {:>10} {:>10} {:>10} {:>10} {:>7}",
                    "name", "ops", "mean ns", "p50 ns", "p99 ns", "ratio"
                );
                let (w, n) = match r.suite {
                    Suite::MapAccess => REFERENCE_MAP_ACCESS_NS,
                    _ => REFERENCE_RINGBUF_NS,
                };
                let _ = writeln!(s, "  reference: wasm {w} ns vs native {n} ns, ratio {:.2}", w / n);
            }
            let _ = writeln!(
                s,
                "  {:<16} {:>10} {:>10.1} {:>10.1} {:>10.1} {:>7.2}",
                r.name, r.iterations, r.mean_ns, r.p50_ns, r.p99_ns, r.ratio
            );
        }
        if let Some(st) = &self.startup {
            let _ = writeln!(s, "\nstartup (median of {} cold starts)", st.runs);
            let _ = writeln!(s, "  instantiate   {:>9.1} ms", st.instantiate_ms);
            let _ = writeln!(s, "  load+attach   {:>9.1} ms", st.load_attach_ms);
            let _ = writeln!(s, "  total         {:>9.1} ms", st.total_ms);
            let _ = writeln!(
                s,
                "  reference: {} s lightweight Wasm container vs {} s Docker; measured from process start, no container runtime",
                REFERENCE_STARTUP_S.0, REFERENCE_STARTUP_S.1
            );
        }
        if !self.sizes.is_empty() {
            let _ = writeln!(s, "\nsizes (baseline: minimal container image {} bytes)", CONTAINER_BASELINE_BYTES);
            for r in &self.sizes {
                let _ = writeln!(s, "  {:<24} {:>10} bytes {:>6.1}%", r.name, r.bytes, r.ratio * 100.0);
            }
        }
        s
    }
}

/// Wall time of a closure.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

pub fn default_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}
