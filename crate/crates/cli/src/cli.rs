//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use wbpf_core::btf::ArchName;
use wbpf_core::oci::{self, OciMetadata, ANNOTATION_ARCH_INDEPENDENT};

use crate::bench::{self, BenchOptions, Suite};
use crate::report::{is_elf, object_report};
use crate::run::{run, BackendChoice, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_LOAD: i32 = 2;
pub const EXIT_TRAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wbpf", version, about = "Run Wasm guests that load and drive eBPF programs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a guest module or packed layout.
    Run(RunArgs),
    /// Pack a module into an OCI image layout.
    Pack(PackArgs),
    /// Extract the module from an OCI image layout (directory or tar).
    Unpack(UnpackArgs),
    /// Describe an eBPF object, Wasm module or OCI layout.
    Inspect(InspectArgs),
    /// Run the micro-benchmarks.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    pub input: PathBuf,
    /// Environment profile; the running host is probed when absent.
    #[arg(long)]
    pub env_profile: Option<PathBuf>,
    #[arg(long, value_parser = parse_arch)]
    pub arch: Option<ArchName>,
    #[arg(long, value_enum)]
    pub backend: Option<BackendChoice>,
    /// Target BTF file or directory; searched before WASM_BPF_BTF_PATH.
    #[arg(long = "btf-path")]
    pub btf_paths: Vec<PathBuf>,
    /// Event script fired once the guest has attached a program.
    #[arg(long)]
    pub script: Option<PathBuf>,
    #[arg(long)]
    pub timeout_ms: Option<u64>,
    /// Arguments passed to the guest.
    #[arg(last = true)]
    pub args: Vec<String>,
}

#[derive(Debug, Args)]
pub struct PackArgs {
    pub module: PathBuf,
    /// Layout directory to create.
    #[arg(short, long)]
    pub output: PathBuf,
    /// Also write the layout as a tar archive.
    #[arg(long)]
    pub tar: Option<PathBuf>,
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, default_value = "0.1.0")]
    pub version: String,
}

#[derive(Debug, Args)]
pub struct UnpackArgs {
    pub layout: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct InspectArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Suites to run; all when omitted.
    #[arg(long = "suite", value_enum)]
    pub suites: Vec<Suite>,
    #[arg(long, default_value_t = 2000)]
    pub samples: usize,
    /// Write the CSV report here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
    /// Fixture directory holding guests/ and bpf/.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

fn parse_arch(s: &str) -> Result<ArchName, String> {
    s.parse().map_err(|e: wbpf_core::btf::PtRegsError| e.to_string())
}

/// Parse `args` and run; returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: Box<dyn Write + Send>, mut stderr: Box<dyn Write + Send>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    dispatch(cli.command, stdout, stderr)
}

fn dispatch(command: Command, mut stdout: Box<dyn Write + Send>, mut stderr: Box<dyn Write + Send>) -> i32 {
    macro_rules! fail {
        ($code:expr, $($fmt:tt)*) => {{
            let _ = writeln!(stderr, $($fmt)*);
            return $code;
        }};
    }
    match command {
        Command::Run(a) => {
            let config = RunConfig {
                input: a.input,
                env_profile: a.env_profile,
                arch: a.arch,
                backend: a.backend,
                btf_paths: a.btf_paths,
                script: a.script,
                timeout: a.timeout_ms.map(Duration::from_millis),
                args: a.args,
            };
            match run(&config, stdout, Box::new(std::io::stderr())) {
                Ok(status) => status,
                Err(e) => fail!(e.exit_code(), "wbpf run: {e}"),
            }
        }
        Command::Pack(a) => {
            let module = match std::fs::read(&a.module) {
                Ok(m) => m,
                Err(e) => fail!(EXIT_USAGE, "wbpf pack: {}: {e}", a.module.display()),
            };
            let name = a
                .name
                .unwrap_or_else(|| a.module.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
            let mut meta = OciMetadata {
                name,
                version: a.version,
                ..Default::default()
            };
            meta.annotations.insert(ANNOTATION_ARCH_INDEPENDENT.into(), "true".into());
            match oci::pack(&module, &meta, &a.output, a.tar.as_deref()) {
                Ok(layout) => {
                    let _ = writeln!(
                        stdout,
                        "packed {} ({} bytes) into {} ({} files, {} bytes)",
                        a.module.display(),
                        module.len(),
                        a.output.display(),
                        layout.files.len(),
                        layout.total_bytes()
                    );
                    EXIT_OK
                }
                Err(oci::OciError::NotAWasmModule) => fail!(EXIT_USAGE, "wbpf pack: {} is not a Wasm module", a.module.display()),
                Err(e) => fail!(EXIT_LOAD, "wbpf pack: {e}"),
            }
        }
        Command::Unpack(a) => match oci::unpack(&a.layout) {
            Ok((module, meta)) => {
                if let Err(e) = std::fs::write(&a.output, &module) {
                    fail!(EXIT_USAGE, "wbpf unpack: {}: {e}", a.output.display());
                }
                let _ = writeln!(
                    stdout,
                    "unpacked {} {} ({} bytes) to {}",
                    meta.name,
                    meta.version,
                    module.len(),
                    a.output.display()
                );
                EXIT_OK
            }
            Err(e) => fail!(EXIT_LOAD, "wbpf unpack: {}: {e}", a.layout.display()),
        },
        Command::Inspect(a) => {
            if !a.path.exists() {
                fail!(EXIT_USAGE, "wbpf inspect: {}: no such file", a.path.display());
            }
            if a.path.is_file() && !is_elf(&a.path) && looks_like_object(&a.path) {
                fail!(EXIT_USAGE, "wbpf inspect: {}: not an ELF file", a.path.display());
            }
            let out = if is_elf(&a.path) {
                let bytes = std::fs::read(&a.path).unwrap_or_default();
                match object_report(&bytes) {
                    Ok(r) if a.json => serde_json::to_string_pretty(&r).unwrap(),
                    Ok(r) => r.to_text(),
                    Err(e) => fail!(EXIT_USAGE, "wbpf inspect: {}: {e}", a.path.display()),
                }
            } else {
                match oci::inspect(&a.path) {
                    Ok(r) if a.json => serde_json::to_string_pretty(&r).unwrap(),
                    Ok(r) => size_text(&r),
                    Err(e) => fail!(EXIT_LOAD, "wbpf inspect: {}: {e}", a.path.display()),
                }
            };
            let _ = writeln!(stdout, "{}", out.trim_end());
            EXIT_OK
        }
        Command::Bench(a) => {
            let suites = if a.suites.is_empty() { Suite::ALL.to_vec() } else { a.suites };
            let mut opts = BenchOptions::new(a.fixtures.unwrap_or_else(bench::default_fixtures));
            opts.samples = a.samples.max(1);
            match bench::run_suites(&suites, &opts) {
                Ok(report) => {
                    if let Some(p) = &a.csv {
                        if let Err(e) = std::fs::write(p, report.to_csv()) {
                            fail!(EXIT_USAGE, "wbpf bench: {}: {e}", p.display());
                        }
                    }
                    let text = if a.json {
                        serde_json::to_string_pretty(&report).unwrap()
                    } else {
                        report.to_table()
                    };
                    let _ = writeln!(stdout, "{}", text.trim_matches('\n'));
                    EXIT_OK
                }
                Err(e) => fail!(EXIT_LOAD, "wbpf bench: {e}"),
            }
        }
    }
}

/// Object files are reported through the ELF path even when they are not ELF.
fn looks_like_object(path: &std::path::Path) -> bool {
    path.extension().is_some_and(|e| e == "o")
}

fn size_text(r: &oci::SizeReport) -> String {
    let mut s = format!(
        "{} ({:?}): {} bytes, {:.1}% of the {}-byte container baseline\n",
        r.path.display(),
        r.kind,
        r.total_bytes,
        r.ratio_to_baseline * 100.0,
        r.baseline_bytes
    );
    for e in &r.entries {
        s.push_str(&format!(
            "  {:<80} {:>9}  {}\n",
            e.name,
            e.bytes,
            e.media_type.as_deref().unwrap_or("")
        ));
    }
    s
}
