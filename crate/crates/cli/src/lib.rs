//! The `wbpf` command line as a library, so tests can drive it in-process.

pub mod bench;
pub mod cli;
pub mod report;
pub mod run;

pub use cli::main_with_args;
