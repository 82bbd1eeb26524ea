fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = wbpf_cli::main_with_args(std::env::args_os(), Box::new(std::io::stdout()), Box::new(std::io::stderr()));
    std::process::exit(code);
}
