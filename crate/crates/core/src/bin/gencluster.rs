fn main() {
    let stdin = std::io::stdin();
    let code = gencluster::cli::run_cli(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
