fn main() {
    let code = boundary_scope::cli::run(std::env::args_os(), &mut std::io::stdout());
    std::process::exit(code);
}
