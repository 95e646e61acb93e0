fn main() {
    std::process::exit(casimir_shell::cli::run(std::env::args_os()));
}
