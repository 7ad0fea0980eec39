fn main() {
    std::process::exit(qhsa_cli::main_with_args(std::env::args_os()));
}
