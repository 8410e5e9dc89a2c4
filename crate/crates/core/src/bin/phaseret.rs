fn main() {
    std::process::exit(phaseret::cli::main_with_args(std::env::args_os()));
}
