fn main() {
    std::process::exit(schur_core::cli::main_with_args(std::env::args_os()));
}
