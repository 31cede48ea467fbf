fn main() {
    std::process::exit(factoriad::cli::main_with_args(std::env::args_os()));
}
