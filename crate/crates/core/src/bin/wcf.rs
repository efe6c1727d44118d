fn main() {
    std::process::exit(wcf::cli::main_with_args(std::env::args_os()));
}
