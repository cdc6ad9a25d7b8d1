fn main() {
    std::process::exit(euler_stirling::cli::run(std::env::args_os()));
}
