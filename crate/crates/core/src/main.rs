fn main() {
    std::process::exit(aqclass::cli::run(std::env::args_os()));
}
