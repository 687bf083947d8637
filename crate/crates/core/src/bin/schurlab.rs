fn main() {
    std::process::exit(schurlab::cli::run(std::env::args_os()));
}
