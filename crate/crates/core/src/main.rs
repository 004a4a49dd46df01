fn main() {
    std::process::exit(froblab::cli::run(std::env::args_os()));
}
