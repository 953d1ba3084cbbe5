fn main() {
    std::process::exit(cubiclab::cli::run(std::env::args_os()));
}
