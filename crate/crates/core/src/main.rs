fn main() {
    std::process::exit(negdsd::cli::run(std::env::args_os()));
}
