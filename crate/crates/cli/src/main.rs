fn main() {
    std::process::exit(degbell_cli::run(std::env::args_os()));
}
