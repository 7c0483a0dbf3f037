fn main() {
    std::process::exit(qent_cli::run(std::env::args_os()));
}
