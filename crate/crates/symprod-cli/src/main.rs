fn main() {
    std::process::exit(symprod_cli::run(std::env::args_os()));
}
