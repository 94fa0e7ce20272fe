fn main() {
    std::process::exit(modchar::cli::run(std::env::args_os()));
}
