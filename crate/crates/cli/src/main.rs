fn main() {
    std::process::exit(latpoly_cli::main_with(std::env::args_os()));
}
