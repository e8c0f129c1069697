fn main() {
    std::process::exit(dijord::cli::main_with_args(std::env::args()));
}
