fn main() {
    std::process::exit(quiver_embed::cli::main_with_args(std::env::args_os()));
}
