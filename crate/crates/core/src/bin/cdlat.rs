fn main() {
    std::process::exit(cdlat::cli::main_with_args(std::env::args_os()));
}
