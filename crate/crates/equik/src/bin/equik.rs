fn main() {
    std::process::exit(equik::cli::main_entry(std::env::args_os()));
}
