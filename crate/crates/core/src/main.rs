fn main() {
    std::process::exit(harary::cli::main_entry());
}
