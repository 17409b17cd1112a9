fn main() {
    std::process::exit(projframe::cli::main_entry());
}
