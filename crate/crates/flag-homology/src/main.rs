fn main() {
    std::process::exit(flag_homology::cli::main_entry());
}
