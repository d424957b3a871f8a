fn main() {
    std::process::exit(circle_noise::cli::main_entry());
}
