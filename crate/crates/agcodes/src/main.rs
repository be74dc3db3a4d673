fn main() {
    std::process::exit(agcodes::cli::run());
}
