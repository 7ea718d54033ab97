fn main() {
    std::process::exit(exactpart::cli::run());
}
