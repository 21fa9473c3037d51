fn main() {
    std::process::exit(rspq::cli::run());
}
