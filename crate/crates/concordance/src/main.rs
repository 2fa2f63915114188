fn main() {
    std::process::exit(concordance::cli::run());
}
