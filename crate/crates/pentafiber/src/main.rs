fn main() {
    std::process::exit(pentafiber::cli::run());
}
