fn main() {
    std::process::exit(sl2prod::cli::run());
}
