fn main() {
    std::process::exit(cubefarey::cli::run());
}
