fn main() {
    std::process::exit(redkron::cli::run(std::env::args_os()));
}
