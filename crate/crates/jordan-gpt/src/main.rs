fn main() {
    std::process::exit(jordan_gpt::cli::run(std::env::args_os()));
}
