fn main() {
    std::process::exit(sunlet_crossings::cli::run(std::env::args_os()));
}
