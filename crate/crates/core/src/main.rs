fn main() {
    std::process::exit(irp::cli::run(std::env::args_os()));
}
