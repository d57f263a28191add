fn main() -> std::process::ExitCode {
    braidhooks::cli::main()
}
