fn main() -> std::process::ExitCode {
    finalg::cli::main()
}
