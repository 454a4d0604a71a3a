fn main() -> std::process::ExitCode {
    mwvc::cli::main()
}
