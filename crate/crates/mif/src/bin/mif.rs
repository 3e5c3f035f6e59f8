fn main() -> std::process::ExitCode {
    mif::cli::main()
}
