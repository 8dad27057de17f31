fn main() -> std::process::ExitCode {
    engel::cli::main()
}
