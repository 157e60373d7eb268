fn main() -> std::process::ExitCode {
    posthopf::cli::main()
}
