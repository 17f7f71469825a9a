fn main() {
    let cli = match springer_kit_cli::parse_args(std::env::args_os()) {
        Ok(cli) => cli,
        // Prints help/version (exit 0) or the usage error (exit 2).
        Err(error) => error.exit(),
    };
    let max_rank = match springer_kit_cli::max_rank_from_env(
        std::env::var(springer_kit_cli::MAX_RANK_VAR).ok(),
    ) {
        Ok(value) => value,
        Err(message) => {
            let mut err = std::io::stderr().lock();
            let code = springer_kit_cli::emit_error("UsageError", &message, &mut err);
            std::process::exit(code);
        }
    };
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    std::process::exit(springer_kit_cli::run(&cli, max_rank, &mut out, &mut err));
}
