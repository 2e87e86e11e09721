use clap::Parser;
use trisect_cli::commands::emit;
use trisect_cli::{exit, run, Cli, CliError};

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(outcome) => match emit(&cli, &outcome) {
            Ok(()) if outcome.failures > 0 => {
                eprintln!("error: {}", CliError::Mismatch(outcome.failures));
                exit::MISMATCH
            }
            Ok(()) => exit::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
