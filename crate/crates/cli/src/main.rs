mod cli;
mod repl;
mod run;

use std::process::ExitCode;

use clap::Parser;
use grossnum::syntax::Style;

use cli::{Cli, Command};
use run::{execute, max_div_terms_from_env, Failure, Settings};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors and 0 for --help/--version
    let cli = Cli::parse();
    let code = match start(&cli) {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("{}", failure.render(cli.json));
            failure.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn start(cli: &Cli) -> Result<(), Failure> {
    let settings = Settings {
        json: cli.json,
        style: Style {
            unicode: cli.unicode,
        },
        max_div_terms: max_div_terms_from_env()?,
    };
    match &cli.command {
        Command::Repl => repl::run(&settings).map_err(|e| Failure::Usage(e.to_string())),
        command => {
            println!("{}", execute(command, &settings)?);
            Ok(())
        }
    }
}
