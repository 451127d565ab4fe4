use std::io::{self, BufRead, IsTerminal, Write};

use clap::Parser;

use crate::cli::{Cli, Command};
use crate::run::{execute, Failure, Settings};

const PROMPT: &str = "grossnum> ";

/// Reads one command per line from stdin until end of input or `quit`.
///
/// Each line is split with shell quoting rules and parsed exactly like the
/// arguments of a one-shot invocation, so `eval "G + 1"` behaves the same in
/// both modes. Flags given when the REPL was started apply to every line.
/// Errors are reported and the loop carries on.
pub fn run(settings: &Settings) -> io::Result<()> {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut stdout = io::stdout();
    let mut stderr = io::stderr();
    let mut lines = stdin.lock().lines();
    loop {
        if interactive {
            write!(stdout, "{PROMPT}")?;
            stdout.flush()?;
        }
        let Some(line) = lines.next() else { break };
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if matches!(trimmed, "quit" | "exit") {
            break;
        }
        match run_line(trimmed, settings) {
            Ok(out) => writeln!(stdout, "{out}")?,
            Err(failure) => writeln!(stderr, "{}", failure.render(settings.json))?,
        }
    }
    Ok(())
}

fn run_line(line: &str, settings: &Settings) -> Result<String, Failure> {
    let words = shlex::split(line).ok_or_else(|| Failure::Usage("unbalanced quotes".into()))?;
    let argv = std::iter::once("grossnum".to_string()).chain(words);
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        // clap's rendering ends with a usage hint spread over several lines
        let text = e.to_string();
        let first = text.lines().next().unwrap_or_default();
        Failure::Usage(first.trim_start_matches("error: ").to_string())
    })?;
    if matches!(cli.command, Command::Repl) {
        return Err(Failure::Usage("already in the repl".into()));
    }
    let line_settings = Settings {
        json: settings.json || cli.json,
        style: grossnum::syntax::Style {
            unicode: settings.style.unicode || cli.unicode,
        },
        ..*settings
    };
    execute(&cli.command, &line_settings)
}
