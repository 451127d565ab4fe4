use clap::{Parser, Subcommand, ValueEnum};
use grossnum::rank::Method;

/// Exact calculator for numbers written with the infinite unit G (①).
#[derive(Debug, Parser)]
#[command(name = "grossnum", version, about)]
pub struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Print ① instead of G.
    #[arg(long, global = true)]
    pub unicode: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two expressions; prints <, = or >.
    Cmp {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Print the measure (number of elements) of a set.
    Measure { set: String },
    /// Compare the measures of two sets; prints <, = or >.
    MeasureCmp { lhs: String, rhs: String },
    /// Rank score vectors lexicographically and print a leaderboard.
    Rank {
        #[arg(long, value_enum, default_value_t = MethodArg::Gross)]
        method: MethodArg,
        /// Comma-separated scores, highest priority first (repeatable).
        #[arg(long = "scores", required = true, allow_hyphen_values = true)]
        scores: Vec<String>,
        /// Name of the matching --scores entry (repeatable).
        #[arg(long = "label")]
        labels: Vec<String>,
    },
    /// Read commands from standard input, one per line.
    Repl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Gross,
    Binary,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Gross => Method::Gross,
            MethodArg::Binary => Method::Binary,
        }
    }
}
