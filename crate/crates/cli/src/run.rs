use std::cmp::Ordering;

use grossnum::measure::{compare_measure, measure, parse_set, Measure};
use grossnum::rank::{leaderboard, RankValue, ScoreVector};
use grossnum::syntax::{evaluate_with, print_styled, Style};
use grossnum::{Error, GrossNumber, MeasureError, DEFAULT_DIV_TERMS};
use serde_json::{json, Value};

use crate::cli::Command;

pub const MAX_DIV_TERMS_VAR: &str = "GROSSNUM_MAX_DIV_TERMS";

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub json: bool,
    pub style: Style,
    pub max_div_terms: usize,
}

#[derive(Debug)]
pub enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<MeasureError> for Failure {
    fn from(e: MeasureError) -> Self {
        Failure::Domain(e.into())
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Usage(_) => EXIT_USAGE,
        }
    }

    /// The diagnostic line for stderr.
    pub fn render(&self, json: bool) -> String {
        match (self, json) {
            (Failure::Domain(e), false) => match e.position() {
                Some(p) => format!("error: {} at position {p}: {e}", e.name()),
                None => format!("error: {}: {e}", e.name()),
            },
            (Failure::Domain(e), true) => json!({
                "error": e.name(),
                "position": e.position(),
                "message": e.to_string(),
            })
            .to_string(),
            (Failure::Usage(msg), false) => format!("error: {msg}"),
            (Failure::Usage(msg), true) => json!({
                "error": "Usage",
                "position": null,
                "message": msg,
            })
            .to_string(),
        }
    }
}

/// Reads the division budget from the environment.
pub fn max_div_terms_from_env() -> Result<usize, Failure> {
    match std::env::var(MAX_DIV_TERMS_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_DIV_TERMS),
        Err(e) => Err(Failure::Usage(format!("{MAX_DIV_TERMS_VAR}: {e}"))),
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Failure::Usage(format!(
                "{MAX_DIV_TERMS_VAR} must be a positive integer, got {text:?}"
            ))),
        },
    }
}

fn symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

/// Runs one non-interactive command and returns what goes to stdout.
pub fn execute(command: &Command, settings: &Settings) -> Result<String, Failure> {
    match command {
        Command::Eval { expr } => {
            let x = evaluate_with(expr, settings.max_div_terms)?;
            Ok(if settings.json {
                number_json(&x, settings.style).to_string()
            } else {
                print_styled(&x, settings.style)
            })
        }
        Command::Cmp { lhs, rhs } => {
            let a = evaluate_with(lhs, settings.max_div_terms)?;
            let b = evaluate_with(rhs, settings.max_div_terms)?;
            let ordering = symbol(a.compare(&b));
            Ok(if settings.json {
                json!({
                    "lhs": print_styled(&a, settings.style),
                    "rhs": print_styled(&b, settings.style),
                    "ordering": ordering,
                })
                .to_string()
            } else {
                ordering.to_string()
            })
        }
        Command::Measure { set } => {
            let m = set_measure(set)?;
            Ok(if settings.json {
                serde_json::to_string(&m).expect("measure serializes")
            } else {
                m.display(settings.style)
            })
        }
        Command::MeasureCmp { lhs, rhs } => {
            let a = set_measure(lhs)?;
            let b = set_measure(rhs)?;
            let ordering = symbol(compare_measure(&a, &b)?);
            Ok(if settings.json {
                json!({ "lhs": a, "rhs": b, "ordering": ordering }).to_string()
            } else {
                ordering.to_string()
            })
        }
        Command::Rank {
            method,
            scores,
            labels,
        } => {
            if !labels.is_empty() && labels.len() != scores.len() {
                return Err(Failure::Usage(format!(
                    "{} --label values given for {} --scores vectors",
                    labels.len(),
                    scores.len()
                )));
            }
            let mut entries = Vec::with_capacity(scores.len());
            for (i, text) in scores.iter().enumerate() {
                let v = ScoreVector::parse(text).map_err(Error::from)?;
                let label = labels.get(i).cloned().unwrap_or_else(|| text.clone());
                entries.push((label, v));
            }
            let method = (*method).into();
            let board = leaderboard(method, entries).map_err(Error::from)?;
            if settings.json {
                let rows: Vec<Value> = board
                    .iter()
                    .map(|s| {
                        let rank = match &s.rank {
                            RankValue::Gross(g) => json!(print_styled(g, settings.style)),
                            RankValue::Binary(b) => json!(b),
                        };
                        json!({
                            "place": s.place,
                            "label": s.label,
                            "scores": s.scores,
                            "rank": rank,
                        })
                    })
                    .collect();
                Ok(json!({ "method": method.to_string(), "leaderboard": rows }).to_string())
            } else {
                let lines: Vec<String> = board
                    .iter()
                    .map(|s| {
                        let rank = match &s.rank {
                            RankValue::Gross(g) => print_styled(g, settings.style),
                            RankValue::Binary(b) => b.to_string(),
                        };
                        format!("{}\t{}\t{}", s.place, s.label, rank)
                    })
                    .collect();
                Ok(lines.join("\n"))
            }
        }
        Command::Repl => Err(Failure::Usage("repl cannot be nested".into())),
    }
}

fn set_measure(text: &str) -> Result<Measure, MeasureError> {
    measure(&parse_set(text)?)
}

fn number_json(x: &GrossNumber, style: Style) -> Value {
    let parts = x.parts();
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|t| {
            json!({
                "exponent": t.exponent.to_string(),
                "coefficient": t.coefficient.to_string(),
            })
        })
        .collect();
    json!({
        "value": print_styled(x, style),
        "class": x.classify().to_string(),
        "terms": terms,
        "parts": {
            "infinite": print_styled(&parts.infinite, style),
            "finite": print_styled(&parts.finite, style),
            "infinitesimal": print_styled(&parts.infinitesimal, style),
        },
    })
}
