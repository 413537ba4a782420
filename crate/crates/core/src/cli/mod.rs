//! Command-line frontend. [`run`] does all the work and returns the exit
//! code with the text destined for stdout and stderr.
//!
//! Exit codes: 0 analysis complete and ACYT, 1 a predicate-level finding
//! (not G1, not ACYT), 2 input error, 3 internal-consistency or theorem
//! violation.

mod input;
mod report;

use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

pub use input::{parse, InputDocument, ParseError};
pub use report::{analysis_report, catalog_report, verify_report, Node};

use crate::analysis::analyze;
use crate::catalog::{default_params, describe, get_entry, Convention, NAMES};
use crate::error::Error;
use crate::liealg::LieAlgebra6;
use crate::su3::SU3Structure;
use crate::Scalar;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PREDICATE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "acyt", version, about = "Exact analysis of invariant SU(3)-structures on 6-dimensional Lie algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = ConventionArg::Internal, global = true)]
    pub convention: ConventionArg,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    /// `ω = -F`, `Θ = -Ψ`
    Paper,
    /// `F`, `Ψ±`
    Internal,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Paper => Convention::PaperOmega,
            ConventionArg::Internal => Convention::InternalF,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report for an input document.
    Analyze { file: String },
    /// Built-in examples.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Theorem suite only, for a file or a catalog name.
    Verify {
        target: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Print a catalog entry as an input document.
    Export {
        name: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    List,
    Run {
        name: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Outcome {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = if e.is_consistency() { EXIT_CONSISTENCY } else { EXIT_INPUT };
    Outcome::fail(code, e)
}

fn parse_params(raw: &[String]) -> Result<Vec<(String, Scalar)>, String> {
    raw.iter()
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| format!("parameter {p:?} is not of the form k=v"))?;
            let v = v.parse::<Scalar>().map_err(|e| format!("parameter {k}: {e}"))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn load_file(path: &str) -> Result<(String, LieAlgebra6, SU3Structure), Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_INPUT, format!("cannot read {path}: {e}")))?;
    let doc = parse(&text).map_err(|e| Outcome::fail(EXIT_INPUT, format!("{path}: {e}")))?;
    let g = doc.algebra().map_err(|e| error_outcome(&e))?;
    let s = doc.structure().map_err(|e| error_outcome(&e))?;
    Ok((doc.name, g, s))
}

fn render(node: &Node, format: Format) -> String {
    match format {
        Format::Text => node.to_text(),
        Format::Machine => node.to_machine(),
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(code, text)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let conv: Convention = cli.convention.into();
    match &cli.command {
        Command::Analyze { file } => {
            let (name, g, s) = match load_file(file) {
                Ok(x) => x,
                Err(o) => return o,
            };
            match analyze(&g, &s) {
                Ok(a) => finish(&a, analysis_report(&name, &a, conv), cli.format),
                Err(e) => error_outcome(&e),
            }
        }
        Command::Catalog {
            command: CatalogCommand::List,
        } => Outcome::ok(EXIT_OK, catalog_list(cli.format)),
        Command::Catalog {
            command: CatalogCommand::Run { name, params },
        } => {
            let params = match parse_params(params) {
                Ok(p) => p,
                Err(m) => return Outcome::fail(EXIT_INPUT, m),
            };
            let entry = match get_entry(name, &params) {
                Ok(e) => e,
                Err(e) => return error_outcome(&e),
            };
            match analyze(&entry.algebra, &entry.structure) {
                Ok(a) => finish(&a, catalog_report(&entry, &a, conv), cli.format),
                Err(e) => error_outcome(&e),
            }
        }
        Command::Verify { target, params } => {
            let (name, g, s) = if Path::new(target).is_file() {
                match load_file(target) {
                    Ok(x) => x,
                    Err(o) => return o,
                }
            } else {
                let params = match parse_params(params) {
                    Ok(p) => p,
                    Err(m) => return Outcome::fail(EXIT_INPUT, m),
                };
                match get_entry(target, &params) {
                    Ok(e) => (e.name, e.algebra, e.structure),
                    Err(e) => return error_outcome(&e),
                }
            };
            match analyze(&g, &s) {
                Ok(a) => finish(&a, verify_report(&name, &a), cli.format),
                Err(e) => error_outcome(&e),
            }
        }
        Command::Export { name, params } => {
            let params = match parse_params(params) {
                Ok(p) => p,
                Err(m) => return Outcome::fail(EXIT_INPUT, m),
            };
            match get_entry(name, &params) {
                Ok(entry) => Outcome::ok(EXIT_OK, InputDocument::from_entry(&entry, conv).to_json()),
                Err(e) => error_outcome(&e),
            }
        }
    }
}

fn finish(a: &crate::analysis::Analysis, node: Node, format: Format) -> Outcome {
    let failures = a.consistency_failures();
    let stdout = render(&node, format);
    if !failures.is_empty() {
        return Outcome {
            code: EXIT_CONSISTENCY,
            stdout,
            stderr: format!("error: internal consistency: {}\n", failures.join("; ")),
        };
    }
    Outcome::ok(a.predicate_status(), stdout)
}

fn catalog_list(format: Format) -> String {
    let mut list = Node::map();
    for name in NAMES {
        let params = Node::Map(
            default_params(name)
                .expect("known name")
                .into_iter()
                .map(|(k, v)| (k.to_string(), Node::Scalar(v)))
                .collect(),
        );
        list = list.with(
            name,
            Node::map().with("description", describe(name)).with("params", params),
        );
    }
    render(&list, format)
}
