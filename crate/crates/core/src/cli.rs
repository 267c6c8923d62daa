//! Command-line front end. Every command reads a JSON document from a file
//! or stdin and prints a JSON result; see [`run_cli`].

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::classgroup::{ClassGroupOptions, FieldMode};
use crate::error::{Error, Result};
use crate::io::{self, AnySeed};
use crate::lpalgebra::lp_mutate;
use crate::realize::AbelianGroupSpec;
use crate::report;

#[derive(Debug, Parser)]
#[command(name = "gencluster", version, about = "Exact computations for generalized cluster algebras and LP algebras")]
struct Cli {
    /// Field for class group computations (default: closed for Qbar seeds, rational otherwise).
    #[arg(long, global = true, value_enum)]
    mode: Option<Mode>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Rational,
    Closed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check seed invariants (generalized or LP seed).
    Validate { file: Option<String> },
    /// Mutate a generalized seed.
    Mutate {
        #[arg(long)]
        dir: usize,
        file: Option<String>,
    },
    /// Print the exchange polynomials.
    ExchangePolys { file: Option<String> },
    /// Height-one primes, valuation matrix and class group.
    Classgroup {
        /// Allow coprime seeds with directed cycles.
        #[arg(long)]
        allow_non_acyclic: bool,
        file: Option<String>,
    },
    /// Build a seed with the given class group and verify it.
    Realize {
        #[arg(long, default_value_t = 0)]
        free_rank: usize,
        #[arg(long, value_delimiter = ',')]
        torsion: Vec<u64>,
    },
    /// LP mutation.
    LpMutate {
        #[arg(long)]
        dir: usize,
        file: Option<String>,
    },
    /// LP cluster variables reachable within the given number of mutations.
    LpEnumerate {
        #[arg(long)]
        depth: usize,
        file: Option<String>,
    },
    /// Expand a mutation sequence in the initial cluster and check Laurentness.
    VerifyLaurent {
        #[arg(long, value_delimiter = ',')]
        seq: Vec<usize>,
        file: Option<String>,
    },
    /// Breadth-first search of the mutation class.
    Explore {
        #[arg(long)]
        max_seeds: usize,
        file: Option<String>,
    },
    /// Run the local HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

/// Runs the command line `args` (including the program name). Returns the
/// process exit code: 0 on success, 2 for invalid input or unmet
/// preconditions, 1 for internal errors.
pub fn run_cli<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    let format = cli.format;
    let emit = |out: &mut dyn Write, v: &Value| {
        let text = match format {
            Format::Json => v.to_string(),
            Format::Pretty => serde_json::to_string_pretty(v).expect("json values serialize"),
        };
        let _ = writeln!(out, "{text}");
    };
    match execute(&cli, stdin) {
        Ok((v, code)) => {
            emit(stdout, &v);
            code
        }
        Err(e) => {
            emit(stdout, &report::error_json(&e));
            let _ = writeln!(stderr, "error: {e}");
            report::exit_code(&e)
        }
    }
}

fn read_input(file: &Option<String>, stdin: &mut dyn Read) -> Result<String> {
    match file.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Document(format!("stdin: {e}")))?;
            Ok(s)
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Document(format!("{path}: {e}"))),
    }
}

fn field_mode(cli: &Cli, ring: crate::genseed::GroundRing) -> FieldMode {
    match cli.mode {
        Some(Mode::Rational) => FieldMode::Rational,
        Some(Mode::Closed) => FieldMode::AlgebraicallyClosed,
        None => report::default_mode(ring),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(Value, i32)> {
    let ok = |v: Value| Ok((v, 0));
    match &cli.command {
        Command::Validate { file } => {
            let text = read_input(file, stdin)?;
            let v = match io::parse_any_seed_unchecked(&text)? {
                AnySeed::Generalized(s) => report::seed_validation_json(&s),
                AnySeed::Lp(s) => report::lp_validation_json(&s),
            };
            let code = if v["valid"] == Value::Bool(true) { 0 } else { 2 };
            Ok((v, code))
        }
        Command::Mutate { dir, file } => {
            let s = io::parse_seed(&read_input(file, stdin)?)?;
            ok(io::seed_to_value(&s.mutate(*dir)?))
        }
        Command::ExchangePolys { file } => {
            let s = io::parse_seed(&read_input(file, stdin)?)?;
            ok(report::exchange_polys_json(&s))
        }
        Command::Classgroup {
            allow_non_acyclic,
            file,
        } => {
            let s = io::parse_seed(&read_input(file, stdin)?)?;
            let opts = ClassGroupOptions {
                mode: field_mode(cli, s.ring),
                allow_non_acyclic: *allow_non_acyclic,
            };
            ok(report::class_group_json(&s, opts)?)
        }
        Command::Realize { free_rank, torsion } => {
            let g = AbelianGroupSpec::new(*free_rank, torsion.clone())?;
            let v = report::realize_json(&g)?;
            let code = if v["verified"] == Value::Bool(true) { 0 } else { 1 };
            Ok((v, code))
        }
        Command::LpMutate { dir, file } => {
            let s = io::parse_lp_seed(&read_input(file, stdin)?)?;
            ok(io::lp_seed_to_value(&lp_mutate(&s, *dir)?))
        }
        Command::LpEnumerate { depth, file } => {
            let s = io::parse_lp_seed(&read_input(file, stdin)?)?;
            ok(report::lp_enumerate_json(&s, *depth)?)
        }
        Command::VerifyLaurent { seq, file } => {
            let s = io::parse_seed(&read_input(file, stdin)?)?;
            if let Some(&k) = seq.iter().find(|&&k| k == 0 || k > s.n) {
                return Err(Error::DirectionOutOfRange {
                    direction: k,
                    rank: s.n,
                });
            }
            ok(report::verify_laurent_json(&s, seq)?)
        }
        Command::Explore { max_seeds, file } => {
            let s = io::parse_seed(&read_input(file, stdin)?)?;
            ok(report::explore_json(&s, *max_seeds)?)
        }
        Command::Serve { port } => {
            crate::service::serve_blocking(*port).map_err(|e| Error::Internal(format!("serve: {e}")))?;
            ok(Value::Null)
        }
    }
}
