//! `paraline`: JSON front end for the exact parabolic-bundle calculus.
//!
//! Every verb reads JSON (from flags, stdin, or `--in <path>`), writes one
//! line of JSON to stdout, and is deterministic: identical inputs produce
//! byte-identical outputs. Exit codes: 0 on success, 2 on invalid input
//! (with a one-line `{"error":..,"kind":"input"}` object on stderr), 1 on
//! internal consistency failures (`"kind":"internal"`).

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use paraline::covers::{bound_u, can_inject, spec_from_matrices, CoverSpec, MatrixInput};
use paraline::cyclic::CyclicCover;
use paraline::exact::{weight_multiplicities, CycElem, Rational};
use paraline::orbifold::OrbBundle;
use paraline::parabolic::SplitBundle;
use paraline::pullback::{deloop, plain_pullback};

#[derive(Parser)]
#[command(
    name = "paraline",
    version,
    about = "Exact arithmetic for split parabolic bundles on the projective line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Carry count kappa(m, c): the number of 1 <= j < c with w_1 + w_j >= 1
    Kappa {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        c: u64,
    },
    /// Degree s_j of the weight-j summand of the cyclic cover z -> z^m
    Sj {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        j: u64,
    },
    /// The parabolic bundle of the weight-j character of a cyclic cover
    CyclicBundle {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        j: u64,
    },
    /// Degrees of a bundle at a weight vector (sorted ascending)
    Eval {
        /// Comma-separated rationals in curve point order, e.g. "1/4,0,-3/2"
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Tensor product with a second bundle
    Tensor {
        /// Path to the JSON of the second factor
        #[arg(long)]
        with: PathBuf,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Dual bundle
    Dual {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Hom bundle (dual of the input, tensored with the second operand)
    Hom {
        /// Path to the JSON of the target bundle
        #[arg(long)]
        with: PathBuf,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Rewrite a parabolic bundle as orbifold twist/exponent data
    ToOrbifold {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Rewrite orbifold twist/exponent data as a parabolic bundle
    FromOrbifold {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Pullback along z -> z^m (marked points must be among 0, 1, inf)
    Pullback {
        #[arg(long)]
        m: u64,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Root pullback of the pullback along z -> z^m: removes the
    /// ramification marking over 0
    Deloop {
        #[arg(long)]
        m: u64,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Upper bounds for invariant-summand degrees of a three-point cover
    Bound {
        /// CoverSpec JSON, or "-" to read it from stdin
        #[arg(long)]
        spec: Option<String>,
        /// Monodromy matrices JSON, or "-" to read it from stdin
        #[arg(long)]
        matrices: Option<String>,
    },
    /// Eigenvalue multiplicities from an integer trace sequence
    Weights {
        #[arg(long)]
        order: u64,
        /// Comma-separated traces of the powers g^0, g^1, .., g^(order-1)
        #[arg(long, allow_hyphen_values = true)]
        traces: String,
    },
    /// Whether line bundles with degrees s inject into ones with degrees t
    Inject {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Structural diagnostics for a bundle (exit 0 whether or not valid)
    Validate {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Parse, validate, and canonicalize a bundle; idempotent
    Roundtrip {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(serde::Serialize)]
struct ValidationReport {
    valid: bool,
    problems: Vec<String>,
}

#[derive(Debug)]
struct Failure {
    message: String,
    internal: bool,
}

impl From<paraline::Error> for Failure {
    fn from(err: paraline::Error) -> Self {
        Failure {
            message: err.to_string(),
            internal: err.is_internal(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(err: serde_json::Error) -> Self {
        Failure {
            message: err.to_string(),
            internal: false,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure {
            message: err.to_string(),
            internal: false,
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        internal: false,
    }
}

fn read_source(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => {
            let mut buffer = String::new();
            std::io::stdin().read_to_string(&mut buffer)?;
            Ok(buffer)
        }
    }
}

/// Resolves an inline-JSON-or-stdin flag value.
fn read_inline(value: &str) -> Result<String, Failure> {
    if value == "-" {
        read_source(None)
    } else {
        Ok(value.to_string())
    }
}

fn read_bundle(path: Option<&Path>) -> Result<SplitBundle, Failure> {
    let text = read_source(path)?;
    let bundle: SplitBundle = serde_json::from_str(&text)?;
    Ok(bundle.into_checked()?)
}

fn read_orbifold(path: Option<&Path>) -> Result<OrbBundle, Failure> {
    let text = read_source(path)?;
    let bundle: OrbBundle = serde_json::from_str(&text)?;
    Ok(bundle.into_checked()?)
}

fn parse_weight_vector(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<Rational>()
                .map_err(|err| input_error(err.to_string()))
        })
        .collect()
}

fn parse_integers(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|err| input_error(format!("bad integer {:?}: {err}", part.trim())))
        })
        .collect()
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string(value)?)
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Kappa { m, c } => {
            let kappa = CyclicCover::new(m, c)?.kappa()?;
            Ok(serde_json::json!({ "kappa": kappa }).to_string())
        }
        Command::Sj { m, c, j } => {
            let s_j = CyclicCover::new(m, c)?.s_j(j)?;
            Ok(serde_json::json!({ "s_j": s_j }).to_string())
        }
        Command::CyclicBundle { m, c, j } => {
            to_json(&CyclicCover::new(m, c)?.bundle(j)?)
        }
        Command::Eval { at, input } => {
            let bundle = read_bundle(input.as_deref())?;
            let at = parse_weight_vector(&at)?;
            let values = bundle.eval(&at)?;
            Ok(serde_json::json!({ "values": values }).to_string())
        }
        Command::Tensor { with, input } => {
            let bundle = read_bundle(input.as_deref())?;
            let other = read_bundle(Some(&with))?;
            to_json(&bundle.tensor(&other)?)
        }
        Command::Dual { input } => to_json(&read_bundle(input.as_deref())?.dual()),
        Command::Hom { with, input } => {
            let bundle = read_bundle(input.as_deref())?;
            let other = read_bundle(Some(&with))?;
            to_json(&bundle.hom(&other)?)
        }
        Command::ToOrbifold { input } => {
            let bundle = read_bundle(input.as_deref())?;
            to_json(&OrbBundle::from_parabolic(&bundle)?)
        }
        Command::FromOrbifold { input } => {
            let orb = read_orbifold(input.as_deref())?;
            to_json(&orb.to_parabolic()?)
        }
        Command::Pullback { m, input } => {
            let bundle = read_bundle(input.as_deref())?;
            to_json(&plain_pullback(&bundle, m)?)
        }
        Command::Deloop { m, input } => {
            let bundle = read_bundle(input.as_deref())?;
            to_json(&deloop(&bundle, m)?)
        }
        Command::Bound { spec, matrices } => {
            let spec = match (spec, matrices) {
                (Some(spec), None) => {
                    let text = read_inline(&spec)?;
                    let spec: CoverSpec = serde_json::from_str(&text)?;
                    spec.into_checked()?
                }
                (None, Some(matrices)) => {
                    let text = read_inline(&matrices)?;
                    let file: MatrixInput = serde_json::from_str(&text)?;
                    let (gen0, gen1) = file.generators()?;
                    spec_from_matrices(&gen0, &gen1)?
                }
                _ => {
                    return Err(input_error(
                        "bound needs exactly one of --spec and --matrices",
                    ))
                }
            };
            to_json(&bound_u(&spec)?)
        }
        Command::Weights { order, traces } => {
            let traces = parse_integers(&traces)?
                .into_iter()
                .map(|t| CycElem::from_int(1, t))
                .collect::<paraline::Result<Vec<_>>>()?;
            let multiplicities = weight_multiplicities(order, &traces)?
                .into_iter()
                .map(|m| {
                    i64::try_from(m)
                        .map_err(|_| input_error("multiplicity out of i64 range"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(serde_json::json!({ "multiplicities": multiplicities }).to_string())
        }
        Command::Inject { s, t } => {
            let s = parse_integers(&s)?;
            let t = parse_integers(&t)?;
            let verdict = can_inject(&s, &t)?;
            Ok(serde_json::json!({ "can_inject": verdict }).to_string())
        }
        Command::Validate { input } => {
            let text = read_source(input.as_deref())?;
            let bundle: SplitBundle = serde_json::from_str(&text)?;
            let problems = bundle.validate();
            to_json(&ValidationReport {
                valid: problems.is_empty(),
                problems,
            })
        }
        Command::Roundtrip { input } => to_json(&read_bundle(input.as_deref())?),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(line) => println!("{line}"),
        Err(failure) => {
            let kind = if failure.internal { "internal" } else { "input" };
            eprintln!(
                "{}",
                serde_json::json!({ "error": failure.message, "kind": kind })
            );
            std::process::exit(if failure.internal { 1 } else { 2 });
        }
    }
}
