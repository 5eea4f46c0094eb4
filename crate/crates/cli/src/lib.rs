//! The `mnforge` command-line workbench.
//!
//! [`run_command`] parses an argument vector and returns the text and
//! structured records a command produces, so the binary is a thin wrapper
//! and every command is testable in-process.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mnforge::export::{AlgebraParamsRecord, SeriesRecord, SCHEMA_VERSION};
use mnforge::expr::{eval_with_depth, parse, parse_group_word};
use mnforge::rational::{format_rational, parse_rational};
use mnforge::verify::{Suite, VerifyConfig};
use mnforge::{
    gamma_coefficient_witness, AlgebraError, AlgebraParams, ExprError, PrimeTable, PrimeTableError, Rational,
    SeriesError,
};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("prime table: {0}")]
    Primes(#[from] PrimeTableError),
    #[error("center tests disagree on `{0}`")]
    CenterMismatch(String),
    #[error("{0} verification failure(s)")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

/// Output of one command: stdout text, stderr diagnostics, and the
/// structured records emitted with `--format json`.
#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub exit_code: i32,
    pub text: String,
    pub records: Vec<Value>,
    pub diagnostics: String,
}

impl CommandResult {
    /// What the binary writes to stdout for `format`.
    pub fn stdout(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            // help and version output have no record form
            Format::Json if self.records.is_empty() => self.text.clone(),
            Format::Json => self.records.iter().map(|r| format!("{r}\n")).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    /// Line-delimited JSON records.
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "mnforge", version, about = "Exact arithmetic in a twisted Mal'cev-Neumann series ring")]
pub struct Cli {
    /// Comma-separated prime prefix p_1, p_2, ...; later primes continue in order.
    #[arg(long, global = true, env = "MNFORGE_PRIMES", value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Depth used by `inv(expr)` and `comm(a, b)` when none is written.
    #[arg(long, global = true, env = "MNFORGE_DEPTH", value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: Option<u32>,
    #[arg(long, global = true, env = "MNFORGE_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
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
    /// Decide membership in the center, cross-checked by commutation.
    Central {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two group words: LT, EQ or GT.
    Order { left: String, right: String },
    /// Coefficient of x1^-1...xk^-1 in gamma(N)^k.
    GammaWitness {
        #[arg(long = "N")]
        n_terms: u32,
        #[arg(long)]
        deg: u32,
    },
    /// Dimension of the center of A_n.
    Centralizer {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Regular norm of an element of A_n given by its 4^n coordinates.
    Norm {
        #[command(flatten)]
        params: ParamArgs,
        /// Coordinates, comma or space separated, in basis-index order.
        #[arg(required = true, allow_hyphen_values = true, value_delimiter = ',')]
        coords: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        /// field, order, series, center, gamma, algebra, herstein or all.
        suite: String,
        #[arg(long, env = "MNFORGE_SEED", default_value_t = 0)]
        seed: u64,
        /// Override the trial count of every randomized check.
        #[arg(long, env = "MNFORGE_TRIALS")]
        trials: Option<usize>,
    },
}

#[derive(Debug, clap::Args)]
pub struct ParamArgs {
    /// Number of quaternion factors.
    #[arg(long = "n")]
    pub factors: usize,
    /// a_1, ..., a_n (default: p_1, ..., p_n).
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub a: Option<Vec<String>>,
    /// b_1, ..., b_n (default: p_{n+1}, ..., p_{2n}).
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub b: Option<Vec<String>>,
}

impl ParamArgs {
    fn resolve(&self, primes: &PrimeTable) -> Result<AlgebraParams, CliError> {
        if self.factors == 0 || self.factors > mnforge::algebra::MAX_FACTORS {
            return Err(CliError::Usage(format!(
                "--n must be between 1 and {}",
                mnforge::algebra::MAX_FACTORS
            )));
        }
        let default = AlgebraParams::from_primes(self.factors, primes);
        let a = match &self.a {
            Some(v) => rationals(v)?,
            None => default.a().to_vec(),
        };
        let b = match &self.b {
            Some(v) => rationals(v)?,
            None => default.b().to_vec(),
        };
        if a.len() != self.factors || b.len() != self.factors {
            return Err(CliError::Usage(format!("--a and --b need {} values each", self.factors)));
        }
        Ok(AlgebraParams::new(a, b)?)
    }
}

fn rationals(values: &[String]) -> Result<Vec<Rational>, CliError> {
    values
        .iter()
        .flat_map(|v| v.split_whitespace())
        .map(|v| parse_rational(v).ok_or_else(|| CliError::Usage(format!("not a rational: `{v}`"))))
        .collect()
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let ok = !e.use_stderr();
            return CommandResult {
                status: if ok { Status::Ok } else { Status::Error },
                exit_code: e.exit_code(),
                text: if ok { e.to_string() } else { String::new() },
                records: Vec::new(),
                diagnostics: if ok { String::new() } else { e.to_string() },
            };
        }
    };
    let mut out = Output::default();
    match execute(&cli, &mut out) {
        Ok(()) => CommandResult {
            status: Status::Ok,
            exit_code: 0,
            text: out.text,
            records: out.records,
            diagnostics: out.diagnostics,
        },
        Err(e) => {
            let mut diagnostics = out.diagnostics;
            let _ = writeln!(diagnostics, "error: {e}");
            let mut records = out.records;
            records.push(json!({"schema_version": SCHEMA_VERSION, "status": "error", "message": e.to_string()}));
            CommandResult {
                status: Status::Error,
                exit_code: e.exit_code(),
                text: out.text,
                records,
                diagnostics,
            }
        }
    }
}

#[derive(Default)]
struct Output {
    text: String,
    records: Vec<Value>,
    diagnostics: String,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn record(&mut self, command: &str, mut body: Value) {
        let obj = body.as_object_mut().expect("records are objects");
        obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
        obj.insert("command".into(), json!(command));
        obj.insert("status".into(), json!("ok"));
        self.records.push(body);
    }
}

fn execute(cli: &Cli, out: &mut Output) -> Result<(), CliError> {
    let primes = match &cli.primes {
        Some(p) => PrimeTable::with_prefix(p)?,
        None => PrimeTable::default(),
    };
    match &cli.command {
        Command::Eval { expr } => {
            let value = eval_with_depth(&parse(expr).map_err(ExprError::from)?, &primes, cli.depth)
                .map_err(ExprError::from)?;
            out.line(value.to_string());
            out.record(
                "eval",
                json!({"text": value.to_string(), "series": SeriesRecord::from(&value)}),
            );
        }
        Command::Central { expr } => {
            let value = eval_with_depth(&parse(expr).map_err(ExprError::from)?, &primes, cli.depth)
                .map_err(ExprError::from)?;
            let central = value.is_central()?;
            let window = value.commutation_window_test(&primes)?;
            out.line(format!("central: {central}"));
            out.line(format!("window-test: {window} (indices 1..={})", value.window()));
            out.record(
                "central",
                json!({"text": value.to_string(), "central": central, "window_test": window, "window": value.window()}),
            );
            if central != window {
                return Err(CliError::CenterMismatch(value.to_string()));
            }
        }
        Command::Order { left, right } => {
            let x = parse_group_word(left, &primes)?;
            let y = parse_group_word(right, &primes)?;
            let ord = match x.cmp(&y) {
                std::cmp::Ordering::Less => "LT",
                std::cmp::Ordering::Equal => "EQ",
                std::cmp::Ordering::Greater => "GT",
            };
            out.line(ord);
            out.record(
                "order",
                json!({"left": x.to_string(), "right": y.to_string(), "result": ord}),
            );
        }
        Command::GammaWitness { n_terms, deg } => {
            let w = gamma_coefficient_witness(*n_terms, *deg, &primes)?;
            let coeff = format_rational(&w.coefficient);
            out.line(&coeff);
            out.line(format!("absent-below-degree: {}", w.absent_below_degree));
            out.record(
                "gamma-witness",
                json!({"N": n_terms, "deg": deg, "coefficient": coeff, "absent_below_degree": w.absent_below_degree}),
            );
        }
        Command::Centralizer { params } => {
            let p = params.resolve(&primes)?;
            let d = p.centralizer_dimension();
            out.line(d.to_string());
            out.record(
                "centralizer",
                json!({"params": AlgebraParamsRecord::from(&p), "dimension": d}),
            );
        }
        Command::Norm { params, coords } => {
            let p = params.resolve(&primes)?;
            let x = p.element(rationals(coords)?)?;
            let norm = format_rational(&p.norm(&x)?);
            out.line(&norm);
            out.record(
                "norm",
                json!({"params": AlgebraParamsRecord::from(&p), "norm": norm}),
            );
        }
        Command::Verify { suite, seed, trials } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(CliError::Usage)?]
            };
            let cfg = VerifyConfig {
                seed: *seed,
                trials: *trials,
                primes,
            };
            let (mut total_trials, mut total_failures) = (0, 0);
            for s in &suites {
                let start = Instant::now();
                let report = s.run(&cfg);
                // wall-clock time stays off stdout so reports are reproducible
                let _ = writeln!(out.diagnostics, "suite={} elapsed={:.3}s", s, start.elapsed().as_secs_f64());
                out.line(report.render());
                total_trials += report.trials();
                total_failures += report.failures();
                let summary = report.summary();
                let mut body = serde_json::to_value(&summary).expect("summary serializes");
                if let Some(obj) = body.as_object_mut() {
                    let failing: Vec<Value> = report
                        .checks
                        .iter()
                        .flat_map(|c| c.failures.iter().map(move |f| json!({"check": c.name, "detail": f})))
                        .collect();
                    obj.insert("failing_cases".into(), json!(failing));
                }
                out.record("verify", body);
            }
            if suites.len() > 1 {
                out.line(format!(
                    "total suites={} trials={} failures={} seed={}",
                    suites.len(),
                    total_trials,
                    total_failures,
                    seed
                ));
                out.record(
                    "verify",
                    json!({"suite": "all", "suites": suites.len(), "trials": total_trials, "failures": total_failures, "seed": seed}),
                );
            }
            if total_failures > 0 {
                return Err(CliError::VerifyFailed(total_failures));
            }
        }
    }
    Ok(())
}
