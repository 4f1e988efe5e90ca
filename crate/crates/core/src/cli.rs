//! Command-line front end. Reports go to stdout (or `--out`), progress to stderr.
//!
//! Exit status: 0 success, 1 internal error or verify mismatch, 2 usage error,
//! 3 budget refusal.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::code::{CodeSpec, Family};
use crate::engine::{verify, EngineConfig, Tier, VerifyReport};
use crate::error::Error;
use crate::field::FieldCtx;
use crate::hermitian::{witness, DEFAULT_WITNESS_BUDGET};
use crate::spectra::predict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tracecodes", version, about = "Weight distributions of trace cyclic codes C, D, E over F_q")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// key=value file: workers, quick_budget, standard_budget, extended_budget, witness_budget.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Field size q (a prime power); alternative to --p/--e.
    #[arg(long, conflicts_with_all = ["p", "e"])]
    q: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, requires = "p")]
    e: Option<u32>,
    #[arg(long)]
    m: u32,
}

impl FieldArgs {
    fn resolve(&self) -> Result<(u64, u32, u64), Error> {
        let (p, e) = match (self.q, self.p) {
            (Some(q), _) => prime_power(q).ok_or(Error::NotPrimePower(q))?,
            (None, Some(p)) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                (p, self.e.unwrap_or(1))
            }
            (None, None) => return Err(Error::InvalidParameter("give --q or --p [--e]".into())),
        };
        if e == 0 || self.m == 0 {
            return Err(Error::InvalidParameter("e and m must be positive".into()));
        }
        let q = p.checked_pow(e).ok_or_else(|| Error::InvalidParameter("q overflows".into()))?;
        Ok((p, e, q))
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum TierArg {
    Quick,
    Standard,
    Extended,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Tier {
        match t {
            TierArg::Quick => Tier::Quick,
            TierArg::Standard => Tier::Standard,
            TierArg::Extended => Tier::Extended,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form weight distribution.
    Predict {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        family: Family,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare the closed form with an enumeration oracle.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        family: Family,
        #[arg(long, value_enum, default_value = "quick")]
        tier: TierArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Hermitian forms graph witness.
    Witness {
        #[command(flatten)]
        field: FieldArgs,
    },
}

/// Budgets and worker count, optionally overridden from a key=value file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub workers: Option<usize>,
    pub quick_budget: u128,
    pub standard_budget: u128,
    pub extended_budget: u128,
    pub witness_budget: u128,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            workers: None,
            quick_budget: Tier::Quick.default_budget(),
            standard_budget: Tier::Standard.default_budget(),
            extended_budget: Tier::Extended.default_budget(),
            witness_budget: DEFAULT_WITNESS_BUDGET,
        }
    }
}

impl Settings {
    pub fn parse(text: &str) -> Result<Settings, Error> {
        let mut s = Settings::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::InvalidParameter(format!("config line {}: {raw:?}", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            let num = || value.parse::<u128>().map_err(|_| bad());
            match key.trim() {
                "workers" => s.workers = Some(value.parse().map_err(|_| bad())?),
                "quick_budget" => s.quick_budget = num()?,
                "standard_budget" => s.standard_budget = num()?,
                "extended_budget" => s.extended_budget = num()?,
                "witness_budget" => s.witness_budget = num()?,
                _ => return Err(bad()),
            }
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Settings, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        Settings::parse(&text)
    }

    pub fn budget(&self, tier: Tier) -> u128 {
        match tier {
            Tier::Quick => self.quick_budget,
            Tier::Standard => self.standard_budget,
            Tier::Extended => self.extended_budget,
        }
    }
}

#[derive(Serialize)]
struct Refusal {
    refused: bool,
    command: &'static str,
    q: u64,
    m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tier: Option<Tier>,
    estimate: String,
    budget: String,
    message: String,
}

fn verify_csv(r: &VerifyReport) -> String {
    let mut weights: Vec<u64> =
        r.predicted.iter().map(|(w, _)| w).chain(r.oracle.iter().map(|(w, _)| w)).collect();
    weights.sort_unstable();
    weights.dedup();
    let mut out = String::from("weight,predicted,oracle\n");
    for w in weights {
        out.push_str(&format!("{w},{},{}\n", r.predicted.get(w), r.oracle.get(w)));
    }
    out
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::NotPrime(_)
        | Error::NotPrimePower(_)
        | Error::InvalidParameter(_)
        | Error::FieldTooLarge { .. }
        | Error::Degenerate(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

struct Outcome {
    text: String,
    code: i32,
}

fn execute(cli: &Cli, settings: &Settings, err: &mut dyn Write) -> Result<Outcome, (Error, Option<String>)> {
    let plain = |e: Error| (e, None);
    match &cli.command {
        Command::Predict { field, family, format } => {
            let (_, _, q) = field.resolve().map_err(plain)?;
            let dist = predict(q, field.m, *family).map_err(plain)?;
            let text = match format {
                Format::Json => to_json(&dist),
                Format::Csv => dist.to_csv(),
            };
            Ok(Outcome { text, code: EXIT_OK })
        }
        Command::Verify { field, family, tier, format } => {
            let (p, e, q) = field.resolve().map_err(plain)?;
            let tier = Tier::from(*tier);
            let ctx = FieldCtx::new(p, e, 2 * field.m).map_err(plain)?;
            let spec = CodeSpec::build(Arc::new(ctx), *family).map_err(plain)?;
            let mut cfg = EngineConfig::default().budget(settings.budget(tier));
            if let Some(w) = cli.workers.or(settings.workers) {
                cfg.workers = w.max(1);
            }
            let sink = std::sync::Mutex::new(std::io::stderr());
            cfg.progress = Some(Arc::new(move |pct| {
                let _ = writeln!(sink.lock().unwrap(), "progress: {pct}%");
            }));
            let _ = writeln!(err, "verify {family}_({q},{}) tier {tier}", field.m);
            match verify(&spec, tier, &cfg) {
                Ok(report) => {
                    let text = match format {
                        Format::Json => to_json(&report),
                        Format::Csv => verify_csv(&report),
                    };
                    Ok(Outcome { text, code: if report.equal { EXIT_OK } else { EXIT_FAILURE } })
                }
                Err(e @ Error::BudgetExceeded { estimate, budget }) => {
                    let refusal = Refusal {
                        refused: true,
                        command: "verify",
                        q,
                        m: field.m,
                        family: Some(*family),
                        tier: Some(tier),
                        estimate: estimate.to_string(),
                        budget: budget.to_string(),
                        message: format!("{e}; try a larger tier or budget"),
                    };
                    Err((e, Some(to_json(&refusal))))
                }
                Err(e) => Err(plain(e)),
            }
        }
        Command::Witness { field } => {
            let (_, _, q) = field.resolve().map_err(plain)?;
            match witness(q, field.m, settings.witness_budget) {
                Ok(report) => Ok(Outcome { text: to_json(&report), code: EXIT_OK }),
                Err(e @ Error::BudgetExceeded { estimate, budget }) => {
                    let refusal = Refusal {
                        refused: true,
                        command: "witness",
                        q,
                        m: field.m,
                        family: None,
                        tier: None,
                        estimate: estimate.to_string(),
                        budget: budget.to_string(),
                        message: e.to_string(),
                    };
                    Err((e, Some(to_json(&refusal))))
                }
                Err(e) => Err(plain(e)),
            }
        }
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let settings = match cli.config.as_deref().map(Settings::load).transpose() {
        Ok(s) => s.unwrap_or_default(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let (text, code) = match execute(&cli, &settings, err) {
        Ok(Outcome { text, code }) => (Some(text), code),
        Err((e, report)) => {
            let _ = writeln!(err, "error: {e}");
            (report, exit_code(&e))
        }
    };
    if let Some(text) = text {
        if let Err(e) = emit(&text, cli.out.as_deref(), out) {
            let _ = writeln!(err, "error: cannot write report: {e}");
            return EXIT_FAILURE;
        }
    }
    code
}
