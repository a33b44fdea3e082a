//! Command-line front end: reads a JSON experiment spec, runs one command
//! and renders a plain-text report ending in `RESULT: equal|mismatch|error`.

pub mod spec;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use pomset_codes::{
    auto_method, macwilliams_probe, verify_identity, weight_enumerator, Error, Method, Verdict, WeightEnumerator,
    DEFAULT_BUDGET,
};

pub use spec::{ExperimentSpec, Options, PomsetSpec};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

const DEFAULT_TRIALS: usize = 200;
const MAX_LISTED_WORDS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Weight enumerator of the code itself.
    Enumerate,
    /// Dual code and its enumerator under the dual pomset.
    Dual,
    /// Predict the dual enumerator with an identity and compare with brute force.
    Verify,
    /// Search for codes with equal enumerators but different dual enumerators.
    Probe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Theorem,
    Corollary,
    Sum,
    Fourier,
}

impl MethodArg {
    fn parse(s: &str) -> Result<Self, String> {
        <Self as ValueEnum>::from_str(s, false).map_err(|_| format!("unknown method {s:?}"))
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Theorem => "theorem",
            MethodArg::Corollary => "corollary",
            MethodArg::Sum => "sum",
            MethodArg::Fourier => "fourier",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pomset-codes", version, about = "Weight enumerators and MacWilliams-type identities for pomset block codes")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// JSON experiment spec.
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Largest ambient space (in vectors) a brute-force scan may visit.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Print the effective spec (flags merged into its options) and stop.
    #[arg(long)]
    pub dump_spec: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: u8,
    pub report: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::NonInteger(_) => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: String) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message,
    }
}

fn enumerator_lines(out: &mut String, label: &str, w: &WeightEnumerator) {
    let _ = writeln!(out, "{label}: {w}");
    let _ = writeln!(out, "{label} coefficients: {}", w.coefficient_list());
}

/// Reads the spec at `cli.spec` and runs the command.
pub fn run(cli: &Cli) -> Outcome {
    match std::fs::read_to_string(&cli.spec) {
        Ok(text) => execute(cli, &text),
        Err(e) => finish(
            String::new(),
            Err(invalid(format!("cannot read {}: {e}", cli.spec.display()))),
        ),
    }
}

/// Runs the command on spec text already in memory.
pub fn execute(cli: &Cli, spec_text: &str) -> Outcome {
    let mut out = String::new();
    let result = execute_inner(cli, spec_text, &mut out);
    finish(out, result)
}

fn finish(mut out: String, result: Result<bool, Failure>) -> Outcome {
    let exit_code = match result {
        Ok(true) => {
            out.push_str("RESULT: equal\n");
            EXIT_OK
        }
        Ok(false) => {
            out.push_str("RESULT: mismatch\n");
            EXIT_MISMATCH
        }
        Err(f) => {
            let _ = writeln!(out, "error: {}", f.message);
            out.push_str("RESULT: error\n");
            f.code
        }
    };
    Outcome { exit_code, report: out }
}

fn merged_spec(cli: &Cli, spec_text: &str) -> Result<ExperimentSpec, Failure> {
    let mut spec = ExperimentSpec::parse(spec_text).map_err(invalid)?;
    let o = &mut spec.options;
    if let Some(m) = cli.method {
        o.method = Some(m.name().to_string());
    }
    o.trials = cli.trials.or(o.trials);
    o.seed = cli.seed.or(o.seed);
    o.budget = cli.budget.or(o.budget);
    Ok(spec)
}

fn execute_inner(cli: &Cli, spec_text: &str, out: &mut String) -> Result<bool, Failure> {
    let spec = merged_spec(cli, spec_text)?;
    let exp = spec.build().map_err(invalid)?;
    if cli.dump_spec {
        out.push_str(&spec.to_json());
        out.push('\n');
        return Ok(true);
    }
    let budget = spec.options.budget.unwrap_or(DEFAULT_BUDGET);
    let (code, pomset, structure) = (&exp.code, &exp.pomset, &exp.structure);

    let _ = writeln!(out, "command: {}", format!("{:?}", cli.command).to_lowercase());
    let _ = writeln!(out, "modulus: {}", spec.m);
    let _ = writeln!(out, "blocks: {:?}", spec.blocks);
    let _ = writeln!(out, "pomset: {}", spec.pomset.describe());
    let _ = writeln!(out, "code size: {}", code.size());

    match cli.command {
        Command::Enumerate => {
            enumerator_lines(out, "enumerator", &weight_enumerator(code, pomset, structure)?);
            Ok(true)
        }
        Command::Dual => {
            let dual = code.dual(budget)?;
            let _ = writeln!(out, "dual size: {}", dual.size());
            let listed: Vec<String> = dual.words().iter().take(MAX_LISTED_WORDS).map(|w| w.to_string()).collect();
            let more = dual.size().saturating_sub(MAX_LISTED_WORDS);
            let suffix = if more > 0 { format!(", ... ({more} more)") } else { String::new() };
            let _ = writeln!(out, "dual words: {{{}{suffix}}}", listed.join(", "));
            enumerator_lines(out, "dual enumerator", &weight_enumerator(&dual, &pomset.dual(), structure)?);
            Ok(true)
        }
        Command::Verify => {
            let requested = match &spec.options.method {
                Some(m) => MethodArg::parse(m).map_err(invalid)?,
                None => MethodArg::Auto,
            };
            let method = match requested {
                MethodArg::Auto if spec.pomset.is_composition() => Method::Sum,
                MethodArg::Auto => auto_method(pomset, structure),
                MethodArg::Theorem => Method::Theorem,
                MethodArg::Corollary => Method::Corollary,
                MethodArg::Sum => Method::Sum,
                MethodArg::Fourier => Method::Fourier,
            };
            let report = match verify_identity(code, pomset, structure, method, Some(&exp.tree), budget) {
                Err(Error::Hypothesis(why)) if requested == MethodArg::Auto && method == Method::Sum => {
                    let _ = writeln!(out, "note: {why}; falling back to fourier");
                    verify_identity(code, pomset, structure, Method::Fourier, None, budget)?
                }
                other => other?,
            };
            let _ = writeln!(out, "method: {}", report.method);
            enumerator_lines(out, "code enumerator", &report.code_enumerator);
            enumerator_lines(out, "predicted dual enumerator", &report.predicted);
            enumerator_lines(out, "brute-force dual enumerator", &report.actual);
            let _ = writeln!(out, "dual size: {}", report.dual_size);
            match report.verdict {
                Verdict::Equal => Ok(true),
                Verdict::Mismatch { first_difference } => {
                    let _ = writeln!(
                        out,
                        "first difference: weight {first_difference} (predicted {}, brute force {})",
                        report.predicted.coeff(first_difference),
                        report.actual.coeff(first_difference)
                    );
                    Ok(false)
                }
            }
        }
        Command::Probe => {
            let trials = spec.options.trials.unwrap_or(DEFAULT_TRIALS);
            let seed = spec.options.seed.unwrap_or(0);
            let r = macwilliams_probe(pomset, structure, trials, seed, budget)?;
            let _ = writeln!(out, "trials: {trials}");
            let _ = writeln!(out, "seed: {seed}");
            let _ = writeln!(out, "codes examined: {}", r.codes_examined);
            let _ = writeln!(out, "enumerator classes: {}", r.enumerator_classes);
            match r.witness {
                None => {
                    let _ = writeln!(out, "witness: none");
                    Ok(true)
                }
                Some(w) => {
                    let words = |c: &pomset_codes::LinearCode| {
                        let g: Vec<String> = c.generators().iter().map(|v| v.to_string()).collect();
                        format!("<{}>", g.join(", "))
                    };
                    let _ = writeln!(out, "witness: {} and {}", words(&w.first), words(&w.second));
                    enumerator_lines(out, "shared enumerator", &w.enumerator);
                    enumerator_lines(out, "first dual enumerator", &w.first_dual);
                    enumerator_lines(out, "second dual enumerator", &w.second_dual);
                    Ok(false)
                }
            }
        }
    }
}
