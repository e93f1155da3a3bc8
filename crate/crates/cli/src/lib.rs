//! The `mel` command-line front end.
//!
//! Every subcommand is a thin adapter over `mel-core`. Exit codes are a
//! stable contract: 0 for success or an affirmative verdict, 1 for a
//! negative verdict (or a rewrite precondition failure), 2 for usage, parse
//! and validation errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use mel::equilibrium::{bounded_equiv, enumerate_models, ModelKind, Search, Side};
use mel::exec::Exec;
use mel::fom::{
    interpretation_from_json, is_qel_model, parse_fom, qht_sat, simplify_fom, translate, FomError,
    Term, DEFAULT_SUBSET_CAP,
};
use mel::rewrite::{Pass, Regime};
use mel::semantics::mht_sat;
use mel::syntax::{parse_formula, parse_theory, Theory};
use mel::traces::{trace_from_json, trace_to_json, Alphabet, Bounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "mel",
    version,
    about = "Metric equilibrium logic over finite timed traces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a theory against a trace at one step.
    Check {
        theory: PathBuf,
        trace: PathBuf,
        /// State index to evaluate at.
        #[arg(long, default_value_t = 0)]
        at: usize,
    },
    /// List the models of a theory within bounds, one JSON trace per line.
    Models {
        theory: PathBuf,
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Only equilibrium models.
        #[arg(long)]
        equilibrium: bool,
    },
    /// Compare the models of two theories within bounds.
    Equiv {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    /// Apply one rewrite pass to a formula.
    Rewrite {
        #[arg(long)]
        formula: String,
        /// unf, unary, demorgan, dual, swap, split:<i> or onestep.
        #[arg(long)]
        pass: String,
        /// Do not assume strictly increasing time stamps.
        #[arg(long)]
        non_strict: bool,
    },
    /// Translate a formula into a first-order sentence.
    Translate {
        #[arg(long)]
        formula: String,
        /// Time point (a number) or variable name to translate at.
        #[arg(long, default_value = "0")]
        at: String,
        /// Print the translation as produced (the default).
        #[arg(long, conflicts_with = "simplified")]
        raw: bool,
        /// Simplify the translation before printing.
        #[arg(long)]
        simplified: bool,
    },
    /// Evaluate a first-order sentence in an interpretation.
    Qht {
        #[arg(long)]
        sentence_path: PathBuf,
        #[arg(long)]
        interp_path: PathBuf,
        /// Check whether the total interpretation is an equilibrium model.
        #[arg(long)]
        equilibrium: bool,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Longest trace length λ.
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    /// Largest final time stamp.
    #[arg(long, default_value_t = 10)]
    max_time: u64,
    /// Allow equal consecutive time stamps.
    #[arg(long)]
    non_strict: bool,
    /// Only traces of length exactly --max-len.
    #[arg(long)]
    exact_len: bool,
    /// Scan on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

impl BoundsArgs {
    fn bounds(&self, alphabet: Arc<Alphabet>) -> Bounds {
        let mut b = Bounds::new(alphabet, self.max_len, self.max_time);
        if self.non_strict {
            b = b.non_strict();
        }
        if self.exact_len {
            b = b.exact();
        }
        b
    }

    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }
}

/// A failed command: exit code and message for stderr.
struct Failure(i32, String);

type Outcome = Result<i32, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_theory(path: &Path) -> Result<Theory, Failure> {
    parse_theory(&read(path)?).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn alphabet_of(theories: &[&Theory]) -> Result<Arc<Alphabet>, Failure> {
    let atoms: BTreeSet<String> = theories.iter().flat_map(|t| t.atoms()).collect();
    Alphabet::new(atoms).map(Arc::new).map_err(usage)
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                EXIT_OK
            } else {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            };
        }
    };
    let result = match cli.command {
        Command::Check { theory, trace, at } => check(&theory, &trace, at, out),
        Command::Models {
            theory,
            bounds,
            equilibrium,
        } => models(&theory, &bounds, equilibrium, out, err),
        Command::Equiv {
            left,
            right,
            bounds,
        } => equiv(&left, &right, &bounds, out),
        Command::Rewrite {
            formula,
            pass,
            non_strict,
        } => rewrite(&formula, &pass, non_strict, out),
        Command::Translate {
            formula,
            at,
            simplified,
            ..
        } => translate_cmd(&formula, &at, simplified, out),
        Command::Qht {
            sentence_path,
            interp_path,
            equilibrium,
        } => qht(&sentence_path, &interp_path, equilibrium, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn check(theory: &Path, trace: &Path, at: usize, out: &mut impl Write) -> Outcome {
    let theory = read_theory(theory)?;
    let m = trace_from_json(&read(trace)?).map_err(usage)?;
    if at >= m.len() {
        return Err(usage(format!(
            "step {at} is outside a trace of length {}",
            m.len()
        )));
    }
    let mut failing = Vec::new();
    for (k, f) in theory.iter().enumerate() {
        let ok = mht_sat(&m, at, f).map_err(usage)?;
        writeln!(
            out,
            "formula {}: {} {f}",
            k + 1,
            if ok { "sat  " } else { "unsat" }
        )
        .map_err(usage)?;
        if !ok {
            failing.push(k + 1);
        }
    }
    match failing.first() {
        None => {
            writeln!(out, "SAT").map_err(usage)?;
            Ok(EXIT_OK)
        }
        Some(k) => {
            writeln!(out, "UNSAT(formula {k})").map_err(usage)?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn models(
    theory: &Path,
    args: &BoundsArgs,
    equilibrium: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Outcome {
    let theory = read_theory(theory)?;
    let bounds = args.bounds(alphabet_of(&[&theory])?);
    let kind = if equilibrium {
        ModelKind::Equilibrium
    } else {
        ModelKind::Total
    };
    let found =
        enumerate_models(&theory, &bounds, kind, &Search::with_exec(args.exec())).map_err(usage)?;
    for m in &found {
        writeln!(out, "{}", trace_to_json(m)).map_err(usage)?;
    }
    let noun = if found.len() == 1 { "model" } else { "models" };
    writeln!(err, "{} {noun}", found.len()).map_err(usage)?;
    Ok(EXIT_OK)
}

fn equiv(left: &Path, right: &Path, args: &BoundsArgs, out: &mut impl Write) -> Outcome {
    let (l, r) = (read_theory(left)?, read_theory(right)?);
    let bounds = args.bounds(alphabet_of(&[&l, &r])?);
    let verdict = bounded_equiv(&l, &r, &bounds, args.exec()).map_err(usage)?;
    match verdict.counterexample {
        None => {
            writeln!(out, "EQUIVALENT (within bounds)").map_err(usage)?;
            Ok(EXIT_OK)
        }
        Some(cx) => {
            let side = match cx.side {
                Side::Left => "left",
                Side::Right => "right",
            };
            writeln!(out, "NOT EQUIVALENT").map_err(usage)?;
            writeln!(out, "{}", trace_to_json(&cx.trace)).map_err(usage)?;
            writeln!(out, "fails: {side} formula {}", cx.formula + 1).map_err(usage)?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn rewrite(formula: &str, pass: &str, non_strict: bool, out: &mut impl Write) -> Outcome {
    let f = parse_formula(formula).map_err(usage)?;
    let pass: Pass = pass.parse().map_err(usage)?;
    let regime = if non_strict {
        Regime::NonStrict
    } else {
        Regime::Strict
    };
    let g = pass
        .apply(&f, regime)
        .map_err(|e| Failure(EXIT_NEGATIVE, e.to_string()))?;
    writeln!(out, "{g}").map_err(usage)?;
    Ok(EXIT_OK)
}

fn translate_cmd(formula: &str, at: &str, simplified: bool, out: &mut impl Write) -> Outcome {
    let f = parse_formula(formula).map_err(usage)?;
    let term = match at.parse::<u64>() {
        Ok(0) => Term::Zero,
        Ok(t) => Term::Point(t),
        Err(_) if at.starts_with(|c: char| c.is_ascii_lowercase()) => Term::var(at),
        Err(_) => {
            return Err(usage(format!(
                "`{at}` is neither a time point nor a variable"
            )))
        }
    };
    let s = translate(&f, &term).map_err(|e| Failure(EXIT_NEGATIVE, e.to_string()))?;
    let s = if simplified { simplify_fom(&s) } else { s };
    writeln!(out, "{s}").map_err(usage)?;
    Ok(EXIT_OK)
}

fn qht(sentence: &Path, interp: &Path, equilibrium: bool, out: &mut impl Write) -> Outcome {
    let s = parse_fom(read(sentence)?.trim())
        .map_err(|e| usage(format!("{}:{e}", sentence.display())))?;
    if !s.is_sentence() {
        let free: Vec<String> = s.free_vars().into_iter().collect();
        return Err(usage(format!("free variables: {}", free.join(", "))));
    }
    let i = interpretation_from_json(&read(interp)?).map_err(usage)?;
    if !equilibrium {
        let ok = qht_sat(&i, &s).map_err(usage)?;
        writeln!(out, "{}", if ok { "SAT" } else { "UNSAT" }).map_err(usage)?;
        return Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE });
    }
    match is_qel_model(i.domain(), i.there(), &s, DEFAULT_SUBSET_CAP) {
        Ok(v) if v.is_equilibrium => {
            writeln!(out, "EQ").map_err(usage)?;
            Ok(EXIT_OK)
        }
        Ok(v) => {
            let here = v.witness.unwrap_or_default();
            let atoms: Vec<String> = here.iter().map(|(p, t)| format!("{p}({t})")).collect();
            writeln!(out, "NON-EQ").map_err(usage)?;
            writeln!(out, "witness H = {{{}}}", atoms.join(", ")).map_err(usage)?;
            Ok(EXIT_NEGATIVE)
        }
        Err(FomError::NotModel) => {
            writeln!(out, "NON-EQ").map_err(usage)?;
            writeln!(out, "the total interpretation is not a model").map_err(usage)?;
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(usage(e)),
    }
}
