//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when the question asked has a negative
//! answer or the engines report a domain failure, 2 on usage and input
//! errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::folding::{fold, fold_trace, Direction, FoldError, FoldTrace, ProcString};
use crate::fsystem::{FSystem, Limits};
use crate::pumping::{
    build_plan, plan_to_family, refute_unary_family, verify_family, verify_plan, PlanConfig,
    PumpFamily, UnaryPredicate,
};

#[derive(Debug, Parser)]
#[command(
    name = "foldsys",
    version,
    about = "Folding systems: fold, enumerate, pump, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fold a word under a direction string over {u, d}
    Fold {
        word: String,
        directions: String,
        /// Show every intermediate stack
        #[arg(long)]
        trace: bool,
    },
    /// List the folded language up to a length, one word per line
    Enum {
        system: PathBuf,
        #[arg(long, default_value_t = 14)]
        max_len: usize,
    },
    /// Decide membership in the folded language
    Member { system: PathBuf, word: String },
    /// Build a pump family from the lemma matching the component kinds
    Pump {
        system: PathBuf,
        #[arg(long, default_value_t = 4)]
        imax: usize,
        /// Print one JSON document instead of the summary
        #[arg(long)]
        json: bool,
        /// Also write the family JSON to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a family file against a system
    Verify {
        system: PathBuf,
        #[arg(long)]
        family: PathBuf,
        #[arg(long, default_value_t = 4)]
        imax: usize,
    },
    /// Find a repetition count that takes a unary family out of a length predicate
    RefuteUnary {
        #[arg(long)]
        predicate: UnaryPredicate,
        #[arg(long)]
        family: PathBuf,
        #[arg(long, default_value_t = 1000)]
        bound: usize,
    },
}

/// Ends the command with a message on stderr and the given status.
struct Failure {
    status: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        status: 2,
        message: message.to_string(),
    }
}

fn domain(message: impl ToString) -> Failure {
    Failure {
        status: 1,
        message: message.to_string(),
    }
}

type Outcome = Result<i32, Failure>;

/// Empty words are shown as `""`.
fn shown(w: &str) -> &str {
    if w.is_empty() {
        "\"\""
    } else {
        w
    }
}

/// One block per step: the direction, the symbol, and the stack after the
/// step with the new symbol bracketed at the end it was added to.
pub fn render_trace(trace: &FoldTrace) -> String {
    if trace.steps.is_empty() {
        return "(empty)\n".to_string();
    }
    let mut out = String::new();
    for (t, step) in trace.steps.iter().enumerate() {
        let label = match step.direction {
            Direction::Up => "fold up",
            Direction::Down => "fold down",
        };
        let n = step.stack.chars().count();
        let stack = match step.direction {
            Direction::Up => {
                let rest: String = step.stack.chars().skip(1).collect();
                format!("[{}]{rest}", step.symbol)
            }
            Direction::Down => {
                let rest: String = step.stack.chars().take(n - 1).collect();
                format!("{rest}[{}]", step.symbol)
            }
        };
        let _ = writeln!(out, "step {}: {label} '{}'", t + 1, step.symbol);
        let _ = writeln!(out, "  {stack}");
    }
    let _ = writeln!(out, "result: {}", trace.result());
    out
}

fn load_system(path: &Path) -> Result<FSystem, Failure> {
    FSystem::load(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_family(path: &Path) -> Result<PumpFamily, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    PumpFamily::from_json(text.trim()).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cmd_fold(out: &mut dyn Write, word: &str, directions: &str, trace: bool) -> Outcome {
    let v: ProcString = directions.parse().map_err(|e: FoldError| usage(e))?;
    if trace {
        let t = fold_trace(word, &v).map_err(domain)?;
        write!(out, "{}", render_trace(&t)).map_err(domain)?;
    } else {
        let folded = fold(word, &v).map_err(domain)?;
        writeln!(out, "{}", shown(&folded)).map_err(domain)?;
    }
    Ok(0)
}

fn cmd_enum(out: &mut dyn Write, system: &Path, max_len: usize) -> Outcome {
    let phi = load_system(system)?;
    let words = phi.enumerate(max_len, &Limits::default()).map_err(domain)?;
    for w in words {
        writeln!(out, "{}", shown(&w.word)).map_err(domain)?;
    }
    Ok(0)
}

fn cmd_member(out: &mut dyn Write, system: &Path, word: &str) -> Outcome {
    let phi = load_system(system)?;
    match phi.member(word, &Limits::default()).map_err(domain)? {
        Some(w) => {
            writeln!(
                out,
                "yes: fold({}, {})",
                shown(&w.core),
                shown(&w.procedure)
            )
            .map_err(domain)?;
            Ok(0)
        }
        None => {
            writeln!(out, "no").map_err(domain)?;
            Ok(1)
        }
    }
}

fn cmd_pump(
    out: &mut dyn Write,
    system: &Path,
    imax: usize,
    as_json: bool,
    file: Option<&Path>,
) -> Outcome {
    let phi = load_system(system)?;
    let plan = build_plan(&phi, &PlanConfig::default()).map_err(domain)?;
    let plan_report = verify_plan(&plan, &phi, plan.j0..=plan.j0 + 3);
    let family = plan_to_family(&plan);
    let family_report =
        verify_family(&family, &phi, 0..=imax, &Limits::default()).map_err(domain)?;
    let passed = plan_report.passed() && family_report.passed();
    let failure = plan_report
        .first_failure()
        .or_else(|| family_report.first_failure());
    let family_json = family.to_json();
    if let Some(path) = file {
        std::fs::write(path, format!("{family_json}\n"))
            .map_err(|e| domain(format!("cannot write {}: {e}", path.display())))?;
    }
    let verdict = if passed { "PASS" } else { "FAIL" };
    if as_json {
        let doc = json!({
            "lemma": plan.lemma.to_string(),
            "case": plan.case.map(|c| c.to_string()),
            "core_word": plan.core_word,
            "procedure_word": plan.procedure_word,
            "j0": plan.j0,
            "xi": plan.xi,
            "mu": plan.mu,
            "family": serde_json::to_value(&family).expect("plain data"),
            "plan_verified": plan_report.passed(),
            "imax": imax,
            "verified": passed,
            "failure": failure,
        });
        writeln!(out, "{doc}").map_err(domain)?;
    } else {
        let mut s = String::new();
        let _ = write!(s, "lemma: {}", plan.lemma);
        if let Some(case) = plan.case {
            let _ = write!(s, " ({case})");
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "pair: r={} s={}", plan.core_word, plan.procedure_word);
        let _ = writeln!(s, "core decomposition: {}", plan.core_decomposition);
        let _ = writeln!(
            s,
            "procedure decomposition: {}",
            plan.procedure_decomposition
        );
        let _ = writeln!(s, "j0: {}", plan.j0);
        for (k, (x, m)) in plan.xi.iter().zip(&plan.mu).enumerate() {
            let mark = if k % 2 == 1 { " (pumped)" } else { "" };
            let _ = writeln!(s, "window {}: {} / {}{mark}", k + 1, shown(x), shown(m));
        }
        let _ = writeln!(
            s,
            "plan j={}..{}: {}",
            plan.j0,
            plan.j0 + 3,
            if plan_report.passed() { "PASS" } else { "FAIL" }
        );
        let _ = writeln!(s, "family: {family_json}");
        let _ = writeln!(s, "verified i=0..{imax}: {verdict}");
        if let Some(f) = &failure {
            let _ = writeln!(s, "failure: {f}");
        }
        write!(out, "{s}").map_err(domain)?;
    }
    Ok(if passed { 0 } else { 1 })
}

fn cmd_verify(out: &mut dyn Write, system: &Path, family: &Path, imax: usize) -> Outcome {
    let phi = load_system(system)?;
    let family = load_family(family)?;
    let report = verify_family(&family, &phi, 0..=imax, &Limits::default()).map_err(domain)?;
    for c in &report.family {
        match &c.witness {
            Some(w) => writeln!(
                out,
                "i={}: {} = fold({}, {})",
                c.i,
                shown(&c.word),
                shown(&w.core),
                shown(&w.procedure)
            ),
            None => writeln!(out, "i={}: {} NOT in the language", c.i, shown(&c.word)),
        }
        .map_err(domain)?;
    }
    let passed = report.passed();
    writeln!(
        out,
        "verified i=0..{imax}: {}",
        if passed { "PASS" } else { "FAIL" }
    )
    .map_err(domain)?;
    Ok(if passed { 0 } else { 1 })
}

fn cmd_refute(
    out: &mut dyn Write,
    predicate: UnaryPredicate,
    family: &Path,
    bound: usize,
) -> Outcome {
    let family = load_family(family)?;
    match refute_unary_family(|n| predicate.holds(n), &family, bound).map_err(domain)? {
        Some(i) => {
            let len = family.fixed_total() + i * family.pumped_total();
            writeln!(out, "witness i={i}: length {len} is not {predicate}").map_err(domain)?;
            Ok(0)
        }
        None => {
            writeln!(out, "no witness for i=1..{bound}").map_err(domain)?;
            Ok(1)
        }
    }
}

/// Runs one command line (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return status;
        }
    };
    let outcome = match &cli.command {
        Command::Fold {
            word,
            directions,
            trace,
        } => cmd_fold(out, word, directions, *trace),
        Command::Enum { system, max_len } => cmd_enum(out, system, *max_len),
        Command::Member { system, word } => cmd_member(out, system, word),
        Command::Pump {
            system,
            imax,
            json,
            out: file,
        } => cmd_pump(out, system, *imax, *json, file.as_deref()),
        Command::Verify {
            system,
            family,
            imax,
        } => cmd_verify(out, system, family, *imax),
        Command::RefuteUnary {
            predicate,
            family,
            bound,
        } => cmd_refute(out, *predicate, family, *bound),
    };
    match outcome {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}
