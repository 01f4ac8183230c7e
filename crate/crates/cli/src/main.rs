//! Command-line surface for the exact semistability engine.
//!
//! Subcommands: `weights` (fundamental weights), `minimal` (Bruhat-minimal
//! admitting sets vs the closed form), `coxeter` (per-Coxeter-element
//! classification), `verify` (named verification suites).
//!
//! Exit codes: 0 success, 1 verification failure/mismatch, 2 usage error,
//! 3 enumeration-limit refusal.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubert_ss::coxfeas::{classify_all, CoxeterExpected};
use schubert_ss::ssgit::{minimal_report, ClosedFormCase};
use schubert_ss::verify::run_suite;
use schubert_ss::{Error, Kind, RootSystem, DEFAULT_ENUM_LIMIT};

const LIMIT_ENV: &str = "SCHUBERT_SS_LIMIT";

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "schubert-ss", version, about = "Exact semistability computations for Schubert varieties under a maximal torus")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Ceiling on Weyl group enumeration (overrides the SCHUBERT_SS_LIMIT
    /// environment variable and the built-in default).
    #[arg(long, global = true)]
    limit: Option<u128>,

    /// Worker threads for the parallel filters (default: all cores).
    /// Output is deterministic regardless.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Grid ceiling for verification suites that sweep over ranks.
    #[arg(long, global = true)]
    max_rank: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the fundamental weights in simple-root coordinates.
    Weights { kind: String, rank: usize },
    /// Bruhat-minimal admitting elements of W^{I_r} for the r-th
    /// fundamental weight, compared with the closed-form classification.
    Minimal { kind: String, rank: usize, r: usize },
    /// Classify every distinct Coxeter element: does some nonzero
    /// dominant root-lattice weight chi satisfy w(chi) <= 0?
    Coxeter { kind: String, rank: usize },
    /// Run a named verification suite (pairing-bound, witnesses, minimal-sets,
    /// coord-bound, coxeter-sweep, fm-grid, invariants, a3-ray, all).
    Verify { suite: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        // Best-effort: a second initialization in the same process is the
        // only error case and is harmless.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let limit = cli.limit.or_else(read_limit_env).unwrap_or(DEFAULT_ENUM_LIMIT);
    let code = match &cli.command {
        Command::Weights { kind, rank } => cmd_weights(kind, *rank, cli.format),
        Command::Minimal { kind, rank, r } => cmd_minimal(kind, *rank, *r, cli.format, limit),
        Command::Coxeter { kind, rank } => cmd_coxeter(kind, *rank, cli.format),
        Command::Verify { suite } => cmd_verify(suite, cli.format, limit, cli.max_rank),
    };
    ExitCode::from(code)
}

fn read_limit_env() -> Option<u128> {
    let raw = std::env::var(LIMIT_ENV).ok()?;
    match raw.trim().parse() {
        Ok(v) => Some(v),
        Err(_) => {
            eprintln!("warning: ignoring unparseable {LIMIT_ENV}={raw:?}");
            None
        }
    }
}

fn build_system(kind: &str, rank: usize) -> Result<RootSystem, u8> {
    let kind = Kind::from_str(kind).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })?;
    RootSystem::build(kind, rank).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::EnumerationLimit { .. } | Error::RankGuard { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn emit_json(value: &Value) {
    // serde_json's map is ordered (BTreeMap), so keys come out sorted and
    // re-serialization of parsed output is byte-identical.
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn system_json(rs: &RootSystem) -> Value {
    json!({ "kind": rs.kind().to_string(), "rank": rs.rank() })
}

fn cmd_weights(kind: &str, rank: usize, format: Format) -> u8 {
    let rs = match build_system(kind, rank) {
        Ok(rs) => rs,
        Err(code) => return code,
    };
    let weights = match rs.fundamental_weights() {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return error_code(&e);
        }
    };
    match format {
        Format::Text => {
            println!("fundamental weights of {rs} (simple-root coordinates):");
            for (i, w) in weights.iter().enumerate() {
                println!("  w_{} = {}", i + 1, w);
            }
        }
        Format::Json => {
            let value = json!({
                "system": system_json(&rs),
                "weights": weights.iter().map(|w| w.fraction_strings()).collect::<Vec<_>>(),
            });
            emit_json(&value);
        }
        Format::Csv => {
            println!("r,coordinates");
            for (i, w) in weights.iter().enumerate() {
                println!("{},{}", i + 1, w.fraction_strings().join(" "));
            }
        }
    }
    EXIT_OK
}

fn word_string(word: &[usize]) -> String {
    word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_minimal(kind: &str, rank: usize, r: usize, format: Format, limit: u128) -> u8 {
    let rs = match build_system(kind, rank) {
        Ok(rs) => rs,
        Err(code) => return code,
    };
    let report = match minimal_report(&rs, r, limit) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return error_code(&e);
        }
    };
    let (expected_json, verdict) = match &report.expected {
        ClosedFormCase::Silent => (Value::Null, "closed-form-silent"),
        ClosedFormCase::Covered { weights, .. } => (
            json!(weights.iter().map(|w| w.fraction_strings()).collect::<Vec<_>>()),
            if report.matches == Some(true) { "match" } else { "mismatch" },
        ),
    };
    match format {
        Format::Text => {
            println!("minimal admitting elements of W^I_{r} in {rs} (weight = image of w_{r}):");
            for e in &report.oracle {
                println!("  word [{}]  weight {}", word_string(e.element.word()), e.weight);
            }
            println!("closed form: {verdict}");
            for m in &report.mismatches {
                println!("  mismatch: {m}");
            }
        }
        Format::Json => {
            let value = json!({
                "system": system_json(&rs),
                "r": r,
                "entries": report.oracle.iter().map(|e| json!({
                    "word": e.element.word(),
                    "weight": e.weight.fraction_strings(),
                })).collect::<Vec<_>>(),
                "expected": expected_json,
                "match": report.matches,
            });
            emit_json(&value);
        }
        Format::Csv => {
            println!("word,weight");
            for e in &report.oracle {
                println!(
                    "{},{}",
                    word_string(e.element.word()),
                    e.weight.fraction_strings().join(" ")
                );
            }
        }
    }
    if report.matches == Some(false) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn expected_string(e: &CoxeterExpected) -> &'static str {
    match e {
        CoxeterExpected::Biconditional(true) => "biconditional:admits",
        CoxeterExpected::Biconditional(false) => "biconditional:rejects",
        CoxeterExpected::NecessityPattern(true) => "pattern:member",
        CoxeterExpected::NecessityPattern(false) => "pattern:nonmember",
        CoxeterExpected::NotCovered => "not-covered",
    }
}

fn cmd_coxeter(kind: &str, rank: usize, format: Format) -> u8 {
    let rs = match build_system(kind, rank) {
        Ok(rs) => rs,
        Err(code) => return code,
    };
    let reports = match classify_all(&rs) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return error_code(&e);
        }
    };
    let all_agree = reports.iter().all(|r| r.agreement);
    match format {
        Format::Text => {
            println!("Coxeter elements of {rs}:");
            for r in &reports {
                println!(
                    "  word [{}]  admits {}  witness {}  filter {}  expected {}  agreement {}",
                    word_string(r.element.word()),
                    r.admits,
                    r.witness
                        .as_ref()
                        .map_or("-".to_string(), |w| w.to_string()),
                    r.passes_descent_filter,
                    expected_string(&r.expected),
                    r.agreement,
                );
            }
        }
        Format::Json => {
            let value = json!({
                "system": system_json(&rs),
                "entries": reports.iter().map(|r| json!({
                    "word": r.element.word(),
                    "admits": r.admits,
                    "witness": r.witness.as_ref().map(|w| w.fraction_strings()),
                    "passes_filter": r.passes_descent_filter,
                    "expected": expected_string(&r.expected),
                    "agreement": r.agreement,
                })).collect::<Vec<_>>(),
            });
            emit_json(&value);
        }
        Format::Csv => {
            println!("word,admits,witness,passes_filter,expected,agreement");
            for r in &reports {
                println!(
                    "{},{},{},{},{},{}",
                    word_string(r.element.word()),
                    r.admits,
                    r.witness
                        .as_ref()
                        .map_or("-".to_string(), |w| w.fraction_strings().join(" ")),
                    r.passes_descent_filter,
                    expected_string(&r.expected),
                    r.agreement,
                );
            }
        }
    }
    if all_agree {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cmd_verify(suite: &str, format: Format, limit: u128, max_rank: Option<usize>) -> u8 {
    let outcomes = match run_suite(suite, limit, max_rank) {
        Ok(Some(outcomes)) => outcomes,
        Ok(None) => {
            eprintln!(
                "error: unknown suite {suite:?}; expected one of pairing-bound, witnesses, \
                 minimal-sets, coord-bound, coxeter-sweep, fm-grid, invariants, a3-ray, all"
            );
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return error_code(&e);
        }
    };
    let all_pass = outcomes.iter().all(|o| o.passed());
    match format {
        Format::Text => {
            for o in &outcomes {
                println!("suite {}: {}", o.suite, if o.passed() { "PASS" } else { "FAIL" });
                for c in &o.checks {
                    println!("  [{}] {} - {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.details);
                }
            }
        }
        Format::Json => {
            let value = json!({
                "suites": outcomes.iter().map(|o| json!({
                    "suite": o.suite,
                    "passed": o.passed(),
                    "checks": o.checks.iter().map(|c| json!({
                        "name": c.name,
                        "passed": c.passed,
                        "details": c.details,
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            emit_json(&value);
        }
        Format::Csv => {
            println!("suite,check,passed,details");
            for o in &outcomes {
                for c in &o.checks {
                    println!("{},{},{},{}", o.suite, c.name, c.passed, c.details.replace(',', ";"));
                }
            }
        }
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}
