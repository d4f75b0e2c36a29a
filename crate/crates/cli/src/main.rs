//! Command-line front end: run the verification pipelines, print candidate
//! tables, query ring utilities, and emit JSON/markdown reports.
//!
//! Exit codes: 0 when every check passes, 1 on any verification mismatch,
//! 2 on usage errors (rejected before any computation starts).

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use knotgens::geodesic::{self, DEFAULT_ELIMINATION_TOL};
use knotgens::ring::{self, RingElem, RingId};
use knotgens::scenarios::{
    self, render_run_markdown, render_table_markdown, ScenarioRun, ALL_RUN_NAMES,
};
use knotgens::words::{evaluate, Word};

/// Environment variable holding an alternative spectrum data file.
const SPECTRUM_ENV: &str = "KNOTGENS_SPECTRUM";

#[derive(Parser)]
#[command(name = "knotgens", version, about = "Exact verification that equal-trace generating pairs of arithmetic two-bridge knot and link groups are parabolic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification pipelines and print a summary.
    ///
    /// SCENARIO is one of figure8, whitehead, link622, link623, trefoil,
    /// remark, triangle:<q> (odd q > 3), or "all" for everything but the
    /// triangle construction.
    Verify {
        scenario: String,
        /// Write the full JSON report here (atomically).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write a markdown report here (atomically).
        #[arg(long)]
        markdown: Option<PathBuf>,
        /// Geodesic elimination tolerance.
        #[arg(long, default_value_t = DEFAULT_ELIMINATION_TOL)]
        tolerance: f64,
    },
    /// Print the x^2 = z/y + y + 4 candidate table of an exact scenario.
    Table {
        scenario: String,
        /// Output format: md or json.
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// List the unit group of a ring.
    Units { ring: String },
    /// List all divisors of a + b*tau, sorted by (norm, a, b).
    Divisors { ring: String, a: i64, b: i64 },
    /// Print the exact square roots of a + b*tau, if any.
    Sqrt { ring: String, a: i64, b: i64 },
    /// Real translation length of a loxodromic element with trace a + b*tau.
    Length { ring: String, a: i64, b: i64 },
    /// Evaluate a word in an exact scenario's representation.
    ///
    /// Word syntax: lowercase letter = generator, uppercase = its inverse,
    /// `^` attaches an exponent, e.g. `a^-1 b^2`, `ba^-1b`, `A b^2`.
    Word { scenario: String, text: String },
}

/// Usage problems print to stderr and exit 2 before any computation.
struct UsageError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Verify {
            scenario,
            json,
            markdown,
            tolerance,
        } => cmd_verify(&scenario, json.as_deref(), markdown.as_deref(), tolerance),
        Command::Table { scenario, format } => cmd_table(&scenario, &format),
        Command::Units { ring } => {
            for u in ring::units(parse_ring(&ring)?) {
                println!("{u}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Divisors { ring, a, b } => {
            let e = parse_elem(&ring, a, b)?;
            let divs = ring::divisors(&e).map_err(|e| UsageError(e.to_string()))?;
            for d in divs {
                println!("{d}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sqrt { ring, a, b } => {
            let e = parse_elem(&ring, a, b)?;
            let roots = ring::sqrt_exact(&e).map_err(|e| UsageError(e.to_string()))?;
            if roots.is_empty() {
                println!("not a square");
            } else {
                for r in roots {
                    println!("{r}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Length { ring, a, b } => {
            let e = parse_elem(&ring, a, b)?;
            let len =
                geodesic::real_length(e.embed()).map_err(|e| UsageError(e.to_string()))?;
            println!("{len:.9}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Word { scenario, text } => cmd_word(&scenario, &text),
    }
}

fn parse_ring(name: &str) -> Result<RingId, UsageError> {
    RingId::parse(name).ok_or_else(|| {
        UsageError(format!(
            "unknown ring \"{name}\" (expected integers, gaussian, eisenstein, or kleinian7)"
        ))
    })
}

fn parse_elem(ring: &str, a: i64, b: i64) -> Result<RingElem, UsageError> {
    let ring = parse_ring(ring)?;
    RingElem::new(ring, a, b).map_err(|e| UsageError(e.to_string()))
}

/// Top-level JSON report contract: stable for CI consumption.
#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct VerifyOutput {
    artifact_version: &'static str,
    scenarios: Vec<ScenarioRun>,
}

fn verify_names(selector: &str) -> Result<Vec<String>, UsageError> {
    if selector == "all" {
        return Ok(ALL_RUN_NAMES.iter().map(|s| s.to_string()).collect());
    }
    if ALL_RUN_NAMES.contains(&selector) {
        return Ok(vec![selector.to_string()]);
    }
    if let Some(qs) = selector.strip_prefix("triangle:") {
        match qs.parse::<u32>() {
            Ok(q) if q > 3 && q % 2 == 1 => return Ok(vec![selector.to_string()]),
            _ => {
                return Err(UsageError(format!(
                    "triangle scenario needs an odd q > 3, got \"{qs}\""
                )))
            }
        }
    }
    Err(UsageError(format!(
        "unknown scenario \"{selector}\" (expected one of {}, triangle:<q>, or all)",
        ALL_RUN_NAMES.join(", ")
    )))
}

/// Loads spectra from the override file named by `KNOTGENS_SPECTRUM`.
fn spectrum_overrides() -> Result<Vec<geodesic::SpectrumData>, UsageError> {
    match std::env::var_os(SPECTRUM_ENV) {
        None => Ok(Vec::new()),
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(|e| {
                UsageError(format!("cannot read {}: {e}", Path::new(&path).display()))
            })?;
            geodesic::parse_spectra(&text).map_err(|e| UsageError(e.to_string()))
        }
    }
}

fn run_one(name: &str, tol: f64, overrides: &[geodesic::SpectrumData]) -> ScenarioRun {
    let result = match scenarios::exact_scenario(name) {
        Some(mut s) => {
            if let Some(sp) = overrides.iter().find(|sp| sp.manifold == name) {
                s.spectrum = Some(sp.clone());
            }
            scenarios::run_scenario(&s, tol)
        }
        None => scenarios::run_by_name(name, tol),
    };
    // a hard pipeline error becomes a single failed check so the summary
    // and exit code stay meaningful
    result.unwrap_or_else(|err| ScenarioRun {
        name: name.to_string(),
        checks: vec![scenarios::Check::from_bool(
            "pipeline",
            false,
            err.to_string(),
        )],
        report: scenarios::ReportBody::Failure {
            error: err.to_string(),
        },
    })
}

fn cmd_verify(
    selector: &str,
    json: Option<&Path>,
    markdown: Option<&Path>,
    tolerance: f64,
) -> Result<ExitCode, UsageError> {
    if tolerance <= 0.0 {
        return Err(UsageError(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let names = verify_names(selector)?;
    let overrides = spectrum_overrides()?;

    let runs: Vec<ScenarioRun> = names
        .iter()
        .map(|name| run_one(name, tolerance, &overrides))
        .collect();

    let mut all_ok = true;
    for run in &runs {
        let passed = run.checks.iter().filter(|c| c.passed()).count();
        let verdict = if run.all_passed() { "PASS" } else { "FAIL" };
        println!("{verdict} {} ({passed}/{} checks)", run.name, run.checks.len());
        for check in &run.checks {
            if !check.passed() {
                println!("  FAIL {}: {}", check.id, check.detail);
                all_ok = false;
            }
        }
    }

    if let Some(path) = json {
        let output = VerifyOutput {
            artifact_version: env!("CARGO_PKG_VERSION"),
            scenarios: runs.clone(),
        };
        let text = serde_json::to_string_pretty(&output)
            .expect("reports serialize")
            + "\n";
        write_atomic(path, &text).map_err(|e| UsageError(format!("write {}: {e}", path.display())))?;
    }
    if let Some(path) = markdown {
        let mut text = String::from("# verification report\n\n");
        for run in &runs {
            text.push_str(&render_run_markdown(run));
            text.push('\n');
        }
        write_atomic(path, &text).map_err(|e| UsageError(format!("write {}: {e}", path.display())))?;
    }

    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_table(name: &str, format: &str) -> Result<ExitCode, UsageError> {
    let scenario = scenarios::exact_scenario(name).ok_or_else(|| {
        UsageError(format!(
            "\"{name}\" has no candidate table (expected one of {})",
            scenarios::EXACT_SCENARIO_NAMES.join(", ")
        ))
    })?;
    let run = scenarios::run_scenario(&scenario, DEFAULT_ELIMINATION_TOL)
        .map_err(|e| UsageError(e.to_string()))?;
    let report = run.report.as_pipeline().expect("exact scenarios report tables");
    match format {
        "md" => print!("{}", render_table_markdown(report)),
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&report.table).expect("cells serialize")
        ),
        other => return Err(UsageError(format!("unknown format \"{other}\""))),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_word(scenario: &str, text: &str) -> Result<ExitCode, UsageError> {
    let s = scenarios::exact_scenario(scenario).ok_or_else(|| {
        UsageError(format!(
            "\"{scenario}\" has no exact representation (expected one of {})",
            scenarios::EXACT_SCENARIO_NAMES.join(", ")
        ))
    })?;
    let word = Word::parse(text).map_err(|e| UsageError(e.to_string()))?;
    let m = evaluate(&word, &s.generators).map_err(|e| UsageError(e.to_string()))?;
    println!("word:  {word}");
    println!("image: {m}");
    println!("trace: {}", m.trace().map_err(|e| UsageError(e.to_string()))?);
    Ok(ExitCode::SUCCESS)
}

/// Write-then-rename so report files are never observed half-written.
fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}
