//! Command-line surface for the orbit-statistics library.
//!
//! Subcommands: `ideals` (lattice listing), `count` (stabilizer-orbit
//! polynomial of one ideal), `nlambda` (orbit-of-pairs polynomial), `verify`
//! (identity suite for one shape), `scan` (positivity scan with optional
//! reference comparison).
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure,
//! 2 usage error, 3 enumeration budget exceeded.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use dvr_orbits::counting::{canonical_element, char_submodule_size, orbit_size};
use dvr_orbits::interp::{
    conjecture_scan, n_ideal_poly, n_lambda_poly_with_provenance, verify_identities, RefStatus,
    ScanOutcome, ScanReport, VerifyReport,
};
use dvr_orbits::lattice::IdealLattice;
use dvr_orbits::poset::parse_generators;
use dvr_orbits::records::{
    parse_reference_table, unix_timestamp, CacheStore, ComputationRecord, Provenance,
};
use dvr_orbits::{heightzero, Error, IntPoly, OracleConfig, OrderIdeal, Partition};

const CACHE_ENV: &str = "DVR_ORBITS_CACHE_DIR";
const DEFAULT_CACHE_DIR: &str = ".dvr-orbits-cache";

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "dvr-orbits",
    version,
    about = "Automorphism-orbit statistics of finite modules over discrete valuation rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Element budget for brute-force enumeration.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Cache directory (overrides DVR_ORBITS_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Disable the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the order ideals of a shape with their invariants.
    Ideals {
        /// Shape in the form l^r,l^r,… (empty string for the zero module).
        partition: String,
        /// Only ideals realized by an element.
        #[arg(long)]
        realized: bool,
        /// Only height-zero ideals.
        #[arg(long = "height-zero")]
        height_zero: bool,
        /// Only principal ideals.
        #[arg(long)]
        principal: bool,
    },
    /// Stabilizer-orbit polynomial for one realized ideal.
    Count {
        partition: String,
        /// Ideal generators, e.g. "(1,3);(0,1)" (empty for the empty ideal).
        #[arg(long)]
        ideal: String,
        /// Count orbits inside πA instead of the whole module.
        #[arg(long)]
        pi: bool,
    },
    /// The orbit-of-pairs polynomial of a shape.
    Nlambda { partition: String },
    /// Run the identity suite for one shape.
    Verify { partition: String },
    /// Scan all capped shapes up to a weight for non-negative coefficients.
    Scan {
        /// Largest capped weight to scan.
        #[arg(long)]
        max: u64,
        /// Reference table to compare against.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Also write the report to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe instead of panicking mid-listing.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidInput(_)
        | Error::UnrealizedIdeal(_)
        | Error::NonPrincipalHeightZero(_)
        | Error::MalformedRecord { .. }
        | Error::Io(_) => 2,
        Error::BudgetExceeded { .. } | Error::EndomorphismCapExceeded { .. } => 3,
        Error::Interpolation(_) | Error::Verification(_) | Error::CacheConflict { .. } => 1,
    }
}

fn config(cli: &Cli) -> OracleConfig {
    match cli.budget {
        Some(max_elements) => OracleConfig::with_max_elements(max_elements),
        None => OracleConfig::default(),
    }
}

fn open_cache(cli: &Cli) -> Result<Option<CacheStore>, Error> {
    if cli.no_cache {
        return Ok(None);
    }
    let dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
    Ok(Some(CacheStore::open(&dir)?))
}

fn coeffs_json(poly: &IntPoly) -> Value {
    let coeffs: Vec<Value> = poly
        .coeffs()
        .iter()
        .map(|c: &BigInt| {
            serde_json::from_str(&c.to_string()).expect("integer literals are valid JSON")
        })
        .collect();
    if coeffs.is_empty() {
        json!([0])
    } else {
        Value::Array(coeffs)
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Ideals {
            partition,
            realized,
            height_zero,
            principal,
        } => cmd_ideals(cli, partition, *realized, *height_zero, *principal),
        Command::Count {
            partition,
            ideal,
            pi,
        } => cmd_count(cli, partition, ideal, *pi),
        Command::Nlambda { partition } => cmd_nlambda(cli, partition),
        Command::Verify { partition } => cmd_verify(cli, partition),
        Command::Scan {
            max,
            reference,
            out,
        } => cmd_scan(cli, *max, reference.as_deref(), out.as_deref()),
    }
}

fn cmd_ideals(
    cli: &Cli,
    partition: &str,
    realized: bool,
    height_zero: bool,
    principal: bool,
) -> Result<ExitCode, Error> {
    let shape = Partition::parse(partition)?;
    let lattice = IdealLattice::new(&shape);
    let mut rows = Vec::new();
    for id in 0..lattice.len() {
        let ideal = lattice.ideal(id);
        if realized && !lattice.is_realized(id) {
            continue;
        }
        if height_zero && !ideal.is_height_zero() {
            continue;
        }
        if principal && !ideal.is_principal() {
            continue;
        }
        let max: Vec<String> = ideal.max_elements().iter().map(|m| m.to_string()).collect();
        rows.push((
            ideal.boundary_text(),
            max.join(";"),
            canonical_element(ideal).to_string(),
            char_submodule_size(&shape, ideal),
            orbit_size(&lattice, ideal),
            lattice.is_realized(id),
            ideal.is_height_zero(),
            ideal.is_principal(),
        ));
    }
    match cli.format {
        Format::Json => {
            let ideals: Vec<Value> = rows
                .iter()
                .map(|(b, m, e, sub, orbit, r, h, pr)| {
                    json!({
                        "boundary": b,
                        "max": m,
                        "canonical": e,
                        "submodule": coeffs_json(sub),
                        "orbit": coeffs_json(orbit),
                        "realized": r,
                        "height_zero": h,
                        "principal": pr,
                    })
                })
                .collect();
            println!(
                "{}",
                json!({ "partition": shape.to_string(), "ideals": ideals })
            );
        }
        Format::Text => {
            println!("boundary | max | canonical | submodule | orbit | flags");
            for (b, m, e, sub, orbit, r, h, pr) in &rows {
                let flags = format!(
                    "{}{}{}",
                    if *r { "R" } else { "-" },
                    if *h { "H" } else { "-" },
                    if *pr { "P" } else { "-" }
                );
                println!("{b} | {m} | {e} | {sub} | {orbit} | {flags}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Computes (or retrieves) the pair of stabilizer-orbit polynomials for one
/// ideal, caching both.
fn ideal_records(
    cli: &Cli,
    shape: &Partition,
    ideal: &OrderIdeal,
    cache: &mut Option<CacheStore>,
) -> Result<(IntPoly, IntPoly, Provenance), Error> {
    let partition = shape.to_string();
    let boundary = ideal.boundary_text();
    if let Some(store) = cache.as_ref() {
        if let (Some(n), Some(n1)) = (
            store.get(&partition, Some(&boundary), "n"),
            store.get(&partition, Some(&boundary), "n1"),
        ) {
            return Ok((n.poly.clone(), n1.poly.clone(), n.provenance.clone()));
        }
    }
    let (n, n1, provenance) =
        if ideal.is_height_zero() && ideal.is_principal() && !ideal.is_empty_ideal() {
            let index = shape
                .part_index(ideal.max_elements()[0].part)
                .expect("maximal element sits in a row of the shape");
            (
                heightzero::orbit_poly(shape, index),
                heightzero::pi_orbit_poly(shape, index),
                Provenance::Symbolic,
            )
        } else {
            let (n, n1, samples) = n_ideal_poly(shape, ideal, &config(cli))?;
            (n, n1, Provenance::Interpolated { samples })
        };
    if let Some(store) = cache.as_mut() {
        for (quantity, poly) in [("n", &n), ("n1", &n1)] {
            store.insert(ComputationRecord {
                partition: partition.clone(),
                ideal: Some(boundary.clone()),
                quantity: quantity.to_string(),
                poly: poly.clone(),
                provenance: provenance.clone(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                timestamp: unix_timestamp(),
            })?;
        }
    }
    Ok((n, n1, provenance))
}

fn cmd_count(cli: &Cli, partition: &str, ideal_text: &str, pi: bool) -> Result<ExitCode, Error> {
    let shape = Partition::parse(partition)?;
    let gens = parse_generators(ideal_text)?;
    let ideal = OrderIdeal::from_generators(&shape, &gens)?;
    if !ideal.is_realized() {
        return Err(Error::UnrealizedIdeal(ideal.boundary_text()));
    }
    let mut cache = open_cache(cli)?;
    let (n, n1, provenance) = ideal_records(cli, &shape, &ideal, &mut cache)?;
    let (quantity, poly) = if pi { ("n1", &n1) } else { ("n", &n) };
    match cli.format {
        Format::Text => println!("{poly}"),
        Format::Json => println!(
            "{}",
            json!({
                "quantity": quantity,
                "partition": shape.to_string(),
                "ideal": ideal.boundary_text(),
                "coefficients": coeffs_json(poly),
                "provenance": provenance.to_string(),
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_nlambda(cli: &Cli, partition: &str) -> Result<ExitCode, Error> {
    let shape = Partition::parse(partition)?;
    let key = shape.to_string();
    let mut cache = open_cache(cli)?;
    let cached = cache
        .as_ref()
        .and_then(|store| store.get(&key, None, "nlambda").cloned());
    let (poly, provenance) = match cached {
        Some(record) => (record.poly, record.provenance),
        None => {
            let (poly, samples) = n_lambda_poly_with_provenance(&shape, &config(cli))?;
            let provenance = Provenance::Interpolated { samples };
            if let Some(store) = cache.as_mut() {
                store.insert(ComputationRecord {
                    partition: key.clone(),
                    ideal: None,
                    quantity: "nlambda".to_string(),
                    poly: poly.clone(),
                    provenance: provenance.clone(),
                    version: env!("CARGO_PKG_VERSION").to_string(),
                    timestamp: unix_timestamp(),
                })?;
            }
            (poly, provenance)
        }
    };
    match cli.format {
        Format::Text => println!("{poly}"),
        Format::Json => println!(
            "{}",
            json!({
                "quantity": "nlambda",
                "partition": key,
                "coefficients": coeffs_json(&poly),
                "provenance": provenance.to_string(),
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, partition: &str) -> Result<ExitCode, Error> {
    let shape = Partition::parse(partition)?;
    let report: VerifyReport = verify_identities(&shape, &config(cli))?;
    match cli.format {
        Format::Text => {
            for check in &report.checks {
                let verdict = if check.passed { "PASS" } else { "FAIL" };
                let relation = if check.passed { "==" } else { "!=" };
                println!(
                    "{verdict} {}: {} {relation} {}",
                    check.name, check.lhs, check.rhs
                );
            }
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed,
                        "lhs": c.lhs,
                        "rhs": c.rhs,
                    })
                })
                .collect();
            println!(
                "{}",
                json!({
                    "partition": shape.to_string(),
                    "all_passed": report.all_passed(),
                    "checks": checks,
                })
            );
        }
    }
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn scan_lines(report: &ScanReport, with_reference: bool) -> Vec<String> {
    let mut lines = Vec::new();
    for entry in &report.entries {
        let shape = entry.shape.to_string();
        match &entry.outcome {
            ScanOutcome::Computed {
                poly,
                nonnegative,
                reference,
            } => {
                let mut line = format!(
                    "{shape} : {} : {}",
                    poly.ascending_text(),
                    if *nonnegative { "OK" } else { "NEGATIVE" }
                );
                if with_reference {
                    let status = match reference {
                        Some(RefStatus::Match) => "MATCH".to_string(),
                        Some(RefStatus::Mismatch { expected }) => {
                            format!("MISMATCH (expected {})", expected.ascending_text())
                        }
                        Some(RefStatus::Absent) => "ABSENT".to_string(),
                        None => "-".to_string(),
                    };
                    line.push_str(&format!(" : {status}"));
                }
                lines.push(line);
            }
            ScanOutcome::Skipped { reason } => lines.push(format!("{shape} : SKIPPED : {reason}")),
            ScanOutcome::Failed { reason } => lines.push(format!("{shape} : FAILED : {reason}")),
        }
    }
    lines
}

fn cmd_scan(
    cli: &Cli,
    max: u64,
    reference: Option<&std::path::Path>,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, Error> {
    let table: Option<HashMap<String, IntPoly>> = match reference {
        Some(path) => Some(parse_reference_table(path)?),
        None => None,
    };
    let report = conjecture_scan(max, &config(cli), table.as_ref());
    let lines = scan_lines(&report, table.is_some());
    match cli.format {
        Format::Text => {
            for line in &lines {
                println!("{line}");
            }
        }
        Format::Json => {
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|entry| match &entry.outcome {
                    ScanOutcome::Computed {
                        poly,
                        nonnegative,
                        reference,
                    } => json!({
                        "partition": entry.shape.to_string(),
                        "status": if *nonnegative { "ok" } else { "negative" },
                        "coefficients": coeffs_json(poly),
                        "reference": reference.as_ref().map(|r| match r {
                            RefStatus::Match => "match".to_string(),
                            RefStatus::Mismatch { expected } =>
                                format!("mismatch (expected {})", expected.ascending_text()),
                            RefStatus::Absent => "absent".to_string(),
                        }),
                    }),
                    ScanOutcome::Skipped { reason } => json!({
                        "partition": entry.shape.to_string(),
                        "status": "skipped",
                        "reason": reason,
                    }),
                    ScanOutcome::Failed { reason } => json!({
                        "partition": entry.shape.to_string(),
                        "status": "failed",
                        "reason": reason,
                    }),
                })
                .collect();
            println!(
                "{}",
                json!({ "max_weight": max, "clean": report.is_clean(), "entries": entries })
            );
        }
    }
    if let Some(path) = out {
        std::fs::write(path, lines.join("\n") + "\n")?;
    }
    if report.is_clean() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
