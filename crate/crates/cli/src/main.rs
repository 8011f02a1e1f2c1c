//! `hecke`: build canonical bases, run the verification suites, and print idempotent and
//! valuation reports.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_core::canonbasis::{self, build_basis, checks as bchecks, Partition};
use hecke_core::qarith::{is_unit_z_nfact, parse_rational, rational};
use hecke_core::tensorrep::{checks as tchecks, rotation_check};
use hecke_core::{dfreport, idempotents, Param, Rational, Report, Scalar};

const MAX_N: usize = 5;
const ROTATION_TOLERANCE: f64 = 1e-9;
const THREADS_VAR: &str = "HECKE_THREADS";

#[derive(Parser)]
#[command(name = "hecke", version, about = "Canonical bases of Hecke algebra modules on tensor space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical basis of V(p;0) as JSON.
    Basis {
        #[arg(long)]
        n: usize,
        /// Rank of V; defaults to n.
        #[arg(long)]
        d: Option<usize>,
        /// Parts such as `2,1`.
        #[arg(long)]
        partition: String,
        /// `symbolic`, `1` (classical) or a rational such as `2` or `3/2`.
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        q: String,
    },
    /// Run one verification suite; exit status 0 iff every check passes.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Rotation angles; defaults to 0.1 and 0.25.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        t: Vec<f64>,
        /// Evaluation point for the orthogonality suite.
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        q: String,
    },
    /// Central, canonical and Frobenius-Young idempotents of Q S_n as JSON.
    Idempotents {
        #[arg(long)]
        n: usize,
    },
    /// Valuations of i_{(1+t)^2} mod p as CSV.
    Df {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Braid,
    Hecke,
    Commutant,
    Qcommute,
    Lemma34,
    Orthogonality,
    Norms,
    Simplicity,
    Casimir,
    Rotation,
    Selfadjoint,
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<hecke_core::Error> for Failure {
    fn from(e: hecke_core::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

type CmdResult = Result<bool, Failure>;

#[derive(Clone)]
enum QMode {
    Symbolic,
    Classical,
    At(Rational),
}

fn parse_q(s: &str) -> Result<QMode, Failure> {
    if s == "symbolic" {
        return Ok(QMode::Symbolic);
    }
    let q0 = parse_rational(s).ok_or_else(|| Failure::Usage(format!("--q expects `symbolic` or a rational, got {s:?}")))?;
    if q0 == rational(1, 1) {
        Ok(QMode::Classical)
    } else if q0 == rational(0, 1) || q0 == rational(-1, 1) {
        Err(Failure::Usage(format!("q = {q0} is not allowed")))
    } else {
        Ok(QMode::At(q0))
    }
}

fn check_sizes(n: usize, d: usize) -> Result<(), Failure> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Failure::Usage(format!("n must be in 1..={MAX_N}, got {n}")));
    }
    if !(1..=MAX_N).contains(&d) {
        return Err(Failure::Usage(format!("d must be in 1..={MAX_N}, got {d}")));
    }
    Ok(())
}

fn basis_json<C: Scalar>(param: &Param<C>, p: &Partition, all_units: bool) -> Result<Value, Failure> {
    let basis = build_basis(param, p)?;
    Ok(basis.to_json(Some(all_units)))
}

fn cmd_basis(n: usize, d: usize, partition: &str, q: &str) -> CmdResult {
    check_sizes(n, d)?;
    let mode = parse_q(q)?;
    let p = Partition::parse(partition, d).map_err(|e| Failure::Usage(e.to_string()))?;
    if p.size() != n {
        return Err(Failure::Usage(format!("partition {p} does not sum to n = {n}")));
    }
    let (out, units) = match mode {
        QMode::Symbolic => {
            let units = canonbasis::all_unit(&p, n as u32)?;
            (basis_json(&Param::symbolic(), &p, units)?, units)
        }
        QMode::Classical => {
            let basis = build_basis(&Param::classical(), &p)?;
            let units = basis.norms()?.iter().all(|c| is_unit_z_nfact(c, n as u32));
            (basis.to_json(Some(units)), units)
        }
        QMode::At(q0) => {
            let param = canonbasis::check_evaluation_point(&q0, n)?;
            let units = canonbasis::all_unit(&p, n as u32)?;
            (basis_json(&param, &p, units)?, units)
        }
    };
    emit(&serde_json::to_string_pretty(&out).expect("JSON serialization"));
    Ok(units)
}

fn merge(title: &str, parts: Vec<Report>) -> Report {
    let mut out = Report::new(title);
    for r in parts {
        out.extend(r);
    }
    out
}

fn cmd_verify(suite: Suite, n: usize, d: usize, t: &[f64], q: &str) -> CmdResult {
    check_sizes(n, d)?;
    let report = match suite {
        Suite::Braid => merge("braid", vec![tchecks::braid_relations(n, d)?]),
        Suite::Hecke => merge("hecke", vec![tchecks::hecke_relation(n, d)?]),
        Suite::Commutant => merge("commutant", vec![tchecks::commutant(n, d)?]),
        Suite::Qcommute => merge("qcommute", vec![tchecks::q_commutation(n, d)?, tchecks::h_versus_k(n, d)?]),
        Suite::Lemma34 => merge("lemma34", vec![bchecks::lowering_suite(n)?, bchecks::two_row_decomposition(n)?]),
        Suite::Orthogonality => {
            let q0 = rational(2, 1);
            let mut parts = Vec::new();
            match parse_q(q)? {
                QMode::Symbolic if n <= 4 => parts.push(bchecks::basis_suite(&Param::symbolic(), n, d, &q0)?),
                QMode::Symbolic => {
                    for p in bchecks::sample_points() {
                        parts.push(bchecks::basis_suite(&Param::at(p)?, n, d, &q0)?);
                    }
                }
                QMode::Classical => parts.push(bchecks::basis_suite(&Param::classical(), n, d, &q0)?),
                QMode::At(p) => parts.push(bchecks::basis_suite(&canonbasis::check_evaluation_point(&p, n)?, n, d, &q0)?),
            }
            if n <= 4 {
                parts.push(bchecks::spanning_suite(n, d, &q0)?);
            }
            merge("orthogonality", parts)
        }
        Suite::Norms => merge("norms", vec![bchecks::norms_suite(n, d)?]),
        Suite::Simplicity => {
            let q0 = rational(2, 1);
            let mut r = Report::new("simplicity");
            for p in Partition::all(n, d) {
                r.push(format!("{p} H_n acts as the full matrix ring at q0=2"), canonbasis::spans_full_algebra(&p, &q0)?);
            }
            let (rank, expected) = canonbasis::joint_rank(n, d, &q0)?;
            r.push_detail("joint rank = sum f^2", rank == expected, format!("{rank} of {expected}"));
            r.extend(bchecks::submodule_suite(&Param::at(q0)?, n, d)?);
            r
        }
        Suite::Casimir => merge(
            "casimir",
            vec![tchecks::classical_casimir_spectrum(n)?, tchecks::quantized_casimir(n)?, tchecks::casimir_limit(n)?],
        ),
        Suite::Rotation => {
            let ts = if t.is_empty() { vec![0.1, 0.25] } else { t.to_vec() };
            let mut r = Report::new("rotation");
            for t in ts {
                if t.abs() > 0.3 {
                    return Err(Failure::Usage(format!("|t| must be at most 0.3, got {t}")));
                }
                let res = rotation_check(t)?;
                r.push_detail(format!("t = {t}"), res <= ROTATION_TOLERANCE, format!("residual {res:.3e}"));
            }
            r
        }
        Suite::Selfadjoint => {
            let mut parts = vec![tchecks::self_adjoint_and_balanced(n, d)?];
            if n <= 4 {
                parts.push(tchecks::quantized_casimir(n)?);
            }
            parts.push(tchecks::class_sums_symmetric(n, d)?);
            merge("selfadjoint", parts)
        }
    };
    emit(&report.to_string());
    Ok(report.passed())
}

fn cmd_idempotents(n: usize) -> CmdResult {
    check_sizes(n, n)?;
    let table = idempotents::rep_table(n)?;
    let mut central = Vec::new();
    let mut canonical = Vec::new();
    let mut fy = Vec::new();
    for (k, p) in table.partitions().iter().enumerate() {
        central.push(json!({
            "partition": p.parts(),
            "element": idempotents::central_idempotent(&table, p)?.to_json(),
        }));
        for t in table.tableaux(k) {
            canonical.push(json!({
                "tableau": t.to_json(),
                "element": idempotents::canonical_idempotent(&table, t)?.to_json(),
            }));
            fy.push(json!({
                "tableau": t.to_json(),
                "element": idempotents::frobenius_young_idempotent(t)?.to_json(),
            }));
        }
    }
    let report = idempotents::invariants(&table)?;
    let out = json!({
        "n": n,
        "central": central,
        "canonical": canonical,
        "frobenius_young": fy,
        "checks_passed": report.passed(),
    });
    emit(&serde_json::to_string_pretty(&out).expect("JSON serialization"));
    eprintln!("{report}");
    Ok(report.passed())
}

fn cmd_df(n: u32, primes: &[u64]) -> CmdResult {
    if !(2..=12).contains(&n) {
        return Err(Failure::Usage(format!("n must be in 2..=12, got {n}")));
    }
    let rep = dfreport::report(n, if primes.is_empty() { None } else { Some(primes) })
        .map_err(|e| Failure::Usage(e.to_string()))?;
    emit(rep.to_csv().trim_end());
    Ok(rep.no_rational_prime_in_s())
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let k: usize = v
            .parse()
            .map_err(|_| Failure::Usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::Run(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| match cli.command {
        Command::Basis { n, d, partition, q } => cmd_basis(n, d.unwrap_or(n), &partition, &q),
        Command::Verify { suite, n, d, t, q } => cmd_verify(suite, n, d.unwrap_or(n), &t, &q),
        Command::Idempotents { n } => cmd_idempotents(n),
        Command::Df { n, primes } => cmd_df(n, &primes),
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
