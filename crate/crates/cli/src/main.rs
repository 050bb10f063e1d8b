mod document;
mod report;

/// Writes a line to stdout, ignoring a closed pipe.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use std::process::ExitCode;
use std::time::Instant;

use anosov_core::anosov::{
    certify_anosov, lemma_m1_filter, random_unimodular, BasisMatrix, CertifyOptions, M1Verdict, Verdict,
};
use anosov_core::catalog::{paper_case, ALGEBRAS, CASE_NAMES};
use anosov_core::exactnum::{FieldElement, DEFAULT_PRECISION_CAP, INITIAL_PRECISION};
use anosov_core::liealg::LieAlgebra;
use anosov_core::pfaffian::{det_consistency, pfaffian_form, skew_forms, PfaffianError};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use document::{catalog_target, load, rational_field, AlgebraDocument, Loaded, ParseError};
use report::{CertifyReport, Header, LatticeInvariance};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "anosov", version, about = "Exact certificates for Anosov automorphisms of nilpotent Lie algebras")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded type and abelian-factor dimension.
    Type { target: String },
    /// Checks the Jacobi identity on basis triples.
    Jacobi { target: String },
    /// Pfaffian form of a 2-step algebra of type (2k, m).
    Pfaffian {
        target: String,
        /// Random points for the Pf² = det check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Runs the full certification pipeline.
    Certify(CertifyArgs),
    /// Named algebras and cases.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Quotient by the last central-series term and the derived algebra.
    Reduce { target: String },
    /// The degree filter for eigenvalue products.
    FilterM1 {
        deg_a: usize,
        deg_b: usize,
        deg_ab: usize,
        /// The product is itself an eigenvalue.
        #[arg(long)]
        product_eigen: bool,
    },
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// A document path, `-`, `case:NAME` or `catalog:NAME[:params]`.
    #[arg(required_unless_present = "all_cases")]
    target: Option<String>,
    /// Square the automorphism once when a block product is -1.
    #[arg(long)]
    auto_square: bool,
    /// Certify every catalog case.
    #[arg(long, conflicts_with = "target")]
    all_cases: bool,
    /// Seed for the unimodular trials.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Re-certify with B replaced by B·U for this many random unimodular U.
    #[arg(long, default_value_t = 0)]
    unimodular_trials: usize,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Lists algebras and cases.
    List,
    /// Prints a catalog algebra or case as a document.
    Show {
        name: String,
        /// Comma-separated parameters; every parameter defaults to 1.
        #[arg(long)]
        params: Option<String>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("invalid ANOSOV_PRECISION_CAP {0:?}: expected an integer of at least {INITIAL_PRECISION} bits")]
    PrecisionCap(String),
}

fn precision_cap() -> Result<u32, CliError> {
    match std::env::var("ANOSOV_PRECISION_CAP") {
        Err(_) => Ok(DEFAULT_PRECISION_CAP),
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(bits) if bits >= INITIAL_PRECISION => Ok(bits),
            _ => Err(CliError::PrecisionCap(v)),
        },
    }
}

fn print_json<T: Serialize>(value: &T) {
    say!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn run_type(target: &str, json: bool) -> Result<u8, CliError> {
    let l = load(target)?;
    let (ty, _) = match l.algebra.graded_type() {
        Ok(t) => t,
        Err(e) => {
            if json {
                print_json(&json!({ "target": l.label, "nilpotent": false, "error": e.to_string() }));
            } else {
                say!("not nilpotent: {e}");
            }
            return Ok(EXIT_FAIL);
        }
    };
    let abelian = l.algebra.abelian_factor().dim;
    if json {
        print_json(&json!({
            "target": l.label,
            "dim": l.algebra.dim(),
            "type": ty.parts,
            "type_text": ty.to_string(),
            "abelian_factor": abelian,
        }));
    } else {
        say!("{ty}");
        say!("abelian factor dimension {abelian}");
    }
    Ok(EXIT_OK)
}

fn run_jacobi(target: &str, json: bool) -> Result<u8, CliError> {
    let l = load(target)?;
    let r = l.algebra.jacobi_check();
    match (&r, json) {
        (Ok(()), true) => print_json(&json!({ "target": l.label, "jacobi": true })),
        (Ok(()), false) => say!("Jacobi OK"),
        (Err(w), true) => print_json(&json!({
            "target": l.label,
            "jacobi": false,
            "witness": [w.i + 1, w.j + 1, w.k + 1],
            "value": w.value.iter().map(|v| document::element_value(v, l.rational)).collect::<Vec<_>>(),
        })),
        (Err(w), false) => {
            let v: Vec<String> = w.value.iter().map(|c| c.to_string()).collect();
            say!("Jacobi FAIL at (e{}, e{}, e{}): cyclic sum ({})", w.i + 1, w.j + 1, w.k + 1, v.join(", "));
        }
    }
    Ok(if r.is_ok() { EXIT_OK } else { EXIT_FAIL })
}

fn run_pfaffian(target: &str, samples: usize, seed: u64, json: bool) -> Result<u8, CliError> {
    let l = load(target)?;
    let s = match skew_forms(&l.algebra) {
        Ok(s) => s,
        Err(PfaffianError::WrongType(t)) => {
            return Err(CliError::Usage(format!("type {t} is not (2k, m): the Pfaffian form is undefined")));
        }
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    let p = pfaffian_form(&s);
    let check = det_consistency(&s, &p, samples, seed);
    if json {
        let terms: Vec<_> = p
            .terms()
            .iter()
            .map(|(e, c)| json!({ "exponents": e, "coefficient": document::element_value(c, l.rational) }))
            .collect();
        print_json(&json!({
            "target": l.label,
            "variables": p.variables(),
            "form": p.to_string(),
            "terms": terms,
            "det_check": { "samples": samples, "seed": seed, "ok": check.is_ok(), "counterexample": check.as_ref().err() },
        }));
    } else {
        say!("Pf = {p}");
        match &check {
            Ok(()) => say!("Pf^2 = det at {samples} points (seed {seed})"),
            Err(pt) => say!("Pf^2 != det at {pt:?}"),
        }
    }
    Ok(if check.is_ok() { EXIT_OK } else { EXIT_FAIL })
}

fn exit_for(v: Verdict) -> u8 {
    match v {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_USAGE,
    }
}

struct Certified {
    report: CertifyReport,
    verdict: Verdict,
}

fn certify_loaded(
    l: &Loaded,
    args: &CertifyArgs,
    cap: u32,
    header: Header,
) -> Result<Certified, CliError> {
    let start = Instant::now();
    let a = l
        .automorphism
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{}: no automorphism to certify", l.label)))?;
    let b = match &l.basis {
        Some(b) => b.clone(),
        None => BasisMatrix::identity(&l.field, l.algebra.dim()),
    };
    let options = CertifyOptions { auto_square: args.auto_square, precision_cap: cap };
    let err = |e: anosov_core::anosov::AnosovError| CliError::Usage(format!("{}: {e}", l.label));
    let cert = certify_anosov(&l.algebra, a, &b, options).map_err(err)?;
    let lattice = if args.unimodular_trials > 0 {
        let base = cert.summary();
        let mut first_changed_seed = None;
        for t in 0..args.unimodular_trials as u64 {
            let s = args.seed.wrapping_add(t);
            let u = random_unimodular(l.algebra.dim(), s);
            let bu = b.times_rational(&u).map_err(err)?;
            let again = certify_anosov(&l.algebra, a, &bu, options).map_err(err)?;
            if again.summary() != base {
                first_changed_seed = Some(s);
                break;
            }
        }
        Some(LatticeInvariance {
            trials: args.unimodular_trials,
            seed: args.seed,
            unchanged: first_changed_seed.is_none(),
            first_changed_seed,
        })
    } else {
        None
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let mut report = CertifyReport::new(header, l.label.clone(), l.algebra.dim(), &cert, ms);
    report.lattice_invariance = lattice;
    let verdict = report.overall(cert.verdict);
    report.verdict = verdict.to_string();
    Ok(Certified { report, verdict })
}

fn run_certify(args: &CertifyArgs, json: bool, command: &[String]) -> Result<u8, CliError> {
    let cap = precision_cap()?;
    if args.all_cases {
        let mut names: Vec<&str> = CASE_NAMES.to_vec();
        names.sort_unstable();
        let results: Vec<Result<Certified, CliError>> = names
            .par_iter()
            .map(|name| {
                let target = format!("case:{name}");
                let l = load(&target)?;
                certify_loaded(&l, args, cap, Header::new(command))
            })
            .collect();
        let mut reports = Vec::with_capacity(results.len());
        for r in results {
            reports.push(r?);
        }
        let worst = reports.iter().map(|c| exit_for(c.verdict)).fold(EXIT_OK, |acc, e| match (acc, e) {
            (EXIT_FAIL, _) | (_, EXIT_FAIL) => EXIT_FAIL,
            (a, b) => a.max(b),
        });
        if json {
            let rs: Vec<&CertifyReport> = reports.iter().map(|c| &c.report).collect();
            print_json(&rs);
        } else {
            for c in &reports {
                let r = &c.report;
                let margin = r.stages.hyperbolicity.margin_approx.map(|m| format!("{m:.3e}")).unwrap_or_else(|| "-".into());
                say!(
                    "{:<14} {:<12} {:<12} squared={:<5} margin={margin} {:.1} ms",
                    r.target, r.graded_type, r.verdict, r.squared, r.timings.total_ms
                );
            }
        }
        return Ok(worst);
    }
    let target = args.target.as_deref().expect("clap requires a target");
    let l = load(target)?;
    let c = certify_loaded(&l, args, cap, Header::new(command))?;
    if json {
        print_json(&c.report);
    } else {
        say!("{}", c.report.render_text().trim_end());
    }
    Ok(exit_for(c.verdict))
}

fn run_catalog(action: &CatalogAction, json: bool) -> Result<u8, CliError> {
    match action {
        CatalogAction::List => {
            let mut cases = Vec::new();
            for name in CASE_NAMES {
                let c = paper_case(name).map_err(|e| CliError::Usage(e.to_string()))?;
                cases.push((c.name, c.expected_type.to_string(), c.provenance));
            }
            if json {
                let algebras: Vec<_> = ALGEBRAS
                    .iter()
                    .map(|e| json!({ "name": e.name, "params": e.params, "description": e.description }))
                    .collect();
                let cases: Vec<_> =
                    cases.iter().map(|(n, t, p)| json!({ "name": n, "type": t, "description": p })).collect();
                print_json(&json!({ "algebras": algebras, "cases": cases }));
            } else {
                say!("algebras:");
                for e in ALGEBRAS {
                    let p = if e.params.is_empty() { String::new() } else { format!("({})", e.params.join(",")) };
                    say!("  {:<26} {}", format!("{}{p}", e.name), e.description);
                }
                say!("cases:");
                for (n, t, p) in &cases {
                    say!("  {n:<14} {t:<10} {p}");
                }
            }
            Ok(EXIT_OK)
        }
        CatalogAction::Show { name, params } => {
            let doc = if CASE_NAMES.contains(&name.as_str()) {
                if params.is_some() {
                    return Err(CliError::Usage("cases take no parameters".into()));
                }
                AlgebraDocument::from_case(&paper_case(name).map_err(|e| CliError::Usage(e.to_string()))?)
            } else {
                let l = catalog_target(name, params.as_deref()).map_err(CliError::Usage)?;
                let f = rational_field();
                AlgebraDocument::from_parts(Some(name.clone()), &l.lift(&f), true, None, None)
            };
            print_json(&doc);
            Ok(EXIT_OK)
        }
    }
}

fn type_or_abelian(l: &LieAlgebra<FieldElement>) -> String {
    if l.is_abelian() {
        format!("abelian of dimension {}", l.dim())
    } else {
        l.graded_type().map(|t| t.0.to_string()).unwrap_or_else(|e| e.to_string())
    }
}

fn run_reduce(target: &str, json: bool) -> Result<u8, CliError> {
    let l = load(target)?;
    let r = match l.algebra.reduce() {
        Ok(r) => r,
        Err(e) => return Err(CliError::Usage(format!("{}: {e}", l.label))),
    };
    if json {
        let quotient = AlgebraDocument::from_parts(None, &r.quotient, l.rational, None, None);
        let derived = AlgebraDocument::from_parts(None, &r.derived, l.rational, None, None);
        print_json(&json!({
            "target": l.label,
            "kept": r.kept.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "quotient_type": type_or_abelian(&r.quotient),
            "derived_type": type_or_abelian(&r.derived),
            "quotient": quotient,
            "derived": derived,
        }));
    } else {
        let kept: Vec<String> = r.kept.iter().map(|i| format!("e{}", i + 1)).collect();
        say!("quotient: {} on {}", type_or_abelian(&r.quotient), kept.join(" "));
        say!("derived:  {}", type_or_abelian(&r.derived));
    }
    Ok(EXIT_OK)
}

fn run_filter(a: usize, b: usize, ab: usize, product_eigen: bool, json: bool) -> Result<u8, CliError> {
    if a == 0 || b == 0 || ab == 0 {
        return Err(CliError::Usage("degrees must be at least 1".into()));
    }
    let v = lemma_m1_filter(a, b, ab, product_eigen);
    if json {
        let rule = match v {
            M1Verdict::Violates(r) => Some(r),
            M1Verdict::Admissible => None,
        };
        print_json(&json!({ "degrees": [a, b, ab], "product_eigen": product_eigen, "verdict": v.to_string(), "rule": rule }));
    } else {
        say!("{v}");
    }
    Ok(match v {
        M1Verdict::Admissible => EXIT_OK,
        M1Verdict::Violates(_) => EXIT_FAIL,
    })
}

fn run(cli: &Cli, command: &[String]) -> Result<u8, CliError> {
    match &cli.command {
        Command::Type { target } => run_type(target, cli.json),
        Command::Jacobi { target } => run_jacobi(target, cli.json),
        Command::Pfaffian { target, samples, seed } => run_pfaffian(target, *samples, *seed, cli.json),
        Command::Certify(args) => run_certify(args, cli.json, command),
        Command::Catalog { action } => run_catalog(action, cli.json),
        Command::Reduce { target } => run_reduce(target, cli.json),
        Command::FilterM1 { deg_a, deg_b, deg_ab, product_eigen } => {
            run_filter(*deg_a, *deg_b, *deg_ab, *product_eigen, cli.json)
        }
    }
}

fn main() -> ExitCode {
    let command: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(&cli, &command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
