//! Machine-readable reports.

use anosov_core::anosov::{
    AnosovCertificate, BlockProduct, FailureWitness, Hyperbolicity, ProductClass, Verdict,
};
use anosov_core::exactnum::rational::{format_rational, to_f64};
use serde::Serialize;

use crate::document::coefficients;

pub const TOOL: &str = "anosov";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
}

impl Header {
    pub fn new(command: &[String]) -> Self {
        Header { tool: TOOL, version: VERSION, command: command.to_vec() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductEntry {
    /// One-based basis indices of the block.
    pub indices: Vec<usize>,
    pub product: Vec<String>,
    pub class: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismStage {
    pub ok: bool,
    /// One-based `(i, j, k)` of the first broken bracket.
    pub witness: Option<[usize; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HyperbolicityStage {
    pub status: &'static str,
    /// Certified lower bound on `| |z| − 1 |` over all conjugates.
    pub margin: Option<String>,
    pub margin_approx: Option<f64>,
    /// One-based eigenvalue index that failed or could not be separated.
    pub index: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZBasisStage {
    pub integral: bool,
    /// One-based `(i, j, k)` and the offending constant.
    pub witness: Option<([usize; 3], Vec<String>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegralityStage {
    pub integral: bool,
    pub det: Option<String>,
    pub det_pm1: bool,
    pub matrix: Option<Vec<Vec<String>>>,
    /// One-based `(row, col)` and the offending entry.
    pub witness: Option<([usize; 2], Vec<String>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stages {
    pub automorphism: AutomorphismStage,
    pub initial_products: Vec<ProductEntry>,
    pub products: Vec<ProductEntry>,
    pub splittings: Vec<Option<String>>,
    pub hyperbolicity: HyperbolicityStage,
    pub zbasis: ZBasisStage,
    pub integrality: IntegralityStage,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub stage: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeInvariance {
    pub trials: usize,
    pub seed: u64,
    pub unchanged: bool,
    pub first_changed_seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    #[serde(flatten)]
    pub header: Header,
    pub target: String,
    pub dim: usize,
    pub graded_type: String,
    pub layers: Vec<Vec<usize>>,
    pub verdict: String,
    pub squared: bool,
    pub stages: Stages,
    pub witness: Option<Witness>,
    pub lattice_invariance: Option<LatticeInvariance>,
    pub timings: Timings,
}

fn class_name(c: &ProductClass) -> &'static str {
    match c {
        ProductClass::One => "1",
        ProductClass::MinusOne => "-1",
        ProductClass::Other => "other",
    }
}

fn products(ps: &[BlockProduct]) -> Vec<ProductEntry> {
    ps.iter()
        .map(|p| ProductEntry {
            indices: p.indices.iter().map(|i| i + 1).collect(),
            product: coefficients(&p.product),
            class: class_name(&p.class),
        })
        .collect()
}

fn describe_witness(w: &FailureWitness) -> Witness {
    let (stage, detail) = match w {
        FailureWitness::Bracket(b) => {
            ("automorphism", format!("[e{}, e{}] -> e{}: lambda_i lambda_j != lambda_k", b.i + 1, b.j + 1, b.k + 1))
        }
        FailureWitness::BlockProduct { block, value } => ("unit_products", format!("block {} has product {value}", block + 1)),
        FailureWitness::Eigenvalue { index, .. } => ("hyperbolicity", format!("eigenvalue {} lies on the unit circle", index + 1)),
        FailureWitness::StructureConstant(s) => (
            "zbasis",
            format!("[b{}, b{}] has coefficient {} on b{}", s.i + 1, s.j + 1, s.value, s.k + 1),
        ),
        FailureWitness::MatrixEntry { row, col, value } => {
            ("integrality", format!("entry ({}, {}) is {value}", row + 1, col + 1))
        }
        FailureWitness::Determinant(d) => (
            "integrality",
            match d {
                Some(d) => format!("determinant {}", format_rational(d)),
                None => "determinant not rational".to_string(),
            },
        ),
    };
    Witness { stage, detail }
}

impl CertifyReport {
    pub fn new(header: Header, target: String, dim: usize, cert: &AnosovCertificate, total_ms: f64) -> Self {
        let hyperbolicity = match &cert.hyperbolicity {
            Hyperbolicity::Hyperbolic { margin } => HyperbolicityStage {
                status: "HYPERBOLIC",
                margin: Some(format_rational(margin)),
                margin_approx: Some(to_f64(margin)),
                index: None,
            },
            Hyperbolicity::Fails { index } => {
                HyperbolicityStage { status: "ON_CIRCLE", margin: None, margin_approx: None, index: Some(index + 1) }
            }
            Hyperbolicity::Inconclusive { index } => {
                HyperbolicityStage { status: "INCONCLUSIVE", margin: None, margin_approx: None, index: Some(index + 1) }
            }
        };
        let zbasis = match &cert.zbasis {
            Ok(_) => ZBasisStage { integral: true, witness: None },
            Err(w) => ZBasisStage { integral: false, witness: Some(([w.i + 1, w.j + 1, w.k + 1], coefficients(&w.value))) },
        };
        let r = &cert.integrality;
        let integrality = IntegralityStage {
            integral: r.integral,
            det: r.det.as_ref().map(format_rational),
            det_pm1: r.det_pm1,
            matrix: r.matrix.as_ref().map(|m| {
                (0..m.rows()).map(|i| (0..m.cols()).map(|j| format_rational(m.get(i, j))).collect()).collect()
            }),
            witness: r.witness.as_ref().map(|(i, j, v)| ([i + 1, j + 1], coefficients(v))),
        };
        let stages = Stages {
            automorphism: AutomorphismStage {
                ok: cert.automorphism.is_ok(),
                witness: cert.automorphism.as_ref().err().map(|w| [w.i + 1, w.j + 1, w.k + 1]),
            },
            initial_products: products(&cert.initial_products),
            products: products(&cert.products),
            splittings: cert.splittings.iter().map(|s| s.as_ref().ok().map(|s| s.to_string())).collect(),
            hyperbolicity,
            zbasis,
            integrality,
        };
        CertifyReport {
            header,
            target,
            dim,
            graded_type: cert.graded_type.to_string(),
            layers: cert.layers.iter().map(|l| l.iter().map(|i| i + 1).collect()).collect(),
            verdict: cert.verdict.to_string(),
            squared: cert.squared,
            stages,
            witness: cert.witness.as_ref().map(describe_witness),
            lattice_invariance: None,
            timings: Timings { total_ms },
        }
    }

    /// The verdict after folding in the lattice-invariance trials.
    pub fn overall(&self, verdict: Verdict) -> Verdict {
        match &self.lattice_invariance {
            Some(l) if !l.unchanged => Verdict::Fail,
            _ => verdict,
        }
    }

    pub fn render_text(&self) -> String {
        let s = &self.stages;
        let mut out = String::new();
        let line = |out: &mut String, k: &str, v: String| out.push_str(&format!("  {k:<16}{v}\n"));
        out.push_str(&format!("{}  dim {}  type {}\n", self.target, self.dim, self.graded_type));
        line(
            &mut out,
            "automorphism",
            match s.automorphism.witness {
                None => "OK".into(),
                Some([i, j, k]) => format!("FAIL at [e{i}, e{j}] -> e{k}"),
            },
        );
        let classes = |ps: &[ProductEntry]| ps.iter().map(|p| p.class).collect::<Vec<_>>().join(" ");
        let mut prod = classes(&s.initial_products);
        if self.squared {
            prod.push_str(&format!("  (squared: {})", classes(&s.products)));
        }
        line(&mut out, "block products", prod);
        let splits: Vec<String> = s.splittings.iter().map(|x| x.clone().unwrap_or_else(|| "?".into())).collect();
        line(&mut out, "splittings", splits.join(" "));
        line(
            &mut out,
            "hyperbolicity",
            match (&s.hyperbolicity.margin_approx, s.hyperbolicity.index) {
                (Some(m), _) => format!("HYPERBOLIC, margin >= {m:.6e}"),
                (None, Some(i)) => format!("{} at eigenvalue {i}", s.hyperbolicity.status),
                (None, None) => s.hyperbolicity.status.to_string(),
            },
        );
        line(
            &mut out,
            "Z-basis",
            match &s.zbasis.witness {
                None => "integral".into(),
                Some(([i, j, k], v)) => format!("FAIL at [b{i}, b{j}] on b{k}: {}", v.join(", ")),
            },
        );
        let i = &s.integrality;
        line(
            &mut out,
            "[A] in GL(n,Z)",
            format!(
                "{}, det {}",
                if i.integral { "integral" } else { "not integral" },
                i.det.clone().unwrap_or_else(|| "irrational".into())
            ),
        );
        if let Some(l) = &self.lattice_invariance {
            line(
                &mut out,
                "B -> B U",
                format!("{} trials from seed {}: {}", l.trials, l.seed, if l.unchanged { "unchanged" } else { "CHANGED" }),
            );
        }
        if let Some(w) = &self.witness {
            line(&mut out, "witness", format!("{}: {}", w.stage, w.detail));
        }
        out.push_str(&format!("verdict {}{}\n", self.verdict, if self.squared { " (squared)" } else { "" }));
        out
    }
}
