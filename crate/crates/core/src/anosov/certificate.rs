use num_rational::BigRational;

use super::{
    hyperbolicity_check, integrality_in_basis, is_automorphism, splitting_of, unit_products_check, zbasis_check,
    AnosovError, BasisMatrix, BlockProduct, BracketWitness, DiagonalAutomorphism, Hyperbolicity, IntegralityReport,
    ProductClass, Splitting, StructureWitness,
};
use crate::exactnum::{FieldElement, DEFAULT_PRECISION_CAP};
use crate::liealg::{GradedType, LieAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Square the automorphism once when some block product is −1.
    pub auto_square: bool,
    /// Refinement cap in bits for the unit-circle test.
    pub precision_cap: u32,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { auto_square: false, precision_cap: DEFAULT_PRECISION_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Why the first failing stage failed.
#[derive(Clone, Debug, PartialEq)]
pub enum FailureWitness {
    Bracket(BracketWitness),
    BlockProduct { block: usize, value: FieldElement },
    Eigenvalue { index: usize, on_circle: bool },
    StructureConstant(StructureWitness),
    MatrixEntry { row: usize, col: usize, value: FieldElement },
    Determinant(Option<BigRational>),
}

/// Stage-by-stage outcome of the certification pipeline.
#[derive(Clone, Debug)]
pub struct AnosovCertificate {
    pub graded_type: GradedType,
    pub layers: Vec<Vec<usize>>,
    pub automorphism: Result<(), BracketWitness>,
    /// Block products of the automorphism as given.
    pub initial_products: Vec<BlockProduct>,
    /// Block products of the automorphism actually certified.
    pub products: Vec<BlockProduct>,
    pub squared: bool,
    pub splittings: Vec<Result<Splitting, AnosovError>>,
    pub hyperbolicity: Hyperbolicity,
    pub zbasis: Result<LieAlgebra<BigRational>, StructureWitness>,
    pub integrality: IntegralityReport,
    pub certified: DiagonalAutomorphism,
    pub verdict: Verdict,
    pub witness: Option<FailureWitness>,
}

/// The basis-independent content of a certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateSummary {
    pub verdict: Verdict,
    pub squared: bool,
    pub automorphism_ok: bool,
    pub products: Vec<FieldElement>,
    pub margin: Option<BigRational>,
    pub zbasis_integral: bool,
    pub matrix_integral: bool,
    pub det: Option<BigRational>,
    pub splittings: Vec<Option<Vec<usize>>>,
}

impl AnosovCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn margin(&self) -> Option<&BigRational> {
        match &self.hyperbolicity {
            Hyperbolicity::Hyperbolic { margin } => Some(margin),
            _ => None,
        }
    }

    pub fn summary(&self) -> CertificateSummary {
        CertificateSummary {
            verdict: self.verdict,
            squared: self.squared,
            automorphism_ok: self.automorphism.is_ok(),
            products: self.products.iter().map(|p| p.product.clone()).collect(),
            margin: self.margin().cloned(),
            zbasis_integral: self.zbasis.is_ok(),
            matrix_integral: self.integrality.integral,
            det: self.integrality.det.clone(),
            splittings: self.splittings.iter().map(|s| s.as_ref().ok().map(|s| s.degrees.clone())).collect(),
        }
    }
}

/// Runs automorphism, block-product, hyperbolicity, ℤ-basis and `GL_n(ℤ)` checks.
///
/// Stage failures are recorded in the certificate; only inconsistent input is an error.
pub fn certify_anosov(
    l: &LieAlgebra<FieldElement>,
    a: &DiagonalAutomorphism,
    b: &BasisMatrix,
    options: CertifyOptions,
) -> Result<AnosovCertificate, AnosovError> {
    let n = l.dim();
    for found in [a.dim(), b.dim()] {
        if found != n {
            return Err(AnosovError::DimensionMismatch { expected: n, found });
        }
    }
    if l.ctx() != a.field() || a.field() != b.matrix().ctx() {
        return Err(AnosovError::FieldMismatch);
    }
    let (graded_type, _) = l.graded_type()?;
    let layers = l.layer_indices()?;

    let automorphism = is_automorphism(l, a);
    let initial_products = unit_products_check(a, &layers);
    let needs_square = initial_products.iter().any(|p| p.class == ProductClass::MinusOne);
    let squared = options.auto_square && needs_square;
    let certified = if squared { a.square() } else { a.clone() };
    let products = if squared { unit_products_check(&certified, &layers) } else { initial_products.clone() };

    let splittings = layers
        .iter()
        .map(|blk| {
            let e: Vec<FieldElement> = blk.iter().map(|&i| certified.eigenvalue(i).clone()).collect();
            splitting_of(&e)
        })
        .collect();
    let hyperbolicity = hyperbolicity_check(&certified, options.precision_cap);
    let zbasis = zbasis_check(l, b)?;
    let integrality = integrality_in_basis(&certified, b)?;

    let mut witness = None;
    let mut inconclusive = false;
    if let Err(w) = &automorphism {
        witness = Some(FailureWitness::Bracket(w.clone()));
    }
    if witness.is_none() {
        if let Some((block, p)) = products.iter().enumerate().find(|(_, p)| p.class == ProductClass::Other) {
            witness = Some(FailureWitness::BlockProduct { block, value: p.product.clone() });
        }
    }
    if witness.is_none() {
        match &hyperbolicity {
            Hyperbolicity::Fails { index } => {
                witness = Some(FailureWitness::Eigenvalue { index: *index, on_circle: true });
            }
            Hyperbolicity::Inconclusive { .. } => inconclusive = true,
            Hyperbolicity::Hyperbolic { .. } => {}
        }
    }
    if witness.is_none() {
        if let Err(w) = &zbasis {
            witness = Some(FailureWitness::StructureConstant(w.clone()));
        }
    }
    if witness.is_none() {
        if let Some((row, col, value)) = &integrality.witness {
            witness = Some(FailureWitness::MatrixEntry { row: *row, col: *col, value: value.clone() });
        } else if !integrality.det_pm1 {
            witness = Some(FailureWitness::Determinant(integrality.det.clone()));
        }
    }
    let verdict = match (&witness, inconclusive) {
        (Some(_), _) => Verdict::Fail,
        (None, true) => Verdict::Inconclusive,
        (None, false) => Verdict::Pass,
    };
    Ok(AnosovCertificate {
        graded_type,
        layers,
        automorphism,
        initial_products,
        products,
        squared,
        splittings,
        hyperbolicity,
        zbasis,
        integrality,
        certified,
        verdict,
        witness,
    })
}
