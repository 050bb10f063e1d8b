//! The JSON interchange format for algebras, automorphisms and bases.

use std::path::Path;
use std::sync::Arc;

use anosov_core::anosov::{BasisMatrix, DiagonalAutomorphism};
use anosov_core::catalog::{algebra_entry, catalog_algebra, paper_case, PaperCase};
use anosov_core::exactnum::rational::{format_rational, parse_rational};
use anosov_core::exactnum::{field_new, FieldElement, FieldHandle, IntPolynomial, NumberField};
use anosov_core::liealg::{Bracket, GradedType, LieAlgebra};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A rational written as `"p/q"`, `"p"`, or a JSON integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Integer(i64),
}

/// A scalar: a rational, or a field element as coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Rational(Number),
    Element(Vec<Number>),
}

/// `[e_i, e_j] = … + c e_k`, one-based with `i < j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    /// Monic modulus coefficients, lowest degree first; absent means ℚ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Vec<Number>>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<usize>>,
    /// Eigenvalues on the basis `e_1, …, e_dim`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Vec<Value>>,
    /// New basis vectors in eigencoordinates, one inner list per vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Value>>>,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{source_name}: cannot read: {message}")]
    Io { source_name: String, message: String },
    #[error("{source_name}:{line}:{column}: {message}")]
    Syntax { source_name: String, line: usize, column: usize, message: String },
    #[error("{source_name}: field `{field}`: {message}")]
    Field { source_name: String, field: String, message: String },
    #[error("unknown target {0:?}")]
    UnknownTarget(String),
}

/// A parsed input ready for the commands.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub label: String,
    pub field: Arc<NumberField>,
    /// The document had no field: scalars are rational.
    pub rational: bool,
    pub algebra: LieAlgebra<FieldElement>,
    pub automorphism: Option<DiagonalAutomorphism>,
    pub basis: Option<BasisMatrix>,
}

/// `ℚ` as the degree-one field `ℚ[t]/(t)`.
pub fn rational_field() -> Arc<NumberField> {
    field_new(IntPolynomial::from_i64(&[0, 1])).expect("t is irreducible")
}

struct Ctx<'a> {
    source: &'a str,
}

impl Ctx<'_> {
    fn err(&self, field: impl Into<String>, message: impl Into<String>) -> ParseError {
        ParseError::Field { source_name: self.source.to_string(), field: field.into(), message: message.into() }
    }

    fn number(&self, field: &str, n: &Number) -> Result<BigRational, ParseError> {
        match n {
            Number::Integer(v) => Ok(BigRational::from_integer(BigInt::from(*v))),
            Number::Text(s) => parse_rational(s).ok_or_else(|| self.err(field, format!("{s:?} is not a rational p/q"))),
        }
    }

    fn scalar(&self, field: &str, f: &Arc<NumberField>, v: &Value) -> Result<FieldElement, ParseError> {
        match v {
            Value::Rational(n) => Ok(f.from_rational(self.number(field, n)?)),
            Value::Element(cs) => {
                if cs.len() > f.degree() {
                    return Err(self.err(field, format!("{} coefficients for a degree-{} field", cs.len(), f.degree())));
                }
                let coords = cs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| self.number(&format!("{field}[{n}]"), c))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(f.element(coords))
            }
        }
    }
}

impl AlgebraDocument {
    pub fn from_json(source: &str, text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| {
            let full = e.to_string();
            let message = match full.rfind(" at line ") {
                Some(p) => full[..p].to_string(),
                None => full,
            };
            ParseError::Syntax { source_name: source.to_string(), line: e.line(), column: e.column(), message }
        })
    }

    /// Validates the document and builds the module objects.
    pub fn resolve(&self, source: &str) -> Result<Loaded, ParseError> {
        let cx = Ctx { source };
        let (field, rational) = match &self.field {
            None => (rational_field(), true),
            Some(cs) => {
                let mut ints = Vec::with_capacity(cs.len());
                for (n, c) in cs.iter().enumerate() {
                    let name = format!("field[{n}]");
                    let q = cx.number(&name, c)?;
                    if !q.denom().is_one() {
                        return Err(cx.err(name, "modulus coefficients must be integers"));
                    }
                    ints.push(q.numer().clone());
                }
                let f = field_new(IntPolynomial::new(ints)).map_err(|e| cx.err("field", e.to_string()))?;
                (f, false)
            }
        };
        let n = self.dim;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (p, b) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{p}]");
            for (name, v) in [("i", b.i), ("j", b.j), ("k", b.k)] {
                if v == 0 || v > n {
                    return Err(cx.err(format!("{at}.{name}"), format!("index {v} outside 1..={n}")));
                }
            }
            if b.i >= b.j {
                return Err(cx.err(at, format!("need i < j, got i = {}, j = {}", b.i, b.j)));
            }
            let c = cx.scalar(&format!("{at}.c"), &field, &b.c)?;
            brackets.push(Bracket::new(b.i - 1, b.j - 1, b.k - 1, c));
        }
        let mut algebra = LieAlgebra::new(n, &field, brackets).map_err(|e| cx.err("brackets", e.to_string()))?;
        if let Some(g) = &self.grading {
            algebra = algebra.with_grading(GradedType::new(g.clone())).map_err(|e| cx.err("grading", e.to_string()))?;
        }
        let automorphism = match &self.automorphism {
            None => None,
            Some(vs) => {
                if vs.len() != n {
                    return Err(cx.err("automorphism", format!("{} eigenvalues for dimension {n}", vs.len())));
                }
                let e = vs
                    .iter()
                    .enumerate()
                    .map(|(p, v)| cx.scalar(&format!("automorphism[{p}]"), &field, v))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(DiagonalAutomorphism::new(&field, e).map_err(|e| cx.err("automorphism", e.to_string()))?)
            }
        };
        let basis = match &self.basis {
            None => None,
            Some(cols) => {
                if cols.len() != n {
                    return Err(cx.err("basis", format!("{} vectors for dimension {n}", cols.len())));
                }
                let mut out = Vec::with_capacity(n);
                for (c, col) in cols.iter().enumerate() {
                    if col.len() != n {
                        return Err(cx.err(format!("basis[{c}]"), format!("{} coordinates for dimension {n}", col.len())));
                    }
                    let v = col
                        .iter()
                        .enumerate()
                        .map(|(r, x)| cx.scalar(&format!("basis[{c}][{r}]"), &field, x))
                        .collect::<Result<Vec<_>, _>>()?;
                    out.push(v);
                }
                Some(BasisMatrix::from_columns(&field, out).map_err(|e| cx.err("basis", e.to_string()))?)
            }
        };
        Ok(Loaded { label: self.name.clone().unwrap_or_else(|| source.to_string()), field, rational, algebra, automorphism, basis })
    }

    /// Serializes an algebra with optional automorphism and basis.
    pub fn from_parts(
        name: Option<String>,
        algebra: &LieAlgebra<FieldElement>,
        rational: bool,
        automorphism: Option<&DiagonalAutomorphism>,
        basis: Option<&BasisMatrix>,
    ) -> Self {
        let field = (!rational).then(|| {
            algebra.ctx().modulus().coeffs().iter().map(|c| Number::Text(c.to_string())).collect()
        });
        let value = |e: &FieldElement| element_value(e, rational);
        AlgebraDocument {
            name,
            dim: algebra.dim(),
            field,
            brackets: algebra
                .brackets()
                .iter()
                .map(|b| BracketEntry { i: b.i + 1, j: b.j + 1, k: b.k + 1, c: value(&b.coeff) })
                .collect(),
            grading: algebra.stored_grading().map(|g| g.parts.clone()),
            automorphism: automorphism.map(|a| a.eigenvalues().iter().map(value).collect()),
            basis: basis.map(|b| {
                let m = b.matrix();
                (0..m.cols()).map(|c| (0..m.rows()).map(|r| value(m.get(r, c))).collect()).collect()
            }),
        }
    }

    pub fn from_case(c: &PaperCase) -> Self {
        AlgebraDocument::from_parts(Some(c.name.to_string()), &c.algebra, false, Some(&c.automorphism), Some(&c.basis))
    }
}

/// A field element as its coefficient list, or a bare rational over ℚ.
pub fn element_value(e: &FieldElement, rational: bool) -> Value {
    match (rational, e.as_rational()) {
        (true, Some(q)) => Value::Rational(Number::Text(format_rational(&q))),
        _ => Value::Element(coefficients(e).into_iter().map(Number::Text).collect()),
    }
}

/// Coefficients lowest degree first with trailing zeros dropped.
pub fn coefficients(e: &FieldElement) -> Vec<String> {
    let mut c: Vec<&BigRational> = e.coords().iter().collect();
    while c.len() > 1 && c.last().is_some_and(|q| num_traits::Zero::is_zero(*q)) {
        c.pop();
    }
    c.into_iter().map(format_rational).collect()
}

/// Parses `a,b,c` catalog parameters.
pub fn parse_params(text: &str) -> Result<Vec<BigRational>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| parse_rational(s).ok_or_else(|| format!("bad parameter {s:?}"))).collect()
}

/// Builds a catalog algebra, defaulting every parameter to 1.
pub fn catalog_target(name: &str, params: Option<&str>) -> Result<LieAlgebra<BigRational>, String> {
    let entry = algebra_entry(name).ok_or_else(|| format!("unknown catalog algebra {name:?}"))?;
    let p = match params {
        Some(t) => parse_params(t)?,
        None => vec![BigRational::one(); entry.params.len()],
    };
    catalog_algebra(name, &p).map_err(|e| e.to_string())
}

/// Loads `case:NAME`, `catalog:NAME[:p1,p2,…]`, `-` (stdin) or a file path.
pub fn load(target: &str) -> Result<Loaded, ParseError> {
    if let Some(name) = target.strip_prefix("case:") {
        let c = paper_case(name).map_err(|_| ParseError::UnknownTarget(target.to_string()))?;
        return Ok(Loaded {
            label: c.name.to_string(),
            field: c.field.clone(),
            rational: false,
            algebra: c.algebra,
            automorphism: Some(c.automorphism),
            basis: Some(c.basis),
        });
    }
    if let Some(rest) = target.strip_prefix("catalog:") {
        let (name, params) = match rest.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (rest, None),
        };
        let l = catalog_target(name, params).map_err(|m| ParseError::Field {
            source_name: target.to_string(),
            field: "params".into(),
            message: m,
        })?;
        let f = rational_field();
        return Ok(Loaded { label: target.to_string(), field: f.clone(), rational: true, algebra: l.lift(&f), automorphism: None, basis: None });
    }
    let text = if target == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(Path::new(target))
    }
    .map_err(|e| ParseError::Io { source_name: target.to_string(), message: e.to_string() })?;
    AlgebraDocument::from_json(target, &text)?.resolve(target)
}
