use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CatalogError;
use crate::liealg::{Bracket, LieAlgebra};

/// A named family: dimension, parameter names, one-line description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub description: &'static str,
}

pub const ALGEBRAS: &[AlgebraEntry] = &[
    AlgebraEntry { name: "n333", params: &["a", "b", "c"], description: "3-step (3,3,3): [X1,Y1]=aZ1, [X2,Y2]=bZ2, [X3,Y3]=cZ3" },
    AlgebraEntry { name: "U", params: &["t", "s", "r"], description: "(6,3): t*U1 + s*U2 + r*U3" },
    AlgebraEntry { name: "n63prime", params: &["a", "b", "c"], description: "(6,3): h3+h3+h3 plus [X5,X4]=aY1, [X1,X6]=bY2, [X3,X2]=cY3" },
    AlgebraEntry { name: "ntilde", params: &["a", "b", "c"], description: "(6,3): f3 on X1..X3 plus [X3,X6]=cY1, [X1,X4]=aY2, [X2,X5]=bY3" },
    AlgebraEntry { name: "g12", params: &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"], description: "(6,3) twelve-parameter family, [X1,X6]=iY3 and [X4,X3]=lY3 orientation" },
    AlgebraEntry { name: "g12_literal", params: &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"], description: "(6,3) twelve-parameter family, [X3,X4]=iY3 and [X6,X1]=lY3 orientation" },
    AlgebraEntry { name: "n6314", params: &["a", "b", "c"], description: "(6,3) on X1,X2,X3,X'1,X'2,X'3: [Xi,X'i]=Yi plus [X3,X'2]=aY1, [X1,X'3]=bY2, [X2,X'1]=cY3" },
    AlgebraEntry { name: "h3", params: &[], description: "Heisenberg algebra [X1,X2]=X3" },
    AlgebraEntry { name: "h5", params: &[], description: "Heisenberg algebra [X1,X2]=[X3,X4]=Z" },
    AlgebraEntry { name: "n32", params: &[], description: "(3,2): [X1,X2]=Z1, [X1,X3]=Z2" },
    AlgebraEntry { name: "f3", params: &[], description: "free 2-step nilpotent on 3 generators" },
    AlgebraEntry { name: "l4", params: &[], description: "filiform [X1,X2]=X3, [X1,X3]=X4" },
    AlgebraEntry { name: "n55", params: &[], description: "(5,5): [Xi,Xi+1]=Yi, [X5,X1]=Y5" },
    AlgebraEntry { name: "n622", params: &[], description: "(6,2,2): two copies of [X1,X2]=Z1, [X5,X2]=W1, [X1,Z1]=W1" },
    AlgebraEntry { name: "n622_half", params: &[], description: "(3,1,1) half of n622 on X1,X2,X5,Z1,W1" },
    AlgebraEntry { name: "n442_0", params: &["a", "b", "c", "d"], description: "(4,4,2): h plus [X1,Z3]=aW1, [X2,Z1]=bW1, [X1,Z2]=cW2, [X2,Z4]=dW2" },
    AlgebraEntry { name: "n442_1", params: &["a", "b"], description: "(4,4,2): h plus [X1,Z1]=aW1, [X2,Z2]=bW2" },
    AlgebraEntry { name: "n424", params: &[], description: "(4,2,4): two copies of [X1,X2]=Z1, [X1,Z1]=W1, [X2,Z1]=W2" },
    AlgebraEntry { name: "n424_half", params: &[], description: "(2,1,2) half of n424" },
    AlgebraEntry { name: "n4222", params: &[], description: "(4,2,2,2): two copies of [X1,X2]=Z1, [X1,Z1]=W1, [X1,W1]=U1" },
    AlgebraEntry { name: "n4222_half", params: &[], description: "(2,1,1,1) half of n4222, isomorphic to l5" },
    AlgebraEntry { name: "abelian", params: &["n"], description: "abelian algebra of dimension n" },
];

pub fn algebra_entry(name: &str) -> Option<&'static AlgebraEntry> {
    ALGEBRAS.iter().find(|e| e.name == name)
}

type Row = (usize, usize, usize, usize);

/// One-based rows `(i, j, k, p)`: `[e_i, e_j] += coeff[p] e_k`, with `p = 0` meaning 1.
fn build(dim: usize, rows: &[Row], params: &[BigRational]) -> Result<LieAlgebra<BigRational>, CatalogError> {
    let bs = rows.iter().map(|&(i, j, k, p)| {
        let c = if p == 0 { BigRational::one() } else { params[p - 1].clone() };
        Bracket::new(i - 1, j - 1, k - 1, c)
    });
    Ok(LieAlgebra::new(dim, &(), bs)?)
}

const HEIS_442: [Row; 4] = [(1, 3, 5, 0), (2, 4, 6, 0), (2, 3, 7, 0), (1, 4, 8, 0)];

/// Builds a catalog algebra over ℚ from its name and parameters.
pub fn catalog_algebra(name: &str, params: &[BigRational]) -> Result<LieAlgebra<BigRational>, CatalogError> {
    let entry = algebra_entry(name).ok_or_else(|| CatalogError::UnknownName(name.to_string()))?;
    if entry.params.len() != params.len() {
        return Err(CatalogError::ParamCount { name: name.to_string(), expected: entry.params.len(), found: params.len() });
    }
    let p = params;
    match name {
        "n333" => build(9, &[(1, 2, 4, 0), (2, 3, 5, 0), (1, 3, 6, 0), (1, 4, 7, 1), (2, 5, 8, 2), (3, 6, 9, 3)], p),
        "U" => build(
            9,
            &[
                (1, 2, 7, 1),
                (3, 4, 8, 1),
                (5, 6, 9, 1),
                (5, 4, 7, 2),
                (1, 6, 8, 2),
                (3, 2, 9, 2),
                (3, 6, 7, 3),
                (5, 2, 8, 3),
                (1, 4, 9, 3),
            ],
            p,
        ),
        "n63prime" => build(9, &[(1, 2, 7, 0), (3, 4, 8, 0), (5, 6, 9, 0), (5, 4, 7, 1), (1, 6, 8, 2), (3, 2, 9, 3)], p),
        "ntilde" => build(9, &[(1, 2, 7, 0), (2, 3, 8, 0), (1, 3, 9, 0), (3, 6, 7, 3), (1, 4, 8, 1), (2, 5, 9, 2)], p),
        "g12" | "g12_literal" => {
            let (i_row, l_row) = if name == "g12" { ((1, 6, 9, 9), (4, 3, 9, 12)) } else { ((3, 4, 9, 9), (6, 1, 9, 12)) };
            build(
                9,
                &[
                    (1, 2, 7, 1),
                    (2, 3, 8, 2),
                    (1, 3, 9, 3),
                    (4, 5, 7, 4),
                    (5, 6, 8, 5),
                    (4, 6, 9, 6),
                    (1, 5, 7, 7),
                    (2, 6, 8, 8),
                    i_row,
                    (4, 2, 7, 10),
                    (5, 3, 8, 11),
                    l_row,
                ],
                p,
            )
        }
        "n6314" => build(9, &[(1, 4, 7, 0), (2, 5, 8, 0), (3, 6, 9, 0), (3, 5, 7, 1), (1, 6, 8, 2), (2, 4, 9, 3)], p),
        "h3" => build(3, &[(1, 2, 3, 0)], p),
        "h5" => build(5, &[(1, 2, 5, 0), (3, 4, 5, 0)], p),
        "n32" => build(5, &[(1, 2, 4, 0), (1, 3, 5, 0)], p),
        "f3" => build(6, &[(1, 2, 4, 0), (2, 3, 5, 0), (1, 3, 6, 0)], p),
        "l4" => build(4, &[(1, 2, 3, 0), (1, 3, 4, 0)], p),
        "n55" => build(10, &[(1, 2, 6, 0), (2, 3, 7, 0), (3, 4, 8, 0), (4, 5, 9, 0), (5, 1, 10, 0)], p),
        "n622" => build(10, &[(1, 2, 7, 0), (5, 2, 9, 0), (1, 7, 9, 0), (3, 4, 8, 0), (6, 4, 10, 0), (3, 8, 10, 0)], p),
        "n622_half" => build(5, &[(1, 2, 4, 0), (3, 2, 5, 0), (1, 4, 5, 0)], p),
        "n442_0" => {
            let mut rows = HEIS_442.to_vec();
            rows.extend([(1, 7, 9, 1), (2, 5, 9, 2), (1, 6, 10, 3), (2, 8, 10, 4)]);
            build(10, &rows, p)
        }
        "n442_1" => {
            let mut rows = HEIS_442.to_vec();
            rows.extend([(1, 5, 9, 1), (2, 6, 10, 2)]);
            build(10, &rows, p)
        }
        "n424" => build(10, &[(1, 2, 5, 0), (1, 5, 7, 0), (2, 5, 8, 0), (3, 4, 6, 0), (3, 6, 9, 0), (4, 6, 10, 0)], p),
        "n424_half" => build(5, &[(1, 2, 3, 0), (1, 3, 4, 0), (2, 3, 5, 0)], p),
        "n4222" => build(10, &[(1, 2, 5, 0), (1, 5, 7, 0), (1, 7, 9, 0), (3, 4, 6, 0), (3, 6, 8, 0), (3, 8, 10, 0)], p),
        "n4222_half" => build(5, &[(1, 2, 3, 0), (1, 3, 4, 0), (1, 4, 5, 0)], p),
        "abelian" => {
            let n = &p[0];
            let dim = if n.is_integer() && !n.is_negative() && !n.is_zero() { n.to_integer().to_usize() } else { None };
            let dim = dim.ok_or_else(|| CatalogError::BadParameter(format!("abelian dimension {n}")))?;
            Ok(LieAlgebra::abelian(dim, &()))
        }
        _ => unreachable!("entry table and constructor out of sync for {name}"),
    }
}

/// Convenience for integer parameters.
pub fn catalog_algebra_int(name: &str, params: &[i64]) -> Result<LieAlgebra<BigRational>, CatalogError> {
    let q: Vec<BigRational> = params.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
    catalog_algebra(name, &q)
}
