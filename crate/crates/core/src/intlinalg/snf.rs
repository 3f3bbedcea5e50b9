//! Smith normal form over the integers and the abelian groups it describes.
//!
//! Every pivot is the nonzero entry of least absolute value in the remaining
//! submatrix, ties broken by the lexicographically smallest `(row, col)`.
//! Row operations are recorded in `U` and column operations in `V`, so the
//! result always satisfies `U * A * V = D` exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::json::JsonInt;

/// Output of [`snf`]: unimodular `u`, `v` and diagonal `d` with `u * a * v = d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `d`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn snf(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&d, t) else {
                return SnfResult { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut residue = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                residue |= !d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                residue |= !d[(t, j)].is_zero();
            }
            if residue {
                // a remainder smaller than the pivot is left; re-pivot
                continue;
            }

            if let Some(i) = first_non_multiple(&d, t, &pivot) {
                let one = BigInt::one();
                d.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                continue;
            }

            if pivot.is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    SnfResult { u, d, v }
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let abs = x.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                best = Some(((i, j), abs));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Row of the first entry in the trailing block not divisible by `pivot`.
fn first_non_multiple(d: &IntMatrix, t: usize, pivot: &BigInt) -> Option<usize> {
    (t + 1..d.rows()).find(|&i| (t + 1..d.cols()).any(|j| !d[(i, j)].is_multiple_of(pivot)))
}

/// Finitely generated abelian group `Z^free_rank + Z/t1 + ... + Z/tk`
/// with `t1 | t2 | ... | tk` and every `ti >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupDescriptor {
    pub free_rank: usize,
    #[serde(with = "torsion_json")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDescriptor {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        let two = BigInt::from(2);
        if let Some(bad) = torsion.iter().find(|t| **t < two) {
            return Err(Error::InvalidDescriptor(format!(
                "torsion coefficient {bad} is below 2"
            )));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidDescriptor(
                "torsion coefficients do not form a divisibility chain".into(),
            ));
        }
        Ok(Self { free_rank, torsion })
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// `Z^r ⊕ Z/d1 ⊕ ...`, with `Z` for rank one and `0` for the trivial group.
impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

mod torsion_json {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<JsonInt> = v.iter().cloned().map(JsonInt).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let wrapped = Vec::<JsonInt>::deserialize(d)?;
        Ok(wrapped.into_iter().map(|x| x.0).collect())
    }
}

/// `Z^rows / Im(a)`.
pub fn cokernel(a: &IntMatrix) -> AbelianGroupDescriptor {
    let result = snf(a);
    let diag = result.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let torsion = diag.into_iter().filter(|x| *x > BigInt::one()).collect();
    AbelianGroupDescriptor {
        free_rank: a.rows() - rank,
        torsion,
    }
}

/// Exact inverse of a square integer matrix with determinant `±1`.
pub fn unimodular_inverse(a: &IntMatrix) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let SnfResult { u, d, v } = snf(a);
    // u a v = 1 forces a^-1 = v u
    if !d.is_identity() {
        return Err(Error::NotUnimodular {
            det: a.determinant()?,
        });
    }
    Ok(&v * &u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    fn diag(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn zero_matrix_is_already_reduced() {
        let z = IntMatrix::zeros(3, 3);
        let r = snf(&z);
        assert!(r.d.is_zero());
        assert!(r.u.is_identity() && r.v.is_identity());
    }

    #[test]
    fn identity_stays_identity() {
        assert!(snf(&IntMatrix::identity(2)).d.is_identity());
    }

    #[test]
    fn linear_a3_exchange_matrix() {
        let b = m(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        let r = snf(&b);
        assert_eq!(r.diagonal(), diag(&[1, 1, 0]));
        assert_eq!(&(&r.u * &b) * &r.v, r.d);
    }

    #[test]
    fn empty_shapes() {
        let r = snf(&IntMatrix::zeros(0, 0));
        assert_eq!((r.d.rows(), r.d.cols()), (0, 0));
        let r = snf(&IntMatrix::zeros(0, 3));
        assert!(r.v.is_identity() && r.v.rows() == 3);
        assert_eq!(cokernel(&IntMatrix::zeros(4, 0)).free_rank, 4);
        assert!(cokernel(&IntMatrix::zeros(0, 0)).is_trivial());
    }

    #[test]
    fn negative_pivot_is_normalized() {
        let r = snf(&m(&[&[-3]]));
        assert_eq!(r.diagonal(), diag(&[3]));
        assert_eq!(r.u, m(&[&[-1]]));
    }

    #[test]
    fn divisibility_fix_up() {
        // diag(2, 3) has invariant factors 1, 6
        let a = m(&[&[2, 0], &[0, 3]]);
        let r = snf(&a);
        assert_eq!(r.diagonal(), diag(&[1, 6]));
        assert_eq!(&(&r.u * &a) * &r.v, r.d);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&IntMatrix::zeros(3, 3)).to_string(), "Z^3");
        assert_eq!(cokernel(&m(&[&[2]])).torsion, diag(&[2]));
        let g = cokernel(&m(&[&[0, 2], &[-2, 0]]));
        assert_eq!(g.to_string(), "Z/2 ⊕ Z/2");
        let g = cokernel(&m(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]));
        assert_eq!(g.to_string(), "Z");
        assert_eq!(cokernel(&IntMatrix::identity(3)).to_string(), "0");
    }

    #[test]
    fn descriptor_validation() {
        assert!(AbelianGroupDescriptor::new(1, diag(&[2, 4])).is_ok());
        assert!(AbelianGroupDescriptor::new(0, diag(&[2, 3])).is_err());
        assert!(AbelianGroupDescriptor::new(0, diag(&[1])).is_err());
    }

    #[test]
    fn inverse_errors() {
        let err = unimodular_inverse(&m(&[&[1, 1], &[0, 2]])).unwrap_err();
        assert_eq!(
            err,
            Error::NotUnimodular {
                det: BigInt::from(2)
            }
        );
        assert!(matches!(
            unimodular_inverse(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        assert!(unimodular_inverse(&IntMatrix::identity(4))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn inverse_of_permutation_with_signs() {
        let a = m(&[&[0, -1], &[1, 0]]);
        let inv = unimodular_inverse(&a).unwrap();
        assert!((&a * &inv).is_identity());
    }
}
