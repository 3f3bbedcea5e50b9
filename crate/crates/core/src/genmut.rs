//! The generalized mutation rule `B' = T B T^t`.
//!
//! `T` describes how each old indecomposable `M_j` is expressed through the
//! new cluster-tilting object: for every `j` there is an approximation
//! triangle
//!
//! ```text
//! Σ⁻¹M_j → ⊕ β_ij M'_i → ⊕ α_ij M'_i → M_j
//! ```
//!
//! and `t_ij = α_ij - β_ij`. Rows of `T` are indexed by the new objects and
//! columns by the old ones. Projective summands carry class zero and are not
//! part of either basis.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;
use crate::intlinalg::{unimodular_inverse, IntMatrix};

/// Multiplicities of the middle terms of one approximation triangle per old object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TriangleRepr", into = "TriangleRepr")]
pub struct ApproxTriangleData {
    new_labels: Vec<String>,
    old_labels: Vec<String>,
    alpha: IntMatrix,
    beta: IntMatrix,
}

impl ApproxTriangleData {
    pub fn new(
        new_labels: Vec<String>,
        old_labels: Vec<String>,
        alpha: IntMatrix,
        beta: IntMatrix,
    ) -> Result<Self> {
        let shape = (new_labels.len(), old_labels.len());
        for (name, m) in [("alpha", &alpha), ("beta", &beta)] {
            if (m.rows(), m.cols()) != shape {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, labels require {}x{}",
                    m.rows(),
                    m.cols(),
                    shape.0,
                    shape.1
                )));
            }
            check_non_negative(name, m)?;
        }
        Ok(Self {
            new_labels,
            old_labels,
            alpha,
            beta,
        })
    }

    /// Starts from the trivial triangles `Σ⁻¹M_j → 0 → M'_j → M_j` for a
    /// same-size pair of bases; use [`Self::set_triangle`] to overwrite columns.
    pub fn trivial(new_labels: Vec<String>, old_labels: Vec<String>) -> Result<Self> {
        let n = old_labels.len();
        if new_labels.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} new objects against {n} old ones",
                new_labels.len()
            )));
        }
        Self::new(
            new_labels,
            old_labels,
            IntMatrix::identity(n),
            IntMatrix::zeros(n, n),
        )
    }

    /// Replaces the triangle of old object `j` by the given middle terms.
    pub fn set_triangle(&mut self, j: usize, alpha: &[BigInt], beta: &[BigInt]) -> Result<()> {
        let m = self.new_labels.len();
        if j >= self.old_labels.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.old_labels.len(),
            });
        }
        if alpha.len() != m || beta.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "triangle columns must have length {m}"
            )));
        }
        for (name, col) in [("alpha", alpha), ("beta", beta)] {
            if let Some(i) = col.iter().position(Signed::is_negative) {
                return Err(Error::NegativeMultiplicity {
                    which: name,
                    row: i,
                    col: j,
                    value: col[i].clone(),
                });
            }
        }
        for i in 0..m {
            self.alpha[(i, j)] = alpha[i].clone();
            self.beta[(i, j)] = beta[i].clone();
        }
        Ok(())
    }

    pub fn new_labels(&self) -> &[String] {
        &self.new_labels
    }

    pub fn old_labels(&self) -> &[String] {
        &self.old_labels
    }

    pub fn alpha(&self) -> &IntMatrix {
        &self.alpha
    }

    pub fn beta(&self) -> &IntMatrix {
        &self.beta
    }
}

fn check_non_negative(which: &'static str, m: &IntMatrix) -> Result<()> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m[(i, j)].is_negative() {
                return Err(Error::NegativeMultiplicity {
                    which,
                    row: i,
                    col: j,
                    value: m[(i, j)].clone(),
                });
            }
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct TriangleRepr {
    new: Vec<String>,
    old: Vec<String>,
    alpha: IntMatrix,
    beta: IntMatrix,
}

impl TryFrom<TriangleRepr> for ApproxTriangleData {
    type Error = Error;

    fn try_from(r: TriangleRepr) -> Result<Self> {
        ApproxTriangleData::new(r.new, r.old, r.alpha, r.beta)
    }
}

impl From<ApproxTriangleData> for TriangleRepr {
    fn from(d: ApproxTriangleData) -> Self {
        TriangleRepr {
            new: d.new_labels,
            old: d.old_labels,
            alpha: d.alpha,
            beta: d.beta,
        }
    }
}

/// Change-of-basis matrix between the classes of two cluster-tilting objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TMatrix {
    pub t: IntMatrix,
    pub new_labels: Vec<String>,
    pub old_labels: Vec<String>,
}

impl TMatrix {
    pub fn new(t: IntMatrix, new_labels: Vec<String>, old_labels: Vec<String>) -> Result<Self> {
        if t.rows() != new_labels.len() || t.cols() != old_labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "T is {}x{} but has {} new and {} old labels",
                t.rows(),
                t.cols(),
                new_labels.len(),
                old_labels.len()
            )));
        }
        Ok(Self {
            t,
            new_labels,
            old_labels,
        })
    }

    /// Identity on one basis.
    pub fn identity(labels: Vec<String>) -> Self {
        Self {
            t: IntMatrix::identity(labels.len()),
            new_labels: labels.clone(),
            old_labels: labels,
        }
    }

    /// The reverse change of basis, with the label roles swapped.
    pub fn inverse(&self) -> Result<Self> {
        Ok(Self {
            t: unimodular_inverse(&self.t)?,
            new_labels: self.old_labels.clone(),
            old_labels: self.new_labels.clone(),
        })
    }

    /// `self` after `first`: maps `first`'s old basis to `self`'s new basis.
    pub fn compose(&self, first: &TMatrix) -> Result<Self> {
        if self.old_labels != first.new_labels {
            return Err(Error::LabelMismatch(format!(
                "cannot compose: {:?} vs {:?}",
                self.old_labels, first.new_labels
            )));
        }
        Ok(Self {
            t: self.t.try_mul(&first.t)?,
            new_labels: self.new_labels.clone(),
            old_labels: first.old_labels.clone(),
        })
    }

    pub fn determinant(&self) -> Result<BigInt> {
        self.t.determinant()
    }
}

/// `t_ij = α_ij - β_ij`.
pub fn t_from_triangles(d: &ApproxTriangleData) -> Result<TMatrix> {
    check_non_negative("alpha", &d.alpha)?;
    check_non_negative("beta", &d.beta)?;
    let m = d.new_labels.len();
    let n = d.old_labels.len();
    let mut t = IntMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            t[(i, j)] = &d.alpha[(i, j)] - &d.beta[(i, j)];
        }
    }
    TMatrix::new(t, d.new_labels.clone(), d.old_labels.clone())
}

/// `T B T^t`, labelled by the new objects of `t`.
pub fn generalized_mutate(b: &ExchangeMatrix, t: &TMatrix) -> Result<ExchangeMatrix> {
    if !t.t.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "T must be square, got {}x{}",
            t.t.rows(),
            t.t.cols()
        )));
    }
    if t.t.cols() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "T has {} columns, B has {} vertices",
            t.t.cols(),
            b.len()
        )));
    }
    if t.old_labels != b.labels() {
        return Err(Error::LabelMismatch(format!(
            "T expects {:?}, B is labelled {:?}",
            t.old_labels,
            b.labels()
        )));
    }
    let out = &(&t.t * b.matrix()) * &t.t.transpose();
    ExchangeMatrix::new(out, t.new_labels.clone())
}

/// `T` for a single exchange at `k`, where only `M_k` is replaced.
///
/// Column `k` holds `-δ_ik + (|b_ik| + b_ik) / 2`; all other columns are the
/// identity columns.
pub fn single_step_t(b: &ExchangeMatrix, k: usize) -> Result<TMatrix> {
    let n = b.len();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let mut t = IntMatrix::identity(n);
    for i in 0..n {
        let bik = b.entry(i, k);
        let mut v: BigInt = (bik.abs() + bik) / 2;
        if i == k {
            v -= 1;
        }
        t[(i, k)] = v;
    }
    let labels = b.labels().to_vec();
    Ok(TMatrix {
        t,
        new_labels: labels.clone(),
        old_labels: labels,
    })
}

/// `S = (T^t)^-1`.
pub fn s_from_t(t: &TMatrix) -> Result<IntMatrix> {
    unimodular_inverse(&t.t.transpose())
}

/// First entry where two exchange matrices differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDifference {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub k: usize,
    pub passed: bool,
    pub first_difference: Option<EntryDifference>,
}

/// Compares the generalized rule with single-step `T` against the
/// entrywise mutation formula at `k`.
pub fn fz_consistency_check(b: &ExchangeMatrix, k: usize) -> ConsistencyReport {
    let via_formula = b.fz_mutate(k);
    let via_t = single_step_t(b, k).and_then(|t| generalized_mutate(b, &t));
    let first_difference = match (via_formula, via_t) {
        (Ok(expected), Ok(actual)) => first_difference(expected.matrix(), actual.matrix()),
        (Err(e), _) | (_, Err(e)) => Some(EntryDifference {
            row: k,
            col: k,
            expected: "a mutated matrix".into(),
            actual: e.to_string(),
        }),
    };
    ConsistencyReport {
        k,
        passed: first_difference.is_none(),
        first_difference,
    }
}

/// Row-major first position where `expected` and `actual` disagree.
pub fn first_difference(expected: &IntMatrix, actual: &IntMatrix) -> Option<EntryDifference> {
    if (expected.rows(), expected.cols()) != (actual.rows(), actual.cols()) {
        return Some(EntryDifference {
            row: 0,
            col: 0,
            expected: format!("{}x{}", expected.rows(), expected.cols()),
            actual: format!("{}x{}", actual.rows(), actual.cols()),
        });
    }
    for i in 0..expected.rows() {
        for j in 0..expected.cols() {
            if expected[(i, j)] != actual[(i, j)] {
                return Some(EntryDifference {
                    row: i,
                    col: j,
                    expected: expected[(i, j)].to_string(),
                    actual: actual[(i, j)].to_string(),
                });
            }
        }
    }
    None
}

/// True when `t` is square with determinant `±1`.
pub fn is_unimodular(t: &IntMatrix) -> bool {
    t.determinant()
        .map(|d| d.abs() == BigInt::from(1))
        .unwrap_or(false)
}
