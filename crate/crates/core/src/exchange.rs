//! Exchange matrices, quivers and Fomin–Zelevinsky mutation.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlinalg::{IntMatrix, MatrixRepr};
use crate::json::JsonInt;

/// Skew-symmetric integer matrix whose rows and columns are named by vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ExchangeRepr", into = "ExchangeRepr")]
pub struct ExchangeMatrix {
    b: IntMatrix,
    labels: Vec<String>,
}

impl ExchangeMatrix {
    pub fn new(b: IntMatrix, labels: Vec<String>) -> Result<Self> {
        if !b.is_square() {
            return Err(Error::NotSquare {
                rows: b.rows(),
                cols: b.cols(),
            });
        }
        if labels.len() != b.rows() {
            return Err(Error::LabelMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                b.rows()
            )));
        }
        check_distinct(&labels)?;
        if let Some((row, col)) = b.skew_symmetry_violation() {
            return Err(Error::NotSkewSymmetric { row, col });
        }
        Ok(Self { b, labels })
    }

    /// Labels `"0"`, `"1"`, ... in row order.
    pub fn with_index_labels(b: IntMatrix) -> Result<Self> {
        let labels = index_labels(b.rows());
        Self::new(b, labels)
    }

    pub fn from_rows<T, R>(rows: impl IntoIterator<Item = R>) -> Result<Self>
    where
        T: Into<BigInt>,
        R: IntoIterator<Item = T>,
    {
        Self::with_index_labels(IntMatrix::from_rows(rows)?)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.b[(i, j)]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Same matrix under new names. The caller guarantees that the new order
    /// matches the rows of `self`.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        Self::new(self.b.clone(), labels)
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// Mutation in direction `k` by the entrywise formula.
    ///
    /// Entries in row or column `k` change sign; every other entry gains
    /// `(|b_ik| b_kj + b_ik |b_kj|) / 2`.
    pub fn fz_mutate(&self, k: usize) -> Result<Self> {
        self.check_index(k)?;
        let n = self.len();
        let mut out = self.b.clone();
        for i in 0..n {
            for j in 0..n {
                if i == k || j == k {
                    out[(i, j)] = -&self.b[(i, j)];
                    continue;
                }
                let (bik, bkj) = (&self.b[(i, k)], &self.b[(k, j)]);
                let num = bik.abs() * bkj + bik * bkj.abs();
                let (half, rem) = num.div_rem(&BigInt::from(2));
                assert!(rem.is_zero(), "odd mutation numerator at ({i}, {j})");
                out[(i, j)] += half;
            }
        }
        Ok(Self {
            b: out,
            labels: self.labels.clone(),
        })
    }

    /// The matrix `S` with `S^t B S = mu_k(B)`.
    ///
    /// Row `k` holds `-δ_kj + (|b_kj| - b_kj) / 2`; every other row is the
    /// identity row. `S` is an involution.
    pub fn s_matrix(&self, k: usize) -> Result<IntMatrix> {
        self.check_index(k)?;
        let n = self.len();
        let mut s = IntMatrix::identity(n);
        for j in 0..n {
            let bkj = &self.b[(k, j)];
            let mut v: BigInt = (bkj.abs() - bkj) / 2;
            if j == k {
                v -= 1;
            }
            s[(k, j)] = v;
        }
        Ok(s)
    }

    /// Mutation in direction `k` computed as `S^t B S`.
    pub fn mutate_via_s(&self, k: usize) -> Result<Self> {
        let s = self.s_matrix(k)?;
        let b = &(&s.transpose() * &self.b) * &s;
        Self::new(b, self.labels.clone())
    }

    /// The antisymmetric form `x^t B y`.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        let n = self.len();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "pairing vectors of length {} and {} against {n} vertices",
                x.len(),
                y.len()
            )));
        }
        let by = self.b.mul_vec(y)?;
        Ok(x.iter().zip(&by).map(|(a, b)| a * b).sum())
    }

    /// Quiver with an arrow `u -> v` of multiplicity `b_uv` whenever `b_uv > 0`.
    pub fn to_quiver(&self) -> Quiver {
        let n = self.len();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.b[(i, j)].is_positive() {
                    arrows.push(Arrow {
                        source: self.labels[i].clone(),
                        target: self.labels[j].clone(),
                        multiplicity: self.b[(i, j)].clone(),
                    });
                }
            }
        }
        Quiver {
            vertices: self.labels.clone(),
            arrows,
        }
    }

    /// `b_LN = a_LN - a_NL`.
    pub fn from_quiver(q: &Quiver) -> Self {
        let n = q.vertices.len();
        let index: BTreeMap<&str, usize> = q
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut b = IntMatrix::zeros(n, n);
        for a in &q.arrows {
            let (s, t) = (index[a.source.as_str()], index[a.target.as_str()]);
            b[(s, t)] += &a.multiplicity;
            b[(t, s)] -= &a.multiplicity;
        }
        Self {
            b,
            labels: q.vertices.clone(),
        }
    }
}

pub(crate) fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn check_distinct(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::LabelMismatch(format!("duplicate label {l:?}")));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct ExchangeRepr {
    #[serde(flatten)]
    matrix: MatrixRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<ExchangeRepr> for ExchangeMatrix {
    type Error = Error;

    fn try_from(r: ExchangeRepr) -> Result<Self> {
        let b = IntMatrix::try_from(r.matrix)?;
        match r.labels {
            Some(labels) => Self::new(b, labels),
            None => Self::with_index_labels(b),
        }
    }
}

impl From<ExchangeMatrix> for ExchangeRepr {
    fn from(e: ExchangeMatrix) -> Self {
        ExchangeRepr {
            matrix: e.b.into(),
            labels: Some(e.labels),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: String,
    pub target: String,
    pub multiplicity: BigInt,
}

/// Finite quiver without loops or oriented 2-cycles.
///
/// Arrows are kept in row-major order of their `(source, target)` vertex
/// positions, so two quivers with the same arrows compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuiverRepr", into = "QuiverRepr")]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        check_distinct(&vertices).map_err(|e| Error::InvalidQuiver(e.to_string()))?;
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut keyed = BTreeMap::new();
        for a in arrows {
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {name:?}")))
            };
            let (s, t) = (lookup(&a.source)?, lookup(&a.target)?);
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at {:?}", a.source)));
            }
            if !a.multiplicity.is_positive() {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {:?} -> {:?} has multiplicity {}",
                    a.source, a.target, a.multiplicity
                )));
            }
            if keyed.contains_key(&(t, s)) {
                return Err(Error::InvalidQuiver(format!(
                    "2-cycle between {:?} and {:?}",
                    a.source, a.target
                )));
            }
            if keyed.insert((s, t), a).is_some() {
                return Err(Error::InvalidQuiver(format!(
                    "repeated arrow record {:?} -> {:?}",
                    vertices[s], vertices[t]
                )));
            }
        }
        Ok(Self {
            vertices,
            arrows: keyed.into_values().collect(),
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Multiplicity of the arrow `source -> target`, zero if absent.
    pub fn arrow_count(&self, source: &str, target: &str) -> BigInt {
        self.arrows
            .iter()
            .find(|a| a.source == source && a.target == target)
            .map_or_else(BigInt::zero, |a| a.multiplicity.clone())
    }

    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        ExchangeMatrix::from_quiver(self)
    }
}

/// Wire form: `{"vertices": [...], "arrows": [["u", "v", m], ...]}`.
#[derive(Serialize, Deserialize)]
struct QuiverRepr {
    vertices: Vec<String>,
    arrows: Vec<(String, String, JsonInt)>,
}

impl TryFrom<QuiverRepr> for Quiver {
    type Error = Error;

    fn try_from(r: QuiverRepr) -> Result<Self> {
        let arrows = r
            .arrows
            .into_iter()
            .map(|(source, target, m)| Arrow {
                source,
                target,
                multiplicity: m.0,
            })
            .collect();
        Quiver::new(r.vertices, arrows)
    }
}

impl From<Quiver> for QuiverRepr {
    fn from(q: Quiver) -> Self {
        QuiverRepr {
            vertices: q.vertices,
            arrows: q
                .arrows
                .into_iter()
                .map(|a| (a.source, a.target, JsonInt(a.multiplicity)))
                .collect(),
        }
    }
}
