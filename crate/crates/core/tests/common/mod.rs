//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls the routine it is used to check.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use mutwb_core::typea::{self, Diagonal, Triangulation};
use mutwb_core::{BigInt, ExchangeMatrix, IntMatrix};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn im(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
}

pub fn ex(rows: &[&[i64]]) -> ExchangeMatrix {
    ExchangeMatrix::with_index_labels(im(rows)).unwrap()
}

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_row_vecs()
        .into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &IntMatrix) -> BigInt {
    assert!(m.is_square());
    let rows = m.to_row_vecs();
    laplace(&rows)
}

fn laplace(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][j] * laplace(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Nonzero invariant factors from determinantal divisors:
/// `d_k = gcd of all k x k minors`, factor `k` is `d_k / d_(k-1)`.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.to_row_vecs();
    let (r, c) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rs in combinations(r, k) {
            for cs in combinations(c, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&laplace(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

pub fn random_matrix(rng: &mut StdRng, max_dim: usize, bound: i64) -> IntMatrix {
    let r = rng.random_range(0..=max_dim);
    let c = rng.random_range(0..=max_dim);
    let data = (0..r * c)
        .map(|_| BigInt::from(rng.random_range(-bound..=bound)))
        .collect();
    IntMatrix::new(r, c, data).unwrap()
}

pub fn random_skew(rng: &mut StdRng, n: usize, bound: i64) -> ExchangeMatrix {
    let mut b = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = BigInt::from(rng.random_range(-bound..=bound));
            b[(j, i)] = -&v;
            b[(i, j)] = v;
        }
    }
    ExchangeMatrix::with_index_labels(b).unwrap()
}

/// Product of `steps` random elementary integer matrices (determinant ±1).
pub fn random_unimodular(rng: &mut StdRng, n: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..steps {
        match rng.random_range(0..3) {
            0 if n > 1 => {
                let i = rng.random_range(0..n);
                let j = (i + rng.random_range(1..n)) % n;
                u.add_row_multiple(i, j, &BigInt::from(rng.random_range(-3..=3)));
            }
            1 => u.swap_rows(rng.random_range(0..n), rng.random_range(0..n)),
            _ => u.negate_row(rng.random_range(0..n)),
        }
    }
    u
}

/// Mutation by arrow surgery on the quiver: add `i -> j` for every path
/// `i -> k -> j`, reverse arrows at `k`, cancel opposite pairs.
pub fn quiver_mutation_oracle(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    // arrows[i][j] = number of arrows i -> j
    let mut arrows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            arrows[i][j] = b[i][j].max(0);
        }
    }
    let mut next = arrows.clone();
    for i in 0..n {
        for j in 0..n {
            if i != k && j != k && i != j {
                next[i][j] += arrows[i][k] * arrows[k][j];
            }
        }
    }
    for i in 0..n {
        next[i][k] = arrows[k][i];
        next[k][i] = arrows[i][k];
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = next[i][j] - next[j][i];
        }
    }
    out
}

/// Flip graph built from the enumeration alone: two triangulations are
/// adjacent when they share all but one diagonal.
pub struct FlipGraphOracle {
    pub nodes: Vec<Triangulation>,
    pub adjacency: Vec<Vec<usize>>,
}

impl FlipGraphOracle {
    pub fn new(m: usize) -> Self {
        let nodes = typea::enumerate(m).unwrap();
        let n = nodes.len();
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                let shared = nodes[i]
                    .diagonals()
                    .iter()
                    .filter(|d| nodes[j].diagonals().contains(d))
                    .count();
                if shared + 1 == m - 3 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        Self { nodes, adjacency }
    }

    pub fn index_of(&self, t: &Triangulation) -> usize {
        self.nodes.iter().position(|x| x == t).unwrap()
    }

    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.nodes.len()];
        dist[src] = 0;
        let mut q = VecDeque::from([src]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }
}

/// Triangulation reached by `steps` uniformly random flips from the fan.
pub fn random_triangulation(rng: &mut StdRng, m: usize, steps: usize) -> Triangulation {
    let mut t = Triangulation::fan(m).unwrap();
    for _ in 0..steps {
        let d = t.diagonals()[rng.random_range(0..t.diagonals().len())];
        t = typea::flip(&t, d).unwrap().0;
    }
    t
}

/// Exchange matrix of `tri` permuted into the order of `basis`, computed by
/// reindexing the canonical matrix (not by [`Triangulation::exchange_matrix_in`]).
pub fn permuted_exchange(tri: &Triangulation, basis: &[Diagonal]) -> Vec<Vec<i64>> {
    let canonical = to_i64(tri.exchange_matrix().matrix());
    let pos: HashMap<Diagonal, usize> = tri
        .diagonals()
        .iter()
        .enumerate()
        .map(|(i, d)| (*d, i))
        .collect();
    basis
        .iter()
        .map(|di| basis.iter().map(|dj| canonical[pos[di]][pos[dj]]).collect())
        .collect()
}

pub fn is_unit(x: &BigInt) -> bool {
    x.abs() == BigInt::one()
}
