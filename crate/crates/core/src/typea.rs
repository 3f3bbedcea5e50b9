//! Triangulations of a convex polygon as cluster-tilting objects of type A.
//!
//! The polygon has vertices `0..m` numbered counterclockwise. Diagonals are
//! the indecomposable objects, boundary edges are projective and carry class
//! zero, and flipping a diagonal is the exchange of one summand.
//!
//! Every basis is ordered canonically: diagonals sorted lexicographically by
//! their endpoint pairs `(a, b)` with `a < b`.
//!
//! Orientation: inside each triangle, an edge has an arrow to the edge that
//! precedes it in counterclockwise order. For a diagonal `d` with
//! surrounding quadrilateral `a, p, b, q` (counterclockwise, `a < p < b`),
//! the arrows into `d` come from `{a,p}` and `{b,q}`, which is the middle term
//! of the exchange triangle ending in `d`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exchange::{Arrow, ExchangeMatrix, Quiver};
use crate::genmut::{single_step_t, ApproxTriangleData, TMatrix};
use crate::intlinalg::{cokernel, AbelianGroupDescriptor, IntMatrix};

/// Breadth-first search stops after visiting this many triangulations.
pub const DEFAULT_BFS_LIMIT: usize = 1_000_000;

/// Unordered pair of polygon vertices, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Diagonal(usize, usize);

impl Diagonal {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Self(a, b)
        } else {
            Self(b, a)
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    /// Vertex label used in quivers and exchange matrices.
    pub fn label(self) -> String {
        format!("{}-{}", self.0, self.1)
    }

    /// Strict interior intersection; diagonals sharing an endpoint never cross.
    pub fn crosses(self, other: Diagonal) -> bool {
        let (a, b) = self.endpoints();
        let (c, d) = other.endpoints();
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    fn is_proper_in(self, m: usize) -> bool {
        let (a, b) = self.endpoints();
        a != b && b < m && b - a != 1 && !(a == 0 && b == m - 1)
    }
}

impl From<(usize, usize)> for Diagonal {
    fn from((a, b): (usize, usize)) -> Self {
        Diagonal::new(a, b)
    }
}

impl From<Diagonal> for (usize, usize) {
    fn from(d: Diagonal) -> Self {
        d.endpoints()
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// One exchange: `removed` replaced by the other diagonal of its quadrilateral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlipMove {
    pub removed: Diagonal,
    pub inserted: Diagonal,
}

/// Maximal set of pairwise non-crossing diagonals of a convex `m`-gon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TriangulationRepr", into = "TriangulationRepr")]
pub struct Triangulation {
    m: usize,
    diagonals: Vec<Diagonal>,
}

#[derive(Serialize, Deserialize)]
struct TriangulationRepr {
    m: usize,
    diagonals: Vec<(usize, usize)>,
}

impl TryFrom<TriangulationRepr> for Triangulation {
    type Error = Error;

    fn try_from(r: TriangulationRepr) -> Result<Self> {
        validate(r.m, r.diagonals)
    }
}

impl From<Triangulation> for TriangulationRepr {
    fn from(t: Triangulation) -> Self {
        TriangulationRepr {
            m: t.m,
            diagonals: t.diagonals.into_iter().map(Into::into).collect(),
        }
    }
}

/// Checks that `diagonals` triangulate the `m`-gon.
pub fn validate(
    m: usize,
    diagonals: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Triangulation> {
    if m < 4 {
        return Err(Error::PolygonTooSmall(m));
    }
    let mut ds: Vec<Diagonal> = Vec::new();
    for (a, b) in diagonals {
        let d = Diagonal::new(a, b);
        if !d.is_proper_in(m) {
            return Err(Error::BoundaryEdge((a, b), m));
        }
        if ds.contains(&d) {
            return Err(Error::DuplicateDiagonal(d.endpoints()));
        }
        ds.push(d);
    }
    for (i, d) in ds.iter().enumerate() {
        if let Some(e) = ds[i + 1..].iter().find(|e| d.crosses(**e)) {
            return Err(Error::Crossing(d.endpoints(), e.endpoints()));
        }
    }
    if ds.len() != m - 3 {
        return Err(Error::WrongCount {
            m,
            expected: m - 3,
            found: ds.len(),
        });
    }
    ds.sort();
    Ok(Triangulation { m, diagonals: ds })
}

impl Triangulation {
    /// All diagonals from vertex 0.
    pub fn fan(m: usize) -> Result<Self> {
        validate(m, (2..m.saturating_sub(1)).map(|b| (0, b)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Diagonals in canonical order.
    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn labels(&self) -> Vec<String> {
        self.diagonals.iter().map(|d| d.label()).collect()
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    pub fn position(&self, d: Diagonal) -> Option<usize> {
        self.diagonals.binary_search(&d).ok()
    }

    fn has_edge(&self, x: usize, y: usize) -> bool {
        let d = Diagonal::new(x, y);
        let (a, b) = d.endpoints();
        b - a == 1 || (a == 0 && b == self.m - 1) || self.contains(d)
    }

    fn require(&self, d: Diagonal) -> Result<usize> {
        self.position(d).ok_or(Error::NotADiagonal(d.endpoints()))
    }

    /// Quadrilateral `(a, p, b, q)` around `d = {a, b}`, counterclockwise, `a < p < b`.
    fn quadrilateral(&self, d: Diagonal) -> Result<[usize; 4]> {
        self.require(d)?;
        let (a, b) = d.endpoints();
        let p = (a + 1..b)
            .find(|&p| self.has_edge(a, p) && self.has_edge(p, b))
            .expect("every diagonal borders a triangle on its inner side");
        let q = (b + 1..self.m)
            .chain(0..a)
            .find(|&q| self.has_edge(b, q) && self.has_edge(q, a))
            .expect("every diagonal borders a triangle on its outer side");
        Ok([a, p, b, q])
    }

    /// Triangles `(x, y, z)` with `x < y < z`.
    fn triangles(&self) -> Vec<[usize; 3]> {
        let m = self.m;
        let mut out = Vec::with_capacity(m - 2);
        for x in 0..m {
            for y in x + 1..m {
                if !self.has_edge(x, y) {
                    continue;
                }
                for z in y + 1..m {
                    if self.has_edge(y, z) && self.has_edge(x, z) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    /// Arrows between diagonals, as `(source, target)` pairs.
    fn arrow_pairs(&self) -> Vec<(Diagonal, Diagonal)> {
        let mut out = Vec::new();
        for [x, y, z] in self.triangles() {
            let e = [
                Diagonal::new(x, y),
                Diagonal::new(y, z),
                Diagonal::new(z, x),
            ];
            for i in 0..3 {
                let (src, dst) = (e[(i + 1) % 3], e[i]);
                if self.contains(src) && self.contains(dst) {
                    out.push((src, dst));
                }
            }
        }
        out
    }

    /// Exchange matrix over an arbitrary ordering of this triangulation's diagonals.
    pub fn exchange_matrix_in(&self, basis: &[Diagonal]) -> Result<ExchangeMatrix> {
        let n = self.diagonals.len();
        let mut sorted = basis.to_vec();
        sorted.sort();
        if sorted != self.diagonals {
            return Err(Error::LabelMismatch(format!(
                "basis is not an ordering of the {n} diagonals"
            )));
        }
        let index: HashMap<Diagonal, usize> =
            basis.iter().enumerate().map(|(i, d)| (*d, i)).collect();
        let mut b = IntMatrix::zeros(n, n);
        for (s, t) in self.arrow_pairs() {
            let (i, j) = (index[&s], index[&t]);
            b[(i, j)] += 1;
            b[(j, i)] -= 1;
        }
        ExchangeMatrix::new(b, basis.iter().map(|d| d.label()).collect())
    }

    /// Exchange matrix in canonical order.
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        self.exchange_matrix_in(&self.diagonals)
            .expect("canonical basis is always valid")
    }
}

/// Quiver of a triangulation: one vertex per diagonal, one arrow per pair of
/// diagonals that are consecutive sides of a triangle.
pub fn quiver_of(tri: &Triangulation) -> Quiver {
    let arrows = tri
        .arrow_pairs()
        .into_iter()
        .map(|(s, t)| Arrow {
            source: s.label(),
            target: t.label(),
            multiplicity: BigInt::one(),
        })
        .collect();
    Quiver::new(tri.labels(), arrows).expect("triangulation quivers have no loops or 2-cycles")
}

pub fn flip(tri: &Triangulation, d: Diagonal) -> Result<(Triangulation, FlipMove)> {
    let [_, p, _, q] = tri.quadrilateral(d)?;
    let inserted = Diagonal::new(p, q);
    let mut diagonals: Vec<Diagonal> = tri
        .diagonals
        .iter()
        .map(|&e| if e == d { inserted } else { e })
        .collect();
    diagonals.sort();
    let next = Triangulation {
        m: tri.m,
        diagonals,
    };
    Ok((
        next,
        FlipMove {
            removed: d,
            inserted,
        },
    ))
}

/// Middle terms of the two exchange triangles of `d`, as multiplicity
/// vectors over `tri`'s canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleTerms {
    /// Sides `{a,p}` and `{b,q}` that are diagonals: the middle term of the
    /// triangle ending in `d`.
    pub b_m: Vec<BigInt>,
    /// Sides `{p,b}` and `{q,a}` that are diagonals: the middle term of the
    /// triangle ending in the flipped diagonal.
    pub b_mstar: Vec<BigInt>,
}

pub fn exchange_middle_terms(tri: &Triangulation, d: Diagonal) -> Result<MiddleTerms> {
    let [a, p, b, q] = tri.quadrilateral(d)?;
    let indicator = |sides: [(usize, usize); 2]| {
        let mut v = vec![BigInt::zero(); tri.diagonals.len()];
        for (x, y) in sides {
            if let Some(i) = tri.position(Diagonal::new(x, y)) {
                v[i] += 1;
            }
        }
        v
    };
    Ok(MiddleTerms {
        b_m: indicator([(a, p), (b, q)]),
        b_mstar: indicator([(p, b), (q, a)]),
    })
}

/// `[B_M*] - [B_M]`, the relation contributed by the exchange pair at `d`.
pub fn exchange_relation(tri: &Triangulation, d: Diagonal) -> Result<Vec<BigInt>> {
    let MiddleTerms { b_m, b_mstar } = exchange_middle_terms(tri, d)?;
    Ok(b_mstar.into_iter().zip(b_m).map(|(x, y)| x - y).collect())
}

/// Approximation triangles of `tri`'s diagonals with respect to the flip at `d`.
///
/// The new basis keeps `tri`'s order with the flipped diagonal in the slot of
/// `d`. Unchanged diagonals have the trivial triangle; `d` has
/// `Σ⁻¹d → d* → B_d → d`.
pub fn single_flip_triangles(tri: &Triangulation, d: Diagonal) -> Result<ApproxTriangleData> {
    let k = tri.require(d)?;
    let (_, mv) = flip(tri, d)?;
    let middle = exchange_middle_terms(tri, d)?;
    let old_labels = tri.labels();
    let mut new_labels = old_labels.clone();
    new_labels[k] = mv.inserted.label();
    let mut data = ApproxTriangleData::trivial(new_labels, old_labels)?;
    let mut beta = vec![BigInt::zero(); tri.diagonals.len()];
    beta[k] = BigInt::one();
    data.set_triangle(k, &middle.b_m, &beta)?;
    Ok(data)
}

/// Shortest flip sequence from `from` to `to` with the default search cap.
pub fn flip_path(from: &Triangulation, to: &Triangulation) -> Result<Vec<FlipMove>> {
    flip_path_with_limit(from, to, DEFAULT_BFS_LIMIT)
}

/// Breadth-first search over the flip graph. Neighbours are expanded in
/// canonical diagonal order, so the returned path is deterministic.
pub fn flip_path_with_limit(
    from: &Triangulation,
    to: &Triangulation,
    limit: usize,
) -> Result<Vec<FlipMove>> {
    if from.m != to.m {
        return Err(Error::PolygonMismatch(from.m, to.m));
    }
    let mut parent: HashMap<Triangulation, Option<(Triangulation, FlipMove)>> = HashMap::new();
    let mut queue = VecDeque::new();
    parent.insert(from.clone(), None);
    queue.push_back(from.clone());
    while let Some(cur) = queue.pop_front() {
        if cur == *to {
            let mut path = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, mv))) = parent.get(&node).cloned() {
                path.push(mv);
                node = prev;
            }
            path.reverse();
            return Ok(path);
        }
        for &d in &cur.diagonals {
            let (next, mv) = flip(&cur, d)?;
            if parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= limit {
                return Err(Error::SearchLimit(limit));
            }
            parent.insert(next.clone(), Some((cur.clone(), mv)));
            queue.push_back(next);
        }
    }
    unreachable!("the flip graph of a polygon is connected")
}

/// Product of single-exchange `T` matrices along the shortest flip path.
pub fn composed_t(from: &Triangulation, to: &Triangulation) -> Result<TMatrix> {
    let path = flip_path(from, to)?;
    composed_t_along(from, &path)
}

/// Product of single-exchange `T` matrices along `moves`, starting at `from`.
///
/// Each exchanged diagonal keeps the slot of the one it replaces; the result
/// is finally reordered so that both bases are canonical. Rows are labelled by
/// the end triangulation and columns by `from`.
pub fn composed_t_along(from: &Triangulation, moves: &[FlipMove]) -> Result<TMatrix> {
    let mut current = from.clone();
    let mut slots = from.diagonals.clone();
    let mut total = TMatrix::identity(from.labels());
    for mv in moves {
        let k = slots
            .iter()
            .position(|&d| d == mv.removed)
            .ok_or(Error::NotADiagonal(mv.removed.endpoints()))?;
        let (next, actual) = flip(&current, mv.removed)?;
        if actual.inserted != mv.inserted {
            return Err(Error::NotADiagonal(mv.inserted.endpoints()));
        }
        let b = current.exchange_matrix_in(&slots)?;
        let mut step = single_step_t(&b, k)?;
        step.new_labels[k] = mv.inserted.label();
        total = step.compose(&total)?;
        slots[k] = mv.inserted;
        current = next;
    }

    let n = slots.len();
    let mut perm = IntMatrix::zeros(n, n);
    for (row, d) in current.diagonals.iter().enumerate() {
        let col = slots
            .iter()
            .position(|s| s == d)
            .expect("slots hold the end diagonals");
        perm[(row, col)] = BigInt::one();
    }
    let slot_labels = slots.iter().map(|d| d.label()).collect();
    let reorder = TMatrix::new(perm, current.labels(), slot_labels)?;
    reorder.compose(&total)
}

/// Every triangulation of the `m`-gon, in canonical order.
pub fn enumerate(m: usize) -> Result<Vec<Triangulation>> {
    if m < 4 {
        return Err(Error::PolygonTooSmall(m));
    }
    let mut memo = HashMap::new();
    let mut all: Vec<Triangulation> = sub_triangulations(0, m - 1, &mut memo)
        .into_iter()
        .map(|mut diagonals| {
            diagonals.sort();
            Triangulation { m, diagonals }
        })
        .collect();
    all.sort_by(|x, y| x.diagonals.cmp(&y.diagonals));
    Ok(all)
}

/// Diagonal sets triangulating the sub-polygon `i, i+1, ..., j` (chord `{i,j}` excluded).
fn sub_triangulations(
    i: usize,
    j: usize,
    memo: &mut HashMap<(usize, usize), Vec<Vec<Diagonal>>>,
) -> Vec<Vec<Diagonal>> {
    if j - i < 2 {
        return vec![Vec::new()];
    }
    if let Some(hit) = memo.get(&(i, j)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for apex in i + 1..j {
        let left = sub_triangulations(i, apex, memo);
        let right = sub_triangulations(apex, j, memo);
        for l in &left {
            for r in &right {
                let mut ds = l.clone();
                ds.extend(r);
                if apex - i >= 2 {
                    ds.push(Diagonal::new(i, apex));
                }
                if j - apex >= 2 {
                    ds.push(Diagonal::new(apex, j));
                }
                out.push(ds);
            }
        }
    }
    memo.insert((i, j), out.clone());
    out
}

/// Grothendieck group of the type-A cluster category modelled by the `m`-gon,
/// computed as the cokernel of the fan triangulation's exchange matrix.
pub fn k0_of_type_a(m: usize) -> Result<AbelianGroupDescriptor> {
    let fan = Triangulation::fan(m)?;
    Ok(cokernel(fan.exchange_matrix().matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(m: usize, ds: &[(usize, usize)]) -> Triangulation {
        validate(m, ds.iter().copied()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().copied().map(BigInt::from).collect()
    }

    fn d(a: usize, b: usize) -> Diagonal {
        Diagonal::new(a, b)
    }

    #[test]
    fn validation() {
        assert_eq!(tri(4, &[(0, 2)]).diagonals(), [d(0, 2)]);
        assert_eq!(
            tri(6, &[(0, 2), (0, 3), (0, 4)]),
            Triangulation::fan(6).unwrap()
        );
        assert_eq!(
            validate(6, [(0, 2), (1, 3), (0, 4)]).unwrap_err(),
            Error::Crossing((0, 2), (1, 3))
        );
        assert_eq!(
            validate(6, [(0, 2), (0, 3)]).unwrap_err(),
            Error::WrongCount {
                m: 6,
                expected: 3,
                found: 2
            }
        );
        assert_eq!(
            validate(5, [(0, 1), (0, 2)]).unwrap_err(),
            Error::BoundaryEdge((0, 1), 5)
        );
        assert_eq!(
            validate(5, [(4, 0), (0, 2)]).unwrap_err(),
            Error::BoundaryEdge((4, 0), 5)
        );
        assert_eq!(
            validate(5, [(0, 7), (0, 2)]).unwrap_err(),
            Error::BoundaryEdge((0, 7), 5)
        );
        assert_eq!(
            validate(5, [(0, 2), (2, 0)]).unwrap_err(),
            Error::DuplicateDiagonal((0, 2))
        );
        assert_eq!(validate(3, []).unwrap_err(), Error::PolygonTooSmall(3));
    }

    #[test]
    fn crossing_is_strict() {
        assert!(d(0, 2).crosses(d(1, 3)));
        assert!(d(1, 3).crosses(d(0, 2)));
        assert!(!d(0, 2).crosses(d(0, 3)));
        assert!(!d(0, 2).crosses(d(2, 4)));
        assert!(!d(0, 4).crosses(d(1, 3)));
    }

    #[test]
    fn quivers() {
        let q = quiver_of(&tri(4, &[(0, 2)]));
        assert_eq!(q.vertices().len(), 1);
        assert!(q.arrows().is_empty());

        let q = quiver_of(&tri(5, &[(0, 2), (0, 3)]));
        assert_eq!(q.arrows().len(), 1);
        assert_eq!(q.arrow_count("0-2", "0-3"), BigInt::one());

        let fan = Triangulation::fan(6).unwrap();
        let b = fan.exchange_matrix();
        let a3 = IntMatrix::from_rows(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
        assert_eq!(*b.matrix(), a3);
        assert_eq!(b.labels(), ["0-2", "0-3", "0-4"]);
    }

    #[test]
    fn internal_triangle_gives_three_cycle() {
        let t = tri(6, &[(0, 2), (2, 4), (0, 4)]);
        let q = quiver_of(&t);
        assert_eq!(q.arrows().len(), 3);
        // 0-2 -> 0-4 -> 2-4 -> 0-2
        assert_eq!(q.arrow_count("0-2", "0-4"), BigInt::one());
        assert_eq!(q.arrow_count("0-4", "2-4"), BigInt::one());
        assert_eq!(q.arrow_count("2-4", "0-2"), BigInt::one());
    }

    #[test]
    fn flips() {
        let (t, mv) = flip(&tri(4, &[(0, 2)]), d(0, 2)).unwrap();
        assert_eq!(t, tri(4, &[(1, 3)]));
        assert_eq!(
            mv,
            FlipMove {
                removed: d(0, 2),
                inserted: d(1, 3)
            }
        );

        let fan = Triangulation::fan(6).unwrap();
        let (t, mv) = flip(&fan, d(0, 3)).unwrap();
        assert_eq!(t, tri(6, &[(0, 2), (2, 4), (0, 4)]));
        assert_eq!(mv.inserted, d(2, 4));
        let (back, _) = flip(&t, mv.inserted).unwrap();
        assert_eq!(back, fan);

        assert_eq!(
            flip(&fan, d(1, 3)).unwrap_err(),
            Error::NotADiagonal((1, 3))
        );
    }

    #[test]
    fn middle_terms_and_relations() {
        let t4 = tri(4, &[(0, 2)]);
        let mt = exchange_middle_terms(&t4, d(0, 2)).unwrap();
        assert_eq!((mt.b_m, mt.b_mstar), (ints(&[0]), ints(&[0])));
        assert_eq!(exchange_relation(&t4, d(0, 2)).unwrap(), ints(&[0]));

        let t5 = tri(5, &[(0, 2), (0, 3)]);
        let mt = exchange_middle_terms(&t5, d(0, 3)).unwrap();
        assert_eq!((mt.b_m, mt.b_mstar), (ints(&[1, 0]), ints(&[0, 0])));

        let fan = Triangulation::fan(6).unwrap();
        let mt = exchange_middle_terms(&fan, d(0, 3)).unwrap();
        assert_eq!((mt.b_m, mt.b_mstar), (ints(&[1, 0, 0]), ints(&[0, 0, 1])));
        let rel = exchange_relation(&fan, d(0, 3)).unwrap();
        assert_eq!(rel, ints(&[-1, 0, 1]));
        assert_eq!(rel, fan.exchange_matrix().matrix().row(1));

        assert!(exchange_middle_terms(&fan, d(1, 4)).is_err());
    }

    #[test]
    fn single_flip_triangles_reproduce_single_step_t() {
        let fan = Triangulation::fan(6).unwrap();
        let data = single_flip_triangles(&fan, d(0, 3)).unwrap();
        assert_eq!(data.new_labels(), ["0-2", "2-4", "0-4"]);
        let t = crate::genmut::t_from_triangles(&data).unwrap();
        let expected = single_step_t(&fan.exchange_matrix(), 1).unwrap();
        assert_eq!(t.t, expected.t);
    }

    #[test]
    fn paths() {
        let fan = Triangulation::fan(6).unwrap();
        assert!(flip_path(&fan, &fan).unwrap().is_empty());
        let p = flip_path(&tri(4, &[(0, 2)]), &tri(4, &[(1, 3)])).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(
            flip_path(&fan, &Triangulation::fan(7).unwrap()).unwrap_err(),
            Error::PolygonMismatch(6, 7)
        );
        let far = tri(6, &[(1, 3), (3, 5), (1, 5)]);
        assert_eq!(
            flip_path_with_limit(&fan, &far, 2).unwrap_err(),
            Error::SearchLimit(2)
        );
    }

    #[test]
    fn composed_t_basics() {
        let fan = Triangulation::fan(6).unwrap();
        assert!(composed_t(&fan, &fan).unwrap().t.is_identity());

        let (next, _) = flip(&fan, d(0, 3)).unwrap();
        let t = composed_t(&fan, &next).unwrap();
        let step = single_step_t(&fan.exchange_matrix(), 1).unwrap();
        // canonical order of `next` is 0-2, 0-4, 2-4; the slot of 0-3 is 1
        let rows = [0, 2, 1];
        for (r, &slot) in rows.iter().enumerate() {
            assert_eq!(t.t.row(r), step.t.row(slot));
        }
        assert_eq!(t.new_labels, next.labels());
        assert_eq!(t.old_labels, fan.labels());
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        let counts: Vec<usize> = (4..=9).map(|m| enumerate(m).unwrap().len()).collect();
        assert_eq!(counts, [2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn k0_small_polygons() {
        assert_eq!(k0_of_type_a(4).unwrap().to_string(), "Z");
        assert_eq!(k0_of_type_a(5).unwrap().to_string(), "0");
        assert_eq!(k0_of_type_a(6).unwrap().to_string(), "Z");
        assert_eq!(k0_of_type_a(7).unwrap().to_string(), "0");
        assert_eq!(k0_of_type_a(3).unwrap_err(), Error::PolygonTooSmall(3));
    }

    #[test]
    fn json_form() {
        let t: Triangulation =
            serde_json::from_str(r#"{"m": 6, "diagonals": [[0,4],[3,0],[0,2]]}"#).unwrap();
        assert_eq!(t, Triangulation::fan(6).unwrap());
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"m":6,"diagonals":[[0,2],[0,3],[0,4]]}"#
        );
        assert!(serde_json::from_str::<Triangulation>(
            r#"{"m":6,"diagonals":[[0,2],[1,3],[0,4]]}"#
        )
        .is_err());
    }
}
