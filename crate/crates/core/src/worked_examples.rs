//! Two fully worked instances of the generalized mutation rule, kept as
//! regression fixtures.
//!
//! * `a4`: the cluster category of the linear `A4` quiver, with four
//!   approximation triangles relating two cluster-tilting objects.
//! * `double_arrows`: the cluster category of the quiver with two double
//!   arrows `0 ⇉ 1` and `0 ⇉ 2`; the triangles express the new object through
//!   the old one, so `T` is used in the reverse direction.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exchange::{Arrow, ExchangeMatrix, Quiver};
use crate::genmut::{
    first_difference, generalized_mutate, is_unimodular, t_from_triangles, ApproxTriangleData,
};
use crate::intlinalg::{cokernel, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct A4Example {
    pub b_old: ExchangeMatrix,
    pub b_new: ExchangeMatrix,
    pub triangles: ApproxTriangleData,
    pub expected_t: IntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleArrowExample {
    pub b_old: ExchangeMatrix,
    /// Triangles of the new objects with respect to the old ones.
    pub resolutions: ApproxTriangleData,
    pub expected_t: IntMatrix,
    pub expected_quiver: Quiver,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkedExamples {
    pub a4: A4Example,
    pub double_arrows: DoubleArrowExample,
}

fn names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn matrix(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).expect("fixture shape")
}

fn column(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().copied().map(BigInt::from).collect()
}

impl A4Example {
    pub fn new() -> Self {
        let old = names("M", 1..=4);
        let new = names("M'", 1..=4);
        let b_old = ExchangeMatrix::new(
            matrix(&[
                &[0, 1, 0, 0],
                &[-1, 0, -1, 1],
                &[0, 1, 0, -1],
                &[0, -1, 1, 0],
            ]),
            old.clone(),
        )
        .expect("fixture is skew-symmetric");
        let b_new = ExchangeMatrix::new(
            matrix(&[
                &[0, -1, 1, 0],
                &[1, 0, -1, 0],
                &[-1, 1, 0, -1],
                &[0, 0, 1, 0],
            ]),
            new.clone(),
        )
        .expect("fixture is skew-symmetric");

        let mut triangles = ApproxTriangleData::trivial(new, old).expect("fixture shape");
        let zero = column(&[0, 0, 0, 0]);
        // Σ⁻¹M1 → 0 → M'1 → M1
        triangles
            .set_triangle(0, &column(&[1, 0, 0, 0]), &zero)
            .unwrap();
        // Σ⁻¹M2 → M'2 → M'1 → M2
        triangles
            .set_triangle(1, &column(&[1, 0, 0, 0]), &column(&[0, 1, 0, 0]))
            .unwrap();
        // Σ⁻¹M3 → M'4 → 0 → M3
        triangles
            .set_triangle(2, &zero, &column(&[0, 0, 0, 1]))
            .unwrap();
        // Σ⁻¹M4 → M'4 → M'3 → M4
        triangles
            .set_triangle(3, &column(&[0, 0, 1, 0]), &column(&[0, 0, 0, 1]))
            .unwrap();

        Self {
            b_old,
            b_new,
            triangles,
            expected_t: matrix(&[
                &[1, 1, 0, 0],
                &[0, -1, 0, 0],
                &[0, 0, 0, 1],
                &[0, 0, -1, -1],
            ]),
        }
    }
}

impl Default for A4Example {
    fn default() -> Self {
        Self::new()
    }
}

impl DoubleArrowExample {
    pub fn new() -> Self {
        let old = names("M", 0..=2);
        let new = names("M'", 0..=2);
        let b_old =
            ExchangeMatrix::new(matrix(&[&[0, 2, 2], &[-2, 0, 0], &[-2, 0, 0]]), old.clone())
                .expect("fixture is skew-symmetric");

        // Rows are the old objects M0, M1, M2; columns the new ones.
        let mut resolutions = ApproxTriangleData::trivial(old, new.clone()).expect("fixture shape");
        // 0 → 3M0 → 2M1 → M'0 → 0
        resolutions
            .set_triangle(0, &column(&[0, 2, 0]), &column(&[3, 0, 0]))
            .unwrap();
        // 0 → 2M0 → M1 → M'1 → 0
        resolutions
            .set_triangle(1, &column(&[0, 1, 0]), &column(&[2, 0, 0]))
            .unwrap();
        // 0 → 8M0 → M2 ⊕ 4M1 → M'2 → 0
        resolutions
            .set_triangle(2, &column(&[0, 4, 1]), &column(&[8, 0, 0]))
            .unwrap();

        let arrow = |s: &str, t: &str, m: i64| Arrow {
            source: s.into(),
            target: t.into(),
            multiplicity: m.into(),
        };
        let expected_quiver = Quiver::new(
            new,
            vec![
                arrow("M'1", "M'0", 6),
                arrow("M'0", "M'2", 2),
                arrow("M'2", "M'1", 4),
            ],
        )
        .expect("fixture quiver is valid");

        Self {
            b_old,
            resolutions,
            expected_t: matrix(&[&[-3, -2, -8], &[2, 1, 4], &[0, 0, 1]]),
            expected_quiver,
        }
    }
}

impl Default for DoubleArrowExample {
    fn default() -> Self {
        Self::new()
    }
}

impl WorkedExamples {
    pub fn new() -> Self {
        Self {
            a4: A4Example::new(),
            double_arrows: DoubleArrowExample::new(),
        }
    }
}

impl Default for WorkedExamples {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Recorder(Vec<Check>);

impl Recorder {
    fn record(&mut self, name: &str, outcome: Result<Option<String>>) {
        let detail = match outcome {
            Ok(detail) => detail,
            Err(e) => Some(format!("error: {e}")),
        };
        self.0.push(Check {
            name: name.to_string(),
            passed: detail.is_none(),
            detail,
        });
    }

    fn matrices(&mut self, name: &str, expected: &IntMatrix, actual: Result<IntMatrix>) {
        self.record(
            name,
            actual.map(|actual| {
                first_difference(expected, &actual).map(|d| {
                    format!(
                        "entry ({}, {}): expected {}, got {}",
                        d.row, d.col, d.expected, d.actual
                    )
                })
            }),
        );
    }

    fn holds(&mut self, name: &str, ok: Result<bool>, why: &str) {
        self.record(name, ok.map(|ok| (!ok).then(|| why.to_string())));
    }
}

/// Runs both worked examples end to end, one check per assertion.
pub fn verify(ex: &WorkedExamples) -> Report {
    let mut r = Recorder(Vec::new());

    let a4 = &ex.a4;
    let t = t_from_triangles(&a4.triangles);
    r.matrices(
        "a4: T from approximation triangles",
        &a4.expected_t,
        t.clone().map(|t| t.t),
    );
    r.holds(
        "a4: T is unimodular",
        t.clone().map(|t| is_unimodular(&t.t)),
        "det T is not ±1",
    );
    r.matrices(
        "a4: T B_M T^t = B_M'",
        a4.b_new.matrix(),
        t.clone()
            .and_then(|t| generalized_mutate(&a4.b_old, &t))
            .map(|b| b.matrix().clone()),
    );
    r.matrices(
        "a4: T^-1 B_M' T^-t = B_M",
        a4.b_old.matrix(),
        t.and_then(|t| t.inverse())
            .and_then(|inv| generalized_mutate(&a4.b_new, &inv))
            .map(|b| b.matrix().clone()),
    );
    r.holds(
        "a4: Z^4 / Im B_M is trivial",
        Ok(cokernel(a4.b_old.matrix()).is_trivial()),
        "cokernel of B_M is not trivial",
    );

    let da = &ex.double_arrows;
    let t = t_from_triangles(&da.resolutions);
    r.matrices(
        "double arrows: T from resolutions",
        &da.expected_t,
        t.clone().map(|t| t.t),
    );
    r.holds(
        "double arrows: T is unimodular",
        t.clone().map(|t| is_unimodular(&t.t)),
        "det T is not ±1",
    );
    let b_new = t
        .clone()
        .and_then(|t| t.inverse())
        .and_then(|inv| generalized_mutate(&da.b_old, &inv));
    r.matrices(
        "double arrows: exchange matrix of the new quiver",
        da.expected_quiver.exchange_matrix().matrix(),
        b_new.clone().map(|b| b.matrix().clone()),
    );
    r.record(
        "double arrows: quiver with arrows of multiplicity 6, 2, 4",
        b_new.clone().map(|b| {
            let q = b.to_quiver();
            (q != da.expected_quiver).then(|| {
                format!(
                    "got arrows {:?}",
                    q.arrows()
                        .iter()
                        .map(|a| format!("{}->{} ({})", a.source, a.target, a.multiplicity))
                        .collect::<Vec<_>>()
                )
            })
        }),
    );
    r.matrices(
        "double arrows: T B_M' T^t = B_M",
        da.b_old.matrix(),
        b_new
            .and_then(|b| t.and_then(|t| generalized_mutate(&b, &t)))
            .map(|b| b.matrix().clone()),
    );

    Report { checks: r.0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_examples_pass() {
        let report = verify(&WorkedExamples::new());
        for c in &report.checks {
            assert!(c.passed, "{}: {:?}", c.name, c.detail);
        }
        assert_eq!(report.checks.len(), 10);
    }

    #[test]
    fn perturbed_fixture_is_located() {
        let mut ex = WorkedExamples::new();
        let mut b = ex.a4.b_new.matrix().clone();
        b[(3, 2)] += 1;
        b[(2, 3)] -= 1;
        ex.a4.b_new = ExchangeMatrix::new(b, ex.a4.b_new.labels().to_vec()).unwrap();
        let report = verify(&ex);
        assert!(!report.all_passed());
        let failed: Vec<&Check> = report.checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(failed[0].name, "a4: T B_M T^t = B_M'");
        assert_eq!(
            failed[0].detail.as_deref(),
            Some("entry (2, 3): expected -2, got -1")
        );
    }

    #[test]
    fn fixtures_round_trip_through_json() {
        let ex = WorkedExamples::new();
        let text = serde_json::to_string(&ex).unwrap();
        assert_eq!(serde_json::from_str::<WorkedExamples>(&text).unwrap(), ex);
    }
}
