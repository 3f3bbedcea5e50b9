//! Exact-arithmetic workbench for quiver mutation.
//!
//! * [`intlinalg`]: integer matrices, Smith normal form, cokernels.
//! * [`exchange`]: exchange matrices, quivers, Fomin–Zelevinsky mutation.
//! * [`genmut`]: change-of-basis matrices from approximation triangles and
//!   the generalized mutation rule `B' = T B T^t`.
//! * [`typea`]: polygon triangulations as a combinatorial model of the type-A
//!   cluster category.
//! * [`worked_examples`]: regression fixtures for the generalized rule.

pub mod error;
pub mod exchange;
pub mod genmut;
pub mod intlinalg;
pub mod json;
pub mod typea;
pub mod worked_examples;

pub use error::{Error, Result};
pub use exchange::{Arrow, ExchangeMatrix, Quiver};
pub use genmut::{
    fz_consistency_check, generalized_mutate, s_from_t, single_step_t, t_from_triangles,
    ApproxTriangleData, ConsistencyReport, TMatrix,
};
pub use intlinalg::{
    cokernel, snf, unimodular_inverse, AbelianGroupDescriptor, IntMatrix, SnfResult,
};
pub use num_bigint::BigInt;
pub use typea::{Diagonal, FlipMove, Triangulation};
