//! Exact integer linear algebra.

mod matrix;
mod snf;

pub use matrix::IntMatrix;
pub(crate) use matrix::MatrixRepr;
pub use snf::{cokernel, snf, unimodular_inverse, AbelianGroupDescriptor, SnfResult};
