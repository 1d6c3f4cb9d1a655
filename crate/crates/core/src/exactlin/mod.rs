//! Exact rational scalars, vectors, dense matrices and structure-constant
//! tensors.
//!
//! Everything downstream is built on these types. Vectors are plain
//! `Vec<Rational>`; the helpers in [`vector`] cover the handful of
//! operations the rest of the crate needs.

mod matrix;
mod rational;
pub mod serde_q;
mod tensor;
pub mod vector;

pub use matrix::{kron, rank_kernel, solve_linear, RMatrix};
pub use rational::{format_rational, frac, int, parse_rational, Rational};
pub(crate) use tensor::tuples;
pub use tensor::Tensor;
