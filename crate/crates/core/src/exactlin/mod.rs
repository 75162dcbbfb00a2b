//! Exact rational scalars, formal linear combinations, and dense row
//! reduction.

mod lincomb;
mod matrix;
mod rational;
mod span;

pub use lincomb::{format_sum, LinComb};
pub use matrix::{kernel_basis, rank, rowreduce, span_contains, span_rank, Echelon, RatMatrix};
pub use rational::Rational;
pub use span::DenseSpan;
