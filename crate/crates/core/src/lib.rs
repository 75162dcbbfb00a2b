//! Exact computer algebra for the brace, pre-Lie, dendriform and Zinbiel
//! operads, the free dendriform bialgebra on planar binary trees, and the
//! enveloping dendriform algebra of a brace algebra.

mod error;

pub mod bialgebra;
pub mod cli;
pub mod dendriform;
pub mod envelope;
pub mod exactlin;
pub mod operads;
pub mod tensorside;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
