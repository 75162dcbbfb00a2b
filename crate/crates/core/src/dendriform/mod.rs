//! The free unital dendriform algebra on planar binary trees: products,
//! combs, brace operations through ψ, ideal closure and reversed shuffles.

mod element;
mod expr;
pub mod free;
mod pli;
mod psi;

pub use element::{downcomb, upcomb, DendElement};
pub use expr::{parse_expr, parse_expr_tilde};
pub use free::Tilde;
pub use pli::{pli, s_closure, PliSet};
pub use psi::{
    corolla_tilde, psi_brace_defect, psi_eval, psi_eval_tilde, psi_multilinear, psi_tree_with, psi_with, SignConvention,
};
