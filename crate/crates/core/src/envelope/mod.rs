//! The enveloping dendriform algebra `Ũ(B)` of a finite-dimensional brace
//! algebra, truncated by weight, with its induced coproduct and primitives.

mod quotient;
mod structure;
mod theta;
mod words;

pub use quotient::{
    build_envelope, envelope_coproduct, envelope_primitives, relation_generators, top_weight, weighted_trees,
    EnvelopePrimitives, TruncatedQuotient,
};
pub use structure::{harvest, validate_brace, BraceDefect, BraceStructure, BraceVec, Harvest};
pub use theta::{roundtrip_with, theta, theta_roundtrip, ThetaReport};
pub use words::{check_word_identification, word_class, WordCheck};
