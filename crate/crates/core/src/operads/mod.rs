//! The brace (APE), pre-Lie and dendriform operads: tree compositions, the
//! symmetrization morphism, the brace relations, and ideals in `Dend`.

mod compose;
mod ideal;

pub use compose::{
    brace_relation_defect, brace_relation_terms, compose_ape, compose_ape_terms, compose_prelie, compose_prelie_terms,
    compositions, corolla, phi, planar_embeddings, weakly_increasing, PlanarOp, PreLieOp,
};
pub use ideal::{
    brace_generators, ideal_closure, multilinear_arity, prelie_generators, quotient_dims, ClosureMode, IdealClosure,
    MultilinearDendSpace,
};
