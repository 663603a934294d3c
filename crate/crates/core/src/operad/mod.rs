//! The free ternary operad in arities 3, 5 and 7, the ideal generated by the
//! τ₁₃-total associativity relations, and the signed pairing with the
//! degree-one partial operad.

mod ideal;
mod tree;
mod vector;

pub use ideal::{
    annihilator, dual_matches_partial_closure, ideal_component, pairing, partial_relation, quotient_dim,
    relation_vectors, sigma_action, sigma_closure, RelationSpace,
};
pub use tree::{compose_terms, enumerate_shapes, free_dim, Tree, TreeShape, TreeTerm};
pub use vector::{FreeComponent, OperadVector};
