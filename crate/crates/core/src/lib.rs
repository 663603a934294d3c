//! Exact arithmetic for n-ary algebras built from chains of tensor products
//! with alternating duals: tensors and their compositions, associativity laws
//! twisted by permutations, current algebras, and the operad of
//! τ₁₃-totally associative ternary algebras.
//!
//! All scalars are exact rationals. Indices are 1-based throughout.

pub mod current;
pub mod error;
pub mod json;
pub mod laws;
pub mod linalg;
pub mod operad;
pub mod perm;
pub mod product;
pub mod random;
pub mod rational;
pub mod table;
pub mod tensor;

pub use error::{Error, Result};
pub use laws::{Law, LawKind, LawReport};
pub use perm::Permutation;
pub use product::{mu_chain, Orientation, ProductSpec};
pub use rational::Rational;
pub use table::NAryTable;
pub use tensor::{MultiVector, Tensor};
