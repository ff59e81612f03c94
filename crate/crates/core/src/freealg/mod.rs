//! Brute-force model of the multilinear components of the free algebra with
//! two compatible brackets.
//!
//! Arity `n` is the span of canonical bracket monomials on `a1..an` modulo
//! the instances of the two Jacobi identities and the six-term relation. The
//! quotient is computed by exact elimination in each bidegree and characters
//! are read off as traces.

mod cache;
mod quotient;
mod tree;

pub use cache::{load_or_build, load_or_build_in, CACHE_ENV};
pub use quotient::{
    build_quotient, character_on, class_values, enumerate_monomials, full_character, relation_instance,
    relation_vectors, Block, MonomialVector, QuotientModel, RelationKind, MAX_ARITY,
};
pub use tree::TreeMonomial;
