//! Exact coefficient rings: rationals and Laurent polynomials in `q`.

mod laurent;
mod rational;

pub use laurent::{sl2_irreducible_char, LaurentPoly};
pub use rational::{integer, parse_rational, ratio, rational_to_string, Rational};
