//! Truncated symmetric functions in the power-sum basis.
//!
//! A [`SymFunc`] is a finite sum of monomials `p_1^{n_1} ... p_k^{n_k}`
//! (indexed by an [`ExponentVector`]) with coefficients that are either
//! rationals or Laurent polynomials in `q`. Each value carries an explicit
//! truncation degree; operations never look past it.

mod coeff;
mod exponent;
mod json;
mod moebius;
mod plethysm;
mod series;

pub use coeff::{Coeff, CoeffKind};
pub use exponent::{CycleType, ExponentVector};
pub use moebius::{
    moebius_forward, moebius_invert, q_moebius_forward, q_moebius_invert, q_moebius_weight,
    weighted_forward, weighted_inverse,
};
pub use series::{h_series, SymFunc};
