//! Weighted Moebius inversion in the ring of symmetric functions.
//!
//! For weights with `w_1 = 1` and `w_k(q) * w_l(q^k) = w_{kl}(q)` the maps
//!
//! ```text
//! A = sum_k w_k p_k o B        and        B = sum_k mu_k w_k p_k o A
//! ```
//!
//! are mutually inverse. Plain inversion uses `w_k = 1`, the logarithmic
//! variant `w_k = 1/k`, and the q-analogue `w_k = (q^k - q^-k) / (k (q - q^-1))`.

use super::{Coeff, SymFunc};
use crate::arith::mobius;
use crate::rings::{sl2_irreducible_char, LaurentPoly, Rational};
use crate::{Error, Result};

fn check_no_constant<C: Coeff>(f: &SymFunc<C>) -> Result<()> {
    if f.constant_term().is_zero() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "Moebius inversion needs a series without constant term".into(),
        ))
    }
}

/// `sum_{k=1}^N w_k p_k o b`.
pub fn weighted_forward<C: Coeff>(b: &SymFunc<C>, weight: impl Fn(usize) -> C) -> Result<SymFunc<C>> {
    check_no_constant(b)?;
    let n = b.truncation();
    let mut out = SymFunc::zero(n);
    for k in 1..=n {
        out = &out + &b.adams(k).scale(&weight(k));
    }
    Ok(out)
}

/// `sum_{k=1}^N mu_k w_k p_k o a`, the inverse of [`weighted_forward`].
pub fn weighted_inverse<C: Coeff>(a: &SymFunc<C>, weight: impl Fn(usize) -> C) -> Result<SymFunc<C>> {
    check_no_constant(a)?;
    let n = a.truncation();
    let mut out = SymFunc::zero(n);
    for k in 1..=n {
        let mu = mobius(k);
        if mu == 0 {
            continue;
        }
        let w = weight(k).scale(&Rational::from_integer(mu.into()));
        out = &out + &a.adams(k).scale(&w);
    }
    Ok(out)
}

/// `A = sum_k p_k o B`.
pub fn moebius_forward<C: Coeff>(b: &SymFunc<C>) -> Result<SymFunc<C>> {
    weighted_forward(b, |_| C::one())
}

/// `B = sum_k mu_k p_k o A`.
pub fn moebius_invert<C: Coeff>(a: &SymFunc<C>) -> Result<SymFunc<C>> {
    weighted_inverse(a, |_| C::one())
}

/// `(q^k - q^-k) / (k (q - q^-1))`
pub fn q_moebius_weight(k: usize) -> LaurentPoly {
    sl2_irreducible_char(k)
        .expect("k >= 1")
        .scale(&Rational::new(1.into(), k.into()))
}

pub fn q_moebius_forward(b: &SymFunc<LaurentPoly>) -> Result<SymFunc<LaurentPoly>> {
    weighted_forward(b, q_moebius_weight)
}

pub fn q_moebius_invert(a: &SymFunc<LaurentPoly>) -> Result<SymFunc<LaurentPoly>> {
    weighted_inverse(a, q_moebius_weight)
}
