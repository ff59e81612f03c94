//! Per-class product formulas for the `P2` and `Lie2` characters.
//!
//! Both formulas are evaluated in two readings. [`FormulaForm::Printed`]
//! follows the displays literally. [`FormulaForm::Calibrated`] is the reading
//! that agrees with the character series:
//!
//! * `P2`: the trailing fraction product runs over `s >= 1` instead of
//!   `s >= 2`; the `s = 1` factor `1 / (1 + n_1 q^-1)` removes the surplus
//!   factor the printed reading picks up on classes with fixed points.
//! * `Lie2`: the second product skips `s = k` (where the trailing sum is
//!   empty) and the leading term carries an extra `k^{n_k}`.
//!
//! The library's character series stay the reference; these evaluators only
//! cross-check them.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::HelperSeq;
use crate::arith::divisors;
use crate::rings::{LaurentPoly, Rational};
use crate::symfunc::CycleType;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaForm {
    Printed,
    Calibrated,
}

impl FormulaForm {
    pub fn name(self) -> &'static str {
        match self {
            FormulaForm::Printed => "printed",
            FormulaForm::Calibrated => "calibrated",
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `q^s - q^-s`
fn weight_gap(s: usize) -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(s as i64, 1), (-(s as i64), -1)])
}

/// `sum_{d in ds} n_d c_{s/d}(q^d)`
fn c_sum(rho: &CycleType, s: usize, ds: impl Iterator<Item = usize>, h: &HelperSeq) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for d in ds {
        let nd = rho.get(d);
        if nd > 0 {
            total += h.c(s / d).dilate(d as u32).scale(&int(nd as i64));
        }
    }
    total
}

fn ratio(numerator: LaurentPoly, denominator: LaurentPoly, rho: &CycleType) -> Result<LaurentPoly> {
    if denominator.is_zero() {
        return Err(Error::DivisionByZero(format!(
            "vanishing denominator on class {rho}"
        )));
    }
    numerator.exact_div(&denominator)
}

/// Value of the `P2(n)` character on the class `rho`.
pub fn mt_p2_value(rho: &CycleType, form: FormulaForm) -> Result<LaurentPoly> {
    let h = HelperSeq::up_to(rho.n());
    let top = rho.exponents().len();
    let mut numerator = LaurentPoly::one();
    let mut denominator = LaurentPoly::one();
    for s in 1..=top {
        let ns = rho.get(s) as i64;
        if ns == 0 {
            continue;
        }
        let si = s as i64;
        let ds = h.d(s);
        let t = c_sum(rho, s, divisors(s).into_iter().filter(|&d| d != s), &h);
        let full = &t + &LaurentPoly::from_int_terms(&[(si, ns)]);
        let base = (&full + ds).scale(&int(si));
        for m in 1..=ns {
            numerator = &numerator * &(&base - &weight_gap(s).scale(&int(si * m)));
        }
        let fraction_from = match form {
            FormulaForm::Printed => 2,
            FormulaForm::Calibrated => 1,
        };
        if s >= fraction_from {
            numerator = &numerator * &(&t + ds);
            denominator =
                &denominator * &(&(&t + ds) + &LaurentPoly::from_int_terms(&[(-si, ns)]));
        }
    }
    ratio(numerator, denominator, rho)
}

/// Value of the `Lie2(n)` character on the class `rho`.
pub fn mt_lie2_value(rho: &CycleType, form: FormulaForm) -> Result<LaurentPoly> {
    let h = HelperSeq::up_to(rho.n());
    let k = rho.shortest();
    let top = rho.exponents().len();
    if (k..=top).any(|s| rho.get(s) > 0 && s % k != 0) {
        return Ok(LaurentPoly::zero());
    }
    let ki = k as i64;
    let nk = rho.get(k) as i64;
    let mut value = h.a(k).clone();
    if form == FormulaForm::Calibrated {
        value = value.scale(&int(ki.pow(nk as u32)));
    }
    for j in 1..nk {
        value = &value * &LaurentPoly::from_int_terms(&[(ki, nk - j), (-ki, j)]);
    }
    for s in 2..=top {
        let ns = rho.get(s) as i64;
        if ns == 0 || (s == k && form == FormulaForm::Calibrated) {
            continue;
        }
        let si = s as i64;
        let multiples = || divisors(s).into_iter().filter(|d| d % k == 0);
        let sum = c_sum(rho, s, multiples(), &h).scale(&int(si));
        let rest = c_sum(rho, s, multiples().filter(|&d| d != s), &h).scale(&int(si));
        for m in 1..ns {
            value = &value * &(&sum - &weight_gap(s).scale(&int(si * m)));
        }
        value = &value * &rest;
    }
    Ok(value)
}
