use num_traits::One;
use serde::Serialize;

use crate::rings::{LaurentPoly, Rational};
use crate::symfunc::CycleType;
use crate::Error;

/// A Laurent polynomial, or a quotient that does not reduce to one.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagValue {
    Exact(LaurentPoly),
    Ratio {
        numerator: LaurentPoly,
        denominator: LaurentPoly,
    },
}

impl DiagValue {
    pub fn exact(&self) -> Option<&LaurentPoly> {
        match self {
            DiagValue::Exact(p) => Some(p),
            DiagValue::Ratio { .. } => None,
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Rational {
        match self {
            DiagValue::Exact(p) => p.eval_at_one(),
            DiagValue::Ratio {
                numerator,
                denominator,
            } => numerator.eval_at_one() / denominator.eval_at_one(),
        }
    }
}

impl std::fmt::Display for DiagValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DiagValue::Exact(p) => write!(f, "{p}"),
            DiagValue::Ratio {
                numerator,
                denominator,
            } => write!(f, "({numerator}) / ({denominator})"),
        }
    }
}

/// `1 + q^m + q^{2m} + ... + q^{nm}`
fn geometric(n: usize, m: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..=n).map(|j| ((j * m) as i64, Rational::one())))
}

/// Character of the diagonal harmonics in `n` pairs of variables on `rho`:
///
/// ```text
/// (-1)^{sum (m-1) n_m} q^{-n(n-1)/2} / (1 + q + ... + q^n) * prod_m (1 + q^m + ... + q^{nm})^{n_m}
/// ```
pub fn diag_harmonics_value(rho: &CycleType) -> DiagValue {
    let n = rho.n();
    let mut sign = 0u64;
    let mut numerator = LaurentPoly::one();
    for (i, &nm) in rho.exponents().multiplicities().iter().enumerate() {
        let m = i + 1;
        sign += (m as u64 - 1) * nm as u64;
        numerator = &numerator * &geometric(n, m).pow(nm);
    }
    let shift = -((n * (n - 1) / 2) as i64);
    numerator = numerator.shift(shift);
    if sign % 2 == 1 {
        numerator = -numerator;
    }
    let denominator = geometric(n, 1);
    match numerator.exact_div(&denominator) {
        Ok(p) => DiagValue::Exact(p),
        Err(Error::InexactDivision(_)) => DiagValue::Ratio {
            numerator,
            denominator,
        },
        Err(e) => unreachable!("denominator is nonzero: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::integer;

    #[test]
    fn identity_gives_parking_function_count() {
        for n in 1..=6usize {
            let v = diag_harmonics_value(&CycleType::identity(n));
            assert!(v.exact().is_some());
            assert_eq!(v.eval_at_one(), integer(((n + 1) as i64).pow(n as u32 - 1)));
        }
        assert_eq!(diag_harmonics_value(&CycleType::identity(1)), DiagValue::Exact(LaurentPoly::one()));
    }

    #[test]
    fn transposition() {
        let v = diag_harmonics_value(&CycleType::parse("0,1").unwrap());
        assert_eq!(v, DiagValue::Exact(LaurentPoly::from_int_terms(&[(1, -1), (0, 1), (-1, -1)])));
    }

    #[test]
    fn every_class_reduces() {
        // A common divisor d > 1 of n + 1 and of every cycle length would
        // divide n, so the quotient is always a Laurent polynomial.
        for n in 1..=7 {
            for rho in CycleType::all(n) {
                let v = diag_harmonics_value(&rho);
                let p = v.exact().expect("exact quotient");
                assert!(p.is_palindromic(), "{rho}");
            }
        }
    }
}
