use num_traits::{One, Zero};
use serde::Serialize;

use super::{f_lie_char, series_for};
use crate::rings::{LaurentPoly, Rational};
use crate::symfunc::{h_series, ExponentVector, SymFunc};
use crate::{Error, Operad, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum CheckValue {
    Laurent(LaurentPoly),
    Symmetric(SymFunc<Rational>),
}

impl std::fmt::Display for CheckValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckValue::Laurent(p) => write!(f, "{p}"),
            CheckValue::Symmetric(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityCheck {
    pub name: &'static str,
    pub expected: CheckValue,
    pub actual: CheckValue,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityReport {
    pub operad: &'static str,
    pub n: usize,
    pub checks: Vec<MultiplicityCheck>,
}

impl MultiplicityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&MultiplicityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn record(name: &'static str, expected: CheckValue, actual: CheckValue) -> MultiplicityCheck {
    let pass = expected == actual;
    MultiplicityCheck {
        name,
        expected,
        actual,
        pass,
    }
}

/// Isotypic multiplicities of the arity `n` component.
///
/// * `trivial`: `<F_n, h_n>`, expected `0` for `Lie2` and `1` for `P2`.
/// * `standard`: `<F_n, h_{n-1} h_1 - h_n>`, expected `(q + q^-1)^{n-1}` for
///   `Lie2` and `sum_{j=1}^{n-1} (q + q^-1)^j` for `P2`.
/// * `top_weight`: the `q^{n-1}` coefficient, expected to be the `Lie(n)`
///   character.
/// * `next_weight` (`Lie2` only): the `q^{n-3}` coefficient minus the
///   `q^{n-1}` one, expected `sum_{k=2}^{n-1} p_1^{n-k} F_Lie(k)`.
///
/// Mismatches are recorded, not returned as errors.
pub fn multiplicity_report(operad: Operad, n: usize) -> Result<MultiplicityReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("multiplicity checks need n >= 2".into()));
    }
    if operad == Operad::Com2 {
        return Err(Error::InvalidArgument("multiplicity checks cover lie2 and p2".into()));
    }
    let f = series_for(operad, n).degree_slice(n);
    let h = h_series::<Rational>(n);
    let hn = h.degree_slice(n).to_laurent();
    let standard = (&(&h.degree_slice(n - 1) * &h.degree_slice(1)) - &h.degree_slice(n)).to_laurent();
    let qq = LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]);

    let mut checks = Vec::new();
    let trivial_expected = match operad {
        Operad::Lie2 => LaurentPoly::zero(),
        _ => LaurentPoly::one(),
    };
    checks.push(record(
        "trivial",
        CheckValue::Laurent(trivial_expected),
        CheckValue::Laurent(f.hall_inner_product(&hn, n)?),
    ));

    let standard_expected = match operad {
        Operad::Lie2 => qq.pow(n as u32 - 1),
        _ => (1..n as u32).fold(LaurentPoly::zero(), |acc, j| &acc + &qq.pow(j)),
    };
    checks.push(record(
        "standard",
        CheckValue::Laurent(standard_expected),
        CheckValue::Laurent(f.hall_inner_product(&standard, n)?),
    ));

    let lie = f_lie_char(n);
    let top = n as i64 - 1;
    checks.push(record(
        "top_weight",
        CheckValue::Symmetric(lie.degree_slice(n)),
        CheckValue::Symmetric(f.q_coefficient(top)),
    ));

    if operad == Operad::Lie2 {
        let mut expected = SymFunc::zero(n);
        for k in 2..n {
            let p1 = SymFunc::monomial(ExponentVector::power(1, (n - k) as u32), Rational::one(), n);
            expected = &expected + &(&p1 * &lie.degree_slice(k));
        }
        checks.push(record(
            "next_weight",
            CheckValue::Symmetric(expected),
            CheckValue::Symmetric(&f.q_coefficient(top - 2) - &f.q_coefficient(top)),
        ));
    }

    Ok(MultiplicityReport {
        operad: operad.name(),
        n,
        checks,
    })
}
