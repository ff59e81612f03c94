use num_traits::{One, Zero};

use super::HelperSeq;
use crate::arith::{divisors, factorial, mobius};
use crate::rings::{sl2_irreducible_char, LaurentPoly, Rational};
use crate::symfunc::{h_series, ExponentVector, SymFunc};
use crate::{par, Error, Operad, Result};

/// `F_Com = sum_k h_k`.
pub fn f_com_char(n: usize) -> SymFunc<Rational> {
    h_series(n)
}

/// `F_Lie = sum_n (1/n) sum_{k | n} mu_k p_k^{n/k}`.
pub fn f_lie_char(n: usize) -> SymFunc<Rational> {
    let mut f = SymFunc::zero(n);
    for m in 1..=n {
        for k in divisors(m) {
            let mu = mobius(k);
            if mu != 0 {
                f.add_term(
                    ExponentVector::power(k, (m / k) as u32),
                    Rational::new(mu.into(), m.into()),
                );
            }
        }
    }
    f
}

/// `F_Com2 = sum_n [n]_q h_n` where `[n]_q` is the character of `L(n)`.
pub fn f_com2_char(n: usize) -> SymFunc<LaurentPoly> {
    let h = h_series::<Rational>(n);
    let mut f = SymFunc::zero(n);
    for (v, c) in h.terms() {
        let qn = sl2_irreducible_char(v.degree()).expect("degree >= 1");
        f.add_term(v.clone(), qn.scale(c));
    }
    f
}

/// Coefficient of `p^v` in the auxiliary series `H`.
///
/// Zero unless `n_1 > 0`. Each `s >= 2` with `n_s > 0` contributes
/// `prod_{l=1}^{n_s} (S_s - l (q^s - q^-s)) * T_s / (T_s + n_s q^-s)` where
/// `S_s = sum_{d | s} n_d c_{s/d}(q^d)` and `T_s` is the same sum without
/// `d = s`; the quotient must be exact.
pub fn ll1_coefficient(v: &ExponentVector, helpers: &HelperSeq) -> Result<LaurentPoly> {
    let n1 = v.get(1) as usize;
    if n1 == 0 {
        return Ok(LaurentPoly::zero());
    }
    let mut value = LaurentPoly::one();
    for l in 1..n1 {
        value = &value
            * &LaurentPoly::from_int_terms(&[(1, (n1 - l) as i64), (-1, l as i64)]);
    }
    for s in 2..=v.len() {
        let ns = v.get(s) as i64;
        if ns == 0 {
            continue;
        }
        let si = s as i64;
        let mut t = LaurentPoly::zero();
        for d in divisors(s).into_iter().filter(|&d| d != s) {
            let nd = v.get(d);
            if nd > 0 {
                t += helpers
                    .c(s / d)
                    .dilate(d as u32)
                    .scale(&Rational::from_integer(nd.into()));
            }
        }
        let full = &t + &LaurentPoly::from_int_terms(&[(si, ns)]);
        let b = LaurentPoly::from_int_terms(&[(si, 1), (-si, -1)]);
        let mut block = t.clone();
        for l in 1..=ns {
            block = &block * &(&full - &b.scale(&Rational::from_integer(l.into())));
        }
        let denominator = &t + &LaurentPoly::from_int_terms(&[(-si, ns)]);
        if denominator.is_zero() {
            return Err(Error::DivisionByZero(format!("coefficient of {v}")));
        }
        value = &value * &block.exact_div(&denominator)?;
    }
    let norm: num_bigint::BigInt = v
        .multiplicities()
        .iter()
        .map(|&m| factorial(m as usize))
        .product();
    Ok(value.scale(&Rational::new(1.into(), norm)))
}

/// The auxiliary series `H`, coefficient by coefficient.
pub fn h_series_ll1(n: usize) -> Result<SymFunc<LaurentPoly>> {
    let helpers = HelperSeq::up_to(n);
    let keys: Vec<ExponentVector> = ExponentVector::up_to_degree(n)
        .into_iter()
        .filter(|v| v.get(1) > 0)
        .collect();
    let coeffs = par::try_map(&keys, |v| ll1_coefficient(v, &helpers))?;
    Ok(SymFunc::from_terms(keys.into_iter().zip(coeffs), n))
}

/// `F_Lie2 = sum_k a_k(q) p_k o H`.
pub fn f_lie2_char(n: usize) -> SymFunc<LaurentPoly> {
    let helpers = HelperSeq::up_to(n);
    let h = h_series_ll1(n).expect("the auxiliary series has exact coefficients");
    let mut f = SymFunc::zero(n);
    for k in 1..=n {
        let a = helpers.a(k);
        if a.is_zero() {
            continue;
        }
        f = &f + &h.adams(k).scale(a);
    }
    f
}

/// `F_P2 = F_Com o F_Lie2`.
pub fn f_p2_char(n: usize) -> SymFunc<LaurentPoly> {
    f_com_char(n)
        .to_laurent()
        .plethysm(&f_lie2_char(n))
        .expect("F_Lie2 has no constant term")
}

/// The authoritative character series of `operad`.
pub fn series_for(operad: Operad, n: usize) -> SymFunc<LaurentPoly> {
    match operad {
        Operad::Lie2 => f_lie2_char(n),
        Operad::P2 => f_p2_char(n),
        Operad::Com2 => f_com2_char(n),
    }
}

/// `SL2`-character of the whole component of arity `n`, as a product.
///
/// `prod_{k=1}^{n-1} (k q + (n-k) q^-1)` for `Lie2`,
/// `prod_{k=1}^{n-1} (k q + 1 + (n-k) q^-1)` for `P2`, `[n]_q` for `Com2`.
pub fn identity_qchar_product(operad: Operad, n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("arity must be >= 1".into()));
    }
    let middle = match operad {
        Operad::Lie2 => 0,
        Operad::P2 => 1,
        Operad::Com2 => return sl2_irreducible_char(n),
    };
    let ni = n as i64;
    Ok((1..ni).fold(LaurentPoly::one(), |acc, k| {
        &acc * &LaurentPoly::from_int_terms(&[(1, k), (0, middle), (-1, ni - k)])
    }))
}
