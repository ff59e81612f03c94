use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::rings::Rational;
use crate::{Error, Result};

fn check(b: &Rational, n: usize) -> Result<()> {
    if b.is_zero() {
        return Err(Error::InvalidArgument("b must be nonzero".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    Ok(())
}

/// `res_{z=0} exp(az) / (exp(bz) - 1)^n dz`
/// ` = (a - b)(a - 2b)...(a - (n-1)b) / (b^n (n-1)!)`.
pub fn residue_closed_form(a: &Rational, b: &Rational, n: usize) -> Result<Rational> {
    check(b, n)?;
    let mut num = Rational::one();
    for j in 1..n {
        num *= a - b * Rational::from_integer(j.into());
    }
    let den = num_traits::pow(b.clone(), n) * Rational::from_integer(factorial(n - 1));
    Ok(num / den)
}

/// The same residue read off the Laurent expansion: the coefficient of
/// `z^{n-1}` in `b^-n exp(az) E(z)^-n` with `E(z) = (exp(bz) - 1) / (bz)`.
pub fn residue_series(a: &Rational, b: &Rational, n: usize) -> Result<Rational> {
    check(b, n)?;
    let len = n;
    let mut exp_a = Vec::with_capacity(len);
    let mut e = Vec::with_capacity(len);
    let mut a_pow = Rational::one();
    let mut b_pow = Rational::one();
    for j in 0..len {
        let fj = Rational::from_integer(factorial(j));
        exp_a.push(&a_pow / &fj);
        e.push(&b_pow / (fj * Rational::from_integer((j + 1).into())));
        a_pow *= a;
        b_pow *= b;
    }
    let e_inv = series_inverse(&e);
    let mut acc = exp_a;
    for _ in 0..n {
        acc = series_mul(&acc, &e_inv);
    }
    Ok(&acc[len - 1] / num_traits::pow(b.clone(), n))
}

fn series_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let len = x.len();
    let mut out = vec![Rational::zero(); len];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().take(len - i).enumerate() {
            out[i + j] += xi * yj;
        }
    }
    out
}

/// Reciprocal of a power series with constant term 1.
fn series_inverse(x: &[Rational]) -> Vec<Rational> {
    let len = x.len();
    let mut out = vec![Rational::zero(); len];
    out[0] = Rational::one() / &x[0];
    for k in 1..len {
        let mut s = Rational::zero();
        for j in 1..=k {
            s += &x[j] * &out[k - j];
        }
        out[k] = -s / &x[0];
    }
    out
}
