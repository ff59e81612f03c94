//! Solvers for the Koszul functional equations.
//!
//! [`invert_univariate`] solves `f(-g(-x)) = x` and [`invert_plethystic`]
//! solves `eps(F) o eps(G) = p_1`, both degree by degree.

use crate::rings::{LaurentPoly, Rational};
use crate::symfunc::{Coeff, SymFunc};
use crate::{Error, Result};

/// Power series `sum_{d=1}^N c_d x^d` without constant term.
#[derive(Clone, Debug, PartialEq)]
pub struct UnivariateSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UnivariateSeries<C> {
    /// From the coefficients of `x, x^2, ..., x^N`.
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut all = Vec::with_capacity(coeffs.len() + 1);
        all.push(C::zero());
        all.extend(coeffs);
        UnivariateSeries { coeffs: all }
    }

    /// From coefficients indexed by degree; the degree-0 entry must vanish.
    pub fn from_indexed(coeffs: Vec<C>) -> Result<Self> {
        match coeffs.first() {
            None => Err(Error::InvalidArgument("empty series".into())),
            Some(c) if !c.is_zero() => Err(Error::InvalidArgument(
                "series must have no constant term".into(),
            )),
            _ => Ok(UnivariateSeries { coeffs }),
        }
    }

    pub fn zero(truncation: usize) -> Self {
        UnivariateSeries {
            coeffs: vec![C::zero(); truncation + 1],
        }
    }

    pub fn x(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if truncation >= 1 {
            s.coeffs[1] = C::one();
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    /// Coefficients of `x, ..., x^N`.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs[1..]
    }

    pub fn truncate(&self, n: usize) -> Self {
        UnivariateSeries {
            coeffs: self.coeffs[..=n.min(self.truncation())].to_vec(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut out = Self::zero(n);
        for i in 1..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 1..=n - i {
                out.coeffs[i + j] += self.coeffs[i].mul_ref(&other.coeffs[j]);
            }
        }
        out
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        let n = self.truncation().min(inner.truncation());
        let inner = inner.truncate(n);
        let mut out = Self::zero(n);
        let mut power = inner.clone();
        for d in 1..=n {
            let c = &self.coeffs[d];
            if !c.is_zero() {
                for e in 1..=n {
                    out.coeffs[e] += c.mul_ref(&power.coeffs[e]);
                }
            }
            if d < n {
                power = power.mul(&inner);
            }
        }
        out
    }

    /// `self(-x)`
    pub fn negate_argument(&self) -> Self {
        UnivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { c.neg_ref() } else { c.clone() })
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        UnivariateSeries {
            coeffs: self.coeffs.iter().map(Coeff::neg_ref).collect(),
        }
    }

    /// `p_1 = x, p_k = 0` for `k > 1`.
    pub fn from_symfunc(f: &SymFunc<C>) -> Result<Self> {
        Self::from_indexed(f.specialize_p1())
    }
}

impl UnivariateSeries<LaurentPoly> {
    pub fn eval_q_at_one(&self) -> UnivariateSeries<Rational> {
        UnivariateSeries {
            coeffs: self.coeffs.iter().map(LaurentPoly::eval_at_one).collect(),
        }
    }
}

/// Solves `f(-g(-x)) = x` for `g`.
///
/// With `h` the compositional inverse of `f`, `g(x) = -h(-x)`; `h` is built
/// one degree at a time since `h_n` enters `[f(h)]_n` only through `f_1 h_n`.
pub fn invert_univariate<C: Coeff>(f: &UnivariateSeries<C>) -> Result<UnivariateSeries<C>> {
    let n = f.truncation();
    if n >= 1 && *f.coeff(1) != C::one() {
        return Err(Error::InvalidArgument(format!(
            "linear coefficient must be 1, got {}",
            f.coeff(1)
        )));
    }
    let mut h = UnivariateSeries::x(n);
    for d in 2..=n {
        let fh = f.truncate(d).compose(&h.truncate(d));
        h.coeffs[d] = fh.coeffs[d].neg_ref();
    }
    Ok(h.negate_argument().neg())
}

/// `F o G` with the composition-of-species meaning.
pub fn compose_characters<C: Coeff>(f: &SymFunc<C>, g: &SymFunc<C>) -> Result<SymFunc<C>> {
    f.plethysm(g)
}

/// Solves `eps(F) o eps(G) = p_1` for `G`.
///
/// Writing `eps(F) = -p_1 + R`, the unknown `Gamma = eps(G)` satisfies
/// `Gamma = R o Gamma - p_1`, and the degree `n` part of the right side only
/// involves `Gamma` below degree `n`.
pub fn invert_plethystic<C: Coeff>(f: &SymFunc<C>) -> Result<SymFunc<C>> {
    let n = f.truncation();
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidArgument("F must have no constant term".into()));
    }
    if f.degree_slice(1) != SymFunc::p(1, n) {
        return Err(Error::InvalidArgument(
            "the degree-1 part of F must be p1".into(),
        ));
    }
    let ef = f.epsilon();
    let rest = &ef - &ef.degree_slice(1);
    let mut gamma = SymFunc::p(1, n).scale(&C::one().neg_ref());
    for d in 2..=n {
        let step = rest
            .truncate(d)
            .plethysm(&gamma.truncate(d))?
            .degree_slice(d);
        gamma = &gamma + &step.with_truncation(n);
    }
    let g = gamma.epsilon();
    let residual = koszul_residual(f, &g)?;
    if !residual.is_zero() {
        return Err(Error::Inconsistent(format!(
            "eps(F) o eps(G) - p1 = {residual}"
        )));
    }
    Ok(g)
}

/// `eps(F) o eps(G) - p_1`
pub fn koszul_residual<C: Coeff>(f: &SymFunc<C>, g: &SymFunc<C>) -> Result<SymFunc<C>> {
    let n = f.truncation().min(g.truncation());
    let lhs = f.epsilon().plethysm(&g.epsilon())?;
    Ok(&lhs - &SymFunc::p(1, n))
}

/// Dimensions `dim Q(n) = n! [x^n] f` from a character series, `n = 1..=N`.
pub fn dimensions(f: &SymFunc<LaurentPoly>) -> Vec<Rational> {
    specialize_q_series(f)
        .eval_q_at_one()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * Rational::from_integer(crate::arith::factorial(i + 1)))
        .collect()
}

/// The exponential generating series of `SL2`-characters: `p_1 = x`,
/// `p_k = 0` for `k > 1`.
pub fn specialize_q_series(f: &SymFunc<LaurentPoly>) -> UnivariateSeries<LaurentPoly> {
    UnivariateSeries::from_symfunc(f).expect("character series have no constant term")
}
