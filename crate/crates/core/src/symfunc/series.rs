use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::{Coeff, ExponentVector};
use crate::arith::factorial;
use crate::rings::{LaurentPoly, Rational};
use crate::{Error, Result};

/// Truncated symmetric function `sum_v c_v p^v` with `degree(v) <= truncation`.
#[derive(Clone, PartialEq)]
pub struct SymFunc<C: Coeff> {
    truncation: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coeff> SymFunc<C> {
    pub fn zero(truncation: usize) -> Self {
        SymFunc {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, truncation: usize) -> Self {
        Self::monomial(ExponentVector::empty(), c, truncation)
    }

    pub fn monomial(v: ExponentVector, c: C, truncation: usize) -> Self {
        let mut f = Self::zero(truncation);
        f.add_term(v, c);
        f
    }

    /// The power sum `p_i`.
    pub fn p(i: usize, truncation: usize) -> Self {
        Self::monomial(ExponentVector::single(i), C::one(), truncation)
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, C)>>(
        iter: I,
        truncation: usize,
    ) -> Self {
        let mut f = Self::zero(truncation);
        for (v, c) in iter {
            f.add_term(v, c);
        }
        f
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: &ExponentVector) -> C {
        self.terms.get(v).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&ExponentVector::empty())
    }

    /// Smallest degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(ExponentVector::degree).min()
    }

    /// Adds `c p^v`; terms beyond the truncation are dropped.
    pub fn add_term(&mut self, v: ExponentVector, c: C) {
        if c.is_zero() || v.degree() > self.truncation {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(v) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        let truncation = truncation.min(self.truncation);
        SymFunc {
            truncation,
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| v.degree() <= truncation)
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of degree `n` (same truncation).
    pub fn degree_slice(&self, n: usize) -> Self {
        SymFunc {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| v.degree() == n)
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn with_truncation(mut self, truncation: usize) -> Self {
        if truncation < self.truncation {
            return self.truncate(truncation);
        }
        self.truncation = truncation;
        self
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        SymFunc::from_terms(
            self.terms.iter().map(|(v, c)| (v.clone(), f(c))),
            self.truncation,
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map_coeffs(|x| x.scale(r))
    }

    /// `p_k o f`: replaces every `p_j` by `p_{kj}` and `q` by `q^k`.
    pub fn adams(&self, k: usize) -> Self {
        assert!(k >= 1);
        SymFunc::from_terms(
            self.terms
                .iter()
                .filter(|(v, _)| v.degree() * k <= self.truncation)
                .map(|(v, c)| (v.dilate(k), c.dilate_q(k as u32))),
            self.truncation,
        )
    }

    /// The sign involution `p_n -> -p_n`.
    pub fn epsilon(&self) -> Self {
        SymFunc {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(v, c)| {
                    let c = if v.parts() % 2 == 1 { c.neg_ref() } else { c.clone() };
                    (v.clone(), c)
                })
                .collect(),
        }
    }

    /// Character value on the class `rho`: the coefficient of `p^rho` times
    /// `z_rho`.
    pub fn char_value(&self, rho: &ExponentVector) -> Result<C> {
        let degree = rho.degree();
        if degree > self.truncation {
            return Err(Error::DegreeOverflow {
                degree,
                truncation: self.truncation,
            });
        }
        Ok(self
            .coeff(rho)
            .scale(&Rational::from_integer(rho.z())))
    }

    /// Inverse of [`char_value`](Self::char_value) on one degree: builds the
    /// degree-`n` slice from class values.
    pub fn from_char_values<'a>(
        values: impl IntoIterator<Item = (&'a ExponentVector, C)>,
        truncation: usize,
    ) -> Self {
        SymFunc::from_terms(
            values.into_iter().map(|(rho, value)| {
                let z = Rational::from_integer(rho.z());
                (rho.clone(), value.scale(&(Rational::from_integer(1.into()) / z)))
            }),
            truncation,
        )
    }

    /// Hall inner product of the degree-`n` components; power sums are
    /// orthogonal with `<p_rho, p_rho> = z_rho`.
    pub fn hall_inner_product(&self, other: &Self, n: usize) -> Result<C> {
        let t = self.truncation.min(other.truncation);
        if n > t {
            return Err(Error::DegreeOverflow {
                degree: n,
                truncation: t,
            });
        }
        let mut acc = C::zero();
        for (v, c) in self.terms.iter().filter(|(v, _)| v.degree() == n) {
            if let Some(d) = other.terms.get(v) {
                acc += c.mul_ref(d).scale(&Rational::from_integer(v.z()));
            }
        }
        Ok(acc)
    }

    /// `exp(f)` for `f` without constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::InvalidArgument(
                "exp needs a series without constant term".into(),
            ));
        }
        let n = self.truncation;
        let mut result = Self::constant(C::one(), n);
        let mut power = Self::constant(C::one(), n);
        for j in 1..=n {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            let inv = Rational::new(1.into(), factorial(j));
            result = &result + &power.scale_rational(&inv);
        }
        Ok(result)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(C::one(), self.truncation);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Specialization `p_1 = x, p_k = 0 (k > 1)`: coefficients of `x^n`.
    pub fn specialize_p1(&self) -> Vec<C> {
        (0..=self.truncation)
            .map(|n| self.coeff(&ExponentVector::power(1, n as u32)))
            .collect()
    }
}

impl SymFunc<Rational> {
    pub fn to_laurent(&self) -> SymFunc<LaurentPoly> {
        self.map_coeffs(|c| LaurentPoly::constant(c.clone()))
    }
}

impl SymFunc<LaurentPoly> {
    /// Value at `q = 1`.
    pub fn eval_q_at_one(&self) -> SymFunc<Rational> {
        self.map_coeffs(LaurentPoly::eval_at_one)
    }

    /// The symmetric function formed by the coefficients of `q^e`.
    pub fn q_coefficient(&self, e: i64) -> SymFunc<Rational> {
        self.map_coeffs(|c| c.coeff(e))
    }
}

/// `sum_{k>=1} h_k = exp(sum_k p_k / k) - 1`, truncated at degree `n`.
pub fn h_series<C: Coeff>(n: usize) -> SymFunc<C> {
    let log = SymFunc::from_terms(
        (1..=n).map(|k| {
            (
                ExponentVector::single(k),
                C::from_rational(Rational::new(1.into(), k.into())),
            )
        }),
        n,
    );
    let e = log.exp().expect("the logarithm has no constant term");
    &e - &SymFunc::constant(C::one(), n)
}

impl<C: Coeff> Add for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn add(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        let mut out = self.truncate(rhs.truncation);
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn sub(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        let mut out = self.truncate(rhs.truncation);
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), c.neg_ref());
        }
        out
    }
}

impl<C: Coeff> Mul for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn mul(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        let n = self.truncation.min(rhs.truncation);
        let mut out = SymFunc::zero(n);
        for (va, ca) in &self.terms {
            let da = va.degree();
            if da > n {
                continue;
            }
            for (vb, cb) in &rhs.terms {
                if da + vb.degree() > n {
                    continue;
                }
                out.add_term(va.add(vb), ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn neg(self) -> SymFunc<C> {
        self.map_coeffs(C::neg_ref)
    }
}

impl<C: Coeff> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O(deg {})", self.truncation + 1);
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{v}")?;
        }
        write!(f, " + O(deg {})", self.truncation + 1)
    }
}

impl<C: Coeff> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{}]({self})", C::KIND.name())
    }
}
