use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::rational::{parse_rational, rational_to_string, Rational};
use crate::{Error, Result};

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Stored sparsely by exponent; zero coefficients are never stored, so the
/// empty map is the zero polynomial.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c * q^exp`
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `q^exp`
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut p = LaurentPoly::new();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int_terms(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(
            pairs
                .iter()
                .map(|&(e, c)| (e, Rational::from_integer(c.into()))),
        )
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns the value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e + shift, v.clone())).collect(),
        }
    }

    /// Replaces `q` by `q^k`, i.e. multiplies every exponent by `k`.
    pub fn q_power_substitute(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "q-power substitution needs k >= 1".into(),
            ));
        }
        Ok(self.dilate(k))
    }

    /// Unchecked form of [`q_power_substitute`](Self::q_power_substitute).
    pub(crate) fn dilate(&self, k: u32) -> Self {
        debug_assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        let k = i64::from(k);
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e * k, v.clone())).collect(),
        }
    }

    /// Replaces `q` by `q^-1`.
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.terms
            .iter()
            .all(|(&e, v)| self.terms.get(&-e) == Some(v))
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|v| v.is_integer())
    }

    /// Exact quotient `self / divisor` in the Laurent polynomial ring.
    ///
    /// Fails with [`Error::InexactDivision`] when the divisor does not divide
    /// `self`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (d_low, d_high) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(l), Some(h)) => (l, h),
            _ => return Err(Error::DivisionByZero("Laurent division".into())),
        };
        let (a_low, a_high) = match (self.min_exp(), self.max_exp()) {
            (Some(l), Some(h)) => (l, h),
            _ => return Ok(LaurentPoly::new()),
        };
        // Dense polynomials after clearing the lowest powers of q.
        let dense = |p: &LaurentPoly, low: i64, high: i64| {
            let mut v = vec![Rational::zero(); (high - low + 1) as usize];
            for (e, c) in p.terms() {
                v[(e - low) as usize] = c.clone();
            }
            v
        };
        let mut rem = dense(self, a_low, a_high);
        let den = dense(divisor, d_low, d_high);
        let dd = den.len() - 1;
        if rem.len() - 1 < dd {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        let lead = den[dd].clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in den.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] -= &c * dj;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        let offset = a_low - d_low;
        Ok(LaurentPoly::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + offset, c)),
        ))
    }
}

/// Character `q^(n-1) + q^(n-3) + ... + q^(1-n)` of the `n`-dimensional
/// irreducible representation of `SL2`.
pub fn sl2_irreducible_char(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "SL2 irreducibles have dimension >= 1".into(),
        ));
    }
    let top = n as i64 - 1;
    Ok(LaurentPoly::from_terms(
        (0..n as i64).map(|j| (top - 2 * j, Rational::one())),
    ))
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::new()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::new();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, -v.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first, e.g. `2q^2 + 5 + 2q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !unit {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            match e {
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    /// `{"<exponent>": "<rational>", ...}` in increasing exponent order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &rational_to_string(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from exponent strings to rational strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::new();
                while let Some((k, v)) = map.next_entry::<String, String>()? {
                    let e: i64 = k
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent `{k}`")))?;
                    let c = parse_rational(&v).map_err(de::Error::custom)?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_map(V)
    }
}
