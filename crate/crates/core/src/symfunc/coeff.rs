use std::fmt;
use std::ops::AddAssign;

use num_traits::{One, Zero};
use serde_json::Value;

use crate::rings::{parse_rational, rational_to_string, LaurentPoly, Rational};
use crate::{Error, Result};

/// Which coefficient ring a [`SymFunc`](super::SymFunc) lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    Rational,
    Laurent,
}

impl CoeffKind {
    pub fn name(self) -> &'static str {
        match self {
            CoeffKind::Rational => "rational",
            CoeffKind::Laurent => "laurent",
        }
    }
}

/// Coefficient ring of a symmetric function: `Q` or `Q[q, q^-1]`.
///
/// Mixing kinds is a type error; conversion from rational to Laurent goes
/// through [`SymFunc::to_laurent`](super::SymFunc::to_laurent).
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Zero + One + AddAssign + 'static
{
    const KIND: CoeffKind;

    fn from_rational(r: Rational) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// The image of the coefficient under `q -> q^k`; identity on rationals.
    fn dilate_q(&self, k: u32) -> Self;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Coeff for Rational {
    const KIND: CoeffKind = CoeffKind::Rational;

    fn from_rational(r: Rational) -> Self {
        r
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn dilate_q(&self, _k: u32) -> Self {
        self.clone()
    }
    fn to_json(&self) -> Value {
        Value::String(rational_to_string(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            other => Err(Error::Parse(format!("expected rational string, got {other}"))),
        }
    }
}

impl Coeff for LaurentPoly {
    const KIND: CoeffKind = CoeffKind::Laurent;

    fn from_rational(r: Rational) -> Self {
        LaurentPoly::constant(r)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        LaurentPoly::scale(self, r)
    }
    fn dilate_q(&self, k: u32) -> Self {
        self.dilate(k)
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("Laurent polynomials always serialize")
    }
    fn from_json(v: &Value) -> Result<Self> {
        Ok(serde_json::from_value(v.clone())?)
    }
}

