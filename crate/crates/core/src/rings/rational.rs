use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, Result};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Renders `r` as `"num/den"`, dropping the denominator when it is one.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d`; panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((num, den)) => {
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(Error::DivisionByZero(format!("rational `{s}`")));
            }
            Ok(Rational::new(num, den))
        }
    }
}
