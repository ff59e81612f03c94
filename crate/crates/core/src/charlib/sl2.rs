use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::rings::LaurentPoly;
use crate::{Error, Result};

/// Decomposes an `SL2` character into irreducibles.
///
/// Returns `dimension -> multiplicity`; the multiplicity of the
/// `(w+1)`-dimensional irreducible is `m_w - m_{w+2}` where `m_w` is the
/// coefficient of `q^w`.
pub fn sl2_decompose(chi: &LaurentPoly) -> Result<BTreeMap<usize, u64>> {
    if !chi.is_palindromic() {
        return Err(Error::NotSl2Character(format!("{chi} is not symmetric in q <-> q^-1")));
    }
    if !chi.has_integer_coefficients() {
        return Err(Error::NotSl2Character(format!("{chi} has non-integer coefficients")));
    }
    let mut out = BTreeMap::new();
    let top = chi.max_exp().unwrap_or(-1);
    for w in 0..=top.max(-1) {
        let mult = chi.coeff(w) - chi.coeff(w + 2);
        if mult.is_zero() {
            continue;
        }
        if mult.is_negative() {
            return Err(Error::NotSl2Character(format!(
                "{chi} gives multiplicity {mult} to weight {w}"
            )));
        }
        let m = mult.to_integer().to_u64().ok_or_else(|| {
            Error::NotSl2Character(format!("multiplicity {mult} out of range"))
        })?;
        out.insert(w as usize + 1, m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let d = sl2_decompose(&LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(d, BTreeMap::from([(2, 1)]));
        let d = sl2_decompose(&LaurentPoly::from_int_terms(&[(2, 2), (0, 5), (-2, 2)])).unwrap();
        assert_eq!(d, BTreeMap::from([(3, 2), (1, 3)]));
        assert!(sl2_decompose(&LaurentPoly::q_pow(2)).is_err());
        assert!(sl2_decompose(&LaurentPoly::from_int_terms(&[(2, 2), (0, 1), (-2, 2)])).is_err());
        assert!(sl2_decompose(&LaurentPoly::zero()).unwrap().is_empty());
    }

    #[test]
    fn rejects_fractions() {
        let half = LaurentPoly::constant(crate::rings::ratio(1, 2));
        assert!(matches!(sl2_decompose(&half), Err(Error::NotSl2Character(_))));
    }
}
