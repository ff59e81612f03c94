use std::collections::HashMap;

use super::{Coeff, SymFunc};
use crate::{Error, Result};

impl<C: Coeff> SymFunc<C> {
    /// Plethysm `self o h`.
    ///
    /// The ring homomorphism in the first argument fixed by
    /// `p_n o h = h(p_n, p_{2n}, ...; q^n)`. Coefficients of `self` are left
    /// alone. `h` must have no constant term; the result is truncated at the
    /// smaller of the two truncation degrees.
    pub fn plethysm(&self, h: &SymFunc<C>) -> Result<SymFunc<C>> {
        if !h.constant_term().is_zero() {
            return Err(Error::InvalidArgument(
                "plethysm needs an inner series without constant term".into(),
            ));
        }
        let n = self.truncation().min(h.truncation());
        let h = h.truncate(n);
        let mut powers = AdamsPowers::new(&h);
        let mut out = SymFunc::zero(n);
        for (v, c) in self.terms() {
            if v.degree() > n {
                continue;
            }
            let mut prod = SymFunc::constant(C::one(), n);
            for (i, &m) in v.multiplicities().iter().enumerate() {
                if m == 0 {
                    continue;
                }
                prod = &prod * powers.get(i + 1, m);
                if prod.is_zero() {
                    break;
                }
            }
            for (w, d) in prod.terms() {
                out.add_term(w.clone(), c.mul_ref(d));
            }
        }
        Ok(out)
    }

    /// Plethysm computed only up to degree `degree`.
    pub fn plethysm_to_degree(&self, h: &SymFunc<C>, degree: usize) -> Result<SymFunc<C>> {
        self.truncate(degree).plethysm(&h.truncate(degree))
    }
}

/// Cache of `(p_i o h)^m`.
struct AdamsPowers<'a, C: Coeff> {
    h: &'a SymFunc<C>,
    cache: HashMap<(usize, u32), SymFunc<C>>,
}

impl<'a, C: Coeff> AdamsPowers<'a, C> {
    fn new(h: &'a SymFunc<C>) -> Self {
        AdamsPowers {
            h,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, i: usize, m: u32) -> &SymFunc<C> {
        if !self.cache.contains_key(&(i, m)) {
            let value = if m == 1 {
                self.h.adams(i)
            } else {
                let base = self.get(i, 1).clone();
                let prev = self.get(i, m - 1).clone();
                &prev * &base
            };
            self.cache.insert((i, m), value);
        }
        &self.cache[&(i, m)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{integer, LaurentPoly, Rational};
    use crate::symfunc::ExponentVector;
    use proptest::prelude::*;

    type L = SymFunc<LaurentPoly>;
    type R = SymFunc<Rational>;

    #[test]
    fn identity_substitution() {
        let p2 = R::p(2, 4);
        let p1 = R::p(1, 4);
        assert_eq!(p2.plethysm(&p1).unwrap(), p2);
    }

    #[test]
    fn q_is_dilated() {
        let p2 = L::p(2, 4);
        let qp1 = L::monomial(ExponentVector::single(1), LaurentPoly::q(), 4);
        let expected = L::monomial(ExponentVector::single(2), LaurentPoly::q_pow(2), 4);
        assert_eq!(p2.plethysm(&qp1).unwrap(), expected);
    }

    #[test]
    fn rejects_constant_inner() {
        let p1 = R::p(1, 3);
        assert!(p1.plethysm(&R::constant(integer(1), 3)).is_err());
    }

    #[test]
    fn exp_log_of_lie_character() {
        // exp(sum_k p_k/k) - 1 composed with the Lie character solves the
        // univariate specialization -ln(1 + exp(-x) - 1) = x.
        let n = 6;
        let h = crate::symfunc::h_series::<Rational>(n);
        let lie = crate::charlib::f_lie_char(n);
        let composed = h.plethysm(&lie).unwrap();
        // (exp(sum p_k/k) - 1) o F_L = p_1/(1 - p_1) at p_1 = x
        let spec = composed.specialize_p1();
        for (deg, c) in spec.iter().enumerate().skip(1) {
            assert_eq!(c, &integer(1), "degree {deg}");
        }
    }

    fn arb_series(max_deg: usize) -> impl Strategy<Value = L> {
        let vs = ExponentVector::up_to_degree(max_deg);
        let count = vs.len();
        prop::collection::vec(
            (0..count, -3i64..=3, -2i64..=2, 1i64..=2),
            0..6,
        )
        .prop_map(move |terms| {
            L::from_terms(
                terms.into_iter().map(|(i, c, e, d)| {
                    (
                        vs[i].clone(),
                        LaurentPoly::monomial(Rational::new(c.into(), d.into()), e),
                    )
                }),
                max_deg,
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn homomorphism_in_first_argument(f in arb_series(5), g in arb_series(5), h in arb_series(5)) {
            let lhs = (&f * &g).plethysm(&h).unwrap();
            let rhs = &f.plethysm(&h).unwrap() * &g.plethysm(&h).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&f + &g).plethysm(&h).unwrap();
            let rhs = &f.plethysm(&h).unwrap() + &g.plethysm(&h).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn associativity(f in arb_series(5), g in arb_series(5), h in arb_series(5)) {
            let lhs = f.plethysm(&g).unwrap().plethysm(&h).unwrap();
            let rhs = f.plethysm(&g.plethysm(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn p1_is_two_sided_identity(f in arb_series(5)) {
            let p1 = L::p(1, 5);
            prop_assert_eq!(f.plethysm(&p1).unwrap(), f.clone());
            let g = &f - &L::constant(f.constant_term(), 5);
            prop_assert_eq!(p1.plethysm(&g).unwrap(), g);
        }

        #[test]
        fn epsilon_is_involution(f in arb_series(5)) {
            prop_assert_eq!(f.epsilon().epsilon(), f);
        }
    }
}
