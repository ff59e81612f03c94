use crate::arith::{divisors, mobius};
use crate::rings::{sl2_irreducible_char, LaurentPoly, Rational};

/// Memoized helper sequences
///
/// ```text
/// a_n(q) = mu_n (q^n - q^-n) / (n (q - q^-1))
/// c_n(q) = sum_{d | n} (q^d / d) a_{n/d}(q^d)
/// d_n(q) = sum_{d | n} (1 / d) a_{n/d}(q^d)
/// ```
///
/// for `1 <= n <= max`. Immutable once built.
#[derive(Clone, Debug)]
pub struct HelperSeq {
    a: Vec<LaurentPoly>,
    c: Vec<LaurentPoly>,
    d: Vec<LaurentPoly>,
}

impl HelperSeq {
    pub fn up_to(max: usize) -> Self {
        let max = max.max(1);
        let q_minus_inv = LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]);
        let mut a = vec![LaurentPoly::new()];
        for n in 1..=max {
            let mu = mobius(n);
            let numerator = LaurentPoly::from_int_terms(&[(n as i64, 1), (-(n as i64), -1)])
                .scale(&Rational::from_integer(mu.into()));
            let quotient = numerator
                .exact_div(&q_minus_inv)
                .expect("q - q^-1 divides q^n - q^-n");
            debug_assert!(mu == 0 || quotient == sl2_irreducible_char(n).unwrap().scale(&Rational::from_integer(mu.into())));
            a.push(quotient.scale(&Rational::new(1.into(), n.into())));
        }
        let mut c = vec![LaurentPoly::new()];
        let mut d = vec![LaurentPoly::new()];
        for n in 1..=max {
            let mut cn = LaurentPoly::new();
            let mut dn = LaurentPoly::new();
            for div in divisors(n) {
                let inner = a[n / div].dilate(div as u32);
                let inv = Rational::new(1.into(), div.into());
                cn += inner.shift(div as i64).scale(&inv);
                dn += inner.scale(&inv);
            }
            c.push(cn);
            d.push(dn);
        }
        HelperSeq { a, c, d }
    }

    pub fn max(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self, n: usize) -> &LaurentPoly {
        assert!(n >= 1 && n <= self.max(), "helper index {n} out of range");
        &self.a[n]
    }

    pub fn c(&self, n: usize) -> &LaurentPoly {
        assert!(n >= 1 && n <= self.max(), "helper index {n} out of range");
        &self.c[n]
    }

    pub fn d(&self, n: usize) -> &LaurentPoly {
        assert!(n >= 1 && n <= self.max(), "helper index {n} out of range");
        &self.d[n]
    }
}

pub fn helper_a(n: usize) -> LaurentPoly {
    HelperSeq::up_to(n).a(n).clone()
}

pub fn helper_c(n: usize) -> LaurentPoly {
    HelperSeq::up_to(n).c(n).clone()
}

pub fn helper_d(n: usize) -> LaurentPoly {
    HelperSeq::up_to(n).d(n).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::ratio;

    #[test]
    fn small_values() {
        assert_eq!(helper_a(1), LaurentPoly::from_int(1));
        assert_eq!(
            helper_a(2),
            LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]).scale(&ratio(-1, 2))
        );
        assert_eq!(helper_c(1), LaurentPoly::q());
        assert_eq!(helper_d(1), LaurentPoly::from_int(1));
        assert_eq!(helper_c(2), LaurentPoly::constant(ratio(-1, 2)));
        assert_eq!(helper_a(4), LaurentPoly::new());
    }

    #[test]
    fn a_is_exact_up_to_thirty() {
        let h = HelperSeq::up_to(30);
        for n in 1..=30 {
            let mu = mobius(n);
            let expected = sl2_irreducible_char(n)
                .unwrap()
                .scale(&ratio(mu as i64, n as i64));
            assert_eq!(h.a(n), &expected);
        }
    }

    #[test]
    fn c_degree_bound() {
        // deg c_1 = 1, deg c_s <= s - 2 otherwise
        let h = HelperSeq::up_to(12);
        assert_eq!(h.c(1).max_exp(), Some(1));
        for s in 2..=12 {
            if let Some(top) = h.c(s).max_exp() {
                assert!(top <= s as i64 - 2, "c_{s} = {}", h.c(s));
            }
        }
    }
}
