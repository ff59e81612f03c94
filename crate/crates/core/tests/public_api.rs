use std::collections::BTreeMap;

use lie2_core::charlib::{diag_harmonics_value, f_lie2_char, f_p2_char, sl2_decompose, CharacterTable};
use lie2_core::genfun::{invert_univariate, UnivariateSeries};
use lie2_core::report::VerificationReport;
use lie2_core::rings::ratio;
use lie2_core::verify::{run_suite, Suite, VerifyOptions};
use lie2_core::{CycleType, LaurentPoly, Operad, Rational};

#[test]
fn identity_of_s3_splits_into_irreducibles() {
    let chi = f_lie2_char(3).char_value(CycleType::identity(3).exponents()).unwrap();
    assert_eq!(chi, LaurentPoly::from_int_terms(&[(2, 2), (0, 5), (-2, 2)]));
    assert_eq!(sl2_decompose(&chi).unwrap(), BTreeMap::from([(1, 3), (3, 2)]));
    assert!(sl2_decompose(&LaurentPoly::from_int_terms(&[(1, 1)])).is_err());
}

#[test]
fn diagonal_harmonics_on_the_identity() {
    for n in 1..=6usize {
        let v = diag_harmonics_value(&CycleType::identity(n));
        assert_eq!(v.eval_at_one(), Rational::from_integer(((n + 1).pow(n as u32 - 1)).into()));
    }
}

#[test]
fn univariate_inverse_of_exp_minus_one() {
    // f(-g(-x)) = x for f = e^x - 1 gives g = -ln(1 - x)
    let f = UnivariateSeries::new((1..=6).map(|k| ratio(1, (1..=k).product::<i64>())).collect::<Vec<Rational>>());
    let g = invert_univariate(&f).unwrap();
    let expected: Vec<Rational> = (1..=6i64).map(|k| ratio(1, k)).collect();
    assert_eq!(g.coeffs(), &expected[..]);
}

#[test]
fn report_json_roundtrip() {
    let report = run_suite(Suite::Dims, &VerifyOptions::new(3), &mut |_| {}).unwrap();
    assert!(report.pass);
    let json = serde_json::to_string(&report).unwrap();
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), json);
}

#[test]
fn table_json_roundtrip() {
    let t = CharacterTable::from_series(Operad::P2, 4, &f_p2_char(4), None).unwrap();
    let json = serde_json::to_string_pretty(&t).unwrap();
    let back: CharacterTable = serde_json::from_str(&json).unwrap();
    assert_eq!(back, t);
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
}
