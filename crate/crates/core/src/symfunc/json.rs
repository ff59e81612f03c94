//! `{"truncation": N, "kind": "rational"|"laurent", "terms": [{"exponents": [...], "coeff": ...}]}`

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Coeff, ExponentVector, SymFunc};

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u32>,
    coeff: Value,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    truncation: usize,
    kind: String,
    terms: Vec<TermJson>,
}

impl<C: Coeff> Serialize for SymFunc<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFuncJson {
            truncation: self.truncation(),
            kind: C::KIND.name().to_string(),
            terms: self
                .terms()
                .map(|(v, c)| TermJson {
                    exponents: v.multiplicities().to_vec(),
                    coeff: c.to_json(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for SymFunc<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(deserializer)?;
        if raw.kind != C::KIND.name() {
            return Err(de::Error::custom(format!(
                "expected kind `{}`, found `{}`",
                C::KIND.name(),
                raw.kind
            )));
        }
        let mut f = SymFunc::zero(raw.truncation);
        for t in raw.terms {
            let v = ExponentVector::new(t.exponents);
            if v.degree() > raw.truncation {
                return Err(de::Error::custom(format!(
                    "term {v} exceeds truncation {}",
                    raw.truncation
                )));
            }
            let c = C::from_json(&t.coeff).map_err(de::Error::custom)?;
            f.add_term(v, c);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{ratio, LaurentPoly, Rational};

    #[test]
    fn laurent_round_trip_is_byte_identical() {
        let f = crate::charlib::f_lie2_char(4);
        let s = serde_json::to_string(&f).unwrap();
        let back: SymFunc<LaurentPoly> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn rational_layout() {
        let f = SymFunc::<Rational>::from_terms(
            [(ExponentVector::new(vec![2]), ratio(1, 2)), (ExponentVector::new(vec![0, 1]), ratio(-1, 2))],
            2,
        );
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"truncation":2,"kind":"rational","terms":[{"exponents":[2],"coeff":"1/2"},{"exponents":[0,1],"coeff":"-1/2"}]}"#
        );
    }

    #[test]
    fn kind_mismatch_rejected() {
        let f = SymFunc::<Rational>::p(1, 2);
        let s = serde_json::to_string(&f).unwrap();
        assert!(serde_json::from_str::<SymFunc<LaurentPoly>>(&s).is_err());
    }
}
