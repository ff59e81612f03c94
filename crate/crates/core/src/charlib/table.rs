use serde::{Deserialize, Serialize};

use crate::rings::LaurentPoly;
use crate::symfunc::{CycleType, SymFunc};
use crate::{par, Operad, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassValue {
    pub cycle_type: CycleType,
    pub value: LaurentPoly,
}

/// Character values of one arity component on a list of classes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub operad: String,
    pub n: usize,
    pub classes: Vec<ClassValue>,
}

impl CharacterTable {
    /// Reads the values off a character series; every class of `S_n` when
    /// `classes` is `None`.
    pub fn from_series(
        operad: Operad,
        n: usize,
        series: &SymFunc<LaurentPoly>,
        classes: Option<Vec<CycleType>>,
    ) -> Result<Self> {
        let classes = classes.unwrap_or_else(|| CycleType::all(n));
        let values = par::try_map(&classes, |c| series.char_value(c.exponents()))?;
        Ok(Self::from_values(operad, n, classes.into_iter().zip(values)))
    }

    pub fn from_values(
        operad: Operad,
        n: usize,
        values: impl IntoIterator<Item = (CycleType, LaurentPoly)>,
    ) -> Self {
        CharacterTable {
            operad: operad.name().to_string(),
            n,
            classes: values
                .into_iter()
                .map(|(cycle_type, value)| ClassValue { cycle_type, value })
                .collect(),
        }
    }

    /// Two aligned columns: cycle type and value.
    pub fn render_text(&self) -> String {
        let width = self
            .classes
            .iter()
            .map(|c| c.cycle_type.to_string().len())
            .max()
            .unwrap_or(0)
            .max("class".len());
        let mut out = format!("{} n={}\n{:<width$}  value\n", self.operad, self.n, "class");
        for c in &self.classes {
            out.push_str(&format!("{:<width$}  {}\n", c.cycle_type.to_string(), c.value));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlib::f_lie2_char;

    #[test]
    fn json_layout_and_roundtrip() {
        let t = CharacterTable::from_series(Operad::Lie2, 2, &f_lie2_char(2), None).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"operad":"lie2","n":2,"classes":[{"cycle_type":[2],"value":{"-1":"1","1":"1"}},{"cycle_type":[0,1],"value":{"-1":"-1","1":"-1"}}]}"#
        );
        let back: CharacterTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn text_render() {
        let t = CharacterTable::from_series(Operad::Lie2, 2, &f_lie2_char(2), None).unwrap();
        let text = t.render_text();
        assert!(text.contains("[0,1]  -q - q^-1"), "{text}");
    }
}
