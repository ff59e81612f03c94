//! Closed-form character series and values for `Lie2`, `Com2` and `P2`.
//!
//! The authoritative `Lie2` character is [`f_lie2_char`], built from the
//! explicit coefficient series [`h_series_ll1`]; the `P2` character is its
//! composition with the `Com` character ([`f_p2_char`]). The per-class
//! product formulas in [`product`] are cross-check evaluators.

mod diag;
mod helpers;
pub mod product;
mod multiplicity;
mod residue;
mod series;
mod sl2;
mod table;

pub use diag::{diag_harmonics_value, DiagValue};
pub use helpers::{helper_a, helper_c, helper_d, HelperSeq};
pub use product::{mt_lie2_value, mt_p2_value, FormulaForm};
pub use multiplicity::{multiplicity_report, CheckValue, MultiplicityCheck, MultiplicityReport};
pub use residue::{residue_closed_form, residue_series};
pub use series::{
    f_com2_char, f_com_char, f_lie2_char, f_lie_char, f_p2_char, h_series_ll1, identity_qchar_product,
    ll1_coefficient, series_for,
};
pub use sl2::sl2_decompose;
pub use table::{CharacterTable, ClassValue};
