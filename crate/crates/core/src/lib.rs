//! Exact characters of the operads of two compatible Lie brackets (`Lie2`),
//! two compatible commutative products (`Com2`) and bihamiltonian algebras
//! (`P2`).
//!
//! Every number in this crate is an exact rational or a Laurent polynomial in
//! the torus variable `q` of `SL2`. Characters are computed along three
//! independent routes that are cross-checked against each other:
//!
//! * closed-form series ([`charlib`]),
//! * inversion of the Koszul functional equation ([`genfun`]),
//! * a brute-force quotient of the free algebra ([`freealg`]).
//!
//! [`basis`] holds the recursive monomial basis and [`poset`] the operadic
//! partition posets of `Com2` with their homology.

pub mod arith;
pub mod basis;
pub mod charlib;
pub mod error;
pub mod freealg;
pub mod genfun;
pub mod linalg;
pub mod par;
pub mod poset;
pub mod report;
pub mod rings;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use rings::{LaurentPoly, Rational};
pub use symfunc::{Coeff, CycleType, ExponentVector, SymFunc};

/// The two operads whose characters are computed by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operad {
    Lie2,
    P2,
    Com2,
}

impl Operad {
    pub fn name(self) -> &'static str {
        match self {
            Operad::Lie2 => "lie2",
            Operad::P2 => "p2",
            Operad::Com2 => "com2",
        }
    }
}

impl std::str::FromStr for Operad {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lie2" => Ok(Operad::Lie2),
            "p2" => Ok(Operad::P2),
            "com2" => Ok(Operad::Com2),
            other => Err(Error::InvalidArgument(format!("unknown operad `{other}`"))),
        }
    }
}
