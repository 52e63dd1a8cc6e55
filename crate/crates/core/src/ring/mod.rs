//! Exact arithmetic in the localized equivariant Grothendieck ring with
//! square roots of the Lefschetz motive.
//!
//! Elements are integer combinations of [`Term`]s. A term carries a
//! Lefschetz power `L^{p/2}`, a multiset of atoms (at most one of them with
//! nontrivial monodromy) and a set of Z/2-bundle unit symbols `U(g)` that
//! multiply by symmetric difference.

mod class;
mod halfint;
mod parse;
mod print;
mod specialize;
mod table;

pub use class::{upsilon, upsilon_from_cover, AtomKey, MotivicClass, Term};
pub use halfint::HalfInt;
pub use parse::parse;
pub use specialize::{euler_specialize, weight_specialize, WeightPolynomial};
pub use table::{Atom, AtomDef, AtomTable, BundleGenerator};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("bad exponent at position {pos}: {msg}")]
    BadExponent { pos: usize, msg: String },
    #[error("unknown atom [{0}]")]
    UnknownAtom(String),
    #[error("unknown bundle generator U({0})")]
    UnknownUnit(String),
    #[error("cannot form [{left}] ⊙ [{right}]: both factors carry nontrivial monodromy")]
    UnsupportedSmash { left: String, right: String },
    #[error("the base of Υ must not carry unit symbols")]
    BaseHasUnits,
    #[error("atom [{0}] has no declared Euler characteristic")]
    MissingEuler(String),
    #[error("atom [{0}] has no declared Poincaré polynomial")]
    MissingPoincare(String),
    #[error("atom [{0}] carries monodromy; the weight polynomial is undefined")]
    MonodromicAtom(String),
    #[error("unit U({0}) has no weight polynomial")]
    UnitPresent(String),
    #[error("atom table: {0}")]
    Table(String),
}
