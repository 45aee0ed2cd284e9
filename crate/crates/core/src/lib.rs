//! Exact computation and verification toolkit for definite fillings of
//! Dehn surgeries: correction terms of lens spaces and knot surgeries,
//! characteristic-covector minima of positive definite integral lattices,
//! and the obstruction/standardness/sharpness verdicts built from them.
//! All verdict-bearing arithmetic is done with arbitrary-precision
//! integers and exact rationals.

mod error;

pub mod knot;
pub mod lattice;
pub mod lens;
pub mod rational;
pub mod surgery;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{
    CharCovector, CosetEntry, CosetLabel, CosetMinima, CosetModulus, DiscriminantGroup,
    GramLattice, MinResult, OwensStrleReport, SplitVerdict,
};
pub use rational::Rational;
