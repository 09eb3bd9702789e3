//! Combinatorics of the BGG category O for the periplectic Lie superalgebra
//! pe(n): weight arithmetic over exact rationals, the symmetric Weyl group,
//! Kazhdan-Lusztig polynomials, Grothendieck-group characters, block
//! classification, odd reflections between Borel subalgebras, and the
//! Jantzen-middle semisimplicity verdict per block.

pub mod blocks;
pub mod characters;
pub mod cli;
pub mod error;
pub mod jantzen;
pub mod kl;
pub mod odd_reflections;
pub mod structure;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};

/// Exact rational scalar used for all weight coordinates.
pub type Rat = num::rational::Rational64;
