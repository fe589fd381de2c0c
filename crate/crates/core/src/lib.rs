//! Exact algebra for Novikov complexes, Lefschetz zeta functions and
//! Whitehead torsion of based chain complexes.
//!
//! Everything here is `no_std` (with `alloc`); file formats and the command
//! line live in the companion `novikov` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod complexes;
pub mod error;
pub mod morse_novikov;
#[cfg(feature = "testkit")]
pub mod testkit;
pub mod torsion_theorem;
pub mod zeta;

pub use error::{Error, Result};
