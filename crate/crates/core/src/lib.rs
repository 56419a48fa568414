//! Counting and enumeration of untwisted fission trees, together with the
//! graphs built from them (fission graphs, Stokes quivers and supernova
//! graphs).
//!
//! Counts are exact big integers obtained by iterating the Euler transform.
//! Every count has a brute-force counterpart in [`enumerate`] so the two
//! can be checked against each other; [`verify`] bundles those checks.

pub mod bfile;
pub mod counting;
pub mod enumerate;
mod error;
pub mod graph;
pub mod table;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
