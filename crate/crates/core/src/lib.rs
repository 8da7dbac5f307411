#![allow(clippy::needless_range_loop)]

//! Parabolic Tamari lattices, parabolic noncrossing and nonnesting partitions, and
//! the aligned-element machinery for Coxeter groups given by exact reflection
//! representations.

pub mod align;
pub mod cli;
pub mod coxeter;
pub mod dihedral;
pub mod error;
pub mod partition;
pub mod perm;
pub mod poset;
pub mod ring;
pub mod rootposet;
pub mod subword;
pub mod tables;
pub mod tamari;

pub use error::{Error, Result};
