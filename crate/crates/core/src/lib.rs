//! Partitions into exactly two part sizes.
//!
//! Enumeration and three independent counts of `ν₂(n)`, the parity-class
//! decomposition of two-size partitions of `n ≡ 2 (mod 4)`, the involutions
//! that pair those classes up, and a harness that checks the resulting
//! congruences (`ν₂(16j+14) ≡ 0 mod 4` and its refinements) at concrete `n`.

pub mod arith;
pub mod classes;
pub mod error;
pub mod identities;
pub mod maps;
pub mod partitions;

pub use error::{Error, Result};
