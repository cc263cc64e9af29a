//! Exact symmetric functions over `Q(q,t)`.
//!
//! The crate covers partition combinatorics, the classical bases with Hall
//! pairing and Littlewood-Richardson coefficients, umbral bases seeded by delta
//! series, Macdonald polynomials, and exact checkers for a family of
//! generating-function identities and their supporting rational lemmas.

pub mod error;
pub mod qt;

pub use error::{Error, Result};
pub mod partitions;
pub mod symmetric;
pub mod umbral;
pub mod macdonald;
pub mod identities;
pub mod cli;
