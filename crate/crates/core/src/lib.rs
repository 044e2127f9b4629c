//! Exact multi-parameter Hall–Littlewood functions and Kostka functions
//! attached to r-tuples of partitions.
//!
//! The coefficient ring of everything is `Z[t₁, …, t_r]` ([`TPoly`]).  The
//! polynomial core is generic over the scalar type ([`poly::Scalar`]); the
//! aliases below fix the concrete rings used throughout.

pub mod combinat;
pub mod error;
pub mod frac;
pub mod hl;
pub mod kostka;
pub mod poly;
pub mod symfunc;
pub mod verify;

pub use combinat::{Composition, Partition, RPartition};
pub use error::{Error, Result};

/// Polynomials in the parameters `t₁, …, t_r` with big-integer coefficients.
pub type TPoly = poly::Poly<num_bigint::BigInt>;

/// Polynomials in the x-variables whose coefficients are parameter polynomials.
pub type XPoly = poly::Poly<TPoly>;

/// Rational functions in the parameters.
pub type TFrac = frac::Frac;
