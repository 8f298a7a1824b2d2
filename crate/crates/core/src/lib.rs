//! Suzuki groups `Sz(q)`, their Sylow 2-subgroups and normalisers, subgroup
//! lattices, exact subgroup permutability degrees and exact-arithmetic
//! certificates for the counting bounds that surround them.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`]: arithmetic in `GF(2^m)` for odd `m`, with the automorphism
//!   `x ↦ x^θ`, `θ = 2^((m+1)/2)`.
//! - [`suzuki`]: the twisted-pair model of the Sylow 2-subgroup, the matrix
//!   generators and the full group `Sz(8)`.
//! - [`group`]: generic finite-group machinery over indexed elements.
//! - [`classcount`]: subspace enumeration and the complement-counting sums.
//! - [`certify`]: exact inequality certificates.
//! - [`szlattice`]: the subgroup-lattice survey of `Sz(8)`.
//!
//! Numeric routines that do not depend on the concrete representation
//! (Gaussian binomials, the quadratic exponent form) are generic over the
//! scalar via `num-traits`; the aliases below fix the exact types used in
//! certificates.

pub mod certify;
pub mod classcount;
pub mod error;
pub mod field;
pub mod group;
pub mod numtheory;
pub mod suzuki;
pub mod szlattice;

pub use error::{Error, Result};

/// Exact non-negative integer used for subgroup counts and bounds.
pub type Int = num_bigint::BigUint;
/// Exact signed integer.
pub type SignedInt = num_bigint::BigInt;
/// Exact rational used for degrees and fractional exponents.
pub type Rational = num_rational::BigRational;
/// The quadratic exponent form evaluated over exact rationals.
pub type ExactQuadratic = certify::quadratic::ExponentForm<Rational>;
/// The quadratic exponent form evaluated in double precision (diagnostics only).
pub type FloatQuadratic = certify::quadratic::ExponentForm<f64>;
