//! Exact-arithmetic obstructions to smooth sliceness for (2n,1)-cables of the
//! figure-eight knot.
//!
//! The computation chain: Seifert invariants of the Brieskorn spheres
//! `Sigma(2^k, 2^k*m, q)` ([`plumbing`]), their negative-definite plumbing
//! lattices with signatures, Wu classes and the Neumann-Siebenmann mu-bar
//! invariant ([`lattice`]), Levine-Tristram signatures of torus knots by jump
//! counting ([`lt_signature`]), homology of cyclic branched covers of surfaces
//! in punctured connected sums of CP^2 ([`cover`]), and finally kappa-type
//! concordance bounds assembled from a 10/8-style inequality ([`obstruction`]).
//!
//! Everything is computed over arbitrary-precision integers and rationals; no
//! floating point appears anywhere, so every reported value is exact.

pub mod cli;
pub mod cover;
pub mod exact;
pub mod lattice;
pub mod lt_signature;
pub mod obstruction;
pub mod plumbing;
pub mod selftest;

mod error;

pub use error::{Error, Result};
pub use exact::Rational;
