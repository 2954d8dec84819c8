//! Rational homotopy bookkeeping, free torus-type actions and cohomology
//! rings for biquotients of compact Lie groups.
//!
//! Core routines are generic over exact integer and rational scalars; the
//! aliases below fix the concrete types used by the searches and the CLI.

pub mod classifier;
pub mod cohomology;
pub mod constructions;
pub mod error;
pub mod freeness;
pub mod groebner;
pub mod groups_catalog;
pub mod lattice;
pub mod poly;
pub mod scalar;
pub mod weights_reps;

pub use error::{Error, Result};

/// Integer matrices (index matrices, lattice generators).
pub type IntMatrix = lattice::Matrix<i64>;
/// Subgroups of `Z^r`, read as character lattices.
pub type Lattice = lattice::LatticeSubgroup<i64>;
/// Finite-order torus elements with rational coordinates mod 1.
pub type TorusPoint = lattice::TorusElement<i64>;
/// Polynomials with integer coefficients.
pub type IntPoly = poly::Poly<num_bigint::BigInt>;
/// Polynomials with rational coefficients.
pub type RatPoly = poly::Poly<num_rational::BigRational>;
/// Groebner bases over the rationals.
pub type RatGroebner = groebner::GroebnerBasis<num_rational::BigRational>;
