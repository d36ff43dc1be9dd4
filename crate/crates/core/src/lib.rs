//! Matrix-valued classical pairs `(W, D)` for multiplicity-free compact
//! Gelfand pairs of rank one.
//!
//! The crate encodes the catalog of base-change matrices Ψ₀, derives the weight
//! `W(x) = x^β (1−x)^α Ψ₀ᵀ T Ψ₀` and the second-order operator mechanically,
//! and computes the monic matrix orthogonal polynomials by moments and by a
//! matrix ₂H₁ series. All core arithmetic is exact over ℚ.

pub mod branching;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod hyper2h1;
pub mod matfun;
pub mod odekit;
pub mod orthopoly;

pub use error::{Error, Result};
