//! Exact-arithmetic computations in equivariant Spin^c index theory for
//! compact Lie groups of small rank (tori, SU(2), U(2), SU(3)).
//!
//! The crate is organized around five layers:
//!
//! - [`lie`]: root systems, Weyl groups and weight-lattice arithmetic,
//!   all over exact rationals;
//! - [`orbits`]: admissible coadjoint orbit calculus (shifts, ancestors,
//!   orbit quantization, the magical inequality);
//! - [`characters`]: finite characters of the group, window-queryable
//!   formal characters of a torus, and holomorphic induction;
//! - [`fixedpoint`]: equivariant indices of abstract torus manifolds given
//!   by isolated fixed-point data, globally and localized per component
//!   of the Kirwan-vector-field zero set;
//! - [`reduction`]: reduced-space quantization, the `[Q,R] = 0` verifier,
//!   Kirwan images and the signed Duistermaat-Heckman density.
//!
//! [`catalog`] builds the worked examples (projective line, a product of
//! two projective lines, Hirzebruch surfaces, an SU(3) partial flag
//! manifold) together with their golden characters.
//!
//! No floating point is used anywhere; every coordinate, pairing and
//! multiplicity is an exact rational or integer.

pub mod catalog;
pub mod characters;
pub mod error;
pub mod export;
pub mod fixedpoint;
pub mod geometry;
pub mod lie;
pub mod orbits;
pub mod rat;
pub mod reduction;

pub use error::{Error, Result};
pub use rat::Rat;
