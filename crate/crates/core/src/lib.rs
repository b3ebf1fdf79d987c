//! Finite-dimensional probabilistic models and Euclidean Jordan algebras.
//!
//! The crate builds the four non-exceptional families of formally real Jordan
//! algebras (and direct sums), probabilistic models on top of them (plus
//! classical and polytopic models), and numerical checks for the chain of
//! results that recovers Jordan structure from probabilistic axioms:
//! conjugate systems and self-duality, filters and homogeneity, recovery of
//! the Jordan product from spectral data, correlation dilations, and the
//! dagger-compact structure of complex quantum composites.
//!
//! The crate is `no_std` (it needs `alloc`). All randomness is supplied by
//! the caller through [`rand::Rng`].

#![no_std]

extern crate alloc;

pub mod conjugate;
pub mod eja;
pub mod error;
pub mod linalg;
pub mod model;
pub mod monoidal;
pub mod random;
pub mod reconstruction;
pub mod tol;

pub use error::{Error, Result};
