//! Phase retrieval from Gaussian coded diffraction patterns, and the sampling
//! theory of analytic trigonometric polynomials.

pub mod ambiguity;
pub mod cli;
pub mod equivalence;
pub mod error;
pub mod experiments;
pub mod grid_signal;
pub mod io;
pub mod measurement;
pub mod reconstruct;
pub mod trigpoly;

pub use equivalence::{EquivalenceVerdict, VerdictKind};
pub use error::{Error, Result};
