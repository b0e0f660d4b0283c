//! Approximate Schauder frames (ASF) and p-ASFs on finite-dimensional
//! ℓ^p spaces.
//!
//! A frame pair couples `n` functionals `f_k` on a `d`-dimensional space 𝒳
//! with `n` vectors `τ_k` in 𝒳. The pair is a p-ASF when the frame operator
//! `S x = Σ f_k(x) τ_k` is invertible; the analysis map `θ_f` sends 𝒳 into a
//! truncated ℓ^p and the synthesis map `θ_τ` sends it back.
//!
//! Modules:
//! - [`spaces`]: ℓ^p spaces, dense linear maps, inversion, rank and
//!   operator p-norm brackets.
//! - [`frames`]: the frame pair, its operators, validation with optimal
//!   bounds, reconstruction, the projection `P` and the factorizations.
//! - [`duality`]: canonical dual, dual criterion, left/right inverse
//!   families and the complete parameterization of duals.
//! - [`similarity`]: witness recovery, the projection criterion and
//!   Parsevalization.
//! - [`orthogonality`]: orthogonal pairs and interpolation of Parseval
//!   frames.
//! - [`generators`]: seeded instance generation and independent oracles.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod duality;
mod error;
pub mod frames;
pub mod generators;
pub mod orthogonality;
pub mod similarity;
pub mod spaces;

pub use error::{Error, Result};
pub use frames::{FramePair, FrameReport, Reconstruction};
pub use spaces::{Exponent, LinearMap, Matrix, NormBound, PNormSpace, Vector};

/// Default singularity / comparison tolerance, relative to the largest
/// matrix entry where a scale is involved.
pub const DEFAULT_TOL: f64 = 1e-9;
