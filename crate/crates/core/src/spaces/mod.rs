//! Finite-dimensional ℓ^p spaces and the dense linear maps between them.
//!
//! 𝒳 is modelled as ℝ^d with an ℓ^q norm and ℓ^p(ℕ) by its first `n`
//! coordinates; the standard basis `e_k` and coordinate functionals `h_k`
//! of the sequence space are the coordinate vectors and projections.

mod eigen;
mod map;
mod matrix;
mod norm;

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use eigen::symmetric_eigenvalues;
pub use map::{Inversion, LinearMap};
pub use matrix::Matrix;
pub use norm::{lp_norm, operator_norm, NormBound, SEARCH_RESTARTS};

/// A norm exponent `p ∈ [1, ∞]`. Infinity is represented by
/// `f64::INFINITY`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Exponent(f64);

impl Exponent {
    pub const ONE: Exponent = Exponent(1.0);
    pub const TWO: Exponent = Exponent(2.0);
    pub const INFINITY: Exponent = Exponent(f64::INFINITY);

    pub fn new(p: f64) -> Result<Self> {
        if p >= 1.0 {
            Ok(Exponent(p))
        } else {
            // also rejects NaN
            Err(Error::InvalidExponent(p))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_infinite(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// Hölder conjugate `p'` with `1/p + 1/p' = 1`.
    pub fn conjugate(self) -> Exponent {
        if self.0 == 1.0 {
            Exponent::INFINITY
        } else if self.is_infinite() {
            Exponent::ONE
        } else {
            Exponent(self.0 / (self.0 - 1.0))
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// ℝ^dim equipped with the ℓ^p norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PNormSpace {
    dim: usize,
    p: Exponent,
}

impl PNormSpace {
    pub fn new(dim: usize, p: Exponent) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(PNormSpace { dim, p })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn p(&self) -> Exponent {
        self.p
    }

    pub fn zero(&self) -> Vector {
        Vector {
            space: *self,
            coords: alloc::vec![0.0; self.dim],
        }
    }

    /// The k-th coordinate vector `e_k`.
    pub fn basis_vector(&self, k: usize) -> Result<Vector> {
        if k >= self.dim {
            return Err(Error::DimensionMismatch {
                context: "basis index",
                expected: self.dim,
                found: k,
            });
        }
        let mut v = self.zero();
        v.coords[k] = 1.0;
        Ok(v)
    }
}

/// A point of a [`PNormSpace`].
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    space: PNormSpace,
    coords: Vec<f64>,
}

impl Vector {
    pub fn new(space: PNormSpace, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != space.dim {
            return Err(Error::DimensionMismatch {
                context: "vector coordinates",
                expected: space.dim,
                found: coords.len(),
            });
        }
        Ok(Vector { space, coords })
    }

    #[inline]
    pub fn space(&self) -> &PNormSpace {
        &self.space
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    /// Norm in the vector's own space.
    pub fn norm(&self) -> f64 {
        lp_norm(&self.coords, self.space.p)
    }

    /// Coordinate-wise difference; both vectors must share a space.
    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Vector {
            space: self.space,
            coords,
        })
    }
}

/// ℓ^p norm of `v`, measured in `space`.
pub fn vector_norm(space: &PNormSpace, v: &Vector) -> Result<f64> {
    if v.coords.len() != space.dim {
        return Err(Error::DimensionMismatch {
            context: "vector_norm",
            expected: space.dim,
            found: v.coords.len(),
        });
    }
    Ok(lp_norm(&v.coords, space.p))
}
