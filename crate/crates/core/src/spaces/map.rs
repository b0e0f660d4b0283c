use super::{operator_norm, Matrix, NormBound, PNormSpace, Vector};
use crate::{Error, Result};

/// A linear map between two [`PNormSpace`]s, stored as a
/// `codomain.dim × domain.dim` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    domain: PNormSpace,
    codomain: PNormSpace,
    matrix: Matrix,
}

/// Result of [`LinearMap::invert`].
#[derive(Clone, Debug, PartialEq)]
pub struct Inversion {
    pub inverse: LinearMap,
    /// Reciprocal condition estimate `1 / (‖A‖₁ ‖A⁻¹‖₁)`.
    pub rcond: f64,
}

impl LinearMap {
    pub fn new(domain: PNormSpace, codomain: PNormSpace, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                context: "map rows vs codomain",
                expected: codomain.dim(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "map columns vs domain",
                expected: domain.dim(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(space: PNormSpace) -> Self {
        LinearMap {
            domain: space,
            codomain: space,
            matrix: Matrix::identity(space.dim()),
        }
    }

    pub fn zero(domain: PNormSpace, codomain: PNormSpace) -> Self {
        LinearMap {
            domain,
            codomain,
            matrix: Matrix::zeros(codomain.dim(), domain.dim()),
        }
    }

    #[inline]
    pub fn domain(&self) -> &PNormSpace {
        &self.domain
    }

    #[inline]
    pub fn codomain(&self) -> &PNormSpace {
        &self.codomain
    }

    #[inline]
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.codomain.dim() != self.domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "compose",
                expected: self.domain.dim(),
                found: inner.codomain.dim(),
            });
        }
        Ok(LinearMap {
            domain: inner.domain,
            codomain: self.codomain,
            matrix: self.matrix.checked_mul(&inner.matrix)?,
        })
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.space().dim() != self.domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "apply",
                expected: self.domain.dim(),
                found: v.space().dim(),
            });
        }
        Vector::new(self.codomain, self.matrix.mul_vec(v.coords())?)
    }

    pub fn rank(&self, tol: f64) -> usize {
        self.matrix.rank(tol)
    }

    /// Inverse map (codomain → domain) with its reciprocal condition
    /// estimate.
    pub fn invert(&self, tol: f64) -> Result<Inversion> {
        let inv = self.matrix.inverse(tol)?;
        let denom = self.matrix.norm_one() * inv.norm_one();
        let rcond = if denom > 0.0 { 1.0 / denom } else { 0.0 };
        Ok(Inversion {
            inverse: LinearMap {
                domain: self.codomain,
                codomain: self.domain,
                matrix: inv,
            },
            rcond,
        })
    }

    pub fn operator_norm(&self) -> Result<NormBound> {
        operator_norm(self)
    }
}
