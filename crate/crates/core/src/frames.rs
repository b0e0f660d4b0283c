//! Frame pairs `({f_k}, {τ_k})` and their operators.
//!
//! Functionals are stored row-wise (`n × d`, row `k` is `f_k`) and vectors
//! column-wise (`d × n`, column `k` is `τ_k`), so the analysis operator
//! `θ_f` and synthesis operator `θ_τ` are literally the stored matrices.

use crate::spaces::{Inversion, LinearMap, Matrix, NormBound, PNormSpace, Vector};
use crate::{Error, Result};

/// `n` functionals on 𝒳 together with `n` vectors of 𝒳.
#[derive(Clone, Debug, PartialEq)]
pub struct FramePair {
    x_space: PNormSpace,
    seq_space: PNormSpace,
    functionals: Matrix,
    vectors: Matrix,
}

/// Outcome of [`FramePair::validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct FrameReport {
    /// `S = θ_τ θ_f`.
    pub frame_op: LinearMap,
    pub frame_op_inv: LinearMap,
    /// Reciprocal 1-norm condition estimate of `S`.
    pub rcond: f64,
    /// Optimal lower bound `‖S⁻¹‖⁻¹`.
    pub lower_bound: NormBound,
    /// Optimal upper bound `‖S‖`.
    pub upper_bound: NormBound,
    /// `max|S − I| ≤ tol`.
    pub parseval: bool,
    /// `rank θ_f = d`.
    pub analysis_injective: bool,
    /// `rank θ_τ = d`.
    pub synthesis_surjective: bool,
    pub tol: f64,
}

/// Both reconstruction formulas evaluated at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct Reconstruction {
    /// `Σ (f_k S⁻¹)(x) τ_k`
    pub via_dual_functionals: Vector,
    /// `Σ f_k(x) S⁻¹ τ_k`
    pub via_dual_vectors: Vector,
    pub residual_functionals: f64,
    pub residual_vectors: f64,
}

impl FramePair {
    /// `functionals` is `n × d`, `vectors` is `d × n`.
    pub fn new(
        x_space: PNormSpace,
        seq_space: PNormSpace,
        functionals: Matrix,
        vectors: Matrix,
    ) -> Result<Self> {
        let (d, n) = (x_space.dim(), seq_space.dim());
        if functionals.shape() != (n, d) {
            return Err(Error::DimensionMismatch {
                context: "functionals must be count x dim",
                expected: n * d,
                found: functionals.rows() * functionals.cols(),
            });
        }
        if vectors.shape() != (d, n) {
            return Err(Error::DimensionMismatch {
                context: "vectors must be dim x count",
                expected: d * n,
                found: vectors.rows() * vectors.cols(),
            });
        }
        Ok(FramePair {
            x_space,
            seq_space,
            functionals,
            vectors,
        })
    }

    /// Same spaces as `self`, new elements.
    pub fn with_elements(&self, functionals: Matrix, vectors: Matrix) -> Result<FramePair> {
        FramePair::new(self.x_space, self.seq_space, functionals, vectors)
    }

    #[inline]
    pub fn x_space(&self) -> &PNormSpace {
        &self.x_space
    }

    #[inline]
    pub fn seq_space(&self) -> &PNormSpace {
        &self.seq_space
    }

    /// Dimension `d` of 𝒳.
    #[inline]
    pub fn dim(&self) -> usize {
        self.x_space.dim()
    }

    /// Number `n` of frame elements.
    #[inline]
    pub fn count(&self) -> usize {
        self.seq_space.dim()
    }

    #[inline]
    pub fn functionals(&self) -> &Matrix {
        &self.functionals
    }

    #[inline]
    pub fn vectors(&self) -> &Matrix {
        &self.vectors
    }

    pub fn same_spaces(&self, other: &FramePair) -> bool {
        self.x_space == other.x_space && self.seq_space == other.seq_space
    }

    /// Entrywise distance between two pairs; infinite across spaces.
    pub fn max_abs_diff(&self, other: &FramePair) -> f64 {
        if !self.same_spaces(other) {
            return f64::INFINITY;
        }
        self.functionals
            .max_abs_diff(&other.functionals)
            .max(self.vectors.max_abs_diff(&other.vectors))
    }

    /// `θ_f : 𝒳 → ℓ^p`, `x ↦ (f_k(x))_k`.
    pub fn analysis_operator(&self) -> LinearMap {
        LinearMap::new(self.x_space, self.seq_space, self.functionals.clone())
            .expect("shape checked at construction")
    }

    /// `θ_τ : ℓ^p → 𝒳`, `a ↦ Σ a_k τ_k`.
    pub fn synthesis_operator(&self) -> LinearMap {
        LinearMap::new(self.seq_space, self.x_space, self.vectors.clone())
            .expect("shape checked at construction")
    }

    /// `S = θ_τ θ_f`.
    pub fn frame_operator(&self) -> LinearMap {
        self.synthesis_operator()
            .compose(&self.analysis_operator())
            .expect("shape checked at construction")
    }

    /// `S` assembled as the sum of rank-one maps `x ↦ f_k(x) τ_k`.
    pub fn frame_operator_by_sum(&self) -> LinearMap {
        let d = self.dim();
        let mut s = Matrix::zeros(d, d);
        for k in 0..self.count() {
            let f = self.functionals.row(k);
            for i in 0..d {
                let tau_i = self.vectors[(i, k)];
                for (j, fj) in f.iter().enumerate() {
                    s[(i, j)] += tau_i * fj;
                }
            }
        }
        LinearMap::new(self.x_space, self.x_space, s).expect("square")
    }

    /// `S` and its inverse, or `NotAFrame` carrying the rank of `S`.
    pub fn inverse_frame_operator(&self, tol: f64) -> Result<(LinearMap, Inversion)> {
        let s = self.frame_operator();
        match s.invert(tol) {
            Ok(inv) => Ok((s, inv)),
            Err(Error::Singular { .. }) => Err(Error::NotAFrame {
                rank: s.rank(tol),
                dim: self.dim(),
            }),
            Err(e) => Err(e),
        }
    }

    /// Checks the p-ASF property and computes optimal bounds
    /// `a = ‖S⁻¹‖⁻¹`, `b = ‖S‖` in the norm of 𝒳.
    pub fn validate(&self, tol: f64) -> Result<FrameReport> {
        let (s, inv) = self.inverse_frame_operator(tol)?;
        let upper_bound = s.operator_norm()?;
        let lower_bound = inv.inverse.operator_norm()?.reciprocal();
        let parseval = s.matrix().max_abs_diff_identity() <= tol;
        let d = self.dim();
        Ok(FrameReport {
            parseval,
            analysis_injective: self.functionals.rank(tol) == d,
            synthesis_surjective: self.vectors.rank(tol) == d,
            frame_op: s,
            frame_op_inv: inv.inverse,
            rcond: inv.rcond,
            lower_bound,
            upper_bound,
            tol,
        })
    }

    /// Evaluates both reconstruction formulas at `x`.
    pub fn reconstruct(&self, x: &Vector, tol: f64) -> Result<Reconstruction> {
        if x.space().dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "reconstruct",
                expected: self.dim(),
                found: x.space().dim(),
            });
        }
        let (_, inv) = self.inverse_frame_operator(tol)?;
        let s_inv = inv.inverse.matrix();

        // coefficients (f_k S⁻¹)(x), synthesized with τ_k
        let coeffs = self.functionals.mul_vec(&s_inv.mul_vec(x.coords())?)?;
        let first = self.vectors.mul_vec(&coeffs)?;

        // coefficients f_k(x), synthesized with S⁻¹τ_k
        let coeffs = self.functionals.mul_vec(x.coords())?;
        let second = (s_inv * &self.vectors).mul_vec(&coeffs)?;

        let first = Vector::new(self.x_space, first)?;
        let second = Vector::new(self.x_space, second)?;
        let x = Vector::new(self.x_space, x.coords().to_vec())?;
        Ok(Reconstruction {
            residual_functionals: first.sub(&x)?.norm(),
            residual_vectors: second.sub(&x)?.norm(),
            via_dual_functionals: first,
            via_dual_vectors: second,
        })
    }

    /// `P = θ_f S⁻¹ θ_τ`, an idempotent on ℓ^p with range `θ_f(𝒳)`.
    pub fn projection(&self, tol: f64) -> Result<LinearMap> {
        let (_, inv) = self.inverse_frame_operator(tol)?;
        let p = &(&self.functionals * inv.inverse.matrix()) * &self.vectors;
        LinearMap::new(self.seq_space, self.seq_space, p)
    }

    /// Builds `f_k = h_k U`, `τ_k = V e_k` from `U : 𝒳 → ℓ^p` and
    /// `V : ℓ^p → 𝒳`. Fails with `NotInvertible` when `VU` is singular.
    pub fn from_factorization(u: &LinearMap, v: &LinearMap, tol: f64) -> Result<FramePair> {
        let vu = v.compose(u)?;
        if vu.domain().dim() != vu.codomain().dim() {
            return Err(Error::DimensionMismatch {
                context: "V·U must act on X",
                expected: u.domain().dim(),
                found: v.codomain().dim(),
            });
        }
        match vu.invert(tol) {
            Ok(_) => {}
            Err(Error::Singular { .. }) => return Err(Error::NotInvertible),
            Err(e) => return Err(e),
        }
        FramePair::new(
            *u.domain(),
            *u.codomain(),
            u.matrix().clone(),
            v.matrix().clone(),
        )
    }

    /// `(U, V) = (θ_f, θ_τ)`, the factorization `S = VU`.
    pub fn factorize(&self, tol: f64) -> Result<(LinearMap, LinearMap)> {
        self.inverse_frame_operator(tol)?;
        Ok((self.analysis_operator(), self.synthesis_operator()))
    }

    /// Factorization through a basis `{ω_k}` of 𝒳 (the columns of `basis`).
    ///
    /// With `g_k` the rows of `basis⁻¹`, returns square `U = basis·θ_f` and
    /// `V = θ_τ·basis⁻¹` so that `f_k = g_k U`, `τ_k = V ω_k` and `VU = S`.
    /// Only defined for `count = dim`.
    pub fn basis_factorization(
        &self,
        basis: &LinearMap,
        tol: f64,
    ) -> Result<(LinearMap, LinearMap)> {
        if self.count() != self.dim() {
            return Err(Error::RequiresSquare {
                dim: self.dim(),
                count: self.count(),
            });
        }
        if basis.matrix().shape() != (self.dim(), self.dim()) {
            return Err(Error::DimensionMismatch {
                context: "basis",
                expected: self.dim(),
                found: basis.matrix().rows(),
            });
        }
        self.inverse_frame_operator(tol)?;
        let basis_inv = basis.matrix().inverse(tol)?;
        let u = basis.matrix() * &self.functionals;
        let v = &self.vectors * &basis_inv;
        Ok((
            LinearMap::new(self.x_space, self.x_space, u)?,
            LinearMap::new(self.x_space, self.x_space, v)?,
        ))
    }
}
