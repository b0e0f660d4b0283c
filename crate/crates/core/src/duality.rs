//! Dual p-ASFs.
//!
//! `(g, ω)` is a dual of `(f, τ)` when `θ_τ θ_g = θ_ω θ_f = I`. Every dual is
//! reached by the parameterization
//!
//! ```text
//! G = F S⁻¹ + (I − P) U        Ω = S⁻¹ T + V (I − P)
//! ```
//!
//! with `P = F S⁻¹ T`, provided the gate operator
//! `S⁻¹ + VU − V F S⁻¹ T U` (the candidate's own frame operator) is
//! invertible.

use crate::frames::{FramePair, FrameReport};
use crate::spaces::{LinearMap, Matrix, NormBound};
use crate::{Error, Result};

/// Agreement required between the directly expanded gate operator and the
/// candidate's frame operator, relative to their scale.
const GATE_CROSS_CHECK: f64 = 1e-10;

/// A dual candidate, with the parameters that generated it when known.
#[derive(Clone, Debug, PartialEq)]
pub struct DualCandidate {
    pub frame: FramePair,
    pub u_param: Option<LinearMap>,
    pub v_param: Option<LinearMap>,
    /// Reciprocal condition estimate of the gate operator.
    pub gate_rcond: Option<f64>,
}

/// `(f_k S⁻¹, S⁻¹ τ_k)`.
pub fn canonical_dual(frame: &FramePair, tol: f64) -> Result<FramePair> {
    let (_, inv) = frame.inverse_frame_operator(tol)?;
    let s_inv = inv.inverse.matrix();
    frame.with_elements(frame.functionals() * s_inv, s_inv * frame.vectors())
}

/// `θ_τ θ_g ≈ I` and `θ_ω θ_f ≈ I`, entrywise within `tol`.
pub fn is_dual(frame: &FramePair, cand: &FramePair, tol: f64) -> Result<bool> {
    if !frame.same_spaces(cand) {
        return Err(Error::SpaceMismatch);
    }
    let left = frame.vectors() * cand.functionals();
    let right = cand.vectors() * frame.functionals();
    Ok(left.max_abs_diff_identity() <= tol && right.max_abs_diff_identity() <= tol)
}

// S⁻¹, F S⁻¹ and S⁻¹ T, shared by the inverse families. The n×n
// projection is never formed: (I − P) U = U − F S⁻¹ (T U) keeps the large
// entries of P out of the rounding.
struct Pieces {
    s_inv: Matrix,
    f_s_inv: Matrix,
    s_inv_t: Matrix,
}

fn pieces(frame: &FramePair, tol: f64) -> Result<Pieces> {
    let (_, inv) = frame.inverse_frame_operator(tol)?;
    let s_inv = inv.inverse.into_matrix();
    let f_s_inv = frame.functionals() * &s_inv;
    let s_inv_t = &s_inv * frame.vectors();
    Ok(Pieces {
        s_inv,
        f_s_inv,
        s_inv_t,
    })
}

fn check_u(frame: &FramePair, u: &LinearMap) -> Result<()> {
    if u.matrix().shape() != (frame.count(), frame.dim()) {
        return Err(Error::DimensionMismatch {
            context: "U must map X into the sequence space",
            expected: frame.count() * frame.dim(),
            found: u.matrix().rows() * u.matrix().cols(),
        });
    }
    Ok(())
}

fn check_v(frame: &FramePair, v: &LinearMap) -> Result<()> {
    if v.matrix().shape() != (frame.dim(), frame.count()) {
        return Err(Error::DimensionMismatch {
            context: "V must map the sequence space into X",
            expected: frame.dim() * frame.count(),
            found: v.matrix().rows() * v.matrix().cols(),
        });
    }
    Ok(())
}

fn right_inverse(frame: &FramePair, pc: &Pieces, u: &Matrix) -> Matrix {
    let correction = &pc.f_s_inv * &(frame.vectors() * u);
    &(&pc.f_s_inv - &correction) + u
}

fn left_inverse(frame: &FramePair, pc: &Pieces, v: &Matrix) -> Matrix {
    let correction = &(v * frame.functionals()) * &pc.s_inv_t;
    &(&pc.s_inv_t - &correction) + v
}

/// `R = θ_f S⁻¹ + (I − P) U`, a right inverse of `θ_τ`.
pub fn right_inverse_from(frame: &FramePair, u: &LinearMap, tol: f64) -> Result<LinearMap> {
    check_u(frame, u)?;
    let pc = pieces(frame, tol)?;
    LinearMap::new(
        *frame.x_space(),
        *frame.seq_space(),
        right_inverse(frame, &pc, u.matrix()),
    )
}

/// `L = S⁻¹ θ_τ + V (I − P)`, a left inverse of `θ_f`.
pub fn left_inverse_from(frame: &FramePair, v: &LinearMap, tol: f64) -> Result<LinearMap> {
    check_v(frame, v)?;
    let pc = pieces(frame, tol)?;
    LinearMap::new(
        *frame.seq_space(),
        *frame.x_space(),
        left_inverse(frame, &pc, v.matrix()),
    )
}

/// Builds the dual generated by `(U, V)`:
///
/// ```text
/// g_k = f_k S⁻¹ + h_k U − f_k S⁻¹ θ_τ U
/// ω_k = S⁻¹ τ_k + V e_k − V θ_f S⁻¹ τ_k
/// ```
///
/// Fails with `GateSingular` when `S⁻¹ + VU − V θ_f S⁻¹ θ_τ U` is singular.
pub fn dual_from_parameters(
    frame: &FramePair,
    u: &LinearMap,
    v: &LinearMap,
    tol: f64,
) -> Result<DualCandidate> {
    check_u(frame, u)?;
    check_v(frame, v)?;
    let pc = pieces(frame, tol)?;
    let (um, vm) = (u.matrix(), v.matrix());

    let g = right_inverse(frame, &pc, um);
    let omega = left_inverse(frame, &pc, vm);

    let vu = vm * um;
    let vf = vm * frame.functionals();
    let tu = frame.vectors() * um;
    let gate = &(&pc.s_inv + &vu) - &(&vf * &(&pc.s_inv * &tu));

    let direct = &omega * &g;
    let scale = gate.max_abs().max(1.0);
    let residual = gate.max_abs_diff(&direct);
    if residual > GATE_CROSS_CHECK * scale {
        return Err(Error::CrossCheckFailed {
            check: "gate operator vs candidate frame operator",
            residual,
        });
    }

    let gate_map = LinearMap::new(*frame.x_space(), *frame.x_space(), gate)?;
    let gate_rcond = match gate_map.invert(tol) {
        Ok(inv) => inv.rcond,
        Err(Error::Singular { .. }) => return Err(Error::GateSingular),
        Err(e) => return Err(e),
    };

    Ok(DualCandidate {
        frame: frame.with_elements(g, omega)?,
        u_param: Some(u.clone()),
        v_param: Some(v.clone()),
        gate_rcond: Some(gate_rcond),
    })
}

/// `(θ_g, θ_ω)`: parameters that regenerate `dual` through
/// [`dual_from_parameters`].
pub fn parameters_from_dual(
    frame: &FramePair,
    dual: &FramePair,
    tol: f64,
) -> Result<(LinearMap, LinearMap)> {
    if !is_dual(frame, dual, tol)? {
        return Err(Error::NotDual);
    }
    Ok((dual.analysis_operator(), dual.synthesis_operator()))
}

/// Sufficient condition for a unique dual: `count = dim`, the vectors form a
/// basis and `f_k(τ_j) = δ_kj`.
pub fn has_unique_dual(frame: &FramePair, tol: f64) -> bool {
    if frame.count() != frame.dim() {
        return false;
    }
    if frame.vectors().inverse(tol).is_err() {
        return false;
    }
    (frame.functionals() * frame.vectors()).max_abs_diff_identity() <= tol
}

/// Bounds `(1/b, 1/a)` of the canonical dual from a frame's report.
pub fn canonical_dual_bounds(report: &FrameReport) -> (NormBound, NormBound) {
    (
        report.upper_bound.reciprocal(),
        report.lower_bound.reciprocal(),
    )
}
