//! Similarity of p-ASFs.
//!
//! `(g, ω)` is similar to `(f, τ)` when `g_k = f_k ∘ T_fg` and
//! `ω_k = T_τω τ_k` for invertible `T_fg`, `T_τω`. This holds exactly when
//! the projections `P_{f,τ}` and `P_{g,ω}` coincide, and then the witnesses
//! are unique: `T_fg = S⁻¹ θ_τ θ_g` and `T_τω = θ_ω θ_f S⁻¹`.

use crate::frames::FramePair;
use crate::spaces::{LinearMap, Matrix};
use crate::{Error, Result};

/// The pair `(T_fg, T_τω)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityWitness {
    t_fg: LinearMap,
    t_tau_omega: LinearMap,
    invertible: bool,
}

impl SimilarityWitness {
    /// Wraps two maps on 𝒳; `invertible` is decided by attempting both
    /// inversions at `tol`.
    pub fn new(t_fg: LinearMap, t_tau_omega: LinearMap, tol: f64) -> Result<Self> {
        for t in [&t_fg, &t_tau_omega] {
            if !t.matrix().is_square() || t.domain() != t.codomain() {
                return Err(Error::NonSquare {
                    rows: t.matrix().rows(),
                    cols: t.matrix().cols(),
                });
            }
        }
        if t_fg.domain() != t_tau_omega.domain() {
            return Err(Error::SpaceMismatch);
        }
        let invertible = t_fg.invert(tol).is_ok() && t_tau_omega.invert(tol).is_ok();
        Ok(SimilarityWitness {
            t_fg,
            t_tau_omega,
            invertible,
        })
    }

    /// Acts on functionals: `g_k = f_k ∘ T_fg`.
    pub fn t_fg(&self) -> &LinearMap {
        &self.t_fg
    }

    /// Acts on vectors: `ω_k = T_τω τ_k`.
    pub fn t_tau_omega(&self) -> &LinearMap {
        &self.t_tau_omega
    }

    pub fn invertible(&self) -> bool {
        self.invertible
    }
}

/// Closed-form witness candidates `T_fg = S₁⁻¹ θ_τ θ_g`,
/// `T_τω = θ_ω θ_f S₁⁻¹`. They certify similarity only when
/// [`are_similar`] holds; otherwise they are near-miss diagnostics.
pub fn witness_from_frames(
    frame1: &FramePair,
    frame2: &FramePair,
    tol: f64,
) -> Result<SimilarityWitness> {
    if !frame1.same_spaces(frame2) {
        return Err(Error::SpaceMismatch);
    }
    let (_, inv) = frame1.inverse_frame_operator(tol)?;
    let s_inv = inv.inverse.matrix();
    let t_fg = &(s_inv * frame1.vectors()) * frame2.functionals();
    let t_tau_omega = &(frame2.vectors() * frame1.functionals()) * s_inv;
    let x = *frame1.x_space();
    SimilarityWitness::new(
        LinearMap::new(x, x, t_fg)?,
        LinearMap::new(x, x, t_tau_omega)?,
        tol,
    )
}

/// Decides similarity by projection equality `P_{g,ω} = P_{f,τ}`, entrywise
/// within `tol` relative to the largest projection entry (at least 1). On a
/// positive answer the recovered witnesses are checked to be invertible and
/// to reproduce `frame2` within `10·tol` on the same relative scale.
pub fn are_similar(frame1: &FramePair, frame2: &FramePair, tol: f64) -> Result<bool> {
    if !frame1.same_spaces(frame2) {
        return Err(Error::SpaceMismatch);
    }
    let p1 = frame1.projection(tol)?;
    let p2 = frame2.projection(tol)?;
    let scale = 1f64.max(p1.matrix().max_abs()).max(p2.matrix().max_abs());
    if p1.matrix().max_abs_diff(p2.matrix()) > tol * scale {
        return Ok(false);
    }
    let w = witness_from_frames(frame1, frame2, tol)?;
    if !w.invertible {
        return Err(Error::CrossCheckFailed {
            check: "similar frames must have invertible witnesses",
            residual: f64::INFINITY,
        });
    }
    let g = frame1.functionals() * w.t_fg.matrix();
    let omega = w.t_tau_omega.matrix() * frame1.vectors();
    let residual = g
        .max_abs_diff(frame2.functionals())
        .max(omega.max_abs_diff(frame2.vectors()));
    let scale = 1f64
        .max(frame2.functionals().max_abs())
        .max(frame2.vectors().max_abs());
    if residual > 10.0 * tol * scale {
        return Err(Error::CrossCheckFailed {
            check: "witnesses must reproduce the second frame",
            residual,
        });
    }
    Ok(true)
}

/// `(f_k ∘ T_fg, T_τω τ_k)`.
pub fn apply_similarity(frame: &FramePair, witness: &SimilarityWitness) -> Result<FramePair> {
    if !witness.invertible {
        return Err(Error::NotInvertibleWitness);
    }
    if witness.t_fg.domain() != frame.x_space() {
        return Err(Error::SpaceMismatch);
    }
    frame.with_elements(
        frame.functionals() * witness.t_fg.matrix(),
        witness.t_tau_omega.matrix() * frame.vectors(),
    )
}

/// For a Parseval `frame_parseval` and a frame similar to it, reports
/// whether `frame2` is Parseval. The answer is checked against
/// `T_τω T_fg = I` and `T_fg T_τω = I`.
pub fn parseval_transfer_check(
    frame_parseval: &FramePair,
    frame2: &FramePair,
    tol: f64,
) -> Result<bool> {
    if !frame_parseval.same_spaces(frame2) {
        return Err(Error::SpaceMismatch);
    }
    if frame_parseval
        .frame_operator()
        .matrix()
        .max_abs_diff_identity()
        > tol
    {
        return Err(Error::NotParseval { which: 1 });
    }
    if !are_similar(frame_parseval, frame2, tol)? {
        return Err(Error::NotSimilar);
    }
    let parseval = frame2.frame_operator().matrix().max_abs_diff_identity() <= tol;
    let w = witness_from_frames(frame_parseval, frame2, tol)?;
    let ab = (w.t_tau_omega.matrix() * w.t_fg.matrix()).max_abs_diff_identity();
    let ba = (w.t_fg.matrix() * w.t_tau_omega.matrix()).max_abs_diff_identity();
    if (ab <= tol) != parseval || (ba <= tol) != parseval {
        return Err(Error::CrossCheckFailed {
            check: "Parseval transfer through witnesses",
            residual: ab.max(ba),
        });
    }
    Ok(parseval)
}

/// The two Parseval frames `(f_k S⁻¹, τ_k)` and `(f_k, S⁻¹ τ_k)`, similar to
/// `frame` through `(S⁻¹, I)` and `(I, S⁻¹)`.
pub fn parsevalize(frame: &FramePair, tol: f64) -> Result<(FramePair, FramePair)> {
    let (_, inv) = frame.inverse_frame_operator(tol)?;
    let s_inv = inv.inverse.matrix();
    let first = frame.with_elements(frame.functionals() * s_inv, frame.vectors().clone())?;
    let second = frame.with_elements(frame.functionals().clone(), s_inv * frame.vectors())?;
    Ok((first, second))
}

/// Witness `(A, B)` as maps on the frame's 𝒳.
pub fn witness_of(frame: &FramePair, a: Matrix, b: Matrix, tol: f64) -> Result<SimilarityWitness> {
    let x = *frame.x_space();
    SimilarityWitness::new(LinearMap::new(x, x, a)?, LinearMap::new(x, x, b)?, tol)
}
