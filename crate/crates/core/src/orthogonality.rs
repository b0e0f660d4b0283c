//! Orthogonal p-ASFs and interpolation.
//!
//! `(g, ω)` is orthogonal to `(f, τ)` when `θ_τ θ_g = θ_ω θ_f = 0`. Two
//! orthogonal Parseval frames can be stitched with operators satisfying
//! `CA + DB = I` into the Parseval frame `(f_k A + g_k B, C τ_k + D ω_k)`.

use crate::frames::FramePair;
use crate::spaces::{LinearMap, Matrix};
use crate::{Error, Result};

/// Operators `A, B, C, D` on 𝒳 for [`interpolate`].
#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationOperators {
    pub a_op: LinearMap,
    pub b_op: LinearMap,
    pub c_op: LinearMap,
    pub d_op: LinearMap,
}

impl InterpolationOperators {
    /// Scalar multiples of the identity on `frame`'s 𝒳.
    pub fn scalars(frame: &FramePair, a: f64, b: f64, c: f64, d: f64) -> Self {
        let x = *frame.x_space();
        let id = Matrix::identity(x.dim());
        let op = |s: f64| LinearMap::new(x, x, id.scale(s)).expect("square");
        InterpolationOperators {
            a_op: op(a),
            b_op: op(b),
            c_op: op(c),
            d_op: op(d),
        }
    }

    /// Entrywise `max|CA + DB − I|`.
    pub fn contract_residual(&self) -> f64 {
        let ca = self.c_op.matrix() * self.a_op.matrix();
        let db = self.d_op.matrix() * self.b_op.matrix();
        (&ca + &db).max_abs_diff_identity()
    }
}

/// `θ_τ θ_g ≈ 0` and `θ_ω θ_f ≈ 0`, entrywise within `tol`.
pub fn is_orthogonal(frame1: &FramePair, frame2: &FramePair, tol: f64) -> Result<bool> {
    if !frame1.same_spaces(frame2) {
        return Err(Error::SpaceMismatch);
    }
    let left = frame1.vectors() * frame2.functionals();
    let right = frame2.vectors() * frame1.functionals();
    Ok(left.max_abs() <= tol && right.max_abs() <= tol)
}

fn is_parseval(frame: &FramePair, tol: f64) -> bool {
    frame.frame_operator().matrix().max_abs_diff_identity() <= tol
}

/// Stitches two orthogonal Parseval frames into
/// `(F A + G B, C T + D Ω)`, which is again Parseval.
pub fn interpolate(
    frame1: &FramePair,
    frame2: &FramePair,
    ops: &InterpolationOperators,
    tol: f64,
) -> Result<FramePair> {
    if !frame1.same_spaces(frame2) {
        return Err(Error::SpaceMismatch);
    }
    let d = frame1.dim();
    for op in [&ops.a_op, &ops.b_op, &ops.c_op, &ops.d_op] {
        if op.matrix().shape() != (d, d) {
            return Err(Error::DimensionMismatch {
                context: "interpolation operators act on X",
                expected: d,
                found: op.matrix().rows(),
            });
        }
    }
    if !is_parseval(frame1, tol) {
        return Err(Error::NotParseval { which: 1 });
    }
    if !is_parseval(frame2, tol) {
        return Err(Error::NotParseval { which: 2 });
    }
    if !is_orthogonal(frame1, frame2, tol)? {
        return Err(Error::NotOrthogonal);
    }
    let residual = ops.contract_residual();
    if residual > tol {
        return Err(Error::ContractViolated { residual });
    }
    let functionals =
        &(frame1.functionals() * ops.a_op.matrix()) + &(frame2.functionals() * ops.b_op.matrix());
    let vectors = &(ops.c_op.matrix() * frame1.vectors()) + &(ops.d_op.matrix() * frame2.vectors());
    frame1.with_elements(functionals, vectors)
}

/// [`interpolate`] with `A = aI, B = bI, C = cI, D = dI`; requires
/// `ca + db = 1`.
#[allow(clippy::too_many_arguments)]
pub fn scalar_interpolate(
    frame1: &FramePair,
    frame2: &FramePair,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    tol: f64,
) -> Result<FramePair> {
    interpolate(
        frame1,
        frame2,
        &InterpolationOperators::scalars(frame1, a, b, c, d),
        tol,
    )
}

/// For orthogonal frames, whether the mixed pairs `(f, ω)` and `(g, τ)`
/// each fail to be p-ASFs. Both are expected to be `true`.
pub fn mixed_pair_degeneracy_check(
    frame1: &FramePair,
    frame2: &FramePair,
    tol: f64,
) -> Result<(bool, bool)> {
    if !is_orthogonal(frame1, frame2, tol)? {
        return Err(Error::NotOrthogonal);
    }
    let f_omega = frame1.with_elements(frame1.functionals().clone(), frame2.vectors().clone())?;
    let g_tau = frame1.with_elements(frame2.functionals().clone(), frame1.vectors().clone())?;
    Ok((
        f_omega.inverse_frame_operator(tol).is_err(),
        g_tau.inverse_frame_operator(tol).is_err(),
    ))
}
