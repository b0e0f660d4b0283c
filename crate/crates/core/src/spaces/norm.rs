use alloc::vec;
use alloc::vec::Vec;

use libm::{copysign, fabs, pow, sqrt};

use super::{symmetric_eigenvalues, Exponent, LinearMap, Matrix};
use crate::generators::ShuffledLcg;
use crate::{Error, Result};

/// Number of random starting points used by the ascent search.
pub const SEARCH_RESTARTS: usize = 8;
const SEARCH_SEED: u64 = 0x0005_eed0_fa5f;
const MAX_ASCENT_STEPS: usize = 200;

/// A certified bracket `lower ≤ ‖A‖ ≤ upper` for an operator norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormBound {
    pub lower: f64,
    pub upper: f64,
    pub exact: bool,
}

impl NormBound {
    pub fn exact(value: f64) -> Self {
        NormBound {
            lower: value,
            upper: value,
            exact: true,
        }
    }

    /// Midpoint of the bracket.
    pub fn value(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Bracket for `1/x` given a bracket for `x`.
    pub fn reciprocal(&self) -> NormBound {
        NormBound {
            lower: 1.0 / self.upper,
            upper: 1.0 / self.lower,
            exact: self.exact,
        }
    }

    pub fn contains(&self, x: f64, slack: f64) -> bool {
        self.lower - slack <= x && x <= self.upper + slack
    }

    pub fn overlaps(&self, other: &NormBound, slack: f64) -> bool {
        self.lower <= other.upper + slack && other.lower <= self.upper + slack
    }
}

/// ℓ^p norm of a coordinate slice.
pub fn lp_norm(x: &[f64], p: Exponent) -> f64 {
    let scale = x.iter().fold(0.0, |m: f64, v| m.max(fabs(*v)));
    if p.is_infinite() || scale == 0.0 {
        return scale;
    }
    let p = p.value();
    if p == 1.0 {
        return x.iter().map(|v| fabs(*v)).sum();
    }
    if p == 2.0 {
        let s: f64 = x.iter().map(|v| (v / scale) * (v / scale)).sum();
        return scale * sqrt(s);
    }
    let s: f64 = x.iter().map(|v| pow(fabs(v / scale), p)).sum();
    scale * pow(s, 1.0 / p)
}

/// Operator norm of `map` with respect to the ℓ^p norm shared by domain and
/// codomain.
///
/// For `p ∈ {1, 2, ∞}` the value is exact (column sums, largest singular
/// value, row sums). For other `p` the lower end comes from an ascent over
/// the unit p-sphere and the upper end from the Riesz–Thorin bound
/// `‖A‖₁^{1/p} ‖A‖_∞^{1-1/p}`.
pub fn operator_norm(map: &LinearMap) -> Result<NormBound> {
    let p = map.domain().p();
    if p != map.codomain().p() {
        return Err(Error::MixedExponents);
    }
    Ok(matrix_norm(map.matrix(), p))
}

pub(crate) fn matrix_norm(a: &Matrix, p: Exponent) -> NormBound {
    if p == Exponent::ONE {
        return NormBound::exact(a.norm_one());
    }
    if p.is_infinite() {
        return NormBound::exact(a.norm_inf());
    }
    if p == Exponent::TWO {
        return NormBound::exact(spectral_norm(a));
    }
    let inv_p = 1.0 / p.value();
    let upper = pow(a.norm_one(), inv_p) * pow(a.norm_inf(), 1.0 - inv_p);
    let lower = ascent_lower_bound(a, p);
    NormBound {
        lower,
        // the search value is attained by a vector, so it can only exceed
        // the interpolation bound by rounding
        upper: upper.max(lower),
        exact: false,
    }
}

fn spectral_norm(a: &Matrix) -> f64 {
    let gram = if a.rows() >= a.cols() {
        &a.transpose() * a
    } else {
        a * &a.transpose()
    };
    let top = symmetric_eigenvalues(&gram).last().copied().unwrap_or(0.0);
    sqrt(top.max(0.0))
}

/// `sign(v) |v|^{e}` componentwise.
fn signed_power(v: &[f64], e: f64) -> Vec<f64> {
    v.iter().map(|&x| copysign(pow(fabs(x), e), x)).collect()
}

fn normalized(mut x: Vec<f64>, p: Exponent) -> Option<Vec<f64>> {
    let n = lp_norm(&x, p);
    if n == 0.0 || !n.is_finite() {
        return None;
    }
    for v in &mut x {
        *v /= n;
    }
    Some(x)
}

/// Best `‖Ax‖_p` over unit vectors visited by the dual-vector ascent from
/// several starting points. Each step maximizes the linearization of
/// `‖Ax‖_p` on the unit sphere, which never decreases the objective.
fn ascent_lower_bound(a: &Matrix, p: Exponent) -> f64 {
    let n = a.cols();
    let q = p.conjugate();
    let at = a.transpose();
    let mut rng = ShuffledLcg::new(SEARCH_SEED ^ (a.rows() as u64) << 32 ^ n as u64);

    let mut starts: Vec<Vec<f64>> = Vec::with_capacity(SEARCH_RESTARTS + 2);
    starts.push(vec![1.0; n]);
    let best_col = (0..n)
        .max_by(|&i, &j| lp_norm(&a.column(i), p).total_cmp(&lp_norm(&a.column(j), p)))
        .unwrap_or(0);
    let mut e = vec![0.0; n];
    e[best_col] = 1.0;
    starts.push(e);
    for _ in 0..SEARCH_RESTARTS {
        starts.push((0..n).map(|_| rng.uniform(-1.0, 1.0)).collect());
    }

    let mut best = 0.0f64;
    for start in starts {
        let Some(mut x) = normalized(start, p) else {
            continue;
        };
        let mut value = lp_norm(&a.mul_vec(&x).expect("shape"), p);
        best = best.max(value);
        for _ in 0..MAX_ASCENT_STEPS {
            let y = a.mul_vec(&x).expect("shape");
            if value == 0.0 {
                break;
            }
            // dual direction of y in ℓ^{p'}
            let s = signed_power(&y, p.value() - 1.0);
            let z = at.mul_vec(&s).expect("shape");
            let next = signed_power(&z, q.value() - 1.0);
            let Some(next) = normalized(next, p) else {
                break;
            };
            let next_value = lp_norm(&a.mul_vec(&next).expect("shape"), p);
            best = best.max(next_value);
            if next_value <= value * (1.0 + 1e-14) {
                break;
            }
            x = next;
            value = next_value;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::PNormSpace;

    fn map(rows: &[[f64; 2]], p: f64) -> LinearMap {
        let sp = PNormSpace::new(2, Exponent::new(p).unwrap()).unwrap();
        LinearMap::new(sp, sp, Matrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn one_norm_is_max_column_sum() {
        let b = operator_norm(&map(&[[1.0, 2.0], [3.0, 4.0]], 1.0)).unwrap();
        assert_eq!(b, NormBound::exact(6.0));
        // ±e_j are the extreme points of the ℓ¹ ball
        let a = Matrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let brute = (0..2)
            .map(|j| lp_norm(&a.column(j), Exponent::ONE))
            .fold(0.0, f64::max);
        assert_eq!(brute, 6.0);
    }

    #[test]
    fn spectral_norm_of_identity() {
        let sp = PNormSpace::new(3, Exponent::TWO).unwrap();
        let b = operator_norm(&LinearMap::identity(sp)).unwrap();
        assert!(b.exact);
        assert!((b.lower - 1.0).abs() < 1e-15);
    }

    #[test]
    fn identity_bracket_collapses_for_p3() {
        let b = operator_norm(&map(&[[1.0, 0.0], [0.0, 1.0]], 3.0)).unwrap();
        assert!(!b.exact);
        assert!((b.lower - 1.0).abs() < 1e-14);
        assert!((b.upper - 1.0).abs() < 1e-14);
    }

    #[test]
    fn mixed_exponents_rejected() {
        let a = PNormSpace::new(2, Exponent::TWO).unwrap();
        let b = PNormSpace::new(2, Exponent::ONE).unwrap();
        let m = LinearMap::new(a, b, Matrix::identity(2)).unwrap();
        assert_eq!(operator_norm(&m), Err(Error::MixedExponents));
    }

    #[test]
    fn reciprocal_bracket() {
        let b = NormBound {
            lower: 2.0,
            upper: 4.0,
            exact: false,
        };
        let r = b.reciprocal();
        assert_eq!((r.lower, r.upper), (0.25, 0.5));
        assert!(r.contains(0.3, 0.0));
        assert!(!r.contains(0.6, 0.0));
    }

    #[test]
    fn diagonal_norm_is_found_by_search() {
        // every induced p-norm of a diagonal matrix is its largest |entry|
        let b = operator_norm(&map(&[[3.0, 0.0], [0.0, -1.0]], 1.5)).unwrap();
        assert!((b.lower - 3.0).abs() < 1e-12);
        assert!((b.upper - 3.0).abs() < 1e-12);
    }
}
