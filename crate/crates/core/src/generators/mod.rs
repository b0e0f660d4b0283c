//! Seeded instance generation and independent oracles.
//!
//! Everything here is a pure function of its parameters and a [`Seed`];
//! the underlying PRNG is [`ShuffledLcg`], fixed across platforms.

mod rng;

use alloc::vec::Vec;

use libm::fabs;

pub use rng::ShuffledLcg;

use crate::duality::{dual_from_parameters, DualCandidate};
use crate::frames::FramePair;
use crate::spaces::{Exponent, LinearMap, Matrix, PNormSpace};
use crate::{Error, Result, DEFAULT_TOL};

const MAX_ATTEMPTS: usize = 100;
/// Minimum reciprocal condition of a generated frame operator.
pub const MIN_FRAME_RCOND: f64 = 1e-6;
/// Minimum reciprocal condition of a generated invertible matrix.
pub const MIN_INVERTIBLE_RCOND: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ShuffledLcg {
        ShuffledLcg::new(self.0)
    }
}

/// Entries uniform in `[-1, 1)`, filled row by row.
pub fn random_matrix(rows: usize, cols: usize, rng: &mut ShuffledLcg) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.uniform(-1.0, 1.0))
}

/// A random square matrix with reciprocal condition at least
/// [`MIN_INVERTIBLE_RCOND`].
pub fn random_invertible(d: usize, rng: &mut ShuffledLcg, tol: f64) -> Result<Matrix> {
    let space = PNormSpace::new(d, Exponent::TWO)?;
    for _ in 0..MAX_ATTEMPTS {
        let m = random_matrix(d, d, rng);
        let map = LinearMap::new(space, space, m)?;
        if let Ok(inv) = map.invert(tol) {
            if inv.rcond >= MIN_INVERTIBLE_RCOND {
                return Ok(map.into_matrix());
            }
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_ATTEMPTS,
    })
}

/// A random p-ASF with `d`-dimensional 𝒳 (norm exponent `q`) and `n`
/// elements in ℓ^p. Entries are uniform in `[-1, 1)`; draws whose frame
/// operator has reciprocal condition below [`MIN_FRAME_RCOND`] are
/// rejected.
pub fn random_frame(d: usize, n: usize, p: f64, q: f64, seed: Seed) -> Result<FramePair> {
    if d == 0 || d > n || n > 64 {
        return Err(Error::InvalidArgument(
            "random_frame needs 1 <= d <= n <= 64",
        ));
    }
    let x_space = PNormSpace::new(d, Exponent::new(q)?)?;
    let seq_space = PNormSpace::new(n, Exponent::new(p)?)?;
    let mut rng = seed.rng();
    for _ in 0..=MAX_ATTEMPTS {
        let functionals = random_matrix(n, d, &mut rng);
        let vectors = random_matrix(d, n, &mut rng);
        let frame = FramePair::new(x_space, seq_space, functionals, vectors)?;
        if let Ok((_, inv)) = frame.inverse_frame_operator(DEFAULT_TOL) {
            if inv.rcond >= MIN_FRAME_RCOND {
                return Ok(frame);
            }
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_ATTEMPTS,
    })
}

/// A dual of `frame` drawn from the `(U, V)` parameterization, with entries
/// uniform in `[-1, 1)` scaled by `1/(n·d)`. Singular gates are redrawn.
pub fn random_dual(frame: &FramePair, seed: Seed, tol: f64) -> Result<DualCandidate> {
    let (d, n) = (frame.dim(), frame.count());
    let scale = 1.0 / (n * d) as f64;
    let mut rng = seed.rng();
    for _ in 0..MAX_ATTEMPTS {
        let u = random_matrix(n, d, &mut rng).scale(scale);
        let v = random_matrix(d, n, &mut rng).scale(scale);
        let u = LinearMap::new(*frame.x_space(), *frame.seq_space(), u)?;
        let v = LinearMap::new(*frame.seq_space(), *frame.x_space(), v)?;
        match dual_from_parameters(frame, &u, &v, tol) {
            Ok(c) => return Ok(c),
            Err(Error::GateSingular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_ATTEMPTS,
    })
}

/// Two mutually orthogonal Parseval frames: the first uses sequence
/// coordinates `0..d`, the second `d..2d` (identity blocks), and both are
/// conjugated by one random permutation of the `n` coordinates.
pub fn random_orthogonal_parseval_pair(
    d: usize,
    n: usize,
    p: f64,
    seed: Seed,
) -> Result<(FramePair, FramePair)> {
    if n < 2 * d {
        return Err(Error::InsufficientCoordinates { dim: d, count: n });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    seed.rng().shuffle(&mut perm);
    orthogonal_parseval_pair(d, p, &perm)
}

/// The block pair of [`random_orthogonal_parseval_pair`] for an explicit
/// permutation `perm` of `0..n`: block coordinate `i` is sent to `perm[i]`.
pub fn orthogonal_parseval_pair(
    d: usize,
    p: f64,
    perm: &[usize],
) -> Result<(FramePair, FramePair)> {
    let n = perm.len();
    if n < 2 * d {
        return Err(Error::InsufficientCoordinates { dim: d, count: n });
    }
    let mut seen = alloc::vec![false; n];
    for &k in perm {
        if k >= n || seen[k] {
            return Err(Error::InvalidArgument("perm must be a permutation of 0..n"));
        }
        seen[k] = true;
    }
    let exponent = Exponent::new(p)?;
    let x_space = PNormSpace::new(d, exponent)?;
    let seq_space = PNormSpace::new(n, exponent)?;

    let block = |offset: usize| -> Result<FramePair> {
        let mut f = Matrix::zeros(n, d);
        let mut t = Matrix::zeros(d, n);
        for i in 0..d {
            let k = perm[offset + i];
            f[(k, i)] = 1.0;
            t[(i, k)] = 1.0;
        }
        FramePair::new(x_space, seq_space, f, t)
    };
    Ok((block(0)?, block(d)?))
}

/// Duality checked straight from the reconstruction identities
/// `x = Σ g_k(x) τ_k` and `x = Σ f_k(x) ω_k` on every basis vector of 𝒳,
/// by explicit summation.
pub fn reconstruction_oracle(frame: &FramePair, cand: &FramePair, tol: f64) -> bool {
    if !frame.same_spaces(cand) {
        return false;
    }
    let (d, n) = (frame.dim(), frame.count());
    for j in 0..d {
        for i in 0..d {
            let target = if i == j { 1.0 } else { 0.0 };
            let mut via_g = 0.0;
            let mut via_f = 0.0;
            for k in 0..n {
                // g_k(e_j) = G[k][j], τ_k(i) = T[i][k]
                via_g += cand.functionals()[(k, j)] * frame.vectors()[(i, k)];
                via_f += frame.functionals()[(k, j)] * cand.vectors()[(i, k)];
            }
            if fabs(via_g - target) > tol || fabs(via_f - target) > tol {
                return false;
            }
        }
    }
    true
}
