use nalgebra::DMatrix;
use pasf_core::duality::*;
use pasf_core::generators::*;
use pasf_core::orthogonality::*;
use pasf_core::similarity::*;
use pasf_core::spaces::{lp_norm, vector_norm};
use pasf_core::{Exponent, FramePair, LinearMap, Matrix, PNormSpace, Vector};
use proptest::prelude::*;

const TOL: f64 = 1e-9;
const EXPONENTS: [f64; 5] = [1.0, 1.5, 2.0, 3.0, f64::INFINITY];

fn exponent() -> impl Strategy<Value = f64> {
    prop::sample::select(EXPONENTS.to_vec())
}

/// (d, n, p, q, seed) with 1 <= d <= n <= 12.
fn frame_params() -> impl Strategy<Value = (usize, usize, f64, f64, u64)> {
    (1usize..=6, 0usize..=6, exponent(), exponent(), any::<u64>())
        .prop_map(|(d, extra, p, q, s)| (d, d + extra, p, q, s))
}

fn frame_of((d, n, p, q, s): (usize, usize, f64, f64, u64)) -> FramePair {
    random_frame(d, n, p, q, Seed(s)).unwrap()
}

fn to_na(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.as_slice())
}

fn map_on(m: Matrix, p: f64) -> LinearMap {
    let e = Exponent::new(p).unwrap();
    let dom = PNormSpace::new(m.cols(), e).unwrap();
    let cod = PNormSpace::new(m.rows(), e).unwrap();
    LinearMap::new(dom, cod, m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    // ---- spaces ----

    #[test]
    fn operator_norm_bounds_images(
        rows in 1usize..=6, cols in 1usize..=6, p in exponent(), seed in any::<u64>()
    ) {
        let mut rng = ShuffledLcg::new(seed);
        let a = map_on(random_matrix(rows, cols, &mut rng), p);
        let bound = a.operator_norm().unwrap();
        prop_assert!(bound.lower <= bound.upper);
        if p == 1.0 || p == 2.0 || p.is_infinite() {
            prop_assert!(bound.exact && bound.lower == bound.upper);
        }
        let v = Vector::new(*a.domain(), (0..cols).map(|_| rng.uniform(-1.0, 1.0)).collect()).unwrap();
        let image = a.apply(&v).unwrap();
        let lhs = vector_norm(a.codomain(), &image).unwrap();
        let rhs = bound.upper * vector_norm(a.domain(), &v).unwrap();
        prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-15, "{} > {}", lhs, rhs);
    }

    #[test]
    fn inverse_residuals(d in 1usize..=10, seed in any::<u64>()) {
        let mut rng = ShuffledLcg::new(seed);
        let a = random_invertible(d, &mut rng, TOL).unwrap();
        let inv = a.inverse(TOL).unwrap();
        prop_assert!((&a * &inv).max_abs_diff_identity() <= 10.0 * TOL);
        prop_assert!((&inv * &a).max_abs_diff_identity() <= 10.0 * TOL);
    }

    #[test]
    fn compose_is_associative(m in 1usize..=6, k in 1usize..=6, l in 1usize..=6, r in 1usize..=6, seed in any::<u64>()) {
        let mut rng = ShuffledLcg::new(seed);
        let a = map_on(random_matrix(m, k, &mut rng), 2.0);
        let b = map_on(random_matrix(k, l, &mut rng), 2.0);
        let c = map_on(random_matrix(l, r, &mut rng), 2.0);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        let scale = left.matrix().max_abs().max(1.0);
        prop_assert!(left.matrix().max_abs_diff(right.matrix()) <= 1e-12 * scale);
    }

    // ---- frames ----

    #[test]
    fn splitting_identity(params in frame_params()) {
        let fr = frame_of(params);
        let direct = fr.frame_operator_by_sum();
        prop_assert!(fr.frame_operator().matrix().max_abs_diff(direct.matrix()) <= 1e-12);
    }

    #[test]
    fn reconstruction_both_ways(params in frame_params(), xs in any::<u64>()) {
        let fr = frame_of(params);
        let mut rng = ShuffledLcg::new(xs);
        let x = Vector::new(*fr.x_space(), (0..fr.dim()).map(|_| rng.uniform(-1.0, 1.0)).collect()).unwrap();
        let r = fr.reconstruct(&x, TOL).unwrap();
        let xn = x.norm();
        prop_assert!(r.residual_functionals <= 1e-9 * xn);
        prop_assert!(r.residual_vectors <= 1e-9 * xn);
    }

    #[test]
    fn projection_properties(params in frame_params(), xs in any::<u64>()) {
        let fr = frame_of(params);
        let p = fr.projection(TOL).unwrap();
        let pm = p.matrix();
        let scale = pm.max_abs().max(1.0);
        prop_assert!((pm * pm).max_abs_diff(pm) <= 1e-10 * scale);
        prop_assert_eq!(p.rank(1e-8), fr.dim());
        prop_assert!((pm.trace() - fr.dim() as f64).abs() <= 1e-9 * scale);
        // P fixes the range of θ_f, and the range of P is that range
        let theta_f = fr.analysis_operator();
        let mut rng = ShuffledLcg::new(xs);
        let x = Vector::new(*fr.x_space(), (0..fr.dim()).map(|_| rng.uniform(-1.0, 1.0)).collect()).unwrap();
        let fx = theta_f.apply(&x).unwrap();
        let pfx = p.apply(&fx).unwrap();
        let err = pfx.sub(&fx).unwrap().coords().iter().fold(0.0f64, |m, v| m.max(v.abs()));
        prop_assert!(err <= 1e-9 * scale);
        prop_assert_eq!(pm.hstack(fr.functionals()).unwrap().rank(1e-8), fr.dim());
    }

    #[test]
    fn canonical_pair_has_inverse_frame_operator(params in frame_params()) {
        let fr = frame_of(params);
        let report = fr.validate(TOL).unwrap();
        prop_assert!(report.analysis_injective && report.synthesis_surjective);
        let cd = canonical_dual(&fr, TOL).unwrap();
        let cd_report = cd.validate(TOL).unwrap();
        let s_inv = report.frame_op_inv.matrix();
        let scale = s_inv.max_abs().max(1.0);
        prop_assert!(cd_report.frame_op.matrix().max_abs_diff(s_inv) <= 1e-10 * scale);
    }

    #[test]
    fn factorization_round_trip(params in frame_params()) {
        let fr = frame_of(params);
        let (u, v) = fr.factorize(TOL).unwrap();
        prop_assert_eq!(FramePair::from_factorization(&u, &v, TOL).unwrap(), fr);
    }

    #[test]
    fn basis_factorization_recovers_elements(d in 1usize..=6, seed in any::<u64>()) {
        let fr = random_frame(d, d, 2.0, 2.0, Seed(seed)).unwrap();
        let mut rng = ShuffledLcg::new(seed ^ 1);
        let basis = random_invertible(d, &mut rng, TOL).unwrap();
        let coords = basis.inverse(TOL).unwrap();
        let basis = LinearMap::new(*fr.x_space(), *fr.x_space(), basis).unwrap();
        let (u, v) = fr.basis_factorization(&basis, TOL).unwrap();
        // f_k = g_k U with g_k the rows of basis⁻¹; τ_k = V ω_k
        let f = &coords * u.matrix();
        let t = v.matrix() * basis.matrix();
        let scale = fr.functionals().max_abs().max(fr.vectors().max_abs()).max(1.0);
        prop_assert!(f.max_abs_diff(fr.functionals()) <= 1e-9 * scale);
        prop_assert!(t.max_abs_diff(fr.vectors()) <= 1e-9 * scale);
        prop_assert!((v.matrix() * u.matrix()).max_abs_diff(fr.frame_operator().matrix()) <= 1e-9 * scale);
    }

    #[test]
    fn spd_bounds_match_eigenvalues(d in 1usize..=6, extra in 0usize..=6, seed in any::<u64>()) {
        let n = d + extra;
        let base = random_frame(d, n, 2.0, 2.0, Seed(seed)).unwrap();
        // τ_k = f_kᵀ makes S = FᵀF symmetric positive definite
        let fr = base.with_elements(base.functionals().clone(), base.functionals().transpose()).unwrap();
        let Ok(report) = fr.validate(TOL) else { return Ok(()); };
        let eig = to_na(report.frame_op.matrix()).symmetric_eigen().eigenvalues;
        let (lo, hi) = (eig.min(), eig.max());
        prop_assert!((report.lower_bound.lower - lo).abs() <= 1e-8 * hi.max(1.0));
        prop_assert!((report.upper_bound.upper - hi).abs() <= 1e-8 * hi.max(1.0));
    }

    // ---- duality ----

    #[test]
    fn canonical_dual_is_an_involution(params in frame_params()) {
        let fr = frame_of(params);
        let twice = canonical_dual(&canonical_dual(&fr, TOL).unwrap(), TOL).unwrap();
        prop_assert!(twice.max_abs_diff(&fr) <= 1e-10);
    }

    #[test]
    fn dual_criterion_is_symmetric(params in frame_params(), s in any::<u64>(), perturb in any::<bool>()) {
        let fr = frame_of(params);
        let mut cand = random_dual(&fr, Seed(s), TOL).unwrap().frame;
        if perturb {
            let mut g = cand.functionals().clone();
            g[(0, 0)] += 0.1;
            cand = cand.with_elements(g, cand.vectors().clone()).unwrap();
        }
        prop_assert_eq!(is_dual(&fr, &cand, TOL).unwrap(), is_dual(&cand, &fr, TOL).unwrap());
        prop_assert_eq!(is_dual(&fr, &cand, TOL).unwrap(), !perturb);
        prop_assert_eq!(reconstruction_oracle(&fr, &cand, TOL), !perturb);
    }

    #[test]
    fn parameterization_is_complete(params in frame_params(), s in any::<u64>()) {
        let fr = frame_of(params);
        let cand = random_dual(&fr, Seed(s), TOL).unwrap();
        prop_assert!(is_dual(&fr, &cand.frame, TOL).unwrap());
        let (u, v) = parameters_from_dual(&fr, &cand.frame, TOL).unwrap();
        let again = dual_from_parameters(&fr, &u, &v, TOL).unwrap();
        prop_assert!(again.frame.max_abs_diff(&cand.frame) <= 1e-10);
        // regenerating from the attached parameters
        let regen = dual_from_parameters(&fr, cand.u_param.as_ref().unwrap(), cand.v_param.as_ref().unwrap(), TOL).unwrap();
        prop_assert!(regen.frame.max_abs_diff(&cand.frame) <= 1e-10);
        // dual pairs are never orthogonal
        prop_assert!(!is_orthogonal(&fr, &cand.frame, TOL).unwrap());
    }

    #[test]
    fn canonical_bounds_overlap_validated(params in frame_params()) {
        let fr = frame_of(params);
        let report = fr.validate(TOL).unwrap();
        let (lo, hi) = canonical_dual_bounds(&report);
        let cd = canonical_dual(&fr, TOL).unwrap().validate(TOL).unwrap();
        let slack = 1e-9 * hi.upper.max(1.0);
        prop_assert!(lo.overlaps(&cd.lower_bound, slack));
        prop_assert!(hi.overlaps(&cd.upper_bound, slack));
    }

    // ---- similarity ----

    #[test]
    fn similarity_is_an_equivalence(params in frame_params(), s in any::<u64>()) {
        let fr = frame_of(params);
        let d = fr.dim();
        let mut rng = ShuffledLcg::new(s);
        let mut twist = |f: &FramePair| {
            let a = random_invertible(d, &mut rng, TOL).unwrap();
            let b = random_invertible(d, &mut rng, TOL).unwrap();
            apply_similarity(f, &witness_of(f, a, b, TOL).unwrap()).unwrap()
        };
        let g = twist(&fr);
        let h = twist(&g);
        prop_assert!(are_similar(&fr, &fr, TOL).unwrap());
        prop_assert!(are_similar(&fr, &g, TOL).unwrap());
        prop_assert!(are_similar(&g, &fr, TOL).unwrap());
        prop_assert!(are_similar(&g, &h, TOL).unwrap());
        prop_assert!(are_similar(&fr, &h, TOL).unwrap());
        prop_assert!(!is_orthogonal(&fr, &g, TOL).unwrap());
    }

    #[test]
    fn only_the_canonical_dual_is_similar(params in frame_params(), s in any::<u64>()) {
        let fr = frame_of(params);
        prop_assert!(are_similar(&fr, &canonical_dual(&fr, TOL).unwrap(), TOL).unwrap());
        // n = d leaves only the canonical dual, so skip the distinctness check there
        if fr.count() > fr.dim() {
            let cand = random_dual(&fr, Seed(s), TOL).unwrap();
            prop_assert!(!are_similar(&fr, &cand.frame, TOL).unwrap());
        }
    }

    #[test]
    fn parsevalized_frames(params in frame_params()) {
        let fr = frame_of(params);
        let (a, b) = parsevalize(&fr, TOL).unwrap();
        prop_assert!(a.validate(TOL).unwrap().parseval);
        prop_assert!(b.validate(TOL).unwrap().parseval);
        prop_assert!(are_similar(&fr, &a, TOL).unwrap());
        prop_assert!(are_similar(&fr, &b, TOL).unwrap());
    }

    // ---- orthogonality ----

    #[test]
    fn orthogonality_symmetric_not_reflexive(d in 1usize..=4, extra in 0usize..=4, p in exponent(), s in any::<u64>()) {
        let (a, b) = random_orthogonal_parseval_pair(d, 2 * d + extra, p, Seed(s)).unwrap();
        prop_assert!(is_orthogonal(&a, &b, TOL).unwrap());
        prop_assert!(is_orthogonal(&b, &a, TOL).unwrap());
        prop_assert!(!is_orthogonal(&a, &a, TOL).unwrap());
        prop_assert!(!is_dual(&a, &b, TOL).unwrap());
        prop_assert!(a.functionals().rank(TOL) + b.functionals().rank(TOL) <= a.count());
        prop_assert_eq!(mixed_pair_degeneracy_check(&a, &b, TOL).unwrap(), (true, true));
    }

    #[test]
    fn interpolation_closure(d in 1usize..=4, extra in 0usize..=4, s in any::<u64>()) {
        let (a, b) = random_orthogonal_parseval_pair(d, 2 * d + extra, 2.0, Seed(s)).unwrap();
        let mut rng = ShuffledLcg::new(s ^ 0xabc);
        // extra twists keep both Parseval and orthogonal
        let m1 = random_invertible(d, &mut rng, TOL).unwrap();
        let m2 = random_invertible(d, &mut rng, TOL).unwrap();
        let a = apply_similarity(&a, &witness_of(&a, m1.clone(), m1.inverse(TOL).unwrap(), TOL).unwrap()).unwrap();
        let b = apply_similarity(&b, &witness_of(&b, m2.clone(), m2.inverse(TOL).unwrap(), TOL).unwrap()).unwrap();

        let x = *a.x_space();
        let aop = random_invertible(d, &mut rng, TOL).unwrap();
        let bop = random_matrix(d, d, &mut rng);
        let dop = random_matrix(d, d, &mut rng);
        let cop = &(&Matrix::identity(d) - &(&dop * &bop)) * &aop.inverse(TOL).unwrap();
        let ops = InterpolationOperators {
            a_op: LinearMap::new(x, x, aop).unwrap(),
            b_op: LinearMap::new(x, x, bop).unwrap(),
            c_op: LinearMap::new(x, x, cop).unwrap(),
            d_op: LinearMap::new(x, x, dop).unwrap(),
        };
        let out = interpolate(&a, &b, &ops, TOL).unwrap();
        prop_assert!(out.frame_operator().matrix().max_abs_diff_identity() <= 10.0 * TOL);
    }
}

#[test]
fn exact_norms_match_brute_force() {
    let mut rng = ShuffledLcg::new(2024);
    for _ in 0..50 {
        let a = random_matrix(4, 5, &mut rng);
        // ℓ¹: extreme points ±e_j
        let one = (0..5)
            .map(|j| lp_norm(&a.column(j), Exponent::ONE))
            .fold(0.0, f64::max);
        // ℓ∞: extreme points are sign vectors
        let mut inf = 0.0f64;
        for mask in 0u32..32 {
            let x: Vec<f64> = (0..5)
                .map(|j| if mask >> j & 1 == 1 { 1.0 } else { -1.0 })
                .collect();
            inf = inf.max(lp_norm(&a.mul_vec(&x).unwrap(), Exponent::INFINITY));
        }
        let two = to_na(&a).singular_values().max();
        assert!((map_on(a.clone(), 1.0).operator_norm().unwrap().lower - one).abs() < 1e-10);
        assert!(
            (map_on(a.clone(), f64::INFINITY)
                .operator_norm()
                .unwrap()
                .lower
                - inf)
                .abs()
                < 1e-10
        );
        assert!((map_on(a, 2.0).operator_norm().unwrap().lower - two).abs() < 1e-10);
    }
}

#[test]
fn biorthogonal_square_frames_have_one_dual() {
    let mut rng = ShuffledLcg::new(31);
    for s in 0..20 {
        let t = random_invertible(4, &mut rng, TOL).unwrap();
        let f = t.inverse(TOL).unwrap();
        let base = random_frame(4, 4, 2.0, 2.0, Seed(s)).unwrap();
        let fr = base.with_elements(f, t).unwrap();
        assert!(has_unique_dual(&fr, TOL));
        let cd = canonical_dual(&fr, TOL).unwrap();
        let cand = random_dual(&fr, Seed(s + 100), TOL).unwrap();
        assert!(cand.frame.max_abs_diff(&cd) < 1e-9);
    }
}

#[test]
fn generators_are_deterministic() {
    for s in 0..10 {
        let fr = random_frame(4, 8, 2.0, 1.5, Seed(s)).unwrap();
        assert_eq!(
            random_dual(&fr, Seed(s), TOL).unwrap(),
            random_dual(&fr, Seed(s), TOL).unwrap()
        );
        assert_eq!(
            random_orthogonal_parseval_pair(3, 8, 3.0, Seed(s)).unwrap(),
            random_orthogonal_parseval_pair(3, 8, 3.0, Seed(s)).unwrap()
        );
    }
}
