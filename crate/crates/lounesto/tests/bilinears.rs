use lounesto::bilinear::{
    aggregate, bilinears, boomerang_residual, fierz_residuals, generalized_fierz_residuals, is_boomerang,
    pq_operators, reconstruct, try_bilinears, BilinearSet, FierzAggregate,
};
use lounesto::classify::{classify, verify_class_relations, ClassLabel};
use lounesto::clifford::{ComplexMultivector, Multivector};
use lounesto::gamma::{gamma_matrices, Rep};
use lounesto::SpinorC4;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn chiral(v: [Complex64; 4]) -> SpinorC4 {
    SpinorC4::new(v, Rep::Chiral)
}

fn random_spinor(rng: &mut impl Rng) -> SpinorC4 {
    chiral(std::array::from_fn(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
}

/// Chiral blocks (u, v) with the phase of u chosen so that u†v has argument `arg`.
fn tuned(rng: &mut impl Rng, arg: f64) -> SpinorC4 {
    let psi = random_spinor(rng);
    let ([u0, u1], [v0, v1]) = psi.blocks();
    let dot = u0.conj() * v0 + u1.conj() * v1;
    let phase = Complex64::from_polar(1.0, dot.arg() - arg);
    chiral([u0 * phase, u1 * phase, v0, v1])
}

fn elko(alpha: Complex64, beta: Complex64) -> SpinorC4 {
    let i = c(0.0, 1.0);
    chiral([-i * beta.conj(), i * alpha.conj(), alpha, beta])
}

fn spinor_strategy() -> impl Strategy<Value = SpinorC4> {
    prop::array::uniform8(-1.0f64..1.0)
        .prop_map(|x| chiral([c(x[0], x[1]), c(x[2], x[3]), c(x[4], x[5]), c(x[6], x[7])]))
}

#[test]
fn dirac_witness_values() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let psi = chiral([c(h, 0.0), c(0.0, 0.0), c(h, 0.0), c(0.0, 0.0)]);
    let b = bilinears(&psi);
    assert!((b.sigma - 1.0).abs() < 1e-15);
    assert!(b.omega.abs() < 1e-15);
    assert!(fierz_residuals(&b).max() < 1e-15);
    assert_eq!(classify(&b, 1e-10).unwrap().label, ClassLabel::Two);
}

#[test]
fn zero_spinor_has_zero_bilinears() {
    let b = bilinears(&SpinorC4::zero(Rep::Chiral));
    assert!(b.is_zero());
    assert_eq!(aggregate(&b).z, ComplexMultivector::zero());
    let g = generalized_fierz_residuals(&aggregate(&b), &b);
    assert_eq!(g.max(), 0.0);
    let (p, q) = pq_operators(&b);
    assert_eq!((p, q), (Multivector::zero(), Multivector::zero()));
}

/// Closed forms for λ = (−iβ*, iα*, α, β), with J1 = −2(αβ* + α*β).
#[test]
fn elko_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let (a, bb) = (
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        );
        let b = bilinears(&elko(a, bb));
        let i = c(0.0, 1.0);
        let j = [
            2.0 * (a.norm_sqr() + bb.norm_sqr()),
            (-2.0 * (a * bb.conj() + a.conj() * bb)).re,
            (2.0 * i * (a.conj() * bb - a * bb.conj())).re,
            2.0 * (bb.norm_sqr() - a.norm_sqr()),
        ];
        for mu in 0..4 {
            assert!((b.j[mu] - j[mu]).abs() < 1e-12, "J{mu}: {} vs {}", b.j[mu], j[mu]);
        }
        assert!(b.sigma.abs() < 1e-14 && b.omega.abs() < 1e-14 && b.k_norm() < 1e-14);
        assert!(b.s_norm() > 1e-3);
        assert!(b.j_square().abs() < 1e-12);
        let z = aggregate(&b);
        let expected = ComplexMultivector::from_parts(&b.current(), &b.spin());
        assert!((z.z - expected).norm() < 1e-15);
        let zm = z.matrix(Rep::Chiral);
        assert!((zm * zm).norm() < 1e-12 * zm.norm().powi(2));
    }
}

#[test]
fn aggregate_matrix_equals_outer_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for rep in [Rep::Chiral, Rep::Standard] {
        for _ in 0..20 {
            let psi = random_spinor(&mut rng).to_rep(rep);
            let z = aggregate(&bilinears(&psi));
            let outer = psi.column() * psi.dirac_adjoint() * c(4.0, 0.0);
            assert!((z.matrix(rep) - outer).norm() < 1e-13);
        }
    }
}

#[test]
fn boomerang_examples() {
    assert!(is_boomerang(&FierzAggregate::new(ComplexMultivector::scalar(c(1.0, 0.0))), 1e-10));
    assert!(!is_boomerang(&FierzAggregate::new(ComplexMultivector::scalar(c(0.0, 1.0))), 1e-10));
}

#[test]
fn reconstruction_rejects_degenerate_probe() {
    let lambda = elko(c(1.0, 0.0), c(0.0, 0.0));
    let z = aggregate(&bilinears(&lambda));
    // σ = 0 makes the spinor itself a degenerate probe
    assert!(reconstruct(&z, &lambda, 1e-10).is_err());
    let probe = chiral([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    let r = reconstruct(&z, &probe, 1e-10).unwrap();
    assert!(r.aligned_to(&lambda).distance(&lambda) < 1e-12);
}

#[test]
fn reconstruction_canonical_phase() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let psi = random_spinor(&mut rng);
    let z = aggregate(&bilinears(&psi));
    let r = reconstruct(&z, &psi, 1e-10).unwrap();
    let first = r.canonical.components[0];
    assert!(first.im.abs() < 1e-14 && first.re > 0.0);
    let lead = psi.components[0];
    let expected = psi.scale(lead.conj() / lead.norm());
    assert!(r.canonical.distance(&expected) < 1e-12);
}

#[test]
fn try_bilinears_accepts_valid_gamma_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        assert!(try_bilinears(&random_spinor(&mut rng), 1e-12).is_ok());
    }
}

#[test]
fn class_relations_hold_on_constructed_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (arg, label) in
        [(0.7, ClassLabel::One), (0.0, ClassLabel::Two), (std::f64::consts::FRAC_PI_2, ClassLabel::Three)]
    {
        for _ in 0..20 {
            let psi = tuned(&mut rng, arg);
            let b = bilinears(&psi);
            let class = classify(&b, 1e-10).unwrap();
            assert_eq!(class.label, label);
            for r in verify_class_relations(&b, &class) {
                assert!(r.relative() < 1e-10, "class {label}: {} = {}", r.name, r.relative());
            }
        }
    }
}

proptest! {
    #[test]
    fn fierz_identities_hold(psi in spinor_strategy()) {
        let b = bilinears(&psi);
        let scale = b.j[0] * b.j[0];
        let r = fierz_residuals(&b);
        prop_assert!(r.max() <= 1e-10 * scale.max(1e-300), "{:?}", r);
        let z = aggregate(&b);
        let g = generalized_fierz_residuals(&z, &b);
        prop_assert!(g.max() <= 1e-9 * z.matrix(Rep::Chiral).norm().powi(2), "{:?}", g);
        prop_assert!(boomerang_residual(&z) <= 1e-12 * scale.sqrt());
    }

    #[test]
    fn phase_and_scale_covariance(psi in spinor_strategy(), theta in 0.0f64..6.3, r in 0.1f64..10.0) {
        let b = bilinears(&psi);
        let rotated = bilinears(&psi.scale(Complex64::from_polar(r, theta)));
        prop_assert!(rotated.max_abs_diff(&b.scaled(r * r)) <= 1e-12 * r * r * b.j[0].max(1.0));
    }

    #[test]
    fn representation_covariance(psi in spinor_strategy()) {
        let a = bilinears(&psi);
        let b = bilinears(&psi.to_rep(Rep::Standard));
        prop_assert!(a.max_abs_diff(&b) < 1e-13);
        prop_assert_eq!(classify(&a, 1e-10).unwrap().label, classify(&b, 1e-10).unwrap().label);
    }

    #[test]
    fn reconstruction_round_trip(psi in spinor_strategy(), xi in spinor_strategy()) {
        let z = aggregate(&bilinears(&psi));
        if let Ok(r) = reconstruct(&z, &xi, 1e-10) {
            prop_assert!(r.aligned_to(&psi).distance(&psi) < 1e-8);
            let phase_free = (r.raw.norm() - psi.norm()).abs();
            prop_assert!(phase_free < 1e-8);
        }
    }
}

#[test]
fn pseudoscalar_bilinear_sign() {
    // ω = −ψ̄γ0123ψ
    let psi = chiral([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]);
    let g = gamma_matrices(Rep::Chiral);
    let direct = -(psi.dirac_adjoint() * g.pseudoscalar() * psi.column())[(0, 0)].re;
    let b: BilinearSet = bilinears(&psi);
    assert_eq!(b.omega, direct);
    assert_eq!(b.omega, 2.0);
}
