use lounesto::clifford::blade::{self, DIM, E0, E01, E1, E12, E123, E13, E2, E23, E3};
use lounesto::clifford::{ComplexMultivector, Multivector, Quaternion};
use lounesto::gamma::{chiral_to_standard, gamma_matrices, pauli, Mat4, Rep};
use num_complex::Complex64;
use proptest::prelude::*;

fn e(i: usize) -> Multivector {
    Multivector::basis(i)
}

fn mv() -> impl Strategy<Value = Multivector> {
    prop::array::uniform16(-1.0f64..1.0).prop_map(Multivector::from_coefficients)
}

fn vec1() -> impl Strategy<Value = Multivector> {
    prop::array::uniform4(-1.0f64..1.0).prop_map(Multivector::vector)
}

fn quat() -> impl Strategy<Value = Quaternion> {
    prop::array::uniform4(-2.0f64..2.0).prop_map(|[w, x, y, z]| Quaternion::new(w, x, y, z))
}

fn close(a: &Multivector, b: &Multivector, tol: f64) -> bool {
    (*a - *b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

#[test]
fn metric_and_anticommutation() {
    assert_eq!(e(E0) * e(E0), Multivector::scalar(1.0));
    for k in [E1, E2, E3] {
        assert_eq!(e(k) * e(k), Multivector::scalar(-1.0));
    }
    assert_eq!(e(E1) * e(E2), e(E12));
    assert_eq!(e(E2) * e(E1), -e(E12));
}

#[test]
fn quaternion_units_from_blade_table() {
    // e23 e31 = e12
    let e31 = -e(E13);
    assert_eq!(e(E23) * e31, e(E12));
    assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
    assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
    assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
    for q in [Quaternion::I, Quaternion::J, Quaternion::K] {
        assert_eq!(q * q, -Quaternion::ONE);
        assert_eq!(q.embed() * q.embed(), Multivector::scalar(-1.0));
    }
}

#[test]
fn grade_projection_examples() {
    let a = Multivector::scalar(1.0) + e(E0) + Multivector::pseudoscalar();
    assert_eq!(a.grade_project(4).unwrap(), Multivector::pseudoscalar());
    assert_eq!((e(E0) * e(E01)).grade_project(1).unwrap(), e(E1));
    assert!(a.grade_project(5).is_err());
}

#[test]
fn reversion_examples() {
    assert_eq!(e(E01).reversion(), -e(E01));
    assert_eq!(Multivector::pseudoscalar().reversion(), Multivector::pseudoscalar());
    assert_eq!(e(E123).reversion(), -e(E123));
    assert_eq!(e(E1).grade_involution(), -e(E1));
    assert_eq!(e(E12).grade_involution(), e(E12));
}

#[test]
fn contraction_examples() {
    assert_eq!(e(E0).left_contraction(&e(E01)), e(E1));
    assert_eq!(e(E1).left_contraction(&Multivector::scalar(1.0)), Multivector::zero());
    assert_eq!(e(E1).left_contraction(&e(E23)), Multivector::zero());
    assert_eq!(e(E1).wedge(&e(E1)), Multivector::zero());
    assert_eq!(e(E0).wedge(&e(E1)), e(E01));
}

/// g(a⌟b, c) = g(b, ã∧c) over every triple of basis blades.
#[test]
fn contraction_duality_exhaustive() {
    for a in 0..DIM {
        for b in 0..DIM {
            let lhs_vec = e(a).left_contraction(&e(b));
            for c in 0..DIM {
                let lhs = lhs_vec.scalar_product(&e(c));
                let rhs = e(b).scalar_product(&e(a).reversion().wedge(&e(c)));
                assert_eq!(lhs, rhs, "blades {a} {b} {c}");
            }
        }
    }
}

/// Brute-force sign bookkeeping: multiply generator lists and bubble-sort.
#[test]
fn sign_table_matches_generator_words() {
    fn word(i: usize) -> Vec<usize> {
        (0..4).filter(|k| blade::MASKS[i] & (1 << k) != 0).collect()
    }
    for a in 0..DIM {
        for b in 0..DIM {
            let mut w = word(a);
            w.extend(word(b));
            let mut sign = 1.0;
            // bubble sort counting swaps, then cancel equal neighbours
            for i in 0..w.len() {
                for j in 0..w.len() - 1 - i {
                    if w[j] > w[j + 1] {
                        w.swap(j, j + 1);
                        sign = -sign;
                    }
                }
            }
            let mut out = Vec::new();
            for g in w {
                if out.last() == Some(&g) {
                    out.pop();
                    sign *= if g == 0 { 1.0 } else { -1.0 };
                } else {
                    out.push(g);
                }
            }
            let mask: u8 = out.iter().map(|k| 1u8 << k).sum();
            let expected = e(blade::INDEX_OF_MASK[mask as usize]).scale(sign);
            assert_eq!(e(a) * e(b), expected, "{} * {}", blade::NAMES[a], blade::NAMES[b]);
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn chiral_matrices_match_block_form() {
    let g = gamma_matrices(Rep::Chiral);
    let s = pauli();
    let mut g0 = Mat4::zeros();
    for i in 0..2 {
        g0[(i, i + 2)] = c(1.0, 0.0);
        g0[(i + 2, i)] = c(1.0, 0.0);
    }
    assert_eq!(*g.gamma(0), g0);
    for k in 0..3 {
        let mut gk = Mat4::zeros();
        for i in 0..2 {
            for j in 0..2 {
                gk[(i, j + 2)] = -s[k][(i, j)];
                gk[(i + 2, j)] = s[k][(i, j)];
            }
        }
        assert_eq!(*g.gamma(k + 1), gk);
    }
    let g5 = g.gamma5();
    let expected =
        Mat4::from_diagonal(&nalgebra::Vector4::new(c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)));
    assert!((g5 - expected).norm() < 1e-15);
}

#[test]
fn standard_gamma0_is_diagonal() {
    let g = gamma_matrices(Rep::Standard);
    let expected =
        Mat4::from_diagonal(&nalgebra::Vector4::new(c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)));
    assert_eq!(*g.gamma(0), expected);
}

#[test]
fn anticommutation_both_reps() {
    let eta = [1.0, -1.0, -1.0, -1.0];
    for rep in [Rep::Chiral, Rep::Standard] {
        let g = gamma_matrices(rep);
        for mu in 0..4 {
            for nu in 0..4 {
                let ac = g.gamma(mu) * g.gamma(nu) + g.gamma(nu) * g.gamma(mu);
                let want = if mu == nu { 2.0 * eta[mu] } else { 0.0 };
                assert!((ac - Mat4::identity() * c(want, 0.0)).norm() < 1e-15);
            }
        }
    }
}

#[test]
fn similarity_transform_is_unitary_intertwiner() {
    let s = chiral_to_standard();
    assert!((s * s.adjoint() - Mat4::identity()).norm() < 1e-15);
    let (ch, st) = (gamma_matrices(Rep::Chiral), gamma_matrices(Rep::Standard));
    for i in 0..DIM {
        assert!((s * ch.blade(i) * s.adjoint() - st.blade(i)).norm() < 1e-14);
    }
}

#[test]
fn matrix_representation_is_faithful() {
    for rep in [Rep::Chiral, Rep::Standard] {
        let g = gamma_matrices(rep);
        for a in 0..DIM {
            for b in 0..DIM {
                let prod = (e(a) * e(b)).to_complex();
                let lhs = g.blade(a) * g.blade(b);
                assert!((lhs - g.matrix_of(&prod)).norm() < 1e-14);
            }
            let back = g.decompose(g.blade(a));
            assert!((back - e(a).to_complex()).norm() < 1e-15);
        }
    }
}

proptest! {
    #[test]
    fn associativity(a in mv(), b in mv(), cc in mv()) {
        prop_assert!(close(&((a * b) * cc), &(a * (b * cc)), 1e-12));
    }

    #[test]
    fn reversion_is_anti_automorphism(a in mv(), b in mv()) {
        prop_assert!(close(&(a * b).reversion(), &(b.reversion() * a.reversion()), 1e-12));
    }

    #[test]
    fn involution_is_automorphism(a in mv(), b in mv()) {
        prop_assert!(close(&(a * b).grade_involution(), &(a.grade_involution() * b.grade_involution()), 1e-12));
    }

    #[test]
    fn grade_completeness(a in mv()) {
        let sum = (0..=4).fold(Multivector::zero(), |acc, k| acc + a.grade_project(k).unwrap());
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn vector_product_decomposition(v in vec1(), w in vec1()) {
        prop_assert!(close(&(v.wedge(&w) + v.left_contraction(&w)), &(v * w), 1e-14));
        prop_assert!(close(&v.wedge(&w), &-w.wedge(&v), 1e-14));
    }

    #[test]
    fn quaternion_embedding(p in quat(), q in quat()) {
        let lhs = (p * q).embed();
        prop_assert!(close(&lhs, &(p.embed() * q.embed()), 1e-12));
        prop_assert_eq!(Quaternion::from_multivector(&p.embed()), p);
        let n = p * p.conjugate();
        prop_assert!((n.w - p.norm_sqr()).abs() < 1e-12 && n.x.abs() + n.y.abs() + n.z.abs() < 1e-12);
    }

    #[test]
    fn matrix_homomorphism(a in mv(), b in mv()) {
        for rep in [Rep::Chiral, Rep::Standard] {
            let g = gamma_matrices(rep);
            let (ca, cb): (ComplexMultivector, ComplexMultivector) = (a.into(), b.into());
            let lhs = g.matrix_of(&(ca * cb));
            let rhs = g.matrix_of(&ca) * g.matrix_of(&cb);
            prop_assert!((lhs - rhs).norm() < 1e-12 * lhs.norm().max(1.0));
        }
    }
}
