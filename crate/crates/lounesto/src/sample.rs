//! Seeded generators for random and constructed spinors. Each sample index
//! owns a ChaCha stream, so results do not depend on evaluation order.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::classify::ClassLabel;
use crate::clifford::Quaternion;
use crate::elko::{dirac_with_duality_angle, elko_rest, majorana_from_weyl, weyl, Conjugacy, WeylC2};
use crate::flag_dipole::{operator_spinor_projection, DirectionElement};
use crate::gamma::Rep;
use crate::representation::OperatorSpinor;
use crate::spinor::SpinorC4;

/// Generator for sample `index` under `seed`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn normal(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(normal(rng), normal(rng))
}

/// Gaussian components; generically class 1.
pub fn random_spinor(rng: &mut impl Rng, rep: Rep) -> SpinorC4 {
    SpinorC4::new(std::array::from_fn(|_| complex(rng)), rep)
}

pub fn random_weyl(rng: &mut impl Rng) -> WeylC2 {
    WeylC2::new(complex(rng), complex(rng))
}

/// Uniform on S³.
pub fn random_unit_quaternion(rng: &mut impl Rng) -> Quaternion {
    loop {
        let q = Quaternion::new(normal(rng), normal(rng), normal(rng), normal(rng));
        let n = q.norm();
        if n > 1e-6 {
            return q.scale(1.0 / n);
        }
    }
}

pub fn random_momentum(rng: &mut impl Rng, max: f64) -> [f64; 3] {
    std::array::from_fn(|_| rng.gen_range(-max..max))
}

pub fn random_operator(rng: &mut impl Rng) -> OperatorSpinor {
    OperatorSpinor::from_coefficients(std::array::from_fn(|_| normal(rng)))
}

/// Spatial direction with |u·γ3| kept away from 0 and 1, so the projection
/// is a flag-dipole rather than a flagpole or dipole.
pub fn random_admissible_direction(rng: &mut impl Rng) -> DirectionElement {
    loop {
        let v = [normal(rng), normal(rng), normal(rng)];
        if let Ok(u) = DirectionElement::spatial_normalized(v) {
            let h = u.doran_h().abs();
            if h > 0.05 && h < 0.95 {
                return u;
            }
        }
    }
}

/// Spinor of the requested class built from its defining construction.
pub fn class_witness(label: ClassLabel, rng: &mut impl Rng) -> SpinorC4 {
    let phi = random_weyl(rng);
    let p = random_momentum(rng, 2.0);
    let m = rng.gen_range(0.5..2.0);
    let eps = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let dirac =
        |theta: f64| dirac_with_duality_angle(&phi, p, m, eps, theta).expect("mass and epsilon are valid");
    match label {
        ClassLabel::One => dirac(rng.gen_range(0.2..1.3)),
        ClassLabel::Two => dirac(0.0),
        ClassLabel::Three => dirac(std::f64::consts::FRAC_PI_2),
        ClassLabel::FlagDipole => {
            let u = random_admissible_direction(rng);
            operator_spinor_projection(&random_operator(rng), &u)
        }
        ClassLabel::Flagpole => {
            if rng.gen_bool(0.5) {
                let conj =
                    if rng.gen_bool(0.5) { Conjugacy::SelfConjugate } else { Conjugacy::AntiSelfConjugate };
                elko_rest(&phi, conj).expect("phi is nonzero").base
            } else {
                let xi = weyl(&phi, rng.gen_bool(0.5));
                let (plus, minus) = majorana_from_weyl(&xi).expect("weyl spinors are chiral");
                if rng.gen_bool(0.5) {
                    plus
                } else {
                    minus
                }
            }
        }
        ClassLabel::Dipole => weyl(&phi, rng.gen_bool(0.5)),
    }
}

/// Mixed population: half random regular spinors, the rest cycling through
/// the constructed witnesses of all six classes.
pub fn mixed_spinor(seed: u64, index: u64) -> (SpinorC4, Option<ClassLabel>) {
    let mut rng = rng_for(seed, index);
    if index.is_multiple_of(2) {
        return (random_spinor(&mut rng, Rep::Chiral), None);
    }
    let label = ClassLabel::ALL[((index / 2) % 6) as usize];
    (class_witness(label, &mut rng), Some(label))
}
