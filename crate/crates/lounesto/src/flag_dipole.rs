//! Type-4 (flag-dipole) spinors from the operator form Ψ½(1+γ0u), their
//! boomerang, the Σ± projectors and the limits to classes 5 and 6.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::bilinear::{bilinears, BilinearSet, FierzAggregate};
use crate::classify::{classify, LounestoClass};
use crate::clifford::blade::{self, E0, E1, E2, E3};
use crate::clifford::{ComplexMultivector, Multivector};
use crate::error::FrameError;
use crate::gamma::{gamma_matrices, Rep};
use crate::representation::{IdealSpinor, OperatorSpinor};
use crate::spinor::SpinorC4;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Sign relating K = DORAN_SIGN·(u·γ3)·J, calibrated against measured
/// bilinears of reference spinors.
pub const DORAN_SIGN: f64 = 1.0;

/// Spatial unit 1-vector u with u² = −1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DirectionElement {
    u: Multivector,
}

impl DirectionElement {
    /// Validates grade, time component and u² = −1 within `tol`.
    pub fn from_multivector(u: Multivector, tol: f64) -> Result<Self, FrameError> {
        let grades = u.grades_present(tol * u.norm().max(1.0));
        if grades.iter().any(|&g| g != 1) {
            return Err(FrameError::NotVector(grades));
        }
        let u = u.grade_part(1);
        let t = u.coefficient(E0);
        if t.abs() > tol {
            return Err(FrameError::NotSpatial(t));
        }
        let sq = u.vector_square();
        if (sq + 1.0).abs() > tol {
            return Err(FrameError::NotUnitSpacelike(sq));
        }
        Ok(Self { u })
    }

    /// u = v1e1 + v2e2 + v3e3 for a Euclidean unit v.
    pub fn spatial(v: [f64; 3], tol: f64) -> Result<Self, FrameError> {
        Self::from_multivector(Multivector::vector([0.0, v[0], v[1], v[2]]), tol)
    }

    /// Normalizes a nonzero v before validation.
    pub fn spatial_normalized(v: [f64; 3]) -> Result<Self, FrameError> {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(n > 0.0 && n.is_finite()) {
            return Err(FrameError::NotUnitSpacelike(0.0));
        }
        Self::spatial(v.map(|x| x / n), 1e-12)
    }

    /// γ1 cos ϕ + 𝐢γ3 sin ϕ with 𝐢 = −γ2γ3.
    pub fn elko_mixture(phi: f64) -> Self {
        let e = Multivector::basis;
        let bold_i = -(e(E2) * e(E3));
        let u = e(E1).scale(phi.cos()) + (bold_i * e(E3)).scale(phi.sin());
        Self { u }
    }

    pub fn multivector(&self) -> &Multivector {
        &self.u
    }

    pub fn spatial_components(&self) -> [f64; 3] {
        [self.u.coefficient(E1), self.u.coefficient(E2), self.u.coefficient(E3)]
    }

    pub fn doran_h(&self) -> f64 {
        DORAN_SIGN * self.u.scalar_product(&Multivector::basis(E3))
    }
}

/// h = u·γ3 = ⟨u e3⟩₀ for a 1-vector u.
pub fn doran_h(u: &Multivector, tol: f64) -> Result<f64, FrameError> {
    let grades = u.grades_present(tol * u.norm().max(1.0));
    if grades.iter().any(|&g| g != 1) {
        return Err(FrameError::NotVector(grades));
    }
    Ok(DORAN_SIGN * u.scalar_product(&Multivector::basis(E3)))
}

/// Column of the ideal element Ψ½(1+γ0u)f, returned in the chiral representation.
pub fn operator_spinor_projection(psi: &OperatorSpinor, u: &DirectionElement) -> SpinorC4 {
    let e0u = Multivector::basis(E0) * u.u;
    let projector = (Multivector::scalar(1.0) + e0u).scale(0.5);
    let x = (*psi.multivector() * projector).to_complex();
    let m = gamma_matrices(Rep::Standard).matrix_of(&x);
    SpinorC4::from_column(&m.column(0).into_owned(), Rep::Standard).to_rep(Rep::Chiral)
}

/// Null current J, spacelike s with J⌟s = 0 and S = J∧s, and K = hJ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlagDipoleFrame {
    pub j: Multivector,
    pub s: Multivector,
    pub h: f64,
}

fn vector_only(m: &Multivector, name: &str, tol: f64) -> Result<(), FrameError> {
    let grades = m.grades_present(tol * m.norm().max(1.0));
    if grades.iter().any(|&g| g != 1) {
        return Err(FrameError::Invariant(format!("{name} must be a 1-vector, found grades {grades:?}")));
    }
    Ok(())
}

impl FlagDipoleFrame {
    /// Checks J² = 0, J⌟s = 0 and s² < 0; h is free.
    pub fn new(j: Multivector, s: Multivector, h: f64, tol: f64) -> Result<Self, FrameError> {
        vector_only(&j, "J", tol)?;
        vector_only(&s, "s", tol)?;
        let scale = j.norm().powi(2).max(1.0);
        if j.vector_square().abs() > tol * scale {
            return Err(FrameError::Invariant(format!("J^2 = {:.3e} is not null", j.vector_square())));
        }
        let dot = j.left_contraction(&s).scalar_part();
        if dot.abs() > tol * j.norm().max(1.0) * s.norm().max(1.0) {
            return Err(FrameError::Invariant(format!("J.s = {dot:.3e} is not zero")));
        }
        if s.vector_square() >= 0.0 {
            return Err(FrameError::Invariant(format!("s^2 = {:.3e} is not negative", s.vector_square())));
        }
        Ok(Self { j, s, h })
    }

    /// Frame of a singular spinor: h from the dominant component of J, s as
    /// the minimum-norm solution of S = J∧s, J⌟s = 0.
    pub fn from_bilinears(b: &BilinearSet, tol: f64) -> Result<Self, FrameError> {
        let class = classify(b, tol).map_err(|e| FrameError::Invariant(e.to_string()))?;
        if class.regular {
            return Err(FrameError::NotFlagDipole(class.label.number()));
        }
        let j = b.current();
        let jc = j.vector_part();
        let kc = b.axial().vector_part();
        let dom = (0..4).max_by(|&a, &c| jc[a].abs().total_cmp(&jc[c].abs())).unwrap_or(0);
        let h = kc[dom] / jc[dom];
        let spin = b.spin();
        let mut a = DMatrix::<f64>::zeros(7, 4);
        for nu in 0..4 {
            let e = Multivector::basis(blade::vector(nu));
            let w = j.wedge(&e);
            for (row, &bv) in blade::BIVECTORS.iter().enumerate() {
                a[(row, nu)] = w.coefficient(bv);
            }
            a[(6, nu)] = j.left_contraction(&e).scalar_part();
        }
        let mut rhs = DVector::<f64>::zeros(7);
        for (row, &bv) in blade::BIVECTORS.iter().enumerate() {
            rhs[row] = spin.coefficient(bv);
        }
        let eps = 1e-9 * a.norm().max(f64::MIN_POSITIVE);
        let sol = a.svd(true, true).solve(&rhs, eps).map_err(|e| FrameError::Invariant(e.to_string()))?;
        let s = Multivector::vector([sol[0], sol[1], sol[2], sol[3]]);
        let fit = (j.wedge(&s) - spin).norm();
        if fit > 1e-8 * spin.norm().max(j.norm().powi(2)).max(f64::MIN_POSITIVE) {
            return Err(FrameError::Invariant(format!("S is not of the form J^s (residual {fit:.3e})")));
        }
        Ok(Self { j, s, h })
    }

    pub fn from_spinor(psi: &SpinorC4, tol: f64) -> Result<Self, FrameError> {
        Self::from_bilinears(&bilinears(psi), tol)
    }

    /// h² − 1 − s².
    pub fn constraint_residual(&self) -> f64 {
        self.h * self.h - 1.0 - self.s.vector_square()
    }

    /// (1 + is + ihγ0123) as a complex multivector; `h_sign` flips the last term.
    fn annihilator(&self, h_sign: f64) -> ComplexMultivector {
        let one = ComplexMultivector::scalar(Complex64::new(1.0, 0.0));
        let s = self.s.to_complex().scale(I);
        let p = Multivector::pseudoscalar().to_complex().scale(I * self.h * h_sign);
        one + s + p
    }
}

/// Z = J + iJs − ihγ0123J.
pub fn type4_boomerang(frame: &FlagDipoleFrame) -> FierzAggregate {
    let j = frame.j.to_complex();
    let js = (frame.j * frame.s).to_complex().scale(I);
    let pj = (Multivector::pseudoscalar() * frame.j).to_complex().scale(-I * frame.h);
    FierzAggregate::new(j + js + pj)
}

/// Identities of the type-4 boomerang, as absolute coefficient norms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoomerangIdentities {
    pub z_norm: f64,
    /// ‖Z²‖.
    pub z_squared: f64,
    /// ‖(1 + is + ihγ0123)Z‖, zero exactly when h² = 1 + s².
    pub annihilator: f64,
    /// ‖(1 + is − ihγ0123)Z‖, the sign pattern with the opposite h term.
    pub annihilator_opposite: f64,
    /// ‖Z(1 − is − ihγ0123)‖.
    pub right_annihilator: f64,
    /// ‖Z − J(1 + is + ihγ0123)‖.
    pub factorization: f64,
}

pub fn boomerang_identities(frame: &FlagDipoleFrame) -> BoomerangIdentities {
    let z = type4_boomerang(frame).z;
    let one = ComplexMultivector::scalar(Complex64::new(1.0, 0.0));
    let left = frame.annihilator(1.0);
    let right = one + one - left;
    BoomerangIdentities {
        z_norm: z.norm(),
        z_squared: (z * z).norm(),
        annihilator: (left * z).norm(),
        annihilator_opposite: (frame.annihilator(-1.0) * z).norm(),
        right_annihilator: (z * right).norm(),
        factorization: (z - frame.j.to_complex() * left).norm(),
    }
}

/// Σ±(Ψ) = ½(Ψ ± (s + hγ0123)Ψγ1γ2) on the ideal form of `psi`.
pub fn sigma_projector(psi: &SpinorC4, s: &Multivector, h: f64, sign: f64) -> SpinorC4 {
    let g = gamma_matrices(Rep::Standard);
    let lambda = IdealSpinor::from_column(psi).matrix;
    let left = g.matrix_of(&(*s + Multivector::pseudoscalar().scale(h)).to_complex());
    let g12 = g.blade(blade::E12);
    let out = (lambda + left * lambda * g12 * Complex64::new(sign, 0.0)) * Complex64::new(0.5, 0.0);
    SpinorC4::from_column(&out.column(0).into_owned(), Rep::Standard).to_rep(psi.rep)
}

/// ‖Σ±(Σ±Ψ) − Σ±Ψ‖.
pub fn projector_idempotency(psi: &SpinorC4, s: &Multivector, h: f64, sign: f64) -> f64 {
    let once = sigma_projector(psi, s, h, sign);
    sigma_projector(&once, s, h, sign).distance(&once)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Limit {
    /// h → 0 with h² = 1 + s² kept, ending in class 5.
    HToZero,
    /// s → 0 with h = ±√(1 + s²), ending in class 6.
    SToZero,
}

/// Frame parameters at path position t ∈ [0, 1]; t = 1 is the input frame.
pub fn limit_frame(frame: &FlagDipoleFrame, which: Limit, t: f64) -> (Multivector, f64) {
    let s2 = frame.s.vector_square();
    match which {
        Limit::HToZero => {
            let h = t * frame.h;
            (frame.s.scale(((1.0 - h * h) / -s2).sqrt()), h)
        }
        Limit::SToZero => {
            let sign = if frame.h < 0.0 { -1.0 } else { 1.0 };
            (frame.s.scale(t), sign * (1.0 + t * t * s2).max(0.0).sqrt())
        }
    }
}

/// Σ₊ with the path frame at t applied to the type-4 spinor `psi`.
pub fn class_limit(
    psi: &SpinorC4,
    frame: &FlagDipoleFrame,
    which: Limit,
    t: f64,
    tol: f64,
) -> Result<(SpinorC4, LounestoClass), FrameError> {
    let (s, h) = limit_frame(frame, which, t);
    let out = sigma_projector(psi, &s, h, 1.0);
    let class = classify(&bilinears(&out), tol).map_err(|e| FrameError::Invariant(e.to_string()))?;
    Ok((out, class))
}
