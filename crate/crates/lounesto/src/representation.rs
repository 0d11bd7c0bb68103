//! Operator (even subalgebra), ideal, column and quaternion-pair spinors.
//!
//! The ideal is (ℂ⊗Cl(1,3))f with f = ¼(1+γ0)(1+iγ12), which is
//! diag(1,0,0,0) in the standard representation, so the ideal element ΨF
//! has the column spinor as its first column.

use num_complex::Complex64;

use crate::clifford::blade::{E01, E0123, E02, E03, E12, E13, E23, SCALAR};
use crate::clifford::{ComplexMultivector, Multivector, Quaternion};
use crate::error::FrameError;
use crate::gamma::{gamma_matrices, Mat4, Rep};
use crate::spinor::SpinorC4;

/// Even multivector c + c01e01 + c02e02 + c03e03 + c12e12 + c13e13 + c23e23 + c0123e0123.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct OperatorSpinor {
    psi: Multivector,
}

impl OperatorSpinor {
    /// Rejects odd-grade coefficients above `tol·max(1, ‖Ψ‖)`.
    pub fn new(psi: Multivector, tol: f64) -> Result<Self, FrameError> {
        let odd = psi.odd_part().norm();
        if odd > tol * psi.norm().max(1.0) {
            return Err(FrameError::OddContamination(odd));
        }
        Ok(Self { psi: psi.even_part() })
    }

    /// From (c, c01, c02, c03, c12, c13, c23, c0123).
    pub fn from_coefficients(c: [f64; 8]) -> Self {
        let mut psi = Multivector::zero();
        for (k, blade) in [SCALAR, E01, E02, E03, E12, E13, E23, E0123].into_iter().enumerate() {
            psi.set_coefficient(blade, c[k]);
        }
        Self { psi }
    }

    pub fn coefficients(&self) -> [f64; 8] {
        [SCALAR, E01, E02, E03, E12, E13, E23, E0123].map(|b| self.psi.coefficient(b))
    }

    pub fn multivector(&self) -> &Multivector {
        &self.psi
    }
}

/// Primitive idempotent f = ¼(1+e0)(1+ie12) in the complexified algebra.
pub fn primitive_idempotent() -> ComplexMultivector {
    let one = ComplexMultivector::scalar(Complex64::new(1.0, 0.0));
    let a = one + Multivector::basis(crate::clifford::blade::E0).to_complex();
    let b = one + Multivector::basis(E12).to_complex().scale(Complex64::new(0.0, 1.0));
    (a * b).scale(Complex64::new(0.25, 0.0))
}

/// An element Φf of the minimal left ideal as a standard-representation matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdealSpinor {
    pub matrix: Mat4,
}

impl IdealSpinor {
    pub fn from_column(psi: &SpinorC4) -> Self {
        let col = psi.to_rep(Rep::Standard).column();
        let mut matrix = Mat4::zeros();
        matrix.set_column(0, &col);
        Self { matrix }
    }

    pub fn column(&self) -> SpinorC4 {
        SpinorC4::from_column(&self.matrix.column(0).into_owned(), Rep::Standard)
    }
}

/// Ψ ↦ Ψf evaluated through the standard-representation matrices.
pub fn even_to_ideal(psi: &OperatorSpinor) -> IdealSpinor {
    let g = gamma_matrices(Rep::Standard);
    let matrix = g.matrix_of(&psi.psi.to_complex()) * g.matrix_of(&primitive_idempotent());
    IdealSpinor { matrix }
}

pub fn ideal_to_c4(ideal: &IdealSpinor) -> SpinorC4 {
    ideal.column()
}

/// φ1 = c − ic12, φ2 = −c13 − ic23, φ3 = −c03 + ic0123, φ4 = −c01 − ic02.
pub fn operator_to_c4(psi: &OperatorSpinor) -> SpinorC4 {
    let [c, c01, c02, c03, c12, c13, c23, c0123] = psi.coefficients();
    let z = Complex64::new;
    SpinorC4::new([z(c, -c12), z(-c13, -c23), z(-c03, c0123), z(-c01, -c02)], Rep::Standard)
}

/// Inverse of [`operator_to_c4`]; any representation is accepted.
pub fn c4_to_operator(psi: &SpinorC4) -> OperatorSpinor {
    let [p1, p2, p3, p4] = psi.to_rep(Rep::Standard).components;
    OperatorSpinor::from_coefficients([p1.re, -p4.re, -p4.im, -p3.re, -p1.im, -p2.re, -p2.im, p3.im])
}

pub fn ideal_to_even(ideal: &IdealSpinor) -> OperatorSpinor {
    c4_to_operator(&ideal.column())
}

/// (q1, q2) ∈ ℍ².
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct QuaternionPair {
    pub q1: Quaternion,
    pub q2: Quaternion,
}

impl QuaternionPair {
    pub fn norm_sqr(&self) -> f64 {
        self.q1.norm_sqr() + self.q2.norm_sqr()
    }

    /// Right action (q1u, q2u).
    pub fn right_mul(&self, u: Quaternion) -> Self {
        Self { q1: self.q1 * u, q2: self.q2 * u }
    }
}

/// q1 = c + c23𝔦 − c13𝔧 + c12𝔨, q2 = c0123 − c01𝔦 − c02𝔧 − c03𝔨.
pub fn operator_to_quaternion_pair(psi: &OperatorSpinor) -> QuaternionPair {
    let [c, c01, c02, c03, c12, c13, c23, c0123] = psi.coefficients();
    QuaternionPair { q1: Quaternion::new(c, c23, -c13, c12), q2: Quaternion::new(c0123, -c01, -c02, -c03) }
}

pub fn quaternion_pair_to_operator(q: &QuaternionPair) -> OperatorSpinor {
    let (a, b) = (q.q1, q.q2);
    OperatorSpinor::from_coefficients([a.w, -b.x, -b.y, -b.z, a.z, -a.y, a.x, b.w])
}

pub fn c4_to_quaternion_pair(psi: &SpinorC4) -> QuaternionPair {
    operator_to_quaternion_pair(&c4_to_operator(psi))
}

pub fn quaternion_pair_to_c4(q: &QuaternionPair) -> SpinorC4 {
    operator_to_c4(&quaternion_pair_to_operator(q))
}
