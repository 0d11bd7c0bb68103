//! 4×4 complex matrix representations of Cl(1,3).
//!
//! The generator e_μ is represented by γ_μ. Chiral matrices are
//! `γ0 = [[0, 1], [1, 0]]`, `γk = [[0, −σk], [σk, 0]]`; standard (Dirac)
//! matrices are `γ0 = diag(1, 1, −1, −1)` with the same spatial γk.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::blade::{self, DIM, MASKS};
use crate::clifford::ComplexMultivector;
use crate::error::CliffordError;

pub type Mat4 = Matrix4<Complex64>;
pub type Mat2 = Matrix2<Complex64>;

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    #[default]
    Chiral,
    Standard,
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rep::Chiral => "chiral",
            Rep::Standard => "standard",
        })
    }
}

impl FromStr for Rep {
    type Err = CliffordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "chiral" | "weyl" => Ok(Rep::Chiral),
            "standard" | "dirac" => Ok(Rep::Standard),
            _ => Err(CliffordError::UnknownRep(s.to_string())),
        }
    }
}

/// Pauli matrices σ1, σ2, σ3.
pub fn pauli() -> [Mat2; 3] {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    [Mat2::new(o, l, l, o), Mat2::new(o, -i, i, o), Mat2::new(l, o, o, -l)]
}

fn blocks(a: Mat2, b: Mat2, cc: Mat2, d: Mat2) -> Mat4 {
    let mut m = Mat4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(&a);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(&b);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(&cc);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(&d);
    m
}

/// The complete matrix set of one representation.
#[derive(Clone, Debug)]
pub struct GammaRep {
    rep: Rep,
    blades: [Mat4; DIM],
}

static CHIRAL: LazyLock<GammaRep> = LazyLock::new(|| GammaRep::build(Rep::Chiral));
static STANDARD: LazyLock<GammaRep> = LazyLock::new(|| GammaRep::build(Rep::Standard));

/// Matrix set for the given representation.
pub fn gamma_matrices(rep: Rep) -> &'static GammaRep {
    match rep {
        Rep::Chiral => &CHIRAL,
        Rep::Standard => &STANDARD,
    }
}

impl GammaRep {
    fn build(rep: Rep) -> Self {
        let s = pauli();
        let z = Mat2::zeros();
        let one = Mat2::identity();
        let g0 = match rep {
            Rep::Chiral => blocks(z, one, one, z),
            Rep::Standard => blocks(one, z, z, -one),
        };
        let gk = |k: usize| blocks(z, -s[k], s[k], z);
        let gens = [g0, gk(0), gk(1), gk(2)];
        let blades = std::array::from_fn(|i| {
            let mut m = Mat4::identity();
            for (k, g) in gens.iter().enumerate() {
                if MASKS[i] & (1 << k) != 0 {
                    m *= g;
                }
            }
            m
        });
        Self { rep, blades }
    }

    pub fn rep(&self) -> Rep {
        self.rep
    }

    /// γ_μ, the image of e_μ.
    pub fn gamma(&self, mu: usize) -> &Mat4 {
        &self.blades[blade::vector(mu)]
    }

    /// Matrix of the basis blade with canonical index `i`.
    pub fn blade(&self, i: usize) -> &Mat4 {
        &self.blades[i]
    }

    /// γ0γ1γ2γ3, the image of e0123.
    pub fn pseudoscalar(&self) -> &Mat4 {
        &self.blades[blade::E0123]
    }

    /// γ5 = iγ0γ1γ2γ3.
    pub fn gamma5(&self) -> Mat4 {
        self.pseudoscalar() * c(0.0, 1.0)
    }

    pub fn matrix_of(&self, m: &ComplexMultivector) -> Mat4 {
        m.coefficients().iter().zip(self.blades.iter()).fold(Mat4::zeros(), |acc, (coef, b)| acc + b * *coef)
    }

    /// Inverse of [`GammaRep::matrix_of`]: c_A = tr(Γ_A⁻¹ M)/4 with Γ_A⁻¹ = Γ_A²·Γ_A.
    pub fn decompose(&self, m: &Mat4) -> ComplexMultivector {
        ComplexMultivector::from_coefficients(std::array::from_fn(|i| {
            let inv = self.blades[i] * c(f64::from(blade::square(i)), 0.0);
            (inv * m).trace() / 4.0
        }))
    }
}

/// Unitary S with S γ_μ(chiral) S⁻¹ = γ_μ(standard), so ψ_standard = S ψ_chiral.
pub fn chiral_to_standard() -> Mat4 {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let (p, n, o) = (c(h, 0.0), c(-h, 0.0), c(0.0, 0.0));
    Mat4::new(
        p, o, p, o, //
        o, p, o, p, //
        n, o, p, o, //
        o, n, o, p,
    )
}

/// Change-of-basis matrix taking columns in `from` to columns in `to`.
pub fn similarity(from: Rep, to: Rep) -> Mat4 {
    match (from, to) {
        (Rep::Chiral, Rep::Standard) => chiral_to_standard(),
        (Rep::Standard, Rep::Chiral) => chiral_to_standard().adjoint(),
        _ => Mat4::identity(),
    }
}
