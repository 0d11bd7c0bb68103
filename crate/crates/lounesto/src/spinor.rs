use std::ops::{Add, Sub};

use nalgebra::{RowVector4, Vector4};
use num_complex::Complex64;

use crate::error::SpinorError;
use crate::gamma::{gamma_matrices, similarity, Rep};

pub type Col4 = Vector4<Complex64>;
pub type Row4 = RowVector4<Complex64>;

/// Four complex components in a named gamma representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorC4 {
    pub components: [Complex64; 4],
    pub rep: Rep,
}

impl SpinorC4 {
    pub const fn new(components: [Complex64; 4], rep: Rep) -> Self {
        Self { components, rep }
    }

    /// Checked constructor rejecting NaN and infinite components.
    pub fn try_new(components: [Complex64; 4], rep: Rep) -> Result<Self, SpinorError> {
        match components.iter().position(|z| !z.is_finite()) {
            Some(i) => Err(SpinorError::NonFinite(i)),
            None => Ok(Self { components, rep }),
        }
    }

    pub fn from_reals(re_im: [[f64; 2]; 4], rep: Rep) -> Self {
        Self::new(re_im.map(|[a, b]| Complex64::new(a, b)), rep)
    }

    pub fn zero(rep: Rep) -> Self {
        Self::new([Complex64::new(0.0, 0.0); 4], rep)
    }

    pub fn from_column(col: &Col4, rep: Rep) -> Self {
        Self::new([col[0], col[1], col[2], col[3]], rep)
    }

    pub fn column(&self) -> Col4 {
        Col4::from_column_slice(&self.components)
    }

    /// Same physical spinor expressed in another representation.
    pub fn to_rep(&self, rep: Rep) -> Self {
        if rep == self.rep {
            return *self;
        }
        Self::from_column(&(similarity(self.rep, rep) * self.column()), rep)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.components.map(|z| z * s), self.rep)
    }

    pub fn normalized(&self) -> Self {
        self.scale(Complex64::new(1.0 / self.norm(), 0.0))
    }

    /// Complex conjugate components (no change of representation).
    pub fn conj(&self) -> Self {
        Self::new(self.components.map(|z| z.conj()), self.rep)
    }

    /// Dirac adjoint ψ̄ = ψ†γ0 as a row.
    pub fn dirac_adjoint(&self) -> Row4 {
        self.column().adjoint() * gamma_matrices(self.rep).gamma(0)
    }

    /// Euclidean distance to `other`, converted to this representation.
    pub fn distance(&self, other: &Self) -> f64 {
        (*self - other.to_rep(self.rep)).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|z| z.is_finite())
    }

    /// Upper and lower two-component blocks.
    pub fn blocks(&self) -> ([Complex64; 2], [Complex64; 2]) {
        let c = self.components;
        ([c[0], c[1]], [c[2], c[3]])
    }
}

impl Add for SpinorC4 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let rhs = rhs.to_rep(self.rep);
        Self::new(std::array::from_fn(|i| self.components[i] + rhs.components[i]), self.rep)
    }
}

impl Sub for SpinorC4 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let rhs = rhs.to_rep(self.rep);
        Self::new(std::array::from_fn(|i| self.components[i] - rhs.components[i]), self.rep)
    }
}
