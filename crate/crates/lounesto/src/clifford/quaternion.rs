use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::blade;
use super::multivector::Multivector;

/// Real quaternion w + x𝔦 + y𝔧 + z𝔨, embedded in Cl(1,3) through
/// 𝔦 = e23, 𝔧 = e31 = −e13, 𝔨 = e12.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn embed(&self) -> Multivector {
        let mut m = Multivector::scalar(self.w);
        m.set_coefficient(blade::E23, self.x);
        m.set_coefficient(blade::E13, -self.y);
        m.set_coefficient(blade::E12, self.z);
        m
    }

    /// Reads the span of {1, e23, e31, e12}; other blades are ignored.
    pub fn from_multivector(m: &Multivector) -> Self {
        Self::new(
            m.scalar_part(),
            m.coefficient(blade::E23),
            -m.coefficient(blade::E13),
            m.coefficient(blade::E12),
        )
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, q: Self) -> Self {
        Self::new(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, q: Self) -> Self {
        Self::new(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Quaternion {
    /// Euclidean distance between coefficient arrays.
    pub fn distance_to(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }
}
