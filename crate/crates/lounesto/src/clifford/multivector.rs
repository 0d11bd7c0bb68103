use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Num;

use super::blade::{self, DIM, PRODUCT};
use crate::error::CliffordError;

/// Scalar field for multivector coefficients.
pub trait Coefficient: Copy + Num + Neg<Output = Self> + fmt::Debug + Send + Sync + 'static {
    fn abs_sqr(self) -> f64;
    fn from_real(x: f64) -> Self;
}

impl Coefficient for f64 {
    #[inline]
    fn abs_sqr(self) -> f64 {
        self * self
    }
    #[inline]
    fn from_real(x: f64) -> Self {
        x
    }
}

impl Coefficient for Complex64 {
    #[inline]
    fn abs_sqr(self) -> f64 {
        self.norm_sqr()
    }
    #[inline]
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
}

/// Element of Cl(1,3) over a coefficient field, stored as 16 coefficients in
/// the canonical blade order of [`blade::MASKS`].
#[derive(Clone, Copy, PartialEq)]
pub struct GenericMultivector<T: Coefficient> {
    coefficients: [T; DIM],
}

/// Real multivector.
pub type Multivector = GenericMultivector<f64>;
/// Complexified multivector, the carrier of Fierz aggregates.
pub type ComplexMultivector = GenericMultivector<Complex64>;

impl<T: Coefficient> Default for GenericMultivector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coefficient> GenericMultivector<T> {
    pub fn zero() -> Self {
        Self { coefficients: [T::zero(); DIM] }
    }

    pub fn from_coefficients(coefficients: [T; DIM]) -> Self {
        Self { coefficients }
    }

    pub fn scalar(s: T) -> Self {
        Self::basis(blade::SCALAR).scale(s)
    }

    /// The basis blade with canonical index `i`.
    pub fn basis(i: usize) -> Self {
        let mut m = Self::zero();
        m.coefficients[i] = T::one();
        m
    }

    /// 1-vector Σ v[μ] e_μ.
    pub fn vector(v: [T; 4]) -> Self {
        let mut m = Self::zero();
        for (mu, x) in v.into_iter().enumerate() {
            m.coefficients[blade::vector(mu)] = x;
        }
        m
    }

    /// The unit pseudoscalar e0123.
    pub fn pseudoscalar() -> Self {
        Self::basis(blade::E0123)
    }

    pub fn coefficients(&self) -> &[T; DIM] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> T {
        self.coefficients[i]
    }

    pub fn set_coefficient(&mut self, i: usize, value: T) {
        self.coefficients[i] = value;
    }

    /// Coefficients of e0..e3.
    pub fn vector_part(&self) -> [T; 4] {
        std::array::from_fn(|mu| self.coefficients[blade::vector(mu)])
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|_, c| c * s)
    }

    fn map(&self, f: impl Fn(usize, T) -> T) -> Self {
        Self { coefficients: std::array::from_fn(|i| f(i, self.coefficients[i])) }
    }

    fn signed(&self, sign: impl Fn(usize) -> i8) -> Self {
        self.map(|i, c| if sign(i) < 0 { -c } else { c })
    }

    /// Sum over blade pairs selected by `keep(i, j)`.
    fn product_where(&self, other: &Self, keep: impl Fn(usize, usize) -> bool) -> Self {
        let mut out = [T::zero(); DIM];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == T::zero() {
                continue;
            }
            for (j, &b) in other.coefficients.iter().enumerate() {
                if b == T::zero() || !keep(i, j) {
                    continue;
                }
                let (sign, k) = PRODUCT[i][j];
                let ab = a * b;
                if sign > 0 {
                    out[k as usize] = out[k as usize] + ab;
                } else {
                    out[k as usize] = out[k as usize] - ab;
                }
            }
        }
        Self { coefficients: out }
    }

    pub fn geometric_product(&self, other: &Self) -> Self {
        self.product_where(other, |_, _| true)
    }

    /// Exterior product: blade pairs sharing no generator.
    pub fn wedge(&self, other: &Self) -> Self {
        self.product_where(other, |i, j| blade::MASKS[i] & blade::MASKS[j] == 0)
    }

    /// Left contraction: ⟨A_r B_s⟩_{s−r}, zero when r > s.
    pub fn left_contraction(&self, other: &Self) -> Self {
        self.product_where(other, |i, j| {
            let (a, b) = (blade::MASKS[i], blade::MASKS[j]);
            a & b == a
        })
    }

    /// Right contraction: ⟨A_r B_s⟩_{r−s}, zero when s > r.
    pub fn right_contraction(&self, other: &Self) -> Self {
        self.product_where(other, |i, j| {
            let (a, b) = (blade::MASKS[i], blade::MASKS[j]);
            a & b == b
        })
    }

    pub fn grade_project(&self, k: usize) -> Result<Self, CliffordError> {
        if k > 4 {
            return Err(CliffordError::GradeOutOfRange(k));
        }
        Ok(self.grade_part(k))
    }

    /// Infallible grade projection; grades above 4 are empty.
    pub(crate) fn grade_part(&self, k: usize) -> Self {
        self.map(|i, c| if blade::grade(i) == k { c } else { T::zero() })
    }

    pub fn even_part(&self) -> Self {
        self.map(|i, c| if blade::grade(i).is_multiple_of(2) { c } else { T::zero() })
    }

    pub fn odd_part(&self) -> Self {
        self.map(|i, c| if blade::grade(i) % 2 == 1 { c } else { T::zero() })
    }

    pub fn scalar_part(&self) -> T {
        self.coefficients[blade::SCALAR]
    }

    pub fn reversion(&self) -> Self {
        self.signed(blade::reversion_sign)
    }

    pub fn grade_involution(&self) -> Self {
        self.signed(blade::involution_sign)
    }

    /// Clifford conjugation, the composition of reversion and grade involution.
    pub fn clifford_conjugation(&self) -> Self {
        self.signed(|i| blade::reversion_sign(i) * blade::involution_sign(i))
    }

    /// Bilinear form g(a, b) = ⟨ã b⟩₀.
    pub fn scalar_product(&self, other: &Self) -> T {
        self.reversion().geometric_product(other).scalar_part()
    }

    /// Euclidean norm of the coefficient array.
    pub fn norm(&self) -> f64 {
        self.coefficients.iter().map(|c| c.abs_sqr()).sum::<f64>().sqrt()
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coefficients.iter().map(|c| c.abs_sqr().sqrt()).fold(0.0, f64::max)
    }

    /// Grades carrying a coefficient above `tol`.
    pub fn grades_present(&self, tol: f64) -> Vec<usize> {
        (0..=4).filter(|&k| self.grade_part(k).max_abs() > tol).collect()
    }
}

impl Multivector {
    /// Minkowski square of the 1-vector part, v0² − v1² − v2² − v3².
    pub fn vector_square(&self) -> f64 {
        let v = self.vector_part();
        v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3]
    }

    pub fn to_complex(&self) -> ComplexMultivector {
        ComplexMultivector::from_coefficients(std::array::from_fn(|i| {
            Complex64::new(self.coefficients[i], 0.0)
        }))
    }
}

impl ComplexMultivector {
    pub fn from_parts(re: &Multivector, im: &Multivector) -> Self {
        Self::from_coefficients(std::array::from_fn(|i| Complex64::new(re.coefficient(i), im.coefficient(i))))
    }

    pub fn re(&self) -> Multivector {
        Multivector::from_coefficients(std::array::from_fn(|i| self.coefficients[i].re))
    }

    pub fn im(&self) -> Multivector {
        Multivector::from_coefficients(std::array::from_fn(|i| self.coefficients[i].im))
    }

    /// Complex conjugation of every coefficient.
    pub fn conj(&self) -> Self {
        self.map(|_, c| c.conj())
    }
}

impl From<Multivector> for ComplexMultivector {
    fn from(m: Multivector) -> Self {
        m.to_complex()
    }
}

impl<T: Coefficient> Add for GenericMultivector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { coefficients: std::array::from_fn(|i| self.coefficients[i] + rhs.coefficients[i]) }
    }
}

impl<T: Coefficient> AddAssign for GenericMultivector<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Coefficient> Sub for GenericMultivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { coefficients: std::array::from_fn(|i| self.coefficients[i] - rhs.coefficients[i]) }
    }
}

impl<T: Coefficient> Neg for GenericMultivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|_, c| -c)
    }
}

impl<T: Coefficient> Mul for GenericMultivector<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.geometric_product(&rhs)
    }
}

impl<T: Coefficient> Mul<T> for GenericMultivector<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        self.scale(rhs)
    }
}

impl<T: Coefficient> fmt::Debug for GenericMultivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = f.debug_map();
        for (i, c) in self.coefficients.iter().enumerate() {
            if *c != T::zero() {
                terms.entry(&blade::NAMES[i], c);
            }
        }
        terms.finish()
    }
}
