//! The six Lounesto classes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bilinear::{pq_operators, BilinearSet};
use crate::clifford::Multivector;
use crate::error::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum ClassLabel {
    One = 1,
    Two = 2,
    Three = 3,
    FlagDipole = 4,
    Flagpole = 5,
    Dipole = 6,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 6] = [
        ClassLabel::One,
        ClassLabel::Two,
        ClassLabel::Three,
        ClassLabel::FlagDipole,
        ClassLabel::Flagpole,
        ClassLabel::Dipole,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.get(usize::from(n).wrapping_sub(1)).copied()
    }

    pub fn is_regular(self) -> bool {
        self.number() <= 3
    }

    /// Conventional family name.
    pub fn family(self) -> &'static str {
        match self {
            ClassLabel::One | ClassLabel::Two | ClassLabel::Three => "dirac",
            ClassLabel::FlagDipole => "flag-dipole",
            ClassLabel::Flagpole => "flagpole",
            ClassLabel::Dipole => "dipole",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.number())
    }
}

/// Zero/non-zero pattern of (σ, ω, K, S).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub sigma_zero: bool,
    pub omega_zero: bool,
    pub k_zero: bool,
    pub s_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LounestoClass {
    pub label: ClassLabel,
    pub regular: bool,
    pub witness: Witness,
    /// Absolute zero threshold τ·J0 used by every test.
    pub threshold: f64,
    /// Set when some tested quantity lies within a factor 10 of the threshold.
    pub marginal: bool,
    /// Names of the marginal quantities.
    pub marginal_quantities: Vec<&'static str>,
}

fn threshold(b: &BilinearSet, tol: f64) -> Result<f64, ClassifyError> {
    let j0 = b.j[0];
    if b.is_zero() {
        return Err(ClassifyError::NullSpinor);
    }
    if !(j0 > 0.0 && j0.is_finite()) {
        return Err(ClassifyError::Inconsistent { j0 });
    }
    Ok(tol * j0)
}

/// Assigns the unique class with zero tests |x| < τ·J0.
pub fn classify(b: &BilinearSet, tol: f64) -> Result<LounestoClass, ClassifyError> {
    let thr = threshold(b, tol)?;
    let tested = [("sigma", b.sigma.abs()), ("omega", b.omega.abs()), ("K", b.k_norm()), ("S", b.s_norm())];
    let zero = tested.map(|(_, x)| x < thr);
    let witness = Witness { sigma_zero: zero[0], omega_zero: zero[1], k_zero: zero[2], s_zero: zero[3] };
    let label = match witness {
        Witness { sigma_zero: false, omega_zero: false, .. } => ClassLabel::One,
        Witness { sigma_zero: false, omega_zero: true, .. } => ClassLabel::Two,
        Witness { sigma_zero: true, omega_zero: false, .. } => ClassLabel::Three,
        Witness { k_zero: false, s_zero: false, .. } => ClassLabel::FlagDipole,
        Witness { k_zero: true, s_zero: false, .. } => ClassLabel::Flagpole,
        Witness { k_zero: false, s_zero: true, .. } => ClassLabel::Dipole,
        Witness { k_zero: true, s_zero: true, .. } => return Err(ClassifyError::Inconsistent { j0: b.j[0] }),
    };
    let marginal_quantities: Vec<&'static str> =
        tested.iter().filter(|(_, x)| *x >= thr / 10.0 && *x < thr * 10.0).map(|(name, _)| *name).collect();
    Ok(LounestoClass {
        label,
        regular: label.is_regular(),
        witness,
        threshold: thr,
        marginal: !marginal_quantities.is_empty(),
        marginal_quantities,
    })
}

/// True when both σ and ω fall below τ·J0.
pub fn is_singular(b: &BilinearSet, tol: f64) -> bool {
    let thr = tol * b.j[0].abs();
    b.sigma.abs() < thr && b.omega.abs() < thr
}

/// One class-specific identity and its residual.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Relation {
    pub name: &'static str,
    pub residual: f64,
    /// Natural magnitude for relative comparisons.
    pub scale: f64,
}

impl Relation {
    pub fn relative(&self) -> f64 {
        self.residual / self.scale.max(f64::MIN_POSITIVE)
    }
}

/// Residuals of the identities tied to `class`:
///
/// * class 1: P = −(ω + σγ0123)⁻¹KQ
/// * class 2: (P/2σ)² = P/2σ and P = γ0123KQ/σ
/// * class 3: P² = 0 and P = −KQ/ω, the σ → 0 case of the class-1 relation
/// * classes 4 to 6: J² = 0 and K² = 0, plus K = 0 (class 5) or S = 0 (class 6)
pub fn verify_class_relations(b: &BilinearSet, class: &LounestoClass) -> Vec<Relation> {
    let (p, q) = pq_operators(b);
    let kq = b.axial() * q;
    let e5 = Multivector::pseudoscalar();
    let j0 = b.j[0].abs();
    let rel = |name, residual: f64, scale: f64| Relation { name, residual, scale };
    match class.label {
        ClassLabel::One => {
            let d = b.omega * b.omega + b.sigma * b.sigma;
            let inv = (Multivector::scalar(b.omega) - e5.scale(b.sigma)).scale(1.0 / d);
            let rhs = -(inv * kq);
            vec![rel("P = -(omega + sigma e0123)^-1 K Q", (p - rhs).norm(), p.norm())]
        }
        ClassLabel::Two => {
            let e = p.scale(0.5 / b.sigma);
            let rhs = (e5 * kq).scale(1.0 / b.sigma);
            vec![
                rel("(P/2sigma)^2 = P/2sigma", (e * e - e).norm(), e.norm()),
                rel("P = e0123 K Q / sigma", (p - rhs).norm(), p.norm()),
            ]
        }
        ClassLabel::Three => {
            let rhs = kq.scale(-1.0 / b.omega);
            vec![
                rel("P^2 = 0", (p * p).norm(), p.norm().powi(2)),
                rel("P = -K Q / omega", (p - rhs).norm(), p.norm()),
            ]
        }
        label => {
            let mut out = vec![
                rel("J^2 = 0", b.j_square().abs(), j0 * j0),
                rel("K^2 = 0", b.k_square().abs(), j0 * j0),
            ];
            match label {
                ClassLabel::Flagpole => out.push(rel("K = 0", b.k_norm(), j0)),
                ClassLabel::Dipole => out.push(rel("S = 0", b.s_norm(), j0)),
                _ => {}
            }
            out
        }
    }
}
