//! ELKO, Majorana, Weyl and Dirac constructions in the chiral representation,
//! charge conjugation, ELKO duals and Penrose pole/flag extraction.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::Multivector;
use crate::error::SpinorError;
use crate::gamma::{gamma_matrices, pauli, Mat2, Rep};
use crate::spinor::{Row4, SpinorC4};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Plus => 1.0,
            Helicity::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Helicity::Plus => Helicity::Minus,
            Helicity::Minus => Helicity::Plus,
        }
    }
}

/// Two-component Weyl spinor φ = (α, β), optionally tagged as a helicity
/// eigenstate along a unit direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeylC2 {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub helicity: Option<(Helicity, [f64; 3])>,
}

fn sigma_dot(v: [f64; 3]) -> Mat2 {
    let s = pauli();
    s[0] * re(v[0]) + s[1] * re(v[1]) + s[2] * re(v[2])
}

fn unit(v: [f64; 3]) -> Result<[f64; 3], SpinorError> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(n > 0.0 && n.is_finite()) {
        return Err(SpinorError::InvalidParameter("direction must be a nonzero finite vector".into()));
    }
    Ok(v.map(|x| x / n))
}

impl WeylC2 {
    pub fn new(alpha: Complex64, beta: Complex64) -> Self {
        Self { alpha, beta, helicity: None }
    }

    pub fn components(&self) -> [Complex64; 2] {
        [self.alpha, self.beta]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.alpha.norm_sqr() + self.beta.norm_sqr()
    }

    /// ‖(σ·p̂)φ − hφ‖ for the given direction and helicity.
    pub fn helicity_residual(&self, p_hat: [f64; 3], h: Helicity) -> f64 {
        let phi = nalgebra::Vector2::new(self.alpha, self.beta);
        (sigma_dot(p_hat) * phi - phi * re(h.sign())).norm()
    }

    /// σ2φ*.
    fn sigma2_conj(&self) -> [Complex64; 2] {
        [-I * self.beta.conj(), I * self.alpha.conj()]
    }
}

/// Normalized eigenspinor of σ·p̂ with φ₊ = (cos θ/2 e^{−iϕ/2}, sin θ/2 e^{iϕ/2})
/// and φ₋ = (−sin θ/2 e^{−iϕ/2}, cos θ/2 e^{iϕ/2}).
pub fn helicity_eigenspinor(p_hat: [f64; 3], h: Helicity) -> Result<WeylC2, SpinorError> {
    let n = unit(p_hat)?;
    let theta = n[2].clamp(-1.0, 1.0).acos();
    let phi = n[1].atan2(n[0]);
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let (em, ep) = (Complex64::from_polar(1.0, -phi / 2.0), Complex64::from_polar(1.0, phi / 2.0));
    let (alpha, beta) = match h {
        Helicity::Plus => (em * c, ep * s),
        Helicity::Minus => (em * -s, ep * c),
    };
    Ok(WeylC2 { alpha, beta, helicity: Some((h, n)) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjugacy {
    #[serde(rename = "self")]
    SelfConjugate,
    #[serde(rename = "anti")]
    AntiSelfConjugate,
}

impl Conjugacy {
    pub fn eigenvalue(self) -> f64 {
        match self {
            Conjugacy::SelfConjugate => 1.0,
            Conjugacy::AntiSelfConjugate => -1.0,
        }
    }
}

/// Helicities of the (upper, lower) blocks: `MinusPlus` is {−,+}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HelicityPair {
    #[serde(rename = "-+")]
    MinusPlus,
    #[serde(rename = "+-")]
    PlusMinus,
}

impl HelicityPair {
    /// Helicity of the lower block φ.
    pub fn lower(self) -> Helicity {
        match self {
            HelicityPair::MinusPlus => Helicity::Plus,
            HelicityPair::PlusMinus => Helicity::Minus,
        }
    }

    pub fn from_lower(h: Helicity) -> Self {
        match h {
            Helicity::Plus => HelicityPair::MinusPlus,
            Helicity::Minus => HelicityPair::PlusMinus,
        }
    }

    pub fn partner(self) -> Self {
        Self::from_lower(self.lower().flip())
    }
}

/// Kinematic state of an ELKO built from helicity eigenspinors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ElkoKinematics {
    pub pair: HelicityPair,
    pub direction: [f64; 3],
    /// Momentum magnitude and mass of the last boost, if any.
    pub boost: Option<(f64, f64)>,
    /// Global phase applied after construction.
    pub phase: Complex64,
    /// Normalization of the seed φ.
    pub seed_norm: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ElkoSpinor {
    pub base: SpinorC4,
    pub conjugacy: Conjugacy,
    pub kinematics: Option<ElkoKinematics>,
}

impl ElkoSpinor {
    /// Rest-frame member of the four-spinor helicity basis along `p_hat`.
    pub fn helicity_basis(
        p_hat: [f64; 3],
        pair: HelicityPair,
        conjugacy: Conjugacy,
    ) -> Result<Self, SpinorError> {
        elko_rest(&helicity_eigenspinor(p_hat, pair.lower())?, conjugacy)
    }

    pub fn pair(&self) -> Option<HelicityPair> {
        self.kinematics.map(|k| k.pair)
    }

    /// Multiplies by a global phase, which the dual tracks antilinearly.
    pub fn rephased(&self, phase: Complex64) -> Self {
        let mut out = *self;
        out.base = self.base.scale(phase);
        if let Some(k) = out.kinematics.as_mut() {
            k.phase *= phase;
        }
        out
    }
}

/// λ = (±σ2φ*, φ) in the chiral representation, + for self-conjugate.
pub fn elko_rest(phi: &WeylC2, conjugacy: Conjugacy) -> Result<ElkoSpinor, SpinorError> {
    if phi.norm_sqr() == 0.0 {
        return Err(SpinorError::InvalidParameter("phi must be nonzero".into()));
    }
    let [u0, u1] = phi.sigma2_conj();
    let s = re(conjugacy.eigenvalue());
    let base = SpinorC4::new([s * u0, s * u1, phi.alpha, phi.beta], Rep::Chiral);
    let kinematics = phi.helicity.map(|(h, direction)| ElkoKinematics {
        pair: HelicityPair::from_lower(h),
        direction,
        boost: None,
        phase: re(1.0),
        seed_norm: phi.norm_sqr().sqrt(),
    });
    Ok(ElkoSpinor { base, conjugacy, kinematics })
}

/// √((E+m)/2m)·(1 ∓ |p|/(E+m)), with − for {−,+} and + for {+,−}.
pub fn elko_boost_factor(pair: HelicityPair, p: f64, m: f64) -> f64 {
    let e = (m * m + p * p).sqrt();
    let s = -pair.lower().sign();
    ((e + m) / (2.0 * m)).sqrt() * (1.0 + s * p / (e + m))
}

/// Boosts a rest ELKO to momentum `p`. The lower block must be a helicity
/// eigenstate along p̂, which reduces σ·p to ±|p| on each block.
pub fn elko_boost(lambda0: &ElkoSpinor, p: [f64; 3], m: f64) -> Result<ElkoSpinor, SpinorError> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(SpinorError::InvalidParameter(format!("mass must be positive, got {m}")));
    }
    let pn = p.iter().map(|x| x * x).sum::<f64>().sqrt();
    if pn == 0.0 {
        let mut out = *lambda0;
        if let Some(k) = out.kinematics.as_mut() {
            k.boost = Some((0.0, m));
        }
        return Ok(out);
    }
    let p_hat = p.map(|x| x / pn);
    let ([_, _], [a, b]) = lambda0.base.blocks();
    let phi = WeylC2::new(a, b);
    let tol = 1e-10 * phi.norm_sqr().sqrt().max(1.0);
    let h = [Helicity::Plus, Helicity::Minus]
        .into_iter()
        .find(|&h| phi.helicity_residual(p_hat, h) < tol)
        .ok_or_else(|| {
            SpinorError::InvalidParameter("lower block is not a helicity eigenstate along p".into())
        })?;
    let pair = HelicityPair::from_lower(h);
    let factor = elko_boost_factor(pair, pn, m);
    let mut out = *lambda0;
    out.base = lambda0.base.scale(re(factor));
    out.kinematics = Some(match lambda0.kinematics {
        Some(k) => ElkoKinematics { pair, direction: p_hat, boost: Some((pn, m)), ..k },
        None => ElkoKinematics {
            pair,
            direction: p_hat,
            boost: Some((pn, m)),
            phase: re(1.0),
            seed_norm: phi.norm_sqr().sqrt(),
        },
    });
    Ok(out)
}

/// Cψ = −γ2ψ*, defined in the chiral representation.
pub fn charge_conjugation(psi: &SpinorC4) -> Result<SpinorC4, SpinorError> {
    if psi.rep != Rep::Chiral {
        return Err(SpinorError::WrongRep { expected: Rep::Chiral, found: psi.rep });
    }
    let g2 = gamma_matrices(Rep::Chiral).gamma(2);
    Ok(SpinorC4::from_column(&(-(g2 * psi.conj().column())), Rep::Chiral))
}

/// ELKO dual ¬λ{−,+} = +i λ{+,−}†γ0 and ¬λ{+,−} = −i λ{−,+}†γ0, where the
/// partner shares conjugacy, direction, boost, seed normalization and phase.
pub fn elko_dual(lambda: &ElkoSpinor) -> Result<Row4, SpinorError> {
    let k = lambda
        .kinematics
        .ok_or_else(|| SpinorError::InvalidParameter("ELKO dual needs helicity metadata".into()))?;
    let partner_pair = k.pair.partner();
    let mut phi = helicity_eigenspinor(k.direction, partner_pair.lower())?;
    phi.alpha *= k.seed_norm;
    phi.beta *= k.seed_norm;
    let mut partner = elko_rest(&phi, lambda.conjugacy)?;
    if let Some((p, m)) = k.boost {
        partner = elko_boost(&partner, k.direction.map(|x| x * p), m)?;
    }
    let partner = partner.base.scale(k.phase);
    let sign = match k.pair {
        HelicityPair::MinusPlus => I,
        HelicityPair::PlusMinus => -I,
    };
    Ok(partner.dirac_adjoint() * sign)
}

/// ψ = (εχφ_L, φ_L) with χ = (E + σ·p)/m.
pub fn dirac_from_left(phi_l: &WeylC2, p: [f64; 3], m: f64, epsilon: f64) -> Result<SpinorC4, SpinorError> {
    dirac_with_duality_angle(phi_l, p, m, epsilon, 0.0)
}

/// As [`dirac_from_left`] with the right-handed block multiplied by e^{iθ}.
/// Since σ + iω = 2e^{−iθ}ε φ_L†χφ_L, θ = 0 gives class 2, θ = π/2 class 3
/// and other angles class 1.
pub fn dirac_with_duality_angle(
    phi_l: &WeylC2,
    p: [f64; 3],
    m: f64,
    epsilon: f64,
    theta: f64,
) -> Result<SpinorC4, SpinorError> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(SpinorError::InvalidParameter(format!("mass must be positive, got {m}")));
    }
    if epsilon.abs() != 1.0 {
        return Err(SpinorError::InvalidParameter("epsilon must be +1 or -1".into()));
    }
    let e = (m * m + p.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let chi = (Mat2::identity() * re(e) + sigma_dot(p)) / re(m);
    let phi = nalgebra::Vector2::new(phi_l.alpha, phi_l.beta);
    let right = chi * phi * (Complex64::from_polar(1.0, theta) * epsilon);
    Ok(SpinorC4::new([right[0], right[1], phi_l.alpha, phi_l.beta], Rep::Chiral))
}

/// Left- or right-handed single-block spinor.
pub fn weyl(phi: &WeylC2, left: bool) -> SpinorC4 {
    let c = if left { [ZERO, ZERO, phi.alpha, phi.beta] } else { [phi.alpha, phi.beta, ZERO, ZERO] };
    SpinorC4::new(c, Rep::Chiral)
}

/// ψ± = ½(ξ ± Cξ).
pub fn majorana_from_weyl(xi: &SpinorC4) -> Result<(SpinorC4, SpinorC4), SpinorError> {
    let cxi = charge_conjugation(xi)?;
    let half = re(0.5);
    Ok(((*xi + cxi).scale(half), (*xi - cxi).scale(half)))
}

/// ½⟨λλ̄⟩₁ = J/8, recovered from W = λ(γ0123λ)‡ with ‡ the Dirac adjoint.
pub fn penrose_pole(lambda: &SpinorC4) -> Multivector {
    penrose_parts(lambda).0
}

/// ½ Im⟨λλ̄⟩₂ = S/8.
pub fn penrose_flag(lambda: &SpinorC4) -> Multivector {
    penrose_parts(lambda).1
}

fn penrose_parts(lambda: &SpinorC4) -> (Multivector, Multivector) {
    let g = gamma_matrices(lambda.rep);
    let e5 = g.pseudoscalar();
    let rotated = crate::spinor::SpinorC4::from_column(&(e5 * lambda.column()), lambda.rep);
    let w = lambda.column() * rotated.dirac_adjoint();
    // γ0123⁻¹ = −γ0123
    let outer = w * (-e5);
    let m = g.decompose(&outer);
    let pole = m.re().grade_part(1).scale(0.5);
    let flag = m.im().grade_part(2).scale(0.5);
    (pole, flag)
}
