//! Bilinear covariants, Fierz identities, the Fierz aggregate and
//! reconstruction of a spinor from its aggregate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::blade::{self, BIVECTOR_PAIRS, METRIC};
use crate::clifford::{ComplexMultivector, Multivector};
use crate::error::SpinorError;
use crate::gamma::{gamma_matrices, GammaRep, Mat4, Rep};
use crate::spinor::SpinorC4;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// σ, ω, J_μ, K_μ and S_μν (μ < ν in the order 01, 02, 03, 12, 13, 23).
/// Vector components carry lower indices: J_μ = ψ̄γ_μψ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BilinearSet {
    pub sigma: f64,
    pub omega: f64,
    #[serde(rename = "J")]
    pub j: [f64; 4],
    #[serde(rename = "K")]
    pub k: [f64; 4],
    #[serde(rename = "S")]
    pub s: [f64; 6],
}

fn eta(mu: usize) -> f64 {
    f64::from(METRIC[mu])
}

fn minkowski_square(v: &[f64; 4]) -> f64 {
    v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3]
}

fn lower_vector(v: &[f64; 4]) -> Multivector {
    Multivector::vector(std::array::from_fn(|mu| eta(mu) * v[mu]))
}

impl BilinearSet {
    /// Current J = Σ J^μ e_μ as a 1-vector.
    pub fn current(&self) -> Multivector {
        lower_vector(&self.j)
    }

    /// Axial current K as a 1-vector.
    pub fn axial(&self) -> Multivector {
        lower_vector(&self.k)
    }

    /// Spin bivector S = Σ_{μ<ν} 2 S^{μν} e_μ e_ν.
    pub fn spin(&self) -> Multivector {
        let mut m = Multivector::zero();
        for (n, &(mu, nu)) in BIVECTOR_PAIRS.iter().enumerate() {
            m.set_coefficient(blade::BIVECTORS[n], 2.0 * eta(mu) * eta(nu) * self.s[n]);
        }
        m
    }

    /// J² = J0² − J1² − J2² − J3².
    pub fn j_square(&self) -> f64 {
        minkowski_square(&self.j)
    }

    pub fn k_square(&self) -> f64 {
        minkowski_square(&self.k)
    }

    pub fn k_norm(&self) -> f64 {
        self.k.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn s_norm(&self) -> f64 {
        self.s.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn j_euclidean_norm(&self) -> f64 {
        self.j.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.sigma == 0.0
            && self.omega == 0.0
            && self.j.iter().chain(&self.k).chain(&self.s).all(|&x| x == 0.0)
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            sigma: self.sigma * c,
            omega: self.omega * c,
            j: self.j.map(|x| x * c),
            k: self.k.map(|x| x * c),
            s: self.s.map(|x| x * c),
        }
    }

    /// Largest absolute difference over all 16 entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a = self.flatten();
        let b = other.flatten();
        a.iter().zip(b.iter()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    /// (σ, ω, J0..J3, K0..K3, S01..S23).
    pub fn flatten(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        out[0] = self.sigma;
        out[1] = self.omega;
        out[2..6].copy_from_slice(&self.j);
        out[6..10].copy_from_slice(&self.k);
        out[10..16].copy_from_slice(&self.s);
        out
    }
}

/// Matrices whose ψ̄·M·ψ expectations give the 16 bilinears, in the order of
/// [`BilinearSet::flatten`], including all numeric prefactors.
fn observable_matrices(g: &GammaRep) -> [Mat4; 16] {
    let g5 = g.pseudoscalar();
    std::array::from_fn(|n| match n {
        0 => Mat4::identity(),
        1 => -g5,
        2..=5 => *g.gamma(n - 2),
        6..=9 => g5 * g.gamma(n - 6) * I,
        _ => {
            let (mu, nu) = BIVECTOR_PAIRS[n - 10];
            g.gamma(mu) * g.gamma(nu) * Complex64::new(0.0, 0.5)
        }
    })
}

/// Bilinears together with the largest imaginary residue of the defining forms.
pub fn bilinears_with_residue(psi: &SpinorC4) -> (BilinearSet, f64) {
    let g = gamma_matrices(psi.rep);
    let col = psi.column();
    let bar = psi.dirac_adjoint();
    let mut values = [0.0; 16];
    let mut residue: f64 = 0.0;
    for (n, m) in observable_matrices(g).iter().enumerate() {
        let z = (bar * m * col)[(0, 0)];
        values[n] = z.re;
        residue = residue.max(z.im.abs());
    }
    let b = BilinearSet {
        sigma: values[0],
        omega: values[1],
        j: std::array::from_fn(|i| values[2 + i]),
        k: std::array::from_fn(|i| values[6 + i]),
        s: std::array::from_fn(|i| values[10 + i]),
    };
    (b, residue)
}

/// σ = ψ̄ψ, J_μ = ψ̄γ_μψ, S_μν = ½ψ̄iγ_μγ_νψ, K_μ = ψ̄iγ0123γ_μψ, ω = −ψ̄γ0123ψ.
pub fn bilinears(psi: &SpinorC4) -> BilinearSet {
    bilinears_with_residue(psi).0
}

/// As [`bilinears`], failing when an imaginary residue exceeds τ·‖ψ‖².
pub fn try_bilinears(psi: &SpinorC4, tol: f64) -> Result<BilinearSet, SpinorError> {
    let (b, residue) = bilinears_with_residue(psi);
    if residue > tol * psi.norm_sqr().max(f64::MIN_POSITIVE) {
        return Err(SpinorError::NonRealBilinear { residue });
    }
    Ok(b)
}

/// |J² − ω² − σ²|, |K² + J²|, |J⌟K|, ‖J∧K + (ω + σγ0123)S‖.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FierzResiduals {
    pub current_norm: f64,
    pub axial_norm: f64,
    pub orthogonality: f64,
    pub spin_relation: f64,
}

impl FierzResiduals {
    pub fn max(&self) -> f64 {
        self.current_norm.max(self.axial_norm).max(self.orthogonality).max(self.spin_relation)
    }
}

pub fn fierz_residuals(b: &BilinearSet) -> FierzResiduals {
    let j = b.current();
    let k = b.axial();
    let dual = Multivector::scalar(b.omega) + Multivector::pseudoscalar().scale(b.sigma);
    let spin = j.wedge(&k) + dual.geometric_product(&b.spin());
    FierzResiduals {
        current_norm: (b.j_square() - b.omega * b.omega - b.sigma * b.sigma).abs(),
        axial_norm: (b.k_square() + b.j_square()).abs(),
        orthogonality: j.left_contraction(&k).scalar_part().abs(),
        spin_relation: spin.norm(),
    }
}

/// Z = σ + J + iS + iKγ0123 + ωγ0123.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FierzAggregate {
    pub z: ComplexMultivector,
}

impl FierzAggregate {
    pub fn new(z: ComplexMultivector) -> Self {
        Self { z }
    }

    pub fn matrix(&self, rep: Rep) -> Mat4 {
        gamma_matrices(rep).matrix_of(&self.z)
    }

    pub fn norm(&self) -> f64 {
        self.z.norm()
    }
}

pub fn aggregate(b: &BilinearSet) -> FierzAggregate {
    let e5 = Multivector::pseudoscalar();
    let re = Multivector::scalar(b.sigma) + b.current() + e5.scale(b.omega);
    let im = b.spin() + b.axial().geometric_product(&e5);
    FierzAggregate::new(ComplexMultivector::from_parts(&re, &im))
}

/// Dirac self-adjointness γ0 Z† γ0 = Z, tested in the chiral matrices with
/// tolerance τ·max(1, ‖Z‖).
pub fn is_boomerang(z: &FierzAggregate, tol: f64) -> bool {
    boomerang_residual(z) < tol * z.matrix(Rep::Chiral).norm().max(1.0)
}

/// ‖γ0 Z† γ0 − Z‖ (Frobenius, chiral matrices).
pub fn boomerang_residual(z: &FierzAggregate) -> f64 {
    let g = gamma_matrices(Rep::Chiral);
    let m = z.matrix(Rep::Chiral);
    (g.gamma(0) * m.adjoint() * g.gamma(0) - m).norm()
}

/// Largest Frobenius residual of each generalized Fierz condition:
/// Z² = 4σZ, ZγμZ = 4JμZ, ZiγμγνZ = 8SμνZ, Ziγ0123γμZ = 4KμZ,
/// Zγ0123Z = −4ωZ.
///
/// The spin condition carries 8 rather than 4 because S_μν includes a
/// factor ½; it is evaluated as Z(½iγμγν)Z = 4SμνZ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedResiduals {
    pub scalar: f64,
    pub current: f64,
    pub spin: f64,
    pub axial: f64,
    pub pseudoscalar: f64,
}

impl GeneralizedResiduals {
    pub fn max(&self) -> f64 {
        self.scalar.max(self.current).max(self.spin).max(self.axial).max(self.pseudoscalar)
    }
}

pub fn generalized_fierz_residuals(z: &FierzAggregate, b: &BilinearSet) -> GeneralizedResiduals {
    let g = gamma_matrices(Rep::Chiral);
    let zm = z.matrix(Rep::Chiral);
    let mats = observable_matrices(g);
    let values = b.flatten();
    let res = |n: usize, factor: f64| -> f64 {
        (zm * mats[n] * zm - zm * Complex64::new(factor * values[n], 0.0)).norm()
    };
    let worst =
        |range: std::ops::Range<usize>, factor: f64| range.map(|n| res(n, factor)).fold(0.0, f64::max);
    GeneralizedResiduals {
        scalar: res(0, 4.0),
        pseudoscalar: res(1, 4.0),
        current: worst(2..6, 4.0),
        axial: worst(6..10, 4.0),
        spin: worst(10..16, 4.0),
    }
}

/// A spinor recovered from its aggregate and a probe ξ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Reconstruction {
    /// Zξ/(4N) = e^{iα}ψ.
    pub raw: SpinorC4,
    /// `raw` rotated so its first non-negligible component is real positive.
    pub canonical: SpinorC4,
    /// N = ½√(ξ̄Zξ).
    pub normalization: f64,
    probe: SpinorC4,
}

impl Reconstruction {
    /// Fixes the phase from a reference: ψ = e^{−iα} raw, e^{−iα} = ξ̄ψ_ref/N.
    pub fn aligned_to(&self, reference: &SpinorC4) -> SpinorC4 {
        let r = reference.to_rep(self.probe.rep);
        let phase = (self.probe.dirac_adjoint() * r.column())[(0, 0)] / self.normalization;
        self.raw.scale(phase)
    }
}

/// ψ = e^{−iα} Zξ/(4N) with the probe expressed in its own representation.
pub fn reconstruct(z: &FierzAggregate, xi: &SpinorC4, tol: f64) -> Result<Reconstruction, SpinorError> {
    let zm = z.matrix(xi.rep);
    let zxi = zm * xi.column();
    let value = (xi.dirac_adjoint() * zxi)[(0, 0)];
    let scale = zm.norm() * xi.norm_sqr();
    if value.re <= tol * scale || !value.re.is_finite() {
        return Err(SpinorError::DegenerateProbe { value: value.norm() });
    }
    let normalization = 0.5 * value.re.sqrt();
    let raw = SpinorC4::from_column(&(zxi / Complex64::new(4.0 * normalization, 0.0)), xi.rep);
    let threshold = tol * raw.norm().max(1.0);
    let canonical = match raw.components.iter().find(|c| c.norm() > threshold) {
        Some(c) => raw.scale(c.conj() / c.norm()),
        None => raw,
    };
    Ok(Reconstruction { raw, canonical, normalization, probe: *xi })
}

/// P = σ + J + γ0123ω and Q = S + Kγ0123.
pub fn pq_operators(b: &BilinearSet) -> (Multivector, Multivector) {
    let e5 = Multivector::pseudoscalar();
    let p = Multivector::scalar(b.sigma) + b.current() + e5.scale(b.omega);
    let q = b.spin() + b.axial().geometric_product(&e5);
    (p, q)
}
