//! The quaternionic Hopf map S⁷ → S⁴ realized through bilinears, and the
//! obstruction to describing its instanton by an ELKO spinor.

use serde::Serialize;

use crate::bilinear::bilinears;
use crate::clifford::Quaternion;
use crate::error::HopfError;
use crate::gamma::Rep;
use crate::representation::{c4_to_quaternion_pair, quaternion_pair_to_c4, QuaternionPair};
use crate::spinor::SpinorC4;

/// (J0, J1, J2, J3, ω) on S⁴.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize)]
pub struct HopfPoint {
    #[serde(rename = "J")]
    pub j: [f64; 4],
    pub omega: f64,
}

impl HopfPoint {
    pub fn to_array(&self) -> [f64; 5] {
        [self.j[0], self.j[1], self.j[2], self.j[3], self.omega]
    }

    /// Euclidean norm of (J0..J3, ω).
    pub fn norm(&self) -> f64 {
        self.to_array().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let (a, b) = (self.to_array(), other.to_array());
        a.iter().zip(b.iter()).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
    }
}

/// σ together with the Hopf point, without the unit-sphere check.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize)]
pub struct HopfCoordinates {
    pub sigma: f64,
    pub point: HopfPoint,
}

fn re_sandwich(q1: Quaternion, unit: Quaternion, q2: Quaternion) -> f64 {
    2.0 * (q1.conjugate() * unit * q2).w
}

/// σ = ‖q1‖²+‖q2‖², J0 = ‖q1‖²−‖q2‖², ω = 2Re(q̄1q2), Jk = 2Re(q̄1 u_k q2).
pub fn hopf_coordinates(q: &QuaternionPair) -> HopfCoordinates {
    let (a, b) = (q.q1, q.q2);
    HopfCoordinates {
        sigma: a.norm_sqr() + b.norm_sqr(),
        point: HopfPoint {
            j: [
                a.norm_sqr() - b.norm_sqr(),
                re_sandwich(a, Quaternion::I, b),
                re_sandwich(a, Quaternion::J, b),
                re_sandwich(a, Quaternion::K, b),
            ],
            omega: re_sandwich(a, Quaternion::ONE, b),
        },
    }
}

/// Hopf point of a unit pair; fails off S⁷ beyond `tol`.
pub fn hopf_map(q: &QuaternionPair, tol: f64) -> Result<HopfPoint, HopfError> {
    let h = hopf_coordinates(q);
    if (h.sigma - 1.0).abs() > tol {
        return Err(HopfError::NotUnit(h.sigma));
    }
    Ok(h.point)
}

/// Component chart on standard-representation columns:
/// σ = Σ|ψr|², J0 = |ψ1|²+|ψ2|²−|ψ3|²−|ψ4|², J1 = 2Im(ψ1ψ4*)+2Im(ψ2ψ3*),
/// J2 = 2Re(ψ2ψ3*)−2Re(ψ1ψ4*), J3 = 2Im(ψ3ψ1*)+2Im(ψ2ψ4*),
/// ω = 2Re(ψ1ψ3*)+2Re(ψ2ψ4*).
pub fn hopf_from_components(psi: &SpinorC4) -> HopfCoordinates {
    let p = psi.to_rep(Rep::Standard).components;
    let m = |i: usize, j: usize| p[i] * p[j].conj();
    let n: [f64; 4] = p.map(|z| z.norm_sqr());
    HopfCoordinates {
        sigma: n.iter().sum(),
        point: HopfPoint {
            j: [
                n[0] + n[1] - n[2] - n[3],
                2.0 * m(0, 3).im + 2.0 * m(1, 2).im,
                2.0 * m(1, 2).re - 2.0 * m(0, 3).re,
                2.0 * m(2, 0).im + 2.0 * m(1, 3).im,
            ],
            omega: 2.0 * m(0, 2).re + 2.0 * m(1, 3).re,
        },
    }
}

/// The component chart equals the quaternion route evaluated on
/// (ψ1, ψ2, ψ4, ψ3) followed by this signed permutation of (J1, J2, J3, ω).
pub const CHART_DICTIONARY: [[f64; 4]; 4] =
    [[0.0, 0.0, 0.0, -1.0], [0.0, 0.0, 1.0, 0.0], [0.0, -1.0, 0.0, 0.0], [-1.0, 0.0, 0.0, 0.0]];

fn swap_lower(psi: &SpinorC4) -> SpinorC4 {
    let p = psi.to_rep(Rep::Standard).components;
    SpinorC4::new([p[0], p[1], p[3], p[2]], Rep::Standard)
}

/// Right action of a unit quaternion whose orbits are the fibers of the
/// component chart: it acts on the pair of (ψ1, ψ2, ψ4, ψ3).
pub fn chart_fiber_action(psi: &SpinorC4, u: Quaternion) -> SpinorC4 {
    let moved = quaternion_pair_to_c4(&c4_to_quaternion_pair(&swap_lower(psi)).right_mul(u));
    swap_lower(&moved)
}

/// Applies [`CHART_DICTIONARY`] to the quaternion route.
pub fn quaternion_route_in_chart(psi: &SpinorC4) -> HopfCoordinates {
    let h = hopf_coordinates(&c4_to_quaternion_pair(&swap_lower(psi)));
    let q = [h.point.j[1], h.point.j[2], h.point.j[3], h.point.omega];
    let out: [f64; 4] = std::array::from_fn(|r| (0..4).map(|c| CHART_DICTIONARY[r][c] * q[c]).sum());
    HopfCoordinates {
        sigma: h.sigma,
        point: HopfPoint { j: [h.point.j[0], out[0], out[1], out[2]], omega: out[3] },
    }
}

/// Quaternion route, component chart and direct bilinears of one spinor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HopfComparison {
    pub quaternion: HopfCoordinates,
    pub components: HopfCoordinates,
    /// Standard-representation bilinears σ, J, ω.
    pub direct: HopfCoordinates,
    /// ‖component chart − dictionary(quaternion route)‖ over (σ, J, ω).
    pub dictionary_residual: f64,
    /// max(|σ_q − J0_direct|, |J0_q − σ_direct|): the quaternion route
    /// reproduces the direct bilinears with σ and J0 interchanged.
    pub sigma_j0_swap_residual: f64,
    /// Largest difference in (J1, J2, J3, ω) between quaternion route and
    /// direct bilinears.
    pub direct_residual: f64,
}

pub fn compare_hopf_routes(psi: &SpinorC4) -> HopfComparison {
    let quaternion = hopf_coordinates(&c4_to_quaternion_pair(psi));
    let components = hopf_from_components(psi);
    let b = bilinears(&psi.to_rep(Rep::Standard));
    let direct = HopfCoordinates { sigma: b.sigma, point: HopfPoint { j: b.j, omega: b.omega } };
    let mapped = quaternion_route_in_chart(psi);
    let dictionary_residual =
        (mapped.point.distance(&components.point).powi(2) + (mapped.sigma - components.sigma).powi(2)).sqrt();
    let sigma_j0_swap_residual =
        (quaternion.sigma - direct.point.j[0]).abs().max((quaternion.point.j[0] - direct.sigma).abs());
    let direct_residual = (1..4)
        .map(|k| (quaternion.point.j[k] - direct.point.j[k]).abs())
        .fold((quaternion.point.omega - direct.point.omega).abs(), f64::max);
    HopfComparison {
        quaternion,
        components,
        direct,
        dictionary_residual,
        sigma_j0_swap_residual,
        direct_residual,
    }
}

/// Why a spinor can or cannot sit on S⁷ with σ = 1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub sigma: f64,
    pub omega: f64,
    /// Euclidean ‖(J0, J1, J2, J3)‖, never zero for a nonzero spinor.
    pub j_norm: f64,
    /// ‖J‖/‖ψ‖², bounded below by 1 since J0 = ‖ψ‖².
    pub j_ratio: f64,
    pub singular: bool,
    /// True when σ vanishes, so no rescaling reaches σ = 1.
    pub off_s7: bool,
}

pub fn instanton_obstruction(psi: &SpinorC4, tol: f64) -> Result<ObstructionReport, HopfError> {
    let norm = psi.norm_sqr();
    if norm == 0.0 {
        return Err(HopfError::ZeroSpinor);
    }
    let b = bilinears(psi);
    let j_norm = b.j_euclidean_norm();
    let thr = tol * b.j[0];
    Ok(ObstructionReport {
        sigma: b.sigma,
        omega: b.omega,
        j_norm,
        j_ratio: j_norm / norm,
        singular: b.sigma.abs() < thr && b.omega.abs() < thr,
        off_s7: b.sigma.abs() < thr,
    })
}
