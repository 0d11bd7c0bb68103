//! Seeded verification suites over sampled spinors. Reports are reduced in
//! sample order, so they are identical under sequential and parallel runs.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::bilinear::{
    aggregate, bilinears, boomerang_residual, fierz_residuals, generalized_fierz_residuals,
};
use crate::classify::{classify, ClassLabel};
use crate::elko::{elko_rest, Conjugacy};
use crate::flag_dipole::{
    boomerang_identities, class_limit, operator_spinor_projection, projector_idempotency, sigma_projector,
    type4_boomerang, FlagDipoleFrame, Limit,
};
use crate::gamma::Rep;
use crate::hopf::{
    chart_fiber_action, compare_hopf_routes, hopf_from_components, hopf_map, instanton_obstruction,
};
use crate::mapping::elko_map_conditions;
use crate::par::{map_indices, Execution};
use crate::representation::{
    c4_to_operator, c4_to_quaternion_pair, even_to_ideal, ideal_to_c4, ideal_to_even, operator_to_c4,
    quaternion_pair_to_c4,
};
use crate::sample::{
    mixed_spinor, random_admissible_direction, random_operator, random_spinor, random_unit_quaternion,
    random_weyl, rng_for,
};
use crate::spinor::SpinorC4;
use crate::tolerance::DEFAULT_TOL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fierz,
    Hopf,
    Projectors,
    Mapping,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Fierz, Suite::Hopf, Suite::Projectors, Suite::Mapping];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fierz => "fierz",
            Suite::Hopf => "hopf",
            Suite::Projectors => "projectors",
            Suite::Mapping => "mapping",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}' (expected fierz, hopf, projectors or mapping)"))
    }
}

/// One bound checked against the worst value over all samples.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub bound: f64,
    /// "max" means value ≤ bound, "min" means value ≥ bound.
    pub kind: &'static str,
    pub passed: bool,
}

impl Check {
    pub fn at_most(name: &'static str, value: f64, bound: f64) -> Self {
        Self { name, value, bound, kind: "max", passed: value <= bound }
    }

    pub fn at_least(name: &'static str, value: f64, bound: f64) -> Self {
        Self { name, value, bound, kind: "min", passed: value >= bound }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Statistic {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub statistics: Vec<Statistic>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub execution: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { samples: 1000, seed: 0, tol: DEFAULT_TOL, execution: Execution::default() }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let (checks, statistics) = match suite {
        Suite::Fierz => fierz_suite(cfg),
        Suite::Hopf => hopf_suite(cfg),
        Suite::Projectors => projector_suite(cfg),
        Suite::Mapping => mapping_suite(cfg),
    };
    SuiteReport {
        suite,
        samples: cfg.samples,
        seed: cfg.seed,
        tol: cfg.tol,
        passed: checks.iter().all(|c| c.passed),
        checks,
        statistics,
    }
}

/// Elementwise maxima of per-sample rows.
fn column_max<const N: usize>(rows: &[[f64; N]]) -> [f64; N] {
    rows.iter().fold([0.0; N], |acc, r| std::array::from_fn(|k| acc[k].max(r[k])))
}

fn column_min<const N: usize>(rows: &[[f64; N]]) -> [f64; N] {
    rows.iter().fold([f64::INFINITY; N], |acc, r| std::array::from_fn(|k| acc[k].min(r[k])))
}

fn column_sum<const N: usize>(rows: &[[f64; N]]) -> [f64; N] {
    rows.iter().fold([0.0; N], |acc, r| std::array::from_fn(|k| acc[k] + r[k]))
}

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn fierz_suite(cfg: &VerifyConfig) -> (Vec<Check>, Vec<Statistic>) {
    let tol = cfg.tol;
    let rows = map_indices(cfg.execution, cfg.samples, |i| {
        let (psi, expected) = mixed_spinor(cfg.seed, i as u64);
        let b = bilinears(&psi);
        let scale = b.j[0] * b.j[0];
        let z = aggregate(&b);
        let zm = z.matrix(Rep::Chiral).norm();
        let generalized = generalized_fierz_residuals(&z, &b).max() / (zm * zm);
        let label = classify(&b, tol).map(|c| c.label);
        let mut rng = rng_for(cfg.seed ^ 0x5eed, i as u64);
        let c = Complex64::from_polar(rng.gen_range(0.1..10.0), rng.gen_range(0.0..std::f64::consts::TAU));
        let moved = classify(&bilinears(&psi.scale(c)), tol).map(|c| c.label);
        [
            fierz_residuals(&b).max() / scale,
            generalized,
            boomerang_residual(&z) / zm,
            flag(label.is_err()),
            flag(expected.is_some() && label.as_ref().ok() != expected.as_ref()),
            flag(label != moved),
            flag(matches!(label, Ok(l) if l.is_regular())),
        ]
    });
    let worst = column_max(&rows);
    let sums = column_sum(&rows);
    let checks = vec![
        Check::at_most("fierz_relative", worst[0], 1e-10),
        Check::at_most("generalized_relative", worst[1], 1e-9),
        Check::at_most("boomerang_relative", worst[2], 1e-10),
        Check::at_most("classification_errors", sums[3], 0.0),
        Check::at_most("witness_mismatches", sums[4], 0.0),
        Check::at_most("phase_scale_label_changes", sums[5], 0.0),
    ];
    let stats = vec![Statistic { name: "regular_fraction", value: sums[6] / cfg.samples.max(1) as f64 }];
    (checks, stats)
}

fn hopf_suite(cfg: &VerifyConfig) -> (Vec<Check>, Vec<Statistic>) {
    let tol = cfg.tol;
    let rows = map_indices(cfg.execution, cfg.samples, |i| {
        let mut rng = rng_for(cfg.seed, i as u64);
        let psi = random_spinor(&mut rng, Rep::Standard).normalized();
        let q = c4_to_quaternion_pair(&psi);
        let point = hopf_map(&q, 1e-12).map(|p| (p.norm() - 1.0).abs()).unwrap_or(f64::INFINITY);
        let u = random_unit_quaternion(&mut rng);
        let fiber = match (hopf_map(&q, 1e-12), hopf_map(&q.right_mul(u), 1e-12)) {
            (Ok(a), Ok(b)) => a.distance(&b),
            _ => f64::INFINITY,
        };
        let chart = hopf_from_components(&psi)
            .point
            .distance(&hopf_from_components(&chart_fiber_action(&psi, u)).point);
        let op = c4_to_operator(&psi);
        let via_ideal = ideal_to_c4(&even_to_ideal(&op));
        let roundtrip = [
            operator_to_c4(&op).distance(&psi),
            via_ideal.distance(&psi),
            operator_to_c4(&ideal_to_even(&even_to_ideal(&op))).distance(&psi),
            quaternion_pair_to_c4(&q).distance(&psi),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        let cmp = compare_hopf_routes(&psi);
        let ob = instanton_obstruction(&psi, tol).map(|o| o.j_ratio).unwrap_or(0.0);
        let elko = elko_rest(&random_weyl(&mut rng), Conjugacy::SelfConjugate).expect("seed is nonzero").base;
        let elko_on_s7 = instanton_obstruction(&elko, tol).map(|o| !o.off_s7).unwrap_or(true);
        [
            point,
            fiber,
            chart,
            roundtrip,
            cmp.dictionary_residual.max(cmp.sigma_j0_swap_residual).max(cmp.direct_residual),
            ob,
            flag(elko_on_s7),
        ]
    });
    let worst = column_max(&rows);
    let least = column_min(&rows);
    let sums = column_sum(&rows);
    let checks = vec![
        Check::at_most("unit_sphere_deviation", worst[0], 1e-10),
        Check::at_most("fiber_invariance", worst[1], 1e-10),
        Check::at_most("chart_fiber_invariance", worst[2], 1e-10),
        Check::at_most("representation_roundtrip", worst[3], 1e-13),
        Check::at_most("chart_dictionary_residual", worst[4], 1e-12),
        Check::at_least("min_current_ratio", least[5], 1.0 - 1e-12),
        Check::at_most("elko_on_s7", sums[6], 0.0),
    ];
    (checks, Vec::new())
}

fn projector_suite(cfg: &VerifyConfig) -> (Vec<Check>, Vec<Statistic>) {
    let tol = cfg.tol;
    let rows = map_indices(cfg.execution, cfg.samples, |i| {
        let mut rng = rng_for(cfg.seed, i as u64);
        let u = random_admissible_direction(&mut rng);
        let psi = operator_spinor_projection(&random_operator(&mut rng), &u);
        let b = bilinears(&psi);
        let n = psi.norm();
        let class_ok = classify(&b, tol).map(|c| c.label == ClassLabel::FlagDipole).unwrap_or(false);
        let k_hj = (b.axial() - b.current().scale(u.doran_h())).norm() / b.j[0];
        let Ok(frame) = FlagDipoleFrame::from_bilinears(&b, tol) else {
            return [f64::INFINITY; 11];
        };
        let plus = sigma_projector(&psi, &frame.s, frame.h, 1.0);
        let minus = sigma_projector(&psi, &frame.s, frame.h, -1.0);
        let idem = projector_idempotency(&psi, &frame.s, frame.h, 1.0)
            .max(projector_idempotency(&psi, &frame.s, frame.h, -1.0));
        let ids = boomerang_identities(&frame);
        let zn = ids.z_norm;
        let end = |which, want| {
            class_limit(&psi, &frame, which, 0.0, tol).map(|(_, c)| c.label != want).unwrap_or(true)
        };
        [
            flag(!class_ok),
            k_hj,
            frame.constraint_residual().abs(),
            (plus + minus).distance(&psi) / n,
            idem / n,
            ids.z_squared / (zn * zn),
            ids.annihilator / zn,
            boomerang_residual(&type4_boomerang(&frame)) / zn,
            flag(end(Limit::HToZero, ClassLabel::Flagpole)),
            flag(end(Limit::SToZero, ClassLabel::Dipole)),
            ids.annihilator_opposite / zn,
        ]
    });
    let worst = column_max(&rows);
    let least = column_min(&rows);
    let sums = column_sum(&rows);
    let checks = vec![
        Check::at_most("not_flag_dipole", sums[0], 0.0),
        Check::at_most("axial_equals_h_current", worst[1], 1e-9),
        Check::at_most("frame_constraint", worst[2], 1e-9),
        Check::at_most("projector_completeness", worst[3], 1e-12),
        Check::at_most("projector_idempotency", worst[4], 1e-9),
        Check::at_most("boomerang_nilpotent", worst[5], 1e-11),
        Check::at_most("boomerang_annihilator", worst[6], 1e-11),
        Check::at_most("boomerang_self_adjoint", worst[7], 1e-10),
        Check::at_most("h_limit_not_flagpole", sums[8], 0.0),
        Check::at_most("s_limit_not_dipole", sums[9], 0.0),
    ];
    let stats = vec![Statistic { name: "opposite_sign_annihilator_min_relative", value: least[10] }];
    (checks, stats)
}

fn mapping_suite(cfg: &VerifyConfig) -> (Vec<Check>, Vec<Statistic>) {
    let tol = cfg.tol;
    let rows = map_indices(cfg.execution, cfg.samples, |i| {
        let mut rng = rng_for(cfg.seed, i as u64);
        let psi = random_spinor(&mut rng, Rep::Standard);
        let scale = psi.norm_sqr();
        let r = elko_map_conditions(&psi);
        let partes = r.partes(scale, tol);
        let (ad2, ad3) = (r.ad2_holds(scale, tol), r.ad3_holds(scale, tol));
        let (x, y) = (rng.gen_range(0.1..2.0), rng.gen_range(0.1..2.0));
        let family = SpinorC4::new(
            [
                Complex64::new(x, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, y),
                Complex64::new(0.0, 0.0),
            ],
            Rep::Standard,
        )
        .scale(Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU)));
        let f = elko_map_conditions(&family);
        let fs = family.norm_sqr();
        let family_ok = f.partes(fs, tol) && f.ad2_holds(fs, tol) && f.ad3_holds(fs, tol);
        [
            r.equivalence_residual / scale,
            flag(partes),
            flag(partes && ad2),
            flag(partes && ad3),
            flag(partes && (ad2 || ad3)),
            flag(!family_ok),
        ]
    });
    let worst = column_max(&rows);
    let sums = column_sum(&rows);
    let n = cfg.samples.max(1) as f64;
    let checks = vec![
        Check::at_most("component_equivalence", worst[0], 1e-12),
        Check::at_most("random_pass_rate", sums[4] / n, 0.01),
        Check::at_most("satisfying_family_failures", sums[5], 0.0),
    ];
    let stats = vec![
        Statistic { name: "partes_pass_rate", value: sums[1] / n },
        Statistic { name: "class2_pass_rate", value: sums[2] / n },
        Statistic { name: "class3_pass_rate", value: sums[3] / n },
    ];
    (checks, stats)
}
