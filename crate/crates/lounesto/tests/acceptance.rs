//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion.
//!
//! Two criteria contain a printed formula that is not an identity of the
//! algebra. They are evaluated literally and reported as FAIL, together with
//! the derived form that does hold. The process exits nonzero when any other
//! criterion fails or when a derived form fails.

use std::process::ExitCode;
use std::time::Instant;

use lounesto::bilinear::{aggregate, bilinears, boomerang_residual, reconstruct};
use lounesto::classify::{classify, ClassLabel};
use lounesto::elko::{charge_conjugation, elko_boost, elko_rest, Conjugacy, ElkoSpinor, HelicityPair};
use lounesto::flag_dipole::{
    boomerang_identities, class_limit, operator_spinor_projection, sigma_projector, FlagDipoleFrame, Limit,
};
use lounesto::hopf::instanton_obstruction;
use lounesto::par::Execution;
use lounesto::sample::{
    class_witness, random_admissible_direction, random_operator, random_spinor, random_weyl, rng_for,
};
use lounesto::verify::{run_suite, Suite, SuiteReport, VerifyConfig};
use lounesto::{Rep, SpinorC4};
use num_complex::Complex64;
use rand::Rng;

const TOL: f64 = 1e-10;
const SEED: u64 = 20_240_601;

struct Outcome {
    id: u8,
    title: &'static str,
    passed: bool,
    /// Set when the literal statement is not attainable; `derived_ok`
    /// then records whether the corrected statement holds.
    unattainable: Option<bool>,
    detail: String,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn config(samples: usize) -> VerifyConfig {
    VerifyConfig { samples, seed: SEED, tol: TOL, execution: Execution::default() }
}

fn failed_checks(r: &SuiteReport) -> String {
    let bad: Vec<String> =
        r.checks.iter().filter(|c| !c.passed).map(|c| format!("{}={:.2e}", c.name, c.value)).collect();
    if bad.is_empty() {
        String::new()
    } else {
        format!(" failing: {}", bad.join(", "))
    }
}

fn check_value(r: &SuiteReport, name: &str) -> f64 {
    r.checks.iter().find(|c| c.name == name).map(|c| c.value).unwrap_or(f64::NAN)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = run_suite(Suite::Fierz, &config(1000));
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        id: 1,
        title: "Fierz suite",
        passed: r.passed && secs < 5.0,
        unattainable: None,
        detail: format!(
            "1000 spinors, fierz {:.1e}, generalized {:.1e}, {secs:.2} s{}",
            check_value(&r, "fierz_relative"),
            check_value(&r, "generalized_relative"),
            failed_checks(&r)
        ),
    }
}

/// Closed forms of (J0..J3) and (S01, S02, S03, S12, S13, S23) for
/// λ = (−iβ*, iα*, α, β), as derived from the matrix products.
fn derived_forms(a: Complex64, b: Complex64) -> ([f64; 4], [f64; 6]) {
    let i = c(0.0, 1.0);
    let j = [
        2.0 * (a.norm_sqr() + b.norm_sqr()),
        (-2.0 * (a * b.conj() + a.conj() * b)).re,
        (2.0 * i * (a.conj() * b - a * b.conj())).re,
        2.0 * (b.norm_sqr() - a.norm_sqr()),
    ];
    let s = [
        (b * b - a * a).re,
        (a * a + b * b).im,
        2.0 * (a * b).re,
        -2.0 * (a * b).im,
        -(a * a + b * b).re,
        (a * a).im - (b * b).im,
    ];
    (j, s)
}

/// The same coefficients read off the printed final lines: J1 with the
/// opposite sign, the γ⁰² term listed twice and the γ¹² coefficient
/// (i/2)(αβ − α*β*).
fn printed_forms(a: Complex64, b: Complex64) -> ([f64; 4], [f64; 6]) {
    let i = c(0.0, 1.0);
    let (ac, bc) = (a.conj(), b.conj());
    let j = [
        2.0 * (a.norm_sqr() + b.norm_sqr()),
        (2.0 * (a * bc + ac * b)).re,
        (2.0 * i * (ac * b - a * bc)).re,
        2.0 * (b.norm_sqr() - a.norm_sqr()),
    ];
    let s02_once = (i * 0.5 * (ac * ac + bc * bc - b * b - a * a)).re;
    let s = [
        (0.5 * (bc * bc + b * b - ac * ac - a * a)).re,
        2.0 * s02_once,
        (a * b + ac * bc).re,
        (i * 0.5 * (a * b - ac * bc)).re,
        -(0.5 * (ac * ac + bc * bc + b * b + a * a)).re,
        (i * 0.5 * (b * b - a * a + ac * ac - bc * bc)).re,
    ];
    (j, s)
}

fn max_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}

fn criterion_2() -> Outcome {
    let mut rng = rng_for(SEED, 2);
    let mut wrong_class = 0;
    let (mut residual, mut derived, mut printed) = (0.0f64, 0.0f64, 0.0f64);
    let mut count = 0;
    for pair in [HelicityPair::MinusPlus, HelicityPair::PlusMinus] {
        for conj in [Conjugacy::SelfConjugate, Conjugacy::AntiSelfConjugate] {
            let dir = loop {
                let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
                let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                if n > 0.1 {
                    break v.map(|x| x / n);
                }
            };
            let rest = ElkoSpinor::helicity_basis(dir, pair, conj).expect("direction is a unit vector");
            let mass = 1.0;
            let mut members = vec![rest];
            for k in 1..=20 {
                let p = 0.25 * k as f64;
                members.push(elko_boost(&rest, dir.map(|x| x * p), mass).expect("boost is aligned"));
            }
            for l in members {
                count += 1;
                let b = bilinears(&l.base);
                if classify(&b, TOL).map(|c| c.label) != Ok(ClassLabel::Flagpole) {
                    wrong_class += 1;
                }
                residual = residual.max(b.sigma.abs().max(b.omega.abs()).max(b.k_norm()) / b.j[0]);
                let (_, [a, bb]) = l.base.blocks();
                // The anti-self-conjugate member flips the upper block, and with it S.
                let sign = if conj == Conjugacy::SelfConjugate { 1.0 } else { -1.0 };
                for (forms, worst) in
                    [(derived_forms(a, bb), &mut derived), (printed_forms(a, bb), &mut printed)]
                {
                    let s = forms.1.map(|x| sign * x);
                    *worst = worst.max(max_diff(&forms.0, &b.j)).max(max_diff(&s, &b.s));
                }
            }
        }
    }
    let structural = wrong_class == 0 && residual < 1e-10;
    let derived_ok = structural && derived < 1e-12;
    Outcome {
        id: 2,
        title: "ELKO class membership",
        passed: structural && printed < 1e-12,
        unattainable: Some(derived_ok),
        detail: format!(
            "{count} ELKOs, non-class-5 {wrong_class}, sigma/omega/K residual {residual:.1e}; \
             derived J,S forms {derived:.1e}; printed forms {printed:.2e} \
             (printed J1 sign and S02/S12 factors are not attainable)"
        ),
    }
}

fn criterion_3() -> Outcome {
    let mut rng = rng_for(SEED, 3);
    let (mut fixed, mut involution) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let l = elko_rest(&random_weyl(&mut rng), Conjugacy::SelfConjugate).expect("seed is nonzero").base;
        let cl = charge_conjugation(&l).expect("chiral input");
        fixed = fixed.max(cl.distance(&l) / l.norm());
        let psi = random_spinor(&mut rng, Rep::Chiral);
        let twice = charge_conjugation(&charge_conjugation(&psi).expect("chiral")).expect("chiral");
        involution = involution.max(twice.distance(&psi) / psi.norm());
    }
    Outcome {
        id: 3,
        title: "Charge conjugation",
        passed: fixed < 1e-12 && involution < 1e-12,
        unattainable: None,
        detail: format!("C(lambda) = lambda {fixed:.1e}, C(C(psi)) = psi {involution:.1e} on 100 spinors"),
    }
}

fn criterion_4() -> Outcome {
    let mut wrong = 0;
    for (k, label) in ClassLabel::ALL.into_iter().enumerate() {
        for i in 0..50 {
            let psi = class_witness(label, &mut rng_for(SEED + 4 + k as u64, i));
            if classify(&bilinears(&psi), TOL).map(|c| c.label) != Ok(label) {
                wrong += 1;
            }
        }
    }
    let mut rng = rng_for(SEED, 4);
    let (mut not4, mut khj) = (0, 0.0f64);
    for _ in 0..50 {
        let u = random_admissible_direction(&mut rng);
        let psi = operator_spinor_projection(&random_operator(&mut rng), &u);
        let b = bilinears(&psi);
        if classify(&b, TOL).map(|c| c.label) != Ok(ClassLabel::FlagDipole) {
            not4 += 1;
        }
        khj = khj.max((b.axial() - b.current().scale(u.doran_h())).norm() / b.current().norm());
    }
    Outcome {
        id: 4,
        title: "Class coverage",
        passed: wrong == 0 && not4 == 0 && khj < 1e-9,
        unattainable: None,
        detail: format!(
            "300 witnesses misclassified {wrong}; 50 flag-dipoles not class 4 {not4}, K - hJ {khj:.1e}"
        ),
    }
}

fn criterion_5() -> Outcome {
    let mut rng = rng_for(SEED, 5);
    let (mut h_bad, mut s_bad, mut complete) = (0, 0, 0.0f64);
    for _ in 0..100 {
        let u = random_admissible_direction(&mut rng);
        let psi = operator_spinor_projection(&random_operator(&mut rng), &u);
        let Ok(f) = FlagDipoleFrame::from_spinor(&psi, TOL) else {
            h_bad += 1;
            continue;
        };
        let end = |which| class_limit(&psi, &f, which, 0.0, TOL).map(|(_, c)| c.label);
        h_bad += usize::from(end(Limit::HToZero) != Ok(ClassLabel::Flagpole));
        s_bad += usize::from(end(Limit::SToZero) != Ok(ClassLabel::Dipole));
        let sum = sigma_projector(&psi, &f.s, f.h, 1.0) + sigma_projector(&psi, &f.s, f.h, -1.0);
        complete = complete.max(sum.distance(&psi) / psi.norm());
    }
    Outcome {
        id: 5,
        title: "Limits",
        passed: h_bad == 0 && s_bad == 0 && complete < 1e-14,
        unattainable: None,
        detail: format!("100 frames: h->0 not class 5 {h_bad}, s->0 not class 6 {s_bad}, Sigma+ + Sigma- - 1 {complete:.1e}"),
    }
}

fn criterion_6() -> Outcome {
    let mut rng = rng_for(SEED, 6);
    let (mut z2, mut printed, mut derived, mut adjoint) = (0.0f64, f64::INFINITY, 0.0f64, 0.0f64);
    for _ in 0..200 {
        let u = random_admissible_direction(&mut rng);
        let psi = operator_spinor_projection(&random_operator(&mut rng), &u);
        let f = FlagDipoleFrame::from_spinor(&psi, TOL).expect("flag-dipole frame");
        let ids = boomerang_identities(&f);
        z2 = z2.max(ids.z_squared / (ids.z_norm * ids.z_norm));
        printed = printed.min(ids.annihilator_opposite / ids.z_norm);
        derived = derived.max(ids.annihilator / ids.z_norm);
    }
    for i in 0..1000 {
        let psi = random_spinor(&mut rng_for(SEED + 6, i), Rep::Chiral);
        let z = aggregate(&bilinears(&psi));
        adjoint = adjoint.max(boomerang_residual(&z) / z.matrix(Rep::Chiral).norm());
    }
    let derived_ok = z2 < 1e-11 && derived < 1e-11 && adjoint < 1e-11;
    Outcome {
        id: 6,
        title: "Boomerang",
        passed: z2 < 1e-11 && printed < 1e-11 && adjoint < 1e-11,
        unattainable: Some(derived_ok),
        detail: format!(
            "200 type-4 frames: Z^2 {z2:.1e}; (1+is-ih g0123)Z >= {printed:.2e} (not attainable); \
             (1+is+ih g0123)Z {derived:.1e}; g0 Z^+ g0 = Z {adjoint:.1e} on 1000 aggregates"
        ),
    }
}

fn criterion_7() -> Outcome {
    let (mut worst, mut rejected_good, mut accepted_bad) = (0.0f64, 0, 0);
    for i in 0..100 {
        let mut rng = rng_for(SEED + 7, i);
        let psi = random_spinor(&mut rng, Rep::Chiral);
        let z = aggregate(&bilinears(&psi));
        for _ in 0..10 {
            let xi = random_spinor(&mut rng, Rep::Chiral);
            match reconstruct(&z, &xi, TOL) {
                Ok(r) => worst = worst.max(r.aligned_to(&psi).distance(&psi) / psi.norm()),
                Err(_) => rejected_good += 1,
            }
        }
        // ξ with ψ̄ξ = 0 gives ξ̄Zξ = 4|ψ̄ξ|² = 0.
        let eta = random_spinor(&mut rng, Rep::Chiral);
        let sigma = bilinears(&psi).sigma;
        let overlap = (psi.dirac_adjoint() * eta.column())[(0, 0)];
        let degenerate = eta - psi.scale(overlap / sigma);
        accepted_bad += usize::from(reconstruct(&z, &degenerate, TOL).is_ok());
        accepted_bad += usize::from(reconstruct(&z, &SpinorC4::zero(Rep::Chiral), TOL).is_ok());
    }
    Outcome {
        id: 7,
        title: "Reconstruction",
        passed: worst < 1e-8 && rejected_good == 0 && accepted_bad == 0,
        unattainable: None,
        detail: format!(
            "1000 reconstructions, error {worst:.1e}, generic probes rejected {rejected_good}, degenerate probes accepted {accepted_bad}"
        ),
    }
}

fn criterion_8() -> Outcome {
    let r = run_suite(Suite::Hopf, &config(500));
    Outcome {
        id: 8,
        title: "Hopf",
        passed: r.passed,
        unattainable: None,
        detail: format!(
            "500 unit spinors, |(J,omega)| - 1 {:.1e}, fiber {:.1e}, round trip {:.1e}{}",
            check_value(&r, "unit_sphere_deviation"),
            check_value(&r, "fiber_invariance"),
            check_value(&r, "representation_roundtrip"),
            failed_checks(&r)
        ),
    }
}

fn criterion_9() -> Outcome {
    let mut min_ratio = f64::INFINITY;
    for i in 0..1000 {
        let mut rng = rng_for(SEED + 9, i);
        let label = ClassLabel::ALL[(i % 6) as usize];
        let psi =
            if i % 2 == 0 { random_spinor(&mut rng, Rep::Chiral) } else { class_witness(label, &mut rng) };
        let ob = instanton_obstruction(&psi, TOL).expect("nonzero spinor");
        min_ratio = min_ratio.min(ob.j_ratio);
    }
    let mut rng = rng_for(SEED, 9);
    let (mut elkos, mut on_s7) = (0, 0);
    for pair in [HelicityPair::MinusPlus, HelicityPair::PlusMinus] {
        for conj in [Conjugacy::SelfConjugate, Conjugacy::AntiSelfConjugate] {
            for _ in 0..25 {
                let rest = ElkoSpinor::helicity_basis([0.0, 0.6, 0.8], pair, conj).expect("unit direction");
                let p = rng.gen_range(0.0..5.0);
                let l = elko_boost(&rest, [0.0, 0.6 * p, 0.8 * p], 1.0).expect("aligned boost");
                let generic = elko_rest(&random_weyl(&mut rng), conj).expect("nonzero seed");
                for psi in [l.base, generic.base] {
                    elkos += 1;
                    on_s7 += usize::from(!instanton_obstruction(&psi, TOL).expect("nonzero").off_s7);
                }
            }
        }
    }
    Outcome {
        id: 9,
        title: "Obstruction",
        passed: min_ratio >= 1.0 - 1e-12 && on_s7 == 0,
        unattainable: None,
        detail: format!(
            "1000 spinors, min |J|/|psi|^2 {min_ratio:.3}; {elkos} ELKOs, reported on S7 {on_s7}"
        ),
    }
}

fn criterion_10() -> Outcome {
    let r = run_suite(Suite::Mapping, &config(1000));
    let stat = |n: &str| r.statistics.iter().find(|s| s.name == n).map(|s| s.value).unwrap_or(f64::NAN);
    Outcome {
        id: 10,
        title: "Mapping conditions",
        passed: r.passed,
        unattainable: None,
        detail: format!(
            "1000 samples, component vs complex {:.1e}, random pass rate {:.3} (partes {:.3}), family failures {}{}",
            check_value(&r, "component_equivalence"),
            check_value(&r, "random_pass_rate"),
            stat("partes_pass_rate"),
            check_value(&r, "satisfying_family_failures"),
            failed_checks(&r)
        ),
    }
}

fn main() -> ExitCode {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    let mut unexpected = 0;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let note = match o.unattainable {
            Some(true) if !o.passed => " [unattainable as printed; derived form holds]",
            Some(false) if !o.passed => " [unattainable as printed; derived form FAILS]",
            _ => "",
        };
        println!("criterion {:>2} {status} {}: {}{note}", o.id, o.title, o.detail);
        let acceptable = o.passed || o.unattainable == Some(true);
        unexpected += usize::from(!acceptable);
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("acceptance: {passed}/10 pass, {unexpected} unexpected failure(s)");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
