//! Per-record reports and their JSON and table renderings.

use lounesto::bilinear::{aggregate, bilinears, boomerang_residual, fierz_residuals, FierzResiduals};
use lounesto::classify::{classify, LounestoClass};
use lounesto::error::ClassifyError;
use lounesto::hopf::{
    compare_hopf_routes, hopf_map, instanton_obstruction, HopfComparison, HopfPoint, ObstructionReport,
};
use lounesto::mapping::{elko_map_conditions, mappability, ConditionReport, Mappability};
use lounesto::representation::c4_to_quaternion_pair;
use lounesto::verify::SuiteReport;
use lounesto::{BilinearSet, Rep};
use serde::Serialize;

use crate::document::SpinorDocument;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoomerangCheck {
    /// ‖γ0Z†γ0 − Z‖ over ‖Z‖.
    pub relative_residual: f64,
    pub is_boomerang: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MappingReport {
    pub conditions: ConditionReport,
    pub mappability: Option<Mappability>,
    pub error: Option<String>,
    pub inconsistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HopfReport {
    pub routes: HopfComparison,
    /// Hopf point of ψ/‖ψ‖ on S⁴.
    pub unit_point: Option<HopfPoint>,
    pub obstruction: Option<ObstructionReport>,
}

/// Keys serialize in declaration order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub index: usize,
    pub input: SpinorDocument,
    pub tol: f64,
    pub bilinears: BilinearSet,
    pub class: Option<LounestoClass>,
    pub error: Option<String>,
    /// Set when the error is a mathematical inconsistency rather than a null input.
    pub inconsistent: bool,
    pub fierz: FierzResiduals,
    /// Largest Fierz residual over J0².
    pub fierz_relative: f64,
    pub boomerang: BoomerangCheck,
    pub mapping: Option<MappingReport>,
    pub hopf: Option<HopfReport>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Extras {
    pub mapping: bool,
    pub hopf: bool,
}

pub fn mapping_report(doc: &SpinorDocument, default: Rep, tol: f64) -> MappingReport {
    let psi = doc.spinor(default);
    let (mappability, error, inconsistent) = match mappability(&psi, tol) {
        Ok(m) => (Some(m), None, false),
        Err(ClassifyError::Singular(n)) => {
            (None, Some(format!("singular spinor (class {n}); conditions apply to classes 1-3")), false)
        }
        Err(e @ ClassifyError::NullSpinor) => (None, Some(e.to_string()), false),
        Err(e) => (None, Some(e.to_string()), true),
    };
    MappingReport { conditions: elko_map_conditions(&psi), mappability, error, inconsistent }
}

pub fn hopf_report(doc: &SpinorDocument, default: Rep, tol: f64) -> HopfReport {
    let psi = doc.spinor(default);
    let unit = (psi.norm_sqr() > 0.0)
        .then(|| hopf_map(&c4_to_quaternion_pair(&psi.normalized()), 1e-12).ok())
        .flatten();
    HopfReport {
        routes: compare_hopf_routes(&psi),
        unit_point: unit,
        obstruction: instanton_obstruction(&psi, tol).ok(),
    }
}

pub fn classification_report(
    index: usize,
    doc: &SpinorDocument,
    default: Rep,
    tol: f64,
    extras: Extras,
) -> ClassificationReport {
    let psi = doc.spinor(default);
    let b = bilinears(&psi);
    let (class, error, inconsistent) = match classify(&b, tol) {
        Ok(c) => (Some(c), None, false),
        Err(e @ ClassifyError::NullSpinor) => (None, Some(e.to_string()), false),
        Err(e) => (None, Some(e.to_string()), true),
    };
    let fierz = fierz_residuals(&b);
    let j0sq = b.j[0] * b.j[0];
    let z = aggregate(&b);
    let zn = z.matrix(Rep::Chiral).norm();
    let relative_residual = if zn > 0.0 { boomerang_residual(&z) / zn } else { 0.0 };
    ClassificationReport {
        index,
        input: doc.resolved(default),
        tol,
        bilinears: b,
        class,
        error,
        inconsistent,
        fierz,
        fierz_relative: if j0sq > 0.0 { fierz.max() / j0sq } else { 0.0 },
        boomerang: BoomerangCheck { relative_residual, is_boomerang: relative_residual < tol },
        mapping: extras.mapping.then(|| mapping_report(doc, default, tol)),
        hopf: extras.hopf.then(|| hopf_report(doc, default, tol)),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HopfRecord {
    pub index: usize,
    pub input: SpinorDocument,
    pub hopf: HopfReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MapRecord {
    pub index: usize,
    pub input: SpinorDocument,
    pub tol: f64,
    pub mapping: MappingReport,
}

/// Left-aligned first column, right-aligned others.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (s, w))| if i == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn num(x: f64) -> String {
    format!("{x:.6e}")
}

pub fn classification_table(reports: &[ClassificationReport]) -> String {
    let header = [
        "index",
        "class",
        "family",
        "sigma",
        "omega",
        "J0",
        "K",
        "S",
        "fierz",
        "boomerang",
        "marginal",
        "error",
    ];
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let b = &r.bilinears;
            vec![
                r.index.to_string(),
                r.class.as_ref().map_or("-".into(), |c| c.label.to_string()),
                r.class.as_ref().map_or("-".into(), |c| c.label.family().to_string()),
                num(b.sigma),
                num(b.omega),
                num(b.j[0]),
                num(b.k_norm()),
                num(b.s_norm()),
                num(r.fierz_relative),
                r.boomerang.is_boomerang.to_string(),
                r.class.as_ref().map_or("-".into(), |c| c.marginal.to_string()),
                r.error.clone().unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    render_table(&header, &rows)
}

pub fn hopf_table(records: &[HopfRecord]) -> String {
    let header = ["index", "J0", "J1", "J2", "J3", "omega", "norm", "sigma", "off_s7", "dictionary"];
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let p = r.hopf.unit_point.unwrap_or_default();
            let mut row = vec![r.index.to_string()];
            row.extend(p.to_array().iter().map(|&x| num(x)));
            row.push(num(p.norm()));
            row.push(num(r.hopf.routes.direct.sigma));
            row.push(r.hopf.obstruction.map_or("-".into(), |o| o.off_s7.to_string()));
            row.push(num(r.hopf.routes.dictionary_residual));
            row
        })
        .collect();
    render_table(&header, &rows)
}

pub fn map_table(records: &[MapRecord]) -> String {
    let header = [
        "index", "class", "partes1a", "partes1b", "partes2", "partes3", "ad2", "ad3", "map1", "map2", "map3",
        "error",
    ];
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let c = &r.mapping.conditions;
            let m = r.mapping.mappability;
            let flag = |f: fn(&Mappability) -> bool| m.as_ref().map_or("-".into(), |m| f(m).to_string());
            vec![
                r.index.to_string(),
                m.map_or("-".into(), |m| m.actual_class.to_string()),
                num(c.partes_1a),
                num(c.partes_1b),
                num(c.partes_2),
                num(c.partes_3),
                num(c.ad2),
                num(c.ad3),
                flag(|m| m.class1),
                flag(|m| m.class2),
                flag(|m| m.class3),
                r.mapping.error.clone().unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    render_table(&header, &rows)
}

pub fn suite_table(r: &SuiteReport) -> String {
    let header = ["check", "value", "bound", "kind", "status"];
    let mut rows: Vec<Vec<String>> = r
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.to_string(),
                num(c.value),
                num(c.bound),
                c.kind.to_string(),
                if c.passed { "pass".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    rows.extend(
        r.statistics
            .iter()
            .map(|s| vec![s.name.to_string(), num(s.value), "-".into(), "stat".into(), "-".into()]),
    );
    let status = if r.passed { "pass" } else { "FAIL" };
    format!(
        "suite {} samples {} seed {} tol {:e}: {status}\n{}",
        r.suite,
        r.samples,
        r.seed,
        r.tol,
        render_table(&header, &rows)
    )
}
