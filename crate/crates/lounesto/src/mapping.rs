//! Conditions for a Dirac spinor to be led to an ELKO, evaluated on
//! standard-representation components.

use num_complex::Complex64;
use serde::Serialize;

use crate::bilinear::bilinears;
use crate::classify::{classify, ClassLabel};
use crate::error::ClassifyError;
use crate::gamma::Rep;
use crate::spinor::SpinorC4;

/// Complex-form residuals, their component re-expressions and the
/// equivalence checks between the two.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    /// Re(ψ1*ψ3).
    pub partes_1a: f64,
    /// Re(ψ2*ψ4).
    pub partes_1b: f64,
    /// Re(ψ2*ψ3) + Re(ψ1*ψ4).
    pub partes_2: f64,
    /// Im(ψ1*ψ4) − Im(ψ2*ψ3) − 2Im(ψ3*ψ4) − 2Im(ψ1*ψ2).
    pub partes_3: f64,
    /// Re(ψ1*ψ4) + Im(ψ2*ψ3).
    pub ad2: f64,
    /// Im(ψ1*ψ4) − Im(ψ2*ψ3) − 2Im(ψ1*ψ2).
    pub ad3: f64,
    /// partes_3 − ad3 = −2Im(ψ3*ψ4), the term separating the two lines.
    pub partes_3_minus_ad3: f64,
    /// ψ1aψ3a + ψ1bψ3b.
    pub c1: f64,
    /// ψ2aψ4a + ψ2bψ4b.
    pub c2: f64,
    /// Tabulated rows for classes 1, 2, 3, two entries each.
    pub table: [[f64; 2]; 3],
    /// Largest mismatch between component and complex forms.
    pub equivalence_residual: f64,
}

/// Conditions on `psi` after conversion to the standard representation.
pub fn elko_map_conditions(psi: &SpinorC4) -> ConditionReport {
    let p = psi.to_rep(Rep::Standard).components;
    let x = |i: usize, j: usize| p[i].conj() * p[j];
    let (re, im) = (|z: Complex64| z.re, |z: Complex64| z.im);
    let partes_1a = re(x(0, 2));
    let partes_1b = re(x(1, 3));
    let partes_2 = re(x(1, 2)) + re(x(0, 3));
    let partes_3 = im(x(0, 3)) - im(x(1, 2)) - 2.0 * im(x(2, 3)) - 2.0 * im(x(0, 1));
    let ad2 = re(x(0, 3)) + im(x(1, 2));
    let ad3 = im(x(0, 3)) - im(x(1, 2)) - 2.0 * im(x(0, 1));

    let a = p.map(|z| z.re);
    let b = p.map(|z| z.im);
    let c1 = a[0] * a[2] + b[0] * b[2];
    let c2 = a[1] * a[3] + b[1] * b[3];
    let row1a = a[1] * (a[2] - b[2]) + b[1] * (a[2] + b[2]);
    let row1b = a[2] * b[3] - b[2] * a[3];
    let row2b = a[1] * a[2] + b[1] * b[2] + a[0] * a[3] + b[0] * b[3];
    let row3b = (a[0] * b[3] - b[0] * a[3])
        - (a[1] * b[2] - b[1] * a[2])
        - 2.0 * (a[2] * b[3] - b[2] * a[3])
        - 2.0 * (a[0] * b[1] - b[0] * a[1]);
    let table = [[row1a, row1b], [row1b, row2b], [row1a, row3b]];

    // row1a = partes_2 − ad2 and 2·row1b = ad3 − partes_3
    let equivalence_residual = [
        c1 - partes_1a,
        c2 - partes_1b,
        row2b - partes_2,
        row3b - partes_3,
        row1a - (partes_2 - ad2),
        2.0 * row1b - (ad3 - partes_3),
    ]
    .iter()
    .fold(0.0f64, |m, r| m.max(r.abs()));

    ConditionReport {
        partes_1a,
        partes_1b,
        partes_2,
        partes_3,
        ad2,
        ad3,
        partes_3_minus_ad3: partes_3 - ad3,
        c1,
        c2,
        table,
        equivalence_residual,
    }
}

impl ConditionReport {
    fn ok(x: f64, scale: f64, tol: f64) -> bool {
        x.abs() < tol * scale
    }

    pub fn partes(&self, scale: f64, tol: f64) -> bool {
        [self.partes_1a, self.partes_1b, self.partes_2, self.partes_3]
            .iter()
            .all(|&x| Self::ok(x, scale, tol))
    }

    pub fn ad2_holds(&self, scale: f64, tol: f64) -> bool {
        Self::ok(self.ad2, scale, tol)
    }

    pub fn ad3_holds(&self, scale: f64, tol: f64) -> bool {
        Self::ok(self.ad3, scale, tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mappability {
    pub class1: bool,
    pub class2: bool,
    pub class3: bool,
    pub actual_class: ClassLabel,
}

impl Mappability {
    /// Whether the flag for the spinor's own class is set.
    pub fn own_class(&self) -> bool {
        match self.actual_class {
            ClassLabel::One => self.class1,
            ClassLabel::Two => self.class2,
            _ => self.class3,
        }
    }
}

/// class 2 ⇔ partes ∧ ad2, class 3 ⇔ partes ∧ ad3, class 1 ⇔ all three,
/// with zero tests |x| < τ·‖ψ‖².
pub fn mappability(psi: &SpinorC4, tol: f64) -> Result<Mappability, ClassifyError> {
    let class = classify(&bilinears(psi), tol)?;
    if !class.regular {
        return Err(ClassifyError::Singular(class.label.number()));
    }
    let r = elko_map_conditions(psi);
    let scale = psi.norm_sqr();
    let partes = r.partes(scale, tol);
    let (ad2, ad3) = (r.ad2_holds(scale, tol), r.ad3_holds(scale, tol));
    Ok(Mappability {
        class1: partes && ad2 && ad3,
        class2: partes && ad2,
        class3: partes && ad3,
        actual_class: class.label,
    })
}
