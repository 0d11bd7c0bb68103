use thiserror::Error;

use crate::gamma::Rep;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliffordError {
    #[error("grade {0} out of range 0..=4")]
    GradeOutOfRange(usize),
    #[error("unknown gamma representation tag `{0}`")]
    UnknownRep(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinorError {
    #[error("spinor component {0} is not finite")]
    NonFinite(usize),
    #[error("bilinear form has imaginary residue {residue:.3e}; the gamma set is broken")]
    NonRealBilinear { residue: f64 },
    #[error("degenerate probe: |xi-bar Z xi| = {value:.3e} is below tolerance")]
    DegenerateProbe { value: f64 },
    #[error("operation requires the {expected} representation, got {found}")]
    WrongRep { expected: Rep, found: Rep },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error("null spinor: all bilinear covariants vanish")]
    NullSpinor,
    #[error("inconsistent bilinears: sigma = omega = 0 with K = 0 and S = 0 but J0 = {j0:.3e}")]
    Inconsistent { j0: f64 },
    #[error("spinor is singular (class {0}); mapping conditions apply to regular spinors only")]
    Singular(u8),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrameError {
    #[error("direction element must be a 1-vector with u^2 = -1, got u^2 = {0:.6}")]
    NotUnitSpacelike(f64),
    #[error("direction element has a time component {0:.3e}")]
    NotSpatial(f64),
    #[error("expected a 1-vector, found grades {0:?}")]
    NotVector(Vec<usize>),
    #[error("operator spinor has odd-grade contamination {0:.3e}")]
    OddContamination(f64),
    #[error("frame invariant violated: {0}")]
    Invariant(String),
    #[error("spinor is not of class 4 (found class {0})")]
    NotFlagDipole(u8),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("input is not on the unit sphere: sigma = {0:.12}")]
    NotUnit(f64),
    #[error("zero spinor")]
    ZeroSpinor,
}
