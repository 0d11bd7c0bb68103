//! Spacetime algebra Cl(1,3) for Dirac-type spinors.
//!
//! Bilinear covariants and Fierz identities, the six Lounesto classes,
//! ELKO, Majorana, Weyl and flag-dipole constructions, operator, ideal and
//! quaternionic representations, and Hopf coordinates on S⁴.

pub mod bilinear;
pub mod classify;
pub mod clifford;
pub mod elko;
pub mod error;
pub mod flag_dipole;
pub mod gamma;
pub mod hopf;
pub mod mapping;
pub mod par;
pub mod representation;
pub mod sample;
pub mod spinor;
pub mod tolerance;
pub mod verify;

pub use bilinear::{aggregate, bilinears, fierz_residuals, BilinearSet, FierzAggregate};
pub use clifford::{ComplexMultivector, Multivector, Quaternion};
pub use gamma::{gamma_matrices, GammaRep, Rep};
pub use spinor::SpinorC4;
pub use tolerance::DEFAULT_TOL;
