//! Real Clifford algebra Cl(1,3), its complexification and the quaternion
//! subalgebra.

pub mod blade;
mod multivector;
mod quaternion;

pub use multivector::{Coefficient, ComplexMultivector, GenericMultivector, Multivector};
pub use quaternion::Quaternion;
