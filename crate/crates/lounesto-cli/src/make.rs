//! Construction of named spinor families.

use clap::{Args, Subcommand, ValueEnum};
use lounesto::elko::{
    dirac_with_duality_angle, elko_boost, elko_rest, helicity_eigenspinor, majorana_from_weyl, weyl,
    Conjugacy, Helicity, WeylC2,
};
use lounesto::flag_dipole::{operator_spinor_projection, DirectionElement};
use lounesto::representation::OperatorSpinor;
use lounesto::sample::{random_operator, rng_for};
use lounesto::SpinorC4;
use num_complex::Complex64;

use crate::document::Metadata;
use crate::error::CliError;

/// "re" or "re,im".
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let f = |t: &str| t.parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(f(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(f(re)?, f(im)?)),
        _ => Err(format!("expected RE or RE,IM, got '{s}'")),
    }
}

/// "x,y,z".
pub fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<_, _>>()?;
    <[f64; 3]>::try_from(v).map_err(|v| format!("expected 3 components, got {}", v.len()))
}

/// Eight comma-separated reals.
pub fn parse_vec8(s: &str) -> Result<[f64; 8], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<_, _>>()?;
    <[f64; 8]>::try_from(v).map_err(|v| format!("expected 8 components, got {}", v.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConjugacyArg {
    #[value(name = "self")]
    SelfConjugate,
    Anti,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HelicityArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Hand {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, Args)]
pub struct Seed {
    /// Upper component α of the two-spinor, as RE or RE,IM.
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    /// Lower component β of the two-spinor.
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Complex64,
}

impl Seed {
    fn weyl(&self) -> WeylC2 {
        WeylC2::new(self.alpha, self.beta)
    }
}

#[derive(Clone, Debug, Subcommand)]
pub enum Family {
    /// Eigenspinor of charge conjugation, λ = (±σ2φ*, φ).
    Elko {
        #[command(flatten)]
        seed: Seed,
        #[arg(long, value_enum, default_value = "self")]
        conjugacy: ConjugacyArg,
        /// Use the helicity eigenspinor along --p instead of --alpha/--beta.
        #[arg(long, value_enum)]
        helicity: Option<HelicityArg>,
        /// Momentum to boost to.
        #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
        p: Option<[f64; 3]>,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
    },
    /// ½(ξ ± Cξ) from a Weyl spinor ξ.
    Majorana {
        #[command(flatten)]
        seed: Seed,
        #[arg(long, value_enum, default_value = "left")]
        hand: Hand,
        #[arg(long, value_enum, default_value = "plus")]
        sign: Sign,
    },
    /// Single-chirality spinor.
    Weyl {
        #[command(flatten)]
        seed: Seed,
        #[arg(long, value_enum, default_value = "left")]
        hand: Hand,
    },
    /// (εχφ_L e^{iθ}, φ_L) with χ = (E + σ·p)/m.
    Dirac {
        #[command(flatten)]
        seed: Seed,
        #[arg(long, default_value = "0,0,0", value_parser = parse_vec3, allow_hyphen_values = true)]
        p: [f64; 3],
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        epsilon: f64,
        /// Duality angle: 0 gives class 2, π/2 class 3, others class 1.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Ψ½(1+γ0u) for a spatial direction u.
    Flagdipole {
        /// Spatial direction, normalized before use.
        #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
        u: [f64; 3],
        /// Even coefficients (1, e01, e02, e03, e12, e13, e23, e0123) of Ψ;
        /// drawn from --seed when absent.
        #[arg(long, value_parser = parse_vec8, allow_hyphen_values = true)]
        psi: Option<[f64; 8]>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn label(s: &str) -> Option<Metadata> {
    Some(Metadata { label: Some(s.into()), ..Metadata::default() })
}

pub fn make(family: &Family) -> Result<(SpinorC4, Option<Metadata>), CliError> {
    match family {
        Family::Elko { seed, conjugacy, helicity, p, m } => {
            let conj = match conjugacy {
                ConjugacyArg::SelfConjugate => Conjugacy::SelfConjugate,
                ConjugacyArg::Anti => Conjugacy::AntiSelfConjugate,
            };
            let phi = match helicity {
                Some(h) => {
                    let h = if *h == HelicityArg::Plus { Helicity::Plus } else { Helicity::Minus };
                    let dir = p.ok_or_else(|| invalid("--helicity needs --p for the direction"))?;
                    helicity_eigenspinor(dir, h).map_err(invalid)?
                }
                None => seed.weyl(),
            };
            let rest = elko_rest(&phi, conj).map_err(invalid)?;
            let name = format!(
                "elko {}",
                if conj == Conjugacy::SelfConjugate { "self-conjugate" } else { "anti-self-conjugate" }
            );
            match p {
                Some(p) => {
                    let l = elko_boost(&rest, *p, *m).map_err(invalid)?;
                    Ok((l.base, Some(Metadata { label: Some(name), momentum: Some(*p), mass: Some(*m) })))
                }
                None => Ok((rest.base, label(&name))),
            }
        }
        Family::Majorana { seed, hand, sign } => {
            let xi = weyl(&seed.weyl(), *hand == Hand::Left);
            if xi.norm_sqr() == 0.0 {
                return Err(invalid("weyl seed must be nonzero"));
            }
            let (plus, minus) = majorana_from_weyl(&xi).map_err(invalid)?;
            Ok(if *sign == Sign::Plus { (plus, label("majorana +")) } else { (minus, label("majorana -")) })
        }
        Family::Weyl { seed, hand } => {
            if seed.weyl().norm_sqr() == 0.0 {
                return Err(invalid("weyl seed must be nonzero"));
            }
            let left = *hand == Hand::Left;
            Ok((weyl(&seed.weyl(), left), label(if left { "weyl left" } else { "weyl right" })))
        }
        Family::Dirac { seed, p, m, epsilon, theta } => {
            if seed.weyl().norm_sqr() == 0.0 {
                return Err(invalid("left-handed seed must be nonzero"));
            }
            let psi = dirac_with_duality_angle(&seed.weyl(), *p, *m, *epsilon, *theta).map_err(invalid)?;
            Ok((psi, Some(Metadata { label: Some("dirac".into()), momentum: Some(*p), mass: Some(*m) })))
        }
        Family::Flagdipole { u, psi, seed } => {
            let dir = DirectionElement::spatial_normalized(*u).map_err(invalid)?;
            let op = match psi {
                Some(c) => OperatorSpinor::from_coefficients(*c),
                None => random_operator(&mut rng_for(*seed, 0)),
            };
            let out = operator_spinor_projection(&op, &dir);
            if out.norm_sqr() == 0.0 {
                return Err(invalid("projection vanishes for this operator and direction"));
            }
            Ok((out, label("flag-dipole")))
        }
    }
}
