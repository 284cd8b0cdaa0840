//! Numeric bounds and estimates for the connective constant.
//!
//! Everything here is a pure function of either closed-form parameters or
//! exact count series. Root finders use bisection on brackets where the
//! target is monotone, and stop once the bracket collapses to adjacent
//! floats.

use alloc::string::ToString;

use crate::graph::GraphSpec;
use crate::math;
use crate::{Error, Result};

mod interval;
mod locality;
mod solvers;
mod spectral;

pub use interval::{
    mu_interval, mu_interval_from, ratio_estimate, ratio_estimate_from, upper_envelope, MuInterval,
};
pub use locality::{locality_scan, LocalityRow};
pub use solvers::{
    bisect, cubic_girth3_equation, cubic_girth_lower, fisher_iterate, fisher_mu_pull,
    fisher_mu_push, girth_degree_equation, girth_degree_upper, semicubic_solve,
};
pub use spectral::{estimate_lambda, spectral_lower};

/// Whether a numeric endpoint is a proven bound or only an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rigor {
    Certified,
    Heuristic,
}

impl Rigor {
    pub fn as_str(self) -> &'static str {
        match self {
            Rigor::Certified => "certified",
            Rigor::Heuristic => "heuristic",
        }
    }
}

impl core::fmt::Display for Rigor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The golden mean.
pub const PHI: f64 = 1.618_033_988_749_895;

/// Known connective constants: ladder, hexagonal lattice, bridge multigraph
/// and regular tree.
pub fn exact_value(spec: &GraphSpec) -> Result<f64> {
    match spec {
        GraphSpec::Ladder => Ok(PHI),
        GraphSpec::Hexagonal => Ok(math::sqrt(2.0 + core::f64::consts::SQRT_2)),
        GraphSpec::Bridge { degree } => Ok(math::sqrt(*degree as f64 - 1.0)),
        GraphSpec::Tree { degree } => Ok(*degree as f64 - 1.0),
        other => Err(Error::NoExactValue(other.family().to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_table() {
        assert_eq!(
            exact_value(&GraphSpec::Ladder).unwrap(),
            (1.0 + 5f64.sqrt()) / 2.0
        );
        assert!((exact_value(&GraphSpec::Hexagonal).unwrap() - 1.847_759_065_0).abs() < 1e-10);
        assert_eq!(
            exact_value(&GraphSpec::Bridge { degree: 4 }).unwrap(),
            3f64.sqrt()
        );
        assert_eq!(exact_value(&GraphSpec::Tree { degree: 5 }).unwrap(), 4.0);
        assert!(matches!(
            exact_value(&GraphSpec::Triangular),
            Err(Error::NoExactValue(_))
        ));
    }

    #[test]
    fn phi_constant() {
        assert_eq!(PHI, (1.0 + 5f64.sqrt()) / 2.0);
    }
}
