use alloc::vec::Vec;

use super::interval::ratio_estimate;
use crate::graph::{make_family, quotient_cylinder, GraphSpec};
use crate::walk::EnumConfig;
use crate::{Error, Result};

/// One row of a locality scan. `m` is `None` for the square-lattice
/// reference row.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalityRow {
    pub m: Option<u32>,
    pub mu_hat: f64,
    /// |μ̂(cylinder) − μ̂(Z²)|; zero on the reference row.
    pub gap: f64,
}

/// Ratio estimates at length `n` on the cylinder quotients of Z² of each
/// width in `widths`, followed by the Z² estimate itself.
///
/// Uses the two-step ratio, since Z² and its even-width quotients are
/// bipartite and odd-step ratios oscillate.
pub fn locality_scan(widths: &[u32], n: usize, cfg: &EnumConfig) -> Result<Vec<LocalityRow>> {
    if widths.is_empty() {
        return Err(Error::InvalidArgument("no cylinder widths given".into()));
    }
    let plane = make_family(&GraphSpec::Hypercubic { dim: 2 })?;
    let reference = ratio_estimate(&plane, n, 2, cfg)?;
    let mut rows = Vec::with_capacity(widths.len() + 1);
    for &m in widths {
        let mu_hat = ratio_estimate(&quotient_cylinder(m)?, n, 2, cfg)?;
        rows.push(LocalityRow {
            m: Some(m),
            mu_hat,
            gap: (mu_hat - reference).abs(),
        });
    }
    rows.push(LocalityRow {
        m: None,
        mu_hat: reference,
        gap: 0.0,
    });
    Ok(rows)
}
