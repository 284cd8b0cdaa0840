use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::Rigor;
use crate::graph::{GraphSpec, HeightRigor, RootedGraph};
use crate::math;
use crate::walk::{count_bridges, count_saws, CountSeries, EnumConfig};
use crate::{Error, Result};

/// Natural log of a big integer, accurate to double precision.
pub(crate) fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return math::ln(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
    math::ln(top) + shift as f64 * core::f64::consts::LN_2
}

fn nth_root(x: &BigUint, n: usize) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    math::exp(ln_big(x) / n as f64)
}

/// Enclosure lower ≤ μ ≤ upper from n-step bridge and walk counts.
#[derive(Debug, Clone, PartialEq)]
pub struct MuInterval {
    pub lower: f64,
    pub upper: f64,
    pub lower_rigor: Rigor,
    pub upper_rigor: Rigor,
    pub n_used: usize,
    pub method: &'static str,
}

fn certified_lower(spec: &GraphSpec) -> bool {
    matches!(spec, GraphSpec::Hypercubic { .. } | GraphSpec::Ladder)
}

/// Sandwich interval at length `n` from precomputed series. Without a bridge
/// series the lower end is the trivial 1.
pub fn mu_interval_from(
    g: &RootedGraph,
    saws: &CountSeries,
    bridges: Option<&CountSeries>,
    n: usize,
) -> Result<MuInterval> {
    if n == 0 {
        return Err(Error::InvalidArgument("interval needs n >= 1".into()));
    }
    let upper = nth_root(saws.require(n)?, n);
    let upper_rigor = if g.is_transitive() {
        Rigor::Certified
    } else {
        Rigor::Heuristic
    };
    let (lower, lower_rigor, method) = match bridges {
        Some(b) => {
            let certified =
                b.rigor == Some(HeightRigor::TransitiveCertified) && certified_lower(&g.spec);
            let rigor = if certified {
                Rigor::Certified
            } else {
                Rigor::Heuristic
            };
            (nth_root(b.require(n)?, n), rigor, "bridge-sandwich")
        }
        None => (1.0, Rigor::Heuristic, "saw-upper"),
    };
    Ok(MuInterval {
        lower,
        upper,
        lower_rigor,
        upper_rigor,
        n_used: n,
        method,
    })
}

fn require_complete(s: &CountSeries, n: usize, cfg: &EnumConfig) -> Result<()> {
    if s.n_max() < n {
        Err(Error::BudgetExceeded { budget: cfg.budget })
    } else {
        Ok(())
    }
}

/// Counts walks (and bridges, if the graph has a height) to length `n` and
/// returns the sandwich interval.
pub fn mu_interval(g: &RootedGraph, n: usize, cfg: &EnumConfig) -> Result<MuInterval> {
    let saws = count_saws(g, n, cfg)?;
    require_complete(&saws, n, cfg)?;
    let bridges = match g.height {
        Some(_) => {
            let b = count_bridges(g, n, cfg)?;
            require_complete(&b, n, cfg)?;
            Some(b)
        }
        None => None,
    };
    mu_interval_from(g, &saws, bridges.as_ref(), n)
}

/// (σ_{n+step} / σ_n)^{1/step}.
pub fn ratio_estimate_from(series: &CountSeries, n: usize, step: usize) -> Result<f64> {
    if !(step == 1 || step == 2) {
        return Err(Error::InvalidArgument(alloc::format!(
            "ratio step must be 1 or 2, got {step}"
        )));
    }
    let den = series.require(n)?;
    let num = series.require(n + step)?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator(n));
    }
    if num.is_zero() {
        return Ok(0.0);
    }
    Ok(math::exp((ln_big(num) - ln_big(den)) / step as f64))
}

pub fn ratio_estimate(g: &RootedGraph, n: usize, step: usize, cfg: &EnumConfig) -> Result<f64> {
    let series = count_saws(g, n + step, cfg)?;
    require_complete(&series, n + step, cfg)?;
    ratio_estimate_from(&series, n, step)
}

/// Running minimum of σ_k^{1/k} over 1 ≤ k ≤ n, for n = 1..=n_max. Entry 0
/// is the index-1 value.
pub fn upper_envelope(series: &CountSeries) -> Vec<f64> {
    let mut out = Vec::with_capacity(series.n_max());
    let mut best = f64::INFINITY;
    for (k, v) in series.values.iter().enumerate().skip(1) {
        best = best.min(nth_root(v, k));
        out.push(best);
    }
    out
}
