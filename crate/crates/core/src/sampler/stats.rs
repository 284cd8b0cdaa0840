use alloc::vec::Vec;

use super::SampleIndex;
use crate::graph::RootedGraph;
use crate::math;
use crate::walk::engine::drive;
use crate::walk::searches::EndpointSearch;
use crate::walk::{count_saws, Ball, EnumConfig};
use crate::{Error, Result};

/// Largest σ_n for which [`StatsMode::Auto`] enumerates exactly.
pub const EXACT_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatsMode {
    /// Exact when σ_n ≤ [`EXACT_LIMIT`], Monte Carlo otherwise.
    Auto,
    Exact,
    MonteCarlo,
}

/// Mean squared endpoint displacement at one length.
#[derive(Debug, Clone, PartialEq)]
pub struct DisplacementRow {
    pub n: usize,
    pub mean_sq: f64,
    /// Standard error of the mean; zero for exact rows.
    pub stderr: f64,
    /// Samples drawn, or walks enumerated for exact rows.
    pub count: u128,
    pub exact: bool,
}

fn exact_row(g: &RootedGraph, n: usize, cfg: &EnumConfig) -> Result<DisplacementRow> {
    let (ball, reached) = Ball::build_capped(g, n, cfg.budget)?;
    if reached < n {
        return Err(Error::BudgetExceeded { budget: cfg.budget });
    }
    let (total, weighted_sq) = if n == 0 {
        (1u128, 0f64)
    } else {
        let acc = drive(&EndpointSearch { ball: &ball, n }, &ball, cfg, n)?;
        let mut by_vertex: Vec<(u32, u128)> = acc.counts.into_iter().collect();
        by_vertex.sort_unstable();
        let mut total = 0u128;
        let mut sum = 0f64;
        for (v, c) in by_vertex {
            let d = ball.dist(v) as f64;
            total += c;
            sum += c as f64 * d * d;
        }
        (total, sum)
    };
    Ok(DisplacementRow {
        n,
        mean_sq: weighted_sq / total as f64,
        stderr: 0.0,
        count: total,
        exact: true,
    })
}

fn sampled_row(
    g: &RootedGraph,
    n: usize,
    count: usize,
    seed: u64,
    cfg: &EnumConfig,
) -> Result<DisplacementRow> {
    let index = SampleIndex::new(g, n, cfg)?;
    let mut sum = 0f64;
    let mut sum_sq = 0f64;
    for i in 0..count as u64 {
        let path = index.draw(seed, i)?;
        let d = index.ball().dist(*path.last().expect("non-empty walk")) as f64;
        sum += d * d;
        sum_sq += d * d * d * d;
    }
    let k = count as f64;
    let mean = sum / k;
    let stderr = if count > 1 {
        let var = ((sum_sq - k * mean * mean) / (k - 1.0)).max(0.0);
        math::sqrt(var / k)
    } else {
        0.0
    };
    Ok(DisplacementRow {
        n,
        mean_sq: mean,
        stderr,
        count: count as u128,
        exact: false,
    })
}

/// E‖π_n‖² for each n, by exact enumeration or uniform sampling.
pub fn displacement_stats(
    g: &RootedGraph,
    n_list: &[usize],
    count: usize,
    seed: u64,
    mode: StatsMode,
    cfg: &EnumConfig,
) -> Result<Vec<DisplacementRow>> {
    if count == 0 && mode != StatsMode::Exact {
        return Err(Error::InvalidArgument("sample count must be >= 1".into()));
    }
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let exact = match mode {
            StatsMode::Exact => true,
            StatsMode::MonteCarlo => false,
            StatsMode::Auto => {
                let probe = cfg.with_budget(cfg.budget.min(4 * EXACT_LIMIT as u64));
                let s = count_saws(g, n, &probe)?;
                s.truncated.is_none() && s.values[n] <= num_bigint::BigUint::from(EXACT_LIMIT)
            }
        };
        rows.push(if exact {
            exact_row(g, n, cfg)?
        } else {
            sampled_row(g, n, count, seed, cfg)?
        });
    }
    Ok(rows)
}

/// Flory exponent estimate: half the least-squares slope of log E‖π_n‖²
/// against log n.
pub fn nu_estimate(table: &[(usize, f64)]) -> Result<f64> {
    if table.len() < 4 {
        return Err(Error::DegenerateTable(alloc::format!(
            "need at least 4 points, got {}",
            table.len()
        )));
    }
    let lo = table.iter().map(|r| r.0).min().unwrap_or(0);
    let hi = table.iter().map(|r| r.0).max().unwrap_or(0);
    if lo == 0 || hi < 2 * lo {
        return Err(Error::DegenerateTable(alloc::format!(
            "n must span a factor of 2 with n >= 1, got {lo}..{hi}"
        )));
    }
    if table.iter().any(|r| r.1.is_nan() || r.1 <= 0.0) {
        return Err(Error::DegenerateTable(
            "mean displacement must be positive".into(),
        ));
    }
    let k = table.len() as f64;
    let xs: Vec<f64> = table.iter().map(|r| math::ln(r.0 as f64)).collect();
    let ys: Vec<f64> = table.iter().map(|r| math::ln(r.1)).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx / 2.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeedProbe {
    /// Fraction of samples with displacement at most c·n.
    pub frequency: f64,
    /// Half-width of the normal-approximation 95% interval.
    pub half_width: f64,
    pub count: usize,
}

/// Empirical P(‖π_n‖ ≤ c·n) from `count` uniform samples.
pub fn speed_probe(
    g: &RootedGraph,
    n: usize,
    c: f64,
    count: usize,
    seed: u64,
    cfg: &EnumConfig,
) -> Result<SpeedProbe> {
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "c must be positive, got {c}"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidArgument("sample count must be >= 1".into()));
    }
    let index = SampleIndex::new(g, n, cfg)?;
    let limit = c * n as f64;
    let mut hits = 0usize;
    for i in 0..count as u64 {
        let path = index.draw(seed, i)?;
        if index.ball().dist(*path.last().expect("non-empty walk")) as f64 <= limit {
            hits += 1;
        }
    }
    let p = hits as f64 / count as f64;
    Ok(SpeedProbe {
        frequency: p,
        half_width: 1.96 * math::sqrt(p * (1.0 - p) / count as f64),
        count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, GraphSpec};

    fn cfg() -> EnumConfig {
        EnumConfig::default()
    }

    #[test]
    fn tree_exact_is_n_squared() {
        let g = make_family(&GraphSpec::Tree { degree: 3 }).unwrap();
        let rows = displacement_stats(&g, &[2, 4, 6, 8], 1, 0, StatsMode::Auto, &cfg()).unwrap();
        for r in &rows {
            assert!(r.exact);
            assert_eq!(r.mean_sq, (r.n * r.n) as f64);
        }
        let table: Vec<_> = rows.iter().map(|r| (r.n, r.mean_sq)).collect();
        assert!((nu_estimate(&table).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn square_two_steps() {
        // every two-step walk ends at graph distance 2
        let g = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        let rows = displacement_stats(&g, &[2], 1, 0, StatsMode::Exact, &cfg()).unwrap();
        assert_eq!(rows[0].mean_sq, 4.0);
        assert_eq!(rows[0].count, 12);
    }

    #[test]
    fn exact_and_sampled_agree() {
        let g = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        let e = displacement_stats(&g, &[10], 1, 0, StatsMode::Exact, &cfg()).unwrap()[0].clone();
        let s = displacement_stats(&g, &[10], 4000, 9, StatsMode::MonteCarlo, &cfg()).unwrap()[0]
            .clone();
        assert!(!s.exact && s.stderr > 0.0);
        assert!(
            (e.mean_sq - s.mean_sq).abs() < 4.0 * s.stderr,
            "{e:?} {s:?}"
        );
    }

    #[test]
    fn stderr_shrinks_with_count() {
        let g = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        let a = displacement_stats(&g, &[8], 200, 3, StatsMode::MonteCarlo, &cfg()).unwrap();
        let b = displacement_stats(&g, &[8], 3200, 3, StatsMode::MonteCarlo, &cfg()).unwrap();
        let ratio = a[0].stderr / b[0].stderr;
        assert!(ratio > 2.5 && ratio < 6.0, "{ratio}");
    }

    #[test]
    fn nu_synthetic() {
        let table: Vec<_> = (1..=5).map(|i| (4 * i, 3.0 * (4 * i) as f64)).collect();
        assert!((nu_estimate(&table).unwrap() - 0.5).abs() < 1e-12);
        assert!(nu_estimate(&table[..3]).is_err());
        let flat: Vec<_> = (0..5).map(|_| (6, 1.0)).collect();
        assert!(matches!(nu_estimate(&flat), Err(Error::DegenerateTable(_))));
    }

    #[test]
    fn speed_on_tree_and_ladder() {
        let t = make_family(&GraphSpec::Tree { degree: 3 }).unwrap();
        let p = speed_probe(&t, 10, 0.9, 200, 5, &cfg()).unwrap();
        assert_eq!(p.frequency, 0.0);
        let all = speed_probe(&t, 10, 1.0, 50, 5, &cfg()).unwrap();
        assert_eq!(all.frequency, 1.0);
        let l = make_family(&GraphSpec::Ladder).unwrap();
        let p = speed_probe(&l, 30, 0.1, 400, 5, &cfg()).unwrap();
        assert!(p.frequency < 0.05, "{p:?}");
        assert!(speed_probe(&l, 5, 0.0, 10, 0, &cfg()).is_err());
    }
}
