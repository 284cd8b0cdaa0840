use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::ball::Ball;
use super::engine::{drive, Search};
use super::searches::{BridgeSearch, DepthCounts, EndpointSearch, ExtendSearch, SawSearch};
use super::{CountSeries, EnumConfig, SeriesKind, Truncation};
use crate::graph::{RootedGraph, VertexId};
use crate::{Error, Result};

/// Upper limit on materialized ball vertices, independent of the visit budget.
const MAX_BALL_VERTICES: u64 = 1 << 23;

fn ball_for(g: &RootedGraph, radius: usize, cfg: &EnumConfig) -> Result<(Ball, usize)> {
    Ball::build_capped(g, radius, cfg.budget.min(MAX_BALL_VERTICES))
}

fn ball_exact(g: &RootedGraph, radius: usize, cfg: &EnumConfig) -> Result<Ball> {
    let (ball, reached) = ball_for(g, radius, cfg)?;
    if reached < radius {
        return Err(Error::BudgetExceeded { budget: cfg.budget });
    }
    Ok(ball)
}

/// Runs a per-depth search to `n_max`. If the budget trips, falls back to
/// deepening in steps whose cost is bounded in advance, so the truncation
/// point depends only on exact counts and never on scheduling.
fn series_within_budget<S, F>(
    ball: &Ball,
    n_max: usize,
    cfg: &EnumConfig,
    make: F,
) -> Result<(DepthCounts, Option<Truncation>)>
where
    S: Search<Acc = DepthCounts>,
    F: Fn(usize) -> S,
{
    match drive(&make(n_max), ball, cfg, n_max) {
        Ok(c) => return Ok((c, None)),
        Err(Error::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    let branching = ball.max_out().max(1) as u128;
    let cap = cfg.budget as u128;
    let mut done = 0usize;
    let mut best = DepthCounts {
        values: vec![1],
        nodes: vec![1],
    };
    loop {
        let spent: u128 = best.nodes.iter().map(|&x| x as u128).sum();
        let mut frontier = best.nodes[done] as u128;
        let mut bound = spent;
        let mut target = done;
        while target < n_max {
            frontier = frontier.saturating_mul(branching);
            if bound.saturating_add(frontier) > cap {
                break;
            }
            bound += frontier;
            target += 1;
        }
        if target == done {
            break;
        }
        match drive(&make(target), ball, cfg, target) {
            Ok(mut c) => {
                c.values[0] = 1;
                c.nodes[0] = 1;
                best = c;
                done = target;
            }
            Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok((
        best,
        Some(Truncation {
            requested: n_max,
            completed: done,
        }),
    ))
}

fn to_series(
    kind: SeriesKind,
    g: &RootedGraph,
    counts: DepthCounts,
    truncated: Option<Truncation>,
) -> CountSeries {
    let len = truncated.map_or(counts.values.len(), |t| t.completed + 1);
    let values = counts
        .values
        .into_iter()
        .take(len)
        .map(BigUint::from)
        .collect();
    let mut s = CountSeries::new(kind, g.key(), values);
    s.truncated = truncated;
    s
}

/// Number of n-step self-avoiding walks from the root for n = 0..=n_max.
///
/// On directed graphs walks follow edge directions. If the node-visit budget
/// runs out the returned series is shorter and carries a [`Truncation`].
pub fn count_saws(g: &RootedGraph, n_max: usize, cfg: &EnumConfig) -> Result<CountSeries> {
    let (ball, reached) = ball_for(g, n_max, cfg)?;
    let n = reached.min(n_max);
    let (mut counts, mut truncated) = series_within_budget(&ball, n, cfg, |n| {
        SawSearch::new(&ball, n).with_memo(cfg.prefix_depth)
    })?;
    counts.values[0] = 1;
    counts.nodes[0] = 1;
    if n < n_max {
        let completed = truncated.map_or(n, |t| t.completed);
        truncated = Some(Truncation {
            requested: n_max,
            completed,
        });
    }
    Ok(to_series(SeriesKind::Saw, g, counts, truncated))
}

/// Number of n-step bridges: walks with h(π₀) < h(πₘ) ≤ h(πₙ) for 0 < m ≤ n.
/// b₀ = 1 by convention.
pub fn count_bridges(g: &RootedGraph, n_max: usize, cfg: &EnumConfig) -> Result<CountSeries> {
    let height = g.height.as_ref().ok_or(Error::MissingHeight)?;
    let (ball, reached) = ball_for(g, n_max, cfg)?;
    let heights = ball.heights(height);
    let n = reached.min(n_max);
    let (mut counts, mut truncated) = series_within_budget(&ball, n, cfg, |n| BridgeSearch {
        ball: &ball,
        n,
        heights: &heights,
    })?;
    counts.values[0] = 1;
    counts.nodes[0] = 1;
    if n < n_max {
        let completed = truncated.map_or(n, |t| t.completed);
        truncated = Some(Truncation {
            requested: n_max,
            completed,
        });
    }
    let mut s = to_series(SeriesKind::Bridge, g, counts, truncated);
    s.rigor = Some(height.rigor);
    Ok(s)
}

/// Walk counts resolved by endpoint.
pub fn count_saws_to(
    g: &RootedGraph,
    n: usize,
    cfg: &EnumConfig,
) -> Result<BTreeMap<VertexId, BigUint>> {
    let ball = ball_exact(g, n, cfg)?;
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(g.root(), BigUint::from(1u32));
        return Ok(out);
    }
    let acc = drive(&EndpointSearch { ball: &ball, n }, &ball, cfg, n)?;
    for (v, c) in acc.counts {
        out.insert(ball.id(v).clone(), BigUint::from(c));
    }
    Ok(out)
}

/// Number of n-step walks that are the initial segment of some (n + m)-step
/// walk. Non-increasing in `m` and an upper bound for the number of
/// forward-extendable walks.
pub fn count_extendable(g: &RootedGraph, n: usize, m: usize, cfg: &EnumConfig) -> Result<BigUint> {
    let ball = ball_exact(g, n + m, cfg)?;
    let acc = drive(&ExtendSearch { ball: &ball, n, m }, &ball, cfg, n)?;
    Ok(BigUint::from(acc))
}

/// Truncated generating function Σ_{k ≤ n} σ_k x^k of a series.
///
/// The full series converges for x below 1/μ; partial sums beyond that
/// radius grow without bound.
pub fn generating_function_from(series: &CountSeries, x: f64, n_max: usize) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::InvalidArgument(
            "generating function needs x >= 0".to_string(),
        ));
    }
    series.require(n_max)?;
    let mut sum = 0.0;
    let mut power = 1.0;
    for value in series.values.iter().take(n_max + 1) {
        sum += value.to_f64().unwrap_or(f64::INFINITY) * power;
        power *= x;
    }
    Ok(sum)
}

pub fn generating_function_eval(
    g: &RootedGraph,
    x: f64,
    n_max: usize,
    cfg: &EnumConfig,
) -> Result<f64> {
    let series = count_saws(g, n_max, cfg)?;
    if let Some(t) = series.truncated {
        if t.completed < n_max {
            return Err(Error::BudgetExceeded { budget: cfg.budget });
        }
    }
    generating_function_from(&series, x, n_max)
}
