//! Exactly uniform self-avoiding walks and displacement statistics.
//!
//! A walk is drawn by picking a uniform integer below σ_n and unranking it
//! against the depth-first enumeration order. Sample `i` of a run with seed
//! `s` always uses ChaCha8 stream `i` under seed `s`, so samples do not depend
//! on how many are drawn or in what order.

use alloc::vec::Vec;
use core::sync::atomic::AtomicU64;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{RootedGraph, VertexId};
use crate::walk::engine::{map_prefixes, mul_weight, Meter, Prefix, Walk};
use crate::walk::searches::completions;
use crate::walk::{Ball, EnumConfig};
use crate::{Error, Result};

mod stats;

pub use stats::{
    displacement_stats, nu_estimate, speed_probe, DisplacementRow, SpeedProbe, StatsMode,
    EXACT_LIMIT,
};

/// Number of first-level prefixes the index aims for.
const TARGET_PREFIXES: usize = 4096;

/// A self-avoiding walk with the graph distance between its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSample {
    pub vertices: Vec<VertexId>,
    pub n: usize,
    pub displacement: u32,
}

struct Entry {
    prefix: Prefix,
    /// Continuations of the prefix to full length, unweighted by the prefix.
    completions: u128,
    /// Weighted walks in all earlier entries.
    start: u128,
}

/// Rank table for n-step walks: every prefix at a fixed depth with the
/// number of full walks through it.
pub struct SampleIndex {
    ball: Ball,
    n: usize,
    entries: Vec<Entry>,
    total: u128,
}

fn collect_prefixes(ball: &Ball, depth: usize) -> Result<Vec<Prefix>> {
    fn rec(
        ball: &Ball,
        walk: &mut Walk,
        weight: u128,
        left: usize,
        out: &mut Vec<Prefix>,
    ) -> Result<()> {
        if left == 0 {
            out.push(Prefix {
                path: walk.path.clone(),
                weight,
            });
            return Ok(());
        }
        let v = walk.last();
        let edges: Vec<(u32, u32)> = ball.edges(v).collect();
        for (t, m) in edges {
            if walk.visited[t as usize] {
                continue;
            }
            walk.push(t);
            let r = rec(ball, walk, mul_weight(weight, m)?, left - 1, out);
            walk.pop();
            r?;
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut walk = Walk::rooted(ball.len());
    rec(ball, &mut walk, 1, depth, &mut out)?;
    Ok(out)
}

impl SampleIndex {
    /// Enumerates all n-step walks once to build the rank table. Fails with
    /// [`Error::BudgetExceeded`] rather than approximating.
    pub fn new(g: &RootedGraph, n: usize, cfg: &EnumConfig) -> Result<SampleIndex> {
        Self::with_prefix_target(g, n, cfg, TARGET_PREFIXES)
    }

    /// As [`SampleIndex::new`], cutting the table at the first depth with at
    /// least `target` prefixes.
    pub fn with_prefix_target(
        g: &RootedGraph,
        n: usize,
        cfg: &EnumConfig,
        target: usize,
    ) -> Result<SampleIndex> {
        let (ball, reached) = Ball::build_capped(g, n, cfg.budget)?;
        if reached < n {
            return Err(Error::BudgetExceeded { budget: cfg.budget });
        }
        let mut depth = 0;
        let mut prefixes = collect_prefixes(&ball, 0)?;
        while depth < n && prefixes.len() < target {
            depth += 1;
            prefixes = collect_prefixes(&ball, depth)?;
        }
        let shared = AtomicU64::new(prefixes.len() as u64);
        let remaining = n - depth;
        let counts = map_prefixes(ball.len(), &prefixes, cfg, &shared, |walk, _, meter| {
            completions(&ball, walk, remaining, meter)
        })?;
        let mut entries = Vec::with_capacity(prefixes.len());
        let mut total: u128 = 0;
        for (prefix, c) in prefixes.into_iter().zip(counts) {
            if c == 0 {
                continue;
            }
            let through = prefix.weight.checked_mul(c).ok_or(Error::CountOverflow)?;
            entries.push(Entry {
                prefix,
                completions: c,
                start: total,
            });
            total = total.checked_add(through).ok_or(Error::CountOverflow)?;
        }
        Ok(SampleIndex {
            ball,
            n,
            entries,
            total,
        })
    }

    /// σ_n.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    /// The walk of rank `r` in enumeration order, as ball indices. Walks
    /// using different parallel edges get different ranks.
    pub fn unrank(&self, r: u128) -> Result<Vec<u32>> {
        if r >= self.total {
            return Err(Error::InvalidArgument(alloc::format!(
                "rank {r} out of range 0..{}",
                self.total
            )));
        }
        let i = self.entries.partition_point(|e| e.start <= r) - 1;
        let entry = &self.entries[i];
        let mut rest = (r - entry.start) % entry.completions;
        let shared = AtomicU64::new(0);
        let mut meter = Meter::new(&shared, u64::MAX);
        let mut walk = Walk::new(self.ball.len());
        walk.load(&entry.prefix.path);
        for left in (0..self.n - walk.depth()).rev() {
            let v = walk.last();
            let edges: Vec<(u32, u32)> = self.ball.edges(v).collect();
            let mut chosen = None;
            for (t, m) in edges {
                if walk.visited[t as usize] {
                    continue;
                }
                walk.push(t);
                let sub = completions(&self.ball, &mut walk, left, &mut meter)?;
                let block = mul_weight(sub, m)?;
                if rest < block {
                    rest %= sub;
                    chosen = Some(t);
                    break;
                }
                walk.pop();
                rest -= block;
            }
            if chosen.is_none() {
                return Err(Error::InvalidArgument("rank table is inconsistent".into()));
            }
        }
        Ok(walk.path)
    }

    pub fn to_sample(&self, path: &[u32]) -> WalkSample {
        WalkSample {
            vertices: path.iter().map(|&v| self.ball.id(v).clone()).collect(),
            n: path.len() - 1,
            displacement: self.ball.dist(*path.last().expect("non-empty walk")),
        }
    }

    /// Draws the `index`-th sample of the run seeded by `seed`.
    pub fn draw(&self, seed: u64, index: u64) -> Result<Vec<u32>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let r = rng.gen_range(0..self.total);
        self.unrank(r)
    }
}

/// `count` exactly uniform n-step walks, reproducible from `seed`.
pub fn sample_uniform(
    g: &RootedGraph,
    n: usize,
    count: usize,
    seed: u64,
    cfg: &EnumConfig,
) -> Result<Vec<WalkSample>> {
    if count == 0 {
        return Err(Error::InvalidArgument("sample count must be >= 1".into()));
    }
    let index = SampleIndex::new(g, n, cfg)?;
    if index.total() == 0 {
        return Err(Error::InvalidArgument(alloc::format!("no {n}-step walks")));
    }
    (0..count as u64)
        .map(|i| index.draw(seed, i).map(|p| index.to_sample(&p)))
        .collect()
}
