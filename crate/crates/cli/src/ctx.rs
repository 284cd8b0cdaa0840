//! Enumeration behind the cache: every exact result the commands need goes
//! through here, so a warm ledger answers without enumerating.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use sawlab_core::sampler::{displacement_stats, speed_probe, StatsMode};
use sawlab_core::walk::{count_bridges, count_saws};
use sawlab_core::{CountSeries, EnumConfig, RootedGraph, SeriesKind, Truncation};

use crate::cache::{Cache, Record};
use crate::error::{CliError, CliResult};

pub struct Ctx {
    pub cfg: EnumConfig,
    pub cache: Option<Cache>,
}

fn record(
    g: &RootedGraph,
    kind: &str,
    params: &BTreeMap<String, u64>,
    n: usize,
    value: String,
) -> Record {
    Record {
        graph_key: g.key(),
        kind: kind.into(),
        params: params.clone(),
        n,
        value,
    }
}

impl Ctx {
    fn cached_prefix(&self, g: &RootedGraph, kind: SeriesKind, n_max: usize) -> Vec<BigUint> {
        let Some(cache) = &self.cache else {
            return Vec::new();
        };
        let key = g.key();
        let params = BTreeMap::new();
        let mut out = Vec::new();
        for n in 0..=n_max {
            match cache
                .get(&key, kind.as_str(), &params, n)
                .and_then(|v| v.parse::<BigUint>().ok())
            {
                Some(v) => out.push(v),
                None => break,
            }
        }
        out
    }

    /// Walk or bridge counts up to `n_max`, possibly truncated by the budget.
    pub fn series(
        &mut self,
        g: &RootedGraph,
        kind: SeriesKind,
        n_max: usize,
    ) -> CliResult<CountSeries> {
        let cached = self.cached_prefix(g, kind, n_max);
        let rigor = match kind {
            SeriesKind::Bridge => Some(
                g.height
                    .as_ref()
                    .ok_or(sawlab_core::Error::MissingHeight)?
                    .rigor,
            ),
            _ => None,
        };
        if cached.len() == n_max + 1 {
            let mut s = CountSeries::new(kind, g.key(), cached);
            s.rigor = rigor;
            return Ok(s);
        }
        let computed = match kind {
            SeriesKind::Saw => count_saws(g, n_max, &self.cfg)?,
            SeriesKind::Bridge => count_bridges(g, n_max, &self.cfg)?,
            other => {
                return Err(CliError::Usage(format!(
                    "series kind `{other}` is not cached"
                )));
            }
        };
        if let Some(cache) = &mut self.cache {
            let params = BTreeMap::new();
            let records = computed
                .values
                .iter()
                .enumerate()
                .map(|(n, v)| record(g, kind.as_str(), &params, n, v.to_string()))
                .collect();
            cache.put(records)?;
        }
        if cached.len() > computed.values.len() {
            let mut s = CountSeries::new(kind, g.key(), cached);
            s.rigor = rigor;
            s.truncated = Some(Truncation {
                requested: n_max,
                completed: s.n_max(),
            });
            return Ok(s);
        }
        Ok(computed)
    }

    /// As [`Ctx::series`] but fails unless the series reaches `n_max`.
    pub fn complete(
        &mut self,
        g: &RootedGraph,
        kind: SeriesKind,
        n_max: usize,
    ) -> CliResult<CountSeries> {
        let s = self.series(g, kind, n_max)?;
        if let Some(t) = s.truncated {
            return Err(CliError::Budget(format!(
                "budget of {} node visits exhausted: {} series complete to n = {} of {}",
                self.cfg.budget, kind, t.completed, t.requested
            )));
        }
        Ok(s)
    }

    /// Exact E‖π_n‖², with the number of walks it averages over.
    pub fn exact_mean_sq(&mut self, g: &RootedGraph, n: usize) -> CliResult<(f64, BigUint)> {
        let params = BTreeMap::new();
        let total = self.complete(g, SeriesKind::Saw, n)?.values[n].clone();
        if let Some(v) = self
            .cache
            .as_ref()
            .and_then(|c| c.get(&g.key(), "mean-sq", &params, n))
            .and_then(|v| v.parse::<f64>().ok())
        {
            return Ok((v, total));
        }
        let row = displacement_stats(g, &[n], 1, 0, StatsMode::Exact, &self.cfg)?.remove(0);
        if let Some(cache) = &mut self.cache {
            cache.put(vec![record(
                g,
                "mean-sq",
                &params,
                n,
                format!("{:?}", row.mean_sq),
            )])?;
        }
        Ok((row.mean_sq, total))
    }

    /// Number of the first `count` samples of the seeded run whose
    /// displacement is at most c·n.
    pub fn speed_hits(
        &mut self,
        g: &RootedGraph,
        n: usize,
        c: f64,
        count: usize,
        seed: u64,
    ) -> CliResult<u64> {
        let params: BTreeMap<String, u64> = [
            ("c_micro".to_string(), (c * 1e6).round() as u64),
            ("count".to_string(), count as u64),
            ("seed".to_string(), seed),
        ]
        .into();
        if let Some(v) = self
            .cache
            .as_ref()
            .and_then(|cache| cache.get(&g.key(), "speed-hits", &params, n))
            .and_then(|v| v.parse::<u64>().ok())
        {
            return Ok(v);
        }
        let p = speed_probe(g, n, c, count, seed, &self.cfg)?;
        let hits = (p.frequency * count as f64).round() as u64;
        if let Some(cache) = &mut self.cache {
            cache.put(vec![record(g, "speed-hits", &params, n, hits.to_string())])?;
        }
        Ok(hits)
    }
}
