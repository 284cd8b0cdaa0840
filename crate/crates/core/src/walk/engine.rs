//! Depth-first walk search split into independent prefix subtrees.
//!
//! The walk tree is cut at a fixed prefix depth. Prefixes are enumerated
//! sequentially, then each subtree is searched on its own and the per-task
//! accumulators are summed. Integer addition commutes, so results do not
//! depend on the number of workers.

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use super::ball::Ball;
use super::EnumConfig;
use crate::{Error, Result};

const FLUSH_EVERY: u64 = 1 << 16;

/// Node-visit meter shared by all tasks of one search.
pub(crate) struct Meter<'a> {
    local: u64,
    shared: &'a AtomicU64,
    cap: u64,
}

impl<'a> Meter<'a> {
    pub(crate) fn new(shared: &'a AtomicU64, cap: u64) -> Self {
        Meter {
            local: 0,
            shared,
            cap,
        }
    }

    #[inline]
    pub(crate) fn add(&mut self, k: u64) -> Result<()> {
        self.local += k;
        if self.local >= FLUSH_EVERY {
            self.flush()
        } else {
            Ok(())
        }
    }

    pub(crate) fn flush(&mut self) -> Result<()> {
        let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.cap {
            Err(Error::BudgetExceeded { budget: self.cap })
        } else {
            Ok(())
        }
    }
}

/// The current walk: its vertex sequence and visited flags over the ball.
pub(crate) struct Walk {
    pub(crate) path: Vec<u32>,
    pub(crate) visited: Vec<bool>,
}

impl Walk {
    pub(crate) fn new(ball_len: usize) -> Self {
        Walk {
            path: Vec::new(),
            visited: vec![false; ball_len],
        }
    }

    pub(crate) fn rooted(ball_len: usize) -> Self {
        let mut w = Walk::new(ball_len);
        w.push(0);
        w
    }

    pub(crate) fn load(&mut self, path: &[u32]) {
        self.clear();
        for &v in path {
            self.push(v);
        }
    }

    pub(crate) fn clear(&mut self) {
        for &v in &self.path {
            self.visited[v as usize] = false;
        }
        self.path.clear();
    }

    #[inline]
    pub(crate) fn push(&mut self, v: u32) {
        self.visited[v as usize] = true;
        self.path.push(v);
    }

    #[inline]
    pub(crate) fn pop(&mut self) {
        if let Some(v) = self.path.pop() {
            self.visited[v as usize] = false;
        }
    }

    pub(crate) fn last(&self) -> u32 {
        *self.path.last().expect("walk is rooted")
    }

    pub(crate) fn depth(&self) -> usize {
        self.path.len() - 1
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Prefix {
    pub(crate) path: Vec<u32>,
    pub(crate) weight: u128,
}

/// Where a search stops descending and records prefixes instead.
pub(crate) struct Split {
    pub(crate) depth: Option<usize>,
    pub(crate) out: Vec<Prefix>,
}

impl Split {
    pub(crate) fn none() -> Self {
        Split {
            depth: None,
            out: Vec::new(),
        }
    }

    pub(crate) fn at(depth: usize) -> Self {
        Split {
            depth: Some(depth),
            out: Vec::new(),
        }
    }

    /// Records the child if it sits at the split depth. The caller has
    /// already accounted for the child node itself.
    #[inline]
    pub(crate) fn take(
        &mut self,
        walk: &Walk,
        child: u32,
        child_depth: usize,
        weight: u128,
    ) -> bool {
        if self.depth != Some(child_depth) {
            return false;
        }
        let mut path = Vec::with_capacity(walk.path.len() + 1);
        path.extend_from_slice(&walk.path);
        path.push(child);
        self.out.push(Prefix { path, weight });
        true
    }
}

#[inline]
pub(crate) fn mul_weight(w: u128, m: u32) -> Result<u128> {
    w.checked_mul(m as u128).ok_or(Error::CountOverflow)
}

/// A depth-first search over self-avoiding walks in a ball.
pub(crate) trait Search: Sync {
    type Acc: Send;

    fn new_acc(&self) -> Self::Acc;

    fn merge(&self, into: &mut Self::Acc, from: Self::Acc) -> Result<()>;

    /// Searches every extension of `walk`, whose own node has already been
    /// accounted for. `weight` is the multiplicity product along `walk`.
    fn explore(
        &self,
        walk: &mut Walk,
        weight: u128,
        acc: &mut Self::Acc,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()>;
}

/// Runs a search from the root to `max_depth` under the configured budget.
pub(crate) fn drive<S: Search>(
    search: &S,
    ball: &Ball,
    cfg: &EnumConfig,
    max_depth: usize,
) -> Result<S::Acc> {
    let shared = AtomicU64::new(0);
    let mut meter = Meter::new(&shared, cfg.budget);
    let mut walk = Walk::rooted(ball.len());
    let mut acc = search.new_acc();
    // leave at least two levels below the cut so the leaf loop never meets it
    let mut split = if cfg.prefix_depth >= 1 && cfg.prefix_depth + 2 <= max_depth {
        Split::at(cfg.prefix_depth)
    } else {
        Split::none()
    };
    search.explore(&mut walk, 1, &mut acc, &mut split, &mut meter)?;
    meter.flush()?;
    let part = run_prefixes(search, ball.len(), &split.out, cfg, &shared)?;
    search.merge(&mut acc, part)?;
    Ok(acc)
}

fn run_one<S: Search>(
    search: &S,
    walk: &mut Walk,
    acc: &mut S::Acc,
    prefix: &Prefix,
    shared: &AtomicU64,
    cap: u64,
) -> Result<()> {
    let mut meter = Meter::new(shared, cap);
    walk.load(&prefix.path);
    let r = search.explore(walk, prefix.weight, acc, &mut Split::none(), &mut meter);
    walk.clear();
    r?;
    meter.flush()
}

fn run_sequential<S: Search>(
    search: &S,
    ball_len: usize,
    prefixes: &[Prefix],
    cfg: &EnumConfig,
    shared: &AtomicU64,
) -> Result<S::Acc> {
    let mut acc = search.new_acc();
    let mut walk = Walk::new(ball_len);
    for p in prefixes {
        run_one(search, &mut walk, &mut acc, p, shared, cfg.budget)?;
    }
    Ok(acc)
}

#[cfg(feature = "std")]
fn run_prefixes<S: Search>(
    search: &S,
    ball_len: usize,
    prefixes: &[Prefix],
    cfg: &EnumConfig,
    shared: &AtomicU64,
) -> Result<S::Acc> {
    use alloc::string::ToString;
    use rayon::prelude::*;

    if cfg.workers == 1 || prefixes.len() < 2 {
        return run_sequential(search, ball_len, prefixes, cfg, shared);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    pool.install(|| {
        prefixes
            .par_iter()
            .try_fold(
                || (search.new_acc(), Walk::new(ball_len)),
                |(mut acc, mut walk), p| {
                    run_one(search, &mut walk, &mut acc, p, shared, cfg.budget)?;
                    Ok::<_, Error>((acc, walk))
                },
            )
            .map(|r| r.map(|(acc, _)| acc))
            .try_reduce(
                || search.new_acc(),
                |mut a, b| {
                    search.merge(&mut a, b)?;
                    Ok(a)
                },
            )
    })
}

#[cfg(not(feature = "std"))]
fn run_prefixes<S: Search>(
    search: &S,
    ball_len: usize,
    prefixes: &[Prefix],
    cfg: &EnumConfig,
    shared: &AtomicU64,
) -> Result<S::Acc> {
    run_sequential(search, ball_len, prefixes, cfg, shared)
}

/// Adds `from` into `into` element-wise, growing `into` as needed.
pub(crate) fn add_counts(into: &mut Vec<u128>, from: &[u128]) -> Result<()> {
    if into.len() < from.len() {
        into.resize(from.len(), 0);
    }
    for (a, b) in into.iter_mut().zip(from) {
        *a = a.checked_add(*b).ok_or(Error::CountOverflow)?;
    }
    Ok(())
}

pub(crate) fn add_nodes(into: &mut Vec<u64>, from: &[u64]) {
    if into.len() < from.len() {
        into.resize(from.len(), 0);
    }
    for (a, b) in into.iter_mut().zip(from) {
        *a += *b;
    }
}

/// Applies `f` to every prefix, each with its own walk, returning results in
/// prefix order.
pub(crate) fn map_prefixes<T, F>(
    ball_len: usize,
    prefixes: &[Prefix],
    cfg: &EnumConfig,
    shared: &AtomicU64,
    f: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut Walk, &Prefix, &mut Meter<'_>) -> Result<T> + Sync,
{
    let one = |walk: &mut Walk, p: &Prefix| -> Result<T> {
        let mut meter = Meter::new(shared, cfg.budget);
        walk.load(&p.path);
        let r = f(walk, p, &mut meter);
        walk.clear();
        let t = r?;
        meter.flush()?;
        Ok(t)
    };
    #[cfg(feature = "std")]
    if cfg.workers != 1 && prefixes.len() >= 2 {
        use alloc::string::ToString;
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        return pool.install(|| {
            prefixes
                .par_iter()
                .map_init(|| Walk::new(ball_len), |walk, p| one(walk, p))
                .collect()
        });
    }
    let mut walk = Walk::new(ball_len);
    prefixes.iter().map(|p| one(&mut walk, p)).collect()
}
