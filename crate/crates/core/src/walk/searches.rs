//! The concrete walk searches: plain counts, bridges, endpoints, extendability.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use super::ball::Ball;
use super::engine::{add_counts, add_nodes, mul_weight, Meter, Search, Split, Walk};
use crate::{Error, Result};

/// Per-depth weighted walk counts and unweighted search-node counts.
#[derive(Debug, Clone, Default)]
pub(crate) struct DepthCounts {
    pub(crate) values: Vec<u128>,
    pub(crate) nodes: Vec<u64>,
}

impl DepthCounts {
    fn with_len(n: usize) -> Self {
        DepthCounts {
            values: vec![0; n + 1],
            nodes: vec![0; n + 1],
        }
    }

    fn merge(&mut self, from: DepthCounts) -> Result<()> {
        add_counts(&mut self.values, &from.values)?;
        add_nodes(&mut self.nodes, &from.nodes);
        Ok(())
    }

    /// Adds `weight` times the counts of `sub` below `depth`.
    fn add_scaled(&mut self, sub: &DepthCounts, depth: usize, weight: u128) -> Result<()> {
        for j in depth + 1..self.values.len() {
            let v = sub.values[j]
                .checked_mul(weight)
                .ok_or(Error::CountOverflow)?;
            self.values[j] = self.values[j].checked_add(v).ok_or(Error::CountOverflow)?;
            self.nodes[j] += sub.nodes[j];
        }
        Ok(())
    }

    #[inline]
    fn record(&mut self, depth: usize, weight: u128) -> Result<()> {
        self.nodes[depth] += 1;
        let slot = &mut self.values[depth];
        *slot = slot.checked_add(weight).ok_or(Error::CountOverflow)?;
        Ok(())
    }
}

// ------------------------------------------------------------------- plain

/// Remaining length below which subtrees are memoized.
pub(crate) const MEMO_REACH: usize = 12;
/// Reachable regions larger than this are not memoized.
const MEMO_MAX_REGION: usize = 4096;
/// Per-task cap on stored key words.
const MEMO_MAX_WORDS: usize = 1 << 22;

/// Subtree counts keyed by the remaining length, the current vertex and the
/// set of unvisited vertices reachable from it within the remaining length.
/// Every continuation stays inside that set, so equal keys have equal
/// futures.
struct Memo {
    map: HashMap<Vec<u32>, DepthCounts>,
    mark: Vec<u32>,
    stamp: u32,
    queue: Vec<(u32, u32)>,
    words: usize,
}

impl Memo {
    fn new(ball_len: usize) -> Self {
        Memo {
            map: HashMap::new(),
            mark: vec![0; ball_len],
            stamp: 0,
            queue: Vec::new(),
            words: 0,
        }
    }

    fn key(&mut self, ball: &Ball, walk: &Walk, reach: usize) -> Option<Vec<u32>> {
        let v = walk.last();
        self.stamp += 1;
        self.queue.clear();
        self.queue.push((v, 0));
        let mut head = 0;
        while head < self.queue.len() {
            let (u, d) = self.queue[head];
            head += 1;
            if d as usize == reach {
                continue;
            }
            for (t, _) in ball.edges(u) {
                let i = t as usize;
                if walk.visited[i] || self.mark[i] == self.stamp {
                    continue;
                }
                self.mark[i] = self.stamp;
                if self.queue.len() > MEMO_MAX_REGION {
                    return None;
                }
                self.queue.push((t, d + 1));
            }
        }
        let mut key: Vec<u32> = Vec::with_capacity(self.queue.len() + 1);
        key.push(reach as u32);
        key.extend(self.queue.iter().map(|&(u, _)| u));
        key[2..].sort_unstable();
        Some(key)
    }
}

pub(crate) struct SawSearch<'a> {
    pub(crate) ball: &'a Ball,
    pub(crate) n: usize,
    /// Shallowest depth at which subtrees are looked up in the memo; lookups
    /// happen wherever the remaining length is a multiple of the reach.
    pub(crate) memo_from: Option<usize>,
}

impl<'a> SawSearch<'a> {
    pub(crate) fn new(ball: &'a Ball, n: usize) -> Self {
        SawSearch {
            ball,
            n,
            memo_from: None,
        }
    }

    /// Enables the memo strictly below the prefix cut.
    pub(crate) fn with_memo(mut self, prefix_depth: usize) -> Self {
        self.memo_from = Some(prefix_depth + 1);
        self
    }

    #[inline]
    fn memo_at(&self, depth: usize) -> bool {
        match self.memo_from {
            Some(from) => {
                depth >= from && depth < self.n && (self.n - depth).is_multiple_of(MEMO_REACH)
            }
            None => false,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn memoized<const WEIGHTED: bool>(
        &self,
        walk: &mut Walk,
        depth: usize,
        weight: u128,
        acc: &mut DepthCounts,
        split: &mut Split,
        meter: &mut Meter<'_>,
        memo: &mut Memo,
    ) -> Result<()> {
        let key = match memo.key(self.ball, walk, self.n - depth) {
            Some(k) => k,
            None => return self.rec::<WEIGHTED>(walk, depth, weight, acc, split, meter, memo),
        };
        if let Some(sub) = memo.map.get(&key) {
            return acc.add_scaled(sub, depth, weight);
        }
        let mut sub = DepthCounts::with_len(self.n);
        self.rec::<WEIGHTED>(walk, depth, 1, &mut sub, split, meter, memo)?;
        acc.add_scaled(&sub, depth, weight)?;
        if memo.words + key.len() <= MEMO_MAX_WORDS {
            memo.words += key.len();
            memo.map.insert(key, sub);
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn rec<const WEIGHTED: bool>(
        &self,
        walk: &mut Walk,
        depth: usize,
        weight: u128,
        acc: &mut DepthCounts,
        split: &mut Split,
        meter: &mut Meter<'_>,
        memo: &mut Memo,
    ) -> Result<()> {
        let v = walk.last();
        let (lo, hi) = self.ball.span(v);
        if depth + 1 == self.n {
            let mut leaves = 0u64;
            let mut total = 0u128;
            for e in lo..hi {
                let t = self.ball.target(e);
                if !walk.visited[t as usize] {
                    leaves += 1;
                    if WEIGHTED {
                        total = total
                            .checked_add(mul_weight(weight, self.ball.mult(e))?)
                            .ok_or(Error::CountOverflow)?;
                    }
                }
            }
            if !WEIGHTED {
                total = leaves as u128 * weight;
            }
            acc.nodes[self.n] += leaves;
            let slot = &mut acc.values[self.n];
            *slot = slot.checked_add(total).ok_or(Error::CountOverflow)?;
            return meter.add(leaves);
        }
        for e in lo..hi {
            let t = self.ball.target(e);
            if walk.visited[t as usize] {
                continue;
            }
            let w = if WEIGHTED {
                mul_weight(weight, self.ball.mult(e))?
            } else {
                weight
            };
            acc.record(depth + 1, w)?;
            meter.add(1)?;
            if split.take(walk, t, depth + 1, w) {
                continue;
            }
            walk.push(t);
            let r = if self.memo_at(depth + 1) {
                self.memoized::<WEIGHTED>(walk, depth + 1, w, acc, split, meter, memo)
            } else {
                self.rec::<WEIGHTED>(walk, depth + 1, w, acc, split, meter, memo)
            };
            walk.pop();
            r?;
        }
        Ok(())
    }
}

impl Search for SawSearch<'_> {
    type Acc = DepthCounts;

    fn new_acc(&self) -> DepthCounts {
        DepthCounts::with_len(self.n)
    }

    fn merge(&self, into: &mut DepthCounts, from: DepthCounts) -> Result<()> {
        into.merge(from)
    }

    fn explore(
        &self,
        walk: &mut Walk,
        weight: u128,
        acc: &mut DepthCounts,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()> {
        let depth = walk.depth();
        if depth >= self.n {
            return Ok(());
        }
        let mut memo = Memo::new(if self.memo_from.is_some() {
            self.ball.len()
        } else {
            0
        });
        if self.ball.weighted() {
            self.rec::<true>(walk, depth, weight, acc, split, meter, &mut memo)
        } else {
            self.rec::<false>(walk, depth, weight, acc, split, meter, &mut memo)
        }
    }
}

// ----------------------------------------------------------------- bridges

/// Walks whose every vertex after the first is strictly above the start and
/// whose last vertex is (weakly) the highest.
pub(crate) struct BridgeSearch<'a> {
    pub(crate) ball: &'a Ball,
    pub(crate) n: usize,
    pub(crate) heights: &'a [i64],
}

impl BridgeSearch<'_> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        walk: &mut Walk,
        depth: usize,
        weight: u128,
        top: i64,
        acc: &mut DepthCounts,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()> {
        let base = self.heights[0];
        let v = walk.last();
        let (lo, hi) = self.ball.span(v);
        let last_step = depth + 1 == self.n;
        for e in lo..hi {
            let t = self.ball.target(e);
            let h = self.heights[t as usize];
            if h <= base || walk.visited[t as usize] {
                continue;
            }
            let w = mul_weight(weight, self.ball.mult(e))?;
            acc.nodes[depth + 1] += 1;
            meter.add(1)?;
            if h >= top {
                let slot = &mut acc.values[depth + 1];
                *slot = slot.checked_add(w).ok_or(Error::CountOverflow)?;
            }
            if last_step || split.take(walk, t, depth + 1, w) {
                continue;
            }
            walk.push(t);
            let r = self.rec(walk, depth + 1, w, top.max(h), acc, split, meter);
            walk.pop();
            r?;
        }
        Ok(())
    }
}

impl Search for BridgeSearch<'_> {
    type Acc = DepthCounts;

    fn new_acc(&self) -> DepthCounts {
        DepthCounts::with_len(self.n)
    }

    fn merge(&self, into: &mut DepthCounts, from: DepthCounts) -> Result<()> {
        into.merge(from)
    }

    fn explore(
        &self,
        walk: &mut Walk,
        weight: u128,
        acc: &mut DepthCounts,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()> {
        let depth = walk.depth();
        if depth >= self.n {
            return Ok(());
        }
        let top = walk
            .path
            .iter()
            .map(|&v| self.heights[v as usize])
            .max()
            .unwrap_or(0);
        self.rec(walk, depth, weight, top, acc, split, meter)
    }
}

// --------------------------------------------------------------- endpoints

pub(crate) struct EndpointSearch<'a> {
    pub(crate) ball: &'a Ball,
    pub(crate) n: usize,
}

#[derive(Debug, Default)]
pub(crate) struct EndpointCounts {
    pub(crate) counts: HashMap<u32, u128>,
}

impl EndpointSearch<'_> {
    fn rec(
        &self,
        walk: &mut Walk,
        depth: usize,
        weight: u128,
        acc: &mut EndpointCounts,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()> {
        let v = walk.last();
        let (lo, hi) = self.ball.span(v);
        for e in lo..hi {
            let t = self.ball.target(e);
            if walk.visited[t as usize] {
                continue;
            }
            let w = mul_weight(weight, self.ball.mult(e))?;
            meter.add(1)?;
            if depth + 1 == self.n {
                let slot = acc.counts.entry(t).or_insert(0);
                *slot = slot.checked_add(w).ok_or(Error::CountOverflow)?;
                continue;
            }
            if split.take(walk, t, depth + 1, w) {
                continue;
            }
            walk.push(t);
            let r = self.rec(walk, depth + 1, w, acc, split, meter);
            walk.pop();
            r?;
        }
        Ok(())
    }
}

impl Search for EndpointSearch<'_> {
    type Acc = EndpointCounts;

    fn new_acc(&self) -> EndpointCounts {
        EndpointCounts::default()
    }

    fn merge(&self, into: &mut EndpointCounts, from: EndpointCounts) -> Result<()> {
        for (k, v) in from.counts {
            let slot = into.counts.entry(k).or_insert(0);
            *slot = slot.checked_add(v).ok_or(Error::CountOverflow)?;
        }
        Ok(())
    }

    fn explore(
        &self,
        walk: &mut Walk,
        weight: u128,
        acc: &mut EndpointCounts,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()> {
        let depth = walk.depth();
        if depth >= self.n {
            return Ok(());
        }
        self.rec(walk, depth, weight, acc, split, meter)
    }
}

// ------------------------------------------------------------ extendability

/// Counts n-step walks that extend to some (n + m)-step walk.
pub(crate) struct ExtendSearch<'a> {
    pub(crate) ball: &'a Ball,
    pub(crate) n: usize,
    pub(crate) m: usize,
}

impl ExtendSearch<'_> {
    fn extends(&self, walk: &mut Walk, remaining: usize, meter: &mut Meter<'_>) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        let v = walk.last();
        let (lo, hi) = self.ball.span(v);
        for e in lo..hi {
            let t = self.ball.target(e);
            if walk.visited[t as usize] {
                continue;
            }
            meter.add(1)?;
            walk.push(t);
            let found = self.extends(walk, remaining - 1, meter);
            walk.pop();
            if found? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn rec(
        &self,
        walk: &mut Walk,
        depth: usize,
        weight: u128,
        acc: &mut u128,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()> {
        if depth == self.n {
            if self.extends(walk, self.m, meter)? {
                *acc = acc.checked_add(weight).ok_or(Error::CountOverflow)?;
            }
            return Ok(());
        }
        let v = walk.last();
        let (lo, hi) = self.ball.span(v);
        for e in lo..hi {
            let t = self.ball.target(e);
            if walk.visited[t as usize] {
                continue;
            }
            let w = mul_weight(weight, self.ball.mult(e))?;
            meter.add(1)?;
            if split.take(walk, t, depth + 1, w) {
                continue;
            }
            walk.push(t);
            let r = self.rec(walk, depth + 1, w, acc, split, meter);
            walk.pop();
            r?;
        }
        Ok(())
    }
}

impl Search for ExtendSearch<'_> {
    type Acc = u128;

    fn new_acc(&self) -> u128 {
        0
    }

    fn merge(&self, into: &mut u128, from: u128) -> Result<()> {
        *into = into.checked_add(from).ok_or(Error::CountOverflow)?;
        Ok(())
    }

    fn explore(
        &self,
        walk: &mut Walk,
        weight: u128,
        acc: &mut u128,
        split: &mut Split,
        meter: &mut Meter<'_>,
    ) -> Result<()> {
        let depth = walk.depth();
        self.rec(walk, depth, weight, acc, split, meter)
    }
}

/// Weighted number of `remaining`-step continuations of `walk`.
pub(crate) fn completions(
    ball: &Ball,
    walk: &mut Walk,
    remaining: usize,
    meter: &mut Meter<'_>,
) -> Result<u128> {
    if remaining == 0 {
        return Ok(1);
    }
    let n = walk.depth() + remaining;
    let search = SawSearch::new(ball, n);
    let mut acc = search.new_acc();
    search.explore(walk, 1, &mut acc, &mut Split::none(), meter)?;
    Ok(acc.values[n])
}
