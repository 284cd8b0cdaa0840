//! Slow, obviously-correct reference implementations for the test suites.
//!
//! Nothing here uses the crate's ball, search engine or memo: walks are
//! materialized as vertex lists and extended one neighbor-rule call at a
//! time.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigUint;
use sawlab_core::{RootedGraph, VertexId};

/// A walk with its multiplicity weight.
pub struct NaiveWalk {
    pub path: Vec<VertexId>,
    pub weight: u128,
}

/// Calls `visit` on every walk of length at most `n_max`, depth first.
pub fn for_each_walk(g: &RootedGraph, n_max: usize, mut visit: impl FnMut(&[VertexId], u128)) {
    fn go(
        g: &RootedGraph,
        path: &mut Vec<VertexId>,
        weight: u128,
        left: usize,
        visit: &mut dyn FnMut(&[VertexId], u128),
    ) {
        visit(path, weight);
        if left == 0 {
            return;
        }
        let last = path.last().unwrap().clone();
        for e in g.neighbors(&last).unwrap() {
            if path.contains(&e.to) {
                continue;
            }
            path.push(e.to);
            go(g, path, weight * e.multiplicity as u128, left - 1, visit);
            path.pop();
        }
    }
    go(g, &mut vec![g.root()], 1, n_max, &mut visit);
}

/// Every walk of length exactly `n`.
pub fn naive_walks(g: &RootedGraph, n: usize) -> Vec<NaiveWalk> {
    let mut out = Vec::new();
    for_each_walk(g, n, |path, weight| {
        if path.len() == n + 1 {
            out.push(NaiveWalk {
                path: path.to_vec(),
                weight,
            });
        }
    });
    out
}

pub fn naive_counts(g: &RootedGraph, n_max: usize) -> Vec<BigUint> {
    let mut out = vec![0u128; n_max + 1];
    for_each_walk(g, n_max, |path, weight| out[path.len() - 1] += weight);
    out.into_iter().map(BigUint::from).collect()
}

/// Bridges checked directly against the definition.
pub fn naive_bridges(g: &RootedGraph, n_max: usize) -> Vec<BigUint> {
    let mut out = vec![0u128; n_max + 1];
    out[0] = 1;
    for_each_walk(g, n_max, |path, weight| {
        let n = path.len() - 1;
        if n == 0 {
            return;
        }
        let h: Vec<i64> = path.iter().map(|v| g.height_of(v).unwrap()).collect();
        if (1..=n).all(|m| h[0] < h[m] && h[m] <= h[n]) {
            out[n] += weight;
        }
    });
    out.into_iter().map(BigUint::from).collect()
}

pub fn naive_endpoints(g: &RootedGraph, n: usize) -> BTreeMap<VertexId, BigUint> {
    let mut out = BTreeMap::new();
    for_each_walk(g, n, |path, weight| {
        if path.len() == n + 1 {
            *out.entry(path[n].clone())
                .or_insert_with(|| BigUint::from(0u32)) += BigUint::from(weight);
        }
    });
    out
}

/// Graph distance from the root by plain breadth-first search.
pub fn naive_distance(g: &RootedGraph, target: &VertexId, limit: usize) -> Option<usize> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(g.root());
    queue.push_back((g.root(), 0));
    while let Some((v, d)) = queue.pop_front() {
        if &v == target {
            return Some(d);
        }
        if d == limit {
            continue;
        }
        for e in g.neighbors(&v).unwrap() {
            if seen.insert(e.to.clone()) {
                queue.push_back((e.to, d + 1));
            }
        }
    }
    None
}

/// Square-lattice walk counts from coordinate arithmetic alone.
pub fn brute_square(n_max: usize) -> Vec<u64> {
    fn go(path: &mut Vec<(i32, i32)>, left: usize, depth: usize, out: &mut [u64]) {
        out[depth] += 1;
        if left == 0 {
            return;
        }
        let (x, y) = *path.last().unwrap();
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let p = (x + dx, y + dy);
            if path.contains(&p) {
                continue;
            }
            path.push(p);
            go(path, left - 1, depth + 1, out);
            path.pop();
        }
    }
    let mut out = vec![0; n_max + 1];
    go(&mut vec![(0, 0)], n_max, 0, &mut out);
    out
}

/// Vertices within `radius` of the root and the undirected edges among them,
/// with vertices numbered in discovery order.
pub fn induced_ball(g: &RootedGraph, radius: usize) -> (Vec<VertexId>, Vec<(usize, usize)>) {
    let mut index = BTreeMap::new();
    let mut ids = vec![g.root()];
    index.insert(g.root(), 0usize);
    let mut frontier = vec![g.root()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for v in &frontier {
            for e in g.neighbors(v).unwrap() {
                if !index.contains_key(&e.to) {
                    index.insert(e.to.clone(), ids.len());
                    ids.push(e.to.clone());
                    next.push(e.to);
                }
            }
        }
        frontier = next;
    }
    let mut edges = Vec::new();
    for (i, v) in ids.iter().enumerate() {
        for e in g.neighbors(v).unwrap() {
            if let Some(&j) = index.get(&e.to) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    (ids, edges)
}
