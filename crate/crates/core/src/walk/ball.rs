//! Finite ball around the root, materialized as a compact adjacency array.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use crate::graph::{Edge, HeightFunction, RootedGraph, VertexId};
use crate::Result;

/// The ball of a given radius around the root, breadth-first indexed.
///
/// Vertex 0 is the root. Adjacency is stored for every vertex strictly inside
/// the ball; boundary vertices (at distance `radius`) have empty lists, since
/// a walk of length at most `radius` ends whenever it reaches one.
#[derive(Debug, Clone)]
pub struct Ball {
    ids: Vec<VertexId>,
    index: HashMap<VertexId, u32>,
    dist: Vec<u32>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
    mults: Vec<u32>,
    radius: usize,
    weighted: bool,
    max_out: usize,
}

impl Ball {
    pub fn build(g: &RootedGraph, radius: usize) -> Result<Ball> {
        Self::build_capped(g, radius, u64::MAX).map(|(b, _)| b)
    }

    /// Builds layer by layer, stopping at the last radius whose ball has at
    /// most `max_vertices` vertices. Returns the ball and the radius reached.
    pub fn build_capped(
        g: &RootedGraph,
        radius: usize,
        max_vertices: u64,
    ) -> Result<(Ball, usize)> {
        let root = g.root();
        let mut index: HashMap<VertexId, u32> = HashMap::new();
        index.insert(root.clone(), 0);
        let mut ids = vec![root];
        let mut dist = vec![0u32];
        // adjacency of vertex i, filled when layer dist[i] is expanded
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
        let mut scratch: Vec<Edge> = Vec::new();
        let mut layer_start = 0usize;
        let mut reached = 0usize;
        while reached < radius {
            let layer_end = ids.len();
            let before = ids.len();
            let mut new_adj: Vec<(usize, Vec<(u32, u32)>)> = Vec::new();
            let mut added: Vec<VertexId> = Vec::new();
            let mut trial_index = 0usize;
            for (i, id) in ids.iter().enumerate().take(layer_end).skip(layer_start) {
                scratch.clear();
                g.neighbors_into(id, &mut scratch)?;
                let mut list = Vec::with_capacity(scratch.len());
                for e in scratch.drain(..) {
                    let t = match index.get(&e.to) {
                        Some(&t) => t,
                        None => {
                            let t = (before + trial_index) as u32;
                            trial_index += 1;
                            index.insert(e.to.clone(), t);
                            added.push(e.to);
                            t
                        }
                    };
                    list.push((t, e.multiplicity));
                }
                new_adj.push((i, list));
            }
            if (before + added.len()) as u64 > max_vertices {
                for v in &added {
                    index.remove(v);
                }
                break;
            }
            for (i, list) in new_adj {
                adj[i] = list;
            }
            let next = reached as u32 + 1;
            for v in added {
                ids.push(v);
                dist.push(next);
                adj.push(Vec::new());
            }
            layer_start = layer_end;
            reached += 1;
            if ids.len() == layer_end {
                // finite component: every further layer is empty
                reached = radius;
                break;
            }
        }
        let mut offsets = Vec::with_capacity(ids.len() + 1);
        let mut targets = Vec::new();
        let mut mults = Vec::new();
        let mut weighted = false;
        let mut max_out = 0;
        offsets.push(0u32);
        for list in &adj {
            max_out = max_out.max(list.len());
            for &(t, m) in list {
                weighted |= m > 1;
                targets.push(t);
                mults.push(m);
            }
            offsets.push(targets.len() as u32);
        }
        let ball = Ball {
            ids,
            index,
            dist,
            offsets,
            targets,
            mults,
            radius: reached,
            weighted,
            max_out,
        };
        Ok((ball, reached))
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn id(&self, v: u32) -> &VertexId {
        &self.ids[v as usize]
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn index_of(&self, v: &VertexId) -> Option<u32> {
        self.index.get(v).copied()
    }

    /// Graph distance from the root (along out-edges on directed graphs).
    pub fn dist(&self, v: u32) -> u32 {
        self.dist[v as usize]
    }

    /// True if some edge carries multiplicity above one.
    pub fn weighted(&self) -> bool {
        self.weighted
    }

    /// Largest number of distinct out-neighbors of any interior vertex.
    pub fn max_out(&self) -> usize {
        self.max_out
    }

    #[inline]
    pub(crate) fn span(&self, v: u32) -> (usize, usize) {
        (
            self.offsets[v as usize] as usize,
            self.offsets[v as usize + 1] as usize,
        )
    }

    #[inline]
    pub(crate) fn target(&self, e: usize) -> u32 {
        self.targets[e]
    }

    #[inline]
    pub(crate) fn mult(&self, e: usize) -> u32 {
        self.mults[e]
    }

    /// Out-edges of `v` as (target, multiplicity); empty on the boundary.
    pub fn edges(&self, v: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (lo, hi) = self.span(v);
        (lo..hi).map(move |e| (self.targets[e], self.mults[e]))
    }

    pub fn heights(&self, h: &HeightFunction) -> Vec<i64> {
        self.ids.iter().map(|v| h.eval(v)).collect()
    }
}
