//! Fisher transformation: every (black) cubic vertex becomes a triangle.
//!
//! Corner `i` of the triangle at `v` inherits the edge to the `i`-th neighbor
//! of `v`. Fisher ids are the base id with the corner index appended; in the
//! semi-cubic variant white vertices carry the tag [`WHITE`].

use alloc::boxed::Box;
use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{
    malformed, Direction, Edge, GraphSpec, NeighborRule, RootedGraph, TransitiveClass, VertexId,
};
use crate::{Error, Result};

const WHITE: i32 = 3;

/// A black/white vertex coloring used by [`fisher_semicubic`].
pub trait Coloring: Send + Sync {
    /// Stable name, part of the resulting graph's cache key.
    fn name(&self) -> &str;
    fn is_black(&self, v: &VertexId) -> bool;
}

/// Built-in coloring of the brick-wall hexagonal lattice: black iff x + y is even.
pub struct HexagonalParity;

impl HexagonalParity {
    pub const NAME: &'static str = "hexagonal-parity";
}

impl Coloring for HexagonalParity {
    fn name(&self) -> &str {
        Self::NAME
    }

    fn is_black(&self, v: &VertexId) -> bool {
        v.key().iter().take(2).sum::<i32>().rem_euclid(2) == 0
    }
}

fn base_neighbors(base: &RootedGraph, v: &VertexId) -> Result<Vec<VertexId>> {
    let edges = base.neighbors(v)?;
    let mut out = Vec::with_capacity(edges.len());
    for e in edges {
        if e.multiplicity != 1 || e.direction != Direction::Undirected {
            return Err(Error::NotSimple);
        }
        out.push(e.to);
    }
    Ok(out)
}

/// Index of `v` in the neighbor list of `w`.
fn back_index(base: &RootedGraph, w: &VertexId, v: &VertexId) -> Result<i32> {
    let nb = base_neighbors(base, w)?;
    nb.iter()
        .position(|u| u == v)
        .map(|i| i as i32)
        .ok_or_else(|| malformed("fisher", w))
}

fn require_cubic_simple(g: &RootedGraph) -> Result<()> {
    if g.directed || !g.simple {
        return Err(Error::NotSimple);
    }
    if g.degree != 3 {
        return Err(Error::NotCubic(g.degree));
    }
    Ok(())
}

struct Fisher {
    base: RootedGraph,
}

impl Fisher {
    fn split(&self, v: &VertexId) -> Result<(VertexId, i32)> {
        match v.split_tag() {
            Some((b, c)) if (0..3).contains(&c) => Ok((b, c)),
            _ => Err(malformed("fisher", v)),
        }
    }
}

impl NeighborRule for Fisher {
    fn root(&self) -> VertexId {
        self.base.root().with_tag(0)
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        let (b, c) = self.split(raw)?;
        Ok(self.base.canonicalize(&b)?.with_tag(c))
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let (b, c) = self.split(v)?;
        let nb = base_neighbors(&self.base, &b)?;
        if nb.len() != 3 {
            return Err(Error::NotCubic(nb.len() as u32));
        }
        out.push(Edge::simple(b.with_tag((c + 1) % 3)));
        out.push(Edge::simple(b.with_tag((c + 2) % 3)));
        let w = &nb[c as usize];
        out.push(Edge::simple(w.with_tag(back_index(&self.base, w, &b)?)));
        Ok(())
    }
}

/// Replaces every vertex of a cubic simple graph by a triangle.
pub fn fisher_transform(g: &RootedGraph) -> Result<RootedGraph> {
    require_cubic_simple(g)?;
    Ok(RootedGraph {
        rule: Arc::new(Fisher { base: g.clone() }),
        spec: GraphSpec::Fisher {
            base: Box::new(g.spec.clone()),
        },
        degree: 3,
        simple: true,
        directed: false,
        transitive_class: g.transitive_class,
        girth: Some(3),
        height: None,
    })
}

struct Semicubic {
    base: RootedGraph,
    coloring: Arc<dyn Coloring>,
}

impl Semicubic {
    fn id_of(&self, base_id: &VertexId, corner: i32) -> VertexId {
        if self.coloring.is_black(base_id) {
            base_id.with_tag(corner)
        } else {
            base_id.with_tag(WHITE)
        }
    }

    fn black_neighbors(&self, b: &VertexId) -> Result<Vec<VertexId>> {
        let nb = base_neighbors(&self.base, b)?;
        if nb.len() != 3 {
            return Err(Error::BlackDegree {
                id: format!("{b}"),
                degree: nb.len() as u32,
            });
        }
        Ok(nb)
    }
}

impl NeighborRule for Semicubic {
    fn root(&self) -> VertexId {
        self.id_of(&self.base.root(), 0)
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        let (b, tag) = raw
            .split_tag()
            .ok_or_else(|| malformed("fisher-semicubic", raw))?;
        let b = self.base.canonicalize(&b)?;
        let black = self.coloring.is_black(&b);
        if (black && !(0..3).contains(&tag)) || (!black && tag != WHITE) {
            return Err(malformed("fisher-semicubic", raw));
        }
        Ok(b.with_tag(tag))
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let (b, tag) = v
            .split_tag()
            .ok_or_else(|| malformed("fisher-semicubic", v))?;
        let black = self.coloring.is_black(&b);
        if black && (0..3).contains(&tag) {
            let nb = self.black_neighbors(&b)?;
            out.push(Edge::simple(b.with_tag((tag + 1) % 3)));
            out.push(Edge::simple(b.with_tag((tag + 2) % 3)));
            let w = &nb[tag as usize];
            if self.coloring.is_black(w) {
                return Err(Error::ImproperColoring(format!("{b}")));
            }
            out.push(Edge::simple(w.with_tag(WHITE)));
        } else if !black && tag == WHITE {
            for u in base_neighbors(&self.base, &b)? {
                if !self.coloring.is_black(&u) {
                    out.push(Edge::simple(u.with_tag(WHITE)));
                    continue;
                }
                let nb = self.black_neighbors(&u)?;
                let j = nb
                    .iter()
                    .position(|x| *x == b)
                    .ok_or_else(|| malformed("fisher-semicubic", v))?;
                out.push(Edge::simple(u.with_tag(j as i32)));
            }
        } else {
            return Err(malformed("fisher-semicubic", v));
        }
        Ok(())
    }
}

/// Radius to which a coloring is checked eagerly at construction.
const COLORING_CHECK_RADIUS: usize = 4;

/// Applies the Fisher transformation at the black vertices of a graph.
///
/// Black vertices must be cubic and pairwise non-adjacent; white vertices are
/// left as they are. The coloring is verified on a small ball around the root
/// up front and lazily everywhere else.
pub fn fisher_semicubic(g: &RootedGraph, coloring: Arc<dyn Coloring>) -> Result<RootedGraph> {
    if g.directed || !g.simple {
        return Err(Error::NotSimple);
    }
    let rule = Semicubic {
        base: g.clone(),
        coloring,
    };
    check_coloring(g, rule.coloring.as_ref())?;
    let spec = GraphSpec::Semicubic {
        base: Box::new(g.spec.clone()),
        coloring: rule.coloring.name().to_string(),
    };
    Ok(RootedGraph {
        rule: Arc::new(rule),
        spec,
        degree: g.degree.max(3),
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::QuasiTransitive,
        girth: None,
        height: None,
    })
}

fn check_coloring(g: &RootedGraph, coloring: &dyn Coloring) -> Result<()> {
    let mut seen = hashbrown::HashSet::new();
    let mut frontier = alloc::vec![g.root()];
    seen.insert(g.root());
    for _ in 0..COLORING_CHECK_RADIUS {
        let mut next = Vec::new();
        for v in &frontier {
            let nb = base_neighbors(g, v)?;
            let black = coloring.is_black(v);
            if black && nb.len() != 3 {
                return Err(Error::BlackDegree {
                    id: v.to_string(),
                    degree: nb.len() as u32,
                });
            }
            for w in nb {
                if black && coloring.is_black(&w) {
                    return Err(Error::ImproperColoring(v.to_string()));
                }
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok(())
}

impl core::fmt::Debug for dyn Coloring {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}
