//! Lazily defined infinite graphs.
//!
//! A graph is never materialized. It is a root plus a pure neighbor rule over
//! canonical [`VertexId`]s; enumeration only ever touches a finite ball.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

mod checks;
mod families;
mod fisher;
mod spec;

pub use checks::{girth_up_to, validate_height, HeightReport, HeightViolation};
pub use families::{make_family, quotient_cylinder, zoo};
pub use fisher::{fisher_semicubic, fisher_transform, Coloring, HexagonalParity};
pub use spec::GraphSpec;

/// Canonical identifier of a vertex.
///
/// The key is a short integer word whose meaning depends on the family:
/// lattice coordinates, a reduced group word, a Fisher corner appended to a
/// base id, and so on. Families only ever emit canonical keys, so equality
/// of ids is equality of vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexId(Vec<i32>);

impl VertexId {
    pub fn new(key: Vec<i32>) -> Self {
        VertexId(key)
    }

    pub fn from_slice(key: &[i32]) -> Self {
        VertexId(key.to_vec())
    }

    pub fn key(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a trailing tag, as used by the Fisher decorations.
    pub(crate) fn with_tag(&self, tag: i32) -> Self {
        let mut key = Vec::with_capacity(self.0.len() + 1);
        key.extend_from_slice(&self.0);
        key.push(tag);
        VertexId(key)
    }

    /// Splits off the trailing tag.
    pub(crate) fn split_tag(&self) -> Option<(VertexId, i32)> {
        let (&tag, base) = self.0.split_last()?;
        Some((VertexId(base.to_vec()), tag))
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl From<&[i32]> for VertexId {
    fn from(key: &[i32]) -> Self {
        VertexId::from_slice(key)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Undirected,
    /// An edge that may only be traversed away from the listing vertex.
    OutOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub to: VertexId,
    pub multiplicity: u32,
    pub direction: Direction,
}

impl Edge {
    pub(crate) fn simple(to: VertexId) -> Self {
        Edge {
            to,
            multiplicity: 1,
            direction: Direction::Undirected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitiveClass {
    Transitive,
    QuasiTransitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeightRigor {
    TransitiveCertified,
    Heuristic,
}

/// A pure neighbor rule. Implementations must be deterministic and list
/// neighbors in a fixed order for a given vertex.
pub trait NeighborRule: Send + Sync {
    fn root(&self) -> VertexId;

    /// Normalizes a raw key into the canonical id of the vertex it denotes.
    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId>;

    /// Appends the neighbors of a canonical vertex to `out`.
    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()>;
}

/// Integer height on the vertices, zero at the root.
#[derive(Clone)]
pub struct HeightFunction {
    eval: Arc<dyn Fn(&VertexId) -> i64 + Send + Sync>,
    /// Largest height change along an edge.
    pub d: u32,
    pub rigor: HeightRigor,
}

impl HeightFunction {
    pub fn new(
        eval: impl Fn(&VertexId) -> i64 + Send + Sync + 'static,
        d: u32,
        rigor: HeightRigor,
    ) -> Self {
        HeightFunction {
            eval: Arc::new(eval),
            d,
            rigor,
        }
    }

    pub fn eval(&self, v: &VertexId) -> i64 {
        (self.eval)(v)
    }
}

impl fmt::Debug for HeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeightFunction")
            .field("d", &self.d)
            .field("rigor", &self.rigor)
            .finish_non_exhaustive()
    }
}

/// An infinite rooted graph: a neighbor rule plus declared metadata.
///
/// Cheap to clone and safe to share between threads.
#[derive(Clone)]
pub struct RootedGraph {
    pub(crate) rule: Arc<dyn NeighborRule>,
    pub spec: GraphSpec,
    /// Largest total edge multiplicity at a vertex.
    pub degree: u32,
    pub simple: bool,
    pub directed: bool,
    pub transitive_class: TransitiveClass,
    pub girth: Option<u32>,
    pub height: Option<HeightFunction>,
}

impl fmt::Debug for RootedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootedGraph")
            .field("spec", &self.spec)
            .field("degree", &self.degree)
            .field("simple", &self.simple)
            .field("directed", &self.directed)
            .field("transitive_class", &self.transitive_class)
            .field("girth", &self.girth)
            .field("height", &self.height)
            .finish_non_exhaustive()
    }
}

impl RootedGraph {
    pub fn root(&self) -> VertexId {
        self.rule.root()
    }

    pub fn neighbors(&self, v: &VertexId) -> Result<Vec<Edge>> {
        let mut out = Vec::new();
        self.rule.neighbors_into(v, &mut out)?;
        Ok(out)
    }

    pub fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        self.rule.neighbors_into(v, out)
    }

    pub fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        self.rule.canonicalize(raw)
    }

    /// Canonical JSON form of the graph spec, used as the cache key.
    pub fn key(&self) -> String {
        self.spec.canonical_json()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive_class == TransitiveClass::Transitive
    }

    pub fn height_of(&self, v: &VertexId) -> Result<i64> {
        self.height
            .as_ref()
            .map(|h| h.eval(v))
            .ok_or(Error::MissingHeight)
    }

    /// Total multiplicity at `v`.
    pub fn degree_at(&self, v: &VertexId) -> Result<u32> {
        Ok(self.neighbors(v)?.iter().map(|e| e.multiplicity).sum())
    }
}

pub(crate) fn malformed(family: &'static str, v: &VertexId) -> Error {
    Error::MalformedVertex {
        family,
        id: format!("{v}"),
    }
}
