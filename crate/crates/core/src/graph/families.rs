//! The built-in zoo of neighbor rules.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::fisher::{fisher_semicubic, fisher_transform, HexagonalParity};
use super::{
    malformed, Direction, Edge, GraphSpec, HeightFunction, HeightRigor, NeighborRule, RootedGraph,
    TransitiveClass, VertexId,
};
use crate::{Error, Result};

const MAX_DIM: u32 = 16;
const MAX_WORD_DEGREE: u32 = 64;
const MAX_GIRTH: u32 = 1024;
const MAX_BRIDGE_DEGREE: u32 = 1 << 16;

fn check_range(
    family: &'static str,
    param: &'static str,
    value: u32,
    lo: u32,
    hi: u32,
) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::ParamOutOfRange {
            family,
            param,
            value: value as i64,
        });
    }
    Ok(())
}

/// Builds a graph of the zoo from its spec.
pub fn make_family(spec: &GraphSpec) -> Result<RootedGraph> {
    match spec {
        GraphSpec::Hypercubic { dim } => hypercubic(*dim),
        GraphSpec::Ladder => Ok(ladder()),
        GraphSpec::Hexagonal => Ok(hexagonal()),
        GraphSpec::Triangular => Ok(triangular()),
        GraphSpec::SquareOctagon => Ok(square_octagon()),
        GraphSpec::Tree { degree } => tree(*degree),
        GraphSpec::Bridge { degree } => bridge(*degree),
        GraphSpec::FreeProduct { degree, girth } => free_product(*degree, *girth),
        GraphSpec::Cylinder { m } => quotient_cylinder(*m),
        GraphSpec::Fisher { base } => fisher_transform(&make_family(base)?),
        GraphSpec::Semicubic { base, coloring } => {
            if **base != GraphSpec::Hexagonal || coloring != HexagonalParity::NAME {
                return Err(Error::UnsupportedFamily(spec.canonical_json()));
            }
            let mut g = fisher_semicubic(&hexagonal(), Arc::new(HexagonalParity))?;
            g.girth = Some(3);
            Ok(g)
        }
    }
}

fn coords<const N: usize>(family: &'static str, v: &VertexId) -> Result<[i32; N]> {
    v.key().try_into().map_err(|_| malformed(family, v))
}

// ---------------------------------------------------------------- hypercubic

struct Hypercubic {
    dim: usize,
}

impl NeighborRule for Hypercubic {
    fn root(&self) -> VertexId {
        VertexId::new(vec![0; self.dim])
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        if raw.len() != self.dim {
            return Err(malformed("hypercubic", raw));
        }
        Ok(raw.clone())
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        if v.len() != self.dim {
            return Err(malformed("hypercubic", v));
        }
        for axis in 0..self.dim {
            for step in [-1, 1] {
                let mut key = v.key().to_vec();
                key[axis] += step;
                out.push(Edge::simple(VertexId::new(key)));
            }
        }
        Ok(())
    }
}

fn hypercubic(dim: u32) -> Result<RootedGraph> {
    check_range("hypercubic", "dim", dim, 1, MAX_DIM)?;
    Ok(RootedGraph {
        rule: Arc::new(Hypercubic { dim: dim as usize }),
        spec: GraphSpec::Hypercubic { dim },
        degree: 2 * dim,
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: (dim >= 2).then_some(4),
        height: Some(HeightFunction::new(
            |v| v.key()[0] as i64,
            1,
            HeightRigor::TransitiveCertified,
        )),
    })
}

// -------------------------------------------------------------------- ladder

struct Ladder;

impl NeighborRule for Ladder {
    fn root(&self) -> VertexId {
        VertexId::new(vec![0, 0])
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        let [_, s] = coords::<2>("ladder", raw)?;
        if !(0..=1).contains(&s) {
            return Err(malformed("ladder", raw));
        }
        Ok(raw.clone())
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let [x, s] = coords::<2>("ladder", v)?;
        if !(0..=1).contains(&s) {
            return Err(malformed("ladder", v));
        }
        out.push(Edge::simple(VertexId::new(vec![x - 1, s])));
        out.push(Edge::simple(VertexId::new(vec![x + 1, s])));
        out.push(Edge::simple(VertexId::new(vec![x, 1 - s])));
        Ok(())
    }
}

fn ladder() -> RootedGraph {
    RootedGraph {
        rule: Arc::new(Ladder),
        spec: GraphSpec::Ladder,
        degree: 3,
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: Some(4),
        height: Some(HeightFunction::new(
            |v| v.key()[0] as i64,
            1,
            HeightRigor::TransitiveCertified,
        )),
    }
}

// ------------------------------------------------------------ planar lattices

/// Brick-wall embedding of the hexagonal lattice: horizontal edges everywhere,
/// a vertical edge up from (x, y) when x + y is even.
struct Hexagonal;

impl NeighborRule for Hexagonal {
    fn root(&self) -> VertexId {
        VertexId::new(vec![0, 0])
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        coords::<2>("hexagonal", raw)?;
        Ok(raw.clone())
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let [x, y] = coords::<2>("hexagonal", v)?;
        out.push(Edge::simple(VertexId::new(vec![x - 1, y])));
        out.push(Edge::simple(VertexId::new(vec![x + 1, y])));
        let dy = if (x + y).rem_euclid(2) == 0 { 1 } else { -1 };
        out.push(Edge::simple(VertexId::new(vec![x, y + dy])));
        Ok(())
    }
}

pub(crate) fn hexagonal() -> RootedGraph {
    RootedGraph {
        rule: Arc::new(Hexagonal),
        spec: GraphSpec::Hexagonal,
        degree: 3,
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: Some(6),
        height: Some(HeightFunction::new(
            |v| v.key()[0] as i64,
            1,
            HeightRigor::Heuristic,
        )),
    }
}

/// Triangular lattice in axial coordinates.
struct Triangular;

impl NeighborRule for Triangular {
    fn root(&self) -> VertexId {
        VertexId::new(vec![0, 0])
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        coords::<2>("triangular", raw)?;
        Ok(raw.clone())
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let [x, y] = coords::<2>("triangular", v)?;
        for (dx, dy) in [(-1, 0), (1, 0), (0, -1), (0, 1), (1, -1), (-1, 1)] {
            out.push(Edge::simple(VertexId::new(vec![x + dx, y + dy])));
        }
        Ok(())
    }
}

fn triangular() -> RootedGraph {
    RootedGraph {
        rule: Arc::new(Triangular),
        spec: GraphSpec::Triangular,
        degree: 6,
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: Some(3),
        height: None,
    }
}

/// The (4,8²) lattice: every site of Z² becomes a square with corners
/// E=0, N=1, W=2, S=3, and facing corners of adjacent squares are joined.
struct SquareOctagon;

const SO_EAST: i32 = 0;
const SO_NORTH: i32 = 1;
const SO_WEST: i32 = 2;
const SO_SOUTH: i32 = 3;

fn so_height(v: &VertexId) -> i64 {
    let k = v.key();
    let offset = match k[2] {
        SO_WEST => 0,
        SO_EAST => 2,
        _ => 1,
    };
    3 * k[0] as i64 + offset
}

impl NeighborRule for SquareOctagon {
    fn root(&self) -> VertexId {
        VertexId::new(vec![0, 0, SO_WEST])
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        let [_, _, c] = coords::<3>("square-octagon", raw)?;
        if !(0..4).contains(&c) {
            return Err(malformed("square-octagon", raw));
        }
        Ok(raw.clone())
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let [i, j, c] = coords::<3>("square-octagon", v)?;
        if !(0..4).contains(&c) {
            return Err(malformed("square-octagon", v));
        }
        out.push(Edge::simple(VertexId::new(vec![i, j, (c + 3) % 4])));
        out.push(Edge::simple(VertexId::new(vec![i, j, (c + 1) % 4])));
        let across = match c {
            SO_EAST => [i + 1, j, SO_WEST],
            SO_NORTH => [i, j + 1, SO_SOUTH],
            SO_WEST => [i - 1, j, SO_EAST],
            _ => [i, j - 1, SO_NORTH],
        };
        out.push(Edge::simple(VertexId::new(across.to_vec())));
        Ok(())
    }
}

fn square_octagon() -> RootedGraph {
    RootedGraph {
        rule: Arc::new(SquareOctagon),
        spec: GraphSpec::SquareOctagon,
        degree: 3,
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: Some(4),
        height: Some(HeightFunction::new(so_height, 1, HeightRigor::Heuristic)),
    }
}

// --------------------------------------------------------------- word graphs

/// The Δ-regular tree as the Cayley graph of a free product of Δ copies of
/// Z/2: ids are words with no letter repeated twice in a row.
struct Tree {
    degree: i32,
}

impl NeighborRule for Tree {
    fn root(&self) -> VertexId {
        VertexId::default()
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        let mut word: Vec<i32> = Vec::with_capacity(raw.len());
        for &a in raw.key() {
            if !(0..self.degree).contains(&a) {
                return Err(malformed("tree", raw));
            }
            if word.last() == Some(&a) {
                word.pop();
            } else {
                word.push(a);
            }
        }
        Ok(VertexId::new(word))
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let word = v.key();
        if word.iter().any(|a| !(0..self.degree).contains(a))
            || word.windows(2).any(|w| w[0] == w[1])
        {
            return Err(malformed("tree", v));
        }
        for a in 0..self.degree {
            let next = if word.last() == Some(&a) {
                word[..word.len() - 1].to_vec()
            } else {
                let mut w = word.to_vec();
                w.push(a);
                w
            };
            out.push(Edge::simple(VertexId::new(next)));
        }
        Ok(())
    }
}

fn tree(degree: u32) -> Result<RootedGraph> {
    check_range("tree", "degree", degree, 2, MAX_WORD_DEGREE)?;
    Ok(RootedGraph {
        rule: Arc::new(Tree {
            degree: degree as i32,
        }),
        spec: GraphSpec::Tree { degree },
        degree,
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: None,
        height: None,
    })
}

/// K2 * ... * K2 * Z_g with Δ-2 copies of K2.
///
/// A normal-form word alternates factors. Letters `0..Δ-2` are the K2
/// involutions; letter `Δ-2 + (k-1)` is the cycle syllable b^k, 1 ≤ k < g.
struct FreeProduct {
    involutions: i32,
    girth: i32,
}

impl FreeProduct {
    fn syllable(&self, k: i32) -> i32 {
        self.involutions + k - 1
    }

    /// Cycle exponent of a letter, if it is a cycle syllable.
    fn power(&self, letter: i32) -> Option<i32> {
        (letter >= self.involutions).then(|| letter - self.involutions + 1)
    }

    fn valid_letter(&self, a: i32) -> bool {
        (0..self.involutions + self.girth - 1).contains(&a)
    }

    /// Right-multiplies a normal-form word by one letter, keeping normal form.
    fn push(&self, word: &mut Vec<i32>, letter: i32) {
        match (word.last().copied(), self.power(letter)) {
            (Some(last), None) if last == letter => {
                word.pop();
            }
            (Some(last), Some(k)) if self.power(last).is_some() => {
                let total = (self.power(last).unwrap_or(0) + k).rem_euclid(self.girth);
                word.pop();
                if total != 0 {
                    word.push(self.syllable(total));
                }
            }
            _ => word.push(letter),
        }
    }

    fn is_normal(&self, word: &[i32]) -> bool {
        word.iter().all(|&a| self.valid_letter(a))
            && word.windows(2).all(|w| {
                w[0] != w[1] && !(self.power(w[0]).is_some() && self.power(w[1]).is_some())
            })
    }
}

impl NeighborRule for FreeProduct {
    fn root(&self) -> VertexId {
        VertexId::default()
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        let mut word = Vec::with_capacity(raw.len());
        for &a in raw.key() {
            if !self.valid_letter(a) {
                return Err(malformed("free-product", raw));
            }
            self.push(&mut word, a);
        }
        Ok(VertexId::new(word))
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        if !self.is_normal(v.key()) {
            return Err(malformed("free-product", v));
        }
        let generators =
            (0..self.involutions).chain([self.syllable(1), self.syllable(self.girth - 1)]);
        for g in generators {
            let mut w = v.key().to_vec();
            self.push(&mut w, g);
            out.push(Edge::simple(VertexId::new(w)));
        }
        Ok(())
    }
}

fn free_product(degree: u32, girth: u32) -> Result<RootedGraph> {
    check_range("free-product", "degree", degree, 3, MAX_WORD_DEGREE)?;
    check_range("free-product", "girth", girth, 3, MAX_GIRTH)?;
    Ok(RootedGraph {
        rule: Arc::new(FreeProduct {
            involutions: degree as i32 - 2,
            girth: girth as i32,
        }),
        spec: GraphSpec::FreeProduct { degree, girth },
        degree,
        simple: true,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: Some(girth),
        height: None,
    })
}

// -------------------------------------------------------------------- bridge

/// Z with the edge {2k, 2k+1} carrying Δ-1 parallel copies.
struct Bridge {
    heavy: u32,
}

impl Bridge {
    fn multiplicity(&self, left: i32) -> u32 {
        if left.rem_euclid(2) == 0 {
            self.heavy
        } else {
            1
        }
    }
}

impl NeighborRule for Bridge {
    fn root(&self) -> VertexId {
        VertexId::new(vec![0])
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        coords::<1>("bridge", raw)?;
        Ok(raw.clone())
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let [x] = coords::<1>("bridge", v)?;
        out.push(Edge {
            to: VertexId::new(vec![x - 1]),
            multiplicity: self.multiplicity(x - 1),
            direction: Direction::Undirected,
        });
        out.push(Edge {
            to: VertexId::new(vec![x + 1]),
            multiplicity: self.multiplicity(x),
            direction: Direction::Undirected,
        });
        Ok(())
    }
}

fn bridge(degree: u32) -> Result<RootedGraph> {
    check_range("bridge", "degree", degree, 2, MAX_BRIDGE_DEGREE)?;
    Ok(RootedGraph {
        rule: Arc::new(Bridge { heavy: degree - 1 }),
        spec: GraphSpec::Bridge { degree },
        degree,
        simple: degree == 2,
        directed: false,
        transitive_class: TransitiveClass::Transitive,
        girth: None,
        height: None,
    })
}

// ------------------------------------------------------------------ cylinder

/// Directed quotient of Z² by the translation (x, y) -> (x + m, y).
struct Cylinder {
    m: i32,
}

impl NeighborRule for Cylinder {
    fn root(&self) -> VertexId {
        VertexId::new(vec![0, 0])
    }

    fn canonicalize(&self, raw: &VertexId) -> Result<VertexId> {
        let [x, y] = coords::<2>("cylinder", raw)?;
        Ok(VertexId::new(vec![x.rem_euclid(self.m), y]))
    }

    fn neighbors_into(&self, v: &VertexId, out: &mut Vec<Edge>) -> Result<()> {
        let [x, y] = coords::<2>("cylinder", v)?;
        if !(0..self.m).contains(&x) {
            return Err(malformed("cylinder", v));
        }
        let start = out.len();
        // one directed edge per lattice neighbor, merged by residue class
        for (dx, dy) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
            let to = VertexId::new(vec![(x + dx).rem_euclid(self.m), y + dy]);
            match out[start..].iter_mut().find(|e| e.to == to) {
                Some(e) => e.multiplicity += 1,
                None => out.push(Edge {
                    to,
                    multiplicity: 1,
                    direction: Direction::OutOnly,
                }),
            }
        }
        Ok(())
    }
}

/// Z² wrapped around a cylinder of circumference `m`, as a directed multigraph.
pub fn quotient_cylinder(m: u32) -> Result<RootedGraph> {
    check_range("cylinder", "m", m, 2, i32::MAX as u32)?;
    Ok(RootedGraph {
        rule: Arc::new(Cylinder { m: m as i32 }),
        spec: GraphSpec::Cylinder { m },
        degree: 4,
        simple: m > 2,
        directed: true,
        transitive_class: TransitiveClass::Transitive,
        girth: None,
        height: None,
    })
}

/// Names and parameter hints for the zoo, in listing order.
pub fn zoo() -> Vec<(GraphSpec, String)> {
    use alloc::boxed::Box;
    use alloc::string::ToString;
    vec![
        (GraphSpec::Hypercubic { dim: 2 }, "dim >= 1".to_string()),
        (GraphSpec::Ladder, String::new()),
        (GraphSpec::Hexagonal, String::new()),
        (GraphSpec::Triangular, String::new()),
        (GraphSpec::SquareOctagon, String::new()),
        (GraphSpec::Tree { degree: 3 }, "degree >= 2".to_string()),
        (GraphSpec::Bridge { degree: 4 }, "degree >= 2".to_string()),
        (
            GraphSpec::FreeProduct {
                degree: 3,
                girth: 3,
            },
            "degree >= 3, girth >= 3".to_string(),
        ),
        (GraphSpec::Cylinder { m: 3 }, "m >= 2".to_string()),
        (
            GraphSpec::Fisher {
                base: Box::new(GraphSpec::Hexagonal),
            },
            "base: cubic simple graph".to_string(),
        ),
        (
            GraphSpec::Semicubic {
                base: Box::new(GraphSpec::Hexagonal),
                coloring: HexagonalParity::NAME.to_string(),
            },
            "base: hexagonal".to_string(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(g: &RootedGraph, v: &[i32]) -> Vec<(Vec<i32>, u32)> {
        g.neighbors(&VertexId::from_slice(v))
            .unwrap()
            .into_iter()
            .map(|e| (e.to.key().to_vec(), e.multiplicity))
            .collect()
    }

    #[test]
    fn square_lattice_origin() {
        let g = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        let nb = ids(&g, &[0, 0]);
        assert_eq!(nb.len(), 4);
        assert!(nb.iter().all(|(_, m)| *m == 1));
        assert_eq!(g.height_of(&VertexId::from_slice(&[5, -2])).unwrap(), 5);
    }

    #[test]
    fn ladder_metadata() {
        let g = make_family(&GraphSpec::Ladder).unwrap();
        assert_eq!(g.degree, 3);
        assert_eq!(g.girth, Some(4));
    }

    #[test]
    fn bridge_parallel_partner() {
        let g = make_family(&GraphSpec::Bridge { degree: 4 }).unwrap();
        assert!(!g.simple);
        assert_eq!(ids(&g, &[0]), vec![(vec![-1], 1), (vec![1], 3)]);
        assert_eq!(ids(&g, &[1]), vec![(vec![0], 3), (vec![2], 1)]);
        for x in -5..5 {
            assert_eq!(g.degree_at(&VertexId::from_slice(&[x])).unwrap(), 4);
        }
    }

    #[test]
    fn tree_root_children() {
        let g = make_family(&GraphSpec::Tree { degree: 3 }).unwrap();
        let nb = ids(&g, &[]);
        assert_eq!(nb, vec![(vec![0], 1), (vec![1], 1), (vec![2], 1)]);
        assert!(g.neighbors(&VertexId::from_slice(&[1, 1])).is_err());
        assert_eq!(
            g.canonicalize(&VertexId::from_slice(&[0, 1, 1, 2]))
                .unwrap(),
            VertexId::from_slice(&[0, 2])
        );
    }

    #[test]
    fn free_product_normal_form() {
        let g = make_family(&GraphSpec::FreeProduct {
            degree: 3,
            girth: 5,
        })
        .unwrap();
        // letters: 0 = involution, 1..=4 = b^1..b^4
        assert_eq!(
            g.canonicalize(&VertexId::from_slice(&[1, 1, 1, 1, 1]))
                .unwrap(),
            VertexId::default()
        );
        assert_eq!(
            g.canonicalize(&VertexId::from_slice(&[0, 2, 3, 0, 0]))
                .unwrap(),
            VertexId::from_slice(&[0])
        );
        assert_eq!(
            ids(&g, &[0, 4]),
            vec![(vec![0, 4, 0], 1), (vec![0], 1), (vec![0, 3], 1)]
        );
    }

    #[test]
    fn cylinder_out_edges() {
        let g = quotient_cylinder(3).unwrap();
        let nb = ids(&g, &[0, 0]);
        assert_eq!(
            nb,
            vec![
                (vec![2, 0], 1),
                (vec![1, 0], 1),
                (vec![0, -1], 1),
                (vec![0, 1], 1)
            ]
        );
        let g2 = quotient_cylinder(2).unwrap();
        let nb2 = ids(&g2, &[0, 0]);
        assert_eq!(nb2[0], (vec![1, 0], 2));
        for g in [&g, &g2] {
            assert_eq!(g.degree_at(&VertexId::from_slice(&[1, 7])).unwrap(), 4);
        }
        assert!(quotient_cylinder(1).is_err());
    }

    #[test]
    fn out_of_range_params() {
        assert!(make_family(&GraphSpec::Tree { degree: 1 }).is_err());
        assert!(make_family(&GraphSpec::Hypercubic { dim: 0 }).is_err());
        assert!(make_family(&GraphSpec::FreeProduct {
            degree: 3,
            girth: 2
        })
        .is_err());
        assert!(make_family(&GraphSpec::Bridge { degree: 1 }).is_err());
    }

    #[test]
    fn malformed_ids_rejected() {
        let z2 = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        assert!(z2.neighbors(&VertexId::from_slice(&[1])).is_err());
        let l = make_family(&GraphSpec::Ladder).unwrap();
        assert!(l.neighbors(&VertexId::from_slice(&[0, 2])).is_err());
    }
}
