use alloc::vec;
use alloc::vec::Vec;

use super::{RootedGraph, VertexId};
use crate::walk::Ball;
use crate::{Error, Result};

/// Length of the shortest cycle through the root, if it is at most `limit`.
///
/// Runs a breadth-first search labelled by first step: an edge joining two
/// different branches closes a cycle through the root.
pub fn girth_up_to(g: &RootedGraph, limit: u32) -> Result<Option<u32>> {
    if !g.simple || g.directed {
        return Err(Error::NotSimple);
    }
    if limit < 3 {
        return Err(Error::InvalidArgument(
            "girth limit must be at least 3".into(),
        ));
    }
    let ball = Ball::build(g, (limit / 2 + 1) as usize)?;
    let mut branch = vec![u32::MAX; ball.len()];
    for v in 0..ball.len() as u32 {
        let b = branch[v as usize];
        for (t, _) in ball.edges(v) {
            if ball.dist(t) == ball.dist(v) + 1 && branch[t as usize] == u32::MAX {
                branch[t as usize] = if v == 0 { t } else { b };
            }
        }
    }
    let mut best: Option<u32> = None;
    for v in 1..ball.len() as u32 {
        for (t, _) in ball.edges(v) {
            if t == 0 || branch[t as usize] == branch[v as usize] {
                continue;
            }
            let len = ball.dist(v) + ball.dist(t) + 1;
            if len <= limit && best.is_none_or(|b| len < b) {
                best = Some(len);
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeightViolation {
    RootNotZero(i64),
    NoLowerNeighbor(VertexId),
    NoHigherNeighbor(VertexId),
    StepTooLarge {
        from: VertexId,
        to: VertexId,
        step: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightReport {
    pub violations: Vec<HeightViolation>,
    /// Largest height change seen along an edge.
    pub observed_d: u64,
    pub vertices_checked: usize,
}

impl HeightReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the height function on every vertex within `radius` of the root:
/// zero at the root, a strictly lower and a strictly higher neighbor at each
/// vertex, and no edge changing the height by more than the declared `d`.
pub fn validate_height(g: &RootedGraph, radius: usize) -> Result<HeightReport> {
    let h = g.height.as_ref().ok_or(Error::MissingHeight)?;
    if radius == 0 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    let ball = Ball::build(g, radius + 1)?;
    let heights = ball.heights(h);
    let mut violations = Vec::new();
    if heights[0] != 0 {
        violations.push(HeightViolation::RootNotZero(heights[0]));
    }
    let mut observed_d = 0u64;
    let mut checked = 0;
    for v in 0..ball.len() as u32 {
        if ball.dist(v) as usize > radius {
            continue;
        }
        checked += 1;
        let hv = heights[v as usize];
        let (mut lower, mut higher) = (false, false);
        for (t, _) in ball.edges(v) {
            let ht = heights[t as usize];
            lower |= ht < hv;
            higher |= ht > hv;
            let step = hv.abs_diff(ht);
            observed_d = observed_d.max(step);
            if step > h.d as u64 {
                violations.push(HeightViolation::StepTooLarge {
                    from: ball.id(v).clone(),
                    to: ball.id(t).clone(),
                    step,
                });
            }
        }
        if !lower {
            violations.push(HeightViolation::NoLowerNeighbor(ball.id(v).clone()));
        }
        if !higher {
            violations.push(HeightViolation::NoHigherNeighbor(ball.id(v).clone()));
        }
    }
    Ok(HeightReport {
        violations,
        observed_d,
        vertices_checked: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, GraphSpec};

    #[test]
    fn girths() {
        let z2 = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        assert_eq!(girth_up_to(&z2, 8).unwrap(), Some(4));
        let tree = make_family(&GraphSpec::Tree { degree: 3 }).unwrap();
        assert_eq!(girth_up_to(&tree, 20).unwrap(), None);
        let fp = make_family(&GraphSpec::FreeProduct {
            degree: 3,
            girth: 5,
        })
        .unwrap();
        assert_eq!(girth_up_to(&fp, 10).unwrap(), Some(5));
        assert_eq!(girth_up_to(&fp, 4).unwrap(), None);
        let hex = make_family(&GraphSpec::Hexagonal).unwrap();
        assert_eq!(girth_up_to(&hex, 12).unwrap(), Some(6));
        let tri = make_family(&GraphSpec::Triangular).unwrap();
        assert_eq!(girth_up_to(&tri, 3).unwrap(), Some(3));
    }

    #[test]
    fn girth_rejects_multigraphs() {
        let b = make_family(&GraphSpec::Bridge { degree: 4 }).unwrap();
        assert_eq!(girth_up_to(&b, 6).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn builtin_heights_are_valid() {
        for spec in [
            GraphSpec::Hypercubic { dim: 2 },
            GraphSpec::Hypercubic { dim: 3 },
            GraphSpec::Ladder,
            GraphSpec::Hexagonal,
            GraphSpec::SquareOctagon,
        ] {
            let g = make_family(&spec).unwrap();
            let r = validate_height(&g, 6).unwrap();
            assert!(r.is_valid(), "{spec:?}: {:?}", r.violations);
            assert!(r.observed_d <= g.height.as_ref().unwrap().d as u64);
        }
        let z2 = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        assert_eq!(validate_height(&z2, 6).unwrap().observed_d, 1);
        let hex = make_family(&GraphSpec::Hexagonal).unwrap();
        assert_eq!(validate_height(&hex, 6).unwrap().observed_d, 1);
    }

    #[test]
    fn missing_height() {
        let tree = make_family(&GraphSpec::Tree { degree: 3 }).unwrap();
        assert_eq!(validate_height(&tree, 3).unwrap_err(), Error::MissingHeight);
    }
}
