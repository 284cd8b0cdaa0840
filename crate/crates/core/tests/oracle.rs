mod common;

use common::*;
use num_bigint::BigUint;
use sawlab_core::walk::{count_bridges, count_extendable, count_saws, count_saws_to};
use sawlab_core::{make_family, quotient_cylinder, EnumConfig, GraphSpec, RootedGraph};

fn specs() -> Vec<GraphSpec> {
    vec![
        GraphSpec::Hypercubic { dim: 2 },
        GraphSpec::Hypercubic { dim: 3 },
        GraphSpec::Ladder,
        GraphSpec::Hexagonal,
        GraphSpec::Triangular,
        GraphSpec::SquareOctagon,
        GraphSpec::Tree { degree: 4 },
        GraphSpec::Bridge { degree: 3 },
        GraphSpec::Bridge { degree: 5 },
        GraphSpec::FreeProduct {
            degree: 3,
            girth: 3,
        },
        GraphSpec::FreeProduct {
            degree: 4,
            girth: 5,
        },
        GraphSpec::Cylinder { m: 2 },
        GraphSpec::Cylinder { m: 3 },
        GraphSpec::Fisher {
            base: Box::new(GraphSpec::Hexagonal),
        },
        GraphSpec::Semicubic {
            base: Box::new(GraphSpec::Hexagonal),
            coloring: "hexagonal-parity".into(),
        },
    ]
}

fn graph(spec: &GraphSpec) -> RootedGraph {
    make_family(spec).unwrap()
}

#[test]
fn counts_match_naive_walks() {
    for spec in specs() {
        let g = graph(&spec);
        let n = if matches!(
            spec,
            GraphSpec::Hypercubic { dim: 3 } | GraphSpec::Triangular
        ) {
            6
        } else {
            8
        };
        let fast = count_saws(&g, n, &EnumConfig::default()).unwrap();
        assert_eq!(fast.values, naive_counts(&g, n), "{spec:?}");
    }
}

#[test]
fn counts_match_naive_past_the_memo_depth() {
    // long enough that the subtree memo and the prefix split are both active
    for spec in [
        GraphSpec::Ladder,
        GraphSpec::Bridge { degree: 3 },
        GraphSpec::Cylinder { m: 3 },
    ] {
        let g = graph(&spec);
        let fast = count_saws(&g, 18, &EnumConfig::default()).unwrap();
        assert_eq!(fast.values, naive_counts(&g, 18), "{spec:?}");
    }
}

#[test]
fn square_lattice_against_coordinates() {
    let g = graph(&GraphSpec::Hypercubic { dim: 2 });
    let fast = count_saws(&g, 13, &EnumConfig::default()).unwrap();
    let brute: Vec<BigUint> = brute_square(13).into_iter().map(BigUint::from).collect();
    assert_eq!(fast.values, brute);
}

#[test]
fn known_series() {
    let cfg = EnumConfig::default();
    let check = |spec: GraphSpec, expect: &[u64]| {
        let g = graph(&spec);
        let s = count_saws(&g, expect.len() - 1, &cfg).unwrap();
        let want: Vec<BigUint> = expect.iter().map(|&v| BigUint::from(v)).collect();
        assert_eq!(s.values, want, "{spec:?}");
    };
    check(
        GraphSpec::Hypercubic { dim: 2 },
        &[
            1, 4, 12, 36, 100, 284, 780, 2172, 5916, 16268, 44100, 120292, 324932, 881500, 2374444,
            6416596, 17245332,
        ],
    );
    check(
        GraphSpec::Hypercubic { dim: 3 },
        &[1, 6, 30, 150, 726, 3534, 16926, 81390, 387966, 1853886],
    );
    check(
        GraphSpec::Hexagonal,
        &[
            1, 3, 6, 12, 24, 48, 90, 174, 336, 648, 1218, 2328, 4416, 8388, 15780,
        ],
    );
    check(
        GraphSpec::Triangular,
        &[1, 6, 30, 138, 618, 2730, 11946, 51882, 224130],
    );
}

#[test]
fn bridges_match_definition() {
    for spec in [
        GraphSpec::Hypercubic { dim: 2 },
        GraphSpec::Hypercubic { dim: 3 },
        GraphSpec::Ladder,
        GraphSpec::Hexagonal,
        GraphSpec::SquareOctagon,
    ] {
        let g = graph(&spec);
        let n = if spec == (GraphSpec::Hypercubic { dim: 3 }) {
            6
        } else {
            8
        };
        let fast = count_bridges(&g, n, &EnumConfig::default()).unwrap();
        assert_eq!(fast.values, naive_bridges(&g, n), "{spec:?}");
    }
}

#[test]
fn endpoints_match_naive() {
    for spec in [
        GraphSpec::Hypercubic { dim: 2 },
        GraphSpec::Bridge { degree: 4 },
        GraphSpec::Hexagonal,
    ] {
        let g = graph(&spec);
        for n in 0..=7 {
            let fast = count_saws_to(&g, n, &EnumConfig::default()).unwrap();
            assert_eq!(fast, naive_endpoints(&g, n), "{spec:?} n={n}");
        }
    }
}

#[test]
fn extendable_counts_match_naive() {
    for spec in [
        GraphSpec::Hypercubic { dim: 2 },
        GraphSpec::Ladder,
        GraphSpec::Hexagonal,
    ] {
        let g = graph(&spec);
        for (n, m) in [(3, 0), (3, 2), (4, 4), (5, 3)] {
            let long = naive_walks(&g, n + m);
            let mut prefixes = std::collections::BTreeSet::new();
            for w in long {
                prefixes.insert(w.path[..=n].to_vec());
            }
            let fast = count_extendable(&g, n, m, &EnumConfig::default()).unwrap();
            assert_eq!(fast, BigUint::from(prefixes.len()), "{spec:?} n={n} m={m}");
        }
    }
}

#[test]
fn extendable_counts_are_non_increasing_in_lookahead() {
    let g = graph(&GraphSpec::Hypercubic { dim: 2 });
    let cfg = EnumConfig::default();
    let mut prev = count_extendable(&g, 6, 0, &cfg).unwrap();
    for m in 1..8 {
        let next = count_extendable(&g, 6, m, &cfg).unwrap();
        assert!(next <= prev);
        prev = next;
    }
}

#[test]
fn results_do_not_depend_on_workers() {
    let cases = [
        (GraphSpec::Hypercubic { dim: 2 }, 13),
        (GraphSpec::Ladder, 30),
        (GraphSpec::Hexagonal, 20),
        (GraphSpec::Bridge { degree: 3 }, 24),
    ];
    for (spec, n) in cases {
        let g = graph(&spec);
        let base = count_saws(&g, n, &EnumConfig::default().with_workers(1)).unwrap();
        for w in [2, 3, 0] {
            let other = count_saws(&g, n, &EnumConfig::default().with_workers(w)).unwrap();
            assert_eq!(base, other, "{spec:?} workers={w}");
        }
        if g.height.is_some() {
            let b1 = count_bridges(&g, n, &EnumConfig::default().with_workers(1)).unwrap();
            let b0 = count_bridges(&g, n, &EnumConfig::default().with_workers(0)).unwrap();
            assert_eq!(b1, b0);
        }
    }
}

#[test]
fn prefix_depth_does_not_change_counts() {
    let g = graph(&GraphSpec::Hexagonal);
    let base = count_saws(&g, 18, &EnumConfig::default()).unwrap();
    for d in [0, 1, 2, 7, 16, 30] {
        let cfg = EnumConfig {
            prefix_depth: d,
            ..EnumConfig::default()
        };
        assert_eq!(count_saws(&g, 18, &cfg).unwrap(), base, "prefix depth {d}");
    }
}

#[test]
fn cylinder_balls_match_the_plane() {
    // below half the circumference the quotient map is injective on balls
    let plane = graph(&GraphSpec::Hypercubic { dim: 2 });
    for m in 5..9u32 {
        let cyl = quotient_cylinder(m).unwrap();
        let r = ((m - 1) / 2) as usize;
        let a = count_saws(&cyl, r, &EnumConfig::default()).unwrap();
        let b = count_saws(&plane, r, &EnumConfig::default()).unwrap();
        assert_eq!(a.values, b.values, "m={m}");
    }
    let m3 = quotient_cylinder(3).unwrap();
    for v in [[0, 0], [1, 5], [2, -3]] {
        let total: u32 = m3
            .neighbors(&sawlab_core::VertexId::from_slice(&v))
            .unwrap()
            .iter()
            .map(|e| e.multiplicity)
            .sum();
        assert_eq!(total, 4);
    }
}

#[test]
fn fisher_of_tree_is_the_girth_three_free_product() {
    use petgraph::algo::is_isomorphic;
    use petgraph::graph::UnGraph;
    let fisher = sawlab_core::fisher_transform(&graph(&GraphSpec::Tree { degree: 3 })).unwrap();
    let fp = graph(&GraphSpec::FreeProduct {
        degree: 3,
        girth: 3,
    });
    for r in 1..=4 {
        let build = |g: &RootedGraph| {
            let (ids, edges) = induced_ball(g, r);
            let mut pg = UnGraph::<(), ()>::new_undirected();
            let nodes: Vec<_> = ids.iter().map(|_| pg.add_node(())).collect();
            for (a, b) in edges {
                pg.add_edge(nodes[a], nodes[b], ());
            }
            pg
        };
        assert!(is_isomorphic(&build(&fisher), &build(&fp)), "radius {r}");
    }
    let a = count_saws(&fisher, 14, &EnumConfig::default()).unwrap();
    let b = count_saws(&fp, 14, &EnumConfig::default()).unwrap();
    assert_eq!(a.values, b.values);
}

#[test]
fn sampler_displacement_matches_bfs() {
    let g = graph(&GraphSpec::Hexagonal);
    for s in sawlab_core::sampler::sample_uniform(&g, 9, 40, 11, &EnumConfig::default()).unwrap() {
        let d = naive_distance(&g, s.vertices.last().unwrap(), 9).unwrap();
        assert_eq!(s.displacement as usize, d);
    }
}
