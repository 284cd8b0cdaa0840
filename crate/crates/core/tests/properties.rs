mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use sawlab_core::walk::{count_bridges, count_saws, Ball};
use sawlab_core::{make_family, validate_height, EnumConfig, GraphSpec, RootedGraph, VertexId};

fn family() -> impl Strategy<Value = GraphSpec> {
    prop_oneof![
        (1u32..=4).prop_map(|dim| GraphSpec::Hypercubic { dim }),
        Just(GraphSpec::Ladder),
        Just(GraphSpec::Hexagonal),
        Just(GraphSpec::Triangular),
        Just(GraphSpec::SquareOctagon),
        (2u32..=6).prop_map(|degree| GraphSpec::Tree { degree }),
        (2u32..=6).prop_map(|degree| GraphSpec::Bridge { degree }),
        (3u32..=5, 3u32..=7).prop_map(|(degree, girth)| GraphSpec::FreeProduct { degree, girth }),
        Just(GraphSpec::Fisher {
            base: Box::new(GraphSpec::Hexagonal)
        }),
        Just(GraphSpec::Semicubic {
            base: Box::new(GraphSpec::Hexagonal),
            coloring: "hexagonal-parity".into(),
        }),
    ]
}

fn graph(spec: &GraphSpec) -> RootedGraph {
    make_family(spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_ids_are_fixed_points(spec in family(), pick in any::<prop::sample::Index>()) {
        let g = graph(&spec);
        let ball = Ball::build(&g, 4).unwrap();
        let v = ball.id(pick.index(ball.len()) as u32).clone();
        prop_assert_eq!(g.canonicalize(&v).unwrap(), v.clone());
        for e in g.neighbors(&v).unwrap() {
            prop_assert_eq!(g.canonicalize(&e.to).unwrap(), e.to.clone());
        }
    }

    #[test]
    fn free_product_words_reduce(
        degree in 3u32..=5,
        girth in 3u32..=6,
        raw in prop::collection::vec(0i32..8, 0..12),
    ) {
        let g = graph(&GraphSpec::FreeProduct { degree, girth });
        let letters = (degree - 2) as i32 + girth as i32 - 1;
        let raw: Vec<i32> = raw.into_iter().map(|x| x % letters).collect();
        let once = g.canonicalize(&VertexId::new(raw)).unwrap();
        prop_assert_eq!(g.canonicalize(&once).unwrap(), once);
    }

    #[test]
    fn undirected_adjacency_is_symmetric(spec in family(), pick in any::<prop::sample::Index>()) {
        let g = graph(&spec);
        let ball = Ball::build(&g, 5).unwrap();
        let v = ball.id(pick.index(ball.len()) as u32).clone();
        for e in g.neighbors(&v).unwrap() {
            let back: u32 = g
                .neighbors(&e.to)
                .unwrap()
                .iter()
                .filter(|b| b.to == v)
                .map(|b| b.multiplicity)
                .sum();
            prop_assert_eq!(back, e.multiplicity, "{:?} {} -> {}", spec, v, e.to);
        }
    }

    #[test]
    fn degree_matches_metadata(spec in family(), pick in any::<prop::sample::Index>()) {
        let g = graph(&spec);
        let ball = Ball::build(&g, 4).unwrap();
        let v = ball.id(pick.index(ball.len()) as u32).clone();
        prop_assert!(g.degree_at(&v).unwrap() <= g.degree);
    }

    #[test]
    fn walk_counts_are_submultiplicative(spec in family()) {
        let g = graph(&spec);
        let s = count_saws(&g, 9, &EnumConfig::default()).unwrap();
        let n = s.values.len() - 1;
        prop_assert!(n >= 6, "{:?} stopped at {}", spec, n);
        for i in 0..=n {
            for j in 0..=n - i {
                prop_assert!(s.values[i + j] <= &s.values[i] * &s.values[j], "{:?} {} {}", spec, i, j);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn heights_valid_to_radius_eight(spec in prop_oneof![
        (1u32..=3).prop_map(|dim| GraphSpec::Hypercubic { dim }),
        Just(GraphSpec::Ladder),
        Just(GraphSpec::Hexagonal),
        Just(GraphSpec::SquareOctagon),
    ]) {
        let g = graph(&spec);
        let r = validate_height(&g, 8).unwrap();
        prop_assert!(r.violations.is_empty(), "{:?}", r.violations);
    }

    #[test]
    fn bridge_counts_are_supermultiplicative(spec in prop_oneof![
        (2u32..=3).prop_map(|dim| GraphSpec::Hypercubic { dim }),
        Just(GraphSpec::Ladder),
    ]) {
        let g = graph(&spec);
        let n = if spec == (GraphSpec::Hypercubic { dim: 3 }) { 9 } else { 14 };
        let b = count_bridges(&g, n, &EnumConfig::default()).unwrap();
        let s = count_saws(&g, n, &EnumConfig::default()).unwrap();
        for i in 0..=n {
            prop_assert!(b.values[i] <= s.values[i]);
            for j in 0..=n - i {
                prop_assert!(&b.values[i] * &b.values[j] <= b.values[i + j], "{:?} {} {}", spec, i, j);
            }
        }
    }
}

#[test]
fn bridge_counts_positive() {
    let g = graph(&GraphSpec::Hexagonal);
    let b = count_bridges(&g, 12, &EnumConfig::default()).unwrap();
    assert!(b.values.iter().all(|v| *v > BigUint::from(0u32)));
}
