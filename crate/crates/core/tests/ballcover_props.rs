use proptest::prelude::*;
use surfcover_core::ballcover::{build_balls, canonical_paths, greedy_cover, simple_intersection};
use surfcover_core::{generate, Graph};

fn graph() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1usize..18, any::<bool>()).prop_map(|(seed, n, planar)| {
        let mut r = generate::rng(seed);
        if planar {
            generate::random_planar_graph(n, 0.5, &mut r).unwrap()
        } else {
            generate::random_connected_graph(n, 0.15, &mut r).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn balls_are_symmetric(g in graph(), radius in 0usize..4) {
        let b = build_balls(&g, radius).unwrap();
        for x in 0..g.vertex_count() {
            prop_assert!(b.ball(x).contains(&x));
            for &y in b.ball(x) {
                prop_assert!(b.ball(y).contains(&x));
            }
        }
    }

    #[test]
    fn cover_equals_hitting_set(g in graph(), radius in 0usize..3, mask in any::<u32>()) {
        let b = build_balls(&g, radius).unwrap();
        let s: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(b.is_cover(&s), b.is_hitting_set(&s));
    }

    #[test]
    fn greedy_always_covers(g in graph(), radius in 0usize..3) {
        let b = build_balls(&g, radius).unwrap();
        let c = greedy_cover(&b);
        prop_assert!(c.covered);
        prop_assert!(b.is_cover(&c.centers));
    }

    #[test]
    fn canonical_paths_are_shortest_and_simple(g in graph(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 2..7)) {
        let n = g.vertex_count();
        let mut centers: Vec<usize> = picks.iter().map(|p| p.index(n)).collect();
        centers.sort_unstable();
        centers.dedup();
        prop_assume!(centers.len() >= 2);
        let pm = canonical_paths(&g, &centers).unwrap();
        for (&(i, j), p) in &pm.paths {
            prop_assert_eq!(p.len() - 1, g.bfs(centers[i])[centers[j]]);
        }
        let all: Vec<&Vec<usize>> = pm.paths.values().collect();
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                prop_assert!(simple_intersection(all[a], all[b]));
            }
        }
    }
}

#[test]
fn vc_dimension_below_forbidden_clique() {
    use surfcover_core::ballcover::{forbidden_clique, shatter_dimension};
    let mut r = generate::rng(5);
    for i in 0..12 {
        let e = if i % 2 == 0 {
            generate::toroidal_triangulation(9 + i / 2, &mut r).unwrap()
        } else {
            generate::random_surface_embedding(10 + i / 2, 1 + i % 3, false, &mut r).unwrap()
        };
        let g = e.graph();
        let q = forbidden_clique(e.euler_genus().unwrap());
        for radius in 0..=g.diameter().unwrap() {
            let s = shatter_dimension(&build_balls(&g, radius).unwrap(), usize::MAX).unwrap();
            assert!(s.exact);
            assert!(
                s.dimension < q,
                "instance {i} radius {radius}: {} vs {q}",
                s.dimension
            );
        }
    }
}
