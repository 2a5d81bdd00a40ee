//! Benchmark fixtures.

use surfcover_core::treedecomp::TreeDecomposition;
use surfcover_core::{generate, Embedding, Graph};

/// Toroidal triangulations of the given sizes, fixed seed.
pub fn tori(sizes: &[usize]) -> Vec<Embedding> {
    let mut r = generate::rng(1);
    sizes
        .iter()
        .map(|&n| generate::toroidal_triangulation(n, &mut r).expect("n >= 7"))
        .collect()
}

pub fn surface(g: usize) -> Embedding {
    generate::genus_g_triangulation(g, &mut generate::rng(2)).expect("generator")
}

pub fn planar(n: usize) -> Graph {
    generate::random_planar_graph(n, 0.4, &mut generate::rng(3)).expect("n >= 1")
}

pub fn decomposed(n: usize) -> (Graph, TreeDecomposition) {
    let mut r = generate::rng(4);
    let g = generate::random_connected_graph(n, 0.05, &mut r).expect("n >= 1");
    let td = generate::random_tree_decomposition(&g, &mut r);
    (g, td)
}
