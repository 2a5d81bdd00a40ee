//! Small named embeddings and graphs used as fixtures and CLI inputs.

use crate::embedding::{Dart, Embedding, Sign};
use crate::graph::Graph;

/// Rotation system of a straight-line plane drawing: neighbours sorted by
/// angle, counter-clockwise.
pub fn from_points(points: &[(f64, f64)], edges: &[(usize, usize)]) -> Embedding {
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        order[u].push(v);
        order[v].push(u);
    }
    for (u, nbrs) in order.iter_mut().enumerate() {
        let (x, y) = points[u];
        nbrs.sort_by(|&a, &b| {
            let ta = (points[a].1 - y).atan2(points[a].0 - x);
            let tb = (points[b].1 - y).atan2(points[b].0 - x);
            ta.total_cmp(&tb)
        });
    }
    Embedding::from_neighbor_rotations(&order).expect("straight-line drawing")
}

pub fn tetrahedron() -> Embedding {
    let pts = [(0.0, 3.0), (-3.0, -2.0), (3.0, -2.0), (0.0, 0.0)];
    from_points(&pts, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn cube() -> Embedding {
    let pts = [
        (-3.0, -3.0),
        (3.0, -3.0),
        (3.0, 3.0),
        (-3.0, 3.0),
        (-1.0, -1.0),
        (1.0, -1.0),
        (1.0, 1.0),
        (-1.0, 1.0),
    ];
    let mut edges = Vec::new();
    for i in 0..4 {
        edges.push((i, (i + 1) % 4));
        edges.push((4 + i, 4 + (i + 1) % 4));
        edges.push((i, 4 + i));
    }
    from_points(&pts, &edges)
}

/// Antipodal pairs are (0,3), (1,4), (2,5).
pub fn octahedron() -> Embedding {
    let pts = [
        (0.0, 4.0),
        (-4.0, -3.0),
        (4.0, -3.0),
        (0.0, -1.0),
        (1.0, 0.5),
        (-1.0, 0.5),
    ];
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                edges.push((u, v));
            }
        }
    }
    from_points(&pts, &edges)
}

/// Hub 0 joined to the rim cycle 1..=n.
pub fn wheel(n: usize) -> Embedding {
    assert!(n >= 3);
    let mut pts = vec![(0.0, 0.0)];
    for i in 0..n {
        let t = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        pts.push((t.cos(), t.sin()));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, i % n + 1));
    }
    from_points(&pts, &edges)
}

/// Cycle on `n >= 1` vertices embedded in the sphere (n = 1 is a loop,
/// n = 2 a digon).
pub fn cycle(n: usize) -> Embedding {
    assert!(n >= 1);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rotations = (0..n)
        .map(|i| {
            let prev = (i + n - 1) % n;
            vec![Dart::new(i, 0), Dart::new(prev, 1)]
        })
        .collect();
    Embedding::new(n, edges, rotations, vec![Sign::Plus; n]).expect("cycle")
}

/// One vertex, one loop with negative sign: the projective plane.
pub fn projective_loop() -> Embedding {
    Embedding::new(
        1,
        vec![(0, 0)],
        vec![vec![Dart(0), Dart(1)]],
        vec![Sign::Minus],
    )
    .expect("projective loop")
}

/// K7 triangulating the torus with rotation (v+1, v+3, v+2, v+6, v+4, v+5).
pub fn k7_torus() -> Embedding {
    let order: Vec<Vec<usize>> = (0..7)
        .map(|v| [1, 3, 2, 6, 4, 5].iter().map(|k| (v + k) % 7).collect())
        .collect();
    Embedding::from_neighbor_rotations(&order).expect("K7 rotation")
}

pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("path")
}

pub fn cycle_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("cycle")
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("complete")
}

/// Hub 0 with `leaves` pendant vertices.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()).expect("star")
}

pub fn grid_graph(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges).expect("grid")
}

pub fn petersen_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_fixtures_are_spherical() {
        for (emb, v, e) in [
            (tetrahedron(), 4, 6),
            (cube(), 8, 12),
            (octahedron(), 6, 12),
            (wheel(5), 6, 10),
            (cycle(4), 4, 4),
            (cycle(1), 1, 1),
        ] {
            assert_eq!(emb.vertex_count(), v);
            assert_eq!(emb.edge_count(), e);
            assert_eq!(emb.euler_genus().unwrap().euler_genus, 0);
        }
    }

    #[test]
    fn octahedron_faces_are_triangles() {
        assert_eq!(octahedron().faces().sizes(), vec![3; 8]);
    }

    #[test]
    fn petersen_diameter() {
        assert_eq!(petersen_graph().diameter().unwrap(), 2);
        assert_eq!(petersen_graph().edge_count(), 15);
    }
}
