//! Planarizing edge sets by iterated dual cut-and-contract, planarization of
//! drawings with crossings, and crossing-graph statistics.

use serde::Serialize;

use crate::clique;
use crate::embedding::{Dart, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::nonsep::shortest_nonseparating_cycle;
use crate::surgery::cut_and_contract;

/// Largest crossing graph handled by the exact clique search.
pub const EXACT_CLIQUE_LIMIT: usize = 25;

/// A drawing of a graph on a surface: a host embedding whose crossing
/// vertices have degree 4, plus the host path of every original edge.
#[derive(Debug, Clone)]
pub struct Drawing {
    host: Embedding,
    crossings: Vec<usize>,
    arcs: Vec<Vec<Dart>>,
    arc_of: Vec<usize>,
    is_crossing: Vec<bool>,
}

impl Drawing {
    pub fn new(host: Embedding, crossings: Vec<usize>, arcs: Vec<Vec<Dart>>) -> Result<Self> {
        let n = host.vertex_count();
        let mut is_crossing = vec![false; n];
        for &x in &crossings {
            if x >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    count: n,
                });
            }
            if std::mem::replace(&mut is_crossing[x], true) {
                return Err(Error::InvalidDrawing(format!("crossing {x} listed twice")));
            }
        }
        for &x in &crossings {
            let rot = host.rotation(x);
            if rot.len() != 4 {
                return Err(Error::InvalidCrossing {
                    vertex: x,
                    reason: format!("degree {}", rot.len()),
                });
            }
            if rot.iter().any(|d| host.is_loop(d.edge())) {
                return Err(Error::InvalidCrossing {
                    vertex: x,
                    reason: "loop at crossing".into(),
                });
            }
        }
        let mut arc_of = vec![usize::MAX; host.edge_count()];
        for (a, path) in arcs.iter().enumerate() {
            if path.is_empty() {
                return Err(Error::InvalidDrawing(format!("arc {a} is empty")));
            }
            for (i, &d) in path.iter().enumerate() {
                if d.0 >= host.dart_count() {
                    return Err(Error::EdgeOutOfRange(d.edge()));
                }
                if arc_of[d.edge()] != usize::MAX {
                    return Err(Error::InvalidDrawing(format!(
                        "host edge {} lies on more than one arc",
                        d.edge()
                    )));
                }
                arc_of[d.edge()] = a;
                if i > 0 {
                    let v = host.tail(d);
                    if host.head(path[i - 1]) != v {
                        return Err(Error::InvalidDrawing(format!("arc {a} is not a walk")));
                    }
                    if !is_crossing[v] {
                        return Err(Error::InvalidDrawing(format!(
                            "arc {a} passes through vertex {v}"
                        )));
                    }
                }
            }
            for end in [host.tail(path[0]), host.head(path[path.len() - 1])] {
                if is_crossing[end] {
                    return Err(Error::InvalidDrawing(format!(
                        "arc {a} ends at crossing {end}"
                    )));
                }
            }
        }
        if let Some(x) = arc_of.iter().position(|&a| a == usize::MAX) {
            return Err(Error::InvalidDrawing(format!(
                "host edge {x} lies on no arc"
            )));
        }
        let mut crossing_pairs = std::collections::HashSet::new();
        for &x in &crossings {
            let rot = host.rotation(x);
            let arc = |i: usize| arc_of[rot[i].edge()];
            if arc(0) != arc(2) || arc(1) != arc(3) || arc(0) == arc(1) {
                return Err(Error::InvalidCrossing {
                    vertex: x,
                    reason: "arcs are not interleaved".into(),
                });
            }
            let pair = (arc(0).min(arc(1)), arc(0).max(arc(1)));
            if !crossing_pairs.insert(pair) {
                return Err(Error::InvalidDrawing(format!(
                    "arcs {} and {} cross more than once",
                    pair.0, pair.1
                )));
            }
        }
        let mut crossings = crossings;
        crossings.sort_unstable();
        Ok(Self {
            host,
            crossings,
            arcs,
            arc_of,
            is_crossing,
        })
    }

    pub fn host(&self) -> &Embedding {
        &self.host
    }

    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Vec<Dart>] {
        &self.arcs
    }

    /// Original edge whose arc contains host edge `x`.
    pub fn arc_of(&self, x: usize) -> usize {
        self.arc_of[x]
    }

    pub fn is_crossing(&self, v: usize) -> bool {
        self.is_crossing[v]
    }

    /// Host ids of the original vertices, in order.
    pub fn original_vertices(&self) -> Vec<usize> {
        (0..self.host.vertex_count())
            .filter(|&v| !self.is_crossing[v])
            .collect()
    }

    /// The drawn graph, with original vertices renumbered in host order.
    pub fn original_graph(&self) -> Graph {
        let mut index = vec![usize::MAX; self.host.vertex_count()];
        for (i, v) in self.original_vertices().into_iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .arcs
            .iter()
            .map(|p| {
                (
                    index[self.host.tail(p[0])],
                    index[self.host.head(p[p.len() - 1])],
                )
            })
            .collect();
        Graph::new(self.original_vertices().len(), edges).expect("valid endpoints")
    }

    /// Crossings as pairs of original edges.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        self.crossings
            .iter()
            .map(|&x| {
                let rot = self.host.rotation(x);
                let (a, b) = (self.arc_of[rot[0].edge()], self.arc_of[rot[1].edge()]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// Outcome of a planarization run, with the data needed to audit the bound
/// `|removed| <= (g/2) * sqrt(norm_sq)` where `g` is the iteration count.
#[derive(Debug, Clone, Serialize)]
pub struct PlanarizeReport {
    pub removed: Vec<usize>,
    /// Dual cycles used, as lists of primal edge indices.
    pub cut_cycles: Vec<Vec<usize>>,
    pub iterations: usize,
    pub input_euler_genus: usize,
    pub orientable: bool,
    /// Squared norm under the root in the bound.
    pub norm_sq: u64,
    pub bound: f64,
    pub residual_genus: usize,
    /// Dual face norm squared before and after each cut-and-contract.
    pub face_norm_log: Vec<(u64, u64)>,
}

impl PlanarizeReport {
    /// Exact check of `2|removed| <= g * sqrt(norm_sq)`.
    pub fn bound_holds(&self) -> bool {
        let lhs = 4 * (self.removed.len() as u128).pow(2);
        let rhs = (self.iterations as u128).pow(2) * self.norm_sq as u128;
        lhs <= rhs
    }

    /// Every logged cut strictly decreased the dual face norm.
    pub fn monotone(&self) -> bool {
        self.face_norm_log.iter().all(|&(b, a)| a < b)
    }
}

fn bound(iterations: usize, norm_sq: u64) -> f64 {
    iterations as f64 / 2.0 * (norm_sq as f64).sqrt()
}

/// Planarizing edge set: repeatedly cut the dual along a shortest
/// non-separating cycle and contract, collecting the primal edges crossed.
pub fn planarizing_edge_set(e: &Embedding) -> Result<PlanarizeReport> {
    let genus = e.euler_genus()?;
    let mut cur = e.dual();
    let mut origin: Vec<usize> = (0..e.edge_count()).collect();
    let mut removed = Vec::new();
    let mut cut_cycles = Vec::new();
    let mut face_norm_log = Vec::new();
    while cur.total_euler_genus() > 0 {
        let c = shortest_nonseparating_cycle(&cur)?;
        let primal: Vec<usize> = c.iter().map(|d| origin[d.edge()]).collect();
        log::debug!(
            "dual cut of length {} at genus {}",
            c.len(),
            cur.total_euler_genus()
        );
        let before = cur.norms().face_norm_sq;
        let next = cut_and_contract(&cur, &c)?;
        let after = next.embedding.norms().face_norm_sq;
        face_norm_log.push((before, after));
        origin = next.edge_origin.iter().map(|&x| origin[x]).collect();
        removed.extend(&primal);
        cut_cycles.push(primal);
        cur = next.embedding;
    }
    removed.sort_unstable();
    let mut mask = vec![false; e.edge_count()];
    for &x in &removed {
        mask[x] = true;
    }
    let residual_genus = e.delete_edges(&mask).0.total_euler_genus();
    let norm_sq = e.norms().vertex_norm_sq;
    let iterations = cut_cycles.len();
    Ok(PlanarizeReport {
        removed,
        cut_cycles,
        iterations,
        input_euler_genus: genus.euler_genus,
        orientable: genus.orientable,
        norm_sq,
        bound: bound(iterations, norm_sq),
        residual_genus,
        face_norm_log,
    })
}

/// Planarizes a drawing: planarize the host, then remove every original
/// edge whose arc lost a host edge.
pub fn drawing_planarize(d: &Drawing) -> Result<PlanarizeReport> {
    let inner = planarizing_edge_set(d.host())?;
    let chi = d.crossings().len() as u64;
    let g_norm_sq = d.original_graph().degree_square_sum();
    let host_norm_sq = d.host().norms().vertex_norm_sq;
    if host_norm_sq != 16 * chi + g_norm_sq {
        return Err(Error::InvalidDrawing(format!(
            "host degree norm {host_norm_sq} differs from 16*{chi} + {g_norm_sq}"
        )));
    }
    let mut removed: Vec<usize> = inner.removed.iter().map(|&x| d.arc_of(x)).collect();
    removed.sort_unstable();
    removed.dedup();
    let mut mask = vec![false; d.host().edge_count()];
    for &a in &removed {
        for dart in &d.arcs()[a] {
            mask[dart.edge()] = true;
        }
    }
    let residual_genus = d.host().delete_edges(&mask).0.total_euler_genus();
    let cut_cycles = inner
        .cut_cycles
        .iter()
        .map(|c| c.iter().map(|&x| d.arc_of(x)).collect())
        .collect();
    Ok(PlanarizeReport {
        removed,
        cut_cycles,
        iterations: inner.iterations,
        input_euler_genus: inner.input_euler_genus,
        orientable: inner.orientable,
        norm_sq: host_norm_sq,
        bound: bound(inner.iterations, host_norm_sq),
        residual_genus,
        face_norm_log: inner.face_norm_log,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingStats {
    pub chi: usize,
    /// Largest set of pairwise crossing edges (1 when no edges cross).
    pub k_max: usize,
    /// Largest number of edges crossed by a single edge.
    pub per_edge_max: usize,
    /// One maximum (or greedy) pairwise-crossing edge set.
    pub clique: Vec<usize>,
    /// False when the crossing graph was too large for the exact search.
    pub exact: bool,
}

pub fn crossing_stats(d: &Drawing) -> CrossingStats {
    let m = d.arcs().len();
    let pairs = d.crossing_pairs();
    let mut degree = vec![0usize; m];
    for &(a, b) in &pairs {
        degree[a] += 1;
        degree[b] += 1;
    }
    let per_edge_max = degree.iter().copied().max().unwrap_or(0);
    // only edges that cross something can be in a clique of size >= 2
    let active: Vec<usize> = (0..m).filter(|&a| degree[a] > 0).collect();
    let (clique, exact) = if active.is_empty() {
        (if m > 0 { vec![0] } else { vec![] }, true)
    } else {
        let mut index = vec![usize::MAX; m];
        for (i, &a) in active.iter().enumerate() {
            index[a] = i;
        }
        let exact = active.len() <= EXACT_CLIQUE_LIMIT;
        let small = active.len() <= clique::MAX_VERTICES;
        let found = if small {
            let adj = clique::masks(
                active.len(),
                pairs.iter().map(|&(a, b)| (index[a], index[b])),
            );
            if exact {
                clique::max_clique(&adj)
            } else {
                clique::greedy_clique(&adj)
            }
        } else {
            vec![0]
        };
        (found.into_iter().map(|i| active[i]).collect(), exact)
    };
    CrossingStats {
        chi: d.crossings().len(),
        k_max: clique.len(),
        per_edge_max,
        clique,
        exact,
    }
}

/// The asymptotic crossing bound, kept symbolic because its constant is
/// not known explicitly.
pub const CROSSING_BOUND_FORMULA: &str = "(2 g^2)^k * c_k * n * log n";

/// Straight-line drawing in the plane. Proper intersections of segments
/// become crossing vertices numbered after the points.
pub fn straight_line_drawing(points: &[(f64, f64)], edges: &[(usize, usize)]) -> Result<Drawing> {
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    // crossings along each edge: (parameter, vertex)
    let mut along: Vec<Vec<(f64, usize)>> = vec![Vec::new(); edges.len()];
    let mut crossings = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if let Some((t, u, p)) = segment_intersection(pts[a], pts[b], pts[c], pts[d]) {
                let x = pts.len();
                pts.push(p);
                crossings.push(x);
                along[i].push((t, x));
                along[j].push((u, x));
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (v, &p) in points.iter().enumerate() {
            if v != a && v != b && on_segment(points[a], points[b], p) {
                return Err(Error::InvalidDrawing(format!(
                    "edge {i} passes through vertex {v}"
                )));
            }
        }
    }
    let mut host_edges = Vec::new();
    let mut arcs = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        along[i].sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut seq = vec![a];
        seq.extend(along[i].iter().map(|&(_, x)| x));
        seq.push(b);
        let mut arc = Vec::new();
        for w in seq.windows(2) {
            arc.push(Dart::new(host_edges.len(), 0));
            host_edges.push((w[0], w[1]));
        }
        arcs.push(arc);
    }
    for (k, &x) in crossings.iter().enumerate() {
        for &y in &crossings[k + 1..] {
            let (p, q) = (pts[x], pts[y]);
            if (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9 {
                return Err(Error::InvalidDrawing("three edges meet in a point".into()));
            }
        }
    }
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); pts.len()];
    for (x, &(u, v)) in host_edges.iter().enumerate() {
        rotations[u].push(Dart::new(x, 0));
        rotations[v].push(Dart::new(x, 1));
    }
    for (v, rot) in rotations.iter_mut().enumerate() {
        let (px, py) = pts[v];
        rot.sort_by(|&d1, &d2| {
            let far = |d: Dart| {
                let (u, w) = host_edges[d.edge()];
                pts[if d.end() == 0 { w } else { u }]
            };
            let (a, b) = (far(d1), far(d2));
            (a.1 - py)
                .atan2(a.0 - px)
                .total_cmp(&(b.1 - py).atan2(b.0 - px))
        });
    }
    let signs = vec![crate::embedding::Sign::Plus; host_edges.len()];
    let host = Embedding::new(pts.len(), host_edges, rotations, signs)?;
    Drawing::new(host, crossings, arcs)
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> bool {
    cross(a, b, p).abs() < 1e-9
        && p.0 >= a.0.min(b.0) - 1e-9
        && p.0 <= a.0.max(b.0) + 1e-9
        && p.1 >= a.1.min(b.1) - 1e-9
        && p.1 <= a.1.max(b.1) + 1e-9
}

/// Proper intersection of segments ab and cd: parameters along each and the
/// point.
fn segment_intersection(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    d: (f64, f64),
) -> Option<(f64, f64, (f64, f64))> {
    let r = (b.0 - a.0, b.1 - a.1);
    let s = (d.0 - c.0, d.1 - c.1);
    let denom = r.0 * s.1 - r.1 * s.0;
    if denom.abs() < 1e-12 {
        return None;
    }
    let t = ((c.0 - a.0) * s.1 - (c.1 - a.1) * s.0) / denom;
    let u = ((c.0 - a.0) * r.1 - (c.1 - a.1) * r.0) / denom;
    let eps = 1e-9;
    if t > eps && t < 1.0 - eps && u > eps && u < 1.0 - eps {
        Some((t, u, (a.0 + t * r.0, a.1 + t * r.1)))
    } else {
        None
    }
}

/// Crossing-free drawing of an embedding: every edge is its own arc.
pub fn trivial_drawing(e: &Embedding) -> Drawing {
    let arcs = (0..e.edge_count()).map(|x| vec![Dart::new(x, 0)]).collect();
    Drawing::new(e.clone(), Vec::new(), arcs).expect("every edge is an arc")
}

/// K5 drawn with a single crossing. Vertex 5 is the crossing of arcs 0-2
/// and 3-4. With `toroidal` set, two darts at vertex 0 are swapped, which
/// moves the drawing onto the torus.
pub fn k5_one_crossing(toroidal: bool) -> Drawing {
    let x = 5;
    let first = if toroidal { [3, 1, x, 4] } else { [1, 3, x, 4] };
    let order: Vec<Vec<usize>> = vec![
        first.to_vec(),
        vec![2, 3, 0, 4],
        vec![1, 4, x, 3],
        vec![x, 0, 1, 2],
        vec![1, 0, x, 2],
        vec![4, 0, 3, 2],
    ];
    let host = Embedding::from_neighbor_rotations(&order).expect("K5 host");
    let find = |u: usize, v: usize| {
        (0..host.dart_count())
            .map(Dart)
            .find(|&d| host.tail(d) == u && host.head(d) == v)
            .expect("host edge")
    };
    let mut arcs = Vec::new();
    for (u, v) in [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
    ] {
        arcs.push(match (u, v) {
            (0, 2) => vec![find(0, x), find(x, 2)],
            (3, 4) => vec![find(3, x), find(x, 4)],
            _ => vec![find(u, v)],
        });
    }
    Drawing::new(host, vec![x], arcs).expect("K5 drawing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn tetrahedron_needs_nothing() {
        let r = planarizing_edge_set(&named::tetrahedron()).unwrap();
        assert!(r.removed.is_empty());
        assert_eq!(r.iterations, 0);
        assert_eq!(r.residual_genus, 0);
        assert!(r.bound_holds());
    }

    #[test]
    fn k7_planarization() {
        let k7 = named::k7_torus();
        let r = planarizing_edge_set(&k7).unwrap();
        assert_eq!(r.residual_genus, 0);
        assert_eq!(r.iterations, 1);
        assert!(r.removed.len() >= 3);
        assert_eq!(r.norm_sq, 252);
        assert_eq!(k7.dual().norms().face_norm_sq, 252);
        // the dual of K7 is cubic on 14 vertices
        assert_eq!(k7.dual().norms().vertex_norm_sq, 126);
        assert!(r.bound_holds(), "{r:?}");
        assert!(r.monotone());
    }

    #[test]
    fn k5_plane_drawing() {
        let d = k5_one_crossing(false);
        assert_eq!(d.host().euler_genus().unwrap().euler_genus, 0);
        let s = crossing_stats(&d);
        assert_eq!((s.chi, s.k_max, s.per_edge_max), (1, 2, 1));
        let r = drawing_planarize(&d).unwrap();
        assert!(r.removed.is_empty());
    }

    #[test]
    fn k5_torus_drawing() {
        let d = k5_one_crossing(true);
        let g = d.host().euler_genus().unwrap();
        assert_eq!(g.euler_genus, 2);
        let r = drawing_planarize(&d).unwrap();
        assert_eq!(r.norm_sq, 96);
        assert_eq!(r.iterations, 1);
        assert!((r.bound - 96f64.sqrt() / 2.0).abs() < 1e-12);
        assert!(r.removed.len() <= 4);
        assert_eq!(r.residual_genus, 0);
    }

    #[test]
    fn crossing_free_stats() {
        let d = trivial_drawing(&named::cube());
        assert_eq!(
            (
                crossing_stats(&d).chi,
                crossing_stats(&d).k_max,
                crossing_stats(&d).per_edge_max
            ),
            (0, 1, 0)
        );
        let a = drawing_planarize(&d).unwrap();
        let b = planarizing_edge_set(&named::cube()).unwrap();
        assert_eq!(a.removed, b.removed);
        assert_eq!(a.norm_sq, b.norm_sq);
    }

    #[test]
    fn five_pairwise_crossing_chords() {
        // chords i -> i+5 of a regular 10-gon all pass near the centre
        let pts: Vec<(f64, f64)> = (0..10)
            .map(|i| {
                let t = 2.0 * std::f64::consts::PI * (i as f64 + 0.13 * (i % 3) as f64) / 10.0;
                (t.cos(), t.sin())
            })
            .collect();
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
        let d = straight_line_drawing(&pts, &edges).unwrap();
        let s = crossing_stats(&d);
        assert_eq!(s.chi, 10);
        assert_eq!(s.k_max, 5);
        assert_eq!(s.per_edge_max, 4);
    }

    #[test]
    fn degree_three_crossing_is_rejected() {
        let k4 = named::wheel(3);
        let arcs = (0..k4.edge_count())
            .map(|x| vec![Dart::new(x, 0)])
            .collect();
        let err = Drawing::new(k4, vec![1], arcs).unwrap_err();
        assert!(matches!(err, Error::InvalidCrossing { vertex: 1, .. }));
    }

    #[test]
    fn crossing_must_interleave() {
        let d = k5_one_crossing(false);
        let mut order: Vec<Vec<usize>> = (0..6)
            .map(|v| {
                d.host()
                    .rotation(v)
                    .iter()
                    .map(|&x| d.host().head(x))
                    .collect()
            })
            .collect();
        order[5].swap(0, 1);
        let host = Embedding::from_neighbor_rotations(&order).unwrap();
        let err = Drawing::new(host, vec![5], d.arcs().to_vec()).unwrap_err();
        assert!(matches!(err, Error::InvalidCrossing { vertex: 5, .. }));
    }
}
