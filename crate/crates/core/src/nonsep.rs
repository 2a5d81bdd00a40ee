//! Shortest non-separating cycles and the level-set bookkeeping behind the
//! face-norm cycle bound.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::embedding::{Dart, Embedding, Face};
use crate::error::{Error, Result};
use crate::graph::UNREACHED;
use crate::surgery::{self, cut_along, is_separating, level_chords};

/// Rotates and possibly reverses a simple cycle so that its vertex sequence
/// (then dart sequence) is lexicographically smallest.
pub fn canonical_cycle(e: &Embedding, darts: &[Dart]) -> Vec<Dart> {
    let k = darts.len();
    let reversed: Vec<Dart> = darts.iter().rev().map(|d| d.twin()).collect();
    let mut best: Option<(Vec<usize>, Vec<Dart>)> = None;
    for seq in [darts, &reversed[..]] {
        for shift in 0..k {
            let cand: Vec<Dart> = (0..k).map(|i| seq[(i + shift) % k]).collect();
            let key = (cand.iter().map(|&d| e.tail(d)).collect::<Vec<_>>(), cand);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.map(|b| b.1).unwrap_or_default()
}

/// BFS tree from `root`: parent dart (pointing towards the root's child) per
/// vertex. Neighbours are explored in dart order.
fn bfs_tree(e: &Embedding, root: usize, incident: &[Vec<Dart>]) -> (Vec<usize>, Vec<Option<Dart>>) {
    let n = e.vertex_count();
    let mut depth = vec![UNREACHED; n];
    let mut parent = vec![None; n];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &d in &incident[u] {
            let w = e.head(d);
            if depth[w] == UNREACHED {
                depth[w] = depth[u] + 1;
                parent[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    (depth, parent)
}

/// Fundamental cycles of BFS trees from every root, deduplicated by edge set
/// and sorted by length, then canonical vertex and dart sequences.
pub fn fundamental_cycles(e: &Embedding) -> Vec<Vec<Dart>> {
    let n = e.vertex_count();
    let mut incident: Vec<Vec<Dart>> = vec![Vec::new(); n];
    for d in 0..e.dart_count() {
        incident[e.tail(Dart(d))].push(Dart(d));
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for root in 0..n {
        let (depth, parent) = bfs_tree(e, root, &incident);
        let tree_edge: HashSet<usize> = parent.iter().flatten().map(|d| d.edge()).collect();
        for x in 0..e.edge_count() {
            if tree_edge.contains(&x) {
                continue;
            }
            let (a, b) = e.edge(x);
            // climb from both ends to the common ancestor
            let (mut ua, mut ub) = (a, b);
            let mut down_a = Vec::new();
            let mut up_b = Vec::new();
            while ua != ub {
                if depth[ua] >= depth[ub] {
                    let d = parent[ua].expect("reached");
                    down_a.push(d);
                    ua = e.tail(d);
                } else {
                    let d = parent[ub].expect("reached");
                    up_b.push(d.twin());
                    ub = e.tail(d);
                }
            }
            down_a.reverse();
            let mut cycle = down_a;
            cycle.push(Dart::new(x, 0));
            cycle.extend(up_b);
            if surgery::cycle_vertices(e, &cycle).is_err() {
                continue;
            }
            let mut key: Vec<usize> = cycle.iter().map(|d| d.edge()).collect();
            key.sort_unstable();
            if seen.insert(key) {
                out.push(canonical_cycle(e, &cycle));
            }
        }
    }
    out.sort_by_cached_key(|c| {
        (
            c.len(),
            c.iter().map(|&d| e.tail(d)).collect::<Vec<_>>(),
            c.clone(),
        )
    });
    out
}

/// A shortest simple non-separating cycle, as a canonical dart sequence.
pub fn shortest_nonseparating_cycle(e: &Embedding) -> Result<Vec<Dart>> {
    if e.euler_genus()?.euler_genus == 0 {
        return Err(Error::SphereEmbedding);
    }
    for c in fundamental_cycles(e) {
        if !is_separating(e, &c)? {
            return Ok(c);
        }
    }
    Err(Error::SphereEmbedding)
}

/// Boundary distance between two vertices of a face walk: the shorter of the
/// two arcs, minimised over all occurrences.
pub fn chord_length(e: &Embedding, face: &Face, u: usize, v: usize) -> Result<usize> {
    let verts: Vec<usize> = face.darts().map(|d| e.tail(d)).collect();
    let pos = |x: usize| -> Result<Vec<usize>> {
        let p: Vec<usize> = (0..verts.len()).filter(|&i| verts[i] == x).collect();
        if p.is_empty() {
            Err(Error::NotOnFace(x))
        } else {
            Ok(p)
        }
    };
    let (pu, pv) = (pos(u)?, pos(v)?);
    let len = verts.len();
    let mut best = usize::MAX;
    for &i in &pu {
        for &j in &pv {
            let d = i.abs_diff(j);
            best = best.min(d.min(len - d));
        }
    }
    Ok(best)
}

/// Arc length of a chord between walk positions `i` and `j` of a face of
/// size `len`.
pub fn arc_length(len: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(len - d)
}

/// Measurements of the level-set iteration between the two copies of a cut
/// cycle.
#[derive(Debug, Clone, Serialize)]
pub struct LevelAudit {
    pub cycle_length: usize,
    /// Distance between the two copies after cutting.
    pub s: usize,
    /// Total chord length per level 1..=s.
    pub level_lengths: Vec<usize>,
    pub total_length: usize,
    pub face_norm_sq: u64,
}

impl LevelAudit {
    /// 8 * sum of chord lengths <= face norm squared.
    pub fn chord_bound_holds(&self) -> bool {
        8 * self.total_length as u64 <= self.face_norm_sq
    }

    /// 2s >= |C|.
    pub fn distance_bound_holds(&self) -> bool {
        2 * self.s >= self.cycle_length
    }
}

/// Cuts along `cycle` and runs the level iteration from one copy towards the
/// other. Level `i` consists of the chords bypassing the ball of radius
/// `i - 1` around the first copy, measured in the faces of the cut graph.
/// Returns `None` for one-sided cycles, whose cut leaves a single copy.
pub fn level_set_audit(e: &Embedding, cycle: &[Dart]) -> Result<Option<LevelAudit>> {
    let cut = cut_along(e, cycle)?;
    if cut.one_sided {
        return Ok(None);
    }
    if cut.components > 1 {
        return Err(Error::Separating);
    }
    let g0 = &cut.embedding;
    let graph = g0.graph();
    let first: Vec<usize> = cut.copies[0].iter().map(|&d| g0.tail(d)).collect();
    let second: Vec<usize> = cut.copies[1].iter().map(|&d| g0.tail(d)).collect();
    let dist = graph.multi_source_bfs(first.iter().copied());
    let s = second.iter().map(|&v| dist[v]).min().unwrap_or(UNREACHED);
    let fs = g0.faces();
    let mut level_lengths = Vec::new();
    for i in 1..=s {
        let marked: Vec<bool> = dist.iter().map(|&d| d < i).collect();
        let total = match level_chords(g0, &marked) {
            Ok(r) => r
                .chords
                .iter()
                .map(|c| arc_length(fs.faces[c.face].len(), c.from_pos, c.to_pos))
                .sum(),
            Err(Error::EmptyLevel) => 0,
            Err(err) => return Err(err),
        };
        level_lengths.push(total);
    }
    Ok(Some(LevelAudit {
        cycle_length: cycle.len(),
        s,
        total_length: level_lengths.iter().sum(),
        level_lengths,
        face_norm_sq: e.norms().face_norm_sq,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{FaceStep, Sign};
    use crate::named;

    fn polygon(n: usize) -> (Embedding, Face) {
        let c = named::cycle(n);
        let f = c.faces().faces[0].clone();
        (c, f)
    }

    #[test]
    fn k7_shortest_is_a_triangle() {
        let k7 = named::k7_torus();
        let c = shortest_nonseparating_cycle(&k7).unwrap();
        assert_eq!(c.len(), 3);
        assert!(!is_separating(&k7, &c).unwrap());
        assert!(4 * 9 <= k7.norms().face_norm_sq);
    }

    #[test]
    fn sphere_has_none() {
        assert_eq!(
            shortest_nonseparating_cycle(&named::tetrahedron()).unwrap_err(),
            Error::SphereEmbedding
        );
    }

    #[test]
    fn projective_loop_is_its_own_answer() {
        let p = named::projective_loop();
        let c = shortest_nonseparating_cycle(&p).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].edge(), 0);
    }

    #[test]
    fn chord_lengths() {
        let (sq, f) = polygon(4);
        assert_eq!(chord_length(&sq, &f, 0, 2).unwrap(), 2);
        let (hex, f) = polygon(6);
        assert_eq!(chord_length(&hex, &f, 2, 3).unwrap(), 1);
        assert_eq!(chord_length(&hex, &f, 0, 0).unwrap(), 0);
        let (t, _) = polygon(3);
        let bogus = Face {
            steps: vec![FaceStep {
                dart: Dart(0),
                orient: Sign::Plus,
            }],
        };
        assert_eq!(
            chord_length(&t, &bogus, 2, 0).unwrap_err(),
            Error::NotOnFace(2)
        );
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let k7 = named::k7_torus();
        let c = shortest_nonseparating_cycle(&k7).unwrap();
        let rotated: Vec<Dart> = c[1..].iter().chain(&c[..1]).copied().collect();
        assert_eq!(canonical_cycle(&k7, &rotated), c);
        assert_eq!(k7.tail(c[0]), 0);
    }

    #[test]
    fn k7_level_audit() {
        let k7 = named::k7_torus();
        let c = shortest_nonseparating_cycle(&k7).unwrap();
        let audit = level_set_audit(&k7, &c).unwrap().unwrap();
        assert!(audit.distance_bound_holds(), "{audit:?}");
        assert!(audit.chord_bound_holds(), "{audit:?}");
    }
}
