//! Combinatorial surface embeddings.
//!
//! An [`Embedding`] is a multigraph together with a rotation system (a cyclic
//! order of darts around every vertex) and an edge signature. Edge `e`
//! contributes darts `2e` (leaving its first endpoint) and `2e + 1` (leaving
//! its second endpoint); a negative signature reverses the local orientation
//! when a face walk crosses the edge, which is how non-orientable surfaces are
//! represented.
//!
//! Face walks follow the usual rule: leave along dart `d`, arrive at the twin
//! dart, multiply the running orientation by the edge sign, and continue with
//! the next (positive orientation) or previous (negative orientation) dart in
//! the rotation at the arrival vertex.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{component_labels, Graph};

/// Half of an edge. Dart `2e` leaves the first endpoint of edge `e`, dart
/// `2e + 1` leaves the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(edge: usize, end: usize) -> Self {
        debug_assert!(end < 2);
        Dart(2 * edge + end)
    }

    #[inline]
    pub fn edge(self) -> usize {
        self.0 / 2
    }

    #[inline]
    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    /// 0 for the dart leaving the first endpoint, 1 otherwise.
    #[inline]
    pub fn end(self) -> usize {
        self.0 & 1
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Edge signature or running face-walk orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn to_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// One step of a face walk: the dart taken and the running orientation when
/// leaving along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceStep {
    pub dart: Dart,
    pub orient: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub steps: Vec<FaceStep>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.steps.iter().map(|s| s.dart)
    }
}

/// The faces of an embedding, one walk per face, plus the location of both
/// sides of every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// For each edge, the `(face, position)` of its two sides, ordered.
    pub edge_sides: Vec<[(usize, usize); 2]>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Face::len).collect()
    }

    /// Sum of squared face sizes.
    pub fn size_square_sum(&self) -> u64 {
        self.faces.iter().map(|f| (f.len() as u64).pow(2)).sum()
    }
}

/// Euler genus plus orientability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Genus {
    pub euler_genus: usize,
    pub orientable: bool,
}

impl Genus {
    /// Orientable genus `eg / 2` or non-orientable genus `eg`.
    pub fn genus(&self) -> usize {
        if self.orientable {
            self.euler_genus / 2
        } else {
            self.euler_genus
        }
    }
}

/// Squared norms are kept exact; the roots are derived on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Norms {
    pub face_norm_sq: u64,
    pub vertex_norm_sq: u64,
}

impl Norms {
    pub fn face_norm(&self) -> f64 {
        (self.face_norm_sq as f64).sqrt()
    }

    pub fn vertex_norm(&self) -> f64 {
        (self.vertex_norm_sq as f64).sqrt()
    }
}

/// A multigraph with a rotation system and an edge signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    rotations: Vec<Vec<Dart>>,
    signs: Vec<Sign>,
    position: Vec<usize>,
}

impl Embedding {
    /// Validates and builds a connected embedding.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        rotations: Vec<Vec<Dart>>,
        signs: Vec<Sign>,
    ) -> Result<Self> {
        let e = Self::from_parts(vertex_count, edges, rotations, signs)?;
        if !e.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(e)
    }

    /// Validates the rotation system but accepts disconnected graphs.
    /// Surgery produces these transiently.
    pub fn from_parts(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        rotations: Vec<Vec<Dart>>,
        signs: Vec<Sign>,
    ) -> Result<Self> {
        if rotations.len() != vertex_count {
            return Err(Error::MalformedRotation(format!(
                "{} rotations for {} vertices",
                rotations.len(),
                vertex_count
            )));
        }
        if signs.len() != edges.len() {
            return Err(Error::MalformedRotation(format!(
                "{} signs for {} edges",
                signs.len(),
                edges.len()
            )));
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
        }
        let dart_count = 2 * edges.len();
        let mut position = vec![usize::MAX; dart_count];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d.0 >= dart_count {
                    return Err(Error::MalformedRotation(format!(
                        "dart {d} at vertex {v} does not exist"
                    )));
                }
                if position[d.0] != usize::MAX {
                    return Err(Error::MalformedRotation(format!("dart {d} listed twice")));
                }
                let (a, b) = edges[d.edge()];
                let tail = if d.end() == 0 { a } else { b };
                if tail != v {
                    return Err(Error::MalformedRotation(format!(
                        "dart {d} listed at vertex {v} but leaves vertex {tail}"
                    )));
                }
                position[d.0] = i;
            }
        }
        if let Some(d) = position.iter().position(|&p| p == usize::MAX) {
            return Err(Error::MalformedRotation(format!("dart {d} missing")));
        }
        Ok(Self {
            vertex_count,
            edges,
            rotations,
            signs,
            position,
        })
    }

    /// Builds an embedding from per-vertex neighbour orders of a simple graph.
    /// Edges are numbered in the order they are first met.
    pub fn from_neighbor_rotations(order: &[Vec<usize>]) -> Result<Self> {
        let n = order.len();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges = Vec::new();
        for (u, nbrs) in order.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        count: n,
                    });
                }
                let key = (u.min(v), u.max(v));
                if u == v {
                    return Err(Error::MalformedRotation(
                        "neighbour rotations cannot express loops".into(),
                    ));
                }
                index.entry(key).or_insert_with(|| {
                    edges.push(key);
                    edges.len() - 1
                });
            }
        }
        let rotations = order
            .iter()
            .enumerate()
            .map(|(u, nbrs)| {
                nbrs.iter()
                    .map(|&v| {
                        let e = index[&(u.min(v), u.max(v))];
                        Dart::new(e, usize::from(edges[e].0 != u))
                    })
                    .collect()
            })
            .collect();
        let signs = vec![Sign::Plus; edges.len()];
        Self::new(n, edges, rotations, signs)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.signs[e]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    #[inline]
    pub fn tail(&self, d: Dart) -> usize {
        let (a, b) = self.edges[d.edge()];
        if d.end() == 0 {
            a
        } else {
            b
        }
    }

    #[inline]
    pub fn head(&self, d: Dart) -> usize {
        self.tail(d.twin())
    }

    #[inline]
    pub fn rot_next(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.tail(d)];
        rot[(self.position[d.0] + 1) % rot.len()]
    }

    #[inline]
    pub fn rot_prev(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.tail(d)];
        rot[(self.position[d.0] + rot.len() - 1) % rot.len()]
    }

    /// Index of `d` in the rotation at its tail.
    pub fn position(&self, d: Dart) -> usize {
        self.position[d.0]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.vertex_count, self.edges.clone()).expect("validated endpoints")
    }

    pub fn component_count(&self) -> usize {
        component_labels(self.vertex_count, &self.edges).1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The next face-walk state after leaving along `step`.
    #[inline]
    pub fn walk_next(&self, step: FaceStep) -> FaceStep {
        let arrive = step.dart.twin();
        let orient = step.orient * self.signs[step.dart.edge()];
        let dart = if orient.is_plus() {
            self.rot_next(arrive)
        } else {
            self.rot_prev(arrive)
        };
        FaceStep { dart, orient }
    }

    /// Face walks. Faces are discovered from the lowest unvisited dart; each
    /// face is reported once (its mirror walk is suppressed).
    pub fn faces(&self) -> FaceSet {
        let state = |s: FaceStep| 2 * s.dart.0 + usize::from(!s.orient.is_plus());
        let mut visited = vec![false; 4 * self.edges.len()];
        let mut faces = Vec::new();
        let mut edge_sides = vec![[(usize::MAX, usize::MAX); 2]; self.edges.len()];
        let mut side_count = vec![0u8; self.edges.len()];
        for d in 0..self.dart_count() {
            for orient in [Sign::Plus, Sign::Minus] {
                let start = FaceStep {
                    dart: Dart(d),
                    orient,
                };
                if visited[state(start)] {
                    continue;
                }
                let mut steps = Vec::new();
                let mut cur = start;
                loop {
                    visited[state(cur)] = true;
                    steps.push(cur);
                    cur = self.walk_next(cur);
                    if cur == start {
                        break;
                    }
                }
                for s in &steps {
                    let mirror = FaceStep {
                        dart: s.dart.twin(),
                        orient: -(s.orient * self.signs[s.dart.edge()]),
                    };
                    debug_assert!(!visited[state(mirror)] || !steps.contains(&mirror));
                    visited[state(mirror)] = true;
                }
                let f = faces.len();
                for (pos, s) in steps.iter().enumerate() {
                    let e = s.dart.edge();
                    let k = side_count[e] as usize;
                    debug_assert!(k < 2, "edge {e} has more than two sides");
                    edge_sides[e][k] = (f, pos);
                    side_count[e] += 1;
                }
                faces.push(Face { steps });
            }
        }
        FaceSet { faces, edge_sides }
    }

    /// Euler genus and orientability of a connected embedding.
    pub fn euler_genus(&self) -> Result<Genus> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Genus {
            euler_genus: self.total_euler_genus(),
            orientable: self.is_orientable(),
        })
    }

    /// Sum of the Euler genera of the connected components. Isolated vertices
    /// count as spheres.
    pub fn total_euler_genus(&self) -> usize {
        let components = self.component_count() as i64;
        let isolated = (0..self.vertex_count)
            .filter(|&v| self.rotations[v].is_empty())
            .count() as i64;
        let faces = self.faces().len() as i64 + isolated;
        let eg = 2 * components - self.vertex_count as i64 + self.edges.len() as i64 - faces;
        debug_assert!(eg >= 0, "negative Euler genus {eg}");
        eg as usize
    }

    /// True when some vertex re-signing makes every edge positive.
    pub fn is_orientable(&self) -> bool {
        let mut side: Vec<Option<Sign>> = vec![None; self.vertex_count];
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                if !self.signs[e].is_plus() {
                    return false;
                }
                continue;
            }
            incident[u].push(e);
            incident[v].push(e);
        }
        for root in 0..self.vertex_count {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Sign::Plus);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &e in &incident[u] {
                    let (a, b) = self.edges[e];
                    let w = if a == u { b } else { a };
                    let want = su * self.signs[e];
                    match side[w] {
                        None => {
                            side[w] = Some(want);
                            stack.push(w);
                        }
                        Some(s) if s != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn norms(&self) -> Norms {
        Norms {
            face_norm_sq: self.faces().size_square_sum(),
            vertex_norm_sq: self.rotations.iter().map(|r| (r.len() as u64).pow(2)).sum(),
        }
    }

    /// The dual embedding: a vertex per face, an edge per edge (same index),
    /// rotations given by the face walks.
    pub fn dual(&self) -> Embedding {
        self.dual_with_faces(&self.faces())
    }

    pub(crate) fn dual_with_faces(&self, fs: &FaceSet) -> Embedding {
        if self.edges.is_empty() {
            return Embedding::from_parts(1, vec![], vec![vec![]], vec![]).expect("trivial");
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut signs = Vec::with_capacity(self.edges.len());
        for (e, sides) in fs.edge_sides.iter().enumerate() {
            let [(fa, pa), (fb, pb)] = *sides;
            edges.push((fa, fb));
            let da = fs.faces[fa].steps[pa].dart;
            let db = fs.faces[fb].steps[pb].dart;
            debug_assert_eq!(da.edge(), e);
            signs.push(if da == db { Sign::Minus } else { Sign::Plus });
        }
        let rotations = fs
            .faces
            .iter()
            .enumerate()
            .map(|(f, face)| {
                face.steps
                    .iter()
                    .enumerate()
                    .map(|(pos, s)| {
                        let e = s.dart.edge();
                        let end = usize::from(fs.edge_sides[e][0] != (f, pos));
                        Dart::new(e, end)
                    })
                    .collect()
            })
            .collect();
        Embedding::from_parts(fs.faces.len(), edges, rotations, signs)
            .expect("dual of a valid embedding is valid")
    }

    /// Re-signs vertex `v`: reverses its rotation and flips the sign of every
    /// non-loop edge at `v`. The surface is unchanged.
    pub fn switch_vertex(&mut self, v: usize) {
        self.rotations[v].reverse();
        let len = self.rotations[v].len();
        for i in 0..len {
            let d = self.rotations[v][i];
            self.position[d.0] = i;
            let e = d.edge();
            if !self.is_loop(e) {
                self.signs[e] = -self.signs[e];
            }
        }
    }

    /// Deletes the flagged edges by restricting rotations. Returns the new
    /// embedding and, for each surviving edge, its index in `self`.
    pub fn delete_edges(&self, remove: &[bool]) -> (Embedding, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.edges.len()];
        let mut kept = Vec::new();
        for e in 0..self.edges.len() {
            if !remove[e] {
                new_index[e] = kept.len();
                kept.push(e);
            }
        }
        let edges = kept.iter().map(|&e| self.edges[e]).collect();
        let signs = kept.iter().map(|&e| self.signs[e]).collect();
        let rotations = self
            .rotations
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|d| !remove[d.edge()])
                    .map(|d| Dart::new(new_index[d.edge()], d.end()))
                    .collect()
            })
            .collect();
        let emb = Embedding::from_parts(self.vertex_count, edges, rotations, signs)
            .expect("restriction of a valid embedding");
        (emb, kept)
    }

    /// Inserts a new edge `u -> v` with its darts placed before positions
    /// `pos_u` and `pos_v` of the current rotations. Returns the edge index.
    pub fn insert_edge(
        &mut self,
        u: usize,
        pos_u: usize,
        v: usize,
        pos_v: usize,
        sign: Sign,
    ) -> usize {
        let e = self.edges.len();
        self.edges.push((u, v));
        self.signs.push(sign);
        self.position.extend([0, 0]);
        if u == v {
            let (first, second) = if pos_u <= pos_v {
                (pos_u, pos_v + 1)
            } else {
                (pos_u + 1, pos_v)
            };
            // pos_u/pos_v index the rotation before either insertion
            let mut rot = self.rotations[u].clone();
            if pos_u <= pos_v {
                rot.insert(first, Dart::new(e, 0));
                rot.insert(second, Dart::new(e, 1));
            } else {
                rot.insert(pos_v, Dart::new(e, 1));
                rot.insert(first, Dart::new(e, 0));
            }
            self.rotations[u] = rot;
        } else {
            self.rotations[u].insert(pos_u, Dart::new(e, 0));
            self.rotations[v].insert(pos_v, Dart::new(e, 1));
        }
        self.reindex(u);
        self.reindex(v);
        e
    }

    /// Adds a vertex inside face `face` joined to every corner of the face.
    /// Returns the new vertex.
    pub fn insert_star(&mut self, face: &Face) -> usize {
        let x = self.vertex_count;
        self.vertex_count += 1;
        self.rotations.push(Vec::new());
        let corners: Vec<(FaceStep, Dart)> = face
            .steps
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let prev = face.steps[(i + face.len() - 1) % face.len()];
                (s, prev.dart.twin())
            })
            .collect();
        let mut star = Vec::new();
        for (step, arrive) in corners {
            let v = self.tail(step.dart);
            let e = self.edges.len();
            self.edges.push((x, v));
            self.signs.push(step.orient);
            self.position.extend([0, 0]);
            let rot = &mut self.rotations[v];
            let at = if step.orient.is_plus() {
                // corner sits between `arrive` and its successor `step.dart`
                rot.iter().position(|&d| d == step.dart).unwrap()
            } else {
                rot.iter().position(|&d| d == arrive).unwrap()
            };
            rot.insert(at, Dart::new(e, 1));
            self.reindex(v);
            star.push(Dart::new(e, 0));
        }
        star.reverse();
        self.rotations[x] = star;
        self.reindex(x);
        x
    }

    fn reindex(&mut self, v: usize) {
        for (i, d) in self.rotations[v].iter().enumerate() {
            self.position[d.0] = i;
        }
    }

    /// Compares two embeddings whose edges share indices, allowing vertex
    /// relabelling, rotation reversal and re-signing.
    pub fn equivalent_to(&self, other: &Embedding) -> bool {
        if self.vertex_count != other.vertex_count || self.edges.len() != other.edges.len() {
            return false;
        }
        let key = |emb: &Embedding, v: usize| {
            let mut k: Vec<usize> = emb.rotations[v].iter().map(|d| d.edge()).collect();
            k.sort_unstable();
            k
        };
        let mut by_key: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for v in 0..other.vertex_count {
            by_key.entry(key(other, v)).or_default().push(v);
        }
        let mut map = vec![usize::MAX; self.vertex_count];
        for (v, slot) in map.iter_mut().enumerate() {
            match by_key.get_mut(&key(self, v)).and_then(|c| c.pop()) {
                Some(w) => *slot = w,
                None => return false,
            }
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let (a, b) = other.edges[e];
            let (mu, mv) = (map[u], map[v]);
            if !((mu == a && mv == b) || (mu == b && mv == a)) {
                return false;
            }
        }
        // allowed switch values per vertex
        let mut allowed = vec![(false, false); self.vertex_count];
        for v in 0..self.vertex_count {
            let a: Vec<usize> = self.rotations[v].iter().map(|d| d.edge()).collect();
            let b: Vec<usize> = other.rotations[map[v]].iter().map(|d| d.edge()).collect();
            let mut rev = a.clone();
            rev.reverse();
            allowed[v] = (cyclic_equal(&a, &b), cyclic_equal(&rev, &b));
            if allowed[v] == (false, false) {
                return false;
            }
        }
        // parity constraints s(u) s(v) = sign_a * sign_b on non-loop edges
        let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let rel = self.signs[e] * other.signs[e];
            if u == v {
                if !rel.is_plus() {
                    return false;
                }
            } else {
                adj[u].push((v, rel));
                adj[v].push((u, rel));
            }
        }
        let ok = |s: Sign, allow: (bool, bool)| if s.is_plus() { allow.0 } else { allow.1 };
        let mut side: Vec<Option<Sign>> = vec![None; self.vertex_count];
        for root in 0..self.vertex_count {
            if side[root].is_some() {
                continue;
            }
            let mut solved = false;
            for start in [Sign::Plus, Sign::Minus] {
                let mut trial = side.clone();
                trial[root] = Some(start);
                let mut stack = vec![root];
                let mut good = ok(start, allowed[root]);
                while good {
                    let Some(u) = stack.pop() else { break };
                    let su = trial[u].unwrap();
                    for &(w, rel) in &adj[u] {
                        let want = su * rel;
                        match trial[w] {
                            None => {
                                if !ok(want, allowed[w]) {
                                    good = false;
                                    break;
                                }
                                trial[w] = Some(want);
                                stack.push(w);
                            }
                            Some(s) if s != want => {
                                good = false;
                                break;
                            }
                            Some(_) => {}
                        }
                    }
                }
                if good {
                    side = trial;
                    solved = true;
                    break;
                }
            }
            if !solved {
                return false;
            }
        }
        true
    }
}

fn cyclic_equal(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn tetrahedron_is_spherical() {
        let t = named::tetrahedron();
        let fs = t.faces();
        assert_eq!(fs.len(), 4);
        assert!(fs.sizes().iter().all(|&s| s == 3));
        assert_eq!(
            t.euler_genus().unwrap(),
            Genus {
                euler_genus: 0,
                orientable: true
            }
        );
        let n = t.norms();
        assert_eq!(n.face_norm(), 6.0);
        assert_eq!(n.vertex_norm(), 6.0);
    }

    #[test]
    fn k7_is_toroidal() {
        let k7 = named::k7_torus();
        let fs = k7.faces();
        assert_eq!(fs.len(), 14);
        assert!(fs.sizes().iter().all(|&s| s == 3));
        let g = k7.euler_genus().unwrap();
        assert_eq!(g.euler_genus, 2);
        assert!(g.orientable);
        assert_eq!(g.genus(), 1);
        // ceil((7-3)(7-4)/12) = 1
        assert_eq!(((7 - 3) * (7 - 4_usize)).div_ceil(12), g.genus());
        let n = k7.norms();
        assert_eq!(n.face_norm_sq, 126);
        assert_eq!(n.vertex_norm_sq, 252);
        assert!((n.face_norm() - 11.224972).abs() < 1e-6);
        assert!((n.vertex_norm() - 15.874508).abs() < 1e-6);
    }

    #[test]
    fn projective_loop() {
        let p = named::projective_loop();
        let fs = p.faces();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs.faces[0].len(), 2);
        assert_eq!(
            p.euler_genus().unwrap(),
            Genus {
                euler_genus: 1,
                orientable: false
            }
        );
    }

    #[test]
    fn four_cycle_norm() {
        let c4 = named::cycle(4);
        assert_eq!(c4.norms().face_norm_sq, 32);
        assert!((c4.norms().face_norm() - 5.656854).abs() < 1e-6);
    }

    #[test]
    fn missing_dart_is_rejected() {
        let t = named::tetrahedron();
        let mut rot = t.rotations().to_vec();
        rot[0].pop();
        let err = Embedding::new(4, t.edges().to_vec(), rot, t.signs().to_vec()).unwrap_err();
        assert!(matches!(err, Error::MalformedRotation(_)));
    }

    #[test]
    fn duplicated_dart_is_rejected() {
        let t = named::tetrahedron();
        let mut rot = t.rotations().to_vec();
        let d = rot[0][0];
        rot[0].push(d);
        assert!(matches!(
            Embedding::new(4, t.edges().to_vec(), rot, t.signs().to_vec()),
            Err(Error::MalformedRotation(_))
        ));
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = Embedding::new(
            3,
            vec![(0, 1)],
            vec![vec![Dart(0)], vec![Dart(1)], vec![]],
            vec![Sign::Plus],
        )
        .unwrap_err();
        assert_eq!(err, Error::Disconnected);
    }

    #[test]
    fn duals() {
        let t = named::tetrahedron();
        let td = t.dual();
        assert_eq!(td.vertex_count(), 4);
        assert!(td.rotations().iter().all(|r| r.len() == 3));
        assert_eq!(td.euler_genus().unwrap().euler_genus, 0);

        let cube = named::cube();
        let oct = cube.dual();
        assert_eq!(oct.vertex_count(), 6);
        assert_eq!(oct.edge_count(), 12);
        assert!(oct.rotations().iter().all(|r| r.len() == 4));
        assert!(oct.faces().sizes().iter().all(|&s| s == 3));
        assert!(oct.graph().is_simple());

        let k7 = named::k7_torus();
        let d = k7.dual();
        assert_eq!(d.vertex_count(), 14);
        assert_eq!(d.edge_count(), 21);
        assert_eq!(d.euler_genus().unwrap().euler_genus, 2);
        assert!(d.dual().equivalent_to(&k7));
    }

    #[test]
    fn non_orientable_dual() {
        let p = named::projective_loop();
        let d = p.dual();
        assert_eq!(d.euler_genus().unwrap(), p.euler_genus().unwrap());
        assert!(d.dual().equivalent_to(&p));
    }

    #[test]
    fn switching_preserves_surface() {
        let mut k7 = named::k7_torus();
        let before = k7.faces().sizes();
        k7.switch_vertex(3);
        assert!(!k7.signs().iter().all(|s| s.is_plus()));
        assert!(k7.is_orientable());
        let mut after = k7.faces().sizes();
        let mut b = before;
        after.sort();
        b.sort();
        assert_eq!(after, b);
        assert_eq!(k7.euler_genus().unwrap().euler_genus, 2);
    }

    #[test]
    fn star_insertion_keeps_genus() {
        let mut k7 = named::k7_torus();
        k7.switch_vertex(0);
        let f = k7.faces().faces[0].clone();
        k7.insert_star(&f);
        assert_eq!(k7.euler_genus().unwrap().euler_genus, 2);
        assert!(k7.faces().sizes().iter().all(|&s| s == 3));
    }
}
