//! Cutting embeddings along simple cycles, contracting faces, and the
//! level-cycle construction around a set of faces.

use crate::embedding::{Dart, Embedding, Sign};
use crate::error::{Error, Result};
use crate::homology;

/// Result of cutting along a simple cycle.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub embedding: Embedding,
    /// Boundary walks of the new faces: two for a two-sided cycle, one of
    /// doubled length for a one-sided cycle.
    pub copies: Vec<Vec<Dart>>,
    pub one_sided: bool,
    pub components: usize,
    /// Original vertex of every vertex of the cut embedding.
    pub vertex_origin: Vec<usize>,
}

/// Checks that `darts` is a simple closed walk and returns its vertices.
pub fn cycle_vertices(e: &Embedding, darts: &[Dart]) -> Result<Vec<usize>> {
    if darts.is_empty() {
        return Err(Error::NotACycle("empty dart sequence".into()));
    }
    let k = darts.len();
    let mut seen_edge = vec![false; e.edge_count()];
    let mut seen_vertex = vec![false; e.vertex_count()];
    let mut vertices = Vec::with_capacity(k);
    for (i, &d) in darts.iter().enumerate() {
        if d.0 >= e.dart_count() {
            return Err(Error::EdgeOutOfRange(d.edge()));
        }
        if std::mem::replace(&mut seen_edge[d.edge()], true) {
            return Err(Error::NotACycle(format!("edge {} repeats", d.edge())));
        }
        let next = darts[(i + 1) % k];
        if next.0 < e.dart_count() && e.head(d) != e.tail(next) {
            return Err(Error::NotACycle(format!(
                "dart {d} ends at {} but dart {next} starts at {}",
                e.head(d),
                e.tail(next)
            )));
        }
        let v = e.tail(d);
        if std::mem::replace(&mut seen_vertex[v], true) {
            return Err(Error::NotSimple(v));
        }
        vertices.push(v);
    }
    Ok(vertices)
}

/// Darts strictly between `from` and `to` going forward around `v`.
fn wedge(e: &Embedding, v: usize, from: Dart, to: Dart) -> Vec<Dart> {
    let rot = e.rotation(v);
    let n = rot.len();
    let start = e.position(from);
    let mut out = Vec::new();
    let mut i = (start + 1) % n;
    while rot[i] != to {
        out.push(rot[i]);
        i = (i + 1) % n;
    }
    out
}

/// Cuts the surface along a simple cycle and caps the holes with disks.
///
/// Vertex `v_i` of the cycle keeps its index for the left copy; the right
/// copy gets index `V + i`. New edges are appended after the existing ones.
pub fn cut_along(e: &Embedding, darts: &[Dart]) -> Result<CutResult> {
    let verts = cycle_vertices(e, darts)?;
    let k = darts.len();
    let n = e.vertex_count();
    let m = e.edge_count();
    let mut w = e.clone();
    for i in 0..k.saturating_sub(1) {
        if !w.sign(darts[i].edge()).is_plus() {
            w.switch_vertex(verts[i + 1]);
        }
    }
    let one_sided = !w.sign(darts[k - 1].edge()).is_plus();

    let mut edges = w.edges().to_vec();
    let mut signs = w.signs().to_vec();
    let mut rotations: Vec<Vec<Dart>> = w.rotations().to_vec();
    rotations.resize(n + k, Vec::new());

    let out_r = |i: usize| Dart::new(m + i, 0);
    let in_r = |i: usize| {
        if i == 0 {
            if one_sided {
                darts[k - 1].twin()
            } else {
                Dart::new(m + k - 1, 1)
            }
        } else {
            Dart::new(m + i - 1, 1)
        }
    };
    let in_l = |i: usize| {
        if i == 0 && one_sided {
            Dart::new(m + k - 1, 1)
        } else {
            darts[(i + k - 1) % k].twin()
        }
    };

    for i in 0..k {
        let v = verts[i];
        let out = darts[i];
        let inc = darts[(i + k - 1) % k].twin();
        let left = wedge(&w, v, out, inc);
        let right = wedge(&w, v, inc, out);
        for &d in &right {
            let (a, b) = &mut edges[d.edge()];
            if d.end() == 0 {
                *a = n + i;
            } else {
                *b = n + i;
            }
        }
        let mut lrot = vec![out];
        lrot.extend(left);
        lrot.push(in_l(i));
        let mut rrot = vec![in_r(i)];
        rrot.extend(right);
        rrot.push(out_r(i));
        rotations[v] = lrot;
        rotations[n + i] = rrot;
    }
    for i in 0..k {
        edges.push((n + i, n + (i + 1) % k));
        signs.push(Sign::Plus);
    }
    if one_sided {
        // the closing edge becomes v_{k-1}^L -> v_0^R, the new one v_{k-1}^R -> v_0^L
        let closing = darts[k - 1].edge();
        let (a, b) = &mut edges[closing];
        if darts[k - 1].end() == 0 {
            *b = n;
        } else {
            *a = n;
        }
        edges[m + k - 1] = (n + k - 1, verts[0]);
        signs[m + k - 1] = Sign::Minus;
    }
    let embedding = Embedding::from_parts(n + k, edges, rotations, signs)?;
    let copy_b: Vec<Dart> = (0..k).map(out_r).collect();
    let copies = if one_sided {
        let mut c = darts.to_vec();
        c.extend(copy_b);
        vec![c]
    } else {
        vec![darts.to_vec(), copy_b]
    };
    let mut vertex_origin: Vec<usize> = (0..n).collect();
    vertex_origin.extend(&verts);
    let components = embedding.component_count();
    Ok(CutResult {
        embedding,
        copies,
        one_sided,
        components,
        vertex_origin,
    })
}

/// True when cutting along the simple cycle disconnects the surface.
pub fn is_separating(e: &Embedding, darts: &[Dart]) -> Result<bool> {
    Ok(cut_along(e, darts)?.components > 1)
}

/// An embedding obtained by contraction, with provenance maps.
#[derive(Debug, Clone)]
pub struct Contracted {
    pub embedding: Embedding,
    /// Index in the input embedding of every surviving edge.
    pub edge_origin: Vec<usize>,
    /// A representative input vertex for every output vertex.
    pub vertex_origin: Vec<usize>,
}

/// Contracts each of the given vertex-disjoint simple face walks to a single
/// vertex, deleting the walk edges.
pub fn contract_face_walks(e: &Embedding, walks: &[Vec<Dart>]) -> Result<Contracted> {
    let mut w = e.clone();
    let mut walk_of = vec![usize::MAX; e.vertex_count()];
    let mut on_walk = vec![false; e.edge_count()];
    for (j, walk) in walks.iter().enumerate() {
        let verts = cycle_vertices(e, walk)?;
        for &v in &verts {
            if walk_of[v] != usize::MAX {
                return Err(Error::NotACycle(format!("walks share vertex {v}")));
            }
            walk_of[v] = j;
        }
        for d in walk {
            on_walk[d.edge()] = true;
        }
    }
    let mut merged_rotations = Vec::with_capacity(walks.len());
    for walk in walks {
        let k = walk.len();
        for i in 0..k - 1 {
            if !w.sign(walk[i].edge()).is_plus() {
                w.switch_vertex(w.tail(walk[i + 1]));
            }
        }
        if !w.sign(walk[k - 1].edge()).is_plus() {
            return Err(Error::NotAFace);
        }
        let follows = |next: &dyn Fn(Dart) -> Dart, c: &[Dart]| {
            (0..k).all(|i| next(c[i].twin()) == c[(i + 1) % k])
        };
        let walk: Vec<Dart> = if follows(&|d| w.rot_next(d), walk) {
            walk.clone()
        } else if follows(&|d| w.rot_prev(d), walk) {
            walk.iter().rev().map(|d| d.twin()).collect()
        } else {
            return Err(Error::NotAFace);
        };
        let mut merged = Vec::new();
        for i in (0..k).rev() {
            let v = w.tail(walk[i]);
            merged.extend(wedge(&w, v, walk[i], walk[(i + k - 1) % k].twin()));
        }
        merged_rotations.push(merged);
    }

    let mut new_vertex = vec![usize::MAX; e.vertex_count()];
    let mut merged_id = vec![usize::MAX; walks.len()];
    let mut vertex_origin = Vec::new();
    for v in 0..e.vertex_count() {
        let j = walk_of[v];
        if j == usize::MAX {
            new_vertex[v] = vertex_origin.len();
            vertex_origin.push(v);
        } else if merged_id[j] == usize::MAX {
            merged_id[j] = vertex_origin.len();
            vertex_origin.push(v);
        }
    }
    for v in 0..e.vertex_count() {
        if walk_of[v] != usize::MAX {
            new_vertex[v] = merged_id[walk_of[v]];
        }
    }
    // drop merged vertices left isolated, unless nothing else remains
    let isolated: Vec<bool> = (0..vertex_origin.len())
        .map(|x| {
            walks
                .iter()
                .enumerate()
                .any(|(j, _)| merged_id[j] == x && merged_rotations[j].is_empty())
        })
        .collect();
    let keep_count = isolated.iter().filter(|&&i| !i).count();
    let mut compact = vec![usize::MAX; vertex_origin.len()];
    let mut next = 0;
    for x in 0..vertex_origin.len() {
        if !isolated[x] || (keep_count == 0 && next == 0) {
            compact[x] = next;
            next += 1;
        }
    }
    let mut edge_index = vec![usize::MAX; e.edge_count()];
    let mut edge_origin = Vec::new();
    for x in 0..e.edge_count() {
        if !on_walk[x] {
            edge_index[x] = edge_origin.len();
            edge_origin.push(x);
        }
    }
    let relabel = |d: Dart| Dart::new(edge_index[d.edge()], d.end());
    let edges = edge_origin
        .iter()
        .map(|&x| {
            let (a, b) = w.edge(x);
            (compact[new_vertex[a]], compact[new_vertex[b]])
        })
        .collect();
    let signs = edge_origin.iter().map(|&x| w.sign(x)).collect();
    let mut rotations = vec![Vec::new(); next];
    for v in 0..e.vertex_count() {
        if walk_of[v] == usize::MAX {
            rotations[compact[new_vertex[v]]] = w.rotation(v).iter().map(|&d| relabel(d)).collect();
        }
    }
    for (j, merged) in merged_rotations.iter().enumerate() {
        let x = compact[merged_id[j]];
        if x != usize::MAX {
            rotations[x] = merged.iter().map(|&d| relabel(d)).collect();
        }
    }
    let vertex_origin = (0..vertex_origin.len())
        .filter(|&x| compact[x] != usize::MAX)
        .map(|x| vertex_origin[x])
        .collect();
    let embedding = Embedding::from_parts(next, edges, rotations, signs)?;
    Ok(Contracted {
        embedding,
        edge_origin,
        vertex_origin,
    })
}

/// Cuts along a non-separating simple cycle and contracts every copy.
/// Surviving edges are the original edges off the cycle.
pub fn cut_and_contract(e: &Embedding, darts: &[Dart]) -> Result<Contracted> {
    let cut = cut_along(e, darts)?;
    if cut.components > 1 {
        return Err(Error::Disconnected);
    }
    let mut c = contract_face_walks(&cut.embedding, &cut.copies)?;
    c.vertex_origin = c
        .vertex_origin
        .iter()
        .map(|&v| cut.vertex_origin[v])
        .collect();
    Ok(c)
}

/// A chord drawn inside a face between two corners at the ends of a run of
/// marked corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chord {
    pub face: usize,
    /// Position in the face walk of the corner the chord leaves.
    pub from_pos: usize,
    /// Position of the corner the chord enters.
    pub to_pos: usize,
    pub from: usize,
    pub to: usize,
    /// Edge index of the chord in the host embedding, when kept.
    pub host_edge: Option<usize>,
}

/// Output of the level construction.
#[derive(Debug, Clone)]
pub struct LevelResult {
    /// Input embedding plus the kept level edges.
    pub host: Embedding,
    /// Host edge indices of the level edges L'.
    pub level_edges: Vec<usize>,
    /// Edge-disjoint simple cycles partitioning L', as host dart sequences.
    pub cycles: Vec<Vec<Dart>>,
    /// Vertices of the marked region.
    pub inner: Vec<usize>,
    /// Vertices at distance exactly 1 from the marked region.
    pub level: Vec<usize>,
    /// Level vertices that are not endpoints of any kept level edge.
    pub pockets: Vec<usize>,
    /// Every chord found, including the discarded null-homologous ones.
    pub chords: Vec<Chord>,
}

/// Builds level edges around the marked vertex set: inside every face, each
/// maximal run of marked corners is bypassed by a chord joining the unmarked
/// corners on either side. Chords that bound a disk on their own inside one
/// face (a single loop or a digon) are discarded.
pub fn level_chords(e: &Embedding, marked: &[bool]) -> Result<LevelResult> {
    let n = e.vertex_count();
    if marked.len() != n {
        return Err(Error::ParamRange(format!(
            "marked set has {} entries for {} vertices",
            marked.len(),
            n
        )));
    }
    let g = e.graph();
    let mut is_level = vec![false; n];
    for v in 0..n {
        if marked[v] {
            for &u in g.neighbors(v) {
                if !marked[u] {
                    is_level[u] = true;
                }
            }
        }
    }
    let level: Vec<usize> = (0..n).filter(|&v| is_level[v]).collect();
    if level.is_empty() {
        return Err(Error::EmptyLevel);
    }
    let fs = e.faces();
    let mut chords = Vec::new();
    // each rotation gap is one corner of one face; gaps are keyed by the
    // dart that opens them in rotation order
    let mut gap_orient: Vec<Option<Sign>> = vec![None; e.dart_count()];
    let mut gap_end: Vec<Option<usize>> = vec![None; e.dart_count()];
    let mut gap_start: Vec<Option<usize>> = vec![None; e.dart_count()];
    let gap_key = |f: &crate::embedding::Face, pos: usize| {
        let step = f.steps[pos];
        if step.orient.is_plus() {
            f.steps[(pos + f.len() - 1) % f.len()].dart.twin()
        } else {
            step.dart
        }
    };
    let mut kept = Vec::new();
    for (fi, face) in fs.faces.iter().enumerate() {
        let len = face.len();
        let corner = |p: usize| e.tail(face.steps[p].dart);
        let Some(anchor) = (0..len).find(|&p| !marked[corner(p)]) else {
            continue;
        };
        let mut face_chords = Vec::new();
        let mut p = anchor;
        loop {
            let mut q = (p + 1) % len;
            if marked[corner(q)] {
                while marked[corner(q)] {
                    q = (q + 1) % len;
                }
                face_chords.push((p, q));
            }
            p = q;
            if p == anchor {
                break;
            }
        }
        let unmarked = (0..len).filter(|&p| !marked[corner(p)]).count();
        let drop = matches!((face_chords.len(), unmarked), (1, 1) | (2, 2));
        for (p, q) in face_chords {
            let idx = chords.len();
            chords.push(Chord {
                face: fi,
                from_pos: p,
                to_pos: q,
                from: corner(p),
                to: corner(q),
                host_edge: None,
            });
            if !drop {
                let (kp, kq) = (gap_key(face, p).0, gap_key(face, q).0);
                gap_start[kp] = Some(idx);
                gap_orient[kp] = Some(face.steps[p].orient);
                gap_end[kq] = Some(idx);
                gap_orient[kq] = Some(face.steps[q].orient);
                kept.push(idx);
            }
        }
    }

    let m = e.edge_count();
    let mut edges = e.edges().to_vec();
    let mut signs = e.signs().to_vec();
    for &idx in &kept {
        let c = &mut chords[idx];
        let face = &fs.faces[c.face];
        c.host_edge = Some(edges.len());
        edges.push((c.from, c.to));
        signs.push(face.steps[c.from_pos].orient * face.steps[c.to_pos].orient);
    }
    let start_dart = |idx: usize| Dart::new(chords[idx].host_edge.unwrap(), 0);
    let end_dart = |idx: usize| Dart::new(chords[idx].host_edge.unwrap(), 1);
    let mut rotations = Vec::with_capacity(n);
    for v in 0..n {
        let rot = e.rotation(v);
        let mut out = Vec::with_capacity(rot.len());
        for &d in rot {
            out.push(d);
            match gap_orient[d.0] {
                Some(Sign::Plus) => {
                    out.extend(gap_end[d.0].map(end_dart));
                    out.extend(gap_start[d.0].map(start_dart));
                }
                Some(Sign::Minus) => {
                    out.extend(gap_start[d.0].map(start_dart));
                    out.extend(gap_end[d.0].map(end_dart));
                }
                None => {}
            }
        }
        rotations.push(out);
    }
    let host = Embedding::from_parts(n, edges, rotations, signs)?;
    let level_edges: Vec<usize> = (m..host.edge_count()).collect();
    let cycles = decompose_cycles(&host, &level_edges);
    let mut endpoint = vec![false; n];
    for &x in &level_edges {
        let (a, b) = host.edge(x);
        endpoint[a] = true;
        endpoint[b] = true;
    }
    let pockets = level.iter().copied().filter(|&v| !endpoint[v]).collect();
    Ok(LevelResult {
        host,
        level_edges,
        cycles,
        inner: (0..n).filter(|&v| marked[v]).collect(),
        level,
        pockets,
        chords,
    })
}

/// Level cycles around the faces `faces`: the marked region is the set of
/// vertices on their boundaries.
pub fn level_cycles(e: &Embedding, faces: &[usize]) -> Result<LevelResult> {
    let fs = e.faces();
    let mut marked = vec![false; e.vertex_count()];
    for &f in faces {
        let face = fs.faces.get(f).ok_or(Error::FaceOutOfRange(f))?;
        for d in face.darts() {
            marked[e.tail(d)] = true;
        }
    }
    level_chords(e, &marked)
}

/// Splits an even-degree edge set into edge-disjoint simple cycles.
pub fn decompose_cycles(e: &Embedding, edges: &[usize]) -> Vec<Vec<Dart>> {
    let mut used = vec![false; e.edge_count()];
    let mut incident: Vec<Vec<Dart>> = vec![Vec::new(); e.vertex_count()];
    for &x in edges {
        incident[e.edge(x).0].push(Dart::new(x, 0));
        incident[e.edge(x).1].push(Dart::new(x, 1));
    }
    let mut cursor = vec![0usize; e.vertex_count()];
    let mut cycles = Vec::new();
    let mut sorted: Vec<usize> = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut on_path: Vec<Option<usize>> = vec![None; e.vertex_count()];
    for &start in &sorted {
        if used[start] {
            continue;
        }
        let s = e.edge(start).0;
        let mut verts = vec![s];
        let mut path: Vec<Dart> = Vec::new();
        on_path[s] = Some(0);
        loop {
            let v = *verts.last().unwrap();
            let mut next = None;
            while cursor[v] < incident[v].len() {
                let d = incident[v][cursor[v]];
                cursor[v] += 1;
                if !used[d.edge()] {
                    next = Some(d);
                    break;
                }
            }
            let Some(d) = next else {
                debug_assert!(path.is_empty(), "edge set has an odd vertex");
                break;
            };
            used[d.edge()] = true;
            let w = e.head(d);
            path.push(d);
            if let Some(i) = on_path[w] {
                cycles.push(path.split_off(i));
                for &u in &verts[i + 1..] {
                    on_path[u] = None;
                }
                verts.truncate(i + 1);
            } else {
                on_path[w] = Some(verts.len());
                verts.push(w);
            }
        }
        for &u in &verts {
            on_path[u] = None;
        }
    }
    cycles
}

/// Checks the three level-construction guarantees against the embedding
/// and face set it was built from. Returns a description of the first
/// failure.
pub fn verify_level(e: &Embedding, faces: &[usize], r: &LevelResult) -> Result<(), String> {
    if r.host.total_euler_genus() != e.total_euler_genus() {
        return Err("level edges changed the surface".into());
    }
    for (x, &(a, b)) in e.edges().iter().enumerate() {
        if r.host.edge(x) != (a, b) {
            return Err(format!("host edge {x} differs from the input"));
        }
    }
    let mut endpoints = vec![false; e.vertex_count()];
    for &x in &r.level_edges {
        let (a, b) = r.host.edge(x);
        endpoints[a] = true;
        endpoints[b] = true;
    }
    let fs = e.faces();
    let mut on_boundary = vec![false; e.vertex_count()];
    for &f in faces {
        for d in fs.faces[f].darts() {
            on_boundary[e.tail(d)] = true;
        }
    }
    let g = e.graph();
    let dist = g.multi_source_bfs((0..e.vertex_count()).filter(|&v| on_boundary[v]));
    for v in 0..e.vertex_count() {
        let pocket = r.pockets.contains(&v);
        if endpoints[v] && dist[v] != 1 {
            return Err(format!("level endpoint {v} at distance {}", dist[v]));
        }
        if dist[v] == 1 && !endpoints[v] && !pocket {
            return Err(format!(
                "distance-1 vertex {v} is neither endpoint nor pocket"
            ));
        }
        if pocket && g.neighbors(v).iter().any(|&u| !on_boundary[u]) {
            return Err(format!("pocket {v} has a neighbour off the boundary"));
        }
    }
    let mut covered = vec![0usize; r.host.edge_count()];
    for c in &r.cycles {
        cycle_vertices(&r.host, c).map_err(|err| format!("bad level cycle: {err}"))?;
        for d in c {
            covered[d.edge()] += 1;
        }
    }
    for (x, &times) in covered.iter().enumerate() {
        let want = usize::from(r.level_edges.contains(&x));
        if times != want {
            return Err(format!("edge {x} covered {times} times by cycles"));
        }
    }
    let mut parity = vec![false; r.host.edge_count()];
    for &f in faces {
        for d in fs.faces[f].darts() {
            parity[d.edge()] ^= true;
        }
    }
    for &x in &r.level_edges {
        parity[x] ^= true;
    }
    let diff: Vec<usize> = (0..parity.len()).filter(|&x| parity[x]).collect();
    match homology::is_boundary_subgraph(&r.host, &diff) {
        Ok(true) => Ok(()),
        Ok(false) => Err("level edges are not homologous to the face boundaries".into()),
        Err(err) => Err(format!("homology check failed: {err}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn face_cycle(e: &Embedding, f: usize) -> Vec<Dart> {
        e.faces().faces[f].darts().collect()
    }

    /// Darts of the cycle through the given vertices, using the lowest edge
    /// for each hop.
    fn through(e: &Embedding, vs: &[usize]) -> Vec<Dart> {
        (0..vs.len())
            .map(|i| {
                let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                (0..e.dart_count())
                    .map(Dart)
                    .find(|&d| e.tail(d) == a && e.head(d) == b)
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn tetrahedron_faces_separate() {
        let t = named::tetrahedron();
        for f in 0..4 {
            let c = face_cycle(&t, f);
            assert!(is_separating(&t, &c).unwrap());
            let cut = cut_along(&t, &c).unwrap();
            assert_eq!(cut.components, 2);
        }
    }

    #[test]
    fn k7_face_separates_triangle_does_not() {
        let k7 = named::k7_torus();
        assert!(is_separating(&k7, &face_cycle(&k7, 0)).unwrap());
        let tri = through(&k7, &[0, 1, 2]);
        let sep = is_separating(&k7, &tri).unwrap();
        let edges: Vec<usize> = tri.iter().map(|d| d.edge()).collect();
        assert_eq!(sep, homology::is_boundary_subgraph(&k7, &edges).unwrap());
        assert!(!sep);
        let cut = cut_along(&k7, &tri).unwrap();
        assert!(!cut.one_sided);
        assert_eq!(cut.embedding.euler_genus().unwrap().euler_genus, 0);
    }

    #[test]
    fn projective_cut_is_one_sided() {
        let p = named::projective_loop();
        let cut = cut_along(&p, &[Dart(0)]).unwrap();
        assert!(cut.one_sided);
        assert_eq!(cut.copies.len(), 1);
        assert_eq!(cut.copies[0].len(), 2);
        assert_eq!(cut.embedding.euler_genus().unwrap().euler_genus, 0);
    }

    #[test]
    fn cut_and_contract_k7() {
        let k7 = named::k7_torus();
        let tri = through(&k7, &[0, 1, 2]);
        let c = cut_and_contract(&k7, &tri).unwrap();
        assert_eq!(c.embedding.euler_genus().unwrap().euler_genus, 0);
        assert!(c.embedding.norms().face_norm_sq < 126);
        assert_eq!(c.embedding.edge_count(), 18);
    }

    #[test]
    fn contraction_rejects_separating() {
        let t = named::tetrahedron();
        assert_eq!(
            cut_and_contract(&t, &face_cycle(&t, 0)).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn contracting_a_face_keeps_the_surface() {
        let cube = named::cube();
        for f in 0..6 {
            let c = contract_face_walks(&cube, &[face_cycle(&cube, f)]).unwrap();
            assert_eq!(c.embedding.euler_genus().unwrap().euler_genus, 0);
            assert_eq!(c.embedding.vertex_count(), 5);
        }
        let k7 = named::k7_torus();
        let c = contract_face_walks(&k7, &[face_cycle(&k7, 2)]).unwrap();
        assert_eq!(c.embedding.euler_genus().unwrap().euler_genus, 2);
    }

    #[test]
    fn non_face_is_rejected() {
        let k7 = named::k7_torus();
        let tri = through(&k7, &[0, 1, 2]);
        assert_eq!(
            contract_face_walks(&k7, &[tri]).unwrap_err(),
            Error::NotAFace
        );
    }

    #[test]
    fn cycle_validation() {
        let t = named::tetrahedron();
        let c = face_cycle(&t, 0);
        assert!(matches!(
            cycle_vertices(&t, &[c[0], c[2]]),
            Err(Error::NotACycle(_))
        ));
        assert!(matches!(cycle_vertices(&t, &[]), Err(Error::NotACycle(_))));
    }

    #[test]
    fn octahedron_level_is_opposite_triangle() {
        let o = named::octahedron();
        let r = level_cycles(&o, &[0]).unwrap();
        verify_level(&o, &[0], &r).unwrap();
        assert_eq!(r.cycles.len(), 1);
        assert_eq!(r.cycles[0].len(), 3);
        let mut vs: Vec<usize> = r.cycles[0].iter().map(|&d| r.host.tail(d)).collect();
        vs.sort_unstable();
        let face: Vec<usize> = o.faces().faces[0].darts().map(|d| o.tail(d)).collect();
        for v in &vs {
            assert!(!face.contains(v));
        }
        let edges: Vec<usize> = r.cycles[0].iter().map(|d| d.edge()).collect();
        assert!(is_separating(&r.host, &r.cycles[0]).unwrap());
        assert!(homology::is_boundary_subgraph(&r.host, &edges).unwrap());
    }

    #[test]
    fn tetrahedron_level_is_empty() {
        let t = named::tetrahedron();
        let r = level_cycles(&t, &[0]).unwrap();
        verify_level(&t, &[0], &r).unwrap();
        assert!(r.level_edges.is_empty());
        assert_eq!(r.pockets.len(), 1);
    }

    #[test]
    fn wheel_hub_faces_have_no_level() {
        let w = named::wheel(5);
        let fs = w.faces();
        let hub_faces: Vec<usize> = (0..fs.len())
            .filter(|&f| fs.faces[f].darts().any(|d| w.tail(d) == 0) && fs.faces[f].len() == 3)
            .collect();
        assert_eq!(hub_faces.len(), 5);
        assert_eq!(level_cycles(&w, &hub_faces).unwrap_err(), Error::EmptyLevel);
    }

    #[test]
    fn k7_level_keeps_homology() {
        let k7 = named::k7_torus();
        for f in 0..14 {
            match level_cycles(&k7, &[f]) {
                Ok(r) => verify_level(&k7, &[f], &r).unwrap(),
                Err(err) => panic!("face {f}: {err}"),
            }
        }
    }
}
