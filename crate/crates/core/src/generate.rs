//! Seeded instance generators: triangulations of prescribed surfaces,
//! random planar graphs, drawings with crossings, and tree decompositions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{Dart, Embedding, Face, Genus};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarize::{self, Drawing};
use crate::treedecomp::TreeDecomposition;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Insertion index for a new dart at corner `k` of `face`.
fn corner_slot(e: &Embedding, face: &Face, k: usize) -> (usize, usize) {
    let step = face.steps[k];
    let v = e.tail(step.dart);
    let key = if step.orient.is_plus() {
        step.dart
    } else {
        face.steps[(k + face.len() - 1) % face.len()].dart.twin()
    };
    (v, e.position(key))
}

/// Joins corners `i` and `j` of `face` by a new edge. Without a twist the
/// face is split in two; with one it stays a single longer face.
pub fn insert_chord(e: &mut Embedding, face: &Face, i: usize, j: usize, twisted: bool) -> usize {
    let (u, pu) = corner_slot(e, face, i);
    let (v, pv) = corner_slot(e, face, j);
    let mut sign = face.steps[i].orient * face.steps[j].orient;
    if twisted {
        sign = -sign;
    }
    e.insert_edge(u, pu, v, pv, sign)
}

/// Joins a corner of `f` to a corner of another face `g`, merging the two
/// faces; the Euler genus grows by 2. Orientable embeddings stay orientable.
fn insert_bridge(e: &mut Embedding, f: &Face, i: usize, g: &Face, j: usize) -> usize {
    let (u, pu) = corner_slot(e, f, i);
    let (v, pv) = corner_slot(e, g, j);
    let sign = f.steps[i].orient * g.steps[j].orient;
    if e.is_orientable() {
        let mut trial = e.clone();
        let x = trial.insert_edge(u, pu, v, pv, sign);
        if trial.is_orientable() {
            *e = trial;
            return x;
        }
        return e.insert_edge(u, pu, v, pv, -sign);
    }
    e.insert_edge(u, pu, v, pv, sign)
}

fn face_vertices(e: &Embedding, f: &Face) -> Vec<usize> {
    f.darts().map(|d| e.tail(d)).collect()
}

/// Chords triangulating the polygon `verts` without loops or parallel
/// edges, as pairs of positions.
fn simple_triangulation(
    verts: &[usize],
    adjacent: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<(usize, usize)>> {
    fn solve(
        verts: &[usize],
        idx: &[usize],
        adjacent: &dyn Fn(usize, usize) -> bool,
        used: &mut Vec<(usize, usize)>,
    ) -> bool {
        if idx.len() <= 3 {
            return true;
        }
        let (a, b) = (idx[0], idx[idx.len() - 1]);
        for k in 1..idx.len() - 1 {
            let c = idx[k];
            let mut fresh = Vec::new();
            let mut ok = true;
            for (x, y, side) in [(a, c, k == 1), (c, b, k == idx.len() - 2)] {
                if side {
                    continue;
                }
                let (p, q) = (verts[x].min(verts[y]), verts[x].max(verts[y]));
                if p == q
                    || adjacent(p, q)
                    || used
                        .iter()
                        .any(|&(s, t)| (verts[s].min(verts[t]), verts[s].max(verts[t])) == (p, q))
                {
                    ok = false;
                    break;
                }
                fresh.push((x, y));
            }
            if !ok {
                continue;
            }
            let before = used.len();
            used.extend(&fresh);
            if solve(verts, &idx[..=k], adjacent, used) && solve(verts, &idx[k..], adjacent, used) {
                return true;
            }
            used.truncate(before);
        }
        false
    }
    let idx: Vec<usize> = (0..verts.len()).collect();
    let mut used = Vec::new();
    solve(verts, &idx, adjacent, &mut used).then_some(used)
}

/// Splits every face of length above 3 into triangles. Chords are used when
/// the face admits a triangulation without parallel edges; otherwise a
/// valid chord or a new star vertex is inserted. Euler genus is unchanged.
pub fn retriangulate(e: &mut Embedding) {
    loop {
        let fs = e.faces();
        let Some(face) = fs.faces.iter().find(|f| f.len() > 3).cloned() else {
            return;
        };
        let verts = face_vertices(e, &face);
        let g = e.graph();
        let adjacent = |u: usize, v: usize| g.has_edge(u, v);
        if let Some(chords) = simple_triangulation(&verts, &adjacent) {
            let (i, j) = chords[0];
            insert_chord(e, &face, i, j, false);
            continue;
        }
        let mut distinct = verts.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == verts.len() {
            e.insert_star(&face);
            continue;
        }
        let n = verts.len();
        let chord = (0..n)
            .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == n - 1))
            .find(|&(i, j)| verts[i] != verts[j] && !adjacent(verts[i], verts[j]));
        match chord {
            Some((i, j)) => {
                insert_chord(e, &face, i, j, false);
            }
            None => {
                e.insert_star(&face);
            }
        }
    }
}

/// Stacked triangulation of the sphere on `n >= 3` vertices: a triangle
/// followed by vertices dropped into random faces.
pub fn planar_triangulation(n: usize, rng: &mut GenRng) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::ParamRange(format!(
            "triangulation needs n >= 3, got {n}"
        )));
    }
    let mut e = Embedding::from_neighbor_rotations(&[vec![1, 2], vec![2, 0], vec![0, 1]])?;
    while e.vertex_count() < n {
        let fs = e.faces();
        let f = fs.faces[rng.gen_range(0..fs.len())].clone();
        e.insert_star(&f);
    }
    Ok(e)
}

/// Adds a handle: a new edge between two faces, after which the merged face
/// is re-triangulated. Prefers faces with disjoint, non-adjacent vertex sets
/// so the result stays simple.
pub fn add_handle(e: &mut Embedding, rng: &mut GenRng) -> Result<()> {
    let before = e.euler_genus()?;
    let (fs, a, b) = loop {
        let fs = e.faces();
        if fs.len() < 2 {
            return Err(Error::ParamRange("a handle needs two faces".into()));
        }
        let g = e.graph();
        let verts: Vec<Vec<usize>> = fs.faces.iter().map(|f| face_vertices(e, f)).collect();
        let mut pairs = Vec::new();
        for a in 0..fs.len() {
            for b in a + 1..fs.len() {
                if verts[a]
                    .iter()
                    .all(|&x| verts[b].iter().all(|&y| x != y && !g.has_edge(x, y)))
                {
                    pairs.push((a, b));
                }
            }
        }
        match pairs.choose(rng) {
            Some(&(a, b)) => break (fs, a, b),
            None => {
                let f = fs.faces[rng.gen_range(0..fs.len())].clone();
                e.insert_star(&f);
            }
        }
    };
    let (fa, fb) = (fs.faces[a].clone(), fs.faces[b].clone());
    let i = rng.gen_range(0..fa.len());
    let j = rng.gen_range(0..fb.len());
    insert_bridge(e, &fa, i, &fb, j);
    retriangulate(e);
    let after = e.euler_genus()?;
    debug_assert_eq!(after.euler_genus, before.euler_genus + 2);
    debug_assert!(after.orientable == before.orientable);
    Ok(())
}

/// Adds a crosscap: an edge `ab` between two triangles `abc`, `bad` is
/// replaced by a twisted edge `cd`, and the resulting face is
/// re-triangulated. Euler genus grows by 1 and the surface becomes
/// non-orientable.
pub fn add_crosscap(e: &mut Embedding, rng: &mut GenRng) -> Result<()> {
    let before = e.euler_genus()?;
    let fs = e.faces();
    let g = e.graph();
    let apex = |f: usize, a: usize, b: usize| -> Option<usize> {
        let vs = face_vertices(e, &fs.faces[f]);
        if vs.len() != 3 {
            return None;
        }
        vs.into_iter().find(|&x| x != a && x != b)
    };
    let mut order: Vec<usize> = (0..e.edge_count()).collect();
    order.shuffle(rng);
    let mut chosen = None;
    for &x in &order {
        let (a, b) = e.edge(x);
        let [(f1, _), (f2, _)] = fs.edge_sides[x];
        if a == b || f1 == f2 {
            continue;
        }
        if let (Some(c), Some(d)) = (apex(f1, a, b), apex(f2, a, b)) {
            if c != d && !g.has_edge(c, d) {
                chosen = Some((x, c, d));
                break;
            }
        }
    }
    let Some((x, c, d)) = chosen else {
        // no suitable edge: twist a chord inside any face of length >= 2
        let f = fs
            .faces
            .iter()
            .max_by_key(|f| f.len())
            .cloned()
            .expect("a face");
        insert_chord(e, &f, 0, f.len() / 2, true);
        retriangulate(e);
        return Ok(());
    };
    let mut remove = vec![false; e.edge_count()];
    remove[x] = true;
    let (mut reduced, _) = e.delete_edges(&remove);
    let fs = reduced.faces();
    let quad = fs
        .faces
        .iter()
        .find(|f| {
            let vs = face_vertices(&reduced, f);
            f.len() == 4 && vs.contains(&c) && vs.contains(&d)
        })
        .cloned()
        .expect("two triangles merge into a quadrilateral");
    let vs = face_vertices(&reduced, &quad);
    let i = vs.iter().position(|&v| v == c).unwrap();
    let j = vs.iter().position(|&v| v == d).unwrap();
    insert_chord(&mut reduced, &quad, i, j, true);
    retriangulate(&mut reduced);
    *e = reduced;
    let after = e.euler_genus()?;
    debug_assert_eq!(after.euler_genus, before.euler_genus + 1);
    debug_assert!(!after.orientable);
    Ok(())
}

/// Triangulation of the surface with Euler genus `eg`, starting from a
/// stacked sphere triangulation on `base` vertices. Orientable targets need
/// even `eg`; non-orientable ones need `eg >= 1`.
pub fn surface_triangulation(
    base: usize,
    eg: usize,
    orientable: bool,
    rng: &mut GenRng,
) -> Result<Embedding> {
    if orientable && eg % 2 == 1 {
        return Err(Error::ParamRange(format!(
            "orientable surfaces have even Euler genus, got {eg}"
        )));
    }
    if !orientable && eg == 0 {
        return Err(Error::ParamRange(
            "a non-orientable surface has Euler genus >= 1".into(),
        ));
    }
    let mut e = planar_triangulation(base, rng)?;
    if orientable {
        for _ in 0..eg / 2 {
            add_handle(&mut e, rng)?;
        }
    } else {
        for _ in 0..eg {
            add_crosscap(&mut e, rng)?;
        }
    }
    let got = e.euler_genus()?;
    if got
        != (Genus {
            euler_genus: eg,
            orientable,
        })
    {
        return Err(Error::MalformedRotation(format!(
            "generator produced Euler genus {} (orientable {}), wanted {eg}",
            got.euler_genus, got.orientable
        )));
    }
    Ok(e)
}

/// Orientable genus-`g` triangulation.
pub fn genus_g_triangulation(g: usize, rng: &mut GenRng) -> Result<Embedding> {
    surface_triangulation(8 + 6 * g, 2 * g, true, rng)
}

/// Triangulation of the torus on `n >= 7` vertices: a triangulated p x q
/// grid with wrap-around (p, q >= 3), or K7 for n < 9, plus random stacked
/// vertices up to `n`.
pub fn toroidal_triangulation(n: usize, rng: &mut GenRng) -> Result<Embedding> {
    if n < 7 {
        return Err(Error::ParamRange(format!(
            "a simple torus triangulation needs at least 7 vertices, got {n}"
        )));
    }
    let mut e = if n < 9 {
        crate::named::k7_torus()
    } else {
        let (mut p, mut q) = (3, 3);
        for a in 3..=n {
            for b in a..=n / a {
                if a * b <= n && a * b > p * q {
                    (p, q) = (a, b);
                }
            }
        }
        torus_grid(p, q)
    };
    while e.vertex_count() < n {
        let fs = e.faces();
        let f = fs.faces[rng.gen_range(0..fs.len())].clone();
        e.insert_star(&f);
    }
    Ok(e)
}

/// Triangulated p x q grid on the torus.
pub fn torus_grid(p: usize, q: usize) -> Embedding {
    assert!(p >= 3 && q >= 3);
    let id = |i: usize, j: usize| (i % p) * q + j % q;
    let order: Vec<Vec<usize>> = (0..p * q)
        .map(|v| {
            let (i, j) = (v / q + p, v % q + q);
            vec![
                id(i, j + 1),
                id(i + 1, j + 1),
                id(i + 1, j),
                id(i, j - 1),
                id(i - 1, j - 1),
                id(i - 1, j),
            ]
        })
        .collect();
    Embedding::from_neighbor_rotations(&order).expect("torus grid")
}

/// Deletes random edges whose two sides lie on different faces, keeping the
/// embedding connected; the Euler genus is unchanged.
pub fn thin_edges(e: &Embedding, fraction: f64, rng: &mut GenRng) -> Embedding {
    let mut cur = e.clone();
    let target = (e.edge_count() as f64 * fraction) as usize;
    let mut removed = 0;
    let mut attempts = 0;
    while removed < target && attempts < 4 * e.edge_count() {
        attempts += 1;
        let fs = cur.faces();
        let x = rng.gen_range(0..cur.edge_count());
        if fs.edge_sides[x][0].0 == fs.edge_sides[x][1].0 {
            continue;
        }
        let mut remove = vec![false; cur.edge_count()];
        remove[x] = true;
        let (next, _) = cur.delete_edges(&remove);
        if next.is_connected() {
            cur = next;
            removed += 1;
        }
    }
    cur
}

/// Random connected embedding of Euler genus `eg` with roughly `n`
/// vertices; some edges are thinned so faces vary in length.
pub fn random_surface_embedding(
    n: usize,
    eg: usize,
    orientable: bool,
    rng: &mut GenRng,
) -> Result<Embedding> {
    let e = if eg == 0 {
        planar_triangulation(n.max(3), rng)?
    } else {
        let base = n.saturating_sub(if orientable { 0 } else { 2 * eg }).max(8);
        surface_triangulation(base, eg, orientable, rng)?
    };
    let fraction = rng.gen_range(0.0..0.3);
    Ok(thin_edges(&e, fraction, rng))
}

/// Random connected planar graph: a stacked triangulation with a random
/// fraction of edges removed while staying connected.
pub fn random_planar_graph(n: usize, drop: f64, rng: &mut GenRng) -> Result<Graph> {
    match n {
        0 => return Err(Error::ParamRange("n must be positive".into())),
        1 => return Graph::new(1, vec![]),
        2 => return Graph::new(2, vec![(0, 1)]),
        _ => {}
    }
    let e = planar_triangulation(n, rng)?;
    let mut edges = e.edges().to_vec();
    edges.shuffle(rng);
    let mut kept = edges.clone();
    for x in edges {
        if rng.gen_bool(drop.clamp(0.0, 1.0)) {
            let trial: Vec<(usize, usize)> = kept.iter().copied().filter(|&y| y != x).collect();
            if Graph::new(n, trial.clone())?.is_connected() {
                kept = trial;
            }
        }
    }
    kept.sort_unstable();
    Graph::new(n, kept)
}

/// Random straight-line drawing of a connected graph on `n` points with
/// between 1 and `max_crossings` crossings, whose host is then lifted to a
/// surface of Euler genus `2 * handles` by bridges between original
/// vertices.
pub fn random_drawing(
    n: usize,
    max_crossings: usize,
    handles: usize,
    rng: &mut GenRng,
) -> Result<Drawing> {
    if n < 4 {
        return Err(Error::ParamRange(format!("drawings need n >= 4, got {n}")));
    }
    for _ in 0..1000 {
        let points: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(0..1000) as f64, rng.gen_range(0..1000) as f64))
            .collect();
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let extra = rng.gen_range(1..=n);
        for _ in 0..extra {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v
                && !edges.contains(&(u.min(v), u.max(v)))
                && !edges.contains(&(u.max(v), u.min(v)))
            {
                edges.push((u.min(v), u.max(v)));
            }
        }
        let Ok(d) = planarize::straight_line_drawing(&points, &edges) else {
            continue;
        };
        let chi = d.crossings().len();
        if chi == 0 || chi > max_crossings {
            continue;
        }
        if let Ok(lifted) = lift_drawing(&d, handles, rng) {
            return Ok(lifted);
        }
    }
    Err(Error::ParamRange(
        "could not sample a drawing within the crossing limit".into(),
    ))
}

/// Adds `handles` bridges between original vertices lying on different
/// faces of the host; each becomes a one-edge arc.
pub fn lift_drawing(d: &Drawing, handles: usize, rng: &mut GenRng) -> Result<Drawing> {
    let mut host = d.host().clone();
    let mut arcs = d.arcs().to_vec();
    for _ in 0..handles {
        let fs = host.faces();
        let g = host.graph();
        let mut corners: Vec<(usize, usize)> = Vec::new();
        for (f, face) in fs.faces.iter().enumerate() {
            for (k, step) in face.steps.iter().enumerate() {
                if !d.is_crossing(host.tail(step.dart)) {
                    corners.push((f, k));
                }
            }
        }
        let mut done = false;
        for _ in 0..500 {
            let &(fa, ka) = corners.choose(rng).expect("original vertices exist");
            let &(fb, kb) = corners.choose(rng).expect("original vertices exist");
            let (u, v) = (
                host.tail(fs.faces[fa].steps[ka].dart),
                host.tail(fs.faces[fb].steps[kb].dart),
            );
            if fa == fb || u == v || g.has_edge(u, v) {
                continue;
            }
            let x = insert_bridge(
                &mut host,
                &fs.faces[fa].clone(),
                ka,
                &fs.faces[fb].clone(),
                kb,
            );
            arcs.push(vec![Dart::new(x, 0)]);
            done = true;
            break;
        }
        if !done {
            return Err(Error::ParamRange("no room for another handle".into()));
        }
    }
    Drawing::new(host, d.crossings().to_vec(), arcs)
}

/// Tree decomposition from an elimination order: each vertex's bag holds it
/// and its later neighbours in the filled graph.
pub fn elimination_decomposition(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut nbrs: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| w != v).collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent_vertex = Vec::with_capacity(n);
    for &v in order {
        let later: Vec<usize> = nbrs[v]
            .iter()
            .copied()
            .filter(|&w| rank[w] > rank[v])
            .collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    nbrs[a].insert(b);
                }
            }
        }
        parent_vertex.push(later.iter().copied().min_by_key(|&w| rank[w]));
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    let last = n.saturating_sub(1);
    let edges = parent_vertex
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != last)
        .map(|(i, p)| (i, p.map_or(last, |w| rank[w])))
        .collect();
    TreeDecomposition::new(bags, edges)
}

/// Elimination by minimum current degree, lowest id on ties.
pub fn min_degree_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut nbrs: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| w != v).collect())
        .collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (nbrs[v].len(), v))
            .unwrap();
        alive[v] = false;
        let later: Vec<usize> = nbrs[v].iter().copied().collect();
        for &a in &later {
            nbrs[a].remove(&v);
            for &b in &later {
                if a != b {
                    nbrs[a].insert(b);
                }
            }
        }
        order.push(v);
    }
    order
}

/// Decomposition from a random elimination order, with random redundant
/// leaf nodes attached so the tree has more shape.
pub fn random_tree_decomposition(g: &Graph, rng: &mut GenRng) -> TreeDecomposition {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    if rng.gen_bool(0.5) {
        order = min_degree_order(g);
    } else {
        order.shuffle(rng);
    }
    let mut td = elimination_decomposition(g, &order);
    let extra = rng.gen_range(0..=td.node_count() / 2);
    for _ in 0..extra {
        let host = rng.gen_range(0..td.node_count());
        let mut bag = td.bags[host].clone();
        bag.retain(|_| rng.gen_bool(0.6));
        td.bags.push(bag);
        td.edges.push((host, td.bags.len() - 1));
    }
    td
}

/// Random connected graph: a random spanning tree plus edges added with
/// probability `p`.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut GenRng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ParamRange("n must be positive".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedecomp::validate_td;

    #[test]
    fn planar_triangulations_are_spheres() {
        let mut r = rng(1);
        for n in 3..30 {
            let e = planar_triangulation(n, &mut r).unwrap();
            assert_eq!(e.vertex_count(), n);
            assert_eq!(e.edge_count(), 3 * n - 6);
            assert_eq!(e.euler_genus().unwrap().euler_genus, 0);
            assert!(e.graph().is_simple());
        }
    }

    #[test]
    fn handles_and_crosscaps() {
        let mut r = rng(2);
        for eg in 0..=6 {
            if eg % 2 == 0 {
                let e = surface_triangulation(12, eg, true, &mut r).unwrap();
                assert!(e.faces().faces.iter().all(|f| f.len() == 3));
                assert!(e.graph().is_simple(), "orientable eg {eg}");
            }
            if eg > 0 {
                let e = surface_triangulation(12, eg, false, &mut r).unwrap();
                assert!(e.faces().faces.iter().all(|f| f.len() == 3));
                assert!(e.graph().is_simple(), "non-orientable eg {eg}");
            }
        }
    }

    #[test]
    fn torus_grid_is_a_torus() {
        let e = torus_grid(3, 4);
        let g = e.euler_genus().unwrap();
        assert_eq!((g.euler_genus, g.orientable), (2, true));
        let mut r = rng(7);
        for n in 7..20 {
            let e = toroidal_triangulation(n, &mut r).unwrap();
            assert_eq!(e.vertex_count(), n);
            assert_eq!(e.euler_genus().unwrap().euler_genus, 2);
            assert!(e.graph().is_simple());
        }
        assert!(toroidal_triangulation(6, &mut r).is_err());
    }

    #[test]
    fn genus_g_is_certified() {
        let mut r = rng(1);
        for g in 0..4 {
            let e = genus_g_triangulation(g, &mut r).unwrap();
            assert_eq!(e.euler_genus().unwrap().euler_genus, 2 * g);
        }
    }

    #[test]
    fn thinning_keeps_genus() {
        let mut r = rng(3);
        let e = surface_triangulation(15, 3, false, &mut r).unwrap();
        let t = thin_edges(&e, 0.3, &mut r);
        assert!(t.edge_count() < e.edge_count());
        assert_eq!(t.euler_genus().unwrap(), e.euler_genus().unwrap());
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_surface_embedding(20, 3, false, &mut rng(9)).unwrap();
        let b = random_surface_embedding(20, 3, false, &mut rng(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_planar_graphs_are_connected() {
        let mut r = rng(4);
        for n in 1..13 {
            let g = random_planar_graph(n, 0.4, &mut r).unwrap();
            assert!(g.is_connected());
            assert!(g.edge_count() <= (3 * n).saturating_sub(6).max(n.saturating_sub(1)));
        }
    }

    #[test]
    fn drawings_have_lifted_hosts() {
        let mut r = rng(5);
        for handles in 0..3 {
            let d = random_drawing(8, 10, handles, &mut r).unwrap();
            assert!((1..=10).contains(&d.crossings().len()));
            assert_eq!(d.host().euler_genus().unwrap().euler_genus, 2 * handles);
        }
    }

    #[test]
    fn elimination_decompositions_are_valid() {
        let mut r = rng(6);
        for n in 1..15 {
            let g = random_connected_graph(n, 0.3, &mut r).unwrap();
            let td = random_tree_decomposition(&g, &mut r);
            validate_td(&g, &td).unwrap();
            let td = elimination_decomposition(&g, &min_degree_order(&g));
            validate_td(&g, &td).unwrap();
        }
    }
}
