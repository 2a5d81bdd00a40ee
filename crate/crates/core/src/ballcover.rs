//! Ball systems of graphs under the hop metric: covers, hitting sets,
//! canonical shortest paths with the midpoint witness, shattering, and
//! apex-aware covers.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::clique;
use crate::embedding::Genus;
use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHED};

/// Radius-R balls around every vertex.
#[derive(Debug, Clone)]
pub struct BallSystem {
    graph: Graph,
    radius: usize,
    dist: Vec<Vec<usize>>,
    balls: Vec<Vec<usize>>,
}

pub fn build_balls(g: &Graph, radius: usize) -> Result<BallSystem> {
    let dist = g.all_pairs_distances();
    if dist.iter().flatten().any(|&d| d == UNREACHED) {
        return Err(Error::Disconnected);
    }
    let balls = dist
        .iter()
        .map(|row| (0..row.len()).filter(|&y| row[y] <= radius).collect())
        .collect();
    Ok(BallSystem {
        graph: g.clone(),
        radius,
        dist,
        balls,
    })
}

impl BallSystem {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn ball(&self, x: usize) -> &[usize] {
        &self.balls[x]
    }

    pub fn contains(&self, center: usize, y: usize) -> bool {
        self.dist[center][y] <= self.radius
    }

    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.dist[x][y]
    }

    /// Union of the balls around `centers` is the whole vertex set.
    pub fn is_cover(&self, centers: &[usize]) -> bool {
        let mut covered = vec![false; self.len()];
        for &c in centers {
            for &y in &self.balls[c] {
                covered[y] = true;
            }
        }
        covered.iter().all(|&c| c)
    }

    /// Every ball contains at least one of `points`.
    pub fn is_hitting_set(&self, points: &[usize]) -> bool {
        let mut mark = vec![false; self.len()];
        for &p in points {
            mark[p] = true;
        }
        self.balls.iter().all(|b| b.iter().any(|&y| mark[y]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverMethod {
    Greedy,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub centers: Vec<usize>,
    pub covered: bool,
    pub method: CoverMethod,
}

/// Greedy cover of `targets` using balls around `candidates`: largest
/// uncovered gain first, lowest id on ties. `None` if some target lies in
/// no candidate ball.
fn greedy_over(b: &BallSystem, candidates: &[usize], targets: &[bool]) -> Option<Vec<usize>> {
    let mut uncovered = targets.to_vec();
    let mut left = uncovered.iter().filter(|&&u| u).count();
    let mut centers = Vec::new();
    while left > 0 {
        let (gain, c) = candidates
            .iter()
            .map(|&c| (b.balls[c].iter().filter(|&&y| uncovered[y]).count(), c))
            .max_by_key(|&(gain, c)| (gain, std::cmp::Reverse(c)))?;
        if gain == 0 {
            return None;
        }
        for &y in &b.balls[c] {
            if std::mem::replace(&mut uncovered[y], false) {
                left -= 1;
            }
        }
        centers.push(c);
    }
    centers.sort_unstable();
    Some(centers)
}

pub fn greedy_cover(b: &BallSystem) -> CoverResult {
    let all: Vec<usize> = (0..b.len()).collect();
    let centers = greedy_over(b, &all, &vec![true; b.len()]).expect("every vertex is a center");
    CoverResult {
        covered: b.is_cover(&centers),
        centers,
        method: CoverMethod::Greedy,
    }
}

/// Minimum cover by exhaustive search over subsets of increasing size.
/// `cap` bounds the number of subsets examined.
pub fn exact_cover(b: &BallSystem, cap: usize) -> Result<CoverResult> {
    let n = b.len();
    if n > 64 {
        return Err(Error::TooLarge(format!(
            "{n} vertices; exact cover handles at most 64"
        )));
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let masks: Vec<u64> = b
        .balls
        .iter()
        .map(|ball| ball.iter().fold(0u64, |m, &y| m | 1 << y))
        .collect();
    let upper = greedy_cover(b).centers;
    let mut examined = 0usize;
    for k in 1..upper.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            examined += 1;
            if examined > cap {
                return Err(Error::CapExceeded(cap));
            }
            if idx.iter().fold(0u64, |m, &i| m | masks[i]) == full {
                return Ok(CoverResult {
                    centers: idx,
                    covered: true,
                    method: CoverMethod::Exact,
                });
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(CoverResult {
        covered: b.is_cover(&upper),
        centers: upper,
        method: CoverMethod::Exact,
    })
}

/// Advances a sorted index combination; false when exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Pairwise shortest paths between centers, normalised so that any two
/// intersect in at most one contiguous piece.
#[derive(Debug, Clone, Serialize)]
pub struct PathMatrix {
    pub centers: Vec<usize>,
    /// Path from `centers[i]` to `centers[j]` for every `i < j`.
    #[serde(serialize_with = "paths_as_list")]
    pub paths: BTreeMap<(usize, usize), Vec<usize>>,
    pub reroutes: usize,
}

fn paths_as_list<S: Serializer>(
    paths: &BTreeMap<(usize, usize), Vec<usize>>,
    s: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        i: usize,
        j: usize,
        path: &'a [usize],
    }
    s.collect_seq(paths.iter().map(|(&(i, j), path)| Entry { i, j, path }))
}

impl PathMatrix {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.paths.keys().copied().collect()
    }
}

/// Lexicographically smallest shortest path from `a` to `b`.
fn lex_path(g: &Graph, a: usize, dist_to_b: &[usize]) -> Vec<usize> {
    let mut path = vec![a];
    let mut cur = a;
    while dist_to_b[cur] > 0 {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist_to_b[w] + 1 == dist_to_b[cur])
            .expect("shortest path continues");
        path.push(cur);
    }
    path
}

/// True when the common vertices of `p` and `q` form one contiguous run in
/// both paths (or there are none).
pub fn simple_intersection(p: &[usize], q: &[usize]) -> bool {
    let contiguous = |a: &[usize], b: &[usize]| {
        let hits: Vec<usize> = (0..a.len()).filter(|&i| b.contains(&a[i])).collect();
        hits.windows(2).all(|w| w[1] == w[0] + 1)
    };
    contiguous(p, q) && contiguous(q, p)
}

/// Redirects `p` along `q` between the first and last vertices of `p` that
/// lie on `q`.
fn reroute(p: &[usize], q: &[usize]) -> Vec<usize> {
    let hits: Vec<usize> = (0..p.len()).filter(|&i| q.contains(&p[i])).collect();
    let (i, j) = (hits[0], hits[hits.len() - 1]);
    let qi = q.iter().position(|&v| v == p[i]).unwrap();
    let qj = q.iter().position(|&v| v == p[j]).unwrap();
    let middle: Vec<usize> = if qi <= qj {
        q[qi..=qj].to_vec()
    } else {
        q[qj..=qi].iter().rev().copied().collect()
    };
    let mut out = p[..i].to_vec();
    out.extend(middle);
    out.extend(&p[j + 1..]);
    out
}

pub fn canonical_paths(g: &Graph, centers: &[usize]) -> Result<PathMatrix> {
    check_centers(g, centers)?;
    let mut paths = BTreeMap::new();
    for j in 0..centers.len() {
        let dist = g.bfs(centers[j]);
        for i in 0..j {
            if dist[centers[i]] == UNREACHED {
                return Err(Error::Disconnected);
            }
            paths.insert((i, j), lex_path(g, centers[i], &dist));
        }
    }
    let keys: Vec<(usize, usize)> = paths.keys().copied().collect();
    let cap = 2 * keys.len() * keys.len().saturating_sub(1) / 2;
    let mut reroutes = 0;
    loop {
        let mut changed = false;
        for (a, &ka) in keys.iter().enumerate() {
            for &kb in &keys[a + 1..] {
                if !simple_intersection(&paths[&ka], &paths[&kb]) {
                    if reroutes >= cap {
                        return Err(Error::NormalizationFailed(reroutes));
                    }
                    let fixed = reroute(&paths[&kb], &paths[&ka]);
                    paths.insert(kb, fixed);
                    reroutes += 1;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(PathMatrix {
        centers: centers.to_vec(),
        paths,
        reroutes,
    })
}

fn check_centers(g: &Graph, centers: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.vertex_count()];
    for &c in centers {
        if c >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: c,
                count: g.vertex_count(),
            });
        }
        if std::mem::replace(&mut seen[c], true) {
            return Err(Error::DuplicateCenter);
        }
    }
    Ok(())
}

/// Vertex at position floor(len/2) of a shortest path of length at most 2R.
pub fn midpoint(path: &[usize], radius: usize) -> Result<usize> {
    let len = path.len().saturating_sub(1);
    if len > 2 * radius {
        return Err(Error::TooFar {
            distance: len,
            radius,
        });
    }
    Ok(path[len / 2])
}

#[derive(Debug, Clone, Serialize)]
pub struct PQWitness {
    pub centers: Vec<usize>,
    pub paths: PathMatrix,
    /// Center-index pairs of a largest set of pairwise intersecting paths
    /// with pairwise distinct endpoints.
    pub crossing_set: Vec<(usize, usize)>,
    pub witness_vertex: usize,
    /// The path whose midpoint is the witness.
    pub witness_path: (usize, usize),
    /// Indices into `centers` of the balls containing the witness.
    pub witnessed_balls: Vec<usize>,
    /// Intersecting path pairs checked against the midpoint claim, and the
    /// number that failed it.
    pub claim_checked: usize,
    pub claim_violations: usize,
}

impl PQWitness {
    /// `|witnessed_balls| >= (|P'| - 1)/2 + 2`, compared exactly; vacuous
    /// when fewer than two paths cross.
    pub fn averaging_bound_holds(&self) -> bool {
        self.crossing_set.len() < 2 || 2 * self.witnessed_balls.len() >= self.crossing_set.len() + 3
    }
}

/// Midpoint claim for two intersecting paths: one midpoint lies in a ball
/// around an endpoint of the other path.
pub fn midpoint_claim(
    b: &BallSystem,
    centers: &[usize],
    (i, j): (usize, usize),
    p: &[usize],
    (k, l): (usize, usize),
    q: &[usize],
) -> Result<bool> {
    let mp = midpoint(p, b.radius())?;
    let mq = midpoint(q, b.radius())?;
    Ok(b.contains(centers[k], mp)
        || b.contains(centers[l], mp)
        || b.contains(centers[i], mq)
        || b.contains(centers[j], mq))
}

pub fn pq_witness(g: &Graph, radius: usize, centers: &[usize]) -> Result<PQWitness> {
    check_centers(g, centers)?;
    let diameter = g.diameter()?;
    if diameter > 2 * radius {
        return Err(Error::DiameterExceeded { diameter, radius });
    }
    if centers.len() < 2 {
        return Err(Error::NoCrossingPair);
    }
    let b = build_balls(g, radius)?;
    let pm = canonical_paths(g, centers)?;
    let keys = pm.pairs();
    if keys.len() > clique::MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} paths; at most {} supported",
            keys.len(),
            clique::MAX_VERTICES
        )));
    }
    let path = |k: (usize, usize)| &pm.paths[&k];
    let mut claim_checked = 0;
    let mut claim_violations = 0;
    let mut crossing = Vec::new();
    for x in 0..keys.len() {
        for y in x + 1..keys.len() {
            let (ka, kb) = (keys[x], keys[y]);
            if !path(ka).iter().any(|v| path(kb).contains(v)) {
                continue;
            }
            claim_checked += 1;
            if !midpoint_claim(&b, centers, ka, path(ka), kb, path(kb))? {
                claim_violations += 1;
            }
            if ka.0 != kb.0 && ka.0 != kb.1 && ka.1 != kb.0 && ka.1 != kb.1 {
                crossing.push((x, y));
            }
        }
    }
    let adj = clique::masks(keys.len(), crossing);
    let mut crossing_set: Vec<(usize, usize)> = clique::max_clique(&adj)
        .into_iter()
        .map(|x| keys[x])
        .collect();
    if crossing_set.len() < 2 {
        crossing_set.clear();
    }
    let mut witness: Option<((usize, usize), usize, Vec<usize>)> = None;
    for &k in &keys {
        let m = midpoint(path(k), radius)?;
        let balls: Vec<usize> = (0..centers.len())
            .filter(|&c| b.contains(centers[c], m))
            .collect();
        if witness.as_ref().is_none_or(|w| balls.len() > w.2.len()) {
            witness = Some((k, m, balls));
        }
    }
    let (witness_path, witness_vertex, witnessed_balls) = witness.expect("at least one path");
    Ok(PQWitness {
        centers: centers.to_vec(),
        paths: pm,
        crossing_set,
        witness_vertex,
        witness_path,
        witnessed_balls,
        claim_checked,
        claim_violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShatterResult {
    pub dimension: usize,
    /// A largest shattered set found.
    pub witness: Vec<usize>,
    /// False when the search stopped at the cap; `dimension` is then a
    /// lower bound.
    pub exact: bool,
}

/// Smallest `n` such that `K_n` does not embed on the surface, from the
/// Ringel–Youngs formulas. Ball systems of graphs on that surface have
/// VC-dimension below this value.
pub fn forbidden_clique(surface: Genus) -> usize {
    let fits = |n: usize| {
        if n <= 4 {
            return true;
        }
        let t = (n - 3) * (n - 4);
        if surface.orientable {
            t.div_ceil(12) <= surface.euler_genus / 2
        } else if n == 7 {
            surface.euler_genus >= 3
        } else {
            t.div_ceil(6) <= surface.euler_genus
        }
    };
    (1..).find(|&n| !fits(n)).expect("unbounded search")
}

/// VC-dimension of the ball system by exhaustive search over vertex sets of
/// increasing size. `cap` bounds the number of candidate sets examined.
pub fn shatter_dimension(b: &BallSystem, cap: usize) -> Result<ShatterResult> {
    let n = b.len();
    if n > 64 {
        return Err(Error::TooLarge(format!(
            "{n} vertices; shattering handles at most 64"
        )));
    }
    let masks: Vec<u64> = b
        .balls
        .iter()
        .map(|ball| ball.iter().fold(0u64, |m, &y| m | 1 << y))
        .collect();
    let mut best = Vec::new();
    let mut examined = 0usize;
    let mut k = 1;
    // a shattered k-set needs 2^k distinct traces
    while k <= n && k < 64 && (1usize << k) <= n {
        let mut idx: Vec<usize> = (0..k).collect();
        let mut found = None;
        loop {
            examined += 1;
            if examined > cap {
                return Ok(ShatterResult {
                    dimension: best.len(),
                    witness: best,
                    exact: false,
                });
            }
            let x = idx.iter().fold(0u64, |m, &i| m | 1 << i);
            let mut traces: Vec<u64> = masks.iter().map(|&m| m & x).collect();
            traces.sort_unstable();
            traces.dedup();
            if traces.len() == 1 << k {
                found = Some(idx.clone());
                break;
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
        match found {
            Some(s) => best = s,
            None => break,
        }
        k += 1;
    }
    Ok(ShatterResult {
        dimension: best.len(),
        witness: best,
        exact: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApexCover {
    pub centers: Vec<usize>,
    pub covered: bool,
    pub apices: Vec<usize>,
    /// Centers chosen among balls avoiding the apices.
    pub restricted: Vec<usize>,
    /// Set when some vertex far from the apices lies only in balls meeting
    /// them and the unrestricted greedy cover was used instead.
    pub fallback: bool,
}

/// Cover made of the apices plus a greedy cover, by balls avoiding the
/// apices, of every vertex farther than R from them.
pub fn apex_cover(g: &Graph, radius: usize, apices: &[usize]) -> Result<ApexCover> {
    check_centers(g, apices)?;
    let b = build_balls(g, radius)?;
    let n = b.len();
    let mut near = vec![false; n];
    for &a in apices {
        for &y in b.ball(a) {
            near[y] = true;
        }
    }
    let targets: Vec<bool> = near.iter().map(|&x| !x).collect();
    let is_apex = |v: usize| apices.contains(&v);
    let candidates: Vec<usize> = (0..n)
        .filter(|&c| !b.ball(c).iter().any(|&y| is_apex(y)))
        .collect();
    let (restricted, fallback) = match greedy_over(&b, &candidates, &targets) {
        Some(c) => (c, false),
        None => {
            log::warn!("restricted cover infeasible; using unrestricted balls");
            let all: Vec<usize> = (0..n).collect();
            (greedy_over(&b, &all, &targets).expect("all balls"), true)
        }
    };
    let mut centers: Vec<usize> = apices.to_vec();
    centers.extend(&restricted);
    centers.sort_unstable();
    centers.dedup();
    Ok(ApexCover {
        covered: b.is_cover(&centers),
        centers,
        apices: apices.to_vec(),
        restricted,
        fallback,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn ball_sizes() {
        let c4 = build_balls(&named::cycle_graph(4), 1).unwrap();
        assert!((0..4).all(|x| c4.ball(x).len() == 3));
        let p5 = build_balls(&named::path_graph(5), 2).unwrap();
        assert_eq!(p5.ball(2), &[0, 1, 2, 3, 4]);
        let k7 = build_balls(&named::k7_torus().graph(), 1).unwrap();
        assert!((0..7).all(|x| k7.ball(x).len() == 7));
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(build_balls(&g, 1).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn greedy_examples() {
        let c4 = build_balls(&named::cycle_graph(4), 1).unwrap();
        assert_eq!(greedy_cover(&c4).centers.len(), 2);
        let p5 = build_balls(&named::path_graph(5), 2).unwrap();
        assert_eq!(greedy_cover(&p5).centers, vec![2]);
        let star = build_balls(&named::star_graph(6), 1).unwrap();
        assert_eq!(greedy_cover(&star).centers, vec![0]);
    }

    #[test]
    fn exact_examples() {
        let c4 = build_balls(&named::cycle_graph(4), 1).unwrap();
        assert_eq!(exact_cover(&c4, 1000).unwrap().centers.len(), 2);
        let c6 = build_balls(&named::cycle_graph(6), 1).unwrap();
        assert_eq!(exact_cover(&c6, 1000).unwrap().centers.len(), 2);
        let one = build_balls(&Graph::new(1, vec![]).unwrap(), 0).unwrap();
        assert_eq!(exact_cover(&one, 10).unwrap().centers, vec![0]);
        let c9 = build_balls(&named::cycle_graph(9), 1).unwrap();
        assert_eq!(exact_cover(&c9, 3).unwrap_err(), Error::CapExceeded(3));
    }

    #[test]
    fn cover_and_hitting_agree() {
        let g = named::petersen_graph();
        let b = build_balls(&g, 1).unwrap();
        for mask in 0u32..1 << 10 {
            let s: Vec<usize> = (0..10).filter(|&i| mask >> i & 1 == 1).collect();
            assert_eq!(b.is_cover(&s), b.is_hitting_set(&s));
        }
    }

    #[test]
    fn midpoints() {
        assert_eq!(midpoint(&[0, 1, 2, 3, 4], 2).unwrap(), 2);
        assert_eq!(midpoint(&[7, 8, 9, 10], 2).unwrap(), 8);
        assert_eq!(
            midpoint(&[0, 1, 2, 3, 4, 5], 2).unwrap_err(),
            Error::TooFar {
                distance: 5,
                radius: 2
            }
        );
    }

    #[test]
    fn grid_corner_paths_are_simple() {
        let g = named::grid_graph(3, 3);
        let pm = canonical_paths(&g, &[0, 2, 6, 8]).unwrap();
        assert_eq!(pm.paths.len(), 6);
        for (a, p) in &pm.paths {
            for (b, q) in &pm.paths {
                if a < b {
                    assert!(simple_intersection(p, q), "{p:?} {q:?}");
                }
            }
        }
    }

    #[test]
    fn c4_tie_is_deterministic() {
        let g = named::cycle_graph(4);
        let pm = canonical_paths(&g, &[0, 2]).unwrap();
        assert_eq!(pm.paths[&(0, 1)], vec![0, 1, 2]);
    }

    #[test]
    fn reroute_makes_intersection_simple() {
        let p = vec![0, 1, 2, 3, 4];
        let q = vec![9, 1, 7, 3, 8];
        assert!(!simple_intersection(&p, &q));
        let r = reroute(&p, &q);
        assert_eq!(r, vec![0, 1, 7, 3, 4]);
        assert!(simple_intersection(&r, &q));
    }

    #[test]
    fn complete_graph_witness() {
        let g = named::complete_graph(6);
        let w = pq_witness(&g, 1, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(w.witnessed_balls.len(), 6);
        assert_eq!(w.claim_violations, 0);
        assert!(w.averaging_bound_holds());
    }

    #[test]
    fn vc_examples() {
        let one = build_balls(&Graph::new(1, vec![]).unwrap(), 0).unwrap();
        assert_eq!(shatter_dimension(&one, 100).unwrap().dimension, 0);
        let c4 = build_balls(&named::cycle_graph(4), 1).unwrap();
        assert_eq!(shatter_dimension(&c4, 100).unwrap().dimension, 1);
    }

    #[test]
    fn apex_with_empty_set_is_greedy() {
        let g = named::petersen_graph();
        let b = build_balls(&g, 1).unwrap();
        let a = apex_cover(&g, 1, &[]).unwrap();
        assert_eq!(a.centers, greedy_cover(&b).centers);
        assert!(!a.fallback);
    }

    #[test]
    fn wheel_hub_apex() {
        let g = named::wheel(6).graph();
        let a = apex_cover(&g, 1, &[0]).unwrap();
        assert_eq!(a.centers, vec![0]);
        assert!(a.covered);
    }

    fn spider() -> Graph {
        Graph::new(
            9,
            vec![
                (0, 1),
                (1, 2),
                (0, 3),
                (3, 4),
                (0, 5),
                (5, 6),
                (0, 7),
                (7, 8),
            ],
        )
        .unwrap()
    }

    #[test]
    fn grid_with_corners_and_center() {
        let g = named::grid_graph(5, 5);
        let w = pq_witness(&g, 4, &[0, 4, 20, 24, 12]).unwrap();
        assert!(w.witnessed_balls.len() >= 4);
        let b = build_balls(&g, 4).unwrap();
        for &c in &w.witnessed_balls {
            assert!(b.ball(w.centers[c]).contains(&w.witness_vertex));
        }
        assert_eq!(w.claim_violations, 0);
        assert!(w.averaging_bound_holds());
    }

    #[test]
    fn spider_witness_is_centroid() {
        let g = spider();
        let w = pq_witness(&g, 2, &[2, 4, 6, 8]).unwrap();
        assert_eq!(w.witness_vertex, 0);
        assert_eq!(w.witnessed_balls.len(), 4);
        assert_eq!(w.crossing_set.len(), 2);
        assert!(w.averaging_bound_holds());
    }

    #[test]
    fn tree_paths_need_no_reroute() {
        let pm = canonical_paths(&spider(), &[2, 4, 6, 8, 0]).unwrap();
        assert_eq!(pm.reroutes, 0);
    }

    #[test]
    fn pq_preconditions() {
        let g = named::path_graph(5);
        assert_eq!(
            pq_witness(&g, 1, &[0, 4]).unwrap_err(),
            Error::DiameterExceeded {
                diameter: 4,
                radius: 1
            }
        );
        assert_eq!(
            pq_witness(&g, 2, &[0, 0]).unwrap_err(),
            Error::DuplicateCenter
        );
        assert_eq!(pq_witness(&g, 2, &[1]).unwrap_err(), Error::NoCrossingPair);
    }

    #[test]
    fn petersen_diameter() {
        assert_eq!(named::petersen_graph().diameter().unwrap(), 2);
    }

    #[test]
    fn k5_with_pendant_path() {
        let mut edges: Vec<(usize, usize)> = named::complete_graph(5).edges().to_vec();
        edges.extend([(4, 5), (5, 6), (6, 7)]);
        let g = Graph::new(8, edges).unwrap();
        let a = apex_cover(&g, 1, &[0]).unwrap();
        assert!(a.covered);
        assert!(!a.fallback);
        assert!(a.centers.contains(&0));
        assert!(build_balls(&g, 1).unwrap().is_cover(&a.centers));
    }

    #[test]
    fn greedy_within_log_factor() {
        for g in [
            named::petersen_graph(),
            named::grid_graph(4, 4),
            named::cycle_graph(11),
        ] {
            let b = build_balls(&g, 1).unwrap();
            let greedy = greedy_cover(&b).centers.len() as f64;
            let opt = exact_cover(&b, 1 << 20).unwrap().centers.len() as f64;
            assert!(greedy <= (1.0 + (g.vertex_count() as f64).ln()) * opt);
        }
    }

    #[test]
    fn forbidden_cliques() {
        let g = |euler_genus, orientable| Genus {
            euler_genus,
            orientable,
        };
        assert_eq!(forbidden_clique(g(0, true)), 5);
        assert_eq!(forbidden_clique(g(2, true)), 8);
        assert_eq!(forbidden_clique(g(4, true)), 9);
        assert_eq!(forbidden_clique(g(1, false)), 7);
        assert_eq!(forbidden_clique(g(2, false)), 7);
        assert_eq!(forbidden_clique(g(3, false)), 8);
    }

    #[test]
    fn witness_serializes() {
        let w = pq_witness(&named::complete_graph(4), 1, &[0, 1, 2]).unwrap();
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(v["paths"]["paths"].as_array().unwrap().len(), 3);
        assert_eq!(v["paths"]["paths"][0]["path"], serde_json::json!([0, 1]));
    }
}
