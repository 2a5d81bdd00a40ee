//! Maximum cliques of small graphs given as adjacency bitmasks.

/// Largest vertex count supported by the bitmask representation.
pub const MAX_VERTICES: usize = 128;

/// Builds adjacency masks from an edge list on `n <= 128` vertices.
pub fn masks(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<u128> {
    assert!(n <= MAX_VERTICES);
    let mut adj = vec![0u128; n];
    for (u, v) in edges {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Exact maximum clique (Bron–Kerbosch with Tomita pivoting). Among cliques
/// of maximum size the first one found is returned, sorted.
pub fn max_clique(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    assert!(n <= MAX_VERTICES);
    let all = if n == MAX_VERTICES {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut best = 0u128;
    expand(adj, 0, all, 0, &mut best);
    bits(best).collect()
}

fn expand(adj: &[u128], r: u128, mut p: u128, mut x: u128, best: &mut u128) {
    if p == 0 {
        if x == 0 && r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("non-empty");
    for v in bits(p & !adj[pivot]) {
        expand(adj, r | 1 << v, p & adj[v], x & adj[v], best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Greedy clique: repeatedly add the candidate with most candidate
/// neighbours, lowest index on ties.
pub fn greedy_clique(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    let mut cand: u128 = if n == MAX_VERTICES {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut clique = Vec::new();
    while cand != 0 {
        let v = bits(cand)
            .max_by_key(|&u| ((cand & adj[u]).count_ones(), std::cmp::Reverse(u)))
            .expect("non-empty");
        clique.push(v);
        cand &= adj[v];
    }
    clique.sort_unstable();
    clique
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_empty() {
        let k5 = masks(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))));
        assert_eq!(max_clique(&k5), vec![0, 1, 2, 3, 4]);
        assert_eq!(max_clique(&masks(3, [])).len(), 1);
        assert!(max_clique(&[]).is_empty());
    }

    #[test]
    fn petersen_clique_is_an_edge() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let adj = masks(10, edges);
        assert_eq!(max_clique(&adj).len(), 2);
        assert_eq!(greedy_clique(&adj).len(), 2);
    }

    #[test]
    fn triangle_plus_pendant() {
        let adj = masks(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        assert_eq!(max_clique(&adj), vec![0, 1, 2]);
    }
}
