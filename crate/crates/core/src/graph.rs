//! Plain undirected multigraphs and hop-metric utilities.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Distance marker for vertices not reached by a search.
pub const UNREACHED: usize = usize::MAX;

/// An undirected multigraph on vertices `0..vertex_count`.
///
/// Parallel edges and self-loops are allowed; a loop adds 2 to the degree of
/// its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
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
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    /// Builds a graph and rejects disconnected input.
    pub fn connected(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = Self::new(vertex_count, edges)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` in ascending order, with multiplicity.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_simple(&self) -> bool {
        self.adjacency
            .iter()
            .enumerate()
            .all(|(v, nbrs)| nbrs.windows(2).all(|w| w[0] != w[1]) && !nbrs.contains(&v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        component_labels(self.vertex_count, &self.edges).1
    }

    /// Hop distances from `source`; unreachable vertices get [`UNREACHED`].
    pub fn bfs(&self, source: usize) -> Vec<usize> {
        self.multi_source_bfs(std::iter::once(source))
    }

    /// Hop distance from each vertex to the nearest source.
    pub fn multi_source_bfs(&self, sources: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut dist = vec![UNREACHED; self.vertex_count];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHED {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count).map(|v| self.bfs(v)).collect()
    }

    /// Eccentricity maximum over all vertices.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.vertex_count {
            for d in self.bfs(v) {
                if d == UNREACHED {
                    return Err(Error::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Sum of squared degrees.
    pub fn degree_square_sum(&self) -> u64 {
        self.adjacency.iter().map(|a| (a.len() as u64).pow(2)).sum()
    }
}

/// Connected-component label per vertex plus the number of components.
pub fn component_labels(vertex_count: usize, edges: &[(usize, usize)]) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut label = vec![usize::MAX; vertex_count];
    let mut count = 0;
    for v in 0..vertex_count {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        label[v] = label[r];
    }
    (label, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    #[test]
    fn diameters() {
        assert_eq!(cycle(4).diameter().unwrap(), 2);
        let p5 = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.diameter().unwrap(), 4);
    }

    #[test]
    fn rejects_disconnected() {
        assert_eq!(
            Graph::connected(3, vec![(0, 1)]).unwrap_err(),
            Error::Disconnected
        );
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(g.diameter().unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn loops_count_twice() {
        let g = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn out_of_range_vertex() {
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }
}
