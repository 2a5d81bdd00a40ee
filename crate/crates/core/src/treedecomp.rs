//! Tree decompositions: validation, PACE and JSON formats, and the search
//! for a central node whose bag is within distance R of every vertex.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHED};

/// Bags on the nodes of a tree. Nodes are `0..bags.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Sorts and deduplicates every bag.
    pub fn new(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Self { bags, edges }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one (0 for a decomposition of empty bags).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn tree_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    fn check_tree(&self) -> Result<()> {
        let n = self.node_count();
        if n == 0 {
            return Err(Error::MalformedTree("no nodes".into()));
        }
        if self.edges.len() != n - 1 {
            return Err(Error::MalformedTree(format!(
                "{} nodes but {} edges",
                n,
                self.edges.len()
            )));
        }
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return Err(Error::MalformedTree(format!(
                    "edge ({a}, {b}) names a missing node"
                )));
            }
            if a == b {
                return Err(Error::MalformedTree(format!("loop at node {a}")));
            }
        }
        let (_, parts) = crate::graph::component_labels(n, &self.edges);
        if parts != 1 {
            return Err(Error::MalformedTree("tree is not connected".into()));
        }
        Ok(())
    }
}

/// Checks the three decomposition conditions and returns the width.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Result<usize> {
    td.check_tree()?;
    let n = g.vertex_count();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: n,
                });
            }
            holders[v].push(node);
        }
    }
    if let Some(v) = (0..n).find(|&v| holders[v].is_empty()) {
        return Err(Error::NotCovering(v));
    }
    let mut unhoused: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .filter(|&(u, v)| {
            !holders[u]
                .iter()
                .any(|a| td.bags[*a].binary_search(&v).is_ok())
        })
        .collect();
    unhoused.sort_unstable();
    if let Some(&(u, v)) = unhoused.first() {
        return Err(Error::EdgeUnhoused(u, v));
    }
    let adj = td.tree_neighbors();
    for (v, held) in holders.iter().enumerate() {
        if let Some((a, b, c)) = running_intersection_witness(td, &adj, v, held) {
            return Err(Error::NotRunningIntersection { vertex: v, a, b, c });
        }
    }
    Ok(td.width())
}

/// Nodes `a`, `c` holding `v` with a node `b` between them that does not.
fn running_intersection_witness(
    td: &TreeDecomposition,
    adj: &[Vec<usize>],
    v: usize,
    holders: &[usize],
) -> Option<(usize, usize, usize)> {
    let a = holders[0];
    let parent = tree_parents(adj, a);
    for &c in &holders[1..] {
        let mut x = c;
        while x != a {
            x = parent[x];
            if x != a && td.bags[x].binary_search(&v).is_err() {
                return Some((a, x, c));
            }
        }
    }
    None
}

fn tree_parents(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    let mut parent = vec![UNREACHED; adj.len()];
    parent[root] = root;
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if parent[y] == UNREACHED {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    parent
}

/// Parses the PACE `.td` format (1-indexed nodes and vertices). Returns the
/// decomposition with 0-indexed ids and the declared vertex count.
pub fn parse_pace_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    let num = |tok: &str, line: usize| -> Result<usize> {
        tok.parse()
            .map_err(|_| Error::Parse(format!("line {line}: expected an integer, found {tok:?}")))
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("s") => {
                if header.is_some() {
                    return Err(Error::Parse(format!("line {line}: second solution line")));
                }
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(Error::Parse(format!(
                        "line {line}: expected `s td <bags> <width+1> <n>`"
                    )));
                }
                let h = (
                    num(toks[2], line)?,
                    num(toks[3], line)?,
                    num(toks[4], line)?,
                );
                bags = vec![None; h.0];
                header = Some(h);
            }
            Some("b") => {
                let (count, _, n) = header
                    .ok_or_else(|| Error::Parse(format!("line {line}: bag before header")))?;
                if toks.len() < 2 {
                    return Err(Error::Parse(format!("line {line}: bag without id")));
                }
                let id = num(toks[1], line)?;
                if id == 0 || id > count {
                    return Err(Error::Parse(format!(
                        "line {line}: bag id {id} out of range"
                    )));
                }
                let mut bag = Vec::new();
                for t in &toks[2..] {
                    let v = num(t, line)?;
                    if v == 0 || v > n {
                        return Err(Error::Parse(format!(
                            "line {line}: vertex {v} out of range"
                        )));
                    }
                    bag.push(v - 1);
                }
                if bags[id - 1].replace(bag).is_some() {
                    return Err(Error::Parse(format!("line {line}: bag {id} repeated")));
                }
            }
            Some(_) => {
                let (count, _, _) = header
                    .ok_or_else(|| Error::Parse(format!("line {line}: edge before header")))?;
                if toks.len() != 2 {
                    return Err(Error::Parse(format!(
                        "line {line}: expected a tree edge `a b`"
                    )));
                }
                let (a, b) = (num(toks[0], line)?, num(toks[1], line)?);
                if a == 0 || b == 0 || a > count || b > count {
                    return Err(Error::Parse(format!(
                        "line {line}: tree edge ({a}, {b}) out of range"
                    )));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, declared, n) = header.ok_or_else(|| Error::Parse("missing `s td` line".into()))?;
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::Parse(format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    let td = TreeDecomposition::new(bags, edges);
    let largest = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    if largest != declared {
        return Err(Error::Parse(format!(
            "header declares largest bag {declared}, found {largest}"
        )));
    }
    Ok((td, n))
}

pub fn write_pace_td(td: &TreeDecomposition, vertex_count: usize) -> String {
    let largest = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.node_count(), largest, vertex_count);
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// Parses the PACE `.gr` graph format (`p tw <n> <m>`, 1-indexed edges).
pub fn parse_pace_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let bad = || Error::Parse(format!("line {line}: malformed {raw:?}"));
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if toks.len() != 4 || toks[1] != "tw" || header.is_some() {
                    return Err(bad());
                }
                header = Some((
                    toks[2].parse().map_err(|_| bad())?,
                    toks[3].parse().map_err(|_| bad())?,
                ));
            }
            Some(_) => {
                let (n, _) = header.ok_or_else(bad)?;
                if toks.len() != 2 {
                    return Err(bad());
                }
                let u: usize = toks[0].parse().map_err(|_| bad())?;
                let v: usize = toks[1].parse().map_err(|_| bad())?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(bad());
                }
                edges.push((u - 1, v - 1));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse("missing `p tw` line".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

pub fn td_from_json(text: &str) -> Result<TreeDecomposition> {
    let td: TreeDecomposition =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(TreeDecomposition::new(td.bags, td.edges))
}

pub fn td_to_json(td: &TreeDecomposition) -> String {
    serde_json::to_string_pretty(td).expect("serialisable")
}

/// One move of the search: the node left, the subtree entered, and how far
/// its furthest vertex was from the bag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStep {
    pub from: usize,
    pub to: usize,
    pub furthest_vertex: usize,
    pub furthest_distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralNode {
    pub node: usize,
    pub start: usize,
    /// The bag of `node`: every vertex is within R of it, and it has at most
    /// width + 1 vertices.
    pub certificate: Vec<usize>,
    pub max_distance: usize,
    pub steps: Vec<SearchStep>,
    /// Nodes at which a component farther than R had a sibling component at
    /// distance R or more.
    pub uniqueness_violations: Vec<usize>,
}

/// Walks the decomposition tree from `start` (lowest node by default)
/// towards the subtree containing a vertex farther than R from the current
/// bag until the bag is within R of every vertex.
pub fn central_node(
    g: &Graph,
    td: &TreeDecomposition,
    radius: usize,
    start: Option<usize>,
) -> Result<CentralNode> {
    validate_td(g, td)?;
    let diameter = g.diameter()?;
    if diameter > 2 * radius {
        return Err(Error::DiameterExceeded { diameter, radius });
    }
    let start = start.unwrap_or(0);
    if start >= td.node_count() {
        return Err(Error::ParamRange(format!(
            "start node {start} out of range ({} nodes)",
            td.node_count()
        )));
    }
    let adj = td.tree_neighbors();
    let mut steps: Vec<SearchStep> = Vec::new();
    let mut uniqueness_violations = Vec::new();
    let mut current = start;
    let mut previous: Option<usize> = None;
    loop {
        let bag = &td.bags[current];
        let dist = g.multi_source_bfs(bag.iter().copied());
        let max_distance = dist.iter().copied().max().unwrap_or(0);
        if max_distance <= radius {
            log::debug!("central node {current} after {} moves", steps.len());
            return Ok(CentralNode {
                node: current,
                start,
                certificate: bag.clone(),
                max_distance,
                steps,
                uniqueness_violations,
            });
        }
        let mut far: Vec<(usize, usize, usize)> = Vec::new();
        let mut near_max = 0;
        for &p in &adj[current] {
            let part = subtree_vertices(td, &adj, current, p, g.vertex_count());
            let furthest = part.iter().map(|&x| (dist[x], std::cmp::Reverse(x))).max();
            match furthest {
                Some((d, std::cmp::Reverse(x))) if d > radius => far.push((p, x, d)),
                Some((d, _)) => near_max = near_max.max(d),
                None => {}
            }
        }
        let sibling_far = far.len() > 1 || (!far.is_empty() && near_max >= radius);
        if sibling_far {
            uniqueness_violations.push(current);
        }
        debug_assert!(
            !sibling_far,
            "two components reach distance R at node {current}"
        );
        let &(next, furthest_vertex, furthest_distance) =
            far.first().expect("a vertex beyond R lies in some subtree");
        if previous == Some(next) {
            return Err(Error::OscillationDetected(current, next));
        }
        steps.push(SearchStep {
            from: current,
            to: next,
            furthest_vertex,
            furthest_distance,
        });
        if steps.len() > td.node_count() {
            return Err(Error::OscillationDetected(current, next));
        }
        previous = Some(current);
        current = next;
    }
}

/// Vertices in bags of the subtree entered from `root` through `child`,
/// minus the bag of `root`.
fn subtree_vertices(
    td: &TreeDecomposition,
    adj: &[Vec<usize>],
    root: usize,
    child: usize,
    vertex_count: usize,
) -> Vec<usize> {
    let mut seen = vec![false; vertex_count];
    let mut visited = vec![false; td.node_count()];
    visited[root] = true;
    visited[child] = true;
    let mut stack = vec![child];
    while let Some(x) = stack.pop() {
        for &v in &td.bags[x] {
            seen[v] = true;
        }
        for &y in &adj[x] {
            if !std::mem::replace(&mut visited[y], true) {
                stack.push(y);
            }
        }
    }
    for &v in &td.bags[root] {
        seen[v] = false;
    }
    (0..vertex_count).filter(|&v| seen[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn p5_td() -> TreeDecomposition {
        TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]],
            vec![(0, 1), (1, 2), (2, 3)],
        )
    }

    #[test]
    fn path_decomposition_has_width_one() {
        assert_eq!(validate_td(&named::path_graph(5), &p5_td()).unwrap(), 1);
    }

    #[test]
    fn single_bag_width() {
        let g = named::petersen_graph();
        let td = TreeDecomposition::new(vec![(0..10).collect()], vec![]);
        assert_eq!(validate_td(&g, &td).unwrap(), 9);
    }

    #[test]
    fn validation_witnesses() {
        let g = named::path_graph(4);
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![2, 3]], vec![(0, 1)]);
        assert_eq!(validate_td(&g, &td).unwrap_err(), Error::EdgeUnhoused(1, 2));
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        assert_eq!(validate_td(&g, &td).unwrap_err(), Error::NotCovering(3));
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3, 0]],
            vec![(0, 1), (1, 2)],
        );
        assert_eq!(
            validate_td(&g, &td).unwrap_err(),
            Error::NotRunningIntersection {
                vertex: 0,
                a: 0,
                b: 1,
                c: 2
            }
        );
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1)]);
        assert!(matches!(
            validate_td(&g, &td).unwrap_err(),
            Error::MalformedTree(_)
        ));
    }

    #[test]
    fn p5_search() {
        let g = named::path_graph(5);
        let c = central_node(&g, &p5_td(), 2, None).unwrap();
        assert_eq!(c.start, 0);
        assert_eq!(c.node, 1);
        assert_eq!(c.certificate, vec![1, 2]);
        assert!(c.uniqueness_violations.is_empty());
        for start in 0..4 {
            let c = central_node(&g, &p5_td(), 2, Some(start)).unwrap();
            assert!(c.node == 1 || c.node == 2);
        }
    }

    #[test]
    fn single_bag_is_central() {
        let g = named::cycle_graph(6);
        let td = TreeDecomposition::new(vec![(0..6).collect()], vec![]);
        assert_eq!(central_node(&g, &td, 3, None).unwrap().node, 0);
    }

    #[test]
    fn star_search_stays_put() {
        let g = named::star_graph(8);
        let td = TreeDecomposition::new(
            (1..=8).map(|l| vec![0, l]).collect(),
            (1..8).map(|i| (0, i)).collect(),
        );
        for start in 0..8 {
            let c = central_node(&g, &td, 1, Some(start)).unwrap();
            assert_eq!(c.node, start);
            assert!(c.steps.is_empty());
        }
    }

    #[test]
    fn diameter_precondition() {
        let g = named::path_graph(5);
        assert_eq!(
            central_node(&g, &p5_td(), 1, None).unwrap_err(),
            Error::DiameterExceeded {
                diameter: 4,
                radius: 1
            }
        );
    }

    #[test]
    fn pace_round_trip() {
        let text = "c path\ns td 4 2 5\nb 1 1 2\nb 2 2 3\nb 3 3 4\nb 4 4 5\n1 2\n2 3\n3 4\n";
        let (td, n) = parse_pace_td(text).unwrap();
        assert_eq!(n, 5);
        assert_eq!(td, p5_td());
        assert_eq!(write_pace_td(&td, n), text.trim_start_matches("c path\n"));
        assert!(parse_pace_td("s td 1 3 2\nb 1 1 2\n").is_err());
        assert!(parse_pace_td("s td 1 1 2\nb 1 3\n").is_err());
        let back = td_from_json(&td_to_json(&td)).unwrap();
        assert_eq!(back, td);
    }

    #[test]
    fn pace_graph() {
        let g = parse_pace_graph("c x\np tw 3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(parse_pace_graph("p tw 3 3\n1 2\n").is_err());
    }
}
