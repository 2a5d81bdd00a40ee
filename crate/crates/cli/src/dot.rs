//! Graphviz export with the interesting part of a result highlighted.

use std::collections::BTreeSet;
use std::fmt::Write;

use surfcover_core::Graph;

pub fn render(name: &str, g: &Graph, vertices: &[usize], edges: &[usize]) -> String {
    let vertices: BTreeSet<usize> = vertices.iter().copied().collect();
    let edges: BTreeSet<usize> = edges.iter().copied().collect();
    let mut out = format!("graph \"{name}\" {{\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        if vertices.contains(&v) {
            writeln!(out, "  {v} [style=filled, fillcolor=gold];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if edges.contains(&i) {
            writeln!(out, "  {u} -- {v} [color=red, penwidth=2];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use surfcover_core::named;

    #[test]
    fn marks_vertices_and_edges() {
        let dot = render("p3", &named::path_graph(3), &[1], &[0]);
        assert!(dot.starts_with("graph \"p3\" {"));
        assert!(dot.contains("1 [style=filled, fillcolor=gold];"));
        assert!(dot.contains("0 -- 1 [color=red, penwidth=2];"));
        assert!(dot.contains("  1 -- 2;"));
    }
}
