//! JSON wire formats.
//!
//! Embeddings travel as `{"vertices", "edges", "rotations", "signs"}` with
//! rotations given in dart indices. A graph-only document omits the last two.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::embedding::{Dart, Embedding, Sign};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarize::Drawing;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotations: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_euler_genus: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientable: Option<bool>,
}

impl EmbeddingSpec {
    pub fn from_embedding(e: &Embedding) -> Self {
        Self {
            vertices: e.vertex_count(),
            edges: e.edges().iter().map(|&(u, v)| [u, v]).collect(),
            rotations: Some(
                e.rotations()
                    .iter()
                    .map(|r| r.iter().map(|d| d.0).collect())
                    .collect(),
            ),
            signs: Some(e.signs().iter().map(|s| s.to_int()).collect()),
            certified_euler_genus: None,
            orientable: None,
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            rotations: None,
            signs: None,
            certified_euler_genus: None,
            orientable: None,
        }
    }

    /// Adds the genus certificate emitted by generators.
    pub fn certified(mut self, e: &Embedding) -> Result<Self> {
        let g = e.euler_genus()?;
        self.certified_euler_genus = Some(g.euler_genus);
        self.orientable = Some(g.orientable);
        Ok(self)
    }

    /// Builds the embedding and checks any genus certificate it carries.
    pub fn build(&self) -> Result<Embedding> {
        let (edges, rotations, signs) = self.parts()?;
        let e = Embedding::new(self.vertices, edges, rotations, signs)?;
        if self.certified_euler_genus.is_some() || self.orientable.is_some() {
            let g = e.euler_genus()?;
            if self
                .certified_euler_genus
                .is_some_and(|c| c != g.euler_genus)
                || self.orientable.is_some_and(|o| o != g.orientable)
            {
                return Err(Error::Parse(format!(
                    "certificate does not match: Euler genus {}, orientable {}",
                    g.euler_genus, g.orientable
                )));
            }
        }
        Ok(e)
    }

    #[allow(clippy::type_complexity)]
    fn parts(&self) -> Result<(Vec<(usize, usize)>, Vec<Vec<Dart>>, Vec<Sign>)> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let rotations = self
            .rotations
            .as_ref()
            .ok_or_else(|| Error::Parse("embedding requires \"rotations\"".into()))?
            .iter()
            .map(|r| r.iter().map(|&d| Dart(d)).collect())
            .collect();
        let signs = match &self.signs {
            Some(s) => s
                .iter()
                .map(|&x| Sign::from_int(x))
                .collect::<Result<_>>()?,
            None => vec![Sign::Plus; edges.len()],
        };
        Ok((edges, rotations, signs))
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(
            self.vertices,
            self.edges.iter().map(|&[u, v]| (u, v)).collect(),
        )
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn embedding_from_json(text: &str) -> Result<Embedding> {
    parse::<EmbeddingSpec>(text)?.build()
}

pub fn embedding_to_json(e: &Embedding) -> String {
    serde_json::to_string(&EmbeddingSpec::from_embedding(e)).expect("serializable")
}

/// Reads a graph from either a graph-only or a full embedding document.
/// Connectivity is not checked here.
pub fn graph_from_json(text: &str) -> Result<Graph> {
    parse::<EmbeddingSpec>(text)?.graph()
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&EmbeddingSpec::from_graph(g)).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpec {
    pub darts: Vec<usize>,
}

impl CycleSpec {
    pub fn darts(&self) -> Vec<Dart> {
        self.darts.iter().map(|&d| Dart(d)).collect()
    }

    pub fn from_darts(darts: &[Dart]) -> Self {
        Self {
            darts: darts.iter().map(|d| d.0).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSubset {
    pub edges: Vec<usize>,
}

pub fn cycle_from_json(text: &str) -> Result<Vec<Dart>> {
    Ok(parse::<CycleSpec>(text)?.darts())
}

pub fn edge_subset_from_json(text: &str) -> Result<Vec<usize>> {
    Ok(parse::<EdgeSubset>(text)?.edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingSpec {
    #[serde(flatten)]
    pub host: EmbeddingSpec,
    pub crossings: Vec<usize>,
    /// Original edge index (as a string key) to its dart path in the host.
    pub arcs: BTreeMap<String, Vec<usize>>,
}

impl DrawingSpec {
    pub fn from_drawing(d: &Drawing) -> Self {
        Self {
            host: EmbeddingSpec::from_embedding(d.host()),
            crossings: d.crossings().to_vec(),
            arcs: d
                .arcs()
                .iter()
                .enumerate()
                .map(|(e, path)| (e.to_string(), path.iter().map(|d| d.0).collect()))
                .collect(),
        }
    }

    pub fn build(&self) -> Result<Drawing> {
        let host = self.host.build()?;
        let mut arcs = vec![None; self.arcs.len()];
        for (key, path) in &self.arcs {
            let idx: usize = key
                .parse()
                .map_err(|_| Error::Parse(format!("arc key {key:?} is not an edge index")))?;
            if idx >= arcs.len() {
                return Err(Error::Parse(format!(
                    "arc keys must be 0..{}; found {idx}",
                    arcs.len()
                )));
            }
            arcs[idx] = Some(path.iter().map(|&d| Dart(d)).collect());
        }
        let arcs = arcs.into_iter().map(|a| a.expect("dense keys")).collect();
        Drawing::new(host, self.crossings.clone(), arcs)
    }
}

pub fn drawing_from_json(text: &str) -> Result<Drawing> {
    parse::<DrawingSpec>(text)?.build()
}

pub fn drawing_to_json(d: &Drawing) -> String {
    serde_json::to_string(&DrawingSpec::from_drawing(d)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn round_trip_is_byte_identical() {
        for e in [named::k7_torus(), named::projective_loop(), named::cube()] {
            let a = embedding_to_json(&e);
            let b = embedding_to_json(&embedding_from_json(&a).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn signs_default_to_plus() {
        let e = embedding_from_json(
            r#"{"vertices":2,"edges":[[0,1],[0,1]],"rotations":[[0,2],[1,3]]}"#,
        )
        .unwrap();
        assert!(e.signs().iter().all(|s| s.is_plus()));
        assert_eq!(e.faces().len(), 2);
    }

    #[test]
    fn bad_sign_is_rejected() {
        let err = embedding_from_json(
            r#"{"vertices":1,"edges":[[0,0]],"rotations":[[0,1]],"signs":[2]}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::InvalidSign(2));
    }

    #[test]
    fn graph_only_document() {
        let g = graph_from_json(r#"{"vertices":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(embedding_from_json(r#"{"vertices":3,"edges":[[0,1],[1,2]]}"#).is_err());
    }
}
