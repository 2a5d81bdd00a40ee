//! Z2 boundary tests by Gaussian elimination over GF(2).
//!
//! This module deliberately shares nothing with [`crate::surgery`]: it only
//! reads face walks and solves a linear system, so it can serve as an
//! independent oracle for the surgery code.

use crate::embedding::Embedding;
use crate::error::{Error, Result};

/// Dense bit vector over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_with(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| 64 * i + w.trailing_zeros() as usize)
    }
}

/// Row-reduced basis keyed by pivot column.
#[derive(Debug, Default)]
struct Basis {
    rows: Vec<(usize, BitVec)>,
}

impl Basis {
    fn reduce(&self, v: &mut BitVec) {
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_with(row);
            }
        }
    }

    fn insert(&mut self, mut v: BitVec) {
        self.reduce(&mut v);
        if let Some(p) = v.lowest_set() {
            for (_, row) in &mut self.rows {
                if row.get(p) {
                    row.xor_with(&v);
                }
            }
            self.rows.push((p, v));
        }
    }
}

/// Boundary vector of every face: edges traversed an odd number of times.
pub fn face_vectors(e: &Embedding) -> Vec<BitVec> {
    e.faces()
        .faces
        .iter()
        .map(|f| {
            let mut v = BitVec::zeros(e.edge_count());
            for d in f.darts() {
                v.flip(d.edge());
            }
            v
        })
        .collect()
}

fn subset_vector(e: &Embedding, edges: &[usize]) -> Result<BitVec> {
    let mut v = BitVec::zeros(e.edge_count());
    let mut seen = vec![false; e.edge_count()];
    let mut degree = vec![0usize; e.vertex_count()];
    for &x in edges {
        if x >= e.edge_count() {
            return Err(Error::EdgeOutOfRange(x));
        }
        if std::mem::replace(&mut seen[x], true) {
            continue;
        }
        v.flip(x);
        let (a, b) = e.edge(x);
        degree[a] += 1;
        degree[b] += 1;
    }
    if let Some(bad) = degree.iter().position(|d| d % 2 == 1) {
        return Err(Error::OddDegree(bad));
    }
    Ok(v)
}

/// True when the edge set is the Z2 boundary of some union of faces.
/// Duplicate indices are ignored.
pub fn is_boundary_subgraph(e: &Embedding, edges: &[usize]) -> Result<bool> {
    let mut target = subset_vector(e, edges)?;
    let mut basis = Basis::default();
    for f in face_vectors(e) {
        basis.insert(f);
    }
    basis.reduce(&mut target);
    Ok(target.is_zero())
}

/// True when the symmetric difference of two even subgraphs is a boundary.
pub fn homologous(e: &Embedding, a: &[usize], b: &[usize]) -> Result<bool> {
    let mut mark = vec![false; e.edge_count()];
    for &x in a.iter().chain(b) {
        if x >= e.edge_count() {
            return Err(Error::EdgeOutOfRange(x));
        }
    }
    let mut dedup = |s: &[usize]| {
        let mut seen = vec![false; e.edge_count()];
        for &x in s {
            if !std::mem::replace(&mut seen[x], true) {
                mark[x] ^= true;
            }
        }
    };
    dedup(a);
    dedup(b);
    let diff: Vec<usize> = (0..e.edge_count()).filter(|&x| mark[x]).collect();
    is_boundary_subgraph(e, &diff)
}
