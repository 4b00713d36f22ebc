//! Explicit finite digraphs for the brute-force side of the library.

use std::collections::BTreeSet;

use crate::{Error, Result};

/// A finite directed graph with vertices `0..vertex_count` and an optional
/// label per vertex (used to carry tuple contents through constructions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        for &(u, v) in &edges {
            assert!(u < vertex_count && v < vertex_count, "edge endpoint out of range");
        }
        Digraph {
            vertex_count,
            edges,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, _) in &self.edges {
            deg[u] += 1;
        }
        deg
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(_, v) in &self.edges {
            deg[v] += 1;
        }
        deg
    }

    /// Every vertex has an incoming and an outgoing edge.
    pub fn is_smooth(&self) -> bool {
        self.out_degrees().iter().all(|&d| d >= 1) && self.in_degrees().iter().all(|&d| d >= 1)
    }

    /// Decompose into directed cycle lengths, tolerating isolated vertices.
    ///
    /// Fails unless every non-isolated vertex has in-degree and out-degree
    /// exactly one, i.e. the graph is a union of cycles plus isolated points.
    pub fn cycle_lengths(&self) -> Result<Vec<u64>> {
        let out = self.out_degrees();
        let inn = self.in_degrees();
        let mut succ = vec![usize::MAX; self.vertex_count];
        for v in 0..self.vertex_count {
            let iso = out[v] == 0 && inn[v] == 0;
            if !iso && (out[v] != 1 || inn[v] != 1) {
                return Err(Error::NotUnionOfCycles);
            }
        }
        for (u, v) in self.edges() {
            succ[u] = v;
        }
        let mut lengths = Vec::new();
        let mut seen = vec![false; self.vertex_count];
        for start in 0..self.vertex_count {
            if seen[start] || succ[start] == usize::MAX {
                continue;
            }
            let mut len = 0u64;
            let mut v = start;
            loop {
                seen[v] = true;
                len += 1;
                v = succ[v];
                if v == start {
                    break;
                }
                if seen[v] {
                    return Err(Error::NotUnionOfCycles);
                }
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        Ok(lengths)
    }
}
