//! Immutable simple graphs and exact k-distance degrees.
//!
//! A [`MolecularGraph`] stores its edges in canonical form (each pair as
//! `(min, max)`, sorted lexicographically) together with a CSR adjacency
//! whose neighbor runs are sorted ascending. Vertex ids are contiguous
//! `0..n` in construction order.

mod edgelist;
mod profile;

pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};
pub use profile::{k_degree_profile, KDegreeProfile};

use crate::error::{Error, Result};

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolecularGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
}

impl MolecularGraph {
    /// Builds a graph from an edge list. Endpoint order within a pair does
    /// not matter; repeated pairs (in either orientation) are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count > VertexId::MAX as usize {
            return Err(Error::InvalidParameter(format!(
                "vertex count {vertex_count} exceeds the supported maximum"
            )));
        }
        let mut canon = Vec::new();
        for (u, v) in edges {
            for id in [u, v] {
                if id >= vertex_count {
                    return Err(Error::IdOutOfRange { id, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            canon.push((a as VertexId, b as VertexId));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0 as usize, w[0].1 as usize));
        }
        Ok(Self::from_canonical(vertex_count, canon))
    }

    /// `edges` must already be canonical: validated, `(min, max)` pairs,
    /// sorted and free of duplicates.
    pub(crate) fn from_canonical(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut degree = vec![0usize; vertex_count];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..vertex_count].to_vec();
        let mut neighbors = vec![0; 2 * edges.len()];
        // Edges are sorted by (min, max): filling in this order leaves each
        // neighbor run already sorted ascending.
        for &(u, v) in &edges {
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for &(u, v) in &edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
        }
        Self {
            vertex_count,
            edges,
            offsets,
            neighbors,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted lexicographically with `u < v`.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[VertexId] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count
            && v < self.vertex_count
            && self.neighbors(u).binary_search(&(v as VertexId)).is_ok()
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = Vec::new();
        let mut components = 0;
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s as VertexId);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u as usize) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}
