use rayon::prelude::*;

use super::{MolecularGraph, VertexId};
use crate::error::{Error, Result};

/// Below this many vertices the profile is computed on the calling thread.
const PARALLEL_THRESHOLD: usize = 4096;
const CHUNK: usize = 1024;

/// Number of vertices at shortest-path distance exactly `k`, per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KDegreeProfile {
    k: u32,
    degrees: Vec<u32>,
}

impl KDegreeProfile {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn get(&self, v: usize) -> u32 {
        self.degrees[v]
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Sum of all k-degrees; always even.
    pub fn total(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    pub(crate) fn check_against(&self, g: &MolecularGraph) -> Result<()> {
        if self.degrees.len() != g.vertex_count() {
            return Err(Error::ProfileMismatch {
                profile_len: self.degrees.len(),
                vertex_count: g.vertex_count(),
            });
        }
        Ok(())
    }
}

/// Per-thread BFS state. `mark[v] == epoch` means `v` was reached from the
/// current source.
struct Scratch {
    mark: Vec<u32>,
    epoch: u32,
    frontier: Vec<VertexId>,
    next: Vec<VertexId>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            mark: vec![0; n],
            epoch: 0,
            frontier: Vec::new(),
            next: Vec::new(),
        }
    }

    fn count_at_distance(&mut self, g: &MolecularGraph, source: usize, k: u32) -> u32 {
        if self.epoch == u32::MAX {
            self.mark.fill(0);
            self.epoch = 0;
        }
        self.epoch += 1;
        let epoch = self.epoch;
        self.mark[source] = epoch;
        self.frontier.clear();
        self.frontier.push(source as VertexId);
        for _ in 0..k {
            self.next.clear();
            for &u in &self.frontier {
                for &w in g.neighbors(u as usize) {
                    let slot = &mut self.mark[w as usize];
                    if *slot != epoch {
                        *slot = epoch;
                        self.next.push(w);
                    }
                }
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
            if self.frontier.is_empty() {
                return 0;
            }
        }
        self.frontier.len() as u32
    }
}

/// Computes `deg_k(v)` for every vertex by a breadth-first search from each
/// vertex that stops at depth `k`. Work per vertex is bounded by the size of
/// its radius-`k` ball. The result does not depend on the rayon thread count.
pub fn k_degree_profile(g: &MolecularGraph, k: u32) -> Result<KDegreeProfile> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.vertex_count();
    let mut degrees = vec![0u32; n];
    if n < PARALLEL_THRESHOLD {
        let mut scratch = Scratch::new(n);
        for (v, d) in degrees.iter_mut().enumerate() {
            *d = scratch.count_at_distance(g, v, k);
        }
    } else {
        degrees.par_chunks_mut(CHUNK).enumerate().for_each_init(
            || Scratch::new(n),
            |scratch, (chunk, out)| {
                let base = chunk * CHUNK;
                for (i, d) in out.iter_mut().enumerate() {
                    *d = scratch.count_at_distance(g, base + i, k);
                }
            },
        );
    }
    Ok(KDegreeProfile { k, degrees })
}
