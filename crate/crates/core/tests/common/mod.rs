//! Independent oracles shared by the integration tests: exhaustive small
//! graph enumeration, all-pairs shortest paths, and brute-force index sums.
#![allow(dead_code)]

use std::collections::HashMap;

use benzleap::graph::MolecularGraph;
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;

type Certificate = Vec<(u32, Vec<u32>, Vec<u32>)>;

/// Simple graph as an adjacency bit matrix (n <= 16).
#[derive(Clone, Debug)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u16>,
}

impl Small {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn to_graph(&self) -> MolecularGraph {
        MolecularGraph::new(self.n, self.edges()).unwrap()
    }

    fn to_petgraph(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::with_capacity(self.n, self.n * 2);
        let nodes: Vec<_> = (0..self.n).map(|_| g.add_node(())).collect();
        for (u, v) in self.edges() {
            g.add_edge(nodes[u], nodes[v], ());
        }
        g
    }

    /// Isomorphism-invariant fingerprint: per vertex, its degree, sorted
    /// neighbour degrees and the sizes of its distance layers.
    fn certificate(&self) -> Certificate {
        let dist = all_pairs_distances(self);
        let deg: Vec<u32> = self.adj.iter().map(|a| a.count_ones()).collect();
        let mut cert: Vec<_> = (0..self.n)
            .map(|v| {
                let mut nd: Vec<u32> = (0..self.n)
                    .filter(|&u| self.has_edge(v, u))
                    .map(|u| deg[u])
                    .collect();
                nd.sort_unstable();
                let mut layers = vec![0u32; self.n + 1];
                for u in 0..self.n {
                    layers[dist[v][u].min(self.n)] += 1;
                }
                (deg[v], nd, layers)
            })
            .collect();
        cert.sort();
        cert
    }
}

/// Every simple graph on `n` vertices, one per isomorphism class, built by
/// adding a vertex with every possible neighbourhood to each graph on
/// `n - 1` vertices and discarding isomorphic duplicates.
pub fn graphs_up_to_iso(n: usize) -> Vec<Small> {
    assert!(n <= 10);
    let mut level = vec![Small { n: 0, adj: vec![] }];
    for size in 1..=n {
        let mut buckets: HashMap<Certificate, Vec<UnGraph<(), ()>>> = HashMap::new();
        let mut out = Vec::new();
        for g in &level {
            for mask in 0u16..(1 << (size - 1)) {
                let mut adj = g.adj.clone();
                for (u, row) in adj.iter_mut().enumerate() {
                    if mask >> u & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                adj.push(mask);
                let cand = Small { n: size, adj };
                let bucket = buckets.entry(cand.certificate()).or_default();
                let pg = cand.to_petgraph();
                if bucket.iter().any(|other| is_isomorphic(other, &pg)) {
                    continue;
                }
                bucket.push(pg);
                out.push(cand);
            }
        }
        level = out;
    }
    level
}

pub const UNREACHABLE: usize = usize::MAX / 4;

/// Floyd-Warshall distances; unreachable pairs get [`UNREACHABLE`].
pub fn all_pairs_distances(g: &Small) -> Vec<Vec<usize>> {
    let n = g.n;
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for (v, cell) in row.iter_mut().enumerate() {
            if g.has_edge(u, v) {
                *cell = 1;
            }
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][w] + d[w][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

/// Number of vertices at distance exactly `k` from each vertex.
pub fn oracle_degrees(g: &Small, k: usize) -> Vec<u32> {
    let d = all_pairs_distances(g);
    d.iter()
        .map(|row| row.iter().filter(|&&x| x == k).count() as u32)
        .collect()
}

/// Same oracle on an arbitrary graph, by Floyd-Warshall over its edge
/// list. Cubic in n; meant for graphs of a few hundred vertices.
pub fn oracle_degrees_of(g: &MolecularGraph, k: usize) -> Vec<u32> {
    let n = g.vertex_count();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for &(u, v) in g.edges() {
        d[u as usize][v as usize] = 1;
        d[v as usize][u as usize] = 1;
    }
    for w in 0..n {
        let dw = d[w].clone();
        for row in d.iter_mut() {
            let uw = row[w];
            if uw == UNREACHABLE {
                continue;
            }
            for (cell, &wv) in row.iter_mut().zip(&dw) {
                if uw + wv < *cell {
                    *cell = uw + wv;
                }
            }
        }
    }
    d.iter()
        .map(|row| row.iter().filter(|&&x| x == k).count() as u32)
        .collect()
}

/// Edge sum over a [`MolecularGraph`] with explicit degrees.
pub fn graph_edge_sum(g: &MolecularGraph, d: &[u32], f: impl Fn(i128, i128) -> i128) -> i128 {
    g.edges()
        .iter()
        .map(|&(u, v)| f(d[u as usize] as i128, d[v as usize] as i128))
        .sum()
}

/// `sum over edges of f(deg u, deg v)` with plain integers.
pub fn edge_sum(g: &Small, d: &[u32], f: impl Fn(i128, i128) -> i128) -> i128 {
    g.edges()
        .into_iter()
        .map(|(u, v)| f(d[u] as i128, d[v] as i128))
        .sum()
}

pub fn edge_sum_real(g: &Small, d: &[u32], f: impl Fn(f64, f64) -> f64) -> f64 {
    g.edges()
        .into_iter()
        .map(|(u, v)| f(d[u] as f64, d[v] as f64))
        .sum()
}

/// Second hyper-Zagreb coindex by direct summation over non-adjacent pairs.
pub fn brute_hm2co(g: &Small) -> i128 {
    let d: Vec<i128> = g.adj.iter().map(|a| a.count_ones() as i128).collect();
    let mut total = 0;
    for u in 0..g.n {
        for v in u + 1..g.n {
            if !g.has_edge(u, v) {
                total += (d[u] * d[v]).pow(2);
            }
        }
    }
    total
}
