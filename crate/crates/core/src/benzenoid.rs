//! Benzenoid systems built from hexagons on an axial lattice.
//!
//! Hexagon centers live on a triangular lattice addressed by axial
//! coordinates `(q, r)`. Every hexagon corner is the centroid of three
//! mutually adjacent centers, so three times a corner is an integer lattice
//! point: corner `i` of hexagon `c` is keyed by `3c + d[i] + d[i+1]`, where
//! `d` is the cyclic list of neighbor offsets. Two adjacent hexagons share
//! exactly the two centroids of the triangles that contain both centers,
//! hence exactly two corner keys and the edge between them.

use std::collections::{HashSet, VecDeque};

use crate::closed_form::Family;
use crate::error::{Error, Result};
use crate::graph::{MolecularGraph, VertexId};

/// Neighbor offsets in cyclic order around a hexagon.
const DIRECTIONS: [(i64, i64); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexCoord {
    pub q: i64,
    pub r: i64,
}

impl HexCoord {
    pub const fn new(q: i64, r: i64) -> Self {
        Self { q, r }
    }

    pub fn neighbors(self) -> impl Iterator<Item = HexCoord> {
        DIRECTIONS
            .iter()
            .map(move |&(dq, dr)| HexCoord::new(self.q + dq, self.r + dr))
    }

    pub fn is_adjacent(self, other: HexCoord) -> bool {
        let d = (other.q - self.q, other.r - self.r);
        DIRECTIONS.contains(&d)
    }

    /// Integer keys of the six corners, in cyclic order.
    pub fn corner_keys(self) -> [(i64, i64); 6] {
        std::array::from_fn(|i| {
            let (aq, ar) = DIRECTIONS[i];
            let (bq, br) = DIRECTIONS[(i + 1) % 6];
            (3 * self.q + aq + bq, 3 * self.r + ar + br)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexagonalSystem {
    hexes: Vec<HexCoord>,
    internal_vertex_count: usize,
}

impl HexagonalSystem {
    /// Hexagons in ascending `(q, r)` order.
    pub fn hexes(&self) -> &[HexCoord] {
        &self.hexes
    }

    pub fn hex_count(&self) -> usize {
        self.hexes.len()
    }

    /// Vertices shared by three hexagons.
    pub fn internal_vertex_count(&self) -> usize {
        self.internal_vertex_count
    }
}

/// A built benzenoid: its molecular graph plus the hexagon metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Benzenoid {
    pub graph: MolecularGraph,
    pub system: HexagonalSystem,
}

/// Builds the molecular graph of a connected set of hexagons. Vertex ids
/// follow ascending corner-key order.
pub fn build_system(hexes: &[HexCoord]) -> Result<Benzenoid> {
    if hexes.is_empty() {
        return Err(Error::EmptySystem);
    }
    let mut sorted = hexes.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateHex {
            q: w[0].q,
            r: w[0].r,
        });
    }
    let components = hex_components(&sorted);
    if components != 1 {
        return Err(Error::DisconnectedSystem { components });
    }

    let mut keys: Vec<(i64, i64)> = sorted.iter().flat_map(|h| h.corner_keys()).collect();
    keys.sort_unstable();
    let mut internal = 0;
    let mut run = 0;
    for i in 0..keys.len() {
        run += 1;
        if i + 1 == keys.len() || keys[i + 1] != keys[i] {
            if run == 3 {
                internal += 1;
            }
            run = 0;
        }
    }
    keys.dedup();

    let id = |key: &(i64, i64)| keys.binary_search(key).expect("corner key present") as VertexId;
    let mut edges = Vec::with_capacity(6 * sorted.len());
    for h in &sorted {
        let corners = h.corner_keys().map(|k| id(&k));
        for i in 0..6 {
            let (a, b) = (corners[i], corners[(i + 1) % 6]);
            edges.push(if a < b { (a, b) } else { (b, a) });
        }
    }
    edges.sort_unstable();
    edges.dedup();

    Ok(Benzenoid {
        graph: MolecularGraph::from_canonical(keys.len(), edges),
        system: HexagonalSystem {
            hexes: sorted,
            internal_vertex_count: internal,
        },
    })
}

fn hex_components(hexes: &[HexCoord]) -> usize {
    let all: HashSet<HexCoord> = hexes.iter().copied().collect();
    let mut seen = HashSet::with_capacity(hexes.len());
    let mut components = 0;
    let mut queue = VecDeque::new();
    for &start in hexes {
        if !seen.insert(start) {
            continue;
        }
        components += 1;
        queue.push_back(start);
        while let Some(h) = queue.pop_front() {
            for nb in h.neighbors() {
                if all.contains(&nb) && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
    }
    components
}

/// Hexagons of the zigzag system with `p` rows of two: row `i` is
/// `(i, i), (i + 1, i)` and the next row starts above its right hexagon.
pub fn zigzag_hexes(p: u32) -> Vec<HexCoord> {
    (0..p as i64)
        .flat_map(|i| [HexCoord::new(i, i), HexCoord::new(i + 1, i)])
        .collect()
}

/// Hexagons of the `p x p` rhombus.
pub fn rhombic_hexes(p: u32) -> Vec<HexCoord> {
    (0..p as i64)
        .flat_map(|i| (0..p as i64).map(move |j| HexCoord::new(i, j)))
        .collect()
}

fn check_p(p: u32) -> Result<()> {
    if p < 1 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    Ok(())
}

pub fn zigzag(p: u32) -> Result<Benzenoid> {
    check_p(p)?;
    build_system(&zigzag_hexes(p))
}

pub fn rhombic(p: u32) -> Result<Benzenoid> {
    check_p(p)?;
    build_system(&rhombic_hexes(p))
}

impl Family {
    pub fn build(self, p: u32) -> Result<Benzenoid> {
        match self {
            Family::Zigzag => zigzag(p),
            Family::Rhombic => rhombic(p),
        }
    }
}

/// Parses one `q r` pair per line; `#` starts a comment line.
pub fn parse_hex_list(text: &str) -> Result<Vec<HexCoord>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err("expected `q r`".into()));
        }
        let parse = |s: &str| {
            s.parse::<i64>()
                .map_err(|_| err(format!("`{s}` is not an integer")))
        };
        out.push(HexCoord::new(parse(fields[0])?, parse(fields[1])?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_hexagon_is_c6() {
        let b = build_system(&[HexCoord::new(0, 0)]).unwrap();
        assert_eq!(b.graph.vertex_count(), 6);
        assert_eq!(b.graph.edge_count(), 6);
        assert_eq!(b.system.internal_vertex_count(), 0);
        assert!((0..6).all(|v| b.graph.degree(v) == 2));
    }

    #[test]
    fn naphthalene() {
        let b = build_system(&[HexCoord::new(0, 0), HexCoord::new(1, 0)]).unwrap();
        assert_eq!(b.graph.vertex_count(), 10);
        assert_eq!(b.graph.edge_count(), 11);
        assert_eq!(b.system.internal_vertex_count(), 0);
    }

    #[test]
    fn adjacent_hexes_share_two_corners() {
        let c = HexCoord::new(4, -7);
        let mine: HashSet<_> = c.corner_keys().into_iter().collect();
        for nb in c.neighbors() {
            let theirs: HashSet<_> = nb.corner_keys().into_iter().collect();
            assert_eq!(mine.intersection(&theirs).count(), 2);
        }
        let far: HashSet<_> = HexCoord::new(5, -6).corner_keys().into_iter().collect();
        assert_eq!(mine.intersection(&far).count(), 0);
    }

    #[test]
    fn two_by_two_block() {
        let b = rhombic(2).unwrap();
        assert_eq!(b.graph.vertex_count(), 16);
        assert_eq!(b.graph.edge_count(), 19);
        assert_eq!(b.system.internal_vertex_count(), 2);
    }

    #[test]
    fn family_counts() {
        let z = zigzag(2).unwrap();
        assert_eq!((z.graph.vertex_count(), z.graph.edge_count()), (18, 21));
        let z = zigzag(10).unwrap();
        assert_eq!((z.graph.vertex_count(), z.graph.edge_count()), (82, 101));
        let r = rhombic(3).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (30, 38));
        let r = rhombic(1).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (6, 6));
    }

    #[test]
    fn errors() {
        assert_eq!(build_system(&[]).unwrap_err(), Error::EmptySystem);
        assert_eq!(
            build_system(&[HexCoord::new(0, 0), HexCoord::new(2, 0)]).unwrap_err(),
            Error::DisconnectedSystem { components: 2 }
        );
        assert_eq!(
            build_system(&[HexCoord::new(0, 0), HexCoord::new(0, 0)]).unwrap_err(),
            Error::DuplicateHex { q: 0, r: 0 }
        );
        assert!(matches!(zigzag(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(rhombic(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn zigzag_rows_do_not_touch_diagonally() {
        let hexes = zigzag_hexes(4);
        for (i, a) in hexes.iter().enumerate() {
            for (j, b) in hexes.iter().enumerate() {
                if i < j {
                    assert_eq!(a.is_adjacent(*b), j == i + 1, "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn hex_list_parsing() {
        let hexes = parse_hex_list("# two\n0 0\n 1 -1 \n").unwrap();
        assert_eq!(hexes, vec![HexCoord::new(0, 0), HexCoord::new(1, -1)]);
        assert!(matches!(
            parse_hex_list("0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_hex_list("0 0\na b\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn vertex_ids_follow_corner_order() {
        // rebuilding from a permuted hex list yields the identical graph
        let mut hexes = rhombic_hexes(3);
        let a = build_system(&hexes).unwrap();
        hexes.reverse();
        let b = build_system(&hexes).unwrap();
        assert_eq!(a, b);
    }
}
