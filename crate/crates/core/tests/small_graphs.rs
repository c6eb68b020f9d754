//! Exhaustive checks against the all-pairs oracle on every graph with at
//! most 8 vertices (up to isomorphism).

mod common;

use std::sync::OnceLock;

use benzleap::graph::k_degree_profile;
use benzleap::index::{compute_index, edge_partition, IndexKind, IndexValue};
use common::*;

fn all_graphs() -> &'static [Small] {
    static GRAPHS: OnceLock<Vec<Small>> = OnceLock::new();
    GRAPHS.get_or_init(|| (1..=8).flat_map(graphs_up_to_iso).collect())
}

#[test]
fn enumeration_counts_match_known_sequence() {
    // number of graphs on n unlabeled vertices
    let expected = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    let graphs = all_graphs();
    for (n, &count) in (1..=8).zip(&expected) {
        assert_eq!(graphs.iter().filter(|g| g.n == n).count(), count, "n = {n}");
    }
}

#[test]
fn profiles_match_floyd_warshall() {
    for s in all_graphs() {
        let g = s.to_graph();
        for k in 1..=s.n as u32 + 1 {
            let profile = k_degree_profile(&g, k).unwrap();
            assert_eq!(
                profile.degrees(),
                oracle_degrees(s, k as usize).as_slice(),
                "{:?} k={k}",
                s.edges()
            );
        }
    }
}

fn int(v: IndexValue) -> i128 {
    v.as_int().expect("integer kind")
}

#[test]
fn leap_kinds_match_direct_sums() {
    for s in all_graphs() {
        let g = s.to_graph();
        for k in 1..=3u32 {
            let d = oracle_degrees(s, k as usize);
            let p = k_degree_profile(&g, k).unwrap();
            let idx = |kind| compute_index(&g, &p, kind).unwrap();
            let lf = edge_sum(s, &d, |a, b| a * a + b * b);
            let ly = edge_sum(s, &d, |a, b| a.pow(3) + b.pow(3));
            assert_eq!(int(idx(IndexKind::Lm1)), edge_sum(s, &d, |a, b| a + b));
            assert_eq!(int(idx(IndexKind::Lm2)), edge_sum(s, &d, |a, b| a * b));
            assert_eq!(
                int(idx(IndexKind::Hlm1)),
                edge_sum(s, &d, |a, b| (a + b).pow(2))
            );
            assert_eq!(
                int(idx(IndexKind::Hlm2)),
                edge_sum(s, &d, |a, b| (a * b).pow(2))
            );
            assert_eq!(int(idx(IndexKind::Lf)), lf);
            assert_eq!(
                int(idx(IndexKind::Hlf)),
                edge_sum(s, &d, |a, b| (a * a + b * b).pow(2))
            );
            assert_eq!(int(idx(IndexKind::Ly)), ly);
            assert_eq!(int(idx(IndexKind::Lyco)), (s.n as i128 - 1) * lf - ly);
            let lso = edge_sum_real(s, &d, |a, b| (a + b).sqrt());
            assert!((idx(IndexKind::Lso).as_f64() - lso).abs() < 1e-9);
        }
    }
}

#[test]
fn classical_kinds_are_k1_reductions() {
    for s in all_graphs() {
        let g = s.to_graph();
        let d = oracle_degrees(s, 1);
        let p1 = k_degree_profile(&g, 1).unwrap();
        let idx = |kind| compute_index(&g, &p1, kind).unwrap();
        let f = edge_sum(s, &d, |a, b| a * a + b * b);
        let y = edge_sum(s, &d, |a, b| a.pow(3) + b.pow(3));
        assert_eq!(int(idx(IndexKind::M1)), edge_sum(s, &d, |a, b| a + b));
        assert_eq!(int(idx(IndexKind::M2)), edge_sum(s, &d, |a, b| a * b));
        assert_eq!(int(idx(IndexKind::F)), f);
        assert_eq!(
            int(idx(IndexKind::Hf)),
            edge_sum(s, &d, |a, b| (a * a + b * b).pow(2))
        );
        assert_eq!(int(idx(IndexKind::Y)), y);
        assert_eq!(int(idx(IndexKind::Yco)), (s.n as i128 - 1) * f - y);
        assert_eq!(
            int(idx(IndexKind::Hm2)),
            edge_sum(s, &d, |a, b| (a * b).pow(2))
        );
        let so = edge_sum_real(s, &d, |a, b| (a * a + b * b).sqrt());
        assert!((idx(IndexKind::So).as_f64() - so).abs() < 1e-9);
        // leap kinds at k = 1 coincide with their classical presets
        for (leap, classical) in [
            (IndexKind::Lm1, IndexKind::M1),
            (IndexKind::Lm2, IndexKind::M2),
            (IndexKind::Lf, IndexKind::F),
            (IndexKind::Hlf, IndexKind::Hf),
            (IndexKind::Ly, IndexKind::Y),
            (IndexKind::Lyco, IndexKind::Yco),
            (IndexKind::Hlm2, IndexKind::Hm2),
        ] {
            assert_eq!(idx(leap), idx(classical));
        }
    }
}

#[test]
fn hm2co_matches_brute_force() {
    for s in all_graphs().iter().filter(|s| s.n <= 7) {
        let g = s.to_graph();
        let p1 = k_degree_profile(&g, 1).unwrap();
        assert_eq!(
            int(compute_index(&g, &p1, IndexKind::Hm2co).unwrap()),
            brute_hm2co(s),
            "{:?}",
            s.edges()
        );
    }
}

#[test]
fn partitions_count_edges() {
    for s in all_graphs() {
        let g = s.to_graph();
        let p = k_degree_profile(&g, 2).unwrap();
        let part = edge_partition(&g, &p).unwrap();
        assert_eq!(part.total(), g.edge_count() as u64);
    }
}

#[test]
fn k_beyond_diameter_zeroes_every_index() {
    for s in all_graphs() {
        let g = s.to_graph();
        let p = k_degree_profile(&g, s.n as u32).unwrap();
        assert!(p.degrees().iter().all(|&d| d == 0));
        for kind in IndexKind::LEAP {
            assert_eq!(compute_index(&g, &p, kind).unwrap().as_f64(), 0.0, "{kind}");
        }
    }
}
