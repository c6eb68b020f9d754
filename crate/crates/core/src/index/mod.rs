//! Edge partitions, leap and classical indices, and index polynomials.
//!
//! Every index here is a function of the graph and one [`KDegreeProfile`].
//! Edge-sum indices evaluate `sum over uv in E of f(deg_k(u), deg_k(v))`
//! in canonical edge order, so real-valued sums are reproducible to the bit.
//! Integer indices are exact `i128`; overflow is reported, never wrapped.

mod kind;
mod polynomial;

use std::collections::BTreeMap;
use std::fmt;

pub use kind::{EdgeTerm, IndexKind, Rule};
pub use polynomial::{poly_eval, IndexPolynomial};

use crate::error::{Error, Result};
use crate::graph::{KDegreeProfile, MolecularGraph};

/// Value of one index: exact for integer kinds, `f64` for the square-root
/// kinds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexValue {
    Int(i128),
    Real(f64),
}

impl IndexValue {
    pub fn as_f64(self) -> f64 {
        match self {
            IndexValue::Int(v) => v as f64,
            IndexValue::Real(v) => v,
        }
    }

    pub fn as_int(self) -> Option<i128> {
        match self {
            IndexValue::Int(v) => Some(v),
            IndexValue::Real(_) => None,
        }
    }
}

/// Integers print exactly, reals with two decimals.
impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Int(v) => write!(f, "{v}"),
            IndexValue::Real(v) => write!(f, "{v:.2}"),
        }
    }
}

/// Edge counts keyed by the unordered pair of endpoint k-degrees `(a, b)`,
/// `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    k: u32,
    classes: BTreeMap<(u32, u32), u64>,
}

impl EdgePartition {
    /// Builds a partition from `(a, b, frequency)` triples. Pairs are
    /// normalized to `a <= b`, repeats are merged and empty classes dropped.
    pub fn from_classes<I>(k: u32, classes: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, u64)>,
    {
        let mut map = BTreeMap::new();
        for (a, b, freq) in classes {
            if freq > 0 {
                *map.entry((a.min(b), a.max(b))).or_insert(0) += freq;
            }
        }
        Self { k, classes: map }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn frequency(&self, a: u32, b: u32) -> u64 {
        self.classes
            .get(&(a.min(b), a.max(b)))
            .copied()
            .unwrap_or(0)
    }

    /// Classes in ascending `(a, b)` order.
    pub fn classes(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.classes.iter().map(|(&key, &f)| (key, f))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Sum of all frequencies (the edge count).
    pub fn total(&self) -> u64 {
        self.classes.values().sum()
    }

    /// Per-class `other - self` deltas for every class where they differ.
    pub fn diff(&self, other: &EdgePartition) -> Vec<((u32, u32), i64)> {
        let mut keys: Vec<_> = self.classes.keys().chain(other.classes.keys()).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|&(a, b)| {
                let delta = other.frequency(a, b) as i64 - self.frequency(a, b) as i64;
                (delta != 0).then_some(((a, b), delta))
            })
            .collect()
    }
}

/// Space-separated `a-b:frequency` classes, e.g. `2-2:6`.
impl fmt::Display for EdgePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, ((a, b), freq)) in self.classes().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}-{b}:{freq}")?;
        }
        Ok(())
    }
}

pub fn edge_partition(g: &MolecularGraph, profile: &KDegreeProfile) -> Result<EdgePartition> {
    profile.check_against(g)?;
    let d = profile.degrees();
    Ok(EdgePartition::from_classes(
        profile.k(),
        g.edges()
            .iter()
            .map(|&(u, v)| (d[u as usize], d[v as usize], 1)),
    ))
}

fn check_kind_profile(kind: IndexKind, profile: &KDegreeProfile) -> Result<()> {
    if kind.is_classical() && profile.k() != 1 {
        return Err(Error::ClassicalNeedsDegreeProfile {
            kind: kind.token(),
            k: profile.k(),
        });
    }
    Ok(())
}

fn edge_sum_int(g: &MolecularGraph, d: &[u32], term: EdgeTerm, kind: IndexKind) -> Result<i128> {
    let overflow = || Error::Overflow(kind.token());
    g.edges().iter().try_fold(0i128, |acc, &(u, v)| {
        let t = term
            .eval_int(d[u as usize], d[v as usize])
            .ok_or_else(overflow)?;
        acc.checked_add(t).ok_or_else(overflow)
    })
}

fn edge_sum_real(g: &MolecularGraph, d: &[u32], term: EdgeTerm) -> f64 {
    let mut acc = 0.0f64;
    for &(u, v) in g.edges() {
        acc += term.eval_real(d[u as usize], d[v as usize]);
    }
    acc
}

/// Evaluates `kind` on `g` with the given degree profile.
///
/// Classical kinds require a k=1 profile. The Y coindex uses
/// `(n - 1) * LF - LY` with `n = |V(G)|`.
pub fn compute_index(
    g: &MolecularGraph,
    profile: &KDegreeProfile,
    kind: IndexKind,
) -> Result<IndexValue> {
    profile.check_against(g)?;
    check_kind_profile(kind, profile)?;
    let d = profile.degrees();
    let overflow = || Error::Overflow(kind.token());
    match kind.rule() {
        Rule::Edge(term) if term.is_real() => Ok(IndexValue::Real(edge_sum_real(g, d, term))),
        Rule::Edge(term) => edge_sum_int(g, d, term, kind).map(IndexValue::Int),
        Rule::YCoindex => {
            let lf = edge_sum_int(g, d, EdgeTerm::SquareSum, kind)?;
            let ly = edge_sum_int(g, d, EdgeTerm::CubeSum, kind)?;
            let n1 = (g.vertex_count() as i128 - 1).max(0);
            n1.checked_mul(lf)
                .and_then(|x| x.checked_sub(ly))
                .map(IndexValue::Int)
                .ok_or_else(overflow)
        }
        Rule::NonAdjacentProductSquared => {
            // all unordered distinct pairs: ((sum a^2)^2 - sum a^4) / 2,
            // then remove the adjacent ones
            let (mut s2, mut s4) = (0i128, 0i128);
            for &x in d {
                let sq = (x as i128) * (x as i128);
                s2 = s2.checked_add(sq).ok_or_else(overflow)?;
                s4 = sq
                    .checked_mul(sq)
                    .and_then(|q| s4.checked_add(q))
                    .ok_or_else(overflow)?;
            }
            let all_pairs = s2
                .checked_mul(s2)
                .and_then(|x| x.checked_sub(s4))
                .ok_or_else(overflow)?
                / 2;
            let adjacent = edge_sum_int(g, d, EdgeTerm::ProductSquared, kind)?;
            Ok(IndexValue::Int(all_pairs - adjacent))
        }
    }
}

/// Evaluates an edge-sum kind from a partition alone:
/// `sum over classes of frequency * f(a, b)`.
pub fn partition_index(partition: &EdgePartition, kind: IndexKind) -> Result<IndexValue> {
    let overflow = || Error::Overflow(kind.token());
    let term = match kind.rule() {
        Rule::Edge(term) => term,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{kind} needs vertex data beyond an edge partition"
            )))
        }
    };
    if term.is_real() {
        let total = partition
            .classes()
            .map(|((a, b), freq)| freq as f64 * term.eval_real(a, b))
            .sum();
        return Ok(IndexValue::Real(total));
    }
    partition
        .classes()
        .try_fold(0i128, |acc, ((a, b), freq)| {
            term.eval_int(a, b)
                .and_then(|t| t.checked_mul(freq as i128))
                .and_then(|t| acc.checked_add(t))
        })
        .map(IndexValue::Int)
        .ok_or_else(overflow)
}

fn polynomial_term(kind: IndexKind) -> Result<EdgeTerm> {
    match kind {
        IndexKind::Lm1 => Ok(EdgeTerm::Sum),
        IndexKind::Lm2 => Ok(EdgeTerm::Product),
        IndexKind::Hlm1 => Ok(EdgeTerm::SumSquared),
        IndexKind::Hlm2 => Ok(EdgeTerm::ProductSquared),
        other => Err(Error::InvalidParameter(format!(
            "{other} has no index polynomial"
        ))),
    }
}

fn exponent(term: EdgeTerm, a: u32, b: u32, kind: IndexKind) -> Result<u64> {
    term.eval_int(a, b)
        .and_then(|e| u64::try_from(e).ok())
        .ok_or(Error::Overflow(kind.token()))
}

/// Index polynomial: one `x^w(e)` per edge, where `w` is `a+b`, `ab`,
/// `(a+b)^2` or `(ab)^2` for LM1, LM2, HLM1, HLM2.
pub fn compute_polynomial(
    g: &MolecularGraph,
    profile: &KDegreeProfile,
    kind: IndexKind,
) -> Result<IndexPolynomial> {
    profile.check_against(g)?;
    let term = polynomial_term(kind)?;
    let d = profile.degrees();
    let mut poly = IndexPolynomial::new();
    for &(u, v) in g.edges() {
        poly.add_term(exponent(term, d[u as usize], d[v as usize], kind)?, 1);
    }
    Ok(poly)
}

pub fn partition_polynomial(partition: &EdgePartition, kind: IndexKind) -> Result<IndexPolynomial> {
    let term = polynomial_term(kind)?;
    let mut poly = IndexPolynomial::new();
    for ((a, b), freq) in partition.classes() {
        poly.add_term(exponent(term, a, b, kind)?, freq);
    }
    Ok(poly)
}
