//! Three-way comparison of computed indices, published closed forms and
//! published tables.
//!
//! For every `p` and quantity the report holds the value computed on the
//! built graph (the oracle), the closed-form value, and the table cell when
//! `p` is inside the tables' range. Integers compare exactly. Sombor values
//! compare within [`LSO_TOLERANCE`] against two-decimal table cells and
//! within [`REAL_EPSILON`] (relative) between oracle and closed form.

mod discrepancies;
mod fixtures;
mod report;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use discrepancies::{discrepancies_for, known_discrepancies, KnownDiscrepancy};
pub use fixtures::{fixture, fixtures, Fixture, FixtureValue, Source, TABLE_P_MAX, TABLE_P_MIN};
pub use report::ReportFormat;

use crate::closed_form::{closed_index, closed_partition, Family};
use crate::error::{Error, Result};
use crate::graph::k_degree_profile;
use crate::index::{compute_index, edge_partition, EdgePartition, IndexKind, IndexValue};

/// Published tables and closed forms are all stated for k = 2.
pub const VERIFY_K: u32 = 2;
/// Allowed gap between a computed Sombor value and a two-decimal table cell.
pub const LSO_TOLERANCE: f64 = 0.05;
/// Relative tolerance between two full-precision real evaluations.
pub const REAL_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    Index(IndexKind),
    Partition,
}

impl Quantity {
    /// Quantities in a verification report, in report order.
    pub const VERIFIED: [Quantity; 10] = [
        Quantity::Index(IndexKind::Hlf),
        Quantity::Index(IndexKind::Hlm1),
        Quantity::Index(IndexKind::Hlm2),
        Quantity::Index(IndexKind::Lf),
        Quantity::Index(IndexKind::Lm1),
        Quantity::Index(IndexKind::Lm2),
        Quantity::Index(IndexKind::Lso),
        Quantity::Index(IndexKind::Ly),
        Quantity::Index(IndexKind::Lyco),
        Quantity::Partition,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Quantity::Index(kind) => kind.token(),
            Quantity::Partition => "partition",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "partition" {
            Ok(Quantity::Partition)
        } else {
            s.parse().map(Quantity::Index)
        }
    }
}

/// A computed or closed-form value in a report row.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Real(f64),
    Partition(EdgePartition),
}

impl From<IndexValue> for Cell {
    fn from(v: IndexValue) -> Self {
        match v {
            IndexValue::Int(i) => Cell::Int(i),
            IndexValue::Real(r) => Cell::Real(r),
        }
    }
}

/// Integers exactly, reals with two decimals, partitions as `a-b:f` lists.
impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Real(v) => write!(f, "{v:.2}"),
            Cell::Partition(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Match,
    Mismatch,
    KnownDiscrepancy,
}

impl Status {
    pub fn token(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::KnownDiscrepancy => "known-discrepancy",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub family: Family,
    pub p: u32,
    pub quantity: Quantity,
    pub oracle: Cell,
    pub closed: Option<Cell>,
    pub fixture: Option<FixtureValue>,
    pub status: Status,
    /// Which pairs disagree and by how much, plus covering registry ids.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    pub rows: Vec<Row>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(Status::Mismatch) > 0
    }

    pub fn row(&self, family: Family, p: u32, quantity: Quantity) -> Option<&Row> {
        self.rows
            .iter()
            .find(|r| r.family == family && r.p == p && r.quantity == quantity)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.rows.extend(other.rows);
    }
}

/// Builds each member of `family` for `p_min..=p_max` and compares every
/// quantity in [`Quantity::VERIFIED`]. Rows come out ordered by
/// `(p, quantity token)`.
pub fn verify_range(family: Family, p_min: u32, p_max: u32) -> Result<VerificationReport> {
    if p_min < 2 || p_min > p_max {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= p_min <= p_max, got {p_min}..{p_max}"
        )));
    }
    let per_p: Vec<Vec<Row>> = (p_min..=p_max)
        .into_par_iter()
        .map(|p| verify_one(family, p))
        .collect::<Result<_>>()?;
    Ok(VerificationReport {
        rows: per_p.into_iter().flatten().collect(),
    })
}

fn verify_one(family: Family, p: u32) -> Result<Vec<Row>> {
    let graph = family.build(p)?.graph;
    let profile = k_degree_profile(&graph, VERIFY_K)?;
    let mut rows = Vec::with_capacity(Quantity::VERIFIED.len());
    for quantity in Quantity::VERIFIED {
        let (oracle, closed) = match quantity {
            Quantity::Index(kind) => (
                Cell::from(compute_index(&graph, &profile, kind)?),
                Cell::from(closed_index(family, p, kind)?.value.to_index_value()),
            ),
            Quantity::Partition => (
                Cell::Partition(edge_partition(&graph, &profile)?),
                Cell::Partition(closed_partition(family, p)?),
            ),
        };
        let fixture = fixture(family, p, quantity).map(|f| f.value);
        rows.push(judge(family, p, quantity, oracle, closed, fixture));
    }
    Ok(rows)
}

/// One pairwise comparison; `None` when the values agree.
fn compare(left: &str, a: &Cell, right: &str, b: &Cell) -> Option<String> {
    match (a, b) {
        (Cell::Int(x), Cell::Int(y)) => {
            (x != y).then(|| format!("{left} {x} vs {right} {y} (delta {})", y - x))
        }
        (Cell::Real(x), Cell::Real(y)) => {
            let scale = x.abs().max(y.abs()).max(1.0);
            ((x - y).abs() > REAL_EPSILON * scale)
                .then(|| format!("{left} {x:.6} vs {right} {y:.6} (delta {:.6})", y - x))
        }
        (Cell::Partition(x), Cell::Partition(y)) => {
            let diff = x.diff(y);
            (!diff.is_empty()).then(|| {
                let deltas: Vec<String> = diff
                    .iter()
                    .map(|((a, b), d)| format!("{a}-{b}:{d:+}"))
                    .collect();
                format!("{left}->{right} class deltas {}", deltas.join(" "))
            })
        }
        _ => Some(format!("{left} and {right} have different types")),
    }
}

/// Compares a value with a table cell; returns the disagreement, or the
/// observed gap for within-tolerance two-decimal cells.
fn compare_fixture(name: &str, value: &Cell, fixture: &FixtureValue) -> (Option<String>, f64) {
    match (value, fixture) {
        (Cell::Int(x), FixtureValue::Int(y)) => (
            (x != y).then(|| format!("{name} {x} vs table {y} (delta {})", y - x)),
            0.0,
        ),
        (Cell::Real(x), FixtureValue::Hundredths(_)) => {
            let y = fixture.as_f64().unwrap_or(f64::NAN);
            let gap = (x - y).abs();
            (
                (gap > LSO_TOLERANCE)
                    .then(|| format!("{name} {x:.2} vs table {fixture} (gap {gap:.2})")),
                gap,
            )
        }
        (Cell::Partition(x), FixtureValue::Partition(y)) => (
            compare(
                name,
                &Cell::Partition(x.clone()),
                "table",
                &Cell::Partition(y.clone()),
            ),
            0.0,
        ),
        _ => (Some(format!("{name} and table have different types")), 0.0),
    }
}

fn judge(
    family: Family,
    p: u32,
    quantity: Quantity,
    oracle: Cell,
    closed: Cell,
    fixture: Option<FixtureValue>,
) -> Row {
    let mut problems = Vec::new();
    let mut max_gap = 0.0f64;
    match &fixture {
        Some(fx) => {
            for (name, value) in [("oracle", &oracle), ("closed", &closed)] {
                let (problem, gap) = compare_fixture(name, value, fx);
                problems.extend(problem);
                max_gap = max_gap.max(gap);
            }
        }
        None => problems.extend(compare("oracle", &oracle, "closed", &closed)),
    }

    let known = discrepancies_for(family, quantity, p);
    let mut notes = problems;
    let status = if notes.is_empty() {
        Status::Match
    } else if !known.is_empty() {
        Status::KnownDiscrepancy
    } else {
        Status::Mismatch
    };
    if status == Status::Match && max_gap > 0.005 {
        notes.push(format!("within rounding tolerance (gap {max_gap:.3})"));
    }
    if status == Status::KnownDiscrepancy {
        let mut ids: Vec<&str> = known.iter().map(|d| d.id).collect();
        ids.dedup();
        notes.push(format!("known: {}", ids.join(", ")));
    }
    Row {
        family,
        p,
        quantity,
        oracle,
        closed: Some(closed),
        fixture,
        status,
        detail: notes.join("; "),
    }
}
