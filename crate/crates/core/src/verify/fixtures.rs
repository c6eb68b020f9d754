//! Published numeric tables, compiled in.

use std::fmt;

use super::Quantity;
use crate::closed_form::{closed_partition, Family};
use crate::index::{EdgePartition, IndexKind};

/// Smallest and largest `p` covered by the numeric tables.
pub const TABLE_P_MIN: u32 = 2;
pub const TABLE_P_MAX: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    Table1,
    Table2,
    Table3,
    Table4,
    Table5,
    Table6,
}

impl Source {
    pub fn for_cell(family: Family, quantity: Quantity) -> Source {
        use IndexKind::*;
        match (family, quantity) {
            (Family::Zigzag, Quantity::Partition) => Source::Table1,
            (Family::Rhombic, Quantity::Partition) => Source::Table2,
            (Family::Zigzag, Quantity::Index(Lm1 | Lm2 | Hlm1 | Hlm2)) => Source::Table3,
            (Family::Zigzag, Quantity::Index(_)) => Source::Table4,
            (Family::Rhombic, Quantity::Index(Lm1 | Lm2 | Hlm1 | Hlm2)) => Source::Table5,
            (Family::Rhombic, Quantity::Index(_)) => Source::Table6,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            Source::Table1 => 1,
            Source::Table2 => 2,
            Source::Table3 => 3,
            Source::Table4 => 4,
            Source::Table5 => 5,
            Source::Table6 => 6,
        };
        write!(f, "table{n}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureValue {
    Int(i128),
    /// A value printed to two decimals, stored in hundredths.
    Hundredths(i64),
    Partition(EdgePartition),
}

impl FixtureValue {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            FixtureValue::Int(v) => Some(*v as f64),
            FixtureValue::Hundredths(h) => Some(*h as f64 / 100.0),
            FixtureValue::Partition(_) => None,
        }
    }
}

impl fmt::Display for FixtureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureValue::Int(v) => write!(f, "{v}"),
            FixtureValue::Hundredths(h) => {
                let sign = if *h < 0 { "-" } else { "" };
                write!(f, "{sign}{}.{:02}", h.abs() / 100, h.abs() % 100)
            }
            FixtureValue::Partition(part) => write!(f, "{part}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub family: Family,
    pub p: u32,
    pub quantity: Quantity,
    pub value: FixtureValue,
    pub source: Source,
}

// p = 2..=10; columns LM1, LM2, HLM1, HLM2
const ZIGZAG_ZAGREB: [[i128; 4]; 9] = [
    [148, 273, 1068, 4417],
    [231, 446, 1777, 7754],
    [314, 619, 2486, 11091],
    [397, 792, 3195, 14428],
    [480, 965, 3904, 17765],
    [563, 1138, 4613, 21102],
    [646, 1311, 5322, 24439],
    [729, 1484, 6031, 27776],
    [812, 1657, 6740, 31113],
];

// p = 2..=10; columns LSO (hundredths), LF, HLF, LY, LY coindex
const ZIGZAG_NEW: [(i64, [i128; 4]); 9] = [
    (5521, [572, 19438, 2380, -1808]),
    (8390, [935, 33891, 4035, -6200]),
    (11259, [1298, 48344, 5640, -13176]),
    (14128, [1661, 62797, 7345, -22736]),
    (16997, [2024, 77250, 9000, -34880]),
    (19866, [2387, 91703, 10655, -49608]),
    (22735, [2750, 106156, 12310, -66920]),
    (25604, [3113, 120609, 13965, -86816]),
    (28473, [3476, 135062, 15620, -109296]),
];

const RHOMBIC_ZAGREB: [[i128; 4]; 9] = [
    [140, 270, 1108, 5058],
    [328, 746, 3028, 18482],
    [588, 1438, 5812, 39682],
    [920, 2346, 9460, 68658],
    [1324, 3470, 13972, 105410],
    [1800, 4810, 19348, 149938],
    [2348, 6366, 25588, 202242],
    [2968, 8138, 32692, 262322],
    [3660, 10126, 40660, 330178],
];

const RHOMBIC_NEW: [(i64, [i128; 4]); 9] = [
    (5111, [568, 22324, 2528, 15400]),
    (11062, [1536, 77620, 7696, 46160]),
    (19091, [2936, 164020, 15456, 100920]),
    (29123, [4768, 281524, 25808, 186160]),
    (41383, [7032, 430132, 38752, 308360]),
    (55646, [9728, 609844, 54288, 474000]),
    (71987, [12856, 820660, 72416, 689560]),
    (90406, [16416, 1062580, 93136, 961520]),
    (110904, [20408, 1335604, 116448, 1296360]),
];

const ZAGREB_COLUMNS: [IndexKind; 4] = [
    IndexKind::Lm1,
    IndexKind::Lm2,
    IndexKind::Hlm1,
    IndexKind::Hlm2,
];
const NEW_INT_COLUMNS: [IndexKind; 4] = [
    IndexKind::Lf,
    IndexKind::Hlf,
    IndexKind::Ly,
    IndexKind::Lyco,
];

/// Every published cell: the index tables for p in 2..=10 plus the
/// symbolic edge partitions instantiated at the same p.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let (zagreb, new) = match family {
            Family::Zigzag => (&ZIGZAG_ZAGREB, &ZIGZAG_NEW),
            Family::Rhombic => (&RHOMBIC_ZAGREB, &RHOMBIC_NEW),
        };
        for (row, p) in (TABLE_P_MIN..=TABLE_P_MAX).enumerate() {
            let mut push = |quantity: Quantity, value: FixtureValue| {
                out.push(Fixture {
                    family,
                    p,
                    quantity,
                    value,
                    source: Source::for_cell(family, quantity),
                })
            };
            for (kind, &v) in ZAGREB_COLUMNS.iter().zip(&zagreb[row]) {
                push(Quantity::Index(*kind), FixtureValue::Int(v));
            }
            let (lso, ints) = new[row];
            push(
                Quantity::Index(IndexKind::Lso),
                FixtureValue::Hundredths(lso),
            );
            for (kind, &v) in NEW_INT_COLUMNS.iter().zip(&ints) {
                push(Quantity::Index(*kind), FixtureValue::Int(v));
            }
            let part = closed_partition(family, p).expect("p >= 2");
            push(Quantity::Partition, FixtureValue::Partition(part));
        }
    }
    out
}

pub fn fixture(family: Family, p: u32, quantity: Quantity) -> Option<Fixture> {
    if !(TABLE_P_MIN..=TABLE_P_MAX).contains(&p) {
        return None;
    }
    fixtures()
        .into_iter()
        .find(|f| f.family == family && f.p == p && f.quantity == quantity)
}
