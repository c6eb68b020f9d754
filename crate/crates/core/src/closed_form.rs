//! Published closed forms for the zigzag and rhombic families at k = 2.
//!
//! Everything here is the printed formula evaluated at `p`, not a
//! computation on a graph. Where a printed formula disagrees with its own
//! edge partition the printed version is kept; [`crate::verify`] reports the
//! difference.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::index::{EdgePartition, IndexKind, IndexPolynomial, IndexValue};

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Zigzag,
    Rhombic,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Zigzag, Family::Rhombic];

    pub fn token(self) -> &'static str {
        match self {
            Family::Zigzag => "zigzag",
            Family::Rhombic => "rhombic",
        }
    }

    pub fn vertex_count(self, p: u64) -> u64 {
        match self {
            Family::Zigzag => 8 * p + 2,
            Family::Rhombic => 2 * p * (p + 2),
        }
    }

    pub fn edge_count(self, p: u64) -> u64 {
        match self {
            Family::Zigzag => 10 * p + 1,
            Family::Rhombic => 3 * p * p + 4 * p - 1,
        }
    }

    pub fn hex_count(self, p: u64) -> u64 {
        match self {
            Family::Zigzag => 2 * p,
            Family::Rhombic => p * p,
        }
    }

    pub fn internal_vertex_count(self, p: u64) -> u64 {
        match self {
            Family::Zigzag => 0,
            Family::Rhombic => 2 * (p - 1) * (p - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.token() == s)
            .ok_or_else(|| Error::UnknownToken(s.to_string()))
    }
}

/// Square-free radicands that occur in the published Sombor-type forms.
pub const RADICANDS: [u32; 7] = [1, 2, 3, 5, 6, 7, 10];

/// Exact `sum c_i * sqrt(d_i)` over [`RADICANDS`] with rational `c_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalSum {
    coefficients: [Rational; 7],
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self {
            coefficients: [Rational::zero(); 7],
        }
    }

    /// Adds `c * sqrt(radicand)`. Panics if the radicand is not in
    /// [`RADICANDS`].
    pub fn add(self, c: i128, radicand: u32) -> Self {
        self.add_rational(Rational::from(c), radicand)
    }

    pub fn add_rational(mut self, c: Rational, radicand: u32) -> Self {
        let slot = RADICANDS
            .iter()
            .position(|&d| d == radicand)
            .unwrap_or_else(|| panic!("radicand {radicand} outside the basis"));
        self.coefficients[slot] += c;
        self
    }

    pub fn coefficient(&self, radicand: u32) -> Rational {
        RADICANDS
            .iter()
            .position(|&d| d == radicand)
            .map(|i| self.coefficients[i])
            .unwrap_or_else(Rational::zero)
    }

    pub fn to_f64(&self) -> f64 {
        RADICANDS
            .iter()
            .zip(&self.coefficients)
            .map(|(&d, c)| c.to_f64().unwrap_or(f64::NAN) * (d as f64).sqrt())
            .sum()
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&d, c) in RADICANDS.iter().zip(&self.coefficients) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if d == 1 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*sqrt({d})")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum ClosedValue {
    Int(i128),
    Radical(RadicalSum),
}

impl ClosedValue {
    pub fn to_index_value(&self) -> IndexValue {
        match self {
            ClosedValue::Int(v) => IndexValue::Int(*v),
            ClosedValue::Radical(r) => IndexValue::Real(r.to_f64()),
        }
    }
}

/// Which published expression a closed value reproduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    /// Theorem statement (or, for LF, the value stated inside its proof).
    Theorem,
    /// The coindex line of the theorems, which multiplies LF by `(p - 1)`
    /// instead of `(n - 1)`.
    CoindexPMinusOne,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedIndex {
    pub value: ClosedValue,
    pub derivation: Derivation,
}

fn check_p(p: u32) -> Result<i128> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!(
            "closed forms hold for p >= 2, got {p}"
        )));
    }
    Ok(p as i128)
}

/// Printed closed form of `kind` for the `p`-th member of `family`.
pub fn closed_index(family: Family, p: u32, kind: IndexKind) -> Result<ClosedIndex> {
    let p = check_p(p)?;
    let theorem = |v: i128| ClosedIndex {
        value: ClosedValue::Int(v),
        derivation: Derivation::Theorem,
    };
    let value = match (family, kind) {
        (Family::Zigzag, IndexKind::Lm1) => theorem(83 * p - 18),
        (Family::Zigzag, IndexKind::Lm2) => theorem(173 * p - 73),
        (Family::Zigzag, IndexKind::Hlm1) => theorem(709 * p - 350),
        (Family::Zigzag, IndexKind::Hlm2) => theorem(3337 * p - 2257),
        (Family::Zigzag, IndexKind::Lf) => theorem(363 * p - 154),
        (Family::Zigzag, IndexKind::Hlf) => theorem(14453 * p - 9468),
        (Family::Zigzag, IndexKind::Ly) => theorem(1655 * p - 930),
        (Family::Zigzag, IndexKind::Lyco) => ClosedIndex {
            value: ClosedValue::Int(-1292 * p * p + 2068 * p - 776),
            derivation: Derivation::CoindexPMinusOne,
        },
        (Family::Zigzag, IndexKind::Lso) => {
            // 4(1 + √5 + √7) + (p-1)(8√2 + 3√10 + 2√6) + 3p
            let r = RadicalSum::zero()
                .add(4, 1)
                .add(4, 5)
                .add(4, 7)
                .add(8 * (p - 1), 2)
                .add(3 * (p - 1), 10)
                .add(2 * (p - 1), 6)
                .add(3 * p, 1);
            ClosedIndex {
                value: ClosedValue::Radical(r),
                derivation: Derivation::Theorem,
            }
        }
        (Family::Rhombic, IndexKind::Lm1) => theorem(36 * p * p + 8 * p - 20),
        (Family::Rhombic, IndexKind::Lm2) => theorem(108 * p * p - 64 * p - 34),
        (Family::Rhombic, IndexKind::Hlm1) => theorem(432 * p * p - 240 * p - 140),
        (Family::Rhombic, IndexKind::Hlm2) => theorem(3888 * p * p - 6016 * p + 1538),
        (Family::Rhombic, IndexKind::Lf) => theorem(216 * p * p - 112 * p - 72),
        (Family::Rhombic, IndexKind::Hlf) => theorem(15552 * p * p - 22464 * p + 5044),
        (Family::Rhombic, IndexKind::Ly) => theorem(1296 * p * p - 1312 * p - 32),
        (Family::Rhombic, IndexKind::Lyco) => ClosedIndex {
            value: ClosedValue::Int(-1080 * p * p * p + 2280 * p * p - 1160 * p - 40),
            derivation: Derivation::CoindexPMinusOne,
        },
        (Family::Rhombic, IndexKind::Lso) => {
            // 6p²√3 + p(16√2 + 4√10 - 16√3) + 4(√5 - √10)
            //   + 2(√6 + 4√7 + 5√3 - 16√2)
            let r = RadicalSum::zero()
                .add(6 * p * p, 3)
                .add(16 * p, 2)
                .add(4 * p, 10)
                .add(-16 * p, 3)
                .add(4, 5)
                .add(-4, 10)
                .add(2, 6)
                .add(8, 7)
                .add(10, 3)
                .add(-32, 2);
            ClosedIndex {
                value: ClosedValue::Radical(r),
                derivation: Derivation::Theorem,
            }
        }
        (_, other) => return Err(Error::UnknownKind(other.token())),
    };
    Ok(value)
}

/// Published edge partition (k = 2) instantiated at `p`; empty classes are
/// dropped.
pub fn closed_partition(family: Family, p: u32) -> Result<EdgePartition> {
    let p = check_p(p)? as u64;
    let classes: Vec<(u32, u32, u64)> = match family {
        Family::Zigzag => vec![
            (2, 2, 2),
            (2, 3, 4),
            (3, 3, 2 * (p - 1)),
            (3, 4, 4),
            (3, 5, 4 * (p - 1)),
            (4, 5, p),
            (5, 5, 3 * (p - 1)),
        ],
        Family::Rhombic => vec![
            (2, 3, 4),
            (3, 3, 2),
            (3, 4, 8),
            (4, 4, 8 * (p - 2)),
            (4, 6, 4 * (p - 1)),
            (6, 6, (p - 1) * (p - 1) + 2 * (p - 1) * (p - 2)),
        ],
    };
    Ok(EdgePartition::from_classes(2, classes))
}

/// Published index polynomial at `p`, term by term as printed.
pub fn closed_polynomial(family: Family, p: u32, kind: IndexKind) -> Result<IndexPolynomial> {
    let p = check_p(p)? as u64;
    let terms: Vec<(u64, u64)> = match (family, kind) {
        (Family::Zigzag, IndexKind::Lm1) => vec![
            (4, 2),
            (5, 4),
            (6, 2 * (p - 1)),
            (7, 4),
            (8, 4 * (p - 1)),
            (9, p),
            (10, 3 * (p - 1)),
        ],
        (Family::Zigzag, IndexKind::Lm2) => vec![
            (4, 2),
            (6, 4),
            (9, 2 * (p - 1)),
            (12, 4),
            (15, 4 * (p - 1)),
            (20, p),
            (25, 3 * (p - 1)),
        ],
        (Family::Zigzag, IndexKind::Hlm1) => vec![
            (16, 2),
            (25, 4),
            (36, 2 * (p - 1)),
            (49, 4),
            (64, 4 * (p - 1)),
            (81, p),
            (100, 3 * (p - 1)),
        ],
        (Family::Zigzag, IndexKind::Hlm2) => vec![
            (16, 2),
            (36, 4),
            (81, 2 * (p - 1)),
            (144, 4),
            (225, 4 * (p - 1)),
            (400, p),
            (625, 3 * (p - 1)),
        ],
        (Family::Rhombic, kind) => {
            let exps: [u64; 6] = match kind {
                IndexKind::Lm1 => [5, 6, 7, 8, 10, 12],
                IndexKind::Lm2 => [6, 9, 12, 16, 24, 36],
                IndexKind::Hlm1 => [25, 36, 49, 64, 100, 144],
                IndexKind::Hlm2 => [36, 81, 144, 256, 576, 1296],
                other => return Err(Error::UnknownKind(other.token())),
            };
            let coeffs = [4, 2, 8, 8 * (p - 2), 4 * (p - 1), 3 * p * p + 5 - 8 * p];
            exps.into_iter().zip(coeffs).collect()
        }
        (_, other) => return Err(Error::UnknownKind(other.token())),
    };
    Ok(IndexPolynomial::from_terms(terms))
}
