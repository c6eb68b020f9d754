use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Every index the engine knows how to evaluate.
///
/// The leap kinds take any k-degree profile. The classical kinds are the
/// same edge functors on ordinary degrees (a k=1 profile); `So` is the one
/// classical kind with its own functor, `sqrt(a^2 + b^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexKind {
    Lm1,
    Lm2,
    Hlm1,
    Hlm2,
    Lso,
    Lf,
    Hlf,
    Ly,
    Lyco,
    M1,
    M2,
    F,
    Hf,
    Y,
    Yco,
    So,
    Hm2,
    Hm2co,
}

/// Per-edge functor `f(a, b)` on the endpoint degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeTerm {
    /// a + b
    Sum,
    /// a b
    Product,
    /// (a + b)^2
    SumSquared,
    /// (a b)^2
    ProductSquared,
    /// a^2 + b^2
    SquareSum,
    /// (a^2 + b^2)^2
    SquareSumSquared,
    /// a^3 + b^3
    CubeSum,
    /// sqrt(a + b)
    SqrtSum,
    /// sqrt(a^2 + b^2)
    SqrtSquareSum,
}

/// How an index is assembled from the graph and its degree profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Edge(EdgeTerm),
    /// (n - 1) * sum(a^2 + b^2) - sum(a^3 + b^3) over edges.
    YCoindex,
    /// sum of a^2 b^2 over unordered pairs of distinct non-adjacent vertices.
    NonAdjacentProductSquared,
}

impl IndexKind {
    pub const ALL: [IndexKind; 18] = [
        IndexKind::Lm1,
        IndexKind::Lm2,
        IndexKind::Hlm1,
        IndexKind::Hlm2,
        IndexKind::Lso,
        IndexKind::Lf,
        IndexKind::Hlf,
        IndexKind::Ly,
        IndexKind::Lyco,
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::F,
        IndexKind::Hf,
        IndexKind::Y,
        IndexKind::Yco,
        IndexKind::So,
        IndexKind::Hm2,
        IndexKind::Hm2co,
    ];

    pub const LEAP: [IndexKind; 9] = [
        IndexKind::Lm1,
        IndexKind::Lm2,
        IndexKind::Hlm1,
        IndexKind::Hlm2,
        IndexKind::Lso,
        IndexKind::Lf,
        IndexKind::Hlf,
        IndexKind::Ly,
        IndexKind::Lyco,
    ];

    pub const CLASSICAL: [IndexKind; 9] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::F,
        IndexKind::Hf,
        IndexKind::Y,
        IndexKind::Yco,
        IndexKind::So,
        IndexKind::Hm2,
        IndexKind::Hm2co,
    ];

    /// Kinds that have an index polynomial.
    pub const POLYNOMIAL: [IndexKind; 4] = [
        IndexKind::Lm1,
        IndexKind::Lm2,
        IndexKind::Hlm1,
        IndexKind::Hlm2,
    ];

    pub fn token(self) -> &'static str {
        match self {
            IndexKind::Lm1 => "lm1",
            IndexKind::Lm2 => "lm2",
            IndexKind::Hlm1 => "hlm1",
            IndexKind::Hlm2 => "hlm2",
            IndexKind::Lso => "lso",
            IndexKind::Lf => "lf",
            IndexKind::Hlf => "hlf",
            IndexKind::Ly => "ly",
            IndexKind::Lyco => "lyco",
            IndexKind::M1 => "m1",
            IndexKind::M2 => "m2",
            IndexKind::F => "f",
            IndexKind::Hf => "hf",
            IndexKind::Y => "y",
            IndexKind::Yco => "yco",
            IndexKind::So => "so",
            IndexKind::Hm2 => "hm2",
            IndexKind::Hm2co => "hm2co",
        }
    }

    pub fn is_classical(self) -> bool {
        Self::CLASSICAL.contains(&self)
    }

    /// Real-valued kinds; everything else is an exact integer.
    pub fn is_real(self) -> bool {
        matches!(self, IndexKind::Lso | IndexKind::So)
    }

    pub fn rule(self) -> Rule {
        use EdgeTerm::*;
        match self {
            IndexKind::Lm1 | IndexKind::M1 => Rule::Edge(Sum),
            IndexKind::Lm2 | IndexKind::M2 => Rule::Edge(Product),
            IndexKind::Hlm1 => Rule::Edge(SumSquared),
            IndexKind::Hlm2 | IndexKind::Hm2 => Rule::Edge(ProductSquared),
            IndexKind::Lso => Rule::Edge(SqrtSum),
            IndexKind::So => Rule::Edge(SqrtSquareSum),
            IndexKind::Lf | IndexKind::F => Rule::Edge(SquareSum),
            IndexKind::Hlf | IndexKind::Hf => Rule::Edge(SquareSumSquared),
            IndexKind::Ly | IndexKind::Y => Rule::Edge(CubeSum),
            IndexKind::Lyco | IndexKind::Yco => Rule::YCoindex,
            IndexKind::Hm2co => Rule::NonAdjacentProductSquared,
        }
    }

    /// Parses a comma-separated token list such as `lm1,hlm2`.
    pub fn parse_list(list: &str) -> Result<Vec<IndexKind>, Error> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::UnknownToken(s.to_string()))
    }
}

impl EdgeTerm {
    pub fn is_real(self) -> bool {
        matches!(self, EdgeTerm::SqrtSum | EdgeTerm::SqrtSquareSum)
    }

    /// Exact value for the integer functors; `None` on overflow or for the
    /// square-root functors.
    pub fn eval_int(self, a: u32, b: u32) -> Option<i128> {
        let (a, b) = (a as i128, b as i128);
        match self {
            EdgeTerm::Sum => a.checked_add(b),
            EdgeTerm::Product => a.checked_mul(b),
            EdgeTerm::SumSquared => {
                let s = a.checked_add(b)?;
                s.checked_mul(s)
            }
            EdgeTerm::ProductSquared => {
                let p = a.checked_mul(b)?;
                p.checked_mul(p)
            }
            EdgeTerm::SquareSum => a.checked_mul(a)?.checked_add(b.checked_mul(b)?),
            EdgeTerm::SquareSumSquared => {
                let s = a.checked_mul(a)?.checked_add(b.checked_mul(b)?)?;
                s.checked_mul(s)
            }
            EdgeTerm::CubeSum => a
                .checked_mul(a)?
                .checked_mul(a)?
                .checked_add(b.checked_mul(b)?.checked_mul(b)?),
            EdgeTerm::SqrtSum | EdgeTerm::SqrtSquareSum => None,
        }
    }

    pub fn eval_real(self, a: u32, b: u32) -> f64 {
        let (a, b) = (a as f64, b as f64);
        match self {
            EdgeTerm::SqrtSum => (a + b).sqrt(),
            EdgeTerm::SqrtSquareSum => (a * a + b * b).sqrt(),
            EdgeTerm::Sum => a + b,
            EdgeTerm::Product => a * b,
            EdgeTerm::SumSquared => (a + b).powi(2),
            EdgeTerm::ProductSquared => (a * b).powi(2),
            EdgeTerm::SquareSum => a * a + b * b,
            EdgeTerm::SquareSumSquared => (a * a + b * b).powi(2),
            EdgeTerm::CubeSum => a.powi(3) + b.powi(3),
        }
    }
}
