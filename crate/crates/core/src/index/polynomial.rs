use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

/// Sparse polynomial with non-negative integer exponents and positive
/// integer coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndexPolynomial {
    terms: BTreeMap<u64, u64>,
}

impl IndexPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Collects `(exponent, coefficient)` pairs, merging repeated exponents
    /// and dropping zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (u64, u64)>>(terms: I) -> Self {
        let mut poly = Self::new();
        for (e, c) in terms {
            poly.add_term(e, c);
        }
        poly
    }

    pub fn add_term(&mut self, exponent: u64, coefficient: u64) {
        if coefficient == 0 {
            return;
        }
        *self.terms.entry(exponent).or_insert(0) += coefficient;
    }

    pub fn coefficient(&self, exponent: u64) -> u64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// P(1): the sum of coefficients.
    pub fn eval_at_one(&self) -> u128 {
        self.terms.values().map(|&c| c as u128).sum()
    }

    /// P'(1): the sum of exponent times coefficient.
    pub fn derivative_at_one(&self) -> u128 {
        self.terms
            .iter()
            .map(|(&e, &c)| e as u128 * c as u128)
            .sum()
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut power = BigRational::one();
        let mut at = 0u64;
        for (&e, &c) in &self.terms {
            if e > at {
                power *= Pow::pow(x, e - at);
                at = e;
            }
            acc += &power * BigRational::from_integer(BigInt::from(c));
        }
        acc
    }
}

/// Evaluates `poly` at `x` exactly.
pub fn poly_eval(poly: &IndexPolynomial, x: &BigRational) -> BigRational {
    poly.eval(x)
}

/// Ascending-exponent form, e.g. `2x^4 + 4x^5 + 1x^36`; the zero
/// polynomial prints as `0`.
impl fmt::Display for IndexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}x^{e}")?;
        }
        Ok(())
    }
}
