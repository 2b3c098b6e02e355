use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `W^A = w_1^{a_1} ... w_k^{a_k}` stored as its exponent vector.
///
/// `Ord` is grlex with `w_1 > w_2 > ... > w_k`: exponent sums first, then the
/// first differing exponent from the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(k: usize) -> Self {
        Monomial(vec![0; k])
    }

    /// The generator `w_j` (1-based) in `k` variables.
    pub fn var(k: usize, j: usize) -> Result<Self> {
        if j == 0 || j > k {
            return Err(Error::VariableOutOfRange { index: j, k });
        }
        let mut e = vec![0; k];
        e[j - 1] = 1;
        Ok(Monomial(e))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `S_A`, the exponent sum.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// `S'_A = Σ j·a_j`, the cohomological degree.
    pub fn weighted_degree(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &e)| (j as u64 + 1) * u64::from(e))
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_k(self.k(), other.k())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / divisor`, or `None` if `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if self.k() != divisor.k() {
            return None;
        }
        self.0
            .iter()
            .zip(&divisor.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_k(self.k(), other.k())?;
        Ok(Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        ))
    }

    /// Every exponent multiplied by `factor`; `m.scaled(2)` is `m^2`.
    pub fn scaled(&self, factor: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|e| e.checked_mul(factor).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }
}

pub(crate) fn check_k(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::VariableMismatch { left, right });
    }
    Ok(())
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// grlex comparison of two monomials in the same number of variables.
pub fn grlex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_k(a.k(), b.k())?;
    Ok(a.cmp(b))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (idx, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "w{}", idx + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
