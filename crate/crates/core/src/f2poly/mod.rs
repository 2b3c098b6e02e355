//! Polynomials over F2 in `w_1, ..., w_k`, ordered by grlex.
//!
//! Coefficients are implicit: a polynomial is its set of terms, addition is
//! symmetric difference.

mod monomial;
mod text;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

pub use monomial::{grlex_compare, Monomial};
pub use text::parse;

use crate::error::{Error, Result};
use monomial::check_k;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    k: usize,
    // ascending grlex; the leading term is the last element
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(k: usize) -> Self {
        Polynomial {
            k,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::from_monomial(Monomial::one(k))
    }

    pub fn var(k: usize, j: usize) -> Result<Self> {
        Monomial::var(k, j).map(Self::from_monomial)
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let k = m.k();
        Polynomial {
            k,
            terms: BTreeSet::from([m]),
        }
    }

    /// Sum of the given monomials over F2 (repeated monomials cancel in pairs).
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(k: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(k);
        for m in terms {
            check_k(k, m.k())?;
            p.toggle(m);
        }
        Ok(p)
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(k: usize, terms: &[&[u32]]) -> Result<Self> {
        Self::from_terms(k, terms.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing grlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn leading_term(&self) -> Result<&Monomial> {
        self.terms.last().ok_or(Error::ZeroPolynomial)
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Monomial> {
        self.terms.pop_last()
    }

    /// Add a single monomial (removes it if already present).
    ///
    /// Panics if `m` has the wrong number of variables.
    pub fn toggle(&mut self, m: Monomial) {
        assert_eq!(m.k(), self.k, "monomial has the wrong number of variables");
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_k(self.k, other.k)?;
        Ok(Polynomial {
            k: self.k,
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_k(self.k, other.k)?;
        let mut out = Polynomial::zero(self.k);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.try_mul(b)?);
            }
        }
        Ok(out)
    }

    /// `self * other` keeping only terms of weighted degree at most `max_degree`.
    pub fn mul_truncated(&self, other: &Polynomial, max_degree: u64) -> Result<Polynomial> {
        check_k(self.k, other.k)?;
        let mut out = Polynomial::zero(self.k);
        for a in &self.terms {
            let da = a.weighted_degree();
            if da > max_degree {
                continue;
            }
            for b in &other.terms {
                if da + b.weighted_degree() <= max_degree {
                    out.toggle(a.try_mul(b)?);
                }
            }
        }
        Ok(out)
    }

    /// `self^e` truncated to weighted degree at most `max_degree`.
    pub fn pow_truncated(&self, mut e: u64, max_degree: u64) -> Result<Polynomial> {
        let mut base = self.truncated(max_degree);
        let mut acc = Polynomial::one(self.k).truncated(max_degree);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_truncated(&base, max_degree)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square()?.truncated(max_degree);
            }
        }
        Ok(acc)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        check_k(self.k, m.k())?;
        let terms = self
            .terms
            .iter()
            .map(|t| t.try_mul(m))
            .collect::<Result<_>>()?;
        Ok(Polynomial { k: self.k, terms })
    }

    /// `self^2`; over F2 this squares every term.
    pub fn square(&self) -> Result<Polynomial> {
        self.frobenius(1)
    }

    /// `self^(2^e)`.
    pub fn frobenius(&self, e: u32) -> Result<Polynomial> {
        let factor = 1u32.checked_shl(e).ok_or(Error::ExponentOverflow)?;
        let terms = self
            .terms
            .iter()
            .map(|t| t.scaled(factor))
            .collect::<Result<_>>()?;
        Ok(Polynomial { k: self.k, terms })
    }

    pub fn pow(&self, mut e: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.k);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square()?;
            }
        }
        Ok(acc)
    }

    /// The terms of weighted degree exactly `d`.
    pub fn homogeneous_component(&self, d: u64) -> Polynomial {
        self.filter(|m| m.weighted_degree() == d)
    }

    /// The terms of weighted degree at most `d`.
    pub fn truncated(&self, d: u64) -> Polynomial {
        self.filter(|m| m.weighted_degree() <= d)
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            k: self.k,
            terms: self.terms.iter().filter(|m| keep(m)).cloned().collect(),
        }
    }

    /// Distinct weighted degrees of the terms, ascending.
    pub fn weighted_degrees(&self) -> BTreeSet<u64> {
        self.terms.iter().map(Monomial::weighted_degree).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degrees().len() <= 1
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(
            self.k, rhs.k,
            "polynomials have different numbers of variables"
        );
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// Panics on mismatched variable counts or exponent overflow; use
    /// [`Polynomial::try_mul`] to handle those.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, m) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(k={}, {})", self.k, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Ordering;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(k: usize, s: &str) -> Polynomial {
        parse(s, k).unwrap()
    }

    #[test]
    fn grlex_examples() {
        assert_eq!(
            grlex_compare(&mono(&[1, 1, 0]), &mono(&[0, 0, 2])),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            grlex_compare(&mono(&[0, 3]), &mono(&[2, 0])),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            grlex_compare(&mono(&[2, 1]), &mono(&[2, 1])),
            Ok(Ordering::Equal)
        );
        assert_eq!(
            grlex_compare(&mono(&[2, 1]), &mono(&[2, 1, 0])),
            Err(Error::VariableMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn add_examples() {
        let w1 = Polynomial::var(2, 1).unwrap();
        let w2 = Polynomial::var(2, 2).unwrap();
        assert!((&w1 + &w1).is_zero());
        assert_eq!(&w1 + &w2, poly(2, "w1 + w2"));
        assert_eq!(&w1 + &Polynomial::zero(2), w1);
        assert!(w1.try_add(&Polynomial::zero(3)).is_err());
    }

    #[test]
    fn mul_examples() {
        let s = poly(2, "w1 + w2");
        assert_eq!(&s * &s, poly(2, "w1^2 + w2^2"));
        assert_eq!(&poly(2, "w1") * &poly(2, "w2^3"), poly(2, "w1*w2^3"));
        assert_eq!(&s * &Polynomial::one(2), s);
        assert_eq!(&s * &Polynomial::zero(2), Polynomial::zero(2));
        assert!(s.try_mul(&Polynomial::one(3)).is_err());
    }

    #[test]
    fn mul_overflow_is_reported() {
        let big = Polynomial::from_monomial(mono(&[u32::MAX, 0]));
        assert_eq!(big.try_mul(&poly(2, "w1")), Err(Error::ExponentOverflow));
        assert_eq!(big.square(), Err(Error::ExponentOverflow));
    }

    #[test]
    fn leading_term_examples() {
        assert_eq!(
            poly(2, "w1^2*w2 + w2^2").leading_term().unwrap(),
            &mono(&[2, 1])
        );
        assert_eq!(poly(2, "w1 + w2").leading_term().unwrap(), &mono(&[1, 0]));
        assert_eq!(poly(3, "w2*w3").leading_term().unwrap(), &mono(&[0, 1, 1]));
        assert_eq!(
            Polynomial::zero(2).leading_term(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn pow_and_components() {
        let s = poly(2, "1 + w1 + w2");
        assert_eq!(s.pow(0).unwrap(), Polynomial::one(2));
        assert_eq!(s.pow(3).unwrap(), &(&s * &s) * &s);
        let cube = s.pow(3).unwrap();
        assert_eq!(cube.homogeneous_component(2), poly(2, "w1^2 + w2"));
        assert!(cube.homogeneous_component(2).is_homogeneous());
        assert_eq!(cube.truncated(1), poly(2, "1 + w1"));
        assert_eq!(s.pow_truncated(3, 2).unwrap(), cube.truncated(2));
        assert_eq!(s.pow_truncated(1000, 0).unwrap(), Polynomial::one(2));
    }

    fn arb_poly(k: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(proptest::collection::vec(0u32..4, k), 0..6).prop_map(
            move |terms| Polynomial::from_terms(k, terms.into_iter().map(Monomial::new)).unwrap(),
        )
    }

    fn arb_mono(k: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, k).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn grlex_is_multiplicative(a in arb_mono(3), b in arb_mono(3), c in arb_mono(3)) {
            let lhs = a.cmp(&b);
            prop_assert_eq!(a.try_mul(&c).unwrap().cmp(&b.try_mul(&c).unwrap()), lhs);
        }

        #[test]
        fn ring_axioms(f in arb_poly(3), g in arb_poly(3), h in arb_poly(3)) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert!((&f + &f).is_zero());
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn leading_term_is_multiplicative(f in arb_poly(3), g in arb_poly(3)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let lt = f.leading_term().unwrap().try_mul(g.leading_term().unwrap()).unwrap();
            let product = &f * &g;
            prop_assert_eq!(product.leading_term().unwrap(), &lt);
        }

        #[test]
        fn text_round_trip(f in arb_poly(4)) {
            prop_assert_eq!(parse(&f.to_string(), 4).unwrap(), f);
        }

        #[test]
        fn square_is_self_product(f in arb_poly(3)) {
            prop_assert_eq!(f.square().unwrap(), &f * &f);
        }
    }
}
