//! The ring `H*(G_{k,n}; F2)` as normal forms modulo the Gröbner family.
//!
//! The leading terms of the family are exactly the monomials of exponent sum
//! `n + 1`, so a monomial is reducible iff its exponent sum exceeds `n`, and a
//! divisor is found by trimming exponents from the left until the sum is `n + 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2poly::{Monomial, Polynomial};
use crate::groebner_family::{GrassmannContext, GroebnerFamily};

/// A cohomology class, stored as its normal form (every term has exponent sum
/// at most `n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    ctx: GrassmannContext,
    value: Polynomial,
}

impl CohomologyClass {
    pub fn context(&self) -> &GrassmannContext {
        &self.ctx
    }

    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    pub fn into_value(self) -> Polynomial {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn one(ctx: GrassmannContext) -> Self {
        CohomologyClass {
            ctx,
            value: Polynomial::one(ctx.k()),
        }
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// The leading term of the family element used to reduce `t`: drop `S_t - (n+1)`
/// from the exponents, leftmost first.
fn structured_divisor(t: &Monomial, n: u32) -> Monomial {
    let mut excess = t.total_degree() - (u64::from(n) + 1);
    let exps = t
        .exponents()
        .iter()
        .map(|&e| {
            let d = excess.min(u64::from(e));
            excess -= d;
            e - d as u32
        })
        .collect();
    Monomial::new(exps)
}

/// The unique remainder of `f` modulo `I_{k,n}`.
pub fn normal_form(f: &Polynomial, family: &GroebnerFamily) -> Result<CohomologyClass> {
    let n = family.context().n();
    normal_form_with_divisors(f, family, |t| structured_divisor(t, n))
}

/// Division with a caller-chosen divisor for every reducible term.
///
/// `pick(t)` must return a monomial of exponent sum `n + 1` dividing `t`; any
/// such choice gives the same result. Terms are always processed from the
/// grlex-largest down.
pub fn normal_form_with_divisors(
    f: &Polynomial,
    family: &GroebnerFamily,
    mut pick: impl FnMut(&Monomial) -> Monomial,
) -> Result<CohomologyClass> {
    let ctx = *family.context();
    if f.k() != ctx.k() {
        return Err(Error::VariableMismatch {
            left: ctx.k(),
            right: f.k(),
        });
    }
    let bound = u64::from(ctx.n());
    let mut work = f.clone();
    while let Some(t) = work.pop_leading() {
        if t.total_degree() <= bound {
            // everything left is grlex-smaller, hence also of exponent sum <= n
            work.toggle(t);
            break;
        }
        let lead = pick(&t);
        if lead.total_degree() != bound + 1 || !lead.divides(&t) {
            return Err(Error::IndexRange(format!(
                "{lead} is not a valid divisor of {t}"
            )));
        }
        let quotient = t.checked_div(&lead).expect("lead divides t");
        let g = family.element_with_leading_term(&lead)?;
        for term in g.terms().rev().skip(1) {
            work.toggle(term.try_mul(&quotient)?);
        }
    }
    Ok(CohomologyClass { ctx, value: work })
}

/// `f ∈ I_{k,n}`.
pub fn is_zero(f: &Polynomial, family: &GroebnerFamily) -> Result<bool> {
    Ok(normal_form(f, family)?.is_zero())
}

/// Cup product: multiply and reduce.
pub fn cup(
    a: &CohomologyClass,
    b: &CohomologyClass,
    family: &GroebnerFamily,
) -> Result<CohomologyClass> {
    if a.ctx != b.ctx || a.ctx != *family.context() {
        return Err(Error::ContextMismatch);
    }
    normal_form(&a.value.try_mul(&b.value)?, family)
}

/// All monomials with exponent sum at most `n`, in increasing grlex order.
pub fn standard_basis(ctx: &GrassmannContext) -> Vec<Monomial> {
    fn rec(slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[slot] = v;
            rec(slot + 1, left - v, cur, out);
        }
        cur[slot] = 0;
    }
    let mut out = Vec::new();
    rec(0, ctx.n(), &mut vec![0; ctx.k()], &mut out);
    out.sort();
    out
}
