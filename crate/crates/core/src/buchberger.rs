//! A generic Buchberger engine over F2 (grlex), used as an independent check
//! on the closed-form family.
//!
//! Nothing here knows about the shape of `I_{k,n}`: divisors are found by
//! scanning leading terms, and pairs are processed with the normal selection
//! strategy plus the coprime-leading-term criterion.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::combinatorics::for_each_weighted_composition;
use crate::dual_classes::wbar_sequence;
use crate::error::{Error, Result};
use crate::f2poly::{Monomial, Polynomial};
use crate::groebner_family::{build_family, GrassmannContext};

/// Default cap on the basis size accepted by [`oracle_equals_family`].
pub const DEFAULT_CAP: u64 = 500;

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let lf = f.leading_term()?;
    let lg = g.leading_term()?;
    let lcm = lf.lcm(lg)?;
    let mut s = f.mul_monomial(&lcm.checked_div(lf).expect("lcm"))?;
    s += &g.mul_monomial(&lcm.checked_div(lg).expect("lcm"))?;
    Ok(s)
}

/// Full reduction of `f` by `basis` (every term, not just the leading one).
pub fn reduce_generic(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let leads: Vec<&Monomial> = basis.iter().filter_map(|g| g.leading_term().ok()).collect();
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    reduce_with(f, &nonzero, &leads)
}

fn reduce_with(f: &Polynomial, basis: &[&Polynomial], leads: &[&Monomial]) -> Result<Polynomial> {
    let mut work = f.clone();
    let mut rem = Polynomial::zero(f.k());
    while let Some(t) = work.pop_leading() {
        match leads.iter().position(|l| l.divides(&t)) {
            Some(idx) => {
                let q = t.checked_div(leads[idx]).expect("divides");
                for term in basis[idx].terms().rev().skip(1) {
                    work.toggle(term.try_mul(&q)?);
                }
            }
            None => rem.toggle(t),
        }
    }
    Ok(rem)
}

/// A Gröbner basis of the ideal generated by `generators`.
pub fn buchberger(generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if let Some(first) = basis.first() {
        let k = first.k();
        if let Some(bad) = basis.iter().find(|g| g.k() != k) {
            return Err(Error::VariableMismatch {
                left: k,
                right: bad.k(),
            });
        }
    }
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term().cloned())
        .collect::<Result<_>>()?;
    let mut pairs = BinaryHeap::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut pairs, &leads, i, j)?;
        }
    }
    while let Some(Reverse((_, i, j))) = pairs.pop() {
        let s = s_polynomial(&basis[i], &basis[j])?;
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let lead_refs: Vec<&Monomial> = leads.iter().collect();
        let h = reduce_with(&s, &refs, &lead_refs)?;
        if h.is_zero() {
            continue;
        }
        leads.push(h.leading_term()?.clone());
        basis.push(h);
        let new = basis.len() - 1;
        for i in 0..new {
            push_pair(&mut pairs, &leads, i, new)?;
        }
    }
    Ok(basis)
}

type PairQueue = BinaryHeap<Reverse<(Monomial, usize, usize)>>;

fn push_pair(pairs: &mut PairQueue, leads: &[Monomial], i: usize, j: usize) -> Result<()> {
    let lcm = leads[i].lcm(&leads[j])?;
    // coprime leading terms: the S-polynomial reduces to zero
    if lcm == leads[i].try_mul(&leads[j])? {
        return Ok(());
    }
    pairs.push(Reverse((lcm, i, j)));
    Ok(())
}

/// The reduced Gröbner basis from any Gröbner basis: drop elements whose
/// leading term is divisible by another's, fully reduce each tail against the
/// rest, and sort by leading term.
pub fn reduce_basis(gb: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut sorted: Vec<&Polynomial> = gb.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| {
        a.leading_term()
            .expect("nonzero")
            .cmp(b.leading_term().expect("nonzero"))
    });
    let mut minimal: Vec<&Polynomial> = Vec::new();
    for g in sorted {
        let lt = g.leading_term()?;
        if !minimal
            .iter()
            .any(|h| h.leading_term().expect("nonzero").divides(lt))
        {
            minimal.push(g);
        }
    }
    let leads: Vec<&Monomial> = minimal
        .iter()
        .map(|g| g.leading_term().expect("nonzero"))
        .collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (idx, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .map(|(_, p)| *p)
            .collect();
        let other_leads: Vec<&Monomial> = leads
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .map(|(_, l)| *l)
            .collect();
        let lt = leads[idx].clone();
        let mut tail = (*g).clone();
        tail.toggle(lt.clone());
        let mut reduced = reduce_with(&tail, &others, &other_leads)?;
        reduced.toggle(lt);
        out.push(reduced);
    }
    Ok(out)
}

pub fn reduced_groebner_basis(generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    reduce_basis(&buchberger(generators)?)
}

/// The generators `w̄_{n+1}, ..., w̄_{n+k}` of `I_{k,n}`.
pub fn ideal_generators(ctx: &GrassmannContext) -> Vec<Polynomial> {
    let n = ctx.n() as usize;
    let mut seq = wbar_sequence(n + ctx.k(), ctx.k());
    seq.drain(..=n);
    seq
}

/// Result of comparing the oracle's reduced basis with the closed-form family.
#[derive(Debug, Clone)]
pub struct OracleComparison {
    pub oracle: Vec<Polynomial>,
    pub family: Vec<Polynomial>,
}

impl OracleComparison {
    pub fn matches(&self) -> bool {
        self.oracle == self.family
    }
}

/// Runs Buchberger on `w̄_{n+1}, ..., w̄_{n+k}` and builds the closed-form
/// family, both sorted by leading term.
pub fn compare_with_family(ctx: &GrassmannContext, cap: u64) -> Result<OracleComparison> {
    let size = ctx.family_size();
    if size > cap {
        return Err(Error::OverCap { size, cap });
    }
    let oracle = reduced_groebner_basis(&ideal_generators(ctx))?;
    let mut family: Vec<Polynomial> = build_family(*ctx)
        .elements()
        .into_iter()
        .map(|(_, p)| (*p).clone())
        .collect();
    family.sort_by(|a, b| {
        a.leading_term()
            .expect("nonzero")
            .cmp(b.leading_term().expect("nonzero"))
    });
    Ok(OracleComparison { oracle, family })
}

/// Whether the oracle's reduced Gröbner basis of `I_{k,n}` equals the
/// closed-form family as a set of polynomials.
pub fn oracle_equals_family(ctx: &GrassmannContext, cap: u64) -> Result<bool> {
    Ok(compare_with_family(ctx, cap)?.matches())
}

/// Monomials with exponent sum at most `max_sum` not divisible by any leading
/// term of `basis`, ascending.
pub fn standard_monomials_up_to(basis: &[Polynomial], k: usize, max_sum: u32) -> Vec<Monomial> {
    let leads: Vec<&Monomial> = basis.iter().filter_map(|g| g.leading_term().ok()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(
        slot: usize,
        left: u32,
        cur: &mut Vec<u32>,
        leads: &[&Monomial],
        out: &mut Vec<Monomial>,
    ) {
        if slot == cur.len() {
            let m = Monomial::new(cur.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            return;
        }
        for v in 0..=left {
            cur[slot] = v;
            rec(slot + 1, left - v, cur, leads, out);
        }
        cur[slot] = 0;
    }
    rec(0, max_sum, &mut cur, &leads, &mut out);
    out.sort();
    out
}

/// `dim_F2 (F2[w] / I)_d` for an ideal generated by weighted-homogeneous
/// polynomials, by Gaussian elimination on the degree-`d` slice of the ideal.
pub fn quotient_dimension(generators: &[Polynomial], k: usize, degree: u64) -> Result<usize> {
    let mut monomials = Vec::new();
    for_each_weighted_composition(k, degree, |a| monomials.push(Monomial::new(a.to_vec())));
    let column: HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let words = monomials.len().div_ceil(64);

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        let gdeg = g.leading_term()?.weighted_degree();
        if !g.is_homogeneous() {
            return Err(Error::IndexRange(
                "generators must be weighted-homogeneous".into(),
            ));
        }
        if gdeg > degree {
            continue;
        }
        for_each_weighted_composition(k, degree - gdeg, |a| {
            let shift = Monomial::new(a.to_vec());
            let mut row = vec![0u64; words];
            for t in g.terms() {
                let c = column[&t.try_mul(&shift).expect("small degrees")];
                row[c / 64] ^= 1 << (c % 64);
            }
            rows.push(row);
        });
    }
    Ok(monomials.len() - f2_rank(rows, words))
}

fn f2_rank(mut rows: Vec<Vec<u64>>, words: usize) -> usize {
    let mut rank = 0;
    for col in 0..words * 64 {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                row.iter_mut().zip(&pivot_row).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::parse;

    fn p(k: usize, s: &str) -> Polynomial {
        parse(s, k).unwrap()
    }

    #[test]
    fn s_polynomial_examples() {
        let f = p(2, "w1^2*w2 + w2^2");
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert!(s_polynomial(&p(2, "w1^2"), &p(2, "w2^2"))
            .unwrap()
            .is_zero());
        assert_eq!(s_polynomial(&f, &p(2, "w1*w2^2")).unwrap(), p(2, "w2^3"));
        assert_eq!(
            s_polynomial(&Polynomial::zero(2), &f),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn buchberger_examples() {
        assert_eq!(buchberger(&[p(2, "w1")]).unwrap(), vec![p(2, "w1")]);
        let monos = vec![p(3, "w1^2"), p(3, "w2*w3"), p(3, "w1*w3^2")];
        assert_eq!(buchberger(&monos).unwrap(), monos);
        let gb = buchberger(&[p(2, "w1^3"), p(2, "w1^4 + w1^2*w2 + w2^2")]).unwrap();
        let reduced = reduce_basis(&gb).unwrap();
        let text: Vec<String> = reduced.iter().map(|g| g.to_string()).collect();
        assert_eq!(text, ["w2^3", "w1*w2^2", "w1^2*w2 + w2^2", "w1^3"]);
    }

    #[test]
    fn reduce_basis_examples() {
        assert_eq!(
            reduce_basis(&[p(2, "w1"), p(2, "w1^2")]).unwrap(),
            vec![p(2, "w1")]
        );
        let reduced = vec![
            p(2, "w2^3"),
            p(2, "w1*w2^2"),
            p(2, "w1^2*w2 + w2^2"),
            p(2, "w1^3"),
        ];
        assert_eq!(reduce_basis(&reduced).unwrap(), reduced);
        let mut shuffled = reduced.clone();
        shuffled.reverse();
        assert_eq!(reduce_basis(&shuffled).unwrap(), reduced);
    }

    #[test]
    fn output_is_self_consistent() {
        let ctx = GrassmannContext::new(3, 3).unwrap();
        let gens = ideal_generators(&ctx);
        let gb = buchberger(&gens).unwrap();
        for g in &gb {
            assert!(reduce_generic(g, &gb).unwrap().is_zero());
        }
        for i in 0..gb.len() {
            for j in 0..i {
                assert!(reduce_generic(&s_polynomial(&gb[i], &gb[j]).unwrap(), &gb)
                    .unwrap()
                    .is_zero());
            }
        }
        let mut rev = gens.clone();
        rev.reverse();
        assert_eq!(
            reduced_groebner_basis(&rev).unwrap(),
            reduce_basis(&gb).unwrap()
        );
    }

    #[test]
    fn small_instances_match_family() {
        for (k, n) in [(2, 2), (2, 3), (3, 3)] {
            assert!(
                oracle_equals_family(&GrassmannContext::new(k, n).unwrap(), DEFAULT_CAP).unwrap()
            );
        }
        let big = GrassmannContext::new(5, 8).unwrap();
        assert_eq!(
            oracle_equals_family(&big, 100),
            Err(Error::OverCap {
                size: 715,
                cap: 100
            })
        );
    }

    #[test]
    fn quotient_dimension_k2_n2() {
        // Poincaré series of G_{2,2}: 1, 1, 2, 1, 1
        let gens = ideal_generators(&GrassmannContext::new(2, 2).unwrap());
        let dims: Vec<usize> = (0..=5)
            .map(|d| quotient_dimension(&gens, 2, d).unwrap())
            .collect();
        assert_eq!(dims, [1, 1, 2, 1, 1, 0]);
    }
}
