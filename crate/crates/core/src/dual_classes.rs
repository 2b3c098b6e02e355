//! Dual Stiefel-Whitney classes `w̄_r` of the canonical bundle, as polynomials
//! in `w_1, ..., w_k`.
//!
//! They are determined by `(1 + w_1 + ... + w_k)(1 + w̄_1 + w̄_2 + ...) = 1`.
//! Two independent routes are provided: the linear recurrence and the closed
//! multinomial sum.

use crate::combinatorics::{for_each_weighted_composition, multinomial_parity, KTuple};
use crate::f2poly::{Monomial, Polynomial};

/// `[w̄_0, w̄_1, ..., w̄_{max_r}]` from `w̄_s = Σ_{i=1}^{min(s,k)} w_i w̄_{s-i}`.
pub fn wbar_sequence(max_r: usize, k: usize) -> Vec<Polynomial> {
    assert!(k >= 1, "need at least one variable");
    let mut seq = Vec::with_capacity(max_r + 1);
    seq.push(Polynomial::one(k));
    for s in 1..=max_r {
        let mut next = Polynomial::zero(k);
        for i in 1..=s.min(k) {
            let wi = Monomial::var(k, i).expect("1 <= i <= k");
            let term = seq[s - i].mul_monomial(&wi).expect("degrees fit in u32");
            next += &term;
        }
        seq.push(next);
    }
    seq
}

/// `w̄_r` by the recurrence. `w̄_0 = 1`.
pub fn wbar_recurrence(r: usize, k: usize) -> Polynomial {
    wbar_sequence(r, k).pop().expect("nonempty")
}

/// `w̄_r = Σ_{a_1 + 2a_2 + ... + k a_k = r} [a_1, ..., a_k] W^A` with the
/// multinomial taken mod 2.
pub fn wbar_explicit(r: usize, k: usize) -> Polynomial {
    let mut terms = Vec::new();
    for_each_weighted_composition(k, r as u64, |a| {
        let tuple = KTuple::from(a);
        if multinomial_parity(&tuple).expect("nonnegative") {
            terms.push(Monomial::new(a.to_vec()));
        }
    });
    Polynomial::from_terms(k, terms).expect("same k")
}
