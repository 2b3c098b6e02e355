//! Total Stiefel-Whitney class of `γ_k ⊗ γ_k` through formal roots.
//!
//! With roots `x_1, ..., x_k` of `γ_k`, the roots of the tensor square are
//! `x_i + x_j` over all ordered pairs. Diagonal pairs contribute `1 + 2x_i = 1`
//! and the pairs `(i, j)`, `(j, i)` coincide, so mod 2 the total class is
//! `P^2` with `P = Π_{i<j} (1 + x_i + x_j)`. `P` is symmetric, gets rewritten
//! in the elementary symmetric polynomials `e_i = w_i`, and is then squared.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::f2poly::{Monomial, Polynomial};

/// `e_r(x_1, ..., x_k)` as a polynomial in the root variables.
pub fn elementary_symmetric(k: usize, r: usize) -> Polynomial {
    let mut out = Polynomial::zero(k);
    if r > k {
        return out;
    }
    for mask in 0u64..(1 << k) {
        if mask.count_ones() as usize == r {
            out.toggle(Monomial::new(
                (0..k).map(|i| ((mask >> i) & 1) as u32).collect(),
            ));
        }
    }
    out
}

/// `Π_{1≤i,j≤k} (1 + x_i + x_j)` expanded literally in the root variables.
pub fn tensor_square_roots(k: usize) -> Polynomial {
    let mut out = Polynomial::one(k);
    for i in 0..k {
        for j in 0..k {
            let mut factor = Polynomial::one(k);
            factor.toggle(Monomial::var(k, i + 1).expect("index in range"));
            factor.toggle(Monomial::var(k, j + 1).expect("index in range"));
            out = &out * &factor;
        }
    }
    out
}

fn half_product(k: usize) -> Polynomial {
    let mut out = Polynomial::one(k);
    for i in 0..k {
        for j in i + 1..k {
            let mut factor = Polynomial::one(k);
            factor.toggle(Monomial::var(k, i + 1).expect("index in range"));
            factor.toggle(Monomial::var(k, j + 1).expect("index in range"));
            out = &out * &factor;
        }
    }
    out
}

/// Rewrites a symmetric polynomial in root variables as a polynomial in
/// `w_i = e_i`.
///
/// Repeatedly cancels the grlex leading term `x^α` (which has
/// `α_1 ≥ ... ≥ α_k` when the input is symmetric) with
/// `e_1^{α_1-α_2} ... e_k^{α_k}`.
pub fn symmetric_to_elementary(f: &Polynomial) -> Result<Polynomial> {
    let k = f.k();
    let elementary: Vec<Polynomial> = (1..=k).map(|r| elementary_symmetric(k, r)).collect();
    let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
    let mut work = f.clone();
    let mut out = Polynomial::zero(k);
    while let Ok(lead) = work.leading_term().cloned() {
        let alpha = lead.exponents();
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(format!(
                "leading term {lead} has increasing exponents"
            )));
        }
        let a: Vec<u32> = (0..k)
            .map(|i| alpha[i] - alpha.get(i + 1).copied().unwrap_or(0))
            .collect();
        let mut product = Polynomial::one(k);
        for (i, &e) in a.iter().enumerate() {
            if e > 0 {
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| elementary[i].pow(u64::from(e)).expect("small exponent"));
                product = product.try_mul(p)?;
            }
        }
        debug_assert_eq!(product.leading_term().ok(), Some(&lead));
        work += &product;
        out.toggle(Monomial::new(a));
    }
    Ok(out)
}

/// `w(γ_k ⊗ γ_k)` up to weighted degree `max_weighted_degree` (at most `k²`),
/// as a polynomial in `w_1, ..., w_k`.
pub fn tensor_square_sw(k: usize, max_weighted_degree: u64) -> Result<Polynomial> {
    let top = (k * k) as u64;
    if max_weighted_degree > top {
        return Err(Error::DegreeTooLarge {
            requested: max_weighted_degree as u32,
            top: top as u32,
        });
    }
    let half = symmetric_to_elementary(&half_product(k))?;
    half.truncated(max_weighted_degree / 2).square()
}
