//! Steenrod squares on polynomials in Stiefel-Whitney classes.
//!
//! Generators go through Wu's formula
//!
//! ```text
//! Sq^i(w_j) = Σ_{t=0}^{i} binom(j - i + t - 1, t) w_{i-t} w_{j+t}
//! ```
//!
//! (`w_0 = 1`, `w_m = 0` for `m > k`), and products through the Cartan
//! formula. Internally the total square `Sq = Σ_i Sq^i` is carried as a series
//! indexed by the excess `i`, which is multiplicative; a power `w_j^m` is built
//! by binary exponentiation, using `Sq(x^2) = Sq(x)^2`.

mod immersion;
mod symmetric;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use immersion::{
    alpha, immersion_obstruction_check, normal_bundle_exponent, normal_bundle_sw,
    normal_bundle_total, NormalBundleClasses, ObstructionReport,
};
pub use symmetric::{
    elementary_symmetric, symmetric_to_elementary, tensor_square_roots, tensor_square_sw,
};

use crate::combinatorics::binom_parity;
use crate::error::{Error, Result};
use crate::f2poly::{Monomial, Polynomial};

/// `Sq^i(w_j)` by Wu's formula, as a polynomial in `w_1, ..., w_k`.
pub fn sq_on_generator(i: u32, j: usize, k: usize) -> Result<Polynomial> {
    if j == 0 || j > k {
        return Err(Error::VariableOutOfRange { index: j, k });
    }
    let mut out = Polynomial::zero(k);
    let i = i as usize;
    if i > j {
        return Ok(out);
    }
    for t in 0..=i {
        if j + t > k {
            break;
        }
        if !binom_parity(j as i64 - i as i64 + t as i64 - 1, t as i64) {
            continue;
        }
        let mut exps = vec![0u32; k];
        if i - t > 0 {
            exps[i - t - 1] += 1;
        }
        exps[j + t - 1] += 1;
        out.toggle(Monomial::new(exps));
    }
    Ok(out)
}

/// Truncated total square: `series[e]` is `Sq^e` of the underlying class.
type Series = Vec<Polynomial>;

fn series_mul(a: &Series, b: &Series, k: usize) -> Result<Series> {
    let len = a.len().min(b.len());
    let mut out = vec![Polynomial::zero(k); len];
    for (e, slot) in out.iter_mut().enumerate() {
        for x in 0..=e {
            if a[x].is_zero() || b[e - x].is_zero() {
                continue;
            }
            *slot += &a[x].try_mul(&b[e - x])?;
        }
    }
    Ok(out)
}

/// `Sq(x)^{2^t}`: excess `e` moves to `e·2^t` and its piece is raised to `2^t`.
fn series_frobenius(a: &Series, t: u32, k: usize) -> Result<Series> {
    let mut out = vec![Polynomial::zero(k); a.len()];
    let step = 1usize.checked_shl(t).unwrap_or(usize::MAX);
    for (e, piece) in a.iter().enumerate() {
        match e.checked_mul(step) {
            Some(target) if target < a.len() => out[target] = piece.frobenius(t)?,
            _ => break,
        }
    }
    Ok(out)
}

/// Steenrod squares in `k` variables with memoized powers of generators.
///
/// The cache is keyed by `(j, m, i)` and holds `Sq^0..=Sq^i` of `w_j^m`.
#[derive(Debug)]
pub struct Squares {
    k: usize,
    powers: RwLock<HashMap<(usize, u32, u32), Arc<Series>>>,
}

impl Squares {
    pub fn new(k: usize) -> Self {
        Squares {
            k,
            powers: RwLock::new(HashMap::new()),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn generator_series(&self, j: usize, max_excess: u32) -> Result<Series> {
        (0..=max_excess)
            .map(|e| sq_on_generator(e, j, self.k))
            .collect()
    }

    fn power_series(&self, j: usize, m: u32, max_excess: u32) -> Result<Arc<Series>> {
        let key = (j, m, max_excess);
        if let Some(s) = self.powers.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(s));
        }
        let base = self.generator_series(j, max_excess)?;
        let mut acc = one_series(self.k, max_excess);
        let mut bits = m;
        let mut t = 0;
        while bits > 0 {
            if bits & 1 == 1 {
                acc = series_mul(&acc, &series_frobenius(&base, t, self.k)?, self.k)?;
            }
            bits >>= 1;
            t += 1;
        }
        let acc = Arc::new(acc);
        self.powers
            .write()
            .expect("cache lock")
            .insert(key, Arc::clone(&acc));
        Ok(acc)
    }

    /// `Sq^i` of a single monomial.
    pub fn sq_monomial(&self, i: u32, m: &Monomial) -> Result<Polynomial> {
        if m.k() != self.k {
            return Err(Error::VariableMismatch {
                left: self.k,
                right: m.k(),
            });
        }
        let mut acc = one_series(self.k, i);
        for (idx, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                acc = series_mul(&acc, &*self.power_series(idx + 1, e, i)?, self.k)?;
            }
        }
        Ok(acc.swap_remove(i as usize))
    }

    /// `Sq^i(f)`, before any reduction modulo the Grassmannian relations.
    pub fn sq(&self, i: u32, f: &Polynomial) -> Result<Polynomial> {
        if f.k() != self.k {
            return Err(Error::VariableMismatch {
                left: self.k,
                right: f.k(),
            });
        }
        let mut out = Polynomial::zero(self.k);
        for m in f.terms() {
            out += &self.sq_monomial(i, m)?;
        }
        Ok(out)
    }
}

fn one_series(k: usize, max_excess: u32) -> Series {
    let mut s = vec![Polynomial::zero(k); max_excess as usize + 1];
    s[0] = Polynomial::one(k);
    s
}

/// `Sq^i(f)` in `k` variables.
pub fn sq(i: u32, f: &Polynomial, k: usize) -> Result<Polynomial> {
    Squares::new(k).sq(i, f)
}
