//! The reduced Gröbner basis `G = {g_M : S_M <= n + 1}` of `I_{k,n}` with
//! respect to grlex, `w_1 > ... > w_k`.
//!
//! Each element is given directly by
//!
//! ```text
//! g_M = Σ_{S'_A = n + 1 + S'_M} P(A, M) · W^A
//! ```
//!
//! and its leading term is `W^{M̄}` with `M̄ = (n + 1 - S_M, m_2, ..., m_k)`,
//! every other term having exponent sum at most `n`. Since the leading terms
//! are exactly the monomials of exponent sum `n + 1`, the standard monomials
//! are those of exponent sum at most `n`.
//!
//! Besides the direct formula there are closed forms for `m_k ∈ {n-1, n}` and
//! a three-term recurrence
//! `g_{M^{i,j}} = w_i g_{M^j} + w_{j+1} g_{M^{i-1}} + g_{M^{i-1,j+1}}`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::combinatorics::{
    binom_int, binom_parity, for_each_weighted_composition, p_product_raw, MultiIndex,
};
use crate::dual_classes::wbar_sequence;
use crate::error::{Error, Result};
use crate::f2poly::{Monomial, Polynomial};

/// The pair `(k, n)` naming `G_{k,n}`, the k-planes in `R^{n+k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannContext {
    k: usize,
    n: u32,
}

impl GrassmannContext {
    pub fn new(k: usize, n: u32) -> Result<Self> {
        if k < 2 || (n as usize) < k {
            return Err(Error::InvalidContext { k, n });
        }
        Ok(GrassmannContext { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `binom(n + k, k - 1)`, the number of `M` with `S_M <= n + 1`.
    pub fn family_size(&self) -> u64 {
        binom_u64(u64::from(self.n) + self.k as u64, self.k as u64 - 1)
    }

    /// `binom(n + k, k)`, the total dimension of the cohomology.
    pub fn cohomology_dimension(&self) -> u64 {
        binom_u64(u64::from(self.n) + self.k as u64, self.k as u64)
    }

    /// `k·n`, the dimension of the manifold.
    pub fn top_degree(&self) -> u64 {
        self.k as u64 * u64::from(self.n)
    }

    fn check_index(&self, m: &MultiIndex) -> Result<()> {
        if m.k() != self.k {
            return Err(Error::TupleLength {
                expected: self.k - 1,
                actual: m.entries().len(),
            });
        }
        Ok(())
    }

    fn check_in_family(&self, m: &MultiIndex) -> Result<()> {
        self.check_index(m)?;
        let bound = u64::from(self.n) + 1;
        if m.sum() > bound {
            return Err(Error::OutsideFamily {
                index: m.entries().to_vec(),
                sum: m.sum(),
                bound,
            });
        }
        Ok(())
    }
}

fn binom_u64(a: u64, b: u64) -> u64 {
    binom_int(a as i64, b as i64)
        .to_u64()
        .expect("binomial fits in u64")
}

/// `g_M` from the defining sum. Defined for every nonnegative `M`, including
/// those with `S_M > n + 1` that are not part of the basis.
pub fn g_direct(ctx: &GrassmannContext, m: &MultiIndex) -> Result<Polynomial> {
    ctx.check_index(m)?;
    let degree = u64::from(ctx.n) + 1 + m.weighted_sum();
    let mut terms = Vec::new();
    let entries = m.entries();
    for_each_weighted_composition(ctx.k, degree, |a| {
        if p_product_raw(a, entries) {
            terms.push(Monomial::new(a.to_vec()));
        }
    });
    Polynomial::from_terms(ctx.k, terms)
}

/// `LT(g_M) = W^{M̄}` with `M̄ = (n + 1 - S_M, m_2, ..., m_k)`.
pub fn leading_term_of(ctx: &GrassmannContext, m: &MultiIndex) -> Result<Monomial> {
    ctx.check_in_family(m)?;
    let mut exps = Vec::with_capacity(ctx.k);
    exps.push((u64::from(ctx.n) + 1 - m.sum()) as u32);
    exps.extend_from_slice(m.entries());
    Ok(Monomial::new(exps))
}

/// The basis index whose leading term is `lt`; `lt` must have exponent sum `n + 1`.
pub fn index_of_leading_term(ctx: &GrassmannContext, lt: &Monomial) -> Result<MultiIndex> {
    if lt.k() != ctx.k {
        return Err(Error::VariableMismatch {
            left: ctx.k,
            right: lt.k(),
        });
    }
    if lt.total_degree() != u64::from(ctx.n) + 1 {
        return Err(Error::IndexRange(format!(
            "{lt} is not a leading term of G_{{{},{}}}",
            ctx.k, ctx.n
        )));
    }
    MultiIndex::new(lt.exponents()[1..].to_vec())
}

/// Closed forms, when `M` has one of the known shapes:
///
/// * `S'_M > (k-1)n - 1`: `g_M = W^{M̄}` (this covers `w_1 w_k^n` and `w_{s+1} w_k^n`);
/// * `M = (0, ..., 0, n-1)`: `w_1^2 w_k^{n-1} + w_2 w_k^{n-1}`;
/// * `M` with `m_{s+1} = 1`, `m_k = n-1`, `1 <= s <= k-2`, zeros elsewhere:
///   `w_1 w_{s+1} w_k^{n-1} + w_{s+2} w_k^{n-1}`.
///
/// Returns `None` for every other `M` (and for `M` outside the family).
pub fn g_closed_form(ctx: &GrassmannContext, m: &MultiIndex) -> Option<Polynomial> {
    if ctx.check_in_family(m).is_err() {
        return None;
    }
    let (k, n) = (ctx.k, u64::from(ctx.n));
    if m.weighted_sum() + 1 > (k as u64 - 1) * n {
        return leading_term_of(ctx, m).ok().map(Polynomial::from_monomial);
    }
    let e = m.entries();
    if u64::from(e[k - 2]) != n - 1 {
        return None;
    }
    let head = &e[..k - 2];
    let tail = |extra: &[(usize, u32)]| {
        let mut exps = vec![0u32; k];
        exps[k - 1] = ctx.n - 1;
        for &(var, pow) in extra {
            exps[var - 1] += pow;
        }
        Monomial::new(exps)
    };
    if head.iter().all(|&v| v == 0) {
        return Polynomial::from_terms(k, [tail(&[(1, 2)]), tail(&[(2, 1)])]).ok();
    }
    let mut ones = head.iter().enumerate().filter(|(_, &v)| v != 0);
    match (ones.next(), ones.next()) {
        (Some((idx, 1)), None) => {
            // m_{s+1} = 1 sits at head[s - 1]
            let s = idx + 1;
            Polynomial::from_terms(k, [tail(&[(1, 1), (s + 1, 1)]), tail(&[(s + 2, 1)])]).ok()
        }
        _ => None,
    }
}

/// One application of the recurrence: assembles
/// `g_{M^{i,j}} = w_i g_{M^j} + w_{j+1} g_{M^{i-1}} + g_{M^{i-1,j+1}}`,
/// the last summand dropped when `j = k - 1`. `lookup` supplies the
/// right-hand side polynomials.
pub fn g_recurrence_step(
    ctx: &GrassmannContext,
    m: &MultiIndex,
    i: usize,
    j: usize,
    mut lookup: impl FnMut(&MultiIndex) -> Result<Polynomial>,
) -> Result<Polynomial> {
    ctx.check_index(m)?;
    let k = ctx.k;
    if !(1 <= i && i <= j && j < k) {
        return Err(Error::IndexRange(format!(
            "need 1 <= i <= j <= {}, got i = {i}, j = {j}",
            k - 1
        )));
    }
    let wi = Monomial::var(k, i)?;
    let wj1 = Monomial::var(k, j + 1)?;
    let mut out = lookup(&m.raised(j))?.mul_monomial(&wi)?;
    out += &lookup(&m.raised(i - 1))?.mul_monomial(&wj1)?;
    if j < k - 1 {
        out += &lookup(&m.raised2(i - 1, j + 1))?;
    }
    Ok(out)
}

/// Generates `g_M` without the defining sum: `(m, 0, ..., 0)` comes from dual
/// classes as `Σ_i binom(m, i) w_1^{m-i} w̄_{n+1+i}`, and every other index is
/// reached by descending along the recurrence with `i = 1`, `j = s - 1`
/// where `m_{s+1}` is the last nonzero entry.
pub struct RecurrenceGenerator {
    ctx: GrassmannContext,
    wbar: Vec<Polynomial>,
    memo: HashMap<MultiIndex, Polynomial>,
}

impl RecurrenceGenerator {
    pub fn new(ctx: GrassmannContext) -> Self {
        RecurrenceGenerator {
            ctx,
            wbar: Vec::new(),
            memo: HashMap::new(),
        }
    }

    pub fn generate(&mut self, m: &MultiIndex) -> Result<Polynomial> {
        self.ctx.check_index(m)?;
        self.get(m)
    }

    fn get(&mut self, m: &MultiIndex) -> Result<Polynomial> {
        if let Some(p) = self.memo.get(m) {
            return Ok(p.clone());
        }
        let p = match m.entries().iter().rposition(|&v| v > 0) {
            None | Some(0) => self.base(m.entries()[0])?,
            Some(idx) => {
                let s = idx + 1;
                let lower = m.lowered(s).expect("m_{s+1} > 0");
                let mut p = self.get(&lower.raised2(1, s - 1))?;
                p += &self
                    .get(&lower.raised(s - 1))?
                    .mul_monomial(&Monomial::var(self.ctx.k, 1)?)?;
                p += &self
                    .get(&lower)?
                    .mul_monomial(&Monomial::var(self.ctx.k, s)?)?;
                p
            }
        };
        self.memo.insert(m.clone(), p.clone());
        Ok(p)
    }

    fn base(&mut self, m: u32) -> Result<Polynomial> {
        let k = self.ctx.k;
        let top = self.ctx.n as usize + 1 + m as usize;
        if self.wbar.len() <= top {
            self.wbar = wbar_sequence(top, k);
        }
        let mut out = Polynomial::zero(k);
        for i in 0..=m {
            if binom_parity(i64::from(m), i64::from(i)) {
                let mut w1 = vec![0; k];
                w1[0] = m - i;
                out += &self.wbar[self.ctx.n as usize + 1 + i as usize]
                    .mul_monomial(&Monomial::new(w1))?;
            }
        }
        Ok(out)
    }
}

/// The family `G`, with elements materialized either all at once
/// ([`GroebnerFamily::build`]) or on first use ([`GroebnerFamily::lazy`]).
///
/// Lookups may race to compute the same element; both results are identical and
/// one is kept.
#[derive(Debug)]
pub struct GroebnerFamily {
    ctx: GrassmannContext,
    cache: RwLock<HashMap<MultiIndex, Arc<Polynomial>>>,
}

impl GroebnerFamily {
    pub fn lazy(ctx: GrassmannContext) -> Self {
        GroebnerFamily {
            ctx,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Every `g_M` with `S_M <= n + 1`, evaluated in parallel from the defining sum.
    pub fn build(ctx: GrassmannContext) -> Self {
        let elements: HashMap<_, _> = Self::indices_for(&ctx)
            .into_par_iter()
            .map(|m| {
                let p = g_direct(&ctx, &m).expect("index shape matches context");
                (m, Arc::new(p))
            })
            .collect();
        GroebnerFamily {
            ctx,
            cache: RwLock::new(elements),
        }
    }

    pub fn context(&self) -> &GrassmannContext {
        &self.ctx
    }

    /// Number of basis elements, materialized or not.
    pub fn len(&self) -> u64 {
        self.ctx.family_size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn materialized(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    fn indices_for(ctx: &GrassmannContext) -> Vec<MultiIndex> {
        MultiIndex::all_with_sum_at_most(ctx.k, ctx.n + 1)
    }

    /// All basis indices, ordered lexicographically from the right.
    pub fn indices(&self) -> Vec<MultiIndex> {
        Self::indices_for(&self.ctx)
    }

    pub fn leading_term(&self, m: &MultiIndex) -> Result<Monomial> {
        leading_term_of(&self.ctx, m)
    }

    pub fn element(&self, m: &MultiIndex) -> Result<Arc<Polynomial>> {
        self.ctx.check_in_family(m)?;
        if let Some(p) = self.cache.read().expect("cache lock").get(m) {
            return Ok(Arc::clone(p));
        }
        let p = Arc::new(g_direct(&self.ctx, m)?);
        let mut cache = self.cache.write().expect("cache lock");
        Ok(Arc::clone(cache.entry(m.clone()).or_insert(p)))
    }

    /// The element whose leading term is `lt` (exponent sum must be `n + 1`).
    pub fn element_with_leading_term(&self, lt: &Monomial) -> Result<Arc<Polynomial>> {
        self.element(&index_of_leading_term(&self.ctx, lt)?)
    }

    /// Every element in index order, materializing whatever is missing.
    pub fn elements(&self) -> Vec<(MultiIndex, Arc<Polynomial>)> {
        let indices = self.indices();
        indices
            .into_par_iter()
            .map(|m| {
                let p = self.element(&m).expect("index in family");
                (m, p)
            })
            .collect()
    }
}

/// `build_family(ctx)`: the complete basis.
pub fn build_family(ctx: GrassmannContext) -> GroebnerFamily {
    GroebnerFamily::build(ctx)
}
