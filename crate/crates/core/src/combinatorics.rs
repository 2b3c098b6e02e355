//! Binomial and multinomial coefficients, exact and mod 2, and the `P(A, M)`
//! parity products that give every coefficient of the Gröbner basis elements.
//!
//! Index conventions follow the usual ones for these objects: a k-tuple is
//! `A = (a_1, ..., a_k)` and a multi-index is `M = (m_2, ..., m_k)`, so the
//! first entry of a [`MultiIndex`] is `m_2`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer k-tuple `A = (a_1, ..., a_k)`.
///
/// Entries are signed because the shifted tuples `A_i` (subtract one from the
/// i-th coordinate) show up while evaluating parity identities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KTuple(Vec<i64>);

impl KTuple {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::TupleLength {
                expected: 2,
                actual: entries.len(),
            });
        }
        Ok(KTuple(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// `S_A`
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `S'_A = Σ j·a_j`
    pub fn weighted_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &a)| (j as i64 + 1) * a)
            .sum()
    }

    /// `A_i`: subtract one from the i-th coordinate (1-based); identity for `i < 1`.
    pub fn lowered(&self, i: usize) -> Self {
        let mut out = self.clone();
        if i >= 1 {
            out.0[i - 1] -= 1;
        }
        out
    }
}

impl From<&[u32]> for KTuple {
    fn from(exps: &[u32]) -> Self {
        KTuple(exps.iter().map(|&e| i64::from(e)).collect())
    }
}

/// A (k-1)-tuple `M = (m_2, ..., m_k)` of nonnegative integers naming a
/// Gröbner basis element `g_M`.
///
/// The ordering is lexicographic from the right: the last coordinate that
/// differs decides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::TupleLength {
                expected: 1,
                actual: 0,
            });
        }
        Ok(MultiIndex(entries))
    }

    pub fn zeros(k: usize) -> Self {
        assert!(k >= 2, "k must be at least 2");
        MultiIndex(vec![0; k - 1])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// The rank `k` this index belongs to (`len + 1`).
    pub fn k(&self) -> usize {
        self.0.len() + 1
    }

    /// `m_j` for `2 <= j <= k`.
    pub fn m(&self, j: usize) -> u32 {
        self.0[j - 2]
    }

    /// `S_M`
    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&m| u64::from(m)).sum()
    }

    /// `S'_M = Σ (j-1)·m_j`
    pub fn weighted_sum(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(idx, &m)| (idx as u64 + 1) * u64::from(m))
            .sum()
    }

    /// `M^s`: add one to `m_{s+1}`. Identity for `s < 1`.
    pub fn raised(&self, s: usize) -> Self {
        let mut out = self.clone();
        if s >= 1 {
            out.0[s - 1] += 1;
        }
        out
    }

    /// `M^{i,j}`: add one to `m_{i+1}` and to `m_{j+1}` (two when `i == j`).
    pub fn raised2(&self, i: usize, j: usize) -> Self {
        self.raised(i).raised(j)
    }

    /// `M_s`: subtract one from `m_{s+1}`; `None` if that would go negative.
    pub fn lowered(&self, s: usize) -> Option<Self> {
        let mut out = self.clone();
        if s >= 1 {
            let slot = &mut out.0[s - 1];
            *slot = slot.checked_sub(1)?;
        }
        Some(out)
    }

    /// All (k-1)-tuples with entry sum at most `bound`, in increasing order.
    pub fn all_with_sum_at_most(k: usize, bound: u32) -> Vec<MultiIndex> {
        fn rec(slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if slot == cur.len() {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[slot] = v;
                rec(slot + 1, left - v, cur, out);
            }
            cur[slot] = 0;
        }
        let mut out = Vec::new();
        rec(0, bound, &mut vec![0; k - 1], &mut out);
        out.sort();
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, m) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Exact `binom(alpha, beta)` for arbitrary integers: the falling factorial
/// `alpha (alpha-1) ... (alpha-beta+1) / beta!` for `beta > 0`, 1 for
/// `beta == 0`, 0 for `beta < 0`.
///
/// Runs in `O(beta)` big-integer steps; meant for checking the parity paths.
pub fn binom_int(alpha: i64, beta: i64) -> BigInt {
    if beta < 0 {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..beta {
        // binom(alpha, i+1) = binom(alpha, i) * (alpha - i) / (i + 1), exact at every step
        acc *= BigInt::from(alpha) - BigInt::from(i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `binom(alpha, beta) mod 2` without allocation.
///
/// Nonnegative upper index uses Lucas' theorem. A negative upper index is
/// reflected through `binom(alpha, beta) = (-1)^beta binom(beta - alpha - 1, beta)`.
pub fn binom_parity(alpha: i64, beta: i64) -> bool {
    if beta < 0 {
        return false;
    }
    if alpha >= 0 {
        return lucas_odd(alpha as u128, beta as u128);
    }
    let upper = i128::from(beta) - i128::from(alpha) - 1;
    lucas_odd(upper as u128, beta as u128)
}

#[inline]
fn lucas_odd(upper: u128, lower: u128) -> bool {
    upper & lower == lower
}

/// The multinomial coefficient `[a_1, ..., a_k]` mod 2, as the product
/// `Π_{t=2}^{k} binom(a_{t-1} + ... + a_k, a_{t-1})`.
pub fn multinomial_parity(a: &KTuple) -> Result<bool> {
    if let Some((position, &value)) = a.entries().iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NegativeEntry { position, value });
    }
    let entries = a.entries();
    let mut suffix = entries[entries.len() - 1];
    for t in (2..=entries.len()).rev() {
        let lower = entries[t - 2];
        suffix += lower;
        if !binom_parity(suffix, lower) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_shapes(k: usize, m_len: usize) -> Result<()> {
    if m_len + 1 != k {
        return Err(Error::TupleLength {
            expected: k - 1,
            actual: m_len,
        });
    }
    Ok(())
}

/// Parity of `P_t(A, M) = binom(Σ_{j>=t-1} a_j - Σ_{j>=t} m_j, a_{t-1})`.
pub fn p_factor(t: usize, a: &KTuple, m: &MultiIndex) -> Result<bool> {
    let k = a.k();
    check_shapes(k, m.entries().len())?;
    if !(2..=k).contains(&t) {
        return Err(Error::IndexRange(format!("t = {t} not in 2..={k}")));
    }
    let sa: i64 = a.entries()[t - 2..].iter().sum();
    let sm: i64 = m.entries()[t - 2..].iter().map(|&v| i64::from(v)).sum();
    Ok(binom_parity(sa - sm, a.entries()[t - 2]))
}

/// Parity of `P(A, M) = Π_{t=2}^{k} P_t(A, M)`.
pub fn p_product(a: &KTuple, m: &MultiIndex) -> Result<bool> {
    check_shapes(a.k(), m.entries().len())?;
    Ok(p_product_raw(a.entries(), m.entries()))
}

/// [`p_product`] on raw slices; `a.len() == m.len() + 1` is assumed.
#[inline]
pub(crate) fn p_product_raw<A: Copy + Into<i64>>(a: &[A], m: &[u32]) -> bool {
    let k = a.len();
    debug_assert_eq!(m.len() + 1, k);
    // walk t = k, k-1, ..., 2 carrying the suffix sums
    let mut sa: i64 = a[k - 1].into();
    let mut sm: i64 = 0;
    for t in (2..=k).rev() {
        let lower: i64 = a[t - 2].into();
        sa += lower;
        sm += i64::from(m[t - 2]);
        if !binom_parity(sa - sm, lower) {
            return false;
        }
    }
    true
}

/// Calls `visit` with every exponent vector `(a_1, ..., a_k)` of nonnegative
/// integers with `a_1 + 2 a_2 + ... + k a_k == degree`.
///
/// Recurses over `a_k, a_{k-1}, ...`; `a_1` takes whatever degree is left.
pub fn for_each_weighted_composition(k: usize, degree: u64, mut visit: impl FnMut(&[u32])) {
    fn rec(slot: usize, left: u64, cur: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        if slot == 0 {
            cur[0] = left as u32;
            visit(cur);
            return;
        }
        let weight = slot as u64 + 1;
        for a in 0..=left / weight {
            cur[slot] = a as u32;
            rec(slot - 1, left - a * weight, cur, visit);
        }
        cur[slot] = 0;
    }
    assert!(k >= 1);
    assert!(
        degree <= u64::from(u32::MAX),
        "degree too large for 32-bit exponents"
    );
    rec(k - 1, degree, &mut vec![0; k], &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn kt(v: &[i64]) -> KTuple {
        KTuple::new(v.to_vec()).unwrap()
    }

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    fn parity(b: &BigInt) -> bool {
        (b % 2) != BigInt::from(0)
    }

    #[test]
    fn binom_int_examples() {
        assert_eq!(binom_int(5, 2), BigInt::from(10));
        assert_eq!(binom_int(-3, 1), BigInt::from(-3));
        assert_eq!(binom_int(3, 5), BigInt::from(0));
        assert_eq!(binom_int(4, -1), BigInt::from(0));
        assert_eq!(binom_int(-1, 4), BigInt::from(1));
        assert_eq!(binom_int(-2, 3), BigInt::from(-4));
        assert_eq!(binom_int(7, 0), BigInt::from(1));
    }

    #[test]
    fn binom_parity_examples() {
        assert!(!binom_parity(5, 2));
        assert!(binom_parity(7, 3));
        assert!(binom_parity(-3, 1));
        assert!(!binom_parity(4, -1));
        assert!(!binom_parity(3, 5));
    }

    #[test]
    fn parity_matches_exact_on_box() {
        for alpha in -64..=64 {
            for beta in -64..=64 {
                assert_eq!(
                    binom_parity(alpha, beta),
                    parity(&binom_int(alpha, beta)),
                    "binom({alpha}, {beta})"
                );
            }
        }
    }

    #[test]
    fn pascal_identity_mod_two() {
        for alpha in -64..=64 {
            for beta in -64..=64 {
                assert_eq!(
                    binom_parity(alpha, beta),
                    binom_parity(alpha - 1, beta) ^ binom_parity(alpha - 1, beta - 1)
                );
            }
        }
    }

    #[test]
    fn nonzero_binomial_bounds() {
        for alpha in -64i64..=64 {
            for beta in -64i64..=64 {
                if binom_int(alpha, beta) != BigInt::from(0) {
                    assert!(alpha >= beta || alpha <= -1, "binom({alpha}, {beta}) != 0");
                }
            }
        }
    }

    #[test]
    fn huge_arguments_do_not_overflow() {
        assert!(binom_parity(i64::MIN, 0));
        assert!(binom_parity(-1, i64::MAX));
        assert!(binom_parity(i64::MAX, i64::MAX));
    }

    #[test]
    fn multinomial_examples() {
        assert!(multinomial_parity(&kt(&[2, 0])).unwrap());
        assert!(!multinomial_parity(&kt(&[1, 1])).unwrap());
        assert!(multinomial_parity(&kt(&[0, 1])).unwrap());
        // [1,1,1] = 3!/(1!1!1!) = 6
        assert!(!multinomial_parity(&kt(&[1, 1, 1])).unwrap());
        // [2,1,0] = 3
        assert!(multinomial_parity(&kt(&[2, 1, 0])).unwrap());
        assert_eq!(
            multinomial_parity(&kt(&[1, -1])),
            Err(Error::NegativeEntry {
                position: 1,
                value: -1
            })
        );
    }

    #[test]
    fn p_factor_examples() {
        assert!(p_factor(2, &kt(&[2, 1]), &mi(&[1])).unwrap());
        assert!(!p_factor(2, &kt(&[4, 0]), &mi(&[1])).unwrap());
        assert!(p_product(&kt(&[2, 1]), &mi(&[1])).unwrap());
        assert!(!p_product(&kt(&[4, 0]), &mi(&[1])).unwrap());
        assert!(p_factor(1, &kt(&[2, 1]), &mi(&[1])).is_err());
        assert!(p_product(&kt(&[2, 1, 0]), &mi(&[1])).is_err());
    }

    #[test]
    fn leading_tuple_has_unit_factors() {
        // M̄ = (n+1-S_M, m_2, ..., m_k) makes every factor binom(m, m) = 1
        let n = 7i64;
        for m in MultiIndex::all_with_sum_at_most(4, 8) {
            let mut bar = vec![n + 1 - m.sum() as i64];
            bar.extend(m.entries().iter().map(|&v| i64::from(v)));
            let bar = kt(&bar);
            for t in 2..=4 {
                assert!(p_factor(t, &bar, &m).unwrap());
            }
        }
    }

    #[test]
    fn multi_index_order_is_from_the_right() {
        let mut v = vec![mi(&[0, 1]), mi(&[2, 0]), mi(&[1, 0]), mi(&[0, 0])];
        v.sort();
        assert_eq!(v, vec![mi(&[0, 0]), mi(&[1, 0]), mi(&[2, 0]), mi(&[0, 1])]);
        assert_eq!(MultiIndex::all_with_sum_at_most(3, 2).len(), 6);
    }

    #[test]
    fn multi_index_shifts() {
        let m = mi(&[1, 0, 3]);
        assert_eq!(m.raised(0), m);
        assert_eq!(m.raised(2), mi(&[1, 1, 3]));
        assert_eq!(m.raised2(1, 1), mi(&[3, 0, 3]));
        assert_eq!(m.lowered(2), None);
        assert_eq!(m.lowered(3), Some(mi(&[1, 0, 2])));
        assert_eq!(m.sum(), 4);
        assert_eq!(m.weighted_sum(), 1 + 9);
    }

    #[test]
    fn weighted_compositions_match_brute_force() {
        for k in 1..=4usize {
            for d in 0..=12u64 {
                let mut seen = Vec::new();
                for_each_weighted_composition(k, d, |a| seen.push(a.to_vec()));
                let mut brute = Vec::new();
                let mut cur = vec![0u32; k];
                loop {
                    let w: u64 = cur
                        .iter()
                        .enumerate()
                        .map(|(j, &a)| (j as u64 + 1) * u64::from(a))
                        .sum();
                    if w == d {
                        brute.push(cur.clone());
                    }
                    let mut pos = 0;
                    while pos < k && cur[pos] == d as u32 {
                        cur[pos] = 0;
                        pos += 1;
                    }
                    if pos == k {
                        break;
                    }
                    cur[pos] += 1;
                }
                seen.sort();
                brute.sort();
                assert_eq!(seen, brute, "k={k} d={d}");
            }
        }
    }

    proptest! {
        #[test]
        fn zero_multi_index_gives_multinomial(a in proptest::collection::vec(0i64..12, 2..6)) {
            let a = KTuple::new(a).unwrap();
            let zero = MultiIndex::zeros(a.k());
            prop_assert_eq!(p_product(&a, &zero).unwrap(), multinomial_parity(&a).unwrap());
        }

        #[test]
        fn tail_inequalities_when_p_is_odd(
            a in proptest::collection::vec(0i64..10, 4),
            m in proptest::collection::vec(0u32..10, 3),
        ) {
            let a = KTuple::new(a).unwrap();
            let m = MultiIndex::new(m).unwrap();
            if p_product(&a, &m).unwrap() && a.sum() >= m.sum() as i64 {
                for t in 2..=4 {
                    let ta: i64 = a.entries()[t - 1..].iter().sum();
                    let tm: i64 = m.entries()[t - 2..].iter().map(|&v| i64::from(v)).sum();
                    prop_assert!(ta >= tm, "t = {}", t);
                }
            }
        }

        #[test]
        fn parity_matches_exact_wide(alpha in -5000i64..5000, beta in -3i64..200) {
            prop_assert_eq!(binom_parity(alpha, beta), parity(&binom_int(alpha, beta)));
        }
    }
}
