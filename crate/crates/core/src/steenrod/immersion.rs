//! Normal bundle of `G_{5,n}` and the two cohomology computations behind the
//! immersion `G_{5,n} ⊆ ℝ^{10n-3}` for `n ≡ 0 (mod 8)`.
//!
//! With `r` chosen so that `2^r < n + 5 ≤ 2^{r+1}`, the stable normal bundle has
//!
//! ```text
//! w(ν) = w(γ_5 ⊗ γ_5) · (1 + w_1 + ... + w_5)^{2^{r+1} - n - 5}
//! ```
//!
//! The lifting argument runs through a modified Postnikov tower whose
//! k-invariants satisfy
//!
//! ```text
//! k_1^0 : Sq^1 ι = 0            k_1^1 : (Sq^2 + w_2) k_1^0 = 0
//! k_2^0 : Sq^2 ι = 0            k_2^1 : (Sq^2 + w_1^2 + w_2) Sq^1 k_1^0 + Sq^1 k_2^0 = 0
//! ```
//!
//! Only the two evaluations on classes of `G_{5,n}` are computed here:
//! `Sq^1(w_4 w_5^{n-1}) = w_5^n` and
//! `(Sq^2 + w_1^2 + w_2)(w_2 w_5^{n-1}) = w_4 w_5^{n-1}`, both nonzero.
//! The `k_2^1` relation is not evaluated.

use std::collections::BTreeMap;

use super::symmetric::tensor_square_sw;
use super::Squares;
use crate::cohomology::{normal_form, CohomologyClass};
use crate::error::{Error, Result};
use crate::f2poly::{Monomial, Polynomial};
use crate::groebner_family::{GrassmannContext, GroebnerFamily};

const K: usize = 5;

fn check_n(n: u32) -> Result<()> {
    if n < 8 || !n.is_multiple_of(8) {
        return Err(Error::NotMultipleOfEight(n));
    }
    Ok(())
}

fn check_family(n: u32, family: &GroebnerFamily) -> Result<GrassmannContext> {
    check_n(n)?;
    let ctx = *family.context();
    if ctx != GrassmannContext::new(K, n)? {
        return Err(Error::ContextMismatch);
    }
    Ok(ctx)
}

/// `2^{r+1} - n - 5` where `2^r < n + 5 ≤ 2^{r+1}`.
pub fn normal_bundle_exponent(n: u32) -> Result<u64> {
    check_n(n)?;
    let dim = u64::from(n) + 5;
    Ok(dim.next_power_of_two() - dim)
}

/// The unreduced total class `w(ν)` up to weighted degree `max_degree`.
pub fn normal_bundle_total(n: u32, max_degree: u64) -> Result<Polynomial> {
    let exponent = normal_bundle_exponent(n)?;
    let tensor = tensor_square_sw(K, max_degree.min((K * K) as u64))?;
    let mut total = Polynomial::one(K);
    for j in 1..=K {
        total.toggle(Monomial::var(K, j)?);
    }
    tensor.mul_truncated(&total.pow_truncated(exponent, max_degree)?, max_degree)
}

/// Stiefel-Whitney classes of the stable normal bundle of `G_{5,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalBundleClasses {
    pub n: u32,
    pub exponent: u64,
    /// `w(ν)` before reduction; its top weighted degree is `20 + 5 · exponent`.
    pub unreduced: Polynomial,
    /// Nonzero reduced classes `w_i(ν)` keyed by `i`.
    pub classes: BTreeMap<u64, CohomologyClass>,
}

impl NormalBundleClasses {
    /// `w_i(ν)`, zero if absent.
    pub fn class(&self, i: u64) -> Polynomial {
        self.classes
            .get(&i)
            .map_or_else(|| Polynomial::zero(K), |c| c.value().clone())
    }
}

/// All `w_i(ν)` for `G_{5,n}`, reduced to normal form.
pub fn normal_bundle_sw(n: u32, family: &GroebnerFamily) -> Result<NormalBundleClasses> {
    let ctx = check_family(n, family)?;
    let exponent = normal_bundle_exponent(n)?;
    let unreduced = normal_bundle_total(n, ctx.top_degree())?;
    let mut classes = BTreeMap::new();
    for d in unreduced.weighted_degrees() {
        let class = normal_form(&unreduced.homogeneous_component(d), family)?;
        if !class.is_zero() {
            classes.insert(d, class);
        }
    }
    Ok(NormalBundleClasses {
        n,
        exponent,
        unreduced,
        classes,
    })
}

/// The two obstruction values for `G_{5,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub n: u32,
    /// `w_2(ν)`, reduced.
    pub w2_nu: CohomologyClass,
    /// `Sq^1(w_4 w_5^{n-1})`, reduced.
    pub sq1_value: CohomologyClass,
    /// `(Sq^2 + w_2(ν))(w_2 w_5^{n-1})`, reduced.
    pub k1_obstruction_value: CohomologyClass,
    /// Both values are nonzero.
    pub lift_possible: bool,
}

impl ObstructionReport {
    /// Whether the values are exactly `w_5^n` and `w_4 w_5^{n-1}`.
    pub fn matches_expected(&self) -> bool {
        let n = self.n;
        let top = Polynomial::from_monomial(Monomial::new(vec![0, 0, 0, 0, n]));
        let k1 = Polynomial::from_monomial(Monomial::new(vec![0, 0, 0, 1, n - 1]));
        self.sq1_value.value() == &top && self.k1_obstruction_value.value() == &k1
    }
}

pub fn immersion_obstruction_check(n: u32, family: &GroebnerFamily) -> Result<ObstructionReport> {
    check_family(n, family)?;
    let squares = Squares::new(K);
    let w2_nu = normal_form(&normal_bundle_total(n, 2)?.homogeneous_component(2), family)?;

    let source = Polynomial::from_monomial(Monomial::new(vec![0, 0, 0, 1, n - 1]));
    let sq1_value = normal_form(&squares.sq(1, &source)?, family)?;

    let source = Polynomial::from_monomial(Monomial::new(vec![0, 1, 0, 0, n - 1]));
    let mut raw = squares.sq(2, &source)?;
    raw += &w2_nu.value().try_mul(&source)?;
    let k1_obstruction_value = normal_form(&raw, family)?;

    let lift_possible = !sq1_value.is_zero() && !k1_obstruction_value.is_zero();
    Ok(ObstructionReport {
        n,
        w2_nu,
        sq1_value,
        k1_obstruction_value,
        lift_possible,
    })
}

/// Number of ones in the binary expansion of `m`.
pub fn alpha(m: u64) -> u32 {
    m.count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::parse;

    fn family(n: u32) -> GroebnerFamily {
        GroebnerFamily::lazy(GrassmannContext::new(K, n).unwrap())
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(normal_bundle_exponent(8).unwrap(), 3);
        assert_eq!(normal_bundle_exponent(16).unwrap(), 11);
        assert_eq!(normal_bundle_exponent(24).unwrap(), 3);
        for n in (8..2000).step_by(8) {
            assert_eq!(normal_bundle_exponent(n).unwrap() % 8, 3);
        }
        assert_eq!(
            normal_bundle_exponent(12),
            Err(Error::NotMultipleOfEight(12))
        );
        assert_eq!(normal_bundle_exponent(0), Err(Error::NotMultipleOfEight(0)));
    }

    #[test]
    fn normal_bundle_at_eight() {
        let nb = normal_bundle_sw(8, &family(8)).unwrap();
        assert_eq!(nb.exponent, 3);
        assert_eq!(nb.class(2), parse("w1^2 + w2", K).unwrap());
        assert_eq!(nb.class(1), parse("w1", K).unwrap());
        assert_eq!(nb.unreduced.weighted_degrees().last().copied(), Some(35));
        assert!(nb.classes.keys().all(|&d| d < 36));
        assert!(normal_bundle_sw(8, &family(16)).is_err());
        assert!(normal_bundle_sw(
            12,
            &GroebnerFamily::lazy(GrassmannContext::new(K, 12).unwrap())
        )
        .is_err());
    }

    #[test]
    fn obstruction_at_eight() {
        let report = immersion_obstruction_check(8, &family(8)).unwrap();
        assert_eq!(report.sq1_value.value(), &parse("w5^8", K).unwrap());
        assert_eq!(
            report.k1_obstruction_value.value(),
            &parse("w4*w5^7", K).unwrap()
        );
        assert_eq!(report.w2_nu.value(), &parse("w1^2 + w2", K).unwrap());
        assert!(report.lift_possible);
        assert!(report.matches_expected());
    }

    #[test]
    fn obstruction_rejects_bad_input() {
        let fam = GroebnerFamily::lazy(GrassmannContext::new(K, 12).unwrap());
        assert_eq!(
            immersion_obstruction_check(12, &fam),
            Err(Error::NotMultipleOfEight(12))
        );
        assert_eq!(
            immersion_obstruction_check(16, &family(8)),
            Err(Error::ContextMismatch)
        );
    }

    /// Every n ≤ bound of the form 2^r + Σ_{i=0}^{s} (2^{r+2+4i} + 2^{r+3+4i}), r ≥ 3, s ≥ -1.
    fn expected_forms(bound: u64) -> std::collections::BTreeSet<u64> {
        let mut out = std::collections::BTreeSet::new();
        for r in 3..64 {
            if 1u64 << r > bound {
                break;
            }
            let mut n = 1u64 << r;
            let mut i = 0;
            while n <= bound {
                out.insert(n);
                n += (1u64 << (r + 2 + 4 * i)) + (1u64 << (r + 3 + 4 * i));
                i += 1;
            }
        }
        out
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(40), 2);
        assert_eq!(alpha(1), 1);
        for r in 1..40 {
            assert_eq!(alpha(5 << r), 2);
        }
    }

    #[test]
    fn alpha_two_characterization() {
        let bound = 1u64 << 14;
        let forms = expected_forms(bound);
        let hits: std::collections::BTreeSet<u64> = (8..=bound)
            .step_by(8)
            .filter(|&n| alpha(5 * n) == 2)
            .collect();
        assert_eq!(hits, forms);
        assert!(forms.contains(&8) && forms.contains(&(8 + 32 + 64)));
        assert!(!forms.contains(&24));
    }
}
