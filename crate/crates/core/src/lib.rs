//! Mod-2 cohomology of real Grassmann manifolds `G_{k,n}` through closed-form
//! reduced Gröbner bases.
//!
//! The cohomology ring `H*(G_{k,n}; F2)` is `F2[w_1, ..., w_k] / I_{k,n}` where
//! `I_{k,n}` is generated by the dual Stiefel-Whitney classes
//! `w̄_{n+1}, ..., w̄_{n+k}`. This crate builds the reduced Gröbner basis
//! `{g_M : S_M <= n + 1}` of that ideal (grlex, `w_1 > ... > w_k`) directly from
//! binomial-parity formulas, reduces classes to normal form, checks the basis
//! against a generic Buchberger engine, and evaluates the Steenrod-square
//! computations behind the immersion `G_{5,n} ⊆ R^{10n-3}` for `n ≡ 0 (mod 8)`.

pub mod buchberger;
pub mod cohomology;
pub mod combinatorics;
pub mod dual_classes;
mod error;
pub mod f2poly;
pub mod groebner_family;
pub mod steenrod;

pub use cohomology::CohomologyClass;
pub use combinatorics::{KTuple, MultiIndex};
pub use error::{Error, Result};
pub use f2poly::{grlex_compare, Monomial, Polynomial};
pub use groebner_family::{GrassmannContext, GroebnerFamily};
