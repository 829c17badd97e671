//! Invariants of finite, graded, bounded posets.
//!
//! The crate computes Möbius functions and Poincaré polynomials, the
//! ab-index `Ψ` and its Poincaré extension `exΨ` (along several independent
//! routes that must agree exactly), flag f- and h-vectors, R-labeling
//! expansions, and (augmented) Chow polynomials with their γ-expansions.
//!
//! ```
//! use posetcalc_core::{document::parse_poset, fixtures, ex_ab_index, ExPsiMethod};
//!
//! let p = parse_poset(fixtures::P).unwrap().poset;
//! let ex = ex_ab_index(&p, ExPsiMethod::Omega).unwrap();
//! assert_eq!(ex.to_string(), "(1)·aa + (2 + 3y)·ab + (3y + 2y^2)·ba + (y^2)·bb");
//! ```

pub mod abindex;
pub mod chow;
pub mod document;
pub mod fixtures;
pub mod ncpoly;
pub mod poly;
pub mod poset;
pub mod random;
pub mod rankset;
pub mod rlabeling;
pub mod verify;
pub mod word;

pub use abindex::{
    ab_index, ab_index_tilde, ex_ab_index, ex_ab_index_tilde, expsi_via_beta_e, flag_alpha,
    flag_beta, AbIndexError, ExPsiMethod, ExPsiTildeMethod, FlagVector, PsiMethod,
};
pub use chow::{
    canonical_decomposition_check, chow, eval_omega_ev, gamma_expansion, isolated_subsets,
    ChowError, DecompositionReport, GammaExpansion,
};
pub use document::{parse_poset, DocumentError, ParsedPoset};
pub use ncpoly::{monomial_t, monomial_t_e, wt_set, NcPoly, NcPolyError};
pub use poly::{PolyError, TPoly, XPoly, YPoly};
pub use poset::{Chain, Poset, PosetError};
pub use random::random_graded_poset;
pub use rankset::RankSet;
pub use rlabeling::{
    chain_monomial, expsi_via_rlabeling, is_r_labeling, is_tie_free, signed_labels, EdgeLabeling,
    RLabelError, RLabelingCheck,
};
pub use verify::{verify_poset, VerifyReport};
pub use word::{AbWord, Letter};
