//! Chow and augmented Chow polynomials of a poset, their γ-expansions over
//! isolated subsets, and the numerical canonical decomposition.

use thiserror::Error;

use crate::abindex::{
    ex_ab_index, ex_ab_index_tilde, flag_beta, AbIndexError, ExPsiMethod, ExPsiTildeMethod,
};
use crate::ncpoly::NcPoly;
use crate::poly::{PolyError, XPoly};
use crate::poset::Poset;
use crate::rankset::RankSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("the plain Chow polynomial needs a poset of rank at least 1")]
    TrivialPoset,
    #[error("evaluation is not divisible by (1 - x)^n: {0}")]
    InexactDivision(#[from] PolyError),
    #[error(transparent)]
    AbIndex(AbIndexError),
}

impl From<AbIndexError> for ChowError {
    fn from(e: AbIndexError) -> Self {
        match e {
            AbIndexError::TrivialPoset => ChowError::TrivialPoset,
            other => ChowError::AbIndex(other),
        }
    }
}

/// Specialize `y ↦ -x, a ↦ 1, b ↦ x`.
pub fn eval_chow_point(f: &NcPoly) -> XPoly {
    f.eval_xy(&XPoly::one(), &XPoly::var(), &XPoly::monomial(-1, 1))
}

/// `ω_ev(f)`: apply ω, then specialize `y ↦ -x, a ↦ 1, b ↦ x`.
pub fn eval_omega_ev(f: &NcPoly) -> XPoly {
    eval_chow_point(&f.omega())
}

fn one_minus_x_pow(n: usize) -> XPoly {
    XPoly::from_coeffs(vec![1, -1]).pow(n as u32)
}

/// `H^aug_P(x) = exΨ_P(-x, 1, x)·(1-x)^{-n}` when `augmented`, otherwise
/// `H_P(x) = exΨ~_P(-x, 1, x)·(1-x)^{-n}`.
pub fn chow(p: &Poset, augmented: bool) -> Result<XPoly, ChowError> {
    let n = p.rank();
    let index = if augmented {
        ex_ab_index(p, ExPsiMethod::Omega)?
    } else {
        ex_ab_index_tilde(p, ExPsiTildeMethod::Omega)?
    };
    Ok(eval_chow_point(&index).div_exact(&one_minus_x_pow(n))?)
}

/// Subsets of `{lo, …, hi}` without two consecutive members, in increasing
/// bitmask order. An empty range yields only `∅`.
pub fn isolated_subsets(lo: usize, hi: usize) -> impl Iterator<Item = RankSet> {
    // sets[k] = isolated subsets of {lo + k, …, hi}
    let width = (hi + 1).saturating_sub(lo);
    let mut sets: Vec<Vec<RankSet>> = vec![Vec::new(); width + 2];
    sets[width] = vec![RankSet::EMPTY];
    sets[width + 1] = vec![RankSet::EMPTY];
    for k in (0..width).rev() {
        let skip = sets[k + 1].clone();
        let take = sets[k + 2].iter().map(|s| s.with(lo + k));
        sets[k] = skip.into_iter().chain(take).collect();
    }
    let mut out = std::mem::take(&mut sets[0]);
    out.sort();
    out.into_iter()
}

/// `Σ_T γ_T·x^{#T}(1+x)^{d - 2#T}` where `d = n` for the augmented Chow
/// polynomial and `d = n - 1` for the plain one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpansion {
    pub n: usize,
    pub augmented: bool,
    pub terms: Vec<(RankSet, i64)>,
}

impl GammaExpansion {
    /// Degree of the expanded polynomial.
    pub fn degree(&self) -> usize {
        if self.augmented {
            self.n
        } else {
            self.n - 1
        }
    }

    /// The basis polynomial `x^{#T}(1+x)^{d-2#T}` attached to `t`.
    pub fn basis(&self, t: RankSet) -> XPoly {
        let k = t.len();
        XPoly::from_coeffs(vec![1, 1])
            .pow((self.degree() - 2 * k) as u32)
            .shift(k)
    }

    pub fn expand(&self) -> XPoly {
        self.terms
            .iter()
            .map(|&(t, c)| self.basis(t).scale(c))
            .sum()
    }

    /// γ-coefficients are flag h-vector entries and can be negative for
    /// posets whose flag h-vector is.
    pub fn has_negative(&self) -> bool {
        self.terms.iter().any(|&(_, c)| c < 0)
    }
}

/// γ-expansion read off the flag h-vector: `T` ranges over the isolated
/// subsets of `{1, …, n-1}` (augmented) or `{2, …, n-1}` (plain).
pub fn gamma_expansion(p: &Poset, augmented: bool) -> Result<GammaExpansion, ChowError> {
    let n = p.rank();
    if !augmented && n == 0 {
        return Err(ChowError::TrivialPoset);
    }
    let beta = flag_beta(p)?;
    let lo = if augmented { 1 } else { 2 };
    let hi = n.saturating_sub(1);
    let terms = isolated_subsets(lo, hi).map(|t| (t, beta.get(t))).collect();
    Ok(GammaExpansion {
        n,
        augmented,
        terms,
    })
}

/// Both sides of the two canonical decomposition identities
///
/// ```text
/// H^aug_P = (1 - x^{n+1})/(1 - x) + Σ_{0̂<w<1̂} (x - x^{rk w + 1})/(1 - x)·H_{[w,1̂]}
/// H_P     = (1 - x^n)/(1 - x)     + Σ_{0̂<w<1̂} (x - x^{rk w})/(1 - x)·H_{[w,1̂]}
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub augmented_lhs: XPoly,
    pub augmented_rhs: XPoly,
    pub plain_lhs: XPoly,
    pub plain_rhs: XPoly,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.augmented_lhs == self.augmented_rhs && self.plain_lhs == self.plain_rhs
    }
}

pub fn canonical_decomposition_check(p: &Poset) -> Result<DecompositionReport, ChowError> {
    let n = p.rank();
    if n == 0 {
        return Err(ChowError::TrivialPoset);
    }
    let mut augmented_rhs = XPoly::geometric(0, n + 1);
    let mut plain_rhs = XPoly::geometric(0, n);
    for w in p.interior() {
        let r = p.rank_of(w);
        let upper = p.interval(w, p.top()).expect("w lies below 1̂");
        let h = chow(&upper, false)?;
        augmented_rhs += &(&XPoly::geometric(1, r + 1) * &h);
        plain_rhs += &(&XPoly::geometric(1, r) * &h);
    }
    Ok(DecompositionReport {
        augmented_lhs: chow(p, true)?,
        augmented_rhs,
        plain_lhs: chow(p, false)?,
        plain_rhs,
    })
}
