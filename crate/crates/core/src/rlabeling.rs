//! Edge labelings of the cover relations, R-labeling verification, and the
//! expansion of `exΨ` over maximal chains of an R-labeled poset.
//!
//! An edge labeling is an R-labeling when every interval `[u, w]` has exactly
//! one maximal chain whose labels are weakly increasing. Zero labels are
//! allowed: a zero label is unaffected by the sign flip `i ∈ E`, and the
//! comparison `λ_i ≤ λ_{i+1}` is applied literally.
//!
//! The expansion agrees with `exΨ` for R-labelings that are positive and
//! [tie-free](is_tie_free). Zero labels and repeated consecutive labels are
//! still evaluated by the same rule, but the result can differ: on the
//! 2-element chain with label 0 it is `(1 + y)·a` instead of `a + y·b`.

use std::collections::HashMap;

use thiserror::Error;

use crate::ncpoly::NcPoly;
use crate::poly::YPoly;
use crate::poset::{Chain, Poset};
use crate::rankset::RankSet;
use crate::word::AbWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RLabelError {
    #[error("cover {lower:?} ⋖ {upper:?} has no label")]
    MissingLabel { lower: String, upper: String },
    #[error("{lower:?} ⋖ {upper:?} is not a cover relation")]
    NotACover { lower: String, upper: String },
    #[error("cover {lower:?} ⋖ {upper:?} has negative label {label}")]
    NegativeLabel {
        lower: String,
        upper: String,
        label: i64,
    },
    #[error("not an R-labeling: interval [{bottom}, {top}] has {rising} weakly increasing maximal chains")]
    NotAnRLabeling {
        bottom: String,
        top: String,
        rising: u64,
    },
    #[error("not a maximal chain")]
    NotMaximalChain,
    #[error("sign set {0} is not a subset of {{1, …, {1}}}")]
    SubsetOutOfRange(RankSet, usize),
}

/// An integer label on each cover relation `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeLabeling {
    labels: HashMap<(usize, usize), i64>,
}

impl EdgeLabeling {
    /// Labels keyed by element indices; every key must be a cover of `p`.
    pub fn new(
        p: &Poset,
        labels: impl IntoIterator<Item = ((usize, usize), i64)>,
    ) -> Result<Self, RLabelError> {
        let labels: HashMap<_, _> = labels.into_iter().collect();
        if let Some(&(u, v)) = labels
            .keys()
            .find(|&&(u, v)| !p.upper_covers(u).contains(&v))
        {
            return Err(RLabelError::NotACover {
                lower: p.name(u).to_string(),
                upper: p.name(v).to_string(),
            });
        }
        Ok(EdgeLabeling { labels })
    }

    /// Labels keyed by element names.
    pub fn from_names<S: AsRef<str>>(
        p: &Poset,
        labels: &[(S, S, i64)],
    ) -> Result<Self, RLabelError> {
        let index = |s: &S| {
            p.index_of(s.as_ref())
                .ok_or_else(|| RLabelError::NotACover {
                    lower: s.as_ref().to_string(),
                    upper: String::new(),
                })
        };
        let entries = labels
            .iter()
            .map(|(u, v, l)| Ok(((index(u)?, index(v)?), *l)))
            .collect::<Result<Vec<_>, RLabelError>>()?;
        Self::new(p, entries)
    }

    pub fn get(&self, lower: usize, upper: usize) -> Option<i64> {
        self.labels.get(&(lower, upper)).copied()
    }

    fn label(&self, p: &Poset, lower: usize, upper: usize) -> Result<i64, RLabelError> {
        self.get(lower, upper)
            .ok_or_else(|| RLabelError::MissingLabel {
                lower: p.name(lower).to_string(),
                upper: p.name(upper).to_string(),
            })
    }

    /// Every cover of `p` is labeled.
    pub fn check_total(&self, p: &Poset) -> Result<(), RLabelError> {
        p.covers()
            .iter()
            .try_for_each(|&(u, v)| self.label(p, u, v).map(drop))
    }
}

/// Outcome of [`is_r_labeling`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RLabelingCheck {
    Valid,
    /// An interval with zero or at least two weakly increasing maximal chains.
    Invalid {
        bottom: usize,
        top: usize,
        rising: u64,
    },
}

impl RLabelingCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, RLabelingCheck::Valid)
    }
}

/// Check that every interval `[u, w]`, `u < w`, has exactly one maximal chain
/// with weakly increasing labels. Intervals are scanned by `u`, then `w`, in
/// declaration order, and the first failure is returned as a witness.
pub fn is_r_labeling(p: &Poset, labeling: &EdgeLabeling) -> Result<RLabelingCheck, RLabelError> {
    labeling.check_total(p)?;
    for u in 0..p.len() {
        let rising = rising_chain_counts(p, labeling, u);
        for (w, &count) in rising.iter().enumerate() {
            if p.lt(u, w) && count != 1 {
                return Ok(RLabelingCheck::Invalid {
                    bottom: u,
                    top: w,
                    rising: count,
                });
            }
        }
    }
    Ok(RLabelingCheck::Valid)
}

/// For each `w ≥ u`, the number of weakly increasing maximal chains of `[u, w]`.
fn rising_chain_counts(p: &Poset, labeling: &EdgeLabeling, u: usize) -> Vec<u64> {
    // ending[v]: (label of the last edge, count) for rising paths u → v
    let mut ending: Vec<Vec<(i64, u64)>> = vec![Vec::new(); p.len()];
    for &v in p.upper_covers(u) {
        ending[v].push((labeling.get(u, v).unwrap(), 1));
    }
    for r in p.rank_of(u) + 1..p.rank() {
        for &v in p.elements_of_rank(r) {
            if ending[v].is_empty() {
                continue;
            }
            for &z in p.upper_covers(v) {
                let l = labeling.get(v, z).unwrap();
                let count: u64 = ending[v]
                    .iter()
                    .filter(|&&(last, _)| last <= l)
                    .map(|&(_, c)| c)
                    .sum();
                if count > 0 {
                    ending[z].push((l, count));
                }
            }
        }
    }
    let mut rising: Vec<u64> = ending
        .iter()
        .map(|e| e.iter().map(|&(_, c)| c).sum())
        .collect();
    rising[u] = 1;
    rising
}

/// No maximal chain carries the same label on two consecutive covers.
pub fn is_tie_free(p: &Poset, labeling: &EdgeLabeling) -> bool {
    p.covers().iter().all(|&(u, v)| {
        let l = labeling.get(u, v);
        l.is_some() && p.upper_covers(v).iter().all(|&w| labeling.get(v, w) != l)
    })
}

fn check_maximal(p: &Poset, chain: &Chain) -> Result<(), RLabelError> {
    let e = chain.elements();
    let ok = e.len() == p.rank() + 1
        && e[0] == p.bottom()
        && e.windows(2).all(|w| p.upper_covers(w[0]).contains(&w[1]));
    if ok {
        Ok(())
    } else {
        Err(RLabelError::NotMaximalChain)
    }
}

/// `(λ_0, λ_1, …, λ_n)` with `λ_0 = 0` and `λ_i = ±λ(M_{i-1}, M_i)`, negative
/// exactly when `i ∈ E`.
pub fn signed_labels(
    p: &Poset,
    labeling: &EdgeLabeling,
    chain: &Chain,
    e: RankSet,
) -> Result<Vec<i64>, RLabelError> {
    check_maximal(p, chain)?;
    let n = p.rank();
    if e.contains(0) || e.max().is_some_and(|i| i > n) {
        return Err(RLabelError::SubsetOutOfRange(e, n));
    }
    let mut seq = vec![0];
    for (i, pair) in chain.elements().windows(2).enumerate() {
        let l = labeling.label(p, pair[0], pair[1])?;
        seq.push(if e.contains(i + 1) { -l } else { l });
    }
    Ok(seq)
}

/// `m(M, E)`: letter `i` is `b` when `λ_i > λ_{i+1}` and `a` otherwise.
pub fn chain_monomial(
    p: &Poset,
    labeling: &EdgeLabeling,
    chain: &Chain,
    e: RankSet,
) -> Result<AbWord, RLabelError> {
    let seq = signed_labels(p, labeling, chain, e)?;
    let descents = seq
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i)
        .collect();
    Ok(AbWord::from_b_positions(p.rank(), descents).expect("length bounded by poset rank"))
}

/// `exΨ_P = Σ_{M, E} y^{#E}·m(M, E)` over maximal chains `M` and
/// `E ⊆ {1, …, n}`, for a nonnegative R-labeling.
pub fn expsi_via_rlabeling(p: &Poset, labeling: &EdgeLabeling) -> Result<NcPoly, RLabelError> {
    labeling.check_total(p)?;
    if let Some(&(u, v)) = p
        .covers()
        .iter()
        .find(|&&(u, v)| labeling.get(u, v).unwrap() < 0)
    {
        return Err(RLabelError::NegativeLabel {
            lower: p.name(u).to_string(),
            upper: p.name(v).to_string(),
            label: labeling.get(u, v).unwrap(),
        });
    }
    if let RLabelingCheck::Invalid {
        bottom,
        top,
        rising,
    } = is_r_labeling(p, labeling)?
    {
        return Err(RLabelError::NotAnRLabeling {
            bottom: p.name(bottom).to_string(),
            top: p.name(top).to_string(),
            rising,
        });
    }
    let n = p.rank();
    let mut out = NcPoly::zero(n);
    for chain in p.maximal_chains() {
        for e in RankSet::range(1, n).subsets() {
            let word = chain_monomial(p, labeling, &chain, e)?;
            out = &out + &NcPoly::term(word, YPoly::monomial(1, e.len()));
        }
    }
    Ok(out)
}
