//! The ab-index `Ψ_P`, the Poincaré-extended ab-index `exΨ_P`, their
//! bottom-anchored ("tilde") variants, and the flag f- and h-vectors.
//!
//! Each index can be computed along several independent routes:
//!
//! * **chains**: the defining sum over all chains ending in `1̂`,
//! * **beta**: the flag h-vector expansion `Σ_T β(T)·m_T` (and `Σ_T β(T)·ω(m_T)`
//!   for the extended index),
//! * **recursive**: the recursion over upper intervals `[w, 1̂]`,
//! * **omega**: `exΨ = ω(Ψ)` and `exΨ~ = (1+y)·ω(Ψ~)`.
//!
//! The expansion of `Ψ` in the flag h-vector sums over every
//! `T ⊆ {0, …, n-1}`; terms with `0 ∈ T` vanish because `β(T) = 0` there.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ncpoly::{monomial_t, monomial_t_e, wt_set, NcPoly, NcPolyError};
use crate::poly::YPoly;
use crate::poset::Poset;
use crate::rankset::RankSet;

/// Largest rank for which dense flag tables are built.
pub const MAX_DENSE_RANK: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbIndexError {
    #[error("the tilde variants and the recursions need a poset of rank at least 1")]
    TrivialPoset,
    #[error("dense flag table for rank {0} exceeds the limit of {MAX_DENSE_RANK}")]
    DenseTableTooLarge(usize),
    #[error(transparent)]
    NcPoly(#[from] NcPolyError),
}

/// A function on the subsets of `{0, …, n-1}`, stored densely by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    values: Vec<i64>,
}

impl FlagVector {
    fn zeros(n: usize) -> Result<Self, AbIndexError> {
        if n > MAX_DENSE_RANK {
            return Err(AbIndexError::DenseTableTooLarge(n));
        }
        Ok(FlagVector {
            n,
            values: vec![0; 1 << n],
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: RankSet) -> i64 {
        self.values[s.bits() as usize]
    }

    /// `(S, value)` for every subset, in increasing bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = (RankSet, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(s, &v)| (RankSet(s as u64), v))
    }

    /// `g(T) = Σ_{S ⊆ T} (-1)^{|T∖S|} f(S)`.
    pub fn inclusion_exclusion(&self) -> FlagVector {
        let mut values = self.values.clone();
        for i in 0..self.n {
            for s in 0..values.len() {
                if s >> i & 1 == 1 {
                    values[s] -= values[s ^ (1 << i)];
                }
            }
        }
        FlagVector { n: self.n, values }
    }

    /// `g(S) = Σ_{T ⊆ S} f(T)`, the inverse of [`Self::inclusion_exclusion`].
    pub fn subset_sums(&self) -> FlagVector {
        let mut values = self.values.clone();
        for i in 0..self.n {
            for s in 0..values.len() {
                if s >> i & 1 == 1 {
                    values[s] += values[s ^ (1 << i)];
                }
            }
        }
        FlagVector { n: self.n, values }
    }
}

/// Flag f-vector: `α(S)` counts the chains ending in `1̂` whose other
/// elements have rank set exactly `S`, i.e. the maximal chains of the
/// rank-selected subposet.
pub fn flag_alpha(p: &Poset) -> Result<FlagVector, AbIndexError> {
    let n = p.rank();
    let mut alpha = FlagVector::zeros(n)?;
    for (s, slot) in alpha.values.iter_mut().enumerate() {
        let ranks: Vec<usize> = RankSet(s as u64).iter().collect();
        let Some((&first, rest)) = ranks.split_first() else {
            *slot = 1;
            continue;
        };
        let mut counts: Vec<(usize, i64)> =
            p.elements_of_rank(first).iter().map(|&v| (v, 1)).collect();
        for &r in rest {
            counts = p
                .elements_of_rank(r)
                .iter()
                .map(|&w| {
                    let c = counts
                        .iter()
                        .filter(|&&(v, _)| p.leq(v, w))
                        .map(|&(_, c)| c)
                        .sum();
                    (w, c)
                })
                .collect();
        }
        *slot = counts.iter().map(|&(_, c)| c).sum();
    }
    Ok(alpha)
}

/// Flag h-vector `β(T) = Σ_{S ⊆ T} (-1)^{|T∖S|} α(S)`.
pub fn flag_beta(p: &Poset) -> Result<FlagVector, AbIndexError> {
    Ok(flag_alpha(p)?.inclusion_exclusion())
}

macro_rules! method_enum {
    ($(#[$meta:meta])* $name:ident { $($(#[$vmeta:meta])* $variant:ident => $text:literal),* $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
        pub enum $name {
            $($(#[$vmeta])* $variant),*
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($name::$variant => $text),* })
            }
        }

        impl FromStr for $name {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($text => Ok($name::$variant),)*
                    other => Err(format!(
                        "unknown method {other:?}; expected one of: {}",
                        [$($text),*].join(", ")
                    )),
                }
            }
        }
    };
}

method_enum! {
    /// Routes to `Ψ` and `Ψ~`.
    PsiMethod { #[default] Chains => "chains", Beta => "beta", Recursive => "recursive" }
}

method_enum! {
    /// Routes to `exΨ`.
    ExPsiMethod { #[default] Chains => "chains", Omega => "omega", Recursive => "recursive", Beta => "beta" }
}

method_enum! {
    /// Routes to `exΨ~`.
    ExPsiTildeMethod { Chains => "chains", #[default] Omega => "omega", Recursive => "recursive" }
}

/// `Ψ_P`, homogeneous of degree `n` with integer coefficients.
pub fn ab_index(p: &Poset, method: PsiMethod) -> Result<NcPoly, AbIndexError> {
    match method {
        PsiMethod::Chains => chain_sum(p, false, false),
        PsiMethod::Beta => beta_sum(p, |t, n| Ok(NcPoly::word(monomial_t(t, n)?))),
        PsiMethod::Recursive => Recursion::new(p, false)?.psi(),
    }
}

/// `Ψ~_P = ι(Ψ_P)`, of degree `n - 1`.
pub fn ab_index_tilde(p: &Poset, method: PsiMethod) -> Result<NcPoly, AbIndexError> {
    require_nontrivial(p)?;
    match method {
        PsiMethod::Chains => chain_sum(p, false, true),
        PsiMethod::Beta => Ok(ab_index(p, PsiMethod::Beta)?.iota()?),
        PsiMethod::Recursive => Ok(Recursion::new(p, false)?.tilde(p.bottom())),
    }
}

/// `exΨ_P = Σ_C Poin_{P,C}(y)·wt_C`.
pub fn ex_ab_index(p: &Poset, method: ExPsiMethod) -> Result<NcPoly, AbIndexError> {
    match method {
        ExPsiMethod::Chains => chain_sum(p, true, false),
        ExPsiMethod::Omega => Ok(ab_index(p, PsiMethod::Chains)?.omega()),
        ExPsiMethod::Recursive => Recursion::new(p, true)?.ex_psi(),
        ExPsiMethod::Beta => beta_sum(p, |t, n| Ok(NcPoly::word(monomial_t(t, n)?).omega())),
    }
}

/// `exΨ~_P = ι(exΨ_P)`.
pub fn ex_ab_index_tilde(p: &Poset, method: ExPsiTildeMethod) -> Result<NcPoly, AbIndexError> {
    require_nontrivial(p)?;
    match method {
        ExPsiTildeMethod::Chains => chain_sum(p, true, true),
        ExPsiTildeMethod::Omega => {
            let tilde = ab_index_tilde(p, PsiMethod::Chains)?;
            Ok(tilde.omega().scale(&YPoly::from_coeffs(vec![1, 1])))
        }
        ExPsiTildeMethod::Recursive => Ok(Recursion::new(p, true)?.tilde(p.bottom())),
    }
}

/// `exΨ_P = Σ_{T,E} β(T)·y^{#E}·m_T(E)` over `T ⊆ {0,…,n-1}` and
/// `E ⊆ {1,…,n}`. Exponential in `2n`; meant for cross-checks.
pub fn expsi_via_beta_e(p: &Poset) -> Result<NcPoly, AbIndexError> {
    let n = p.rank();
    let beta = flag_beta(p)?;
    let mut out = NcPoly::zero(n);
    for (t, b) in beta.iter().filter(|&(_, b)| b != 0) {
        for e in RankSet::range(1, n).subsets() {
            let word = monomial_t_e(t, e, n)?;
            out = &out + &NcPoly::term(word, YPoly::monomial(b, e.len()));
        }
    }
    Ok(out)
}

fn require_nontrivial(p: &Poset) -> Result<(), AbIndexError> {
    if p.rank() == 0 {
        Err(AbIndexError::TrivialPoset)
    } else {
        Ok(())
    }
}

/// Sum of `weight(C)·wt_C` over chains, optionally restricted to chains
/// through `0̂` and passed through ι. Chains are first bucketed by rank set
/// so that each `wt_S` is expanded once.
fn chain_sum(p: &Poset, extended: bool, tilde: bool) -> Result<NcPoly, AbIndexError> {
    let n = p.rank();
    let mut buckets: HashMap<RankSet, YPoly> = HashMap::new();
    for chain in p.chains_to_top() {
        if tilde && !chain.starts_at_bottom(p) {
            continue;
        }
        let weight = if extended {
            p.chain_poincare(&chain)
        } else {
            YPoly::one()
        };
        *buckets.entry(chain.rank_set(p)).or_default() += &weight;
    }
    let mut keys: Vec<_> = buckets.keys().copied().collect();
    keys.sort();
    let mut out = NcPoly::zero(n);
    for s in keys {
        out = &out + &wt_set(s, n)?.scale(&buckets[&s]);
    }
    if tilde {
        Ok(out.iota()?)
    } else {
        Ok(out)
    }
}

fn beta_sum(
    p: &Poset,
    image: impl Fn(RankSet, usize) -> Result<NcPoly, AbIndexError>,
) -> Result<NcPoly, AbIndexError> {
    let n = p.rank();
    let beta = flag_beta(p)?;
    let mut out = NcPoly::zero(n);
    for (t, b) in beta.iter().filter(|&(_, b)| b != 0) {
        out = &out + &image(t, n)?.scale_int(b);
    }
    Ok(out)
}

/// Recursion over upper intervals `[w, 1̂]` of a fixed poset, memoized by `w`.
/// With `extended = false` every Poincaré polynomial is replaced by 1, which
/// turns the extended recursion into the one for `Ψ`.
struct Recursion<'a> {
    p: &'a Poset,
    extended: bool,
    a_minus_b: Vec<NcPoly>,
    tilde: Vec<Option<NcPoly>>,
}

impl<'a> Recursion<'a> {
    fn new(p: &'a Poset, extended: bool) -> Result<Self, AbIndexError> {
        require_nontrivial(p)?;
        let n = p.rank();
        let step = &NcPoly::a() - &NcPoly::b();
        let mut a_minus_b = vec![NcPoly::one()];
        for k in 1..=n {
            a_minus_b.push(&a_minus_b[k - 1] * &step);
        }
        let mut rec = Recursion {
            p,
            extended,
            a_minus_b,
            tilde: vec![None; p.len()],
        };
        // Fill the memo from the top down so each lookup below is ready.
        for r in (0..n).rev() {
            for &w in p.elements_of_rank(r) {
                let value = rec.compute_tilde(w);
                rec.tilde[w] = Some(value);
            }
        }
        Ok(rec)
    }

    fn poin(&self, u: usize, w: usize) -> YPoly {
        if self.extended {
            self.p.interval_poincare_unchecked(u, w)
        } else {
            YPoly::one()
        }
    }

    /// `exΨ~_{[w,1̂]} = Poin_{[w,1̂]}·(a-b)^{d-1}
    ///   + Σ_{w<v<1̂} Poin_{[w,v]}·(a-b)^{rk v - rk w - 1}·b·exΨ~_{[v,1̂]}`.
    fn compute_tilde(&self, w: usize) -> NcPoly {
        let p = self.p;
        let (top, rw) = (p.top(), p.rank_of(w));
        let d = p.rank() - rw;
        let mut acc = self.a_minus_b[d - 1].scale(&self.poin(w, top));
        for v in (0..p.len()).filter(|&v| v != top && p.lt(w, v)) {
            let k = p.rank_of(v) - rw;
            let head = &self.a_minus_b[k - 1] * &NcPoly::b();
            let term = &head
                * self.tilde[v]
                    .as_ref()
                    .expect("upper intervals computed first");
            acc = &acc + &term.scale(&self.poin(w, v));
        }
        acc
    }

    fn tilde(&self, w: usize) -> NcPoly {
        self.tilde[w]
            .clone()
            .expect("memo filled for every element below 1̂")
    }

    /// `Ψ_P = a(a-b)^{n-1} + Σ_{0̂<w<1̂} a(a-b)^{rk w - 1}·b·Ψ~_{[w,1̂]}`.
    fn psi(&self) -> Result<NcPoly, AbIndexError> {
        let p = self.p;
        let a = NcPoly::a();
        let mut acc = &a * &self.a_minus_b[p.rank() - 1];
        for w in p.interior() {
            let head = &(&a * &self.a_minus_b[p.rank_of(w) - 1]) * &NcPoly::b();
            acc = &acc + &(&head * &self.tilde(w));
        }
        Ok(acc)
    }

    /// `exΨ_P = (a-b)^n + Poin_P·b(a-b)^{n-1}
    ///   + Σ_{0̂<w<1̂} ((a-b)^{rk w} + Poin_{[0̂,w]}·b(a-b)^{rk w - 1})·b·exΨ~_{[w,1̂]}`.
    fn ex_psi(&self) -> Result<NcPoly, AbIndexError> {
        let p = self.p;
        let n = p.rank();
        let (b, bottom) = (NcPoly::b(), p.bottom());
        let mut acc =
            &self.a_minus_b[n] + &(&b * &self.a_minus_b[n - 1]).scale(&self.poin(bottom, p.top()));
        for w in p.interior() {
            let r = p.rank_of(w);
            let lead =
                &self.a_minus_b[r] + &(&b * &self.a_minus_b[r - 1]).scale(&self.poin(bottom, w));
            acc = &acc + &(&(&lead * &b) * &self.tilde(w));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::AbWord;

    fn p() -> Poset {
        Poset::build(
            &["0", "u1", "u2", "u3", "1"],
            &[
                ("0", "u1"),
                ("0", "u2"),
                ("0", "u3"),
                ("u1", "1"),
                ("u2", "1"),
                ("u3", "1"),
            ],
        )
        .unwrap()
    }

    fn q() -> Poset {
        Poset::build(
            &["0", "v1", "v2", "w1", "w2", "1"],
            &[
                ("0", "v1"),
                ("0", "v2"),
                ("v1", "w1"),
                ("v2", "w2"),
                ("w1", "1"),
                ("w2", "1"),
            ],
        )
        .unwrap()
    }

    fn set(items: &[usize]) -> RankSet {
        items.iter().copied().collect()
    }

    fn terms(list: &[(&str, &[i64])]) -> NcPoly {
        list.iter()
            .map(|(w, c)| {
                NcPoly::term(w.parse::<AbWord>().unwrap(), YPoly::from_coeffs(c.to_vec()))
            })
            .sum()
    }

    #[test]
    fn flag_vectors_of_fixtures() {
        let (ap, bp) = (flag_alpha(&p()).unwrap(), flag_beta(&p()).unwrap());
        assert_eq!(ap.get(RankSet::EMPTY), 1);
        assert_eq!(ap.get(set(&[1])), 3);
        assert_eq!(ap.get(set(&[0])), 1);
        assert_eq!(bp.get(set(&[1])), 2);
        let (aq, bq) = (flag_alpha(&q()).unwrap(), flag_beta(&q()).unwrap());
        assert_eq!(
            [aq.get(set(&[1])), aq.get(set(&[2])), aq.get(set(&[1, 2]))],
            [2, 2, 2]
        );
        assert_eq!(bq.get(set(&[1, 2])), -1);
        assert_eq!([bq.get(set(&[1])), bq.get(set(&[2]))], [1, 1]);
    }

    #[test]
    fn beta_vanishes_on_sets_containing_zero() {
        for fv in [flag_beta(&p()).unwrap(), flag_beta(&q()).unwrap()] {
            assert!(fv
                .iter()
                .filter(|(t, _)| t.contains(0))
                .all(|(_, b)| b == 0));
        }
    }

    #[test]
    fn transforms_are_inverse() {
        let a = flag_alpha(&q()).unwrap();
        assert_eq!(a.inclusion_exclusion().subset_sums(), a);
    }

    #[test]
    fn psi_all_methods() {
        let psi_p = NcPoly::parse_int("aa + 2ab").unwrap();
        let psi_q = NcPoly::parse_int("aaa + aab + aba - abb").unwrap();
        for &m in PsiMethod::ALL {
            assert_eq!(ab_index(&p(), m).unwrap(), psi_p, "{m}");
            assert_eq!(ab_index(&q(), m).unwrap(), psi_q, "{m}");
            assert_eq!(ab_index(&Poset::chain(1).unwrap(), m).unwrap(), NcPoly::a());
            assert_eq!(
                ab_index_tilde(&p(), m).unwrap(),
                NcPoly::parse_int("a + 2b").unwrap()
            );
            assert_eq!(
                ab_index_tilde(&q(), m).unwrap(),
                NcPoly::parse_int("aa + ab + ba - bb").unwrap()
            );
            assert_eq!(
                ab_index_tilde(&Poset::chain(1).unwrap(), m).unwrap(),
                NcPoly::one()
            );
        }
    }

    #[test]
    fn ex_psi_all_methods() {
        let ex_p = terms(&[
            ("aa", &[1]),
            ("ab", &[2, 3]),
            ("ba", &[0, 3, 2]),
            ("bb", &[0, 0, 1]),
        ]);
        let chain = terms(&[("a", &[1]), ("b", &[0, 1])]);
        for &m in ExPsiMethod::ALL {
            assert_eq!(ex_ab_index(&p(), m).unwrap(), ex_p, "{m}");
            assert_eq!(
                ex_ab_index(&Poset::chain(1).unwrap(), m).unwrap(),
                chain,
                "{m}"
            );
        }
        assert_eq!(expsi_via_beta_e(&p()).unwrap(), ex_p);
        assert_eq!(expsi_via_beta_e(&Poset::chain(1).unwrap()).unwrap(), chain);
        let tilde_p = terms(&[("a", &[1, 3, 2]), ("b", &[2, 3, 1])]);
        for &m in ExPsiTildeMethod::ALL {
            assert_eq!(ex_ab_index_tilde(&p(), m).unwrap(), tilde_p, "{m}");
            assert_eq!(
                ex_ab_index_tilde(&Poset::chain(1).unwrap(), m).unwrap(),
                NcPoly::term(AbWord::EMPTY, YPoly::from_coeffs(vec![1, 1]))
            );
        }
    }

    #[test]
    fn trivial_poset_handling() {
        let t = Poset::trivial();
        assert_eq!(ab_index(&t, PsiMethod::Chains).unwrap(), NcPoly::one());
        assert_eq!(ex_ab_index(&t, ExPsiMethod::Omega).unwrap(), NcPoly::one());
        assert_eq!(
            ab_index(&t, PsiMethod::Recursive),
            Err(AbIndexError::TrivialPoset)
        );
        assert_eq!(
            ex_ab_index(&t, ExPsiMethod::Recursive),
            Err(AbIndexError::TrivialPoset)
        );
        assert_eq!(
            ab_index_tilde(&t, PsiMethod::Chains),
            Err(AbIndexError::TrivialPoset)
        );
        assert_eq!(
            ex_ab_index_tilde(&t, ExPsiTildeMethod::Omega),
            Err(AbIndexError::TrivialPoset)
        );
    }

    #[test]
    fn method_names_round_trip() {
        for &m in ExPsiMethod::ALL {
            assert_eq!(m.to_string().parse::<ExPsiMethod>().unwrap(), m);
        }
        assert!("omega".parse::<PsiMethod>().is_err());
    }
}
