//! Finite graded bounded posets.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::poly::{TPoly, YPoly};
use crate::rankset::RankSet;
use crate::word::MAX_WORD_LEN;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("element {0:?} is declared twice")]
    DuplicateElement(String),
    #[error("cover refers to undeclared element {0:?}")]
    UnknownElement(String),
    #[error("cover relations contain a cycle")]
    CyclicCovers,
    #[error("poset is not bounded: {minimal} minimal and {maximal} maximal elements")]
    NotBounded { minimal: usize, maximal: usize },
    #[error("poset is not graded: cover {lower:?} ⋖ {upper:?} breaks the rank function")]
    NotGraded { lower: String, upper: String },
    #[error("rank {0} exceeds the supported maximum of {MAX_WORD_LEN}")]
    RankTooLarge(usize),
    #[error("{0:?} is not below {1:?}")]
    NotComparable(String, String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
}

/// A finite poset with a unique minimum `0̂`, a unique maximum `1̂` and a
/// rank function that increases by one along every cover relation.
///
/// Elements are addressed by their index in the declaration order. The order
/// relation is stored as a dense bit matrix and Möbius rows are computed
/// lazily on first use.
pub struct Poset {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    rank: Vec<usize>,
    by_rank: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    stride: usize,
    leq: Vec<u64>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl Poset {
    /// Build and validate a poset from element names and cover pairs
    /// `(lower, upper)` given by name.
    pub fn build<N: AsRef<str>, C: AsRef<str>>(
        names: &[N],
        covers: &[(C, C)],
    ) -> Result<Poset, PosetError> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.as_ref(), i).is_some() {
                return Err(PosetError::DuplicateElement(n.as_ref().to_string()));
            }
        }
        let lookup = |s: &C| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| PosetError::UnknownElement(s.as_ref().to_string()))
        };
        let covers = covers
            .iter()
            .map(|(u, v)| Ok((lookup(u)?, lookup(v)?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        let names = names.iter().map(|n| n.as_ref().to_string()).collect();
        Self::from_index_covers(names, covers)
    }

    /// Same as [`Poset::build`] with covers given as index pairs.
    pub fn from_index_covers(
        names: Vec<String>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Poset, PosetError> {
        let m = names.len();
        let mut seen = HashSet::with_capacity(names.len());
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(PosetError::DuplicateElement(dup.clone()));
        }
        if let Some(&(u, v)) = covers.iter().find(|&&(u, v)| u >= m || v >= m) {
            let bad = if u >= m { u } else { v };
            return Err(PosetError::UnknownElement(format!("#{bad}")));
        }

        let mut dedup = HashSet::with_capacity(covers.len());
        let covers: Vec<_> = covers.into_iter().filter(|c| dedup.insert(*c)).collect();
        if covers.iter().any(|&(u, v)| u == v) {
            return Err(PosetError::CyclicCovers);
        }

        let mut upper = vec![Vec::new(); m];
        let mut lower = vec![Vec::new(); m];
        for &(u, v) in &covers {
            upper[u].push(v);
            lower[v].push(u);
        }
        for list in upper.iter_mut().chain(lower.iter_mut()) {
            list.sort_unstable();
        }

        let topo = topological_order(&upper, &lower).ok_or(PosetError::CyclicCovers)?;

        let minimal: Vec<_> = (0..m).filter(|&i| lower[i].is_empty()).collect();
        let maximal: Vec<_> = (0..m).filter(|&i| upper[i].is_empty()).collect();
        if minimal.len() != 1 || maximal.len() != 1 {
            return Err(PosetError::NotBounded {
                minimal: minimal.len(),
                maximal: maximal.len(),
            });
        }
        let (bottom, top) = (minimal[0], maximal[0]);

        // Every element lies above the unique minimal one, so walking the
        // topological order assigns every rank before it is read.
        let mut rank = vec![usize::MAX; m];
        rank[bottom] = 0;
        for &u in &topo {
            for &v in &upper[u] {
                if rank[v] == usize::MAX {
                    rank[v] = rank[u] + 1;
                } else if rank[v] != rank[u] + 1 {
                    return Err(PosetError::NotGraded {
                        lower: names[u].clone(),
                        upper: names[v].clone(),
                    });
                }
            }
        }
        let n = rank[top];
        if n > MAX_WORD_LEN {
            return Err(PosetError::RankTooLarge(n));
        }
        let mut by_rank = vec![Vec::new(); n + 1];
        for (i, &r) in rank.iter().enumerate() {
            by_rank[r].push(i);
        }

        let stride = m.div_ceil(64).max(1);
        let mut leq = vec![0u64; m * stride];
        for &u in topo.iter().rev() {
            leq[u * stride + u / 64] |= 1 << (u % 64);
            for &v in &upper[u] {
                for k in 0..stride {
                    let bits = leq[v * stride + k];
                    leq[u * stride + k] |= bits;
                }
            }
        }

        Ok(Poset {
            names,
            covers,
            upper,
            lower,
            rank,
            by_rank,
            bottom,
            top,
            stride,
            leq,
            mobius_rows: (0..m).map(|_| OnceLock::new()).collect(),
        })
    }

    /// The one-element poset of rank 0.
    pub fn trivial() -> Poset {
        Self::from_index_covers(vec!["0".into()], vec![]).expect("trivial poset is valid")
    }

    /// The chain `0 < 1 < ... < n`.
    pub fn chain(n: usize) -> Result<Poset, PosetError> {
        let names = (0..=n).map(|i| i.to_string()).collect();
        Self::from_index_covers(names, (0..n).map(|i| (i, i + 1)).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Rank of `1̂`.
    pub fn rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Cover relations `(lower, upper)` in declaration order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn elements_of_rank(&self, r: usize) -> &[usize] {
        self.by_rank.get(r).map_or(&[], Vec::as_slice)
    }

    /// Elements strictly between `0̂` and `1̂`.
    pub fn interior(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != self.bottom && i != self.top)
    }

    pub fn leq(&self, u: usize, w: usize) -> bool {
        self.leq[u * self.stride + w / 64] >> (w % 64) & 1 == 1
    }

    pub fn lt(&self, u: usize, w: usize) -> bool {
        u != w && self.leq(u, w)
    }

    fn require_leq(&self, u: usize, w: usize) -> Result<(), PosetError> {
        if self.leq(u, w) {
            Ok(())
        } else {
            Err(PosetError::NotComparable(
                self.names[u].clone(),
                self.names[w].clone(),
            ))
        }
    }

    /// The interval `[u, w]` as a poset of its own, elements kept in the
    /// parent's declaration order.
    pub fn interval(&self, u: usize, w: usize) -> Result<Poset, PosetError> {
        self.require_leq(u, w)?;
        let members: Vec<usize> = (0..self.len())
            .filter(|&v| self.leq(u, v) && self.leq(v, w))
            .collect();
        let mut reindex = vec![usize::MAX; self.len()];
        for (k, &v) in members.iter().enumerate() {
            reindex[v] = k;
        }
        let covers = self
            .covers
            .iter()
            .filter(|&&(a, b)| reindex[a] != usize::MAX && reindex[b] != usize::MAX)
            .map(|&(a, b)| (reindex[a], reindex[b]))
            .collect();
        let names = members.iter().map(|&v| self.names[v].clone()).collect();
        Self::from_index_covers(names, covers)
    }

    /// `μ(u, v)` for every `v`, zero where `u ≰ v`.
    fn mobius_row(&self, u: usize) -> &[i64] {
        self.mobius_rows[u].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            row[u] = 1;
            for r in self.rank[u] + 1..=self.rank() {
                for &v in &self.by_rank[r] {
                    if !self.leq(u, v) {
                        continue;
                    }
                    let mut s = 0;
                    for r2 in self.rank[u]..r {
                        for &z in &self.by_rank[r2] {
                            if row[z] != 0 && self.leq(z, v) {
                                s += row[z];
                            }
                        }
                    }
                    row[v] = -s;
                }
            }
            row
        })
    }

    /// Möbius function `μ(u, w)`.
    pub fn mobius(&self, u: usize, w: usize) -> Result<i64, PosetError> {
        self.require_leq(u, w)?;
        Ok(self.mobius_row(u)[w])
    }

    /// `Poin_P(y) = Σ_w μ(0̂, w) (-y)^rk(w)`.
    pub fn poincare(&self) -> YPoly {
        self.interval_poincare_unchecked(self.bottom, self.top)
    }

    /// Poincaré polynomial of `[u, w]` without materializing the interval.
    pub fn interval_poincare(&self, u: usize, w: usize) -> Result<YPoly, PosetError> {
        self.require_leq(u, w)?;
        Ok(self.interval_poincare_unchecked(u, w))
    }

    pub(crate) fn interval_poincare_unchecked(&self, u: usize, w: usize) -> YPoly {
        let row = self.mobius_row(u);
        let base = self.rank[u];
        let mut coeffs = vec![0i64; self.rank[w] - base + 1];
        for (v, &m) in row.iter().enumerate() {
            if m != 0 && self.leq(v, w) {
                let k = self.rank[v] - base;
                coeffs[k] += if k.is_multiple_of(2) { m } else { -m };
            }
        }
        YPoly::from_coeffs(coeffs)
    }

    /// Characteristic polynomial `χ_P(t) = Σ_w μ(0̂, w) t^(n - rk(w))`.
    pub fn char_poly(&self) -> TPoly {
        let n = self.rank();
        let row = self.mobius_row(self.bottom);
        let mut coeffs = vec![0i64; n + 1];
        for (v, &mu) in row.iter().enumerate() {
            coeffs[n - self.rank[v]] += mu;
        }
        TPoly::from_coeffs(coeffs)
    }

    /// `Σ_w (-y)^rk(w) Poin_[w,1̂](y)`, which is identically 1.
    pub fn upper_poincare_sum(&self) -> YPoly {
        (0..self.len())
            .map(|w| {
                &YPoly::neg_var_pow(self.rank[w]) * &self.interval_poincare_unchecked(w, self.top)
            })
            .sum()
    }

    /// Validate an element sequence as a chain ending in `1̂`.
    pub fn chain_from(&self, elements: Vec<usize>) -> Result<Chain, PosetError> {
        if elements.last() != Some(&self.top) {
            return Err(PosetError::InvalidChain(
                "chain must end in the maximum".into(),
            ));
        }
        if let Some(&bad) = elements.iter().find(|&&e| e >= self.len()) {
            return Err(PosetError::InvalidChain(format!("no element #{bad}")));
        }
        if let Some(pair) = elements.windows(2).find(|p| !self.lt(p[0], p[1])) {
            return Err(PosetError::InvalidChain(format!(
                "{:?} is not strictly below {:?}",
                self.names[pair[0]], self.names[pair[1]]
            )));
        }
        Ok(Chain(elements))
    }

    /// `Poin_{P,C}`: product of the Poincaré polynomials of consecutive
    /// intervals of the chain.
    pub fn chain_poincare(&self, chain: &Chain) -> YPoly {
        chain.0.windows(2).fold(YPoly::one(), |acc, p| {
            &acc * &self.interval_poincare_unchecked(p[0], p[1])
        })
    }

    /// Every chain ending in `1̂` (including `{1̂}`), in lexicographic order of
    /// the element-index sequences.
    pub fn chains_to_top(&self) -> ChainsToTop<'_> {
        let strict_up = (0..self.len())
            .map(|u| (0..self.len()).filter(|&v| self.lt(u, v)).collect())
            .collect();
        ChainsToTop {
            poset: self,
            strict_up,
            stack: Vec::new(),
            root: 0,
        }
    }

    /// All maximal chains `0̂ ⋖ M_1 ⋖ … ⋖ 1̂`, lexicographically.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        let mut out = Vec::new();
        let mut path = vec![self.bottom];
        self.extend_maximal(&mut path, &mut out);
        out
    }

    fn extend_maximal(&self, path: &mut Vec<usize>, out: &mut Vec<Chain>) {
        let last = *path.last().unwrap();
        if last == self.top {
            out.push(Chain(path.clone()));
            return;
        }
        for &v in &self.upper[last] {
            path.push(v);
            self.extend_maximal(path, out);
            path.pop();
        }
    }
}

fn topological_order(upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..upper.len()).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(upper.len());
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &upper[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    (order.len() == upper.len()).then_some(order)
}

impl Clone for Poset {
    fn clone(&self) -> Self {
        Poset {
            names: self.names.clone(),
            covers: self.covers.clone(),
            upper: self.upper.clone(),
            lower: self.lower.clone(),
            rank: self.rank.clone(),
            by_rank: self.by_rank.clone(),
            bottom: self.bottom,
            top: self.top,
            stride: self.stride,
            leq: self.leq.clone(),
            mobius_rows: (0..self.len()).map(|_| OnceLock::new()).collect(),
        }
    }
}

/// Two posets are equal when they have the same element names in the same
/// order and the same set of cover relations.
impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        let sorted = |p: &Poset| {
            let mut c = p.covers.clone();
            c.sort_unstable();
            c
        };
        self.names == other.names && sorted(self) == sorted(other)
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(u, v)| (&self.names[u], &self.names[v]))
            .collect();
        f.debug_struct("Poset")
            .field("rank", &self.rank())
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

/// A chain `C_1 < … < C_{k+1} = 1̂`, stored as element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain(Vec<usize>);

impl Chain {
    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    /// Ranks of all elements except the final `1̂`.
    pub fn rank_set(&self, poset: &Poset) -> RankSet {
        self.0[..self.0.len() - 1]
            .iter()
            .map(|&e| poset.rank_of(e))
            .collect()
    }

    pub fn starts_at_bottom(&self, poset: &Poset) -> bool {
        self.0[0] == poset.bottom()
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Chain, &'a Poset);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (k, &e) in self.0 .0.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" < ")?;
                    }
                    f.write_str(self.1.name(e))?;
                }
                Ok(())
            }
        }
        D(self, poset)
    }
}

/// Iterator returned by [`Poset::chains_to_top`].
pub struct ChainsToTop<'a> {
    poset: &'a Poset,
    strict_up: Vec<Vec<usize>>,
    stack: Vec<(usize, usize)>,
    root: usize,
}

impl ChainsToTop<'_> {
    fn current(&self) -> Chain {
        Chain(self.stack.iter().map(|&(e, _)| e).collect())
    }
}

impl Iterator for ChainsToTop<'_> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        let top = self.poset.top();
        loop {
            let pushed = match self.stack.last_mut() {
                None => {
                    if self.root >= self.poset.len() {
                        return None;
                    }
                    self.root += 1;
                    self.root - 1
                }
                Some((e, cursor)) => match self.strict_up[*e].get(*cursor) {
                    Some(&k) => {
                        *cursor += 1;
                        k
                    }
                    None => {
                        self.stack.pop();
                        continue;
                    }
                },
            };
            self.stack.push((pushed, 0));
            if pushed == top {
                return Some(self.current());
            }
        }
    }
}
