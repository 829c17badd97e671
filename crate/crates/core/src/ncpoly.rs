//! Homogeneous polynomials in two noncommuting variables `a`, `b` with
//! coefficients in `ℤ[y]`, together with the ω- and ι-transformations.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::poly::{XPoly, YPoly};
use crate::rankset::RankSet;
use crate::word::{AbWord, Letter, MAX_WORD_LEN};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcPolyError {
    #[error("cannot add homogeneous polynomials of degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("word length {0} exceeds the maximum of {MAX_WORD_LEN}")]
    WordTooLong(usize),
    #[error("ι is undefined on degree-0 polynomials")]
    ZeroDegree,
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unexpected letter {0:?} in ab-word")]
    BadLetter(char),
    #[error("malformed polynomial literal {0:?}")]
    Malformed(String),
}

/// A homogeneous element of `ℤ[y]⟨a,b⟩`.
///
/// Every key of `terms` has length `degree` and no coefficient is zero. The
/// zero polynomial still carries a degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly {
    degree: usize,
    terms: BTreeMap<AbWord, YPoly>,
}

impl NcPoly {
    pub fn zero(degree: usize) -> Self {
        NcPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        Self::term(AbWord::EMPTY, YPoly::one())
    }

    pub fn word(w: AbWord) -> Self {
        Self::term(w, YPoly::one())
    }

    pub fn term(w: AbWord, coeff: YPoly) -> Self {
        let mut p = Self::zero(w.len());
        if !coeff.is_zero() {
            p.terms.insert(w, coeff);
        }
        p
    }

    pub fn a() -> Self {
        Self::word(AbWord::from_letters(&[Letter::A]).unwrap())
    }

    pub fn b() -> Self {
        Self::word(AbWord::from_letters(&[Letter::B]).unwrap())
    }

    /// `(a - b)^k`.
    pub fn a_minus_b_pow(k: usize) -> Self {
        (&Self::a() - &Self::b()).pow(k)
    }

    /// Parse a sum of words with integer coefficients such as
    /// `aa + 2ab - ba`. `1` stands for the empty word.
    pub fn parse_int(s: &str) -> Result<Self, NcPolyError> {
        let mut terms: Vec<(AbWord, i64)> = Vec::new();
        let normalized = s.replace('-', "+-");
        for chunk in normalized
            .split('+')
            .map(str::trim)
            .filter(|c| !c.is_empty())
        {
            let (sign, rest) = match chunk.strip_prefix('-') {
                Some(r) => (-1, r.trim()),
                None => (1, chunk),
            };
            let split = rest
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(rest.len());
            let (num, word) = rest.split_at(split);
            let c = if num.is_empty() {
                1
            } else {
                num.parse::<i64>()
                    .map_err(|_| NcPolyError::Malformed(chunk.to_string()))?
            };
            let word = if word == "1" {
                AbWord::EMPTY
            } else {
                word.trim().parse()?
            };
            terms.push((word, sign * c));
        }
        let degree = terms.first().map(|(w, _)| w.len()).unwrap_or(0);
        terms
            .into_iter()
            .try_fold(Self::zero(degree), |acc, (w, c)| {
                acc.try_add(&Self::term(w, YPoly::constant(c)))
            })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (lexicographic, `a < b`).
    pub fn terms(&self) -> impl Iterator<Item = (AbWord, &YPoly)> {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    pub fn coeff(&self, w: AbWord) -> YPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    fn accumulate(&mut self, w: AbWord, c: &YPoly) {
        debug_assert_eq!(w.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &NcPoly) -> Result<NcPoly, NcPolyError> {
        if self.degree != other.degree {
            if other.is_zero() {
                return Ok(self.clone());
            }
            if self.is_zero() {
                return Ok(other.clone());
            }
            return Err(NcPolyError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.accumulate(w, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NcPoly) -> Result<NcPoly, NcPolyError> {
        self.try_add(&-other)
    }

    /// Concatenation product, extended bilinearly.
    pub fn try_mul(&self, other: &NcPoly) -> Result<NcPoly, NcPolyError> {
        let degree = self.degree + other.degree;
        if degree > MAX_WORD_LEN {
            return Err(NcPolyError::WordTooLong(degree));
        }
        let mut out = NcPoly::zero(degree);
        for (u, c) in self.terms() {
            for (v, d) in other.terms() {
                out.accumulate(u.concat(v)?, &(c * d));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &YPoly) -> NcPoly {
        let mut out = NcPoly::zero(self.degree);
        for (w, d) in self.terms() {
            out.accumulate(w, &(c * d));
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> NcPoly {
        self.scale(&YPoly::constant(c))
    }

    pub fn pow(&self, k: usize) -> NcPoly {
        (0..k).fold(NcPoly::one(), |acc, _| &acc * self)
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&YPoly) -> YPoly) -> NcPoly {
        let mut out = NcPoly::zero(self.degree);
        for (w, c) in self.terms() {
            out.accumulate(w, &f(c));
        }
        out
    }

    /// Substitute a fixed integer for `y`.
    pub fn specialize_y(&self, y: i64) -> NcPoly {
        self.map_coeffs(|c| YPoly::constant(c.eval(y)))
    }

    /// The ω-transformation: every factor `ab` becomes `(1+y)ab + (y+y²)ba`,
    /// every remaining `a` becomes `a + yb` and every remaining `b` becomes
    /// `b + ya`.
    pub fn omega(&self) -> NcPoly {
        let images = OmegaImages::new();
        let mut out = NcPoly::zero(self.degree);
        for (w, c) in self.terms() {
            for (v, d) in omega_word(w, &images).terms() {
                out.accumulate(v, &(c * d));
            }
        }
        out
    }

    /// The ι-transformation: drop the first letter of every word.
    pub fn iota(&self) -> Result<NcPoly, NcPolyError> {
        if self.degree == 0 {
            return Err(NcPolyError::ZeroDegree);
        }
        let mut out = NcPoly::zero(self.degree - 1);
        for (w, c) in self.terms() {
            out.accumulate(w.tail().expect("nonempty word"), c);
        }
        Ok(out)
    }

    /// Evaluate into `ℤ[x]`: `y ↦ y_to`, `a ↦ a_val`, `b ↦ b_val`.
    pub fn eval_xy(&self, a_val: &XPoly, b_val: &XPoly, y_to: &XPoly) -> XPoly {
        let mut total = XPoly::zero();
        for (w, c) in self.terms() {
            let word_value = &a_val.pow(w.count_a() as u32) * &b_val.pow(w.count_b() as u32);
            total += &(&c.compose(y_to) * &word_value);
        }
        total
    }
}

struct OmegaImages {
    a: NcPoly,
    b: NcPoly,
    ab: NcPoly,
}

impl OmegaImages {
    fn new() -> Self {
        let y = YPoly::var();
        let ab = AbWord::from_letters(&[Letter::A, Letter::B]).unwrap();
        let ba = AbWord::from_letters(&[Letter::B, Letter::A]).unwrap();
        OmegaImages {
            a: &NcPoly::a() + &NcPoly::b().scale(&y),
            b: &NcPoly::b() + &NcPoly::a().scale(&y),
            ab: &NcPoly::term(ab, YPoly::from_coeffs(vec![1, 1]))
                + &NcPoly::term(ba, YPoly::from_coeffs(vec![0, 1, 1])),
        }
    }
}

fn omega_word(w: AbWord, images: &OmegaImages) -> NcPoly {
    let marks = w.ab_positions();
    // An `ab` starting at i forces a `b` at i+1, so marked pairs cannot overlap.
    debug_assert!(marks.bits() & (marks.bits() >> 1) == 0);
    let mut acc = NcPoly::one();
    let mut i = 0;
    while i < w.len() {
        let block = if marks.contains(i) {
            i += 2;
            &images.ab
        } else {
            let l = w.letter(i);
            i += 1;
            match l {
                Letter::A => &images.a,
                Letter::B => &images.b,
            }
        };
        acc = &acc * block;
    }
    acc
}

/// `wt_S = w_0 ⋯ w_{n-1}` with `w_k = b` for `k ∈ S` and `a - b` otherwise.
pub fn wt_set(s: RankSet, n: usize) -> Result<NcPoly, NcPolyError> {
    check_range(s, n)?;
    if n > MAX_WORD_LEN {
        return Err(NcPolyError::WordTooLong(n));
    }
    let a_minus_b = &NcPoly::a() - &NcPoly::b();
    let b = NcPoly::b();
    Ok((0..n).fold(NcPoly::one(), |acc, k| {
        &acc * if s.contains(k) { &b } else { &a_minus_b }
    }))
}

/// `m_T`: `b` at the positions in `T`, `a` elsewhere.
pub fn monomial_t(t: RankSet, n: usize) -> Result<AbWord, NcPolyError> {
    AbWord::from_b_positions(n, t)
}

/// `m_T(E)`: start from `m_T`; an `a` at `i` becomes `b` when `i+1 ∈ E`, a
/// `b` at `i` becomes `a` when `i ∈ E`. `E ⊆ {1, …, n}`.
pub fn monomial_t_e(t: RankSet, e: RankSet, n: usize) -> Result<AbWord, NcPolyError> {
    let base = monomial_t(t, n)?;
    if e.contains(0) {
        return Err(NcPolyError::IndexOutOfRange { index: 0, len: n });
    }
    if let Some(i) = e.max().filter(|&i| i > n) {
        return Err(NcPolyError::IndexOutOfRange { index: i, len: n });
    }
    let shifted = RankSet(e.bits() >> 1);
    let b_positions: RankSet = (0..n)
        .filter(|&i| match base.letter(i) {
            Letter::A => shifted.contains(i),
            Letter::B => !e.contains(i),
        })
        .collect();
    AbWord::from_b_positions(n, b_positions)
}

fn check_range(s: RankSet, n: usize) -> Result<(), NcPolyError> {
    match s.max() {
        Some(i) if i >= n => Err(NcPolyError::IndexOutOfRange { index: i, len: n }),
        _ => Ok(()),
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    /// Panics on a degree mismatch; use [`NcPoly::try_add`] to recover.
    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    /// Panics when the product degree exceeds [`MAX_WORD_LEN`].
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale_int(-1)
    }
}

impl std::iter::Sum for NcPoly {
    /// The sum of an empty iterator is the degree-0 zero polynomial, which
    /// adds to anything.
    fn sum<I: Iterator<Item = NcPoly>>(iter: I) -> NcPoly {
        iter.fold(NcPoly::zero(0), |acc, p| &acc + &p)
    }
}

/// Canonical rendering: `(c)·w` terms joined by ` + `, words in
/// lexicographic order. The empty word prints as its bare coefficient.
impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})·{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[deg {}]({self})", self.degree)
    }
}
