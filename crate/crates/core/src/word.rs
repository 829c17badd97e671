//! Words over the two-letter alphabet `{a, b}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::ncpoly::NcPolyError;
use crate::rankset::RankSet;

/// Longest word we can represent. Poset ranks are capped at the same value.
pub const MAX_WORD_LEN: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// A word over `{a, b}` of length at most [`MAX_WORD_LEN`].
///
/// Bit `i` of the mask is the letter at position `i` (counted from the left),
/// `0` for `a` and `1` for `b`. Bits at or above `len` are always zero.
/// Words are ordered by length, then lexicographically with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AbWord {
    len: u8,
    bits: u64,
}

impl AbWord {
    pub const EMPTY: AbWord = AbWord { len: 0, bits: 0 };

    /// Build from a bitmask of `b` positions.
    pub fn from_b_positions(len: usize, b_positions: RankSet) -> Result<Self, NcPolyError> {
        if len > MAX_WORD_LEN {
            return Err(NcPolyError::WordTooLong(len));
        }
        if let Some(i) = b_positions.max().filter(|&i| i >= len) {
            return Err(NcPolyError::IndexOutOfRange { index: i, len });
        }
        Ok(AbWord {
            len: len as u8,
            bits: b_positions.bits(),
        })
    }

    pub fn from_letters(letters: &[Letter]) -> Result<Self, NcPolyError> {
        let b_positions = letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::B)
            .map(|(i, _)| i)
            .collect();
        Self::from_b_positions(letters.len(), b_positions)
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Positions holding `b`.
    pub fn b_positions(self) -> RankSet {
        RankSet(self.bits)
    }

    pub fn letter(self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        if self.bits >> i & 1 == 1 {
            Letter::B
        } else {
            Letter::A
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn count_b(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn count_a(self) -> usize {
        self.len() - self.count_b()
    }

    pub fn concat(self, other: AbWord) -> Result<AbWord, NcPolyError> {
        let len = self.len() + other.len();
        if len > MAX_WORD_LEN {
            return Err(NcPolyError::WordTooLong(len));
        }
        Ok(AbWord {
            len: len as u8,
            bits: self.bits | other.bits << self.len,
        })
    }

    /// Drop the first letter.
    pub fn tail(self) -> Option<AbWord> {
        (self.len > 0).then(|| AbWord {
            len: self.len - 1,
            bits: self.bits >> 1,
        })
    }

    /// Positions `i` with `a` at `i` and `b` at `i + 1`.
    pub fn ab_positions(self) -> RankSet {
        if self.len < 2 {
            return RankSet::EMPTY;
        }
        let inner = (1u64 << (self.len - 1)) - 1;
        RankSet(!self.bits & (self.bits >> 1) & inner)
    }

    fn sort_key(self) -> (u8, u64) {
        (self.len, self.bits.reverse_bits())
    }
}

impl Ord for AbWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for AbWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbWord(\"{self}\")")
    }
}

impl FromStr for AbWord {
    type Err = NcPolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                other => Err(NcPolyError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_letters(&letters)
    }
}
