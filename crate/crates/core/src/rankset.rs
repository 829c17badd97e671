use std::fmt;

/// A set of small nonnegative integers (ranks or positions) stored as a
/// bitmask. Bit `i` set means `i` is a member. Holds values `0..64`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankSet(pub u64);

impl RankSet {
    pub const EMPTY: RankSet = RankSet(0);

    pub fn singleton(i: usize) -> Self {
        RankSet(1 << i)
    }

    /// `{lo, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if hi < lo {
            return Self::EMPTY;
        }
        let width = hi - lo + 1;
        let mask = if width >= 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        RankSet(mask << lo)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> Self {
        RankSet(self.0 | 1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RankSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// No two consecutive members.
    pub fn is_isolated(self) -> bool {
        self.0 & (self.0 >> 1) == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                i
            })
        })
    }

    /// All subsets of `self`, in increasing order of their bitmask.
    pub fn subsets(self) -> impl Iterator<Item = RankSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(RankSet(cur))
        })
    }
}

impl FromIterator<usize> for RankSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RankSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// `{1,2}`; the empty set prints as `{}`.
impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_display() {
        let s: RankSet = [1, 2].into_iter().collect();
        assert!(s.contains(1) && s.contains(2) && !s.contains(0));
        assert_eq!(s.to_string(), "{1,2}");
        assert_eq!(RankSet::EMPTY.to_string(), "{}");
        assert_eq!(s.max(), Some(2));
        assert!(!s.is_isolated());
        assert!(RankSet::from_iter([1, 3]).is_isolated());
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = RankSet::from_iter([0, 2, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(RankSet::EMPTY.subsets().count(), 1);
        assert_eq!(RankSet::range(1, 4), RankSet::from_iter([1, 2, 3, 4]));
        assert_eq!(RankSet::range(2, 1), RankSet::EMPTY);
    }
}
