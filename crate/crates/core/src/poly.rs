//! Dense univariate polynomials with `i64` coefficients.
//!
//! The same representation backs three different rings that never mix:
//! coefficients of noncommutative polynomials live in `ℤ[y]` ([`YPoly`]),
//! Chow polynomials and their γ-expansions live in `ℤ[x]` ([`XPoly`]) and
//! characteristic polynomials are written in `t` ([`TPoly`]). The variable
//! is a zero-sized marker type so that the compiler keeps them apart.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Marker for the variable a [`Poly`] is written in.
pub trait Variable: Copy + Default + Eq + Ord + Hash + fmt::Debug {
    const SYMBOL: &'static str;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarY;
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarX;
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarT;

impl Variable for VarY {
    const SYMBOL: &'static str = "y";
}
impl Variable for VarX {
    const SYMBOL: &'static str = "x";
}
impl Variable for VarT {
    const SYMBOL: &'static str = "t";
}

/// Polynomial in `y`: the coefficient ring of the (extended) ab-index.
pub type YPoly = Poly<VarY>;
/// Polynomial in `x`: Chow polynomials and evaluations.
pub type XPoly = Poly<VarX>;
/// Polynomial in `t`: characteristic polynomials.
pub type TPoly = Poly<VarT>;

/// A univariate integer polynomial in canonical form: `coeffs[i]` is the
/// coefficient of the `i`-th power and there are no trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<V> {
    coeffs: Vec<i64>,
    var: PhantomData<V>,
}

impl<V: Variable> Poly<V> {
    pub fn zero() -> Self {
        Self {
            coeffs: Vec::new(),
            var: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * v^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `(-v)^k`, which shows up everywhere in Poincaré-polynomial identities.
    pub fn neg_var_pow(k: usize) -> Self {
        Self::monomial(if k.is_multiple_of(2) { 1 } else { -1 }, k)
    }

    /// `v^lo + v^(lo+1) + ... + v^(hi-1)`, i.e. `(v^lo - v^hi) / (1 - v)`.
    pub fn geometric(lo: usize, hi: usize) -> Self {
        if hi <= lo {
            return Self::zero();
        }
        let mut coeffs = vec![0; hi];
        coeffs[lo..].fill(1);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, at: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * at + c)
    }

    /// Substitute `value` for the variable (Horner), landing in another ring.
    pub fn compose<W: Variable>(&self, value: &Poly<W>) -> Poly<W> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, &c| &(&acc * value) + &Poly::constant(c))
    }

    /// Reinterpret the coefficient sequence in another variable.
    pub fn rename<W: Variable>(&self) -> Poly<W> {
        Poly {
            coeffs: self.coeffs.clone(),
            var: PhantomData,
        }
    }

    /// `v^deg * p(1/v)` for `deg >= degree`.
    pub fn reversed(&self, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[deg - i] = c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Palindromic with respect to its own degree.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(|&c| c < 0)
    }

    /// Exact division over the integers; any remainder is an error.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let d = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(PolyError::InexactDivision)
            };
        }
        let mut quot = vec![0; rem.len() - d];
        for k in (0..quot.len()).rev() {
            let top = rem[k + d];
            if top % lead != 0 {
                return Err(PolyError::InexactDivision);
            }
            let q = top / lead;
            quot[k] = q;
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= q * c;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(PolyError::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl<V: Variable> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Variable> From<i64> for Poly<V> {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a, V: Variable> Add<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &'a Poly<V>) -> Poly<V> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, V: Variable> Sub<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &'a Poly<V>) -> Poly<V> {
        self + &(-rhs)
    }
}

impl<'a, V: Variable> Mul<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &'a Poly<V>) -> Poly<V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<V: Variable> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<V: Variable> $tr<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, V: Variable> $tr<&'a Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: &'a Poly<V>) -> Poly<V> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<V: Variable> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        self.scale(-1)
    }
}

impl<V: Variable> AddAssign<&Poly<V>> for Poly<V> {
    fn add_assign(&mut self, rhs: &Poly<V>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl<V: Variable> SubAssign<&Poly<V>> for Poly<V> {
    fn sub_assign(&mut self, rhs: &Poly<V>) {
        *self += &(-rhs);
    }
}

impl<V: Variable> std::iter::Sum for Poly<V> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Ascending powers, `^` for exponents, spaces around the signs:
/// `1 + 2y - y^3`.
impl<V: Variable> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            match k {
                0 => {}
                1 => f.write_str(V::SYMBOL)?,
                _ => write!(f, "{}^{k}", V::SYMBOL)?,
            }
        }
        Ok(())
    }
}

impl<V: Variable> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", V::SYMBOL)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(c: &[i64]) -> YPoly {
        YPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(y(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(y(&[0, 0]).is_zero());
        assert_eq!(YPoly::zero().degree(), None);
    }

    #[test]
    fn renders_ascending() {
        assert_eq!(y(&[1, 3, 2]).to_string(), "1 + 3y + 2y^2");
        assert_eq!(y(&[1, 2, 0, -1]).to_string(), "1 + 2y - y^3");
        assert_eq!(y(&[-1, 0, 2]).to_string(), "-1 + 2y^2");
        assert_eq!(y(&[0, -1]).to_string(), "-y");
        assert_eq!(YPoly::zero().to_string(), "0");
        assert_eq!(
            XPoly::from_coeffs(vec![1, 5, 5, 1]).to_string(),
            "1 + 5x + 5x^2 + x^3"
        );
    }

    #[test]
    fn exact_division() {
        // (1 - (-y)^3) / (1 + y) = 1 - y + y^2
        let num = &YPoly::one() - &YPoly::neg_var_pow(3);
        assert_eq!(num.div_exact(&y(&[1, 1])).unwrap(), y(&[1, -1, 1]));
        assert_eq!(
            y(&[1, 0, 1]).div_exact(&y(&[1, 1])),
            Err(PolyError::InexactDivision)
        );
        assert_eq!(
            y(&[1]).div_exact(&YPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
        assert_eq!(y(&[3]).div_exact(&y(&[2])), Err(PolyError::InexactDivision));
        assert_eq!(YPoly::zero().div_exact(&y(&[1, 1])).unwrap(), YPoly::zero());
    }

    #[test]
    fn geometric_series() {
        assert_eq!(XPoly::geometric(0, 3).coeffs(), &[1, 1, 1]);
        assert_eq!(XPoly::geometric(1, 3).coeffs(), &[0, 1, 1]);
        assert!(XPoly::geometric(2, 2).is_zero());
    }

    #[test]
    fn compose_changes_ring() {
        // (1 + 3y + 2y^2) at y = -x
        let p = y(&[1, 3, 2]).compose(&XPoly::monomial(-1, 1));
        assert_eq!(p.coeffs(), &[1, -3, 2]);
    }

    fn small_poly() -> impl Strategy<Value = YPoly> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(YPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn division_inverts_multiplication(p in small_poly(), q in small_poly(), k in 0usize..4) {
            // a monic divisor keeps every quotient step integral
            let q = &q + &YPoly::monomial(1, q.degree().map_or(k, |d| d + 1 + k));
            prop_assert_eq!((&p * &q).div_exact(&q).unwrap(), p);
        }

        #[test]
        fn compose_is_multiplicative(p in small_poly(), q in small_poly(), r in small_poly()) {
            let lhs = (&p * &q).compose(&r.rename::<VarX>());
            let rhs = &p.compose(&r.rename::<VarX>()) * &q.compose(&r.rename::<VarX>());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
