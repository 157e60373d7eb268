//! Exact scalars and sparse formal linear combinations.
//!
//! Every algebra element in the crate is a [`LinComb`] over some canonical
//! basis key. Keys are ordered (`Ord`) so that equality of linear
//! combinations is structural equality of their term maps.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-2/5"` and the like.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::parse(s, 0, "expected a rational number such as 3 or -2/5");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::parse(s, 0, "zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Node-count style grading used to bound truncated computations.
pub trait Graded {
    fn degree(&self) -> usize;
}

impl Graded for usize {
    // Finite-dimensional bases are ungraded; everything sits in degree 0.
    fn degree(&self) -> usize {
        0
    }
}

/// Basis key of a binary tensor product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<A, B>(pub A, pub B);

/// Basis key of a threefold tensor product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor3<A, B, C>(pub A, pub B, pub C);

/// Basis key of an n-fold tensor power.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorPower<B>(pub Vec<B>);

impl<A: Graded, B: Graded> Graded for Tensor<A, B> {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

impl<A: Graded, B: Graded, C: Graded> Graded for Tensor3<A, B, C> {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree() + self.2.degree()
    }
}

impl<B: Graded> Graded for TensorPower<B> {
    fn degree(&self) -> usize {
        self.0.iter().map(Graded::degree).sum()
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

impl<A: fmt::Display, B: fmt::Display, C: fmt::Display> fmt::Display for Tensor3<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {} ⊗ {}", self.0, self.1, self.2)
    }
}

impl<B: fmt::Display> fmt::Display for TensorPower<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊗ ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// A finite formal linear combination `Σ c_b · b` with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Adds `c · b`, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (b, k) in other.iter() {
            self.add_term(b.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, k)| (b.clone(), k * c)).collect(),
        }
    }

    /// Linear extension of `f`: `Σ c_b · f(b)`.
    pub fn extend_linear<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Like [`extend_linear`](Self::extend_linear) for fallible `f`.
    pub fn try_extend_linear<C, E, F>(&self, mut f: F) -> Result<LinComb<C>, E>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Result<LinComb<C>, E>,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b)?, c);
        }
        Ok(out)
    }

    /// Relabels basis keys; coefficients of keys that collide are summed.
    pub fn map_keys<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Applies a linear functional.
    pub fn pair(&self, mut f: impl FnMut(&B) -> Rational) -> Rational {
        self.iter().fold(Rational::zero(), |acc, (b, c)| acc + c * f(b))
    }

    /// The part supported on keys satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<B: Ord + Clone + Graded> LinComb<B> {
    /// Largest degree of a supporting key; `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.keys().map(Graded::degree).max()
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        self.filter(|b| b.degree() == degree)
    }
}

/// Linear extension of `f` over `u`.
pub fn extend_linear<B, C, F>(f: F, u: &LinComb<B>) -> LinComb<C>
where
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&B) -> LinComb<C>,
{
    u.extend_linear(f)
}

/// Bilinear tensor product `u ⊗ v`.
pub fn tensor<A, B>(u: &LinComb<A>, v: &LinComb<B>) -> LinComb<Tensor<A, B>>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (a, c) in u.iter() {
        for (b, d) in v.iter() {
            out.add_term(Tensor(a.clone(), b.clone()), c * d);
        }
    }
    out
}

/// Bilinear map applied termwise: `Σ c_a d_b · f(a, b)`.
pub fn bilinear<A, B, C, F>(u: &LinComb<A>, v: &LinComb<B>, mut f: F) -> LinComb<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&A, &B) -> LinComb<C>,
{
    let mut out = LinComb::zero();
    for (a, c) in u.iter() {
        for (b, d) in v.iter() {
            out.add_scaled(&f(a, b), &(c * d));
        }
    }
    out
}

pub fn try_bilinear<A, B, C, E, F>(u: &LinComb<A>, v: &LinComb<B>, mut f: F) -> Result<LinComb<C>, E>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&A, &B) -> Result<LinComb<C>, E>,
{
    let mut out = LinComb::zero();
    for (a, c) in u.iter() {
        for (b, d) in v.iter() {
            out.add_scaled(&f(a, b)?, &(c * d));
        }
    }
    Ok(out)
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&-Rational::one())
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -&self
    }
}

impl<B: Ord + Clone> Mul<&LinComb<B>> for &Rational {
    type Output = LinComb<B>;
    fn mul(self, rhs: &LinComb<B>) -> LinComb<B> {
        rhs.scale(self)
    }
}

/// Text form: `2*(()) + -1/3*() () - 1`. Terms follow key order; the zero
/// combination is written `0`.
impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb({self})")
    }
}

/// Parses the [`Display`](fmt::Display) form back. Keys must not contain
/// `+`, `-` or `*`.
impl<B> FromStr for LinComb<B>
where
    B: Ord + Clone + FromStr<Err = Error>,
{
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        if trimmed == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut sign = Rational::one();
        let mut start = 0usize;
        let bytes = s.as_bytes();
        let mut pieces: Vec<(Rational, usize, usize)> = Vec::new();
        for (i, &ch) in bytes.iter().enumerate() {
            if ch == b'+' || ch == b'-' {
                pieces.push((sign.clone(), start, i));
                sign = if ch == b'-' { -Rational::one() } else { Rational::one() };
                start = i + 1;
            }
        }
        pieces.push((sign, start, s.len()));
        for (k, (sign, a, b)) in pieces.into_iter().enumerate() {
            let piece = s[a..b].trim();
            if piece.is_empty() {
                // a leading sign produces an empty first piece
                if k == 0 {
                    continue;
                }
                return Err(Error::parse(s, a, "empty term"));
            }
            let (coeff, key) = match piece.split_once('*') {
                Some((c, key)) => (parse_rational(c)?, key.trim()),
                None => (Rational::one(), piece),
            };
            let key: B = key.parse()?;
            out.add_term(key, sign * coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lc(terms: &[(u32, i64, i64)]) -> LinComb<u32> {
        terms.iter().map(|&(b, n, d)| (b, rat(n, d))).collect()
    }

    #[test]
    fn cancellation_drops_term() {
        let u = lc(&[(1, 2, 1)]);
        let v = lc(&[(1, -2, 1)]);
        assert!((&u + &v).is_zero());
        assert_eq!((&u + &v).len(), 0);
    }

    #[test]
    fn distinct_keys_are_kept() {
        let s = &lc(&[(1, 1, 1)]) + &lc(&[(2, 1, 1)]);
        assert_eq!(s, lc(&[(1, 1, 1), (2, 1, 1)]));
    }

    #[test]
    fn exact_rational_sum() {
        let s = &lc(&[(7, 1, 2)]) + &lc(&[(7, 1, 3)]);
        assert_eq!(s.coeff(&7), rat(5, 6));
    }

    #[test]
    fn extend_linear_examples() {
        let zero: LinComb<u32> = LinComb::zero();
        assert!(extend_linear(|b: &u32| LinComb::basis(*b + 1), &zero).is_zero());
        let u = lc(&[(1, 3, 1), (4, -1, 2)]);
        assert_eq!(extend_linear(|b: &u32| LinComb::basis(*b), &u), u);
        let u = lc(&[(0, 3, 1)]);
        let out = extend_linear(|_: &u32| LinComb::term('c', int(2)), &u);
        assert_eq!(out, LinComb::term('c', int(6)));
    }

    #[test]
    fn tensor_examples() {
        let zero: LinComb<u32> = LinComb::zero();
        assert!(tensor(&zero, &lc(&[(1, 1, 1)])).is_zero());
        let t = tensor(&LinComb::basis('b'), &LinComb::basis('c'));
        assert_eq!(t, LinComb::basis(Tensor('b', 'c')));
        let t = tensor(&(&LinComb::basis('b') + &LinComb::basis('d')), &LinComb::basis('c'));
        let expected = &LinComb::basis(Tensor('b', 'c')) + &LinComb::basis(Tensor('d', 'c'));
        assert_eq!(t, expected);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn arb_lincomb() -> impl Strategy<Value = LinComb<u8>> {
        prop::collection::vec((0u8..6, -5i64..5, 1i64..4), 0..6)
            .prop_map(|v| v.into_iter().map(|(b, n, d)| (b, rat(n, d))).collect())
    }

    proptest! {
        #[test]
        fn add_is_associative_and_commutative(u in arb_lincomb(), v in arb_lincomb(), w in arb_lincomb()) {
            prop_assert_eq!(&u + &v, &v + &u);
            prop_assert_eq!(&(&u + &v) + &w, &u + &(&v + &w));
        }

        #[test]
        fn extend_linear_is_additive(u in arb_lincomb(), v in arb_lincomb(), k in 1u8..4) {
            let f = |b: &u8| -> LinComb<u8> {
                (&LinComb::basis(b.wrapping_mul(k) % 5) + &LinComb::term(*b, int(i64::from(k)))).clone()
            };
            prop_assert_eq!(extend_linear(f, &(&u + &v)), &extend_linear(f, &u) + &extend_linear(f, &v));
        }

        #[test]
        fn tensor_distributes(u in arb_lincomb(), v in arb_lincomb(), w in arb_lincomb()) {
            prop_assert_eq!(tensor(&(&u + &v), &w), &tensor(&u, &w) + &tensor(&v, &w));
            prop_assert_eq!(tensor(&w, &(&u + &v)), &tensor(&w, &u) + &tensor(&w, &v));
        }

        #[test]
        fn no_zero_coefficients_stored(u in arb_lincomb(), v in arb_lincomb()) {
            let s = &u - &v;
            prop_assert!(s.iter().all(|(_, c)| !c.is_zero()));
        }
    }
}
