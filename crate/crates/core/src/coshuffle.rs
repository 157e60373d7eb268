//! The tensor (or symmetric) Hopf algebra on an alphabet of letters:
//! concatenation product, deshuffle coproduct with primitive letters,
//! counit, antipode and iterated coproducts.
//!
//! For a commutative alphabet the words are kept sorted, which realizes the
//! symmetric algebra inside the same machinery.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::kernel::{Graded, LinComb, Rational, Tensor, TensorPower};

/// A letter of the alphabet generating the word algebra.
pub trait Letter: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Whether words in these letters commute (symmetric algebra).
    const COMMUTATIVE: bool;
    fn letter_degree(&self) -> usize;
}

/// A basis word; the empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word<L> {
    letters: Vec<L>,
}

impl<L: Letter> Word<L> {
    pub fn new(mut letters: Vec<L>) -> Self {
        if L::COMMUTATIVE {
            letters.sort();
        }
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn single(letter: L) -> Self {
        Word { letters: vec![letter] }
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.letters.iter().map(Letter::letter_degree).sum()
    }

    pub fn concat(&self, other: &Word<L>) -> Word<L> {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.letters);
        v.extend_from_slice(&other.letters);
        Word::new(v)
    }

    fn pick(&self, idx: impl Iterator<Item = usize>) -> Word<L> {
        Word::new(idx.map(|i| self.letters[i].clone()).collect())
    }
}

impl<L: Letter> Graded for Word<L> {
    fn degree(&self) -> usize {
        Word::degree(self)
    }
}

impl<L: Letter> Ord for Word<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl<L: Letter> PartialOrd for Word<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl<L: fmt::Display> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl<L: Letter + FromStr<Err = Error>> FromStr for Word<L> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        crate::trees::parse_forest(s)
    }
}

/// Shorthand for linear combinations of words.
pub type Elem<L> = LinComb<Word<L>>;

pub fn unit<L: Letter>() -> Elem<L> {
    LinComb::basis(Word::empty())
}

/// The concatenation product, extended bilinearly.
pub fn concat<L: Letter>(u: &Elem<L>, v: &Elem<L>) -> Elem<L> {
    crate::kernel::bilinear(u, v, |a, b| LinComb::basis(a.concat(b)))
}

/// Deshuffle coproduct of one word: the sum over all `2^m` ways of sending
/// each letter to the left or right factor, order preserved.
pub fn deshuffle_word<L: Letter>(w: &Word<L>) -> LinComb<Tensor<Word<L>, Word<L>>> {
    let m = w.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << m) {
        let left = w.pick((0..m).filter(|i| mask >> i & 1 == 1));
        let right = w.pick((0..m).filter(|i| mask >> i & 1 == 0));
        out.add_term(Tensor(left, right), Rational::one());
    }
    out
}

pub fn deshuffle<L: Letter>(u: &Elem<L>) -> LinComb<Tensor<Word<L>, Word<L>>> {
    u.extend_linear(deshuffle_word)
}

pub fn counit_word<L: Letter>(w: &Word<L>) -> Rational {
    if w.is_empty() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn counit<L: Letter>(u: &Elem<L>) -> Rational {
    u.coeff(&Word::empty())
}

/// `S(τ₁⋯τ_m) = (−1)^m τ_m⋯τ₁`.
pub fn antipode_word<L: Letter>(w: &Word<L>) -> Elem<L> {
    let mut rev = w.letters.clone();
    rev.reverse();
    let sign = if w.len().is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    LinComb::term(Word::new(rev), sign)
}

pub fn antipode<L: Letter>(u: &Elem<L>) -> Elem<L> {
    u.extend_linear(antipode_word)
}

/// `Δ^(n)(w)`, an `(n+1)`-fold tensor: each letter goes to one of the
/// `n+1` factors, order preserved within each factor.
pub fn iterated_coproduct_word<L: Letter>(w: &Word<L>, n: usize) -> LinComb<TensorPower<Word<L>>> {
    assert!(n >= 1, "iterated coproduct needs n >= 1");
    let parts = n + 1;
    let m = w.len();
    let mut out = LinComb::zero();
    let mut slot = vec![0usize; m];
    loop {
        let legs: Vec<Word<L>> = (0..parts)
            .map(|p| w.pick((0..m).filter(|&i| slot[i] == p)))
            .collect();
        out.add_term(TensorPower(legs), Rational::one());
        // advance the base-`parts` counter
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            slot[i] += 1;
            if slot[i] < parts {
                break;
            }
            slot[i] = 0;
            i += 1;
        }
    }
}

pub fn iterated_coproduct<L: Letter>(u: &Elem<L>, n: usize) -> LinComb<TensorPower<Word<L>>> {
    u.extend_linear(|w| iterated_coproduct_word(w, n))
}

/// Componentwise product in `H ⊗ H`.
pub fn concat2<L: Letter>(
    u: &LinComb<Tensor<Word<L>, Word<L>>>,
    v: &LinComb<Tensor<Word<L>, Word<L>>>,
) -> LinComb<Tensor<Word<L>, Word<L>>> {
    crate::kernel::bilinear(u, v, |a, b| LinComb::basis(Tensor(a.0.concat(&b.0), a.1.concat(&b.1))))
}

/// The flip `a ⊗ b ↦ b ⊗ a`.
pub fn swap<A: Ord + Clone, B: Ord + Clone>(u: &LinComb<Tensor<A, B>>) -> LinComb<Tensor<B, A>> {
    u.map_keys(|t| Tensor(t.1.clone(), t.0.clone()))
}

/// Every basis word of the given degree, built from `letters(k)` (the letters
/// of degree `k`). Commutative alphabets yield only sorted words.
pub fn words_of_degree<L: Letter>(degree: usize, letters: &impl Fn(usize) -> Vec<L>) -> Vec<Word<L>> {
    fn go<L: Letter>(
        remaining: usize,
        prefix: &mut Vec<L>,
        letters: &impl Fn(usize) -> Vec<L>,
        out: &mut Vec<Word<L>>,
    ) {
        if remaining == 0 {
            out.push(Word { letters: prefix.clone() });
            return;
        }
        for k in 1..=remaining {
            for l in letters(k) {
                if L::COMMUTATIVE && prefix.last().is_some_and(|p| *p > l) {
                    continue;
                }
                prefix.push(l);
                go(remaining - k, prefix, letters, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(degree, &mut Vec::new(), letters, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Basis words of every degree up to and including `max_degree`.
pub fn words_up_to<L: Letter>(max_degree: usize, letters: &impl Fn(usize) -> Vec<L>) -> Vec<Word<L>> {
    (0..=max_degree).flat_map(|d| words_of_degree(d, letters)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, Tensor3};
    use crate::trees::{OrderedTree, UnorderedTree};

    type W = Word<OrderedTree>;

    fn w(s: &str) -> W {
        s.parse().unwrap()
    }

    fn e(s: &str) -> Elem<OrderedTree> {
        LinComb::basis(w(s))
    }

    fn ordered_words(d: usize) -> Vec<W> {
        words_up_to(d, &OrderedTree::all_of_degree)
    }

    fn pair(a: &str, b: &str) -> Tensor<W, W> {
        Tensor(w(a), w(b))
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&unit(), &e("(()) ()")), e("(()) ()"));
        assert_eq!(concat(&e("()"), &e("()")), e("() ()"));
        assert_eq!(concat(&e("(())"), &e("() ()")), e("(()) () ()"));
    }

    #[test]
    fn deshuffle_examples() {
        assert_eq!(deshuffle_word(&W::empty()), LinComb::basis(pair("1", "1")));
        let tau = "(())";
        let expected: LinComb<_> = [(pair(tau, "1"), int(1)), (pair("1", tau), int(1))].into_iter().collect();
        assert_eq!(deshuffle_word(&w(tau)), expected);
        let got = deshuffle_word(&w("(()) ()"));
        let expected: LinComb<_> = [
            (pair("(()) ()", "1"), int(1)),
            (pair("(())", "()"), int(1)),
            (pair("()", "(())"), int(1)),
            (pair("1", "(()) ()"), int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode_word(&W::empty()), unit());
        assert_eq!(antipode_word(&w("(())")), -e("(())"));
        assert_eq!(antipode_word(&w("(()) ()")), e("() (())"));
    }

    #[test]
    fn iterated_coproduct_examples() {
        let got = iterated_coproduct_word(&W::empty(), 2);
        assert_eq!(got, LinComb::basis(TensorPower(vec![W::empty(), W::empty(), W::empty()])));
        let tau = w("()");
        let one = W::empty();
        let expected: LinComb<_> = [
            (TensorPower(vec![tau.clone(), one.clone(), one.clone()]), int(1)),
            (TensorPower(vec![one.clone(), tau.clone(), one.clone()]), int(1)),
            (TensorPower(vec![one.clone(), one.clone(), tau.clone()]), int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(iterated_coproduct_word(&tau, 2), expected);
        for word in ordered_words(3) {
            let d1 = iterated_coproduct_word(&word, 1).map_keys(|t| Tensor(t.0[0].clone(), t.0[1].clone()));
            assert_eq!(d1, deshuffle_word(&word));
        }
    }

    fn coassoc_sides(word: &W) -> (LinComb<Tensor3<W, W, W>>, LinComb<Tensor3<W, W, W>>) {
        let d = deshuffle_word(word);
        let left = d.extend_linear(|t| {
            deshuffle_word(&t.0).map_keys(|s| Tensor3(s.0.clone(), s.1.clone(), t.1.clone()))
        });
        let right = d.extend_linear(|t| {
            deshuffle_word(&t.1).map_keys(|s| Tensor3(t.0.clone(), s.0.clone(), s.1.clone()))
        });
        (left, right)
    }

    #[test]
    fn hopf_laws_up_to_degree_five() {
        let words = ordered_words(5);
        for word in &words {
            let (l, r) = coassoc_sides(word);
            assert_eq!(l, r, "coassociativity on {word}");
            let d = deshuffle_word(word);
            assert_eq!(swap(&d), d, "cocommutativity on {word}");
            let eps = LinComb::term(W::empty(), counit_word(word));
            let left = d.extend_linear(|t| concat(&antipode_word(&t.0), &LinComb::basis(t.1.clone())));
            let right = d.extend_linear(|t| concat(&LinComb::basis(t.0.clone()), &antipode_word(&t.1)));
            assert_eq!(left, eps, "left antipode law on {word}");
            assert_eq!(right, eps, "right antipode law on {word}");
        }
        for a in &words {
            for b in &words {
                if a.degree() + b.degree() > 5 {
                    continue;
                }
                let lhs = deshuffle_word(&a.concat(b));
                let rhs = concat2(&deshuffle_word(a), &deshuffle_word(b));
                assert_eq!(lhs, rhs, "bialgebra law on {a} · {b}");
            }
        }
    }

    #[test]
    fn commutative_words_are_sorted() {
        let a: Word<UnorderedTree> = "(()) ()".parse().unwrap();
        let b: Word<UnorderedTree> = "() (())".parse().unwrap();
        assert_eq!(a, b);
        // a doubled letter gives multiplicity two in the coproduct
        let d = deshuffle_word(&"() ()".parse::<Word<UnorderedTree>>().unwrap());
        let one = Word::empty();
        let dot: Word<UnorderedTree> = "()".parse().unwrap();
        assert_eq!(d.coeff(&Tensor(dot.clone(), dot)), int(2));
        assert_eq!(d.coeff(&Tensor(one.clone(), one)), int(0));
    }

    #[test]
    fn word_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|d| words_of_degree(d, &OrderedTree::all_of_degree).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
        // unordered forests with n nodes = unordered trees with n + 1 nodes
        let counts: Vec<usize> = (0..=4)
            .map(|d| words_of_degree(d, &UnorderedTree::all_of_degree).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9]);
    }
}
