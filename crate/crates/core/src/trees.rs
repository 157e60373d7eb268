//! Planar and non-planar rooted trees in balanced-parentheses form.
//!
//! A tree is stored as its canonical string: `(` opens a node and `)`
//! closes it, children left to right. `()` is the single node and
//! `(()())` is a root with two leaves. A forest is a word of trees and is
//! written with the trees separated by spaces.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::coshuffle::{Letter, Word};
use crate::error::Error;
use crate::kernel::{Graded, LinComb, Rational};

/// A planar (ordered) rooted tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree(String);

/// A rooted tree up to reordering of children; the stored string is the
/// canonical representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnorderedTree(String);

/// Ordered rooted forest: a word in ordered trees.
pub type Forest = Word<OrderedTree>;

/// Unordered rooted forest: a commutative word in unordered trees.
pub type UForest = Word<UnorderedTree>;

/// Checks that `s[start..]` begins with one balanced tree and returns the
/// byte index just past it.
fn scan_tree(s: &str, start: usize) -> Result<usize, Error> {
    let bytes = s.as_bytes();
    if bytes.get(start) != Some(&b'(') {
        return Err(Error::parse(s, start, "expected '('"));
    }
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i + 1);
                }
            }
            _ => return Err(Error::parse(s, i, "unexpected character in tree")),
        }
    }
    Err(Error::parse(s, s.len(), "unbalanced parentheses"))
}

/// Splits a concatenation of balanced trees into its top-level pieces.
fn top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, b) in s.bytes().enumerate() {
        match b {
            b'(' => {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            }
            b')' => {
                depth -= 1;
                if depth == 0 {
                    out.push(&s[start..=i]);
                }
            }
            _ => {}
        }
    }
    out
}

fn compare_graded(a: &str, b: &str) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl OrderedTree {
    pub fn single_node() -> Self {
        OrderedTree("()".to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of nodes.
    pub fn degree(&self) -> usize {
        self.0.len() / 2
    }

    /// The children of the root, left to right.
    pub fn children(&self) -> Vec<OrderedTree> {
        top_level(&self.0[1..self.0.len() - 1])
            .into_iter()
            .map(|c| OrderedTree(c.to_string()))
            .collect()
    }

    /// Grafts `forest` on a new root, in order.
    pub fn from_children<'a>(forest: impl IntoIterator<Item = &'a OrderedTree>) -> Self {
        let mut s = String::from("(");
        for t in forest {
            s.push_str(&t.0);
        }
        s.push(')');
        OrderedTree(s)
    }

    /// Each tree `t` with `degree(t) == n`, in canonical order.
    pub fn all_of_degree(n: usize) -> Vec<OrderedTree> {
        if n == 0 {
            return Vec::new();
        }
        let mut out: Vec<OrderedTree> = ordered_forests(n - 1)
            .into_iter()
            .map(|f| OrderedTree::from_children(f.iter()))
            .collect();
        out.sort();
        out
    }
}

/// Every ordered forest with exactly `n` nodes.
fn ordered_forests(n: usize) -> Vec<Vec<OrderedTree>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for t in OrderedTree::all_of_degree(first) {
            for rest in ordered_forests(n - first) {
                let mut f = Vec::with_capacity(rest.len() + 1);
                f.push(t.clone());
                f.extend(rest);
                out.push(f);
            }
        }
    }
    out
}

impl FromStr for OrderedTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let end = scan_tree(s, 0)?;
        if end != s.len() {
            return Err(Error::parse(s, end, "trailing input after tree"));
        }
        Ok(OrderedTree(s.to_string()))
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedTree({})", self.0)
    }
}

/// Trees are ordered by node count, then by canonical string.
impl Ord for OrderedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_graded(&self.0, &other.0)
    }
}

impl PartialOrd for OrderedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for OrderedTree {
    fn degree(&self) -> usize {
        OrderedTree::degree(self)
    }
}

/// Canonical string of the non-planar tree with planar representative `s`:
/// children are sorted by their own canonical strings (byte order).
fn canonical_unordered(s: &str) -> String {
    let inner = &s[1..s.len() - 1];
    let mut kids: Vec<String> = top_level(inner).into_iter().map(canonical_unordered).collect();
    kids.sort();
    let mut out = String::with_capacity(s.len());
    out.push('(');
    for k in kids {
        out.push_str(&k);
    }
    out.push(')');
    out
}

impl UnorderedTree {
    pub fn single_node() -> Self {
        UnorderedTree("()".to_string())
    }

    /// Forgets the planar structure.
    pub fn from_ordered(t: &OrderedTree) -> Self {
        UnorderedTree(canonical_unordered(&t.0))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() / 2
    }

    /// The canonical planar representative.
    pub fn to_ordered(&self) -> OrderedTree {
        OrderedTree(self.0.clone())
    }

    pub fn children(&self) -> Vec<UnorderedTree> {
        top_level(&self.0[1..self.0.len() - 1])
            .into_iter()
            .map(|c| UnorderedTree(c.to_string()))
            .collect()
    }

    pub fn from_children<'a>(forest: impl IntoIterator<Item = &'a UnorderedTree>) -> Self {
        let mut kids: Vec<&str> = forest.into_iter().map(|t| t.0.as_str()).collect();
        kids.sort();
        let mut s = String::from("(");
        for k in kids {
            s.push_str(k);
        }
        s.push(')');
        UnorderedTree(s)
    }

    pub fn all_of_degree(n: usize) -> Vec<UnorderedTree> {
        let mut out: Vec<UnorderedTree> = OrderedTree::all_of_degree(n)
            .iter()
            .map(UnorderedTree::from_ordered)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl FromStr for UnorderedTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(UnorderedTree::from_ordered(&s.parse()?))
    }
}

impl fmt::Display for UnorderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for UnorderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnorderedTree({})", self.0)
    }
}

impl Ord for UnorderedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_graded(&self.0, &other.0)
    }
}

impl PartialOrd for UnorderedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for UnorderedTree {
    fn degree(&self) -> usize {
        UnorderedTree::degree(self)
    }
}

/// Left grafting `τ ↷ ω`: the sum over the nodes `s` of `ω` of the tree
/// obtained by attaching the root of `τ` to `s` as its new leftmost child.
pub fn graft_left(tau: &OrderedTree, omega: &OrderedTree) -> LinComb<OrderedTree> {
    let mut out = LinComb::zero();
    for (i, b) in omega.0.bytes().enumerate() {
        // every '(' opens a node; inserting right after it makes τ the first child
        if b == b'(' {
            let mut s = String::with_capacity(omega.0.len() + tau.0.len());
            s.push_str(&omega.0[..=i]);
            s.push_str(&tau.0);
            s.push_str(&omega.0[i + 1..]);
            out.add_term(OrderedTree(s), Rational::from_integer(1.into()));
        }
    }
    out
}

/// Grafting of non-planar trees, collected with multiplicities.
pub fn graft_unordered(tau: &UnorderedTree, omega: &UnorderedTree) -> LinComb<UnorderedTree> {
    graft_left(&tau.to_ordered(), &omega.to_ordered()).map_keys(UnorderedTree::from_ordered)
}

/// Forgets planarity termwise.
pub fn canonicalize(u: &LinComb<OrderedTree>) -> LinComb<UnorderedTree> {
    u.map_keys(UnorderedTree::from_ordered)
}

/// `B⁺`: grafts the trees of `forest` on a new root, in order.
pub fn b_plus(forest: &Forest) -> OrderedTree {
    OrderedTree::from_children(forest.letters())
}

/// `B⁻` on a single tree: removes the root.
pub fn b_minus_tree(t: &OrderedTree) -> Forest {
    Word::new(t.children())
}

/// `B⁻` extended multiplicatively to forests.
pub fn b_minus(f: &Forest) -> Forest {
    Word::new(f.letters().iter().flat_map(OrderedTree::children).collect())
}

/// Tree alphabets: letters that carry grafting and the `B±` operators.
pub trait TreeLetter: Letter {
    fn graft(tau: &Self, omega: &Self) -> LinComb<Self>;
    fn b_plus(forest: &Word<Self>) -> Self;
    fn b_minus(&self) -> Word<Self>;
    fn all_of_degree(n: usize) -> Vec<Self>;
}

impl TreeLetter for OrderedTree {
    fn graft(tau: &Self, omega: &Self) -> LinComb<Self> {
        graft_left(tau, omega)
    }
    fn b_plus(forest: &Word<Self>) -> Self {
        b_plus(forest)
    }
    fn b_minus(&self) -> Word<Self> {
        b_minus_tree(self)
    }
    fn all_of_degree(n: usize) -> Vec<Self> {
        OrderedTree::all_of_degree(n)
    }
}

impl TreeLetter for UnorderedTree {
    fn graft(tau: &Self, omega: &Self) -> LinComb<Self> {
        graft_unordered(tau, omega)
    }
    fn b_plus(forest: &Word<Self>) -> Self {
        UnorderedTree::from_children(forest.letters())
    }
    fn b_minus(&self) -> Word<Self> {
        Word::new(self.children())
    }
    fn all_of_degree(n: usize) -> Vec<Self> {
        UnorderedTree::all_of_degree(n)
    }
}

impl Letter for OrderedTree {
    const COMMUTATIVE: bool = false;
    fn letter_degree(&self) -> usize {
        self.degree()
    }
}

impl Letter for UnorderedTree {
    const COMMUTATIVE: bool = true;
    fn letter_degree(&self) -> usize {
        self.degree()
    }
}

/// Parses a forest given as whitespace-separated (or directly concatenated)
/// trees. The empty string and `1` both denote the empty forest.
pub fn parse_forest<L: Letter + FromStr<Err = Error>>(s: &str) -> Result<Word<L>, Error> {
    let t = s.trim();
    if t.is_empty() || t == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    let mut i = 0usize;
    let bytes = t.as_bytes();
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let end = scan_tree(t, i)?;
        letters.push(t[i..end].parse()?);
        i = end;
    }
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;
    use proptest::prelude::*;

    fn t(s: &str) -> OrderedTree {
        s.parse().unwrap()
    }

    fn u(s: &str) -> UnorderedTree {
        s.parse().unwrap()
    }

    fn sum(trees: &[&str]) -> LinComb<OrderedTree> {
        trees.iter().map(|s| (t(s), int(1))).collect()
    }

    #[test]
    fn grafting_fixture_four_terms() {
        let got = graft_left(&t("(())"), &t("(()()())"));
        let expected = sum(&["((())()()())", "(((()))()())", "(()((()))())", "(()()((())))"]);
        assert_eq!(got, expected);
    }

    /// Transcribes an a/b letter string (a = open, b = close).
    fn ab(s: &str) -> OrderedTree {
        s.replace('a', "(").replace('b', ")").parse().unwrap()
    }

    #[test]
    fn grafting_fixtures_in_letter_form() {
        let got = graft_left(&ab("aabb"), &ab("aabababb"));
        let expected: LinComb<OrderedTree> = ["aaabbabababb", "aaaabbbababb", "aabaaabbbabb", "aababaaabbbb"]
            .iter()
            .map(|s| (ab(s), int(1)))
            .collect();
        assert_eq!(got, expected);
        let got = graft_left(&ab("aababb"), &ab("aaabbabb"));
        let expected: LinComb<OrderedTree> = ["aaababbaabbabb", "aaaababbabbabb", "aaaaababbbbabb", "aaabbaaababbbb"]
            .iter()
            .map(|s| (ab(s), int(1)))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn grafting_small_cases() {
        assert_eq!(graft_left(&t("()"), &t("()")), sum(&["(())"]));
        assert_eq!(graft_left(&t("()"), &t("(())")), sum(&["(()())", "((()))"]));
    }

    #[test]
    fn unordered_grafting_collects_multiplicities() {
        let got = graft_unordered(&u("(())"), &u("(()()())"));
        let mut expected = LinComb::basis(u("((())()()())"));
        expected.add_term(u("(((()))()())"), int(3));
        assert_eq!(got, expected);
        assert_eq!(graft_unordered(&u("()"), &u("()")), LinComb::basis(u("(())")));
        let got = graft_unordered(&u("()"), &u("(()())"));
        let mut expected = LinComb::basis(u("(()()())"));
        expected.add_term(u("((())())"), int(2));
        assert_eq!(got, expected);
    }

    #[test]
    fn unordered_canonical_form_is_stable() {
        assert_eq!(u("(()(()))"), u("((())())"));
        assert_eq!(u("((())())").as_str(), "((())())");
        assert_ne!(t("(()(()))"), t("((())())"));
    }

    #[test]
    fn b_plus_b_minus_fixtures() {
        let f: Forest = parse_forest("(()) (()())").unwrap();
        assert_eq!(b_plus(&f), t("((())(()()))"));
        assert_eq!(b_plus(&Forest::empty()), t("()"));
        assert_eq!(b_plus(&parse_forest("()").unwrap()), t("(())"));
        assert_eq!(b_minus_tree(&t("(()()((())))")), parse_forest("() () ((()))").unwrap());
        assert_eq!(b_minus_tree(&t("()")), Forest::empty());
        assert_eq!(b_minus(&parse_forest("(()) (())").unwrap()), parse_forest("() ()").unwrap());
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| OrderedTree::all_of_degree(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
        let counts: Vec<usize> = (1..=5).map(|n| UnorderedTree::all_of_degree(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9]);
    }

    #[test]
    fn parse_errors_report_positions() {
        match "(()".parse::<OrderedTree>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!("()()".parse::<OrderedTree>().is_err());
        assert!("(x)".parse::<OrderedTree>().is_err());
        assert!(")(".parse::<OrderedTree>().is_err());
        assert!(parse_forest::<OrderedTree>("() (").is_err());
    }

    fn arb_tree() -> impl Strategy<Value = OrderedTree> {
        let leaf = Just(OrderedTree::single_node());
        leaf.prop_recursive(4, 24, 4, |inner| {
            prop::collection::vec(inner, 0..4).prop_map(|kids| OrderedTree::from_children(kids.iter()))
        })
    }

    proptest! {
        #[test]
        fn tree_round_trip(tr in arb_tree()) {
            let s = tr.to_string();
            prop_assert_eq!(s.parse::<OrderedTree>().unwrap(), tr);
        }

        #[test]
        fn forest_round_trip(f in prop::collection::vec(arb_tree(), 0..4)) {
            let f = Forest::new(f);
            let parsed: Forest = parse_forest(&f.to_string()).unwrap();
            prop_assert_eq!(parsed, f);
        }

        #[test]
        fn b_minus_inverts_b_plus(f in prop::collection::vec(arb_tree(), 0..4)) {
            let f = Forest::new(f);
            prop_assert_eq!(b_minus_tree(&b_plus(&f)), f);
        }

        #[test]
        fn graft_has_one_term_per_node(a in arb_tree(), b in arb_tree()) {
            let g = graft_left(&a, &b);
            let total: Rational = g.iter().map(|(_, c)| c.clone()).sum();
            prop_assert_eq!(total, int(b.degree() as i64));
            prop_assert!(g.keys().all(|k| k.degree() == a.degree() + b.degree()));
        }
    }

    #[test]
    fn forgetting_planarity_commutes_with_grafting() {
        for total in 2..=6 {
            for da in 1..total {
                for a in OrderedTree::all_of_degree(da) {
                    for b in OrderedTree::all_of_degree(total - da) {
                        let lhs = canonicalize(&graft_left(&a, &b));
                        let rhs = graft_unordered(&UnorderedTree::from_ordered(&a), &UnorderedTree::from_ordered(&b));
                        assert_eq!(lhs, rhs, "{a} onto {b}");
                    }
                }
            }
        }
    }
}
