//! The post-Hopf product on the word Hopf algebra over a magma alphabet,
//! the subadjacent (Grossman-Larson) product and antipode, and the axiom
//! suites.
//!
//! For a magma `(V, ⋆)` the product `▷` on `T(V)` is determined by
//!
//! ```text
//! 1 ▷ a = a,   x ▷ a = x ⋆ a,   x ▷ 1 = 0 (x a letter)
//! (x x₁⋯xₙ) ▷ a = x ⋆ ((x₁⋯xₙ) ▷ a) − Σᵢ (x₁⋯(x ⋆ xᵢ)⋯xₙ) ▷ a
//! X ▷ (a₁⋯aₘ) = (X₁ ▷ a₁)⋯(Xₘ ▷ aₘ)   over Δ^(m−1) X
//! ```

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::{Arc, Mutex};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::coshuffle::{
    antipode, antipode_word, concat, counit, counit_word, deshuffle, deshuffle_word,
    iterated_coproduct_word, unit, words_up_to, Elem, Letter, Word,
};
use crate::error::{Error, Result};
use crate::json::JsonInt;
use crate::kernel::{bilinear, tensor, Graded, LinComb, Rational, Tensor};
use crate::report::{check_all, compare, IdentityResult, Report};
use crate::trees::{OrderedTree, TreeLetter, UnorderedTree};

/// A bilinear product on the letters of an alphabet.
pub trait Magma<L: Letter>: Send + Sync {
    fn star(&self, a: &L, b: &L) -> LinComb<L>;
    fn name(&self) -> String;
    /// Whether the product is tree grafting, so that `X ∗▷ Y = B⁻(X ▷ B⁺(Y))`.
    fn is_grafting(&self) -> bool {
        false
    }
}

/// Grafting: left grafting for planar trees, grafting with
/// multiplicities for non-planar ones.
#[derive(Clone, Copy, Debug, Default)]
pub struct Grafting;

impl<L: TreeLetter> Magma<L> for Grafting {
    fn star(&self, a: &L, b: &L) -> LinComb<L> {
        L::graft(a, b)
    }
    fn name(&self) -> String {
        "grafting".into()
    }
    fn is_grafting(&self) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroMagma;

impl<L: Letter> Magma<L> for ZeroMagma {
    fn star(&self, _: &L, _: &L) -> LinComb<L> {
        LinComb::zero()
    }
    fn name(&self) -> String {
        "zero".into()
    }
}

/// A magma given by an explicit finite table; missing pairs multiply to zero.
#[derive(Clone, Debug)]
pub struct TableMagma<L: Letter> {
    table: HashMap<(L, L), LinComb<L>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableTerm {
    pub tree: String,
    #[serde(rename = "coeff-num")]
    pub coeff_num: JsonInt,
    #[serde(rename = "coeff-den", default = "json_one")]
    pub coeff_den: JsonInt,
}

fn json_one() -> JsonInt {
    JsonInt::Small(1)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<TableTerm>,
}

impl<L: Letter + Graded> TableMagma<L> {
    /// Builds the table, rejecting entries that are not degree-additive.
    pub fn new(entries: impl IntoIterator<Item = ((L, L), LinComb<L>)>) -> Result<Self> {
        let mut table = HashMap::new();
        for ((a, b), v) in entries {
            let d = a.letter_degree() + b.letter_degree();
            if let Some(bad) = v.keys().find(|t| t.letter_degree() != d) {
                return Err(Error::invalid(format!(
                    "magma entry {a} ⋆ {b} contains {bad} of degree {}, expected {d}",
                    bad.letter_degree()
                )));
            }
            if !v.is_zero() {
                table.insert((a, b), v);
            }
        }
        Ok(TableMagma { table })
    }

    pub fn from_entries(entries: &[TableEntry]) -> Result<Self>
    where
        L: std::str::FromStr<Err = Error>,
    {
        let mut parsed = Vec::new();
        for e in entries {
            let mut v = LinComb::zero();
            for t in &e.result {
                let c = crate::json::make_rational(&t.coeff_num, &t.coeff_den)?;
                v.add_term(t.tree.parse()?, c);
            }
            parsed.push(((e.left.parse()?, e.right.parse()?), v));
        }
        Self::new(parsed)
    }

    pub fn from_json(text: &str) -> Result<Self>
    where
        L: std::str::FromStr<Err = Error>,
    {
        let entries: Vec<TableEntry> = serde_json::from_str(text)?;
        Self::from_entries(&entries)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self>
    where
        L: std::str::FromStr<Err = Error>,
    {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_entries(&self) -> Vec<TableEntry> {
        let mut keys: Vec<&(L, L)> = self.table.keys().collect();
        keys.sort();
        keys.into_iter()
            .map(|k| TableEntry {
                left: k.0.to_string(),
                right: k.1.to_string(),
                result: self.table[k]
                    .iter()
                    .map(|(t, c)| TableTerm {
                        tree: t.to_string(),
                        coeff_num: c.numer().into(),
                        coeff_den: c.denom().into(),
                    })
                    .collect(),
            })
            .collect()
    }

    /// Tabulates another magma on all letter pairs of total degree `≤ max_degree`.
    pub fn tabulate(magma: &dyn Magma<L>, max_degree: usize) -> Self
    where
        L: TreeLetter,
    {
        let letters: Vec<L> = (1..max_degree).flat_map(L::all_of_degree).collect();
        let mut entries = Vec::new();
        for a in &letters {
            for b in &letters {
                if a.letter_degree() + b.letter_degree() <= max_degree {
                    entries.push(((a.clone(), b.clone()), magma.star(a, b)));
                }
            }
        }
        Self::new(entries).expect("tabulated magma is degree-additive")
    }

    pub fn entry(&self, a: &L, b: &L) -> LinComb<L> {
        self.table.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, a: L, b: L, v: LinComb<L>) {
        self.table.insert((a, b), v);
    }
}

impl<L: Letter> Magma<L> for TableMagma<L> {
    fn star(&self, a: &L, b: &L) -> LinComb<L> {
        self.table.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }
    fn name(&self) -> String {
        format!("table ({} entries)", self.table.len())
    }
}

/// Deliberate corruptions, used to show the suites detect errors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mutation {
    #[default]
    None,
    /// Flips the sign of the correction sum in the single-letter recursion.
    RecursionSign,
    /// Replaces `S▷` by the concatenation antipode `S`.
    SubadjacentAntipode,
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mutation::None => "none",
            Mutation::RecursionSign => "recursion-sign",
            Mutation::SubadjacentAntipode => "subadjacent-antipode",
        })
    }
}

impl std::str::FromStr for Mutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Mutation::None),
            "recursion-sign" => Ok(Mutation::RecursionSign),
            "subadjacent-antipode" => Ok(Mutation::SubadjacentAntipode),
            _ => Err(Error::parse(s, 0, "expected none, recursion-sign or subadjacent-antipode")),
        }
    }
}

type Pair<L> = LinComb<Tensor<Word<L>, Word<L>>>;

/// The word Hopf algebra over a magma alphabet with its post-Hopf product,
/// truncated at a total degree.
pub struct PostHopfTrunc<L: Letter> {
    magma: Arc<dyn Magma<L>>,
    cutoff: usize,
    mutation: Mutation,
    letter_memo: Mutex<HashMap<(Word<L>, L), LinComb<L>>>,
    word_memo: Mutex<HashMap<(Word<L>, Word<L>), Elem<L>>>,
    antipode_memo: Mutex<HashMap<Word<L>, Elem<L>>>,
}

pub type OrderedPostHopf = PostHopfTrunc<OrderedTree>;
pub type UnorderedPostHopf = PostHopfTrunc<UnorderedTree>;

impl<L: TreeLetter> PostHopfTrunc<L> {
    /// The grafting instance on a tree alphabet.
    pub fn grafting(cutoff: usize) -> Self {
        Self::new(Arc::new(Grafting), cutoff)
    }
}

impl<L: Letter> PostHopfTrunc<L> {
    pub fn new(magma: Arc<dyn Magma<L>>, cutoff: usize) -> Self {
        PostHopfTrunc {
            magma,
            cutoff,
            mutation: Mutation::None,
            letter_memo: Mutex::default(),
            word_memo: Mutex::default(),
            antipode_memo: Mutex::default(),
        }
    }

    pub fn with_mutation(mut self, mutation: Mutation) -> Self {
        self.mutation = mutation;
        self
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    pub fn magma_name(&self) -> String {
        self.magma.name()
    }

    pub fn star(&self, a: &L, b: &L) -> LinComb<L> {
        self.magma.star(a, b)
    }

    fn guard(&self, degree: usize) -> Result<()> {
        if degree > self.cutoff {
            Err(Error::CutoffExceeded {
                degree,
                cutoff: self.cutoff,
            })
        } else {
            Ok(())
        }
    }

    /// `X ▷ Y`, rejecting inputs whose total degree exceeds the cutoff.
    pub fn triangle(&self, x: &Elem<L>, y: &Elem<L>) -> Result<Elem<L>> {
        self.guard(deg(x) + deg(y))?;
        Ok(self.tri(x, y))
    }

    /// `X ∗▷ Y = X₁ · (X₂ ▷ Y)`.
    pub fn gl_product(&self, x: &Elem<L>, y: &Elem<L>) -> Result<Elem<L>> {
        self.guard(deg(x) + deg(y))?;
        Ok(self.gl(x, y))
    }

    /// `S▷`, the antipode of the subadjacent Hopf algebra.
    pub fn subadjacent_antipode(&self, x: &Elem<L>) -> Result<Elem<L>> {
        self.guard(deg(x))?;
        Ok(self.sub_antipode(x))
    }

    /// Word ▷ letter, a combination of letters.
    pub fn tri_letter(&self, w: &Word<L>, a: &L) -> LinComb<L> {
        if w.is_empty() {
            return LinComb::basis(a.clone());
        }
        let key = (w.clone(), a.clone());
        if let Some(v) = self.letter_memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let ls = w.letters();
        let x = &ls[0];
        let rest = &ls[1..];
        let inner = self.tri_letter(&Word::new(rest.to_vec()), a);
        let mut out = inner.extend_linear(|b| self.magma.star(x, b));
        let sign = match self.mutation {
            Mutation::RecursionSign => Rational::one(),
            _ => -Rational::one(),
        };
        for i in 0..rest.len() {
            for (t, c) in self.magma.star(x, &rest[i]).iter() {
                let mut v = rest.to_vec();
                v[i] = t.clone();
                let r = self.tri_letter(&Word::new(v), a);
                out.add_scaled(&r, &(c * &sign));
            }
        }
        self.letter_memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Word ▷ word.
    pub fn tri_word(&self, x: &Word<L>, y: &Word<L>) -> Elem<L> {
        if y.is_empty() {
            return unit::<L>().scale(&counit_word(x));
        }
        if x.is_empty() {
            return LinComb::basis(y.clone());
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.word_memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let targets = y.letters();
        let mut out = LinComb::zero();
        let mut add_legs = |legs: &[Word<L>], c: &Rational| {
            let mut acc = unit::<L>();
            for (leg, a) in legs.iter().zip(targets) {
                let v = self.tri_letter(leg, a);
                if v.is_zero() {
                    return;
                }
                acc = concat(&acc, &v.map_keys(|l| Word::single(l.clone())));
            }
            out.add_scaled(&acc, c);
        };
        if targets.len() == 1 {
            add_legs(std::slice::from_ref(x), &Rational::one());
        } else {
            for (legs, c) in iterated_coproduct_word(x, targets.len() - 1).iter() {
                add_legs(&legs.0, c);
            }
        }
        self.word_memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Unchecked bilinear `▷`.
    pub fn tri(&self, x: &Elem<L>, y: &Elem<L>) -> Elem<L> {
        bilinear(x, y, |a, b| self.tri_word(a, b))
    }

    pub fn gl_word(&self, x: &Word<L>, y: &Word<L>) -> Elem<L> {
        let mut out = LinComb::zero();
        for (Tensor(x1, x2), c) in deshuffle_word(x).iter() {
            let r = self.tri_word(x2, y);
            out.add_scaled(&r.map_keys(|w| x1.concat(w)), c);
        }
        out
    }

    /// Unchecked bilinear `∗▷`.
    pub fn gl(&self, x: &Elem<L>, y: &Elem<L>) -> Elem<L> {
        bilinear(x, y, |a, b| self.gl_word(a, b))
    }

    /// `S▷(X) = S(X) + Σ S▷(X₁) ▷ S(X₂)` over coproduct terms with both legs nonempty.
    pub fn sub_antipode_word(&self, x: &Word<L>) -> Elem<L> {
        if x.is_empty() {
            return unit();
        }
        if let Some(v) = self.antipode_memo.lock().unwrap().get(x) {
            return v.clone();
        }
        let mut out = antipode_word(x);
        if self.mutation != Mutation::SubadjacentAntipode {
            for (Tensor(x1, x2), c) in deshuffle_word(x).iter() {
                if x1.is_empty() || x2.is_empty() {
                    continue;
                }
                let r = self.tri(&self.sub_antipode_word(x1), &antipode_word(x2));
                out.add_scaled(&r, c);
            }
        }
        self.antipode_memo.lock().unwrap().insert(x.clone(), out.clone());
        out
    }

    pub fn sub_antipode(&self, x: &Elem<L>) -> Elem<L> {
        x.extend_linear(|w| self.sub_antipode_word(w))
    }

    /// `(x₁ ▷ y₁) ⊗ (x₂ ▷ y₂)` summed over both coproducts.
    fn tri_on_coproducts(&self, x: &Elem<L>, y: &Elem<L>) -> Pair<L> {
        let dx = deshuffle(x);
        let dy = deshuffle(y);
        bilinear(&dx, &dy, |a, b| tensor(&self.tri_word(&a.0, &b.0), &self.tri_word(&a.1, &b.1)))
    }

    /// `(∗▷ ⊗ ∗▷)` on `H⊗H × H⊗H`.
    pub fn gl2(&self, u: &Pair<L>, v: &Pair<L>) -> Pair<L> {
        bilinear(u, v, |a, b| tensor(&self.gl_word(&a.0, &b.0), &self.gl_word(&a.1, &b.1)))
    }

    /// `x ∘ y` built from `(·, ▷)` as `x₁ · (x₂ ▷ y)`; the Hopf brace product.
    pub fn brace(&self, x: &Elem<L>, y: &Elem<L>) -> Elem<L> {
        self.gl(x, y)
    }

    /// `▷` recovered from `(·, ∘)` by `x ▷ y = S(x₁) · (x₂ ∘ y)`.
    pub fn triangle_from_brace(&self, x: &Elem<L>, y: &Elem<L>) -> Elem<L> {
        let mut out = LinComb::zero();
        for (Tensor(x1, x2), c) in deshuffle(x).iter() {
            let r = concat(&antipode_word(x1), &self.gl(&LinComb::basis(x2.clone()), y));
            out.add_scaled(&r, c);
        }
        out
    }
}

impl<L: TreeLetter> PostHopfTrunc<L> {
    /// `B⁻(X ▷ B⁺(Y))`, the tree form of the subadjacent product.
    pub fn gl_product_bpm(&self, x: &Elem<L>, y: &Elem<L>) -> Result<Elem<L>> {
        self.guard(deg(x) + deg(y) + 1)?;
        Ok(self.gl_bpm(x, y))
    }

    pub fn gl_bpm(&self, x: &Elem<L>, y: &Elem<L>) -> Elem<L> {
        let grafted = y.extend_linear(|w| {
            let top = Word::single(L::b_plus(w));
            x.extend_linear(|xw| self.tri_word(xw, &top))
        });
        b_minus_elem(&grafted)
    }

    /// All basis words of degree `≤ d`.
    pub fn basis(&self, d: usize) -> Vec<Word<L>> {
        words_up_to(d, &L::all_of_degree)
    }
}

/// `B⁻` extended multiplicatively to words and linearly to elements.
pub fn b_minus_elem<L: TreeLetter>(x: &Elem<L>) -> Elem<L> {
    x.map_keys(|w| {
        let mut out = Word::empty();
        for t in w.letters() {
            out = out.concat(&t.b_minus());
        }
        out
    })
}

/// `B⁺` applied to each word, as single-letter words.
pub fn b_plus_elem<L: TreeLetter>(x: &Elem<L>) -> Elem<L> {
    x.map_keys(|w| Word::single(L::b_plus(w)))
}

fn deg<B: Ord + Clone + Graded>(x: &LinComb<B>) -> usize {
    x.max_degree().unwrap_or(0)
}

fn basis<L: Letter>(w: &Word<L>) -> Elem<L> {
    LinComb::basis(w.clone())
}

/// All tuples of basis words with total degree `≤ d`.
pub fn pairs_up_to<L: Letter>(words: &[Word<L>], d: usize) -> Vec<(Word<L>, Word<L>)> {
    let mut out = Vec::new();
    for x in words {
        for y in words {
            if x.degree() + y.degree() <= d {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

pub fn triples_up_to<L: Letter>(words: &[Word<L>], d: usize) -> Vec<(Word<L>, Word<L>, Word<L>)> {
    let mut out = Vec::new();
    for (x, y) in pairs_up_to(words, d) {
        for z in words {
            if x.degree() + y.degree() + z.degree() <= d {
                out.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    out
}

fn range(d: usize) -> String {
    format!("total degree <= {d}")
}

fn check_degree<L: Letter>(ph: &PostHopfTrunc<L>, d: usize) -> Result<()> {
    ph.guard(d)
}

/// The defining and derived post-Hopf identities on all basis tuples of
/// total degree `≤ d`.
pub fn verify_post_hopf<L: TreeLetter>(ph: &PostHopfTrunc<L>, d: usize) -> Result<Report> {
    check_degree(ph, d)?;
    let words = ph.basis(d);
    let pairs = pairs_up_to(&words, d);
    let triples = triples_up_to(&words, d);
    let mut report = Report::new(format!("post-Hopf axioms ({}, {})", ph.magma_name(), ph.mutation()));

    report.push(check_all("Post-2: x▷(yz) = (x1▷y)(x2▷z)", range(d), &triples, |(x, y, z)| {
        let lhs = ph.tri_word(x, &y.concat(z));
        let mut rhs = LinComb::zero();
        for (Tensor(x1, x2), c) in deshuffle_word(x).iter() {
            rhs.add_scaled(&concat(&ph.tri_word(x1, y), &ph.tri_word(x2, z)), c);
        }
        compare(|| format!("x = {x}, y = {y}, z = {z}"), &lhs, &rhs)
    }));

    report.push(check_all("Post-4: x▷(y▷z) = (x1(x2▷y))▷z", range(d), &triples, |(x, y, z)| {
        let lhs = ph.tri(&basis(x), &ph.tri_word(y, z));
        let rhs = ph.tri(&ph.gl_word(x, y), &basis(z));
        compare(|| format!("x = {x}, y = {y}, z = {z}"), &lhs, &rhs)
    }));

    report.push(check_all("coalgebra map: Δ(x▷y) = (x1▷y1)⊗(x2▷y2)", range(d), &pairs, |(x, y)| {
        let lhs = deshuffle(&ph.tri_word(x, y));
        let rhs = ph.tri_on_coproducts(&basis(x), &basis(y));
        compare(|| format!("x = {x}, y = {y}"), &lhs, &rhs)
    }));

    report.push(check_all("coalgebra map: ε(x▷y) = ε(x)ε(y)", range(d), &pairs, |(x, y)| {
        let lhs = counit(&ph.tri_word(x, y));
        let rhs = counit_word(x) * counit_word(y);
        compare(|| format!("x = {x}, y = {y}"), &lhs, &rhs)
    }));

    report.push(check_all(
        "Post-con: α(x1)β(x2) = β(x1)α(x2) = ε(x)id, β(x) = α(S▷(x))",
        range(d),
        &pairs,
        |(x, y)| {
            let yv = basis(y);
            let expected = yv.scale(&counit_word(x));
            let mut ab = LinComb::zero();
            let mut ba = LinComb::zero();
            for (Tensor(x1, x2), c) in deshuffle_word(x).iter() {
                let inner = ph.tri(&ph.sub_antipode_word(x2), &yv);
                ab.add_scaled(&ph.tri(&basis(x1), &inner), c);
                let inner = ph.tri_word(x2, y);
                ba.add_scaled(&ph.tri(&ph.sub_antipode_word(x1), &inner), c);
            }
            compare(|| format!("α(x1)β(x2), x = {x}, y = {y}"), &ab, &expected)
                .or_else(|| compare(|| format!("β(x1)α(x2), x = {x}, y = {y}"), &ba, &expected))
        },
    ));

    report.push(check_all("Post-1: x▷1 = ε(x)1", range(d), &words, |x| {
        let lhs = ph.tri_word(x, &Word::empty());
        let rhs = unit::<L>().scale(&counit_word(x));
        compare(|| format!("x = {x}"), &lhs, &rhs)
    }));

    report.push(check_all("Post-3: 1▷x = x", range(d), &words, |x| {
        let lhs = ph.tri_word(&Word::empty(), x);
        compare(|| format!("x = {x}"), &lhs, &basis(x))
    }));

    report.push(check_all("Post-5: S(x▷y) = x▷S(y)", range(d), &pairs, |(x, y)| {
        let lhs = antipode(&ph.tri_word(x, y));
        let rhs = ph.tri(&basis(x), &antipode_word(y));
        compare(|| format!("x = {x}, y = {y}"), &lhs, &rhs)
    }));

    Ok(report)
}

/// The subadjacent Hopf algebra `(T(V), ∗▷, Δ, S▷)`.
pub fn verify_subadjacent<L: TreeLetter>(ph: &PostHopfTrunc<L>, d: usize) -> Result<Report> {
    check_degree(ph, d)?;
    let words = ph.basis(d);
    let pairs = pairs_up_to(&words, d);
    let triples = triples_up_to(&words, d);
    let mut report = Report::new(format!("subadjacent Hopf algebra ({}, {})", ph.magma_name(), ph.mutation()));

    report.push(check_all("associativity of ∗▷", range(d), &triples, |(x, y, z)| {
        let lhs = ph.gl(&ph.gl_word(x, y), &basis(z));
        let rhs = ph.gl(&basis(x), &ph.gl_word(y, z));
        compare(|| format!("x = {x}, y = {y}, z = {z}"), &lhs, &rhs)
    }));

    report.push(check_all("unit: 1∗▷x = x = x∗▷1", range(d), &words, |x| {
        let e = Word::empty();
        compare(|| format!("1∗▷x, x = {x}"), &ph.gl_word(&e, x), &basis(x))
            .or_else(|| compare(|| format!("x∗▷1, x = {x}"), &ph.gl_word(x, &e), &basis(x)))
    }));

    report.push(check_all("Δ(x∗▷y) = Δ(x)∗▷Δ(y)", range(d), &pairs, |(x, y)| {
        let lhs = deshuffle(&ph.gl_word(x, y));
        let rhs = ph.gl2(&deshuffle_word(x), &deshuffle_word(y));
        compare(|| format!("x = {x}, y = {y}"), &lhs, &rhs)
    }));

    report.push(check_all("antipode: S▷(x1)∗▷x2 = ε(x)1 = x1∗▷S▷(x2)", range(d), &words, |x| {
        let expected = unit::<L>().scale(&counit_word(x));
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (Tensor(x1, x2), c) in deshuffle_word(x).iter() {
            left.add_scaled(&ph.gl(&ph.sub_antipode_word(x1), &basis(x2)), c);
            right.add_scaled(&ph.gl(&basis(x1), &ph.sub_antipode_word(x2)), c);
        }
        compare(|| format!("S▷(x1)∗▷x2, x = {x}"), &left, &expected)
            .or_else(|| compare(|| format!("x1∗▷S▷(x2), x = {x}"), &right, &expected))
    }));

    if ph.magma.is_grafting() {
        report.push(check_all("x1·(x2▷y) = B⁻(x▷B⁺(y))", range(d), &pairs, |(x, y)| {
            let lhs = ph.gl_word(x, y);
            let rhs = ph.gl_bpm(&basis(x), &basis(y));
            compare(|| format!("x = {x}, y = {y}"), &lhs, &rhs)
        }));
    }

    report.push(check_all("module law: (x∗▷y)▷z = x▷(y▷z)", range(d), &triples, |(x, y, z)| {
        let lhs = ph.tri(&ph.gl_word(x, y), &basis(z));
        let rhs = ph.tri(&basis(x), &ph.tri_word(y, z));
        compare(|| format!("x = {x}, y = {y}, z = {z}"), &lhs, &rhs)
    }));

    Ok(report)
}

/// The Hopf brace identity for `∘ = ∗▷` and the reconstruction of `▷`.
pub fn brace_check<L: TreeLetter>(ph: &PostHopfTrunc<L>, d: usize) -> Result<Report> {
    check_degree(ph, d)?;
    let words = ph.basis(d);
    let pairs = pairs_up_to(&words, d);
    let triples = triples_up_to(&words, d);
    let mut report = Report::new(format!("Hopf brace ({}, {})", ph.magma_name(), ph.mutation()));

    report.push(check_all("a∘(bc) = (a1∘b)S(a2)(a3∘c)", range(d), &triples, |(a, b, c)| {
        let lhs = ph.brace(&basis(a), &basis(&b.concat(c)));
        let mut rhs = LinComb::zero();
        for (legs, k) in iterated_coproduct_word(a, 2).iter() {
            let [a1, a2, a3] = &legs.0[..] else { unreachable!() };
            let t = concat(
                &concat(&ph.brace(&basis(a1), &basis(b)), &antipode_word(a2)),
                &ph.brace(&basis(a3), &basis(c)),
            );
            rhs.add_scaled(&t, k);
        }
        compare(|| format!("a = {a}, b = {b}, c = {c}"), &lhs, &rhs)
    }));

    report.push(check_all("x▷y = S(x1)(x2∘y)", range(d), &pairs, |(x, y)| {
        let lhs = ph.tri_word(x, y);
        let rhs = ph.triangle_from_brace(&basis(x), &basis(y));
        compare(|| format!("x = {x}, y = {y}"), &lhs, &rhs)
    }));

    Ok(report)
}

/// Post-Lie identities on letters (primitive elements), `[u,v] = uv − vu`.
pub fn primitive_post_lie_check<L: TreeLetter>(ph: &PostHopfTrunc<L>, d: usize) -> Result<Report> {
    check_degree(ph, d)?;
    let letters: Vec<Word<L>> = (1..=d).flat_map(L::all_of_degree).map(Word::single).collect();
    let triples = triples_up_to(&letters, d);
    let bracket = |u: &Elem<L>, v: &Elem<L>| &concat(u, v) - &concat(v, u);
    let mut report = Report::new(format!("post-Lie on primitives ({}, {})", ph.magma_name(), ph.mutation()));

    report.push(check_all("Post-L-1: x▷[y,z] = [x▷y,z] + [y,x▷z]", range(d), &triples, |(x, y, z)| {
        let (xv, yv, zv) = (basis(x), basis(y), basis(z));
        let lhs = ph.tri(&xv, &bracket(&yv, &zv));
        let rhs = &bracket(&ph.tri(&xv, &yv), &zv) + &bracket(&yv, &ph.tri(&xv, &zv));
        compare(|| format!("x = {x}, y = {y}, z = {z}"), &lhs, &rhs)
    }));

    report.push(check_all(
        "Post-L-2: ([x,y] + x▷y − y▷x)▷z = x▷(y▷z) − y▷(x▷z)",
        range(d),
        &triples,
        |(x, y, z)| {
            let (xv, yv, zv) = (basis(x), basis(y), basis(z));
            let left = &(&bracket(&xv, &yv) + &ph.tri(&xv, &yv)) - &ph.tri(&yv, &xv);
            let lhs = ph.tri(&left, &zv);
            let rhs = &ph.tri(&xv, &ph.tri(&yv, &zv)) - &ph.tri(&yv, &ph.tri(&xv, &zv));
            compare(|| format!("x = {x}, y = {y}, z = {z}"), &lhs, &rhs)
        },
    ));

    report.push(check_all("letters are primitive: Δx = x⊗1 + 1⊗x", range(d), &letters, |x| {
        let one = Word::empty();
        let expected: Pair<L> = [(Tensor(x.clone(), one.clone()), Rational::one()), (Tensor(one, x.clone()), Rational::one())]
            .into_iter()
            .collect();
        compare(|| format!("x = {x}"), &deshuffle_word(x), &expected)
    }));

    Ok(report)
}

/// Every identity of the post-Hopf, subadjacent, brace and post-Lie suites.
pub fn full_suite<L: TreeLetter>(ph: &PostHopfTrunc<L>, d: usize) -> Result<Report> {
    let mut report = Report::new(format!("post-Hopf trees, degree <= {d}"));
    report.absorb(verify_post_hopf(ph, d)?);
    report.absorb(verify_subadjacent(ph, d)?);
    report.absorb(brace_check(ph, d)?);
    report.absorb(primitive_post_lie_check(ph, d)?);
    Ok(report)
}

/// Convenience: the result of a single identity in a report, by prefix.
pub fn find<'a>(report: &'a Report, prefix: &str) -> Option<&'a IdentityResult> {
    report.identities.iter().find(|r| r.name.starts_with(prefix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;
    use crate::trees::{graft_left, parse_forest};

    fn w(s: &str) -> Elem<OrderedTree> {
        LinComb::basis(parse_forest(s).unwrap())
    }

    fn uw(s: &str) -> Elem<UnorderedTree> {
        LinComb::basis(parse_forest(s).unwrap())
    }

    fn t(s: &str) -> OrderedTree {
        s.parse().unwrap()
    }

    #[test]
    fn unit_and_counit_rules() {
        let ph = OrderedPostHopf::grafting(6);
        let y = w("(()) ()");
        assert_eq!(ph.triangle(&unit(), &y).unwrap(), y);
        assert!(ph.triangle(&w("()"), &unit()).unwrap().is_zero());
        assert_eq!(ph.triangle(&unit(), &unit()).unwrap(), unit());
    }

    #[test]
    fn single_letters_graft() {
        let ph = OrderedPostHopf::grafting(6);
        let got = ph.triangle(&w("()"), &w("(())")).unwrap();
        assert_eq!(got, w("(()())") + w("((()))"));
        // oracle: direct grafting
        let oracle = graft_left(&t("()"), &t("(())")).map_keys(|l| Word::single(l.clone()));
        assert_eq!(got, oracle);
    }

    #[test]
    fn two_letter_left_argument_unfolds_once() {
        // (x y) ▷ a = x ⋆ (y ⋆ a) − (x ⋆ y) ⋆ a, evaluated independently
        let ph = OrderedPostHopf::grafting(6);
        let (x, y, a) = (t("()"), t("(())"), t("()"));
        let mut oracle = LinComb::zero();
        for (b, c) in graft_left(&y, &a).iter() {
            oracle.add_scaled(&graft_left(&x, b), c);
        }
        for (b, c) in graft_left(&x, &y).iter() {
            oracle.add_scaled(&graft_left(b, &a), &-c);
        }
        let got = ph.tri_letter(&Word::new(vec![x, y]), &a);
        assert_eq!(got, oracle);
    }

    #[test]
    fn gl_product_of_two_nodes() {
        let ph = OrderedPostHopf::grafting(6);
        let expected = w("() ()") + w("(())");
        assert_eq!(ph.gl_product(&w("()"), &w("()")).unwrap(), expected);
        assert_eq!(ph.gl_product_bpm(&w("()"), &w("()")).unwrap(), expected);
        assert_eq!(
            ph.gl_product(&w("()"), &w("(())")).unwrap(),
            ph.gl_product_bpm(&w("()"), &w("(())")).unwrap()
        );
        let y = w("(()) ()");
        assert_eq!(ph.gl_product(&unit(), &y).unwrap(), y);
        assert_eq!(ph.gl_product(&y, &unit()).unwrap(), y);
    }

    #[test]
    fn subadjacent_antipode_small_cases() {
        let ph = OrderedPostHopf::grafting(6);
        assert_eq!(ph.subadjacent_antipode(&unit()).unwrap(), unit());
        assert_eq!(ph.subadjacent_antipode(&w("()")).unwrap(), -w("()"));
        assert_eq!(ph.subadjacent_antipode(&w("(())")).unwrap(), -w("(())"));
        // S▷(••) = •• + 2 •▷•
        let expected = w("() ()") + w("(())").scale(&int(2));
        assert_eq!(ph.subadjacent_antipode(&w("() ()")).unwrap(), expected);
    }

    #[test]
    fn cutoff_is_enforced() {
        let ph = OrderedPostHopf::grafting(3);
        let err = ph.triangle(&w("(())"), &w("(())")).unwrap_err();
        assert!(matches!(err, Error::CutoffExceeded { degree: 4, cutoff: 3 }));
        assert!(ph.gl_product_bpm(&w("()"), &w("(())")).is_err());
        assert!(verify_post_hopf(&ph, 4).is_err());
    }

    #[test]
    fn unordered_alphabet_collects_multiplicities() {
        let ph = UnorderedPostHopf::grafting(6);
        let got = ph.triangle(&uw("()"), &uw("(()())")).unwrap();
        assert_eq!(got, uw("(()()())") + uw("((())())").scale(&int(2)));
        // the symmetric algebra: •• ▷ • is symmetric in the two left letters
        let lhs = ph.triangle(&uw("() (())"), &uw("()")).unwrap();
        let rhs = ph.triangle(&uw("(()) ()"), &uw("()")).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ordered_suites_pass_to_degree_three() {
        let ph = OrderedPostHopf::grafting(4);
        for report in [
            verify_post_hopf(&ph, 3).unwrap(),
            verify_subadjacent(&ph, 3).unwrap(),
            brace_check(&ph, 3).unwrap(),
            primitive_post_lie_check(&ph, 4).unwrap(),
        ] {
            assert!(report.pass, "{report}");
        }
    }

    #[test]
    fn unordered_suites_pass_to_degree_three() {
        let ph = UnorderedPostHopf::grafting(4);
        let report = full_suite(&ph, 3).unwrap();
        assert!(report.pass, "{report}");
    }

    #[test]
    fn zero_magma_is_trivial() {
        let ph: OrderedPostHopf = PostHopfTrunc::new(Arc::new(ZeroMagma), 3);
        let report = full_suite(&ph, 3).unwrap();
        assert!(report.pass, "{report}");
        // x ▷ y = ε(x) y
        assert!(ph.tri(&w("()"), &w("(())")).is_zero());
        assert!(ph.tri(&w("() ()"), &w("() ()")).is_zero());
    }

    #[test]
    fn recursion_sign_mutation_breaks_post_four_in_degree_three() {
        let ph = OrderedPostHopf::grafting(3).with_mutation(Mutation::RecursionSign);
        let report = verify_post_hopf(&ph, 3).unwrap();
        let post4 = find(&report, "Post-4").unwrap();
        assert!(!post4.pass);
        assert!(post4.witness.as_ref().unwrap().contains("lhs ="));
    }

    #[test]
    fn corrupted_antipode_breaks_post_con() {
        let ph = OrderedPostHopf::grafting(3).with_mutation(Mutation::SubadjacentAntipode);
        let report = verify_post_hopf(&ph, 3).unwrap();
        assert!(!find(&report, "Post-con").unwrap().pass);
        assert!(find(&report, "Post-2").unwrap().pass);
    }

    #[test]
    fn tabulated_grafting_matches_grafting() {
        let table = TableMagma::<OrderedTree>::tabulate(&Grafting, 4);
        let json = serde_json::to_string(&table.to_entries()).unwrap();
        let back = TableMagma::<OrderedTree>::from_json(&json).unwrap();
        let a = OrderedPostHopf::grafting(4);
        let b: OrderedPostHopf = PostHopfTrunc::new(Arc::new(back), 4);
        for (x, y) in pairs_up_to(&a.basis(4), 4) {
            assert_eq!(a.tri_word(&x, &y), b.tri_word(&x, &y), "{x} ▷ {y}");
        }
    }

    #[test]
    fn table_rejects_non_additive_entries() {
        let bad = r#"[{"left": "()", "right": "()", "result": [{"tree": "()", "coeff-num": 1}]}]"#;
        assert!(TableMagma::<OrderedTree>::from_json(bad).is_err());
    }
}
