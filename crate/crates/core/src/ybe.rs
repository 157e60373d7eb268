//! The right action `◁` and the Yang-Baxter operator
//! `R(x⊗y) = (x₁ ▷ y₁) ⊗ (x₂ ◁ y₂)` on a truncated post-Hopf algebra.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::coshuffle::{counit_word, deshuffle_word, iterated_coproduct_word, unit, Elem, Word};
use crate::error::{Error, Result};
use crate::kernel::{tensor, Graded, LinComb, Rational, Tensor, Tensor3};
use crate::linalg;
use crate::posthopf::{b_minus_elem, pairs_up_to, triples_up_to, PostHopfTrunc};
use crate::report::{check_all, compare, single, Report};
use crate::trees::TreeLetter;

pub type Pair<L> = LinComb<Tensor<Word<L>, Word<L>>>;
pub type Triple<L> = LinComb<Tensor3<Word<L>, Word<L>, Word<L>>>;

/// `R` and `◁` over a post-Hopf algebra, with a memo for `R` on basis pairs.
pub struct YbeOperator<'a, L: TreeLetter> {
    ph: &'a PostHopfTrunc<L>,
    memo: Mutex<HashMap<(Word<L>, Word<L>), Pair<L>>>,
}

impl<'a, L: TreeLetter> YbeOperator<'a, L> {
    pub fn new(ph: &'a PostHopfTrunc<L>) -> Self {
        YbeOperator {
            ph,
            memo: Mutex::default(),
        }
    }

    pub fn post_hopf(&self) -> &PostHopfTrunc<L> {
        self.ph
    }

    fn guard(&self, degree: usize) -> Result<()> {
        if degree > self.ph.cutoff() {
            Err(Error::CutoffExceeded {
                degree,
                cutoff: self.ph.cutoff(),
            })
        } else {
            Ok(())
        }
    }

    /// `a ◁ b = S▷(a₁ ▷ b₁) ∗▷ a₂ ∗▷ b₂` on basis words.
    pub fn right_action_word(&self, a: &Word<L>, b: &Word<L>) -> Elem<L> {
        let ph = self.ph;
        let mut out = LinComb::zero();
        for (Tensor(a1, a2), c) in deshuffle_word(a).iter() {
            for (Tensor(b1, b2), d) in deshuffle_word(b).iter() {
                let s = ph.sub_antipode(&ph.tri_word(a1, b1));
                if s.is_zero() {
                    continue;
                }
                let t = ph.gl(&ph.gl(&s, &LinComb::basis(a2.clone())), &LinComb::basis(b2.clone()));
                out.add_scaled(&t, &(c * d));
            }
        }
        out
    }

    pub fn right_action(&self, a: &Elem<L>, b: &Elem<L>) -> Result<Elem<L>> {
        self.guard(deg(a) + deg(b))?;
        Ok(crate::kernel::bilinear(a, b, |x, y| self.right_action_word(x, y)))
    }

    /// `R(x ⊗ y)` on basis words, by the general formula.
    pub fn r_word(&self, x: &Word<L>, y: &Word<L>) -> Pair<L> {
        let key = (x.clone(), y.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let mut out = LinComb::zero();
        for (Tensor(x1, x2), c) in deshuffle_word(x).iter() {
            for (Tensor(y1, y2), d) in deshuffle_word(y).iter() {
                let left = self.ph.tri_word(x1, y1);
                if left.is_zero() {
                    continue;
                }
                let right = self.right_action_word(x2, y2);
                out.add_scaled(&tensor(&left, &right), &(c * d));
            }
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn r(&self, u: &Pair<L>) -> Result<Pair<L>> {
        self.guard(deg(u))?;
        Ok(self.apply(u))
    }

    /// Unchecked linear extension of `R`.
    pub fn apply(&self, u: &Pair<L>) -> Pair<L> {
        u.extend_linear(|Tensor(x, y)| self.r_word(x, y))
    }

    /// `R(X ⊗ Y) = (X₁ ▷ Y₁) ⊗ B⁻(S▷(X₂ ▷ Y₂) ▷ (X₃ ▷ B⁺(Y₃)))`.
    pub fn r_trees_explicit_word(&self, x: &Word<L>, y: &Word<L>) -> Pair<L> {
        let ph = self.ph;
        let dx = iterated_coproduct_word(x, 2);
        let dy = iterated_coproduct_word(y, 2);
        let mut out = LinComb::zero();
        for (xs, c) in dx.iter() {
            for (ys, d) in dy.iter() {
                let left = ph.tri_word(&xs.0[0], &ys.0[0]);
                if left.is_zero() {
                    continue;
                }
                let s = ph.sub_antipode(&ph.tri_word(&xs.0[1], &ys.0[1]));
                let top = Word::single(L::b_plus(&ys.0[2]));
                let grafted = ph.tri_word(&xs.0[2], &top);
                let right = b_minus_elem(&ph.tri(&s, &grafted));
                out.add_scaled(&tensor(&left, &right), &(c * d));
            }
        }
        out
    }

    pub fn r_trees_explicit(&self, u: &Pair<L>) -> Result<Pair<L>> {
        self.guard(deg(u) + 1)?;
        Ok(u.extend_linear(|Tensor(x, y)| self.r_trees_explicit_word(x, y)))
    }

    /// `R ⊗ id` on a triple tensor.
    pub fn r12(&self, u: &Triple<L>) -> Triple<L> {
        u.extend_linear(|Tensor3(x, y, z)| {
            self.r_word(x, y)
                .map_keys(|Tensor(a, b)| Tensor3(a.clone(), b.clone(), z.clone()))
        })
    }

    /// `id ⊗ R` on a triple tensor.
    pub fn r23(&self, u: &Triple<L>) -> Triple<L> {
        u.extend_linear(|Tensor3(x, y, z)| {
            self.r_word(y, z)
                .map_keys(|Tensor(a, b)| Tensor3(x.clone(), a.clone(), b.clone()))
        })
    }
}

fn deg<B: Ord + Clone + Graded>(x: &LinComb<B>) -> usize {
    x.max_degree().unwrap_or(0)
}

fn range(d: usize) -> String {
    format!("total degree <= {d}")
}

fn pair<L: TreeLetter>(x: &Word<L>, y: &Word<L>) -> Pair<L> {
    LinComb::basis(Tensor(x.clone(), y.clone()))
}

/// The braid relation `R₁₂R₂₃R₁₂ = R₂₃R₁₂R₂₃` on all basis triples.
pub fn verify_braid<L: TreeLetter>(ybe: &YbeOperator<'_, L>, d: usize) -> Result<Report> {
    ybe.guard(d)?;
    let ph = ybe.post_hopf();
    let words = ph.basis(d);
    let triples = triples_up_to(&words, d);
    let mut report = Report::new(format!("Yang-Baxter braid relation ({}, {})", ph.magma_name(), ph.mutation()));
    report.push(check_all("(R⊗id)(id⊗R)(R⊗id) = (id⊗R)(R⊗id)(id⊗R)", range(d), &triples, |(x, y, z)| {
        let t: Triple<L> = LinComb::basis(Tensor3(x.clone(), y.clone(), z.clone()));
        let lhs = ybe.r12(&ybe.r23(&ybe.r12(&t)));
        let rhs = ybe.r23(&ybe.r12(&ybe.r23(&t)));
        compare(|| format!("x = {x}, y = {y}, z = {z}"), &lhs, &rhs)
    }));
    Ok(report)
}

/// Compatibility of `R` with `∗▷`, its unit rules, its coalgebra-map
/// property, agreement of the two formulas, degree preservation and
/// invertibility on graded pieces.
pub fn verify_compatibility<L: TreeLetter>(ybe: &YbeOperator<'_, L>, d: usize) -> Result<Report> {
    ybe.guard(d)?;
    let ph = ybe.post_hopf();
    let words = ph.basis(d);
    let pairs = pairs_up_to(&words, d);
    let e = Word::<L>::empty();
    let mut report = Report::new(format!("Yang-Baxter compatibility ({}, {})", ph.magma_name(), ph.mutation()));

    report.push(check_all("a∗▷b = (a1▷b1)∗▷(a2◁b2)", range(d), &pairs, |(a, b)| {
        let lhs = ph.gl_word(a, b);
        let rhs = ybe.r_word(a, b).extend_linear(|Tensor(u, v)| ph.gl_word(u, v));
        compare(|| format!("a = {a}, b = {b}"), &lhs, &rhs)
    }));

    report.push(check_all("unit rules: R(x⊗1) = 1⊗x, R(1⊗x) = x⊗1", range(d), &words, |x| {
        compare(|| format!("R(x⊗1), x = {x}"), &ybe.r_word(x, &e), &pair(&e, x))
            .or_else(|| compare(|| format!("R(1⊗x), x = {x}"), &ybe.r_word(&e, x), &pair(x, &e)))
    }));

    report.push(check_all("right action units: x◁1 = x, 1◁x = ε(x)1", range(d), &words, |x| {
        let one: Elem<L> = unit();
        compare(|| format!("x◁1, x = {x}"), &ybe.right_action_word(x, &e), &LinComb::basis(x.clone())).or_else(|| {
            compare(|| format!("1◁x, x = {x}"), &ybe.right_action_word(&e, x), &one.scale(&counit_word(x)))
        })
    }));

    report.push(check_all("R is a coalgebra map: Δ(R(x⊗y)) = (R⊗R)Δ(x⊗y)", range(d), &pairs, |(x, y)| {
        let lhs = coproduct2(&ybe.r_word(x, y));
        let rhs = coproduct2(&pair(x, y)).extend_linear(|Tensor(u, v)| tensor(&ybe.apply(&LinComb::basis(u.clone())), &ybe.apply(&LinComb::basis(v.clone()))));
        compare(|| format!("x = {x}, y = {y}"), &lhs, &rhs).or_else(|| {
            let eps = counit2(&ybe.r_word(x, y));
            let expected = counit_word(x) * counit_word(y);
            compare(|| format!("ε(R(x⊗y)), x = {x}, y = {y}"), &eps, &expected)
        })
    }));

    report.push(check_all("general R = explicit B± form", range(d), &pairs, |(x, y)| {
        compare(|| format!("x = {x}, y = {y}"), &ybe.r_word(x, y), &ybe.r_trees_explicit_word(x, y))
    }));

    report.push(check_all("R preserves total degree", range(d), &pairs, |(x, y)| {
        let n = x.degree() + y.degree();
        ybe.r_word(x, y)
            .keys()
            .find(|k| k.degree() != n)
            .map(|k| format!("R({x} ⊗ {y}) contains {k}"))
    }));

    let degrees: Vec<usize> = (0..=d).collect();
    report.push(check_all("R invertible on each graded piece", range(d), &degrees, |&n| {
        let piece: Vec<_> = pairs.iter().filter(|(x, y)| x.degree() + y.degree() == n).collect();
        let columns: Vec<Pair<L>> = piece.iter().map(|(x, y)| ybe.r_word(x, y)).collect();
        let rank = linalg::rank(&columns);
        (rank != piece.len()).then(|| format!("degree {n}: rank {rank} of {}", piece.len()))
    }));

    Ok(report)
}

/// `Δ_{H⊗H}(x ⊗ y) = (x₁ ⊗ y₁) ⊗ (x₂ ⊗ y₂)`.
pub fn coproduct2<L: TreeLetter>(u: &Pair<L>) -> LinComb<Tensor<Tensor<Word<L>, Word<L>>, Tensor<Word<L>, Word<L>>>> {
    u.extend_linear(|Tensor(x, y)| {
        let mut out = LinComb::zero();
        for (Tensor(x1, x2), c) in deshuffle_word(x).iter() {
            for (Tensor(y1, y2), d) in deshuffle_word(y).iter() {
                out.add_term(Tensor(Tensor(x1.clone(), y1.clone()), Tensor(x2.clone(), y2.clone())), c * d);
            }
        }
        out
    })
}

pub fn counit2<L: TreeLetter>(u: &Pair<L>) -> Rational {
    u.pair(|Tensor(x, y)| counit_word(x) * counit_word(y))
}

/// Braid and compatibility suites together.
pub fn verify_ybe<L: TreeLetter>(ph: &PostHopfTrunc<L>, d: usize) -> Result<Report> {
    let ybe = YbeOperator::new(ph);
    let mut report = Report::new(format!("Yang-Baxter operator, degree <= {d}"));
    report.absorb(verify_braid(&ybe, d)?);
    report.absorb(verify_compatibility(&ybe, d)?);
    if d == 0 {
        report.push(single("only the unit in degree 0", "degree 0", None));
    }
    Ok(report)
}

/// `R` on every basis pair of total degree `≤ d`, one line per pair:
/// `x | y | R(x⊗y)`.
pub fn r_table<L: TreeLetter>(ph: &PostHopfTrunc<L>, d: usize) -> Vec<String> {
    let ybe = YbeOperator::new(ph);
    pairs_up_to(&ph.basis(d), d)
        .into_iter()
        .map(|(x, y)| format!("{x} | {y} | {}", ybe.r_word(&x, &y)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posthopf::{Mutation, OrderedPostHopf, UnorderedPostHopf};
    use crate::trees::{parse_forest, OrderedTree};

    fn w(s: &str) -> Word<OrderedTree> {
        parse_forest(s).unwrap()
    }

    #[test]
    fn unit_behaviour() {
        let ph = OrderedPostHopf::grafting(4);
        let ybe = YbeOperator::new(&ph);
        let x = w("(()) ()");
        let e = Word::empty();
        assert_eq!(ybe.r_word(&x, &e), pair(&e, &x));
        assert_eq!(ybe.r_word(&e, &x), pair(&x, &e));
        assert_eq!(ybe.r_trees_explicit_word(&x, &e), pair(&e, &x));
        assert_eq!(ybe.r_trees_explicit_word(&e, &x), pair(&x, &e));
    }

    #[test]
    fn right_action_of_two_nodes() {
        // independent evaluation: •◁• = S▷(•▷•) + S▷(•)∗•  + S▷(•)∗• ... expanded by hand:
        // Δ• ⊗ Δ• gives four terms; with 1▷• = •, •▷1 = 0, 1▷1 = 1, •▷• = (()):
        //   a1=•,b1=•: S▷((())) ∗ 1 ∗ 1 = −(())
        //   a1=•,b1=1: S▷(0) = 0
        //   a1=1,b1=•: S▷(•) ∗ • ∗ 1 = −• ∗ • = −(•• + (()))
        //   a1=1,b1=1: 1 ∗ • ∗ • = •• + (())
        // total: −(())
        let ph = OrderedPostHopf::grafting(4);
        let ybe = YbeOperator::new(&ph);
        let got = ybe.right_action_word(&w("()"), &w("()"));
        assert_eq!(got, -LinComb::basis(w("(())")));
    }

    #[test]
    fn r_on_two_nodes() {
        // R(•⊗•) = (•▷•)⊗(1◁1) + (1▷•)⊗(•◁1) + (•▷1)⊗… + (1▷1)⊗(•◁•)
        //        = (())⊗1 + •⊗• − 1⊗(())
        let ph = OrderedPostHopf::grafting(4);
        let ybe = YbeOperator::new(&ph);
        let e = Word::empty();
        let expected: Pair<OrderedTree> = pair(&w("(())"), &e) + pair(&w("()"), &w("()")) - pair(&e, &w("(())"));
        assert_eq!(ybe.r_word(&w("()"), &w("()")), expected);
    }

    #[test]
    fn ordered_suites_pass_to_degree_three() {
        let ph = OrderedPostHopf::grafting(3);
        let report = verify_ybe(&ph, 3).unwrap();
        assert!(report.pass, "{report}");
    }

    #[test]
    fn unordered_suites_pass_to_degree_three() {
        let ph = UnorderedPostHopf::grafting(3);
        let report = verify_ybe(&ph, 3).unwrap();
        assert!(report.pass, "{report}");
    }

    #[test]
    fn degree_zero_is_vacuous() {
        let ph = OrderedPostHopf::grafting(0);
        let report = verify_ybe(&ph, 0).unwrap();
        assert!(report.pass, "{report}");
    }

    #[test]
    fn corrupted_antipode_breaks_compatibility() {
        let ph = OrderedPostHopf::grafting(3).with_mutation(Mutation::SubadjacentAntipode);
        let ybe = YbeOperator::new(&ph);
        let report = verify_compatibility(&ybe, 3).unwrap();
        let r = report.identity("a∗▷b = (a1▷b1)∗▷(a2◁b2)").unwrap();
        assert!(!r.pass);
        assert!(r.witness.is_some());
    }

    #[test]
    fn cutoff_is_enforced() {
        let ph = OrderedPostHopf::grafting(2);
        let ybe = YbeOperator::new(&ph);
        assert!(verify_braid(&ybe, 3).is_err());
        let u = pair(&w("(())"), &w("()"));
        assert!(ybe.r(&u).is_err());
    }
}
