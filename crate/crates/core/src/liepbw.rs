//! Lie algebras by structure constants, Lie-level relative Rota-Baxter
//! operators, and their lift to truncated universal enveloping algebras.
//!
//! `U(𝔤)` is represented by PBW monomials: non-decreasing index words of
//! length at most the cutoff. Products are straightened by adjacent
//! transpositions `ba = ab + [b, a]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_integer::binomial;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::findim::hopf::{bilinear_entries, bilinear_from_entries, matrix_entries, matrix_from_entries, Entry, Name, Names};
use crate::kernel::{bilinear, int, tensor, LinComb, Rational, Tensor};
use crate::linalg::Echelon;
use crate::report::{check_all, compare, single, Report};

pub type Vector = LinComb<usize>;

/// A Lie algebra with `bracket[i][j] = [e_i, e_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlg {
    pub name: String,
    pub basis: Vec<String>,
    bracket: Vec<Vec<Vector>>,
}

fn pairs(n: usize, m: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect()
}

fn triples(n: usize, m: usize, p: usize) -> Vec<(usize, usize, usize)> {
    pairs(n, m).into_iter().flat_map(|(i, j)| (0..p).map(move |k| (i, j, k))).collect()
}

impl LieAlg {
    /// Verifies antisymmetry and the Jacobi identity.
    pub fn new(name: impl Into<String>, basis: Vec<String>, bracket: Vec<Vec<Vector>>) -> Result<Self> {
        let l = LieAlg {
            name: name.into(),
            basis,
            bracket,
        };
        let n = l.dim();
        if l.bracket.len() != n || l.bracket.iter().any(|r| r.len() != n || r.iter().any(|v| v.keys().any(|&k| k >= n))) {
            return Err(Error::invalid(format!("{}: bracket table has the wrong shape", l.name)));
        }
        let report = l.verify();
        if let Some(f) = report.failures().next() {
            return Err(Error::invalid(format!(
                "{} is not a Lie algebra: {} fails ({})",
                l.name,
                f.name,
                f.witness.clone().unwrap_or_default()
            )));
        }
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn e(&self, i: usize) -> Vector {
        LinComb::basis(i)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.bracket[i][j]
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Vector {
        bilinear(u, v, |&i, &j| self.bracket[i][j].clone())
    }

    pub fn show(&self, v: &Vector) -> String {
        v.map_keys(|&i| Name(self.basis[i].clone())).to_string()
    }

    pub fn verify(&self) -> Report {
        let n = self.dim();
        let mut report = Report::new(format!("Lie algebra {}", self.name));
        let nm = |i: usize| self.basis[i].clone();
        report.push(check_all("[x,y] = −[y,x]", format!("all {} pairs", n * n), &pairs(n, n), |&(i, j)| {
            compare(|| format!("x = {}, y = {}", nm(i), nm(j)), &self.bracket[i][j], &-self.bracket[j][i].clone())
        }));
        report.push(check_all("Jacobi", format!("all {} triples", n * n * n), &triples(n, n, n), |&(i, j, k)| {
            let (x, y, z) = (self.e(i), self.e(j), self.e(k));
            let s = &(&self.bracket(&x, &self.bracket(&y, &z)) + &self.bracket(&y, &self.bracket(&z, &x)))
                + &self.bracket(&z, &self.bracket(&x, &y));
            compare(|| format!("x = {}, y = {}, z = {}", nm(i), nm(j), nm(k)), &self.show(&s), &"0".to_string())
        }));
        report
    }

    pub fn abelian(n: usize) -> Self {
        let basis = (1..=n).map(|i| format!("e{i}")).collect();
        LieAlg::new(format!("abelian{n}"), basis, vec![vec![LinComb::zero(); n]; n]).expect("abelian")
    }

    /// `[e1, e2] = e1`.
    pub fn nonabelian2() -> Self {
        let mut b = vec![vec![LinComb::zero(); 2]; 2];
        b[0][1] = LinComb::basis(0);
        b[1][0] = LinComb::term(0, int(-1));
        LieAlg::new("aff2", vec!["e1".into(), "e2".into()], b).expect("2-dim nonabelian")
    }

    /// `[e1, e2] = e3`, `e3` central.
    pub fn heisenberg() -> Self {
        let mut b = vec![vec![LinComb::zero(); 3]; 3];
        b[0][1] = LinComb::basis(2);
        b[1][0] = LinComb::term(2, int(-1));
        LieAlg::new("heis3", vec!["e1".into(), "e2".into(), "e3".into()], b).expect("Heisenberg")
    }

    /// The adjoint action of the algebra on itself.
    pub fn adjoint(&self) -> Vec<Vec<Vector>> {
        self.bracket.clone()
    }
}

/// `φ[x][u] = φ(e_x)(e_u)` for `φ: 𝔤 → Der(𝔥)`.
pub type LieActionTable = Vec<Vec<Vector>>;

pub fn apply_lie_action(phi: &LieActionTable, x: &Vector, u: &Vector) -> Vector {
    bilinear(x, u, |&i, &j| phi[i][j].clone())
}

/// Each `φ(x)` is a derivation of `𝔥` and `φ` is a Lie homomorphism.
pub fn verify_lie_action(g: &LieAlg, h: &LieAlg, phi: &LieActionTable) -> Report {
    let mut report = Report::new(format!("{} acting on {}", g.name, h.name));
    let (ng, nh) = (g.dim(), h.dim());
    if phi.len() != ng || phi.iter().any(|r| r.len() != nh || r.iter().any(|v| v.keys().any(|&k| k >= nh))) {
        report.push(single("action shape", "table", Some(format!("action is not {ng}×{nh}"))));
        return report;
    }
    let act = |x: &Vector, u: &Vector| apply_lie_action(phi, x, u);
    report.push(check_all(
        "φ(x)[u,v] = [φ(x)u,v] + [u,φ(x)v]",
        format!("all {} triples", ng * nh * nh),
        &triples(ng, nh, nh),
        |&(x, u, v)| {
            let (xv, uv, vv) = (g.e(x), h.e(u), h.e(v));
            let lhs = act(&xv, h.bracket_basis(u, v));
            let rhs = &h.bracket(&act(&xv, &uv), &vv) + &h.bracket(&uv, &act(&xv, &vv));
            compare(|| format!("x = {}, u = {}, v = {}", g.basis[x], h.basis[u], h.basis[v]), &h.show(&lhs), &h.show(&rhs))
        },
    ));
    report.push(check_all(
        "φ([x,y]) = [φ(x),φ(y)]",
        format!("all {} triples", ng * ng * nh),
        &triples(ng, ng, nh),
        |&(x, y, u)| {
            let (xv, yv, uv) = (g.e(x), g.e(y), h.e(u));
            let lhs = act(g.bracket_basis(x, y), &uv);
            let rhs = &act(&xv, &act(&yv, &uv)) - &act(&yv, &act(&xv, &uv));
            compare(|| format!("x = {}, y = {}, u = {}", g.basis[x], g.basis[y], h.basis[u]), &h.show(&lhs), &h.show(&rhs))
        },
    ));
    report
}

/// A candidate relative Rota-Baxter operator `T: 𝔥 → 𝔤` with `𝔤` acting
/// on `𝔥`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieRb {
    pub g: LieAlg,
    pub h: LieAlg,
    pub phi: LieActionTable,
    /// `t[u] = T(e_u)`.
    pub t: Vec<Vector>,
}

impl LieRb {
    /// Verifies the action; the operator identity is left to
    /// [`verify_rb_lie`].
    pub fn new(g: LieAlg, h: LieAlg, phi: LieActionTable, t: Vec<Vector>) -> Result<Self> {
        let report = verify_lie_action(&g, &h, &phi);
        if let Some(f) = report.failures().next() {
            return Err(Error::invalid(format!(
                "not an action by derivations: {} fails ({})",
                f.name,
                f.witness.clone().unwrap_or_default()
            )));
        }
        if t.len() != h.dim() || t.iter().any(|v| v.keys().any(|&k| k >= g.dim())) {
            return Err(Error::invalid(format!("T is not a map {} -> {}", h.name, g.name)));
        }
        Ok(LieRb { g, h, phi, t })
    }

    /// `𝔤 = 𝔥` acting on itself by `ad`, with `T = scale·id`.
    pub fn adjoint_scalar(l: &LieAlg, scale: &Rational) -> Self {
        let t = (0..l.dim()).map(|i| LinComb::term(i, scale.clone())).collect();
        LieRb::new(l.clone(), l.clone(), l.adjoint(), t).expect("adjoint action")
    }

    /// The nonabelian 2-dimensional algebra with `ad` and `T = −id`.
    pub fn nonabelian2() -> Self {
        Self::adjoint_scalar(&LieAlg::nonabelian2(), &int(-1))
    }

    /// The same data with `T = id`, which violates the identity.
    pub fn nonabelian2_broken() -> Self {
        Self::adjoint_scalar(&LieAlg::nonabelian2(), &int(1))
    }

    pub fn heisenberg() -> Self {
        Self::adjoint_scalar(&LieAlg::heisenberg(), &int(-1))
    }

    /// Abelian `𝕜²`, zero action, `T(e1) = e1`, `T(e2) = 2e1 + e2`.
    pub fn abelian2() -> Self {
        let a = LieAlg::abelian(2);
        let t = vec![LinComb::basis(0), &LinComb::term(0, int(2)) + &LinComb::basis(1)];
        LieRb::new(a.clone(), a, vec![vec![LinComb::zero(); 2]; 2], t).expect("zero action")
    }

    pub fn apply_t(&self, u: &Vector) -> Vector {
        u.extend_linear(|&i| self.t[i].clone())
    }

    pub fn act(&self, x: &Vector, u: &Vector) -> Vector {
        apply_lie_action(&self.phi, x, u)
    }

    /// `u ▷_T v = φ(T(u))v`.
    pub fn post_basis(&self, u: usize, v: usize) -> Vector {
        self.act(&self.t[u], &self.h.e(v))
    }

    pub fn post(&self, u: &Vector, v: &Vector) -> Vector {
        bilinear(u, v, |&i, &j| self.post_basis(i, j))
    }

    /// `[u,v]_T = u▷v − v▷u + [u,v]`.
    pub fn subadjacent_bracket(&self, u: &Vector, v: &Vector) -> Vector {
        &(&self.post(u, v) - &self.post(v, u)) + &self.h.bracket(u, v)
    }
}

/// `[T(u), T(v)] = T(φ(T(u))v − φ(T(v))u + [u,v])` on all basis pairs.
pub fn verify_rb_lie(r: &LieRb) -> Report {
    let n = r.h.dim();
    let mut report = Report::new(format!("Lie relative Rota-Baxter operator {} -> {}", r.h.name, r.g.name));
    report.push(check_all(
        "[Tu,Tv] = T(φ(Tu)v − φ(Tv)u + [u,v])",
        format!("all {} pairs", n * n),
        &pairs(n, n),
        |&(u, v)| {
            let lhs = r.g.bracket(&r.t[u], &r.t[v]);
            let rhs = r.apply_t(&r.subadjacent_bracket(&r.h.e(u), &r.h.e(v)));
            compare(|| format!("u = {}, v = {}", r.h.basis[u], r.h.basis[v]), &r.g.show(&lhs), &r.g.show(&rhs))
        },
    ));
    report
}

/// The table of `▷_T` and the post-Lie axioms for it.
pub fn induced_postlie(r: &LieRb) -> (Vec<Vec<Vector>>, Report) {
    let n = r.h.dim();
    let table: Vec<Vec<Vector>> = (0..n).map(|u| (0..n).map(|v| r.post_basis(u, v)).collect()).collect();
    let h = &r.h;
    let tri = |u: &Vector, v: &Vector| bilinear(u, v, |&i, &j| table[i][j].clone());
    let nm = |i: usize| h.basis[i].clone();
    let range = format!("all {} triples", n * n * n);
    let mut report = Report::new(format!("induced post-Lie product on {}", h.name));
    report.push(check_all("Post-L-1: x▷[y,z] = [x▷y,z] + [y,x▷z]", range.clone(), &triples(n, n, n), |&(x, y, z)| {
        let (xv, yv, zv) = (h.e(x), h.e(y), h.e(z));
        let lhs = tri(&xv, h.bracket_basis(y, z));
        let rhs = &h.bracket(&table[x][y], &zv) + &h.bracket(&yv, &table[x][z]);
        compare(|| format!("x = {}, y = {}, z = {}", nm(x), nm(y), nm(z)), &h.show(&lhs), &h.show(&rhs))
    }));
    report.push(check_all(
        "Post-L-2: (x▷y − y▷x + [x,y])▷z = x▷(y▷z) − y▷(x▷z)",
        range.clone(),
        &triples(n, n, n),
        |&(x, y, z)| {
            let (xv, yv, zv) = (h.e(x), h.e(y), h.e(z));
            let lhs = tri(&r.subadjacent_bracket(&xv, &yv), &zv);
            let rhs = &tri(&xv, &table[y][z]) - &tri(&yv, &table[x][z]);
            compare(|| format!("x = {}, y = {}, z = {}", nm(x), nm(y), nm(z)), &h.show(&lhs), &h.show(&rhs))
        },
    ));
    report.push(check_all("Jacobi for [·,·]_T", range, &triples(n, n, n), |&(x, y, z)| {
        let (xv, yv, zv) = (h.e(x), h.e(y), h.e(z));
        let br = |a: &Vector, b: &Vector| r.subadjacent_bracket(a, b);
        let s = &(&br(&xv, &br(&yv, &zv)) + &br(&yv, &br(&zv, &xv))) + &br(&zv, &br(&xv, &yv));
        compare(|| format!("x = {}, y = {}, z = {}", nm(x), nm(y), nm(z)), &h.show(&s), &"0".to_string())
    }));
    (table, report)
}

/// A PBW monomial: a non-decreasing word of basis indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub Vec<usize>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("e{}", i + 1)).collect();
        f.write_str(&parts.join("·"))
    }
}

pub type UElem = LinComb<Mono>;
pub type UElem2 = LinComb<Tensor<Mono, Mono>>;

/// `U(𝔤)` truncated at degree `cutoff`.
pub struct TruncUea {
    lie: LieAlg,
    cutoff: usize,
    normal: Mutex<HashMap<Vec<usize>, UElem>>,
}

impl TruncUea {
    pub fn new(lie: LieAlg, cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::invalid("the truncation degree must be at least 1"));
        }
        Ok(TruncUea {
            lie,
            cutoff,
            normal: Mutex::new(HashMap::new()),
        })
    }

    pub fn lie(&self) -> &LieAlg {
        &self.lie
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// PBW monomials of exactly degree `d`, in lexicographic order.
    pub fn monomials_of_degree(&self, d: usize) -> Vec<Mono> {
        fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Mono>) {
            if left == 0 {
                out.push(Mono(cur.clone()));
                return;
            }
            for i in start..n {
                cur.push(i);
                go(i, n, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, self.lie.dim(), d, &mut Vec::new(), &mut out);
        out
    }

    pub fn monomials_up_to(&self, d: usize) -> Vec<Mono> {
        (0..=d).flat_map(|k| self.monomials_of_degree(k)).collect()
    }

    /// The image of `𝔤` in degree one.
    pub fn embed(&self, v: &Vector) -> UElem {
        v.map_keys(|&i| Mono(vec![i]))
    }

    pub fn unit(&self) -> UElem {
        LinComb::basis(Mono::one())
    }

    pub fn show(&self, v: &UElem) -> String {
        v.map_keys(|m| Name(self.render(m))).to_string()
    }

    pub fn show2(&self, v: &UElem2) -> String {
        v.map_keys(|Tensor(a, b)| Tensor(Name(self.render(a)), Name(self.render(b)))).to_string()
    }

    fn render(&self, m: &Mono) -> String {
        if m.0.is_empty() {
            "1".into()
        } else {
            m.0.iter().map(|&i| self.lie.basis[i].as_str()).collect::<Vec<_>>().join("·")
        }
    }

    /// Normal form of an arbitrary word by straightening.
    pub fn normal_form(&self, word: &[usize]) -> UElem {
        if let Some(v) = self.normal.lock().unwrap().get(word) {
            return v.clone();
        }
        let result = match word.windows(2).position(|w| w[0] > w[1]) {
            None => LinComb::basis(Mono(word.to_vec())),
            Some(i) => {
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = self.normal_form(&swapped);
                for (k, c) in self.lie.bracket_basis(word[i], word[i + 1]).iter() {
                    let mut shorter = word[..i].to_vec();
                    shorter.push(*k);
                    shorter.extend_from_slice(&word[i + 2..]);
                    out.add_scaled(&self.normal_form(&shorter), c);
                }
                out
            }
        };
        self.normal.lock().unwrap().insert(word.to_vec(), result.clone());
        result
    }

    fn product_basis(&self, a: &Mono, b: &Mono) -> UElem {
        let mut w = a.0.clone();
        w.extend_from_slice(&b.0);
        self.normal_form(&w)
    }

    /// The product without the truncation check; callers keep degrees in
    /// range.
    pub fn product(&self, u: &UElem, v: &UElem) -> UElem {
        bilinear(u, v, |a, b| self.product_basis(a, b))
    }

    /// The product, refused when the result could leave the truncation.
    pub fn mul(&self, u: &UElem, v: &UElem) -> Result<UElem> {
        let d = u.keys().map(Mono::degree).max().unwrap_or(0) + v.keys().map(Mono::degree).max().unwrap_or(0);
        if d > self.cutoff {
            return Err(Error::CutoffExceeded {
                degree: d,
                cutoff: self.cutoff,
            });
        }
        Ok(self.product(u, v))
    }

    /// Generators are primitive: `Δ(y₁⋯y_r) = Σ_S y_S ⊗ y_{S^c}`.
    pub fn coproduct_basis(&self, m: &Mono) -> UElem2 {
        let r = m.degree();
        let mut out = LinComb::zero();
        for mask in 0u32..(1 << r) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, &y) in m.0.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(y);
                } else {
                    right.push(y);
                }
            }
            out.add_term(Tensor(Mono(left), Mono(right)), Rational::one());
        }
        out
    }

    pub fn coproduct(&self, u: &UElem) -> UElem2 {
        u.extend_linear(|m| self.coproduct_basis(m))
    }

    pub fn counit(&self, u: &UElem) -> Rational {
        u.coeff(&Mono::one())
    }

    /// `S(y₁⋯y_r) = (−1)^r y_r⋯y₁`.
    pub fn antipode_basis(&self, m: &Mono) -> UElem {
        let mut w = m.0.clone();
        w.reverse();
        let sign = if m.degree().is_multiple_of(2) { int(1) } else { int(-1) };
        self.normal_form(&w).scale(&sign)
    }

    pub fn antipode(&self, u: &UElem) -> UElem {
        u.extend_linear(|m| self.antipode_basis(m))
    }

    pub fn product2(&self, u: &UElem2, v: &UElem2) -> UElem2 {
        bilinear(u, v, |Tensor(a, b), Tensor(c, d)| tensor(&self.product_basis(a, c), &self.product_basis(b, d)))
    }
}

/// Hopf axioms on all monomial tuples whose degrees sum to at most the
/// cutoff.
pub fn verify_uea(u: &TruncUea) -> Report {
    let d = u.cutoff();
    let monos = u.monomials_up_to(d);
    let pairs: Vec<(Mono, Mono)> = monos
        .iter()
        .flat_map(|a| monos.iter().filter(move |b| a.degree() + b.degree() <= d).map(move |b| (a.clone(), b.clone())))
        .collect();
    let triples: Vec<(Mono, Mono, Mono)> = pairs
        .iter()
        .flat_map(|(a, b)| {
            monos
                .iter()
                .filter(move |c| a.degree() + b.degree() + c.degree() <= d)
                .map(move |c| (a.clone(), b.clone(), c.clone()))
        })
        .collect();
    let b = |m: &Mono| -> UElem { LinComb::basis(m.clone()) };
    let mut report = Report::new(format!("U({}) truncated at degree {d}", u.lie().name));
    let range2 = format!("{} monomial pairs, degree sum ≤ {d}", pairs.len());
    report.push(check_all(
        "(uv)w = u(vw)",
        format!("{} monomial triples, degree sum ≤ {d}", triples.len()),
        &triples,
        |(x, y, z)| {
            let lhs = u.product(&u.product(&b(x), &b(y)), &b(z));
            let rhs = u.product(&b(x), &u.product(&b(y), &b(z)));
            compare(|| format!("u = {x}, v = {y}, w = {z}"), &u.show(&lhs), &u.show(&rhs))
        },
    ));
    report.push(check_all("Δ(uv) = Δ(u)Δ(v)", range2.clone(), &pairs, |(x, y)| {
        let lhs = u.coproduct(&u.product(&b(x), &b(y)));
        let rhs = u.product2(&u.coproduct_basis(x), &u.coproduct_basis(y));
        compare(|| format!("u = {x}, v = {y}"), &u.show2(&lhs), &u.show2(&rhs))
    }));
    let range1 = format!("{} monomials of degree ≤ {d}", monos.len());
    report.push(check_all("(Δ⊗id)Δ = (id⊗Δ)Δ", range1.clone(), &monos, |m| {
        let d1 = u.coproduct_basis(m);
        let l = d1.extend_linear(|Tensor(a, c)| {
            u.coproduct_basis(a).map_keys(|Tensor(a1, a2)| Tensor(a1.clone(), Tensor(a2.clone(), c.clone())))
        });
        let r = d1.extend_linear(|Tensor(a, c)| {
            u.coproduct_basis(c).map_keys(|Tensor(c1, c2)| Tensor(a.clone(), Tensor(c1.clone(), c2.clone())))
        });
        compare(|| format!("u = {m}"), &l, &r)
    }));
    report.push(check_all("(ε⊗id)Δ = id = (id⊗ε)Δ", range1.clone(), &monos, |m| {
        let d1 = u.coproduct_basis(m);
        let l: UElem = d1.extend_linear(|Tensor(a, c)| b(c).scale(&u.counit(&b(a))));
        let r: UElem = d1.extend_linear(|Tensor(a, c)| b(a).scale(&u.counit(&b(c))));
        compare(|| format!("left, u = {m}"), &l, &b(m)).or_else(|| compare(|| format!("right, u = {m}"), &r, &b(m)))
    }));
    report.push(check_all("S(u1)u2 = ε(u)1 = u1S(u2)", range1, &monos, |m| {
        let d1 = u.coproduct_basis(m);
        let expected = u.unit().scale(&u.counit(&b(m)));
        let l: UElem = d1.extend_linear(|Tensor(a, c)| u.product(&u.antipode_basis(a), &b(c)));
        let r: UElem = d1.extend_linear(|Tensor(a, c)| u.product(&b(a), &u.antipode_basis(c)));
        compare(|| format!("S(u1)u2, u = {m}"), &u.show(&l), &u.show(&expected))
            .or_else(|| compare(|| format!("u1S(u2), u = {m}"), &u.show(&r), &u.show(&expected)))
    }));
    report
}

/// Sign used in the recursion extending `▷_T` from `𝔥` to `U(𝔥)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RecursionSign {
    #[default]
    Minus,
    /// The second term added instead of subtracted.
    Plus,
}

/// The lift of a Lie relative Rota-Baxter operator to `U(𝔥) → U(𝔤)` at
/// truncation.
pub struct UeaLift<'a> {
    pub rb: &'a LieRb,
    pub ug: TruncUea,
    pub uh: TruncUea,
    tbar: Mutex<HashMap<Mono, UElem>>,
}

impl<'a> UeaLift<'a> {
    pub fn new(rb: &'a LieRb, cutoff: usize) -> Result<Self> {
        Ok(UeaLift {
            rb,
            ug: TruncUea::new(rb.g.clone(), cutoff)?,
            uh: TruncUea::new(rb.h.clone(), cutoff)?,
            tbar: Mutex::new(HashMap::new()),
        })
    }

    pub fn cutoff(&self) -> usize {
        self.uh.cutoff()
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.cutoff() {
            Err(Error::CutoffExceeded {
                degree: d,
                cutoff: self.cutoff(),
            })
        } else {
            Ok(())
        }
    }

    /// `φ̄(x)(y₁⋯y_r) = Σ y₁⋯φ(x)(y_i)⋯y_r` for `x ∈ 𝔤`.
    pub fn phibar_letter(&self, x: &Vector, m: &Mono) -> UElem {
        let mut out = LinComb::zero();
        for i in 0..m.degree() {
            let image = self.rb.act(x, &LinComb::basis(m.0[i]));
            for (k, c) in image.iter() {
                let mut w = m.0.clone();
                w[i] = *k;
                out.add_scaled(&self.uh.normal_form(&w), c);
            }
        }
        out
    }

    /// `x₁⋯x_s ⇀ v = φ̄(x₁)(⋯φ̄(x_s)(v))` for a PBW monomial of `U(𝔤)`.
    pub fn act_basis(&self, x: &Mono, v: &UElem) -> UElem {
        x.0.iter().rev().fold(v.clone(), |acc, &i| {
            acc.extend_linear(|m| self.phibar_letter(&LinComb::basis(i), m))
        })
    }

    pub fn act(&self, x: &UElem, v: &UElem) -> UElem {
        let mut out = LinComb::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.act_basis(m, v), c);
        }
        out
    }

    /// Checked action of `U(𝔤)` on `U(𝔥)`.
    pub fn extend_action(&self, x: &UElem, v: &UElem) -> Result<UElem> {
        self.check_degree(v.max_degree_mono())?;
        self.check_degree(x.max_degree_mono())?;
        Ok(self.act(x, v))
    }

    /// `T̄(1) = 1`, `T̄(yu) = T(y)T̄(u) − T̄(φ̄(T(y))u)`.
    pub fn tbar_basis(&self, m: &Mono) -> UElem {
        if let Some(v) = self.tbar.lock().unwrap().get(m) {
            return v.clone();
        }
        let result = if m.0.is_empty() {
            self.ug.unit()
        } else {
            let y = m.0[0];
            let rest = Mono(m.0[1..].to_vec());
            let ty = &self.rb.t[y];
            let first = self.ug.product(&self.ug.embed(ty), &self.tbar_basis(&rest));
            let inner = self.phibar_letter(ty, &rest);
            &first - &self.tbar(&inner)
        };
        self.tbar.lock().unwrap().insert(m.clone(), result.clone());
        result
    }

    pub fn tbar(&self, u: &UElem) -> UElem {
        u.extend_linear(|m| self.tbar_basis(m))
    }

    /// Checked `T̄`.
    pub fn extend_rb(&self, u: &UElem) -> Result<UElem> {
        self.check_degree(u.max_degree_mono())?;
        Ok(self.tbar(u))
    }

    /// `a ∗_T̄ b = a₁(T̄(a₂)⇀b)`.
    pub fn star(&self, a: &UElem, b: &UElem) -> UElem {
        let d = self.uh.coproduct(a);
        d.extend_linear(|Tensor(a1, a2)| {
            self.uh.product(&LinComb::basis(a1.clone()), &self.act(&self.tbar_basis(a2), b))
        })
    }

    /// `u ▷_T̄ v = φ̄(T̄(u))v`.
    pub fn post_via_tbar(&self, u: &UElem, v: &UElem) -> UElem {
        self.act(&self.tbar(u), v)
    }

    /// `▷̄_T` from the Lie-level `▷_T`: derivations on degree one, then
    /// `x₁⋯x_r ▷̄ u = x₁ ▷̄ (x₂⋯x_r ▷̄ u) − (x₁ ▷̄ x₂⋯x_r) ▷̄ u`.
    pub fn post_extended(&self, a: &Mono, b: &UElem, sign: RecursionSign) -> UElem {
        match a.degree() {
            0 => b.clone(),
            1 => b.extend_linear(|m| self.post_letter(a.0[0], m)),
            _ => {
                let x1 = Mono(vec![a.0[0]]);
                let rest = Mono(a.0[1..].to_vec());
                let first = self.post_extended(&x1, &self.post_extended(&rest, b, sign), sign);
                let x1_on_rest = self.post_extended(&x1, &LinComb::basis(rest), sign);
                let mut second = LinComb::zero();
                for (m, c) in x1_on_rest.iter() {
                    second.add_scaled(&self.post_extended(m, b, sign), c);
                }
                match sign {
                    RecursionSign::Minus => &first - &second,
                    RecursionSign::Plus => &first + &second,
                }
            }
        }
    }

    fn post_letter(&self, x: usize, m: &Mono) -> UElem {
        if m.0.is_empty() {
            return LinComb::zero();
        }
        self.phibar_letter(&self.rb.t[x], m)
    }

    fn bounded_pairs(&self) -> Vec<(Mono, Mono)> {
        let d = self.cutoff();
        let monos = self.uh.monomials_up_to(d);
        monos
            .iter()
            .flat_map(|a| monos.iter().filter(move |b| a.degree() + b.degree() <= d).map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}

trait MaxDegree {
    fn max_degree_mono(&self) -> usize;
}

impl MaxDegree for UElem {
    fn max_degree_mono(&self) -> usize {
        self.keys().map(Mono::degree).max().unwrap_or(0)
    }
}

/// Module-bialgebra laws of `φ̄` at truncation (degree sums ≤ cutoff).
pub fn extended_action_check(lift: &UeaLift) -> Report {
    let d = lift.cutoff();
    let (ug, uh) = (&lift.ug, &lift.uh);
    let gm = ug.monomials_up_to(d);
    let hm = uh.monomials_up_to(d);
    let b = |m: &Mono| -> UElem { LinComb::basis(m.clone()) };
    let mut report = Report::new(format!("U({}) acting on U({})", lift.rb.g.name, lift.rb.h.name));

    let mod_cases: Vec<(Mono, Mono, Mono)> = gm
        .iter()
        .flat_map(|x| gm.iter().map(move |y| (x, y)))
        .filter(|(x, y)| x.degree() + y.degree() <= d)
        .flat_map(|(x, y)| hm.iter().filter(move |v| x.degree() + y.degree() + v.degree() <= d).map(move |v| (x.clone(), y.clone(), v.clone())))
        .collect();
    report.push(check_all("(xy)⇀v = x⇀(y⇀v)", format!("{} cases, degree sum ≤ {d}", mod_cases.len()), &mod_cases, |(x, y, v)| {
        let lhs = lift.act(&ug.product(&b(x), &b(y)), &b(v));
        let rhs = lift.act_basis(x, &lift.act_basis(y, &b(v)));
        compare(|| format!("x = {x}, y = {y}, v = {v}"), &uh.show(&lhs), &uh.show(&rhs))
    }));
    report.push(check_all("1⇀v = v", format!("{} monomials", hm.len()), &hm, |v| {
        compare(|| format!("v = {v}"), &uh.show(&lift.act(&ug.unit(), &b(v))), &uh.show(&b(v)))
    }));
    let meas: Vec<(Mono, Mono, Mono)> = gm
        .iter()
        .flat_map(|x| hm.iter().map(move |v| (x, v)))
        .flat_map(|(x, v)| hm.iter().filter(move |w| x.degree() + v.degree() + w.degree() <= d).map(move |w| (x.clone(), v.clone(), w.clone())))
        .collect();
    report.push(check_all("x⇀(vw) = (x1⇀v)(x2⇀w)", format!("{} cases, degree sum ≤ {d}", meas.len()), &meas, |(x, v, w)| {
        let lhs = lift.act_basis(x, &uh.product(&b(v), &b(w)));
        let rhs: UElem = ug
            .coproduct_basis(x)
            .extend_linear(|Tensor(x1, x2)| uh.product(&lift.act_basis(x1, &b(v)), &lift.act_basis(x2, &b(w))));
        compare(|| format!("x = {x}, v = {v}, w = {w}"), &uh.show(&lhs), &uh.show(&rhs))
    }));
    report.push(check_all("x⇀1 = ε(x)1", format!("{} monomials", gm.len()), &gm, |x| {
        let lhs = lift.act_basis(x, &uh.unit());
        compare(|| format!("x = {x}"), &uh.show(&lhs), &uh.show(&uh.unit().scale(&ug.counit(&b(x)))))
    }));
    let cm: Vec<(Mono, Mono)> = gm
        .iter()
        .flat_map(|x| hm.iter().filter(move |v| x.degree() + v.degree() <= d).map(move |v| (x.clone(), v.clone())))
        .collect();
    report.push(check_all(
        "Δ(x⇀v) = (x1⇀v1)⊗(x2⇀v2), ε(x⇀v) = ε(x)ε(v)",
        format!("{} cases, degree sum ≤ {d}", cm.len()),
        &cm,
        |(x, v)| {
            let lhs = uh.coproduct(&lift.act_basis(x, &b(v)));
            let rhs = bilinear(&ug.coproduct_basis(x), &uh.coproduct_basis(v), |Tensor(x1, x2), Tensor(v1, v2)| {
                tensor(&lift.act_basis(x1, &b(v1)), &lift.act_basis(x2, &b(v2)))
            });
            compare(|| format!("x = {x}, v = {v}"), &uh.show2(&lhs), &uh.show2(&rhs)).or_else(|| {
                compare(
                    || format!("ε, x = {x}, v = {v}"),
                    &uh.counit(&lift.act_basis(x, &b(v))),
                    &(ug.counit(&b(x)) * uh.counit(&b(v))),
                )
            })
        },
    ));
    report
}

/// `T̄` agrees with `T` in degree one, satisfies the Hopf-level identity on
/// monomial pairs with degree sum ≤ cutoff, and is a coalgebra map.
pub fn extend_rb_check(lift: &UeaLift) -> Report {
    let d = lift.cutoff();
    let (ug, uh) = (&lift.ug, &lift.uh);
    let b = |m: &Mono| -> UElem { LinComb::basis(m.clone()) };
    let mut report = Report::new(format!("lifted operator U({}) -> U({})", lift.rb.h.name, lift.rb.g.name));
    let n = lift.rb.h.dim();
    let idx: Vec<usize> = (0..n).collect();
    report.push(check_all("T̄(y) = T(y)", format!("all {n} generators"), &idx, |&y| {
        let lhs = lift.tbar_basis(&Mono(vec![y]));
        compare(|| format!("y = {}", lift.rb.h.basis[y]), &ug.show(&lhs), &ug.show(&ug.embed(&lift.rb.t[y])))
    }));
    report.push(single("T̄(1) = 1", "unit", compare(String::new, &ug.show(&lift.tbar(&uh.unit())), &ug.show(&ug.unit()))));
    let pairs = lift.bounded_pairs();
    report.push(check_all(
        "T̄(u)T̄(v) = T̄(u1(T̄(u2)⇀v))",
        format!("{} monomial pairs, degree sum ≤ {d}", pairs.len()),
        &pairs,
        |(u, v)| {
            let lhs = ug.product(&lift.tbar_basis(u), &lift.tbar_basis(v));
            let rhs = lift.tbar(&lift.star(&b(u), &b(v)));
            compare(|| format!("u = {u}, v = {v}"), &ug.show(&lhs), &ug.show(&rhs))
        },
    ));
    let monos = uh.monomials_up_to(d);
    report.push(check_all("ΔT̄ = (T̄⊗T̄)Δ, εT̄ = ε", format!("{} monomials", monos.len()), &monos, |m| {
        let lhs = ug.coproduct(&lift.tbar_basis(m));
        let rhs = uh.coproduct_basis(m).extend_linear(|Tensor(a, c)| tensor(&lift.tbar_basis(a), &lift.tbar_basis(c)));
        compare(|| format!("u = {m}"), &ug.show2(&lhs), &ug.show2(&rhs))
            .or_else(|| compare(|| format!("ε, u = {m}"), &ug.counit(&lift.tbar_basis(m)), &uh.counit(&b(m))))
    }));
    report
}

/// `φ̄(T̄(u))v` against the recursive extension of `▷_T`, on monomial
/// pairs with degree sum ≤ cutoff.
pub fn posthopf_consistency_check(lift: &UeaLift, sign: RecursionSign) -> Report {
    let d = lift.cutoff();
    let uh = &lift.uh;
    let b = |m: &Mono| -> UElem { LinComb::basis(m.clone()) };
    let pairs = lift.bounded_pairs();
    let mut report = Report::new(format!("extended post-Hopf products on U({})", lift.rb.h.name));
    report.push(check_all(
        "φ̄(T̄(u))v = u ▷̄_T v",
        format!("{} monomial pairs, degree sum ≤ {d}", pairs.len()),
        &pairs,
        |(u, v)| {
            let lhs = lift.post_via_tbar(&b(u), &b(v));
            let rhs = lift.post_extended(u, &b(v), sign);
            compare(|| format!("u = {u}, v = {v}"), &uh.show(&lhs), &uh.show(&rhs))
        },
    ));
    report
}

/// The semidirect Lie algebra `𝔥 ⋊ 𝔤`: `(u,0)` at `u`, `(0,x)` at `dim 𝔥 + x`,
/// `[(u,x),(v,y)] = ([u,v] + φ(x)v − φ(y)u, [x,y])`.
pub fn semidirect(r: &LieRb) -> Result<LieAlg> {
    let (nh, ng) = (r.h.dim(), r.g.dim());
    let n = nh + ng;
    let split = |v: &Vector| -> (Vector, Vector) {
        (v.filter(|&k| k < nh), v.filter(|&k| k >= nh).map_keys(|&k| k - nh))
    };
    let join = |u: &Vector, x: &Vector| -> Vector { u + &x.map_keys(|&k| k + nh) };
    let mut bracket = vec![vec![LinComb::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let (u, x) = split(&LinComb::basis(i));
            let (v, y) = split(&LinComb::basis(j));
            let first = &(&r.h.bracket(&u, &v) + &r.act(&x, &v)) - &r.act(&y, &u);
            bracket[i][j] = join(&first, &r.g.bracket(&x, &y));
        }
    }
    let basis = r.h.basis.iter().map(|s| format!("({s},0)")).chain(r.g.basis.iter().map(|s| format!("(0,{s})"))).collect();
    LieAlg::new(format!("{} ⋊ {}", r.h.name, r.g.name), basis, bracket)
}

/// `Gr_T ⊂ 𝔥 ⋊ 𝔤` is a subalgebra; then, up to the cutoff, the filtered
/// dimensions of `Gr_T̄ ⊂ U(𝔥) # U(𝔤)` match those of `U(Gr_T)` and
/// `u ↦ u₁ # T̄(u₂)` is an injective algebra map from `(U(𝔥), ∗_T̄)`.
pub fn graph_envelope_check(lift: &UeaLift) -> Result<Report> {
    let r = lift.rb;
    let d = lift.cutoff();
    let nh = r.h.dim();
    let mut report = Report::new(format!("graph of T̄ in U({}) # U({})", r.h.name, r.g.name));
    let semi = semidirect(r)?;
    let gr: Vec<Vector> = (0..nh).map(|u| &LinComb::basis(u) + &r.t[u].map_keys(|&k| k + nh)).collect();
    let span = Echelon::from_vectors(&gr);
    let sub = check_all("Gr_T closed under the semidirect bracket", format!("all {} pairs", nh * nh), &pairs(nh, nh), |&(u, v)| {
        let br = semi.bracket(&gr[u], &gr[v]);
        (!span.contains(&br)).then(|| format!("u = {}, v = {}: {} is not in Gr_T", r.h.basis[u], r.h.basis[v], semi.show(&br)))
    });
    let closed = sub.pass;
    report.push(sub);
    if !closed {
        return Ok(report);
    }

    let (ug, uh) = (&lift.ug, &lift.uh);
    let b = |m: &Mono| -> UElem { LinComb::basis(m.clone()) };
    // Ψ(u) = u₁ # T̄(u₂) in U(𝔥) # U(𝔤)
    let psi = |u: &UElem| -> LinComb<Tensor<Mono, Mono>> {
        uh.coproduct(u)
            .extend_linear(|Tensor(u1, u2)| tensor(&b(u1), &lift.tbar_basis(u2)))
    };
    // (a#x)(a'#x') = a(x₁⇀a') # x₂x'
    let smash = |p: &LinComb<Tensor<Mono, Mono>>, q: &LinComb<Tensor<Mono, Mono>>| {
        bilinear(p, q, |Tensor(a, x), Tensor(a2, y)| {
            ug.coproduct_basis(x).extend_linear(|Tensor(x1, x2)| {
                tensor(&uh.product(&b(a), &lift.act_basis(x1, &b(a2))), &ug.product(&b(x2), &b(y)))
            })
        })
    };

    let mut dims = Vec::new();
    let mut expected = Vec::new();
    for k in 0..=d {
        let images: Vec<_> = uh.monomials_up_to(k).iter().map(|m| psi(&b(m))).collect();
        dims.push(Echelon::from_vectors(&images).rank());
        expected.push(binomial(nh + k, k));
    }
    report.push(single(
        "dim Gr_T̄ in degree ≤ d equals dim U(Gr_T) in degree ≤ d",
        format!("d ≤ {d}"),
        (dims != expected).then(|| format!("graph dimensions {dims:?}, PBW dimensions {expected:?}")),
    ));

    let pairs = lift.bounded_pairs();
    report.push(check_all(
        "Ψ(u ∗_T̄ v) = Ψ(u)Ψ(v)",
        format!("{} monomial pairs, degree sum ≤ {d}", pairs.len()),
        &pairs,
        |(u, v)| {
            let lhs = psi(&lift.star(&b(u), &b(v)));
            let rhs = smash(&psi(&b(u)), &psi(&b(v)));
            compare(|| format!("u = {u}, v = {v}"), &lhs, &rhs)
        },
    ));

    // the descendent product on generators realizes [·,·]_T, and words of
    // length ≤ k in the generators span a space of PBW dimension
    let gens: Vec<usize> = (0..nh).collect();
    report.push(check_all("u ∗_T̄ v − v ∗_T̄ u = [u,v]_T", format!("all {} pairs", nh * nh), &pairs_of(&gens), |&(u, v)| {
        let (eu, ev) = (uh.embed(&r.h.e(u)), uh.embed(&r.h.e(v)));
        let lhs = &lift.star(&eu, &ev) - &lift.star(&ev, &eu);
        let rhs = uh.embed(&r.subadjacent_bracket(&r.h.e(u), &r.h.e(v)));
        compare(|| format!("u = {}, v = {}", r.h.basis[u], r.h.basis[v]), &uh.show(&lhs), &uh.show(&rhs))
    }));
    let mut words: Vec<UElem> = vec![uh.unit()];
    let mut layer: Vec<UElem> = vec![uh.unit()];
    let mut gen_dims = vec![1usize];
    for _ in 1..=d {
        layer = layer
            .iter()
            .flat_map(|w| gens.iter().map(move |&g| (w, g)))
            .map(|(w, g)| lift.star(w, &uh.embed(&r.h.e(g))))
            .collect();
        words.extend(layer.iter().cloned());
        gen_dims.push(Echelon::from_vectors(&words).rank());
    }
    report.push(single(
        "∗_T̄-words of length ≤ d span a space of dimension C(n+d, d)",
        format!("d ≤ {d}"),
        (gen_dims != expected).then(|| format!("spans {gen_dims:?}, expected {expected:?}")),
    ));
    Ok(report)
}

fn pairs_of(g: &[usize]) -> Vec<(usize, usize)> {
    g.iter().flat_map(|&i| g.iter().map(move |&j| (i, j))).collect()
}

/// Every Lie/PBW suite for one instance at the given cutoff.
pub fn liepbw_pipeline(r: &LieRb, cutoff: usize) -> Result<Report> {
    let mut report = Report::new(format!("Lie/PBW pipeline {} -> {} at degree {cutoff}", r.h.name, r.g.name));
    let rb = verify_rb_lie(r);
    let ok = rb.pass;
    report.absorb(rb);
    report.absorb(induced_postlie(r).1);
    let lift = UeaLift::new(r, cutoff)?;
    report.absorb(verify_uea(&lift.uh));
    report.absorb(verify_uea(&lift.ug));
    report.absorb(extended_action_check(&lift));
    if !ok {
        report.absorb(graph_envelope_check(&lift)?);
        return Ok(report);
    }
    report.absorb(extend_rb_check(&lift));
    report.absorb(posthopf_consistency_check(&lift, RecursionSign::Minus));
    report.absorb(graph_envelope_check(&lift)?);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieJson {
    pub name: String,
    pub basis: Vec<String>,
    /// Entries `in: [a, b], out: [c]` give the coefficient of `c` in `[a, b]`;
    /// only `a < b` in basis order needs listing, antisymmetry fills the rest.
    pub bracket: Vec<Entry>,
}

impl LieJson {
    pub fn to_lie(&self) -> Result<LieAlg> {
        let n = self.basis.len();
        let names = Names::new(&self.basis, &self.name);
        let half = bilinear_from_entries(&self.bracket, &names, &names, &names, (n, n), "bracket")?;
        let mut bracket = vec![vec![LinComb::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                bracket[i][j] = &half[i][j] - &half[j][i];
            }
        }
        LieAlg::new(self.name.clone(), self.basis.clone(), bracket)
    }

    pub fn from_lie(l: &LieAlg) -> Self {
        let n = l.dim();
        let upper: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| if i < j { l.bracket[i][j].clone() } else { LinComb::zero() }).collect())
            .collect();
        LieJson {
            name: l.name.clone(),
            basis: l.basis.clone(),
            bracket: bilinear_entries(&upper, &l.basis, &l.basis, &l.basis),
        }
    }
}

/// The action either named (`"adjoint"`, `"zero"`) or given by entries
/// `in: [x, u], out: [v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LieActionJson {
    Named(String),
    Table(Vec<Entry>),
}

/// A Lie/PBW instance: `𝔤`, `𝔥` (defaults to `𝔤`), the action, `T` and
/// the truncation degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiePbwJson {
    pub g: LieJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<LieJson>,
    pub action: LieActionJson,
    pub t: Vec<Entry>,
    #[serde(default = "default_degree")]
    pub degree: usize,
}

fn default_degree() -> usize {
    3
}

impl LiePbwJson {
    pub fn from_rb(r: &LieRb, degree: usize) -> Self {
        let same = r.g == r.h;
        let action = if same && r.phi == r.g.adjoint() {
            LieActionJson::Named("adjoint".into())
        } else if r.phi.iter().flatten().all(LinComb::is_zero) {
            LieActionJson::Named("zero".into())
        } else {
            LieActionJson::Table(bilinear_entries(&r.phi, &r.g.basis, &r.h.basis, &r.h.basis))
        };
        LiePbwJson {
            g: LieJson::from_lie(&r.g),
            h: (!same).then(|| LieJson::from_lie(&r.h)),
            action,
            t: matrix_entries(&r.t, &r.h.basis, &r.g.basis),
            degree,
        }
    }

    pub fn load(&self) -> Result<(LieRb, usize)> {
        let g = self.g.to_lie()?;
        let h = match &self.h {
            Some(h) => h.to_lie()?,
            None => g.clone(),
        };
        let phi = match &self.action {
            LieActionJson::Named(s) if s == "adjoint" => {
                if g != h {
                    return Err(Error::invalid("the adjoint action needs h = g"));
                }
                g.adjoint()
            }
            LieActionJson::Named(s) if s == "zero" => vec![vec![LinComb::zero(); h.dim()]; g.dim()],
            LieActionJson::Named(s) => return Err(Error::invalid(format!("unknown action {s:?}"))),
            LieActionJson::Table(e) => {
                let (gn, hn) = (Names::new(&g.basis, &g.name), Names::new(&h.basis, &h.name));
                bilinear_from_entries(e, &gn, &hn, &hn, (g.dim(), h.dim()), "action")?
            }
        };
        let t = matrix_from_entries(&self.t, &Names::new(&h.basis, &h.name), &Names::new(&g.basis, &g.name), h.dim(), "T")?;
        Ok((LieRb::new(g, h, phi, t)?, self.degree))
    }
}
