//! Hopf algebras given by structure constants on a named basis.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{make_rational, JsonInt};
use crate::kernel::{LinComb, Rational, Tensor, Tensor3};
use crate::linalg;
use crate::report::{check_all, compare, Report};

/// A vector in the span of a finite basis, keyed by basis index.
pub type Vector = LinComb<usize>;
pub type Vector2 = LinComb<Tensor<usize, usize>>;
pub type Vector3 = LinComb<Tensor3<usize, usize, usize>>;

/// The raw data of a (candidate) Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfParts {
    pub name: String,
    pub basis: Vec<String>,
    /// `mult[i][j] = e_i e_j`.
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
    pub comult: Vec<Vector2>,
    pub counit: Vec<Rational>,
    /// `antipode[i] = S(e_i)`.
    pub antipode: Vec<Vector>,
}

/// A finite-dimensional Hopf algebra. Values built with [`FinDimHopf::new`]
/// satisfy every axiom; [`FinDimHopf::unchecked`] admits arbitrary data so
/// that broken structures can be reported on.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimHopf {
    parts: HopfParts,
    cocommutative: bool,
}

impl FinDimHopf {
    pub fn unchecked(parts: HopfParts) -> Self {
        let n = parts.basis.len();
        let cocommutative = (0..n).all(|i| crate::coshuffle::swap(&parts.comult[i]) == parts.comult[i]);
        FinDimHopf { parts, cocommutative }
    }

    /// Builds the algebra and verifies every Hopf axiom exhaustively.
    pub fn new(parts: HopfParts) -> Result<Self> {
        check_shape(&parts)?;
        let h = Self::unchecked(parts);
        let report = verify_hopf(&h);
        if !report.pass {
            let first = report.failures().next().unwrap();
            return Err(Error::invalid(format!(
                "{} is not a Hopf algebra: {} fails ({})",
                h.name(),
                first.name,
                first.witness.clone().unwrap_or_default()
            )));
        }
        Ok(h)
    }

    pub fn parts(&self) -> &HopfParts {
        &self.parts
    }

    pub fn into_parts(self) -> HopfParts {
        self.parts
    }

    pub fn name(&self) -> &str {
        &self.parts.name
    }

    pub fn dim(&self) -> usize {
        self.parts.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.parts.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.parts.basis.iter().position(|b| b == name)
    }

    pub fn e(&self, i: usize) -> Vector {
        LinComb::basis(i)
    }

    /// The basis vector with the given name.
    pub fn named(&self, name: &str) -> Vector {
        LinComb::basis(self.index_of(name).unwrap_or_else(|| panic!("no basis element {name:?}")))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.parts.mult[i][j] == self.parts.mult[j][i]))
    }

    pub fn unit(&self) -> Vector {
        self.parts.unit.clone()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        &self.parts.mult[i][j]
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        crate::kernel::bilinear(u, v, |&i, &j| self.parts.mult[i][j].clone())
    }

    pub fn mul3(&self, u: &Vector, v: &Vector, w: &Vector) -> Vector {
        self.mul(&self.mul(u, v), w)
    }

    pub fn coproduct(&self, u: &Vector) -> Vector2 {
        u.extend_linear(|&i| self.parts.comult[i].clone())
    }

    /// `Δ^(2)(u) = (Δ ⊗ id)Δ(u)`.
    pub fn coproduct3(&self, u: &Vector) -> Vector3 {
        self.coproduct(u).extend_linear(|Tensor(a, b)| {
            self.parts.comult[*a].map_keys(|Tensor(a1, a2)| Tensor3(*a1, *a2, *b))
        })
    }

    pub fn counit(&self, u: &Vector) -> Rational {
        u.pair(|&i| self.parts.counit[i].clone())
    }

    pub fn antipode(&self, u: &Vector) -> Vector {
        u.extend_linear(|&i| self.parts.antipode[i].clone())
    }

    /// Componentwise product in `H ⊗ H`.
    pub fn mul2(&self, u: &Vector2, v: &Vector2) -> Vector2 {
        crate::kernel::bilinear(u, v, |Tensor(a, b), Tensor(c, d)| {
            crate::kernel::tensor(&self.parts.mult[*a][*c], &self.parts.mult[*b][*d])
        })
    }

    /// Renders a vector with basis names.
    pub fn show(&self, v: &Vector) -> String {
        v.map_keys(|&i| Name(self.parts.basis[i].clone())).to_string()
    }

    pub fn show2(&self, v: &Vector2) -> String {
        v.map_keys(|Tensor(i, j)| Tensor(Name(self.parts.basis[*i].clone()), Name(self.parts.basis[*j].clone())))
            .to_string()
    }

    /// Every basis vector, for exhaustive suites.
    pub fn basis(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    pub fn is_grouplike(&self, v: &Vector) -> bool {
        !v.is_zero() && self.coproduct(v) == crate::kernel::tensor(v, v) && self.counit(v).is_one()
    }

    /// Whether `Δv = v⊗g + h⊗v`, i.e. `v ∈ P_{g,h}`.
    pub fn is_skew_primitive(&self, v: &Vector, g: &Vector, h: &Vector) -> bool {
        self.coproduct(v) == crate::kernel::tensor(v, g) + crate::kernel::tensor(h, v)
    }

    /// A basis of the primitive elements, the kernel of `v ↦ Δv − v⊗1 − 1⊗v`.
    pub fn primitives(&self) -> Vec<Vector> {
        let one = self.unit();
        let columns: Vec<Vector2> = (0..self.dim())
            .map(|i| {
                let v = self.e(i);
                &(&self.coproduct(&v) - &crate::kernel::tensor(&v, &one)) - &crate::kernel::tensor(&one, &v)
            })
            .collect();
        linalg::nullspace(&columns)
    }
}

impl fmt::Display for FinDimHopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, basis {})", self.name(), self.dim(), self.parts.basis.join(", "))
    }
}

/// A basis label used only for rendering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(pub String);

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn check_shape(p: &HopfParts) -> Result<()> {
    let n = p.basis.len();
    let bad = |what: &str| Err(Error::invalid(format!("{}: {what} has the wrong shape for dimension {n}", p.name)));
    if p.mult.len() != n || p.mult.iter().any(|r| r.len() != n) {
        return bad("mult");
    }
    if p.comult.len() != n {
        return bad("comult");
    }
    if p.counit.len() != n {
        return bad("counit");
    }
    if p.antipode.len() != n {
        return bad("antipode");
    }
    let out_of_range = p.unit.keys().any(|&k| k >= n)
        || p.mult.iter().flatten().chain(&p.antipode).any(|v| v.keys().any(|&k| k >= n))
        || p.comult.iter().any(|v| v.keys().any(|t| t.0 >= n || t.1 >= n));
    if out_of_range {
        return bad("an index");
    }
    Ok(())
}

fn range(n: usize, arity: usize) -> String {
    format!("all {} basis {}", n.pow(arity as u32), if arity == 1 { "elements" } else { "tuples" })
}

/// The Hopf axioms, checked on every basis tuple.
pub fn verify_hopf(h: &FinDimHopf) -> Report {
    let n = h.dim();
    let b = h.basis();
    let pairs: Vec<(usize, usize)> = b.iter().flat_map(|&i| b.iter().map(move |&j| (i, j))).collect();
    let triples: Vec<(usize, usize, usize)> =
        pairs.iter().flat_map(|&(i, j)| b.iter().map(move |&k| (i, j, k))).collect();
    let one = h.unit();
    let nm = |i: usize| h.parts.basis[i].clone();
    let mut report = Report::new(format!("Hopf axioms ({})", h.name()));

    report.push(check_all("associativity", range(n, 3), &triples, |&(i, j, k)| {
        let lhs = h.mul(h.mul_basis(i, j), &h.e(k));
        let rhs = h.mul(&h.e(i), h.mul_basis(j, k));
        (lhs != rhs).then(|| format!("a = {}, b = {}, c = {}: (ab)c = {}, a(bc) = {}", nm(i), nm(j), nm(k), h.show(&lhs), h.show(&rhs)))
    }));

    report.push(check_all("unit: 1a = a = a1", range(n, 1), &b, |&i| {
        let a = h.e(i);
        let l = h.mul(&one, &a);
        let r = h.mul(&a, &one);
        (l != a || r != a).then(|| format!("a = {}: 1a = {}, a1 = {}", nm(i), h.show(&l), h.show(&r)))
    }));

    report.push(check_all("coassociativity", range(n, 1), &b, |&i| {
        let d = &h.parts.comult[i];
        let lhs: Vector3 = d.extend_linear(|Tensor(a, c)| h.parts.comult[*a].map_keys(|Tensor(x, y)| Tensor3(*x, *y, *c)));
        let rhs: Vector3 = d.extend_linear(|Tensor(a, c)| h.parts.comult[*c].map_keys(|Tensor(x, y)| Tensor3(*a, *x, *y)));
        compare(|| format!("a = {}", nm(i)), &lhs, &rhs)
    }));

    report.push(check_all("counit: (ε⊗id)Δ = id = (id⊗ε)Δ", range(n, 1), &b, |&i| {
        let d = &h.parts.comult[i];
        let l: Vector = d.extend_linear(|Tensor(x, y)| LinComb::term(*y, h.parts.counit[*x].clone()));
        let r: Vector = d.extend_linear(|Tensor(x, y)| LinComb::term(*x, h.parts.counit[*y].clone()));
        let a = h.e(i);
        (l != a || r != a).then(|| format!("a = {}: (ε⊗id)Δa = {}, (id⊗ε)Δa = {}", nm(i), h.show(&l), h.show(&r)))
    }));

    report.push(check_all("bialgebra: Δ(ab) = Δ(a)Δ(b)", range(n, 2), &pairs, |&(i, j)| {
        let lhs = h.coproduct(h.mul_basis(i, j));
        let rhs = h.mul2(&h.parts.comult[i], &h.parts.comult[j]);
        (lhs != rhs).then(|| format!("a = {}, b = {}: Δ(ab) = {}; Δ(a)Δ(b) = {}", nm(i), nm(j), h.show2(&lhs), h.show2(&rhs)))
    }));

    report.push(check_all("bialgebra: ε(ab) = ε(a)ε(b)", range(n, 2), &pairs, |&(i, j)| {
        let lhs = h.counit(h.mul_basis(i, j));
        let rhs = &h.parts.counit[i] * &h.parts.counit[j];
        compare(|| format!("a = {}, b = {}", nm(i), nm(j)), &lhs, &rhs)
    }));

    let unit_ok = {
        let d1 = h.coproduct(&one);
        let expected = crate::kernel::tensor(&one, &one);
        let mut w = None;
        if d1 != expected {
            w = Some(format!("Δ(1) = {}", h.show2(&d1)));
        } else if !h.counit(&one).is_one() {
            w = Some(format!("ε(1) = {}", h.counit(&one)));
        }
        w
    };
    report.push(crate::report::single("bialgebra: Δ(1) = 1⊗1, ε(1) = 1", "unit", unit_ok));

    report.push(check_all("antipode: S(a1)a2 = ε(a)1 = a1S(a2)", range(n, 1), &b, |&i| {
        let d = &h.parts.comult[i];
        let expected = one.scale(&h.parts.counit[i]);
        let l: Vector = d.extend_linear(|Tensor(x, y)| h.mul(&h.parts.antipode[*x], &h.e(*y)));
        let r: Vector = d.extend_linear(|Tensor(x, y)| h.mul(&h.e(*x), &h.parts.antipode[*y]));
        compare(|| format!("S(a1)a2, a = {}", nm(i)), &h.show(&l), &h.show(&expected))
            .or_else(|| compare(|| format!("a1S(a2), a = {}", nm(i)), &h.show(&r), &h.show(&expected)))
    }));

    report
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Verifies the group axioms exhaustively.
    pub fn new(name: impl Into<String>, elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let n = elements.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
            return Err(Error::invalid(format!("{name}: malformed Cayley table")));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::invalid(format!("{name}: no identity element")))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::invalid(format!("{name}: {} has no inverse", elements[g])))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::invalid(format!(
                            "{name}: not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name,
            elements,
            table,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let elements = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("c{k}") }).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(format!("Z/{n}"), elements, table).expect("cyclic group")
    }

    /// The symmetric group on three letters, elements as permutations in
    /// one-line notation.
    pub fn s3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (p q)(i) = p(q(i))
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        FiniteGroup::new("S3", names.iter().map(|s| s.to_string()).collect(), table).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// The conjugation action of the group on itself, `Φ(h)k = hkh⁻¹`.
    pub fn conjugation(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|h| (0..self.order()).map(|k| self.mul(self.mul(h, k), self.inverse(h))).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

/// The group algebra: group elements are group-like, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> FinDimHopf {
    let n = g.order();
    let parts = HopfParts {
        name: format!("k[{}]", g.name),
        basis: g.elements.clone(),
        mult: (0..n).map(|a| (0..n).map(|b| LinComb::basis(g.mul(a, b))).collect()).collect(),
        unit: LinComb::basis(g.identity()),
        comult: (0..n).map(|a| LinComb::basis(Tensor(a, a))).collect(),
        counit: vec![Rational::one(); n],
        antipode: (0..n).map(|a| LinComb::basis(g.inverse(a))).collect(),
    };
    FinDimHopf::new(parts).expect("group algebras are Hopf algebras")
}

/// The tensor product Hopf algebra `A ⊗ B`, basis `a⊗b` at `i·dim B + j`.
pub fn tensor_hopf(a: &FinDimHopf, b: &FinDimHopf) -> FinDimHopf {
    let (na, nb) = (a.dim(), b.dim());
    let idx = |i: usize, j: usize| i * nb + j;
    let split = |k: usize| (k / nb, k % nb);
    let mut basis = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            basis.push(format!("{}⊗{}", a.basis_names()[i], b.basis_names()[j]));
        }
    }
    let pair = |u: &Vector, v: &Vector| -> Vector { crate::kernel::tensor(u, v).map_keys(|Tensor(i, j)| idx(*i, *j)) };
    let mut mult = vec![vec![LinComb::zero(); na * nb]; na * nb];
    for (p, row) in mult.iter_mut().enumerate() {
        for (q, cell) in row.iter_mut().enumerate() {
            let ((i, j), (k, l)) = (split(p), split(q));
            *cell = pair(a.mul_basis(i, k), b.mul_basis(j, l));
        }
    }
    let comult = (0..na * nb)
        .map(|p| {
            let (i, j) = split(p);
            crate::kernel::bilinear(&a.parts.comult[i], &b.parts.comult[j], |Tensor(a1, a2), Tensor(b1, b2)| {
                LinComb::basis(Tensor(idx(*a1, *b1), idx(*a2, *b2)))
            })
        })
        .collect();
    let parts = HopfParts {
        name: format!("{} ⊗ {}", a.name(), b.name()),
        basis,
        mult,
        unit: pair(&a.unit(), &b.unit()),
        comult,
        counit: (0..na * nb).map(|p| &a.parts.counit[split(p).0] * &b.parts.counit[split(p).1]).collect(),
        antipode: (0..na * nb)
            .map(|p| pair(&a.parts.antipode[split(p).0], &b.parts.antipode[split(p).1]))
            .collect(),
    };
    FinDimHopf::unchecked(parts)
}

// ---------------------------------------------------------------------------
// JSON

/// One coefficient of a structure tensor: inputs, outputs (basis names) and
/// a rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    #[serde(rename = "in")]
    pub inputs: Vec<String>,
    #[serde(rename = "out")]
    pub outputs: Vec<String>,
    pub num: JsonInt,
    #[serde(default = "json_one")]
    pub den: JsonInt,
}

fn json_one() -> JsonInt {
    JsonInt::Small(1)
}

impl Entry {
    pub fn new(inputs: &[&str], outputs: &[&str], c: &Rational) -> Self {
        Entry {
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            outputs: outputs.iter().map(|s| s.to_string()).collect(),
            num: c.numer().into(),
            den: c.denom().into(),
        }
    }

    pub fn coeff(&self) -> Result<Rational> {
        make_rational(&self.num, &self.den)
    }
}

/// Resolves basis names to indices.
pub struct Names<'a> {
    map: HashMap<&'a str, usize>,
    what: &'a str,
}

impl<'a> Names<'a> {
    pub fn new(basis: &'a [String], what: &'a str) -> Self {
        Names {
            map: basis.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect(),
            what,
        }
    }

    pub fn get(&self, name: &str) -> Result<usize> {
        self.map
            .get(name)
            .copied()
            .ok_or_else(|| Error::invalid(format!("unknown basis element {name:?} of {}", self.what)))
    }
}

fn arity(e: &Entry, i: usize, o: usize, what: &str) -> Result<()> {
    if e.inputs.len() != i || e.outputs.len() != o {
        return Err(Error::invalid(format!(
            "{what} entries need {i} inputs and {o} outputs, got {:?} -> {:?}",
            e.inputs, e.outputs
        )));
    }
    Ok(())
}

/// Linear map `V → W` from entries `in: [v], out: [w]`.
pub fn matrix_from_entries(entries: &[Entry], from: &Names, to: &Names, n_from: usize, what: &str) -> Result<Vec<Vector>> {
    let mut m = vec![LinComb::zero(); n_from];
    for e in entries {
        arity(e, 1, 1, what)?;
        m[from.get(&e.inputs[0])?].add_term(to.get(&e.outputs[0])?, e.coeff()?);
    }
    Ok(m)
}

/// Bilinear map `U × V → W` from entries `in: [u, v], out: [w]`.
pub fn bilinear_from_entries(
    entries: &[Entry],
    left: &Names,
    right: &Names,
    to: &Names,
    shape: (usize, usize),
    what: &str,
) -> Result<Vec<Vec<Vector>>> {
    let mut m = vec![vec![LinComb::zero(); shape.1]; shape.0];
    for e in entries {
        arity(e, 2, 1, what)?;
        m[left.get(&e.inputs[0])?][right.get(&e.inputs[1])?].add_term(to.get(&e.outputs[0])?, e.coeff()?);
    }
    Ok(m)
}

pub fn matrix_entries(m: &[Vector], from: &[String], to: &[String]) -> Vec<Entry> {
    let mut out = Vec::new();
    for (i, v) in m.iter().enumerate() {
        for (j, c) in v.iter() {
            out.push(Entry::new(&[&from[i]], &[&to[*j]], c));
        }
    }
    out
}

pub fn bilinear_entries(m: &[Vec<Vector>], left: &[String], right: &[String], to: &[String]) -> Vec<Entry> {
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            for (k, c) in v.iter() {
                out.push(Entry::new(&[&left[i], &right[j]], &[&to[*k]], c));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    pub name: String,
    pub basis: Vec<String>,
    pub unit: Vec<Entry>,
    pub mult: Vec<Entry>,
    pub comult: Vec<Entry>,
    pub counit: Vec<Entry>,
    pub antipode: Vec<Entry>,
}

impl HopfJson {
    pub fn to_parts(&self) -> Result<HopfParts> {
        let n = self.basis.len();
        let names = Names::new(&self.basis, &self.name);
        let mut unit = LinComb::zero();
        for e in &self.unit {
            arity(e, 0, 1, "unit")?;
            unit.add_term(names.get(&e.outputs[0])?, e.coeff()?);
        }
        let mult = bilinear_from_entries(&self.mult, &names, &names, &names, (n, n), "mult")?;
        let mut comult = vec![LinComb::zero(); n];
        for e in &self.comult {
            arity(e, 1, 2, "comult")?;
            comult[names.get(&e.inputs[0])?].add_term(Tensor(names.get(&e.outputs[0])?, names.get(&e.outputs[1])?), e.coeff()?);
        }
        let mut counit = vec![Rational::zero(); n];
        for e in &self.counit {
            arity(e, 1, 0, "counit")?;
            counit[names.get(&e.inputs[0])?] += e.coeff()?;
        }
        let antipode = matrix_from_entries(&self.antipode, &names, &names, n, "antipode")?;
        let parts = HopfParts {
            name: self.name.clone(),
            basis: self.basis.clone(),
            mult,
            unit,
            comult,
            counit,
            antipode,
        };
        check_shape(&parts)?;
        Ok(parts)
    }

    pub fn from_parts(p: &HopfParts) -> Self {
        let b = &p.basis;
        let mut unit = Vec::new();
        for (i, c) in p.unit.iter() {
            unit.push(Entry::new(&[], &[&b[*i]], c));
        }
        let mut comult = Vec::new();
        for (i, v) in p.comult.iter().enumerate() {
            for (Tensor(j, k), c) in v.iter() {
                comult.push(Entry::new(&[&b[i]], &[&b[*j], &b[*k]], c));
            }
        }
        let counit = p
            .counit
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Entry::new(&[&b[i]], &[], c))
            .collect();
        HopfJson {
            name: p.name.clone(),
            basis: b.clone(),
            unit,
            mult: bilinear_entries(&p.mult, b, b, b),
            comult,
            counit,
            antipode: matrix_entries(&p.antipode, b, b),
        }
    }
}

impl FinDimHopf {
    pub fn to_json(&self) -> HopfJson {
        HopfJson::from_parts(&self.parts)
    }

    /// Loads without verifying, so that broken files can be reported on.
    pub fn load_unchecked(path: impl AsRef<Path>) -> Result<Self> {
        let j: HopfJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        Ok(FinDimHopf::unchecked(j.to_parts()?))
    }
}

/// A finite group as JSON: element names and the Cayley table by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl GroupJson {
    pub fn to_group(&self) -> Result<FiniteGroup> {
        let names = Names::new(&self.elements, &self.name);
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|s| names.get(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::new(self.name.clone(), self.elements.clone(), table)
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson {
            name: g.name.clone(),
            elements: g.elements.clone(),
            table: g
                .table
                .iter()
                .map(|row| row.iter().map(|&k| g.elements[k].clone()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebras_are_hopf() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::s3()] {
            let h = group_algebra(&g);
            assert!(verify_hopf(&h).pass);
            assert!(h.is_cocommutative());
            assert_eq!(h.is_commutative(), g.is_abelian());
            for i in 0..h.dim() {
                assert!(h.is_grouplike(&h.e(i)));
            }
            assert!(h.primitives().is_empty());
        }
        assert!(!FiniteGroup::s3().is_abelian());
    }

    #[test]
    fn s3_multiplication() {
        let g = FiniteGroup::s3();
        let i = |s: &str| g.index_of(s).unwrap();
        assert_eq!(g.mul(i("(12)"), i("(12)")), g.identity());
        assert_eq!(g.inverse(i("(123)")), i("(132)"));
        // (12)(23) composes right to left: 1→1→2, 2→3→3, 3→2→1, i.e. (123)
        assert_eq!(g.mul(i("(12)"), i("(23)")), i("(123)"));
    }

    #[test]
    fn bad_group_tables_are_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::new("bad", names.clone(), vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::new("bad", names, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let h = group_algebra(&FiniteGroup::s3());
        let j = h.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: HopfJson = serde_json::from_str(&text).unwrap();
        assert_eq!(FinDimHopf::new(back.to_parts().unwrap()).unwrap(), h);
        let g = GroupJson::from_group(&FiniteGroup::s3());
        assert_eq!(g.to_group().unwrap(), FiniteGroup::s3());
    }

    #[test]
    fn corrupted_antipode_is_rejected() {
        let h = group_algebra(&FiniteGroup::cyclic(3));
        let mut p = h.into_parts();
        p.antipode[1] = LinComb::basis(1);
        let bad = FinDimHopf::unchecked(p.clone());
        let report = verify_hopf(&bad);
        assert!(!report.pass);
        assert_eq!(report.failures().count(), 1);
        assert!(report.failures().next().unwrap().name.starts_with("antipode"));
        assert!(FinDimHopf::new(p).is_err());
    }

    #[test]
    fn tensor_product_of_group_algebras() {
        let z2 = group_algebra(&FiniteGroup::cyclic(2));
        let t = tensor_hopf(&z2, &z2);
        assert_eq!(t.dim(), 4);
        assert!(verify_hopf(&t).pass);
        assert!(t.is_commutative() && t.is_cocommutative());
    }
}
