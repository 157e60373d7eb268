//! Post-Hopf products on finite-dimensional Hopf algebras, Sweedler's
//! four-dimensional algebra and its family `▷_a`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::hopf::{bilinear_entries, bilinear_from_entries, Entry, FinDimHopf, HopfJson, HopfParts, Names, Vector};
use crate::error::Result;
use crate::kernel::{int, tensor, LinComb, Rational, Tensor};
use crate::linalg::{self, Solution};
use crate::report::{check_all, compare, single, Report};

/// `table[x][y] = e_x ▷ e_y`.
pub type PostTable = Vec<Vec<Vector>>;

/// Bilinear extension of a product table.
pub fn apply_table(table: &PostTable, u: &Vector, v: &Vector) -> Vector {
    crate::kernel::bilinear(u, v, |&i, &j| table[i][j].clone())
}

/// Sweedler's algebra: basis `1, g, x, gx` with `g² = 1`, `x² = 0`,
/// `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(g) = g`, `S(x) = −gx`.
pub fn h4() -> FinDimHopf {
    let (one, g, x, gx) = (0usize, 1usize, 2usize, 3usize);
    let e = |i: usize| -> Vector { LinComb::basis(i) };
    let neg = |i: usize| -> Vector { LinComb::term(i, -Rational::one()) };
    let z = LinComb::zero;
    let mult = vec![
        vec![e(one), e(g), e(x), e(gx)],
        vec![e(g), e(one), e(gx), e(x)],
        vec![e(x), neg(gx), z(), z()],
        vec![e(gx), neg(x), z(), z()],
    ];
    let t = |a: usize, b: usize| LinComb::basis(Tensor(a, b));
    let comult = vec![t(one, one), t(g, g), t(x, one) + t(g, x), t(gx, g) + t(one, gx)];
    let parts = HopfParts {
        name: "H4".into(),
        basis: ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit: e(one),
        comult,
        counit: vec![int(1), int(1), int(0), int(0)],
        antipode: vec![e(one), e(g), neg(gx), e(x)],
    };
    FinDimHopf::new(parts).expect("Sweedler's algebra is a Hopf algebra")
}

/// The table of `▷_a` on Sweedler's algebra:
///
/// ```text
///  ▷_a | 1   g   x    gx
///  1   | 1   g   x    gx
///  g   | 1   g   −x   −gx
///  x   | 0   0   ax   a·gx
///  gx  | 0   0   ax   a·gx
/// ```
pub fn h4_post(a: &Rational) -> PostTable {
    let e = |i: usize| -> Vector { LinComb::basis(i) };
    let s = |i: usize, c: Rational| -> Vector { LinComb::term(i, c) };
    let z = LinComb::zero;
    vec![
        vec![e(0), e(1), e(2), e(3)],
        vec![e(0), e(1), s(2, -Rational::one()), s(3, -Rational::one())],
        vec![z(), z(), s(2, a.clone()), s(3, a.clone())],
        vec![z(), z(), s(2, a.clone()), s(3, a.clone())],
    ]
}

/// `(H4, ▷_a)`.
pub fn sweedler_h4(a: &Rational) -> (FinDimHopf, PostTable) {
    (h4(), h4_post(a))
}

/// The trivial post-Hopf product `x ▷ y = ε(x)y`.
pub fn trivial_post(h: &FinDimHopf) -> PostTable {
    let n = h.dim();
    (0..n)
        .map(|x| (0..n).map(|y| h.e(y).scale(&h.counit(&h.e(x)))).collect())
        .collect()
}

/// Solves for the convolution inverse `β` of `α(x) = x ▷ −`, i.e.
/// `α(x₁)β(x₂) = ε(x)id = β(x₁)α(x₂)`, by exact linear algebra.
/// Returns `None` if no inverse exists.
pub fn convolution_inverse(h: &FinDimHopf, table: &PostTable) -> Option<PostTable> {
    let n = h.dim();
    // unknown (x, y, z) is the coefficient of e_z in β(e_x)(e_y)
    let var = |x: usize, y: usize, z: usize| (x * n + y) * n + z;
    let mut eqs = Vec::new();
    for x in 0..n {
        let dx = &h.parts().comult[x];
        let eps = &h.parts().counit[x];
        for y in 0..n {
            for w in 0..n {
                let rhs = if y == w { eps.clone() } else { Rational::zero() };
                // Σ c α(x1)(β(x2) y), coefficient of e_w
                let mut ab: LinComb<usize> = LinComb::zero();
                // Σ c β(x1)(α(x2) y), coefficient of e_w
                let mut ba: LinComb<usize> = LinComb::zero();
                for (Tensor(x1, x2), c) in dx.iter() {
                    for z in 0..n {
                        let k = table[*x1][z].coeff(&w);
                        if !k.is_zero() {
                            ab.add_term(var(*x2, y, z), c * &k);
                        }
                    }
                    for (z, k) in table[*x2][y].iter() {
                        ba.add_term(var(*x1, *z, w), c * k);
                    }
                }
                eqs.push((ab, rhs.clone()));
                eqs.push((ba, rhs));
            }
        }
    }
    let sol = match linalg::solve(&eqs, n * n * n) {
        Solution::Unique(s) | Solution::Underdetermined(s) => s,
        Solution::Inconsistent => return None,
    };
    Some(
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (0..n).map(|z| (z, sol[var(x, y, z)].clone())).collect())
                    .collect()
            })
            .collect(),
    )
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

fn all_triples(n: usize) -> Vec<(usize, usize, usize)> {
    all_pairs(n).into_iter().flat_map(|(i, j)| (0..n).map(move |k| (i, j, k))).collect()
}

/// The post-Hopf axioms for `table` on `h`, with `inverse` as the
/// convolution-inverse witness in the invertibility axiom.
pub fn verify_post_hopf_findim(h: &FinDimHopf, table: &PostTable, inverse: &PostTable) -> Report {
    let n = h.dim();
    let pairs = all_pairs(n);
    let triples = all_triples(n);
    let b = h.basis();
    let tri = |u: &Vector, v: &Vector| apply_table(table, u, v);
    let nm = |i: usize| h.basis_names()[i].clone();
    let range2 = format!("all {} basis pairs", n * n);
    let range3 = format!("all {} basis triples", n * n * n);
    let mut report = Report::new(format!("post-Hopf axioms ({})", h.name()));

    report.push(check_all("Post-2: x▷(yz) = (x1▷y)(x2▷z)", range3.clone(), &triples, |&(x, y, z)| {
        let lhs = tri(&h.e(x), h.mul_basis(y, z));
        let rhs: Vector = h.parts().comult[x]
            .extend_linear(|Tensor(x1, x2)| h.mul(&table[*x1][y], &table[*x2][z]));
        compare(|| format!("x = {}, y = {}, z = {}", nm(x), nm(y), nm(z)), &h.show(&lhs), &h.show(&rhs))
    }));

    report.push(check_all("Post-4: x▷(y▷z) = (x1(x2▷y))▷z", range3, &triples, |&(x, y, z)| {
        let lhs = tri(&h.e(x), &table[y][z]);
        let left: Vector = h.parts().comult[x].extend_linear(|Tensor(x1, x2)| h.mul(&h.e(*x1), &table[*x2][y]));
        let rhs = tri(&left, &h.e(z));
        compare(|| format!("x = {}, y = {}, z = {}", nm(x), nm(y), nm(z)), &h.show(&lhs), &h.show(&rhs))
    }));

    report.push(check_all("coalgebra map: Δ(x▷y) = (x1▷y1)⊗(x2▷y2)", range2.clone(), &pairs, |&(x, y)| {
        let lhs = h.coproduct(&table[x][y]);
        let rhs = crate::kernel::bilinear(&h.parts().comult[x], &h.parts().comult[y], |Tensor(x1, x2), Tensor(y1, y2)| {
            tensor(&table[*x1][*y1], &table[*x2][*y2])
        });
        compare(|| format!("x = {}, y = {}", nm(x), nm(y)), &h.show2(&lhs), &h.show2(&rhs))
    }));

    report.push(check_all("coalgebra map: ε(x▷y) = ε(x)ε(y)", range2.clone(), &pairs, |&(x, y)| {
        let lhs = h.counit(&table[x][y]);
        let rhs = h.counit(&h.e(x)) * h.counit(&h.e(y));
        compare(|| format!("x = {}, y = {}", nm(x), nm(y)), &lhs, &rhs)
    }));

    report.push(check_all(
        "Post-con: α(x1)β(x2) = β(x1)α(x2) = ε(x)id",
        range2.clone(),
        &pairs,
        |&(x, y)| {
            let expected = h.e(y).scale(&h.counit(&h.e(x)));
            let mut ab = LinComb::zero();
            let mut ba = LinComb::zero();
            for (Tensor(x1, x2), c) in h.parts().comult[x].iter() {
                ab.add_scaled(&tri(&h.e(*x1), &inverse[*x2][y]), c);
                ba.add_scaled(&apply_table(inverse, &h.e(*x1), &table[*x2][y]), c);
            }
            compare(|| format!("α(x1)β(x2), x = {}, y = {}", nm(x), nm(y)), &h.show(&ab), &h.show(&expected))
                .or_else(|| compare(|| format!("β(x1)α(x2), x = {}, y = {}", nm(x), nm(y)), &h.show(&ba), &h.show(&expected)))
        },
    ));

    report.push(check_all("Post-1: x▷1 = ε(x)1", format!("all {n} basis elements"), &b, |&x| {
        let lhs = tri(&h.e(x), &h.unit());
        let rhs = h.unit().scale(&h.counit(&h.e(x)));
        compare(|| format!("x = {}", nm(x)), &h.show(&lhs), &h.show(&rhs))
    }));

    report.push(check_all("Post-3: 1▷x = x", format!("all {n} basis elements"), &b, |&x| {
        let lhs = tri(&h.unit(), &h.e(x));
        compare(|| format!("x = {}", nm(x)), &h.show(&lhs), &h.show(&h.e(x)))
    }));

    report.push(check_all("Post-5: S(x▷y) = x▷S(y)", range2, &pairs, |&(x, y)| {
        let lhs = h.antipode(&table[x][y]);
        let rhs = tri(&h.e(x), &h.antipode(&h.e(y)));
        compare(|| format!("x = {}, y = {}", nm(x), nm(y)), &h.show(&lhs), &h.show(&rhs))
    }));

    report
}

/// Post-Hopf axioms with the convolution inverse solved for rather than supplied.
pub fn verify_post_hopf_solved(h: &FinDimHopf, table: &PostTable) -> Report {
    match convolution_inverse(h, table) {
        Some(inv) => verify_post_hopf_findim(h, table, &inv),
        None => {
            let mut report = verify_post_hopf_findim(h, table, &trivial_post(h));
            for r in report.identities.iter_mut().filter(|r| r.name.starts_with("Post-con")) {
                r.pass = false;
                r.witness = Some("α has no convolution inverse (the linear system is inconsistent)".into());
            }
            report.pass = report.identities.iter().all(|r| r.pass);
            report
        }
    }
}

/// Whether `f: H → H′` is a bijective Hopf algebra map with
/// `f(x ▷ y) = f(x) ▷′ f(y)`.
pub fn check_posthopf_iso(f: &[Vector], src: (&FinDimHopf, &PostTable), dst: (&FinDimHopf, &PostTable)) -> Report {
    let (h, t) = src;
    let (h2, t2) = dst;
    let n = h.dim();
    let pairs = all_pairs(n);
    let b = h.basis();
    let map = |v: &Vector| -> Vector { v.extend_linear(|&i| f[i].clone()) };
    let map2 = |v: &super::hopf::Vector2| v.extend_linear(|Tensor(i, j)| tensor(&f[*i], &f[*j]));
    let nm = |i: usize| h.basis_names()[i].clone();
    let range2 = format!("all {} basis pairs", n * n);
    let range1 = format!("all {n} basis elements");
    let mut report = Report::new(format!("post-Hopf isomorphism {} -> {}", h.name(), h2.name()));

    let shape = (f.len() == n && h2.dim() == n).then_some(()).map_or_else(
        || Some(format!("map has {} columns, dimensions {} and {}", f.len(), n, h2.dim())),
        |_| None,
    );
    report.push(single("dimensions agree", "shape", shape.clone()));
    if shape.is_some() {
        return report;
    }

    report.push(single(
        "bijective",
        "rank",
        (!linalg::is_invertible(f)).then(|| format!("rank {} < {n}", linalg::rank(f))),
    ));
    report.push(single("f(1) = 1", "unit", compare(String::new, &h2.show(&map(&h.unit())), &h2.show(&h2.unit()))));
    report.push(check_all("f(xy) = f(x)f(y)", range2.clone(), &pairs, |&(x, y)| {
        let lhs = map(h.mul_basis(x, y));
        let rhs = h2.mul(&f[x], &f[y]);
        compare(|| format!("x = {}, y = {}", nm(x), nm(y)), &h2.show(&lhs), &h2.show(&rhs))
    }));
    report.push(check_all("Δf = (f⊗f)Δ, εf = ε", range1.clone(), &b, |&x| {
        let lhs = h2.coproduct(&f[x]);
        let rhs = map2(&h.parts().comult[x]);
        compare(|| format!("x = {}", nm(x)), &h2.show2(&lhs), &h2.show2(&rhs))
            .or_else(|| compare(|| format!("ε, x = {}", nm(x)), &h2.counit(&f[x]), &h.counit(&h.e(x))))
    }));
    report.push(check_all("fS = S′f", range1, &b, |&x| {
        let lhs = map(&h.antipode(&h.e(x)));
        let rhs = h2.antipode(&f[x]);
        compare(|| format!("x = {}", nm(x)), &h2.show(&lhs), &h2.show(&rhs))
    }));
    report.push(check_all("f(x▷y) = f(x)▷′f(y)", range2, &pairs, |&(x, y)| {
        let lhs = map(&t[x][y]);
        let rhs = apply_table(t2, &f[x], &f[y]);
        compare(|| format!("x = {}, y = {}", nm(x), nm(y)), &h2.show(&lhs), &h2.show(&rhs))
    }));
    report
}

/// The map `g ↦ g, x ↦ c·x` on Sweedler's algebra.
pub fn h4_scaling(c: &Rational) -> Vec<Vector> {
    vec![
        LinComb::basis(0),
        LinComb::basis(1),
        LinComb::term(2, c.clone()),
        LinComb::term(3, c.clone()),
    ]
}

/// A finite-dimensional post-Hopf algebra file: a Hopf algebra plus
/// optional post-product and inverse tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindimJson {
    pub hopf: HopfJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub post: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub post_inverse: Option<Vec<Entry>>,
}

impl FindimJson {
    pub fn new(h: &FinDimHopf, post: Option<&PostTable>, inverse: Option<&PostTable>) -> Self {
        let b = h.basis_names();
        FindimJson {
            hopf: h.to_json(),
            post: post.map(|t| bilinear_entries(t, b, b, b)),
            post_inverse: inverse.map(|t| bilinear_entries(t, b, b, b)),
        }
    }

    /// The Hopf algebra (unverified) and the tables.
    pub fn load(&self) -> Result<(FinDimHopf, Option<PostTable>, Option<PostTable>)> {
        let h = FinDimHopf::unchecked(self.hopf.to_parts()?);
        let names = Names::new(h.basis_names(), h.name());
        let n = h.dim();
        let table = |e: &Option<Vec<Entry>>| -> Result<Option<PostTable>> {
            e.as_ref()
                .map(|e| bilinear_from_entries(e, &names, &names, &names, (n, n), "post"))
                .transpose()
        };
        let post = table(&self.post)?;
        let inv = table(&self.post_inverse)?;
        Ok((h, post, inv))
    }
}

/// Verifies a loaded findim file: Hopf axioms, and post-Hopf axioms if a
/// post table is present (with the given inverse, or a solved one).
pub fn verify_findim_file(input: &FindimJson) -> Result<Report> {
    let (h, post, inv) = input.load()?;
    let mut report = Report::new(format!("finite-dimensional structure {}", h.name()));
    let hopf = super::hopf::verify_hopf(&h);
    let hopf_ok = hopf.pass;
    report.absorb(hopf);
    if let (Some(t), true) = (post, hopf_ok) {
        let r = match inv {
            Some(inv) => verify_post_hopf_findim(&h, &t, &inv),
            None => verify_post_hopf_solved(&h, &t),
        };
        report.absorb(r);
    }
    Ok(report)
}
