//! Matched pairs from relative Rota-Baxter operators, the double
//! crossproduct `K_T ⋈ H`, and the twist onto the smash product.

use super::hopf::{verify_hopf, FinDimHopf, HopfParts, Vector};
use super::rrb::{
    adt_module_bialgebra_check, apply_action, descendent_check, embed, graph_check, induced_post_check,
    module_characterization_check, pair_index, restriction_check, smash_parts, tensor_coalgebra, verify_action,
    verify_rrb, Action, RelativeRb,
};
use crate::error::{Error, Result};
use crate::kernel::{bilinear, tensor, LinComb, Tensor};
use crate::linalg;
use crate::report::{check_all, compare, single, Report};

/// `right[x][a] = e_x ↼ e_a`, valued in `H`.
pub type RightAction = Vec<Vec<Vector>>;

fn pairs(n: usize, m: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect()
}

fn triples(n: usize, m: usize, p: usize) -> Vec<(usize, usize, usize)> {
    pairs(n, m).into_iter().flat_map(|(i, j)| (0..p).map(move |k| (i, j, k))).collect()
}

/// `x↼a = S_H(T(x₁⇀a₁))x₂T(a₂)`.
pub fn right_action(r: &RelativeRb) -> RightAction {
    let (h, k) = (&r.h, &r.k);
    (0..h.dim())
        .map(|x| {
            (0..k.dim())
                .map(|a| {
                    bilinear(&h.parts().comult[x], &k.parts().comult[a], |Tensor(x1, x2), Tensor(a1, a2)| {
                        let s = h.antipode(&r.apply_t(&r.act[*x1][*a1]));
                        h.mul3(&s, &h.e(*x2), &r.t[*a2])
                    })
                })
                .collect()
        })
        .collect()
}

/// The matched-pair axioms for `(H, K, ⇀, ↼)` and the module-coalgebra
/// laws of both actions. `k` carries the product the pair is built on.
pub fn verify_matched_pair(h: &FinDimHopf, k: &FinDimHopf, left: &Action, right: &RightAction) -> Report {
    let mut report = Report::new(format!("matched pair ({}, {})", h.name(), k.name()));
    let (nh, nk) = (h.dim(), k.dim());
    let hn = |i: usize| h.basis_names()[i].clone();
    let kn = |i: usize| k.basis_names()[i].clone();
    let la = |x: &Vector, a: &Vector| apply_action(left, x, a);
    let ra = |x: &Vector, a: &Vector| apply_action(right, x, a);

    report.push(check_all(
        "Mat-1: x⇀(ab) = (x1⇀a1)((x2↼a2)⇀b)",
        format!("all {} triples", nh * nk * nk),
        &triples(nh, nk, nk),
        |&(x, a, b)| {
            let lhs = la(&h.e(x), k.mul_basis(a, b));
            let rhs = bilinear(&h.parts().comult[x], &k.parts().comult[a], |Tensor(x1, x2), Tensor(a1, a2)| {
                k.mul(&left[*x1][*a1], &la(&right[*x2][*a2], &k.e(b)))
            });
            compare(|| format!("x = {}, a = {}, b = {}", hn(x), kn(a), kn(b)), &k.show(&lhs), &k.show(&rhs))
        },
    ));
    report.push(check_all("Mat-2: x⇀1 = ε(x)1", format!("all {nh} elements"), &h.basis(), |&x| {
        let lhs = la(&h.e(x), &k.unit());
        compare(|| format!("x = {}", hn(x)), &k.show(&lhs), &k.show(&k.unit().scale(&h.counit(&h.e(x)))))
    }));
    report.push(check_all(
        "Mat-3: (xy)↼a = (x↼(y1⇀a1))(y2↼a2)",
        format!("all {} triples", nh * nh * nk),
        &triples(nh, nh, nk),
        |&(x, y, a)| {
            let lhs = ra(h.mul_basis(x, y), &k.e(a));
            let rhs = bilinear(&h.parts().comult[y], &k.parts().comult[a], |Tensor(y1, y2), Tensor(a1, a2)| {
                h.mul(&ra(&h.e(x), &left[*y1][*a1]), &right[*y2][*a2])
            });
            compare(|| format!("x = {}, y = {}, a = {}", hn(x), hn(y), kn(a)), &h.show(&lhs), &h.show(&rhs))
        },
    ));
    report.push(check_all("Mat-4: 1↼a = ε(a)1", format!("all {nk} elements"), &k.basis(), |&a| {
        let lhs = ra(&h.unit(), &k.e(a));
        compare(|| format!("a = {}", kn(a)), &h.show(&lhs), &h.show(&h.unit().scale(&k.counit(&k.e(a)))))
    }));
    report.push(check_all(
        "Mat-5: (x1↼a1)⊗(x2⇀a2) = (x2↼a2)⊗(x1⇀a1)",
        format!("all {} pairs", nh * nk),
        &pairs(nh, nk),
        |&(x, a)| {
            let mut lhs = LinComb::zero();
            let mut rhs = LinComb::zero();
            for (Tensor(x1, x2), c) in h.parts().comult[x].iter() {
                for (Tensor(a1, a2), d) in k.parts().comult[a].iter() {
                    let cd = c * d;
                    lhs.add_scaled(&tensor(&right[*x1][*a1], &left[*x2][*a2]), &cd);
                    rhs.add_scaled(&tensor(&right[*x2][*a2], &left[*x1][*a1]), &cd);
                }
            }
            compare(|| format!("x = {}, a = {}", hn(x), kn(a)), &lhs, &rhs)
        },
    ));

    report.absorb(verify_action(h, k, left));

    let mut rm = Report::new(format!("{} acting on {} from the right", k.name(), h.name()));
    rm.push(check_all(
        "module law: x↼(ab) = (x↼a)↼b",
        format!("all {} triples", nh * nk * nk),
        &triples(nh, nk, nk),
        |&(x, a, b)| {
            let lhs = ra(&h.e(x), k.mul_basis(a, b));
            let rhs = ra(&right[x][a], &k.e(b));
            compare(|| format!("x = {}, a = {}, b = {}", hn(x), kn(a), kn(b)), &h.show(&lhs), &h.show(&rhs))
        },
    ));
    rm.push(check_all("unit: x↼1 = x", format!("all {nh} elements"), &h.basis(), |&x| {
        let lhs = ra(&h.e(x), &k.unit());
        compare(|| format!("x = {}", hn(x)), &h.show(&lhs), &h.show(&h.e(x)))
    }));
    rm.push(check_all(
        "coalgebra map: Δ(x↼a) = (x1↼a1)⊗(x2↼a2), ε(x↼a) = ε(x)ε(a)",
        format!("all {} pairs", nh * nk),
        &pairs(nh, nk),
        |&(x, a)| {
            let lhs = h.coproduct(&right[x][a]);
            let rhs = bilinear(&h.parts().comult[x], &k.parts().comult[a], |Tensor(x1, x2), Tensor(a1, a2)| {
                tensor(&right[*x1][*a1], &right[*x2][*a2])
            });
            compare(|| format!("Δ, x = {}, a = {}", hn(x), kn(a)), &h.show2(&lhs), &h.show2(&rhs)).or_else(|| {
                compare(
                    || format!("ε, x = {}, a = {}", hn(x), kn(a)),
                    &h.counit(&right[x][a]),
                    &(h.counit(&h.e(x)) * k.counit(&k.e(a))),
                )
            })
        },
    ));
    report.absorb(rm);
    report
}

/// The right action together with the matched-pair report for
/// `(H, K_T, ⇀, ↼)`.
pub fn matched_pair_from_rrb(r: &RelativeRb) -> Result<(RightAction, Report)> {
    for alg in [&r.h, &r.k] {
        if !alg.is_cocommutative() {
            return Err(Error::NotCocommutative(alg.name().to_string()));
        }
    }
    let right = right_action(r);
    let kt = r.descendent_unchecked();
    let report = verify_matched_pair(&r.h, &kt, &r.act, &right);
    Ok((right, report))
}

/// Data of `K ⋈ H` without verification: basis `a⋈x` at `a·dim H + x`.
pub fn double_crossproduct_parts(k: &FinDimHopf, h: &FinDimHopf, left: &Action, right: &RightAction) -> HopfParts {
    let (nk, nh) = (k.dim(), h.dim());
    let mut mult = vec![vec![LinComb::zero(); nk * nh]; nk * nh];
    for (a, x) in pairs(nk, nh) {
        for (b, y) in pairs(nk, nh) {
            // (a⋈x)(b⋈y) = a(x1⇀b1) ⋈ (x2↼b2)y
            let v = bilinear(&h.parts().comult[x], &k.parts().comult[b], |Tensor(x1, x2), Tensor(b1, b2)| {
                embed(nh, &k.mul(&k.e(a), &left[*x1][*b1]), &h.mul(&right[*x2][*b2], &h.e(y)))
            });
            mult[pair_index(nh, a, x)][pair_index(nh, b, y)] = v;
        }
    }
    let antipode = pairs(nk, nh)
        .into_iter()
        .map(|(a, x)| {
            // S(a⋈x) = (S(x2)⇀S(a2)) ⋈ (S(x1)↼S(a1))
            bilinear(&h.parts().comult[x], &k.parts().comult[a], |Tensor(x1, x2), Tensor(a1, a2)| {
                embed(
                    nh,
                    &apply_action(left, &h.parts().antipode[*x2], &k.parts().antipode[*a2]),
                    &apply_action(right, &h.parts().antipode[*x1], &k.parts().antipode[*a1]),
                )
            })
        })
        .collect();
    let (comult, counit) = tensor_coalgebra(k, h);
    let mut basis = Vec::with_capacity(nk * nh);
    for a in k.basis_names() {
        for x in h.basis_names() {
            basis.push(format!("{a}⋈{x}"));
        }
    }
    HopfParts {
        name: format!("{} ⋈ {}", k.name(), h.name()),
        basis,
        mult,
        unit: embed(nh, &k.unit(), &h.unit()),
        comult,
        counit,
        antipode,
    }
}

/// `K ⋈ H`, after checking the matched-pair axioms; verified Hopf.
pub fn double_crossproduct(h: &FinDimHopf, k: &FinDimHopf, left: &Action, right: &RightAction) -> Result<FinDimHopf> {
    let mp = verify_matched_pair(h, k, left, right);
    if let Some(f) = mp.failures().next() {
        return Err(Error::MatchedPairViolation(format!(
            "{}{}",
            f.name,
            f.witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default()
        )));
    }
    FinDimHopf::new(double_crossproduct_parts(k, h, left, right))
}

/// `Φ_T(a⋈x) = a₁ # T(a₂)x` as columns.
pub fn twist_map(r: &RelativeRb) -> Vec<Vector> {
    let (h, k) = (&r.h, &r.k);
    let nh = h.dim();
    pairs(k.dim(), nh)
        .into_iter()
        .map(|(a, x)| {
            k.parts().comult[a].extend_linear(|Tensor(a1, a2)| embed(nh, &k.e(*a1), &h.mul(&r.t[*a2], &h.e(x))))
        })
        .collect()
}

/// `Φ_T⁻¹(a#x) = a₁ ⋈ S_H(T(a₂))x` as columns.
pub fn twist_inverse_map(r: &RelativeRb) -> Vec<Vector> {
    let (h, k) = (&r.h, &r.k);
    let nh = h.dim();
    pairs(k.dim(), nh)
        .into_iter()
        .map(|(a, x)| {
            k.parts().comult[a]
                .extend_linear(|Tensor(a1, a2)| embed(nh, &k.e(*a1), &h.mul(&h.antipode(&r.t[*a2]), &h.e(x))))
        })
        .collect()
}

/// `Φ_T: K_T ⋈ H → K ⋊ H` is a Hopf isomorphism with the stated inverse,
/// and `(a⋈1)(1⋈x) = a⋈x` in `K_T ⋈ H`.
pub fn twist_check(r: &RelativeRb, dcp: &FinDimHopf) -> Report {
    let mut report = Report::new("twist onto the smash product");
    let smash = FinDimHopf::unchecked(smash_parts(&r.k, &r.h, &r.act));
    let phi = twist_map(r);
    let inv = twist_inverse_map(r);
    let n = dcp.dim();
    let nh = r.h.dim();
    let map = |cols: &[Vector], v: &Vector| v.extend_linear(|&i| cols[i].clone());
    let name = |i: usize| dcp.basis_names()[i].clone();
    let all: Vec<usize> = (0..n).collect();
    let range1 = format!("all {n} basis elements");

    report.push(single("Φ_T bijective", "rank", (!linalg::is_invertible(&phi)).then(|| format!("rank {} < {n}", linalg::rank(&phi)))));
    report.push(check_all("Φ_T⁻¹Φ_T = id, Φ_TΦ_T⁻¹ = id", range1.clone(), &all, |&i| {
        let e = LinComb::basis(i);
        compare(|| format!("Φ⁻¹Φ, u = {}", name(i)), &dcp.show(&map(&inv, &phi[i])), &dcp.show(&e))
            .or_else(|| compare(|| format!("ΦΦ⁻¹, u = {}", smash.basis_names()[i]), &smash.show(&map(&phi, &inv[i])), &smash.show(&e)))
    }));
    report.push(single(
        "Φ_T(1) = 1",
        "unit",
        compare(String::new, &smash.show(&map(&phi, &dcp.unit())), &smash.show(&smash.unit())),
    ));
    report.push(check_all("Φ_T(uv) = Φ_T(u)Φ_T(v)", format!("all {} pairs", n * n), &pairs(n, n), |&(u, v)| {
        let lhs = map(&phi, dcp.mul_basis(u, v));
        let rhs = smash.mul(&phi[u], &phi[v]);
        compare(|| format!("u = {}, v = {}", name(u), name(v)), &smash.show(&lhs), &smash.show(&rhs))
    }));
    report.push(check_all("ΔΦ_T = (Φ_T⊗Φ_T)Δ, εΦ_T = ε", range1.clone(), &all, |&u| {
        let lhs = smash.coproduct(&phi[u]);
        let rhs = dcp.parts().comult[u].extend_linear(|Tensor(a, b)| tensor(&phi[*a], &phi[*b]));
        compare(|| format!("u = {}", name(u)), &smash.show2(&lhs), &smash.show2(&rhs))
            .or_else(|| compare(|| format!("ε, u = {}", name(u)), &smash.counit(&phi[u]), &dcp.counit(&dcp.e(u))))
    }));
    report.push(check_all("Φ_T S = S Φ_T", range1, &all, |&u| {
        let lhs = map(&phi, &dcp.antipode(&dcp.e(u)));
        let rhs = smash.antipode(&phi[u]);
        compare(|| format!("u = {}", name(u)), &smash.show(&lhs), &smash.show(&rhs))
    }));
    let (nk, one_k, one_h) = (r.k.dim(), r.k.unit(), r.h.unit());
    report.push(check_all(
        "(a⋈1)(1⋈x) = a⋈x",
        format!("all {} pairs", nk * nh),
        &pairs(nk, nh),
        |&(a, x)| {
            let lhs = dcp.mul(&embed(nh, &r.k.e(a), &one_h), &embed(nh, &one_k, &r.h.e(x)));
            let rhs = LinComb::basis(pair_index(nh, a, x));
            compare(|| format!("a = {}, x = {}", r.k.basis_names()[a], r.h.basis_names()[x]), &dcp.show(&lhs), &dcp.show(&rhs))
        },
    ));
    report
}

/// Every suite derived from a relative Rota-Baxter operator: the operator
/// identity, `K_T`, the induced post-Hopf product, the smash product and
/// graph, the matched pair and double crossproduct, the twist, the module
/// characterization and `ad_T`.
pub fn rrb_pipeline(r: &RelativeRb) -> Result<Report> {
    let mut report = Report::new(format!("relative Rota-Baxter pipeline {} -> {}", r.k.name(), r.h.name()));
    let base = verify_rrb(r);
    let ok = base.pass;
    report.absorb(base);
    if !ok {
        report.absorb(graph_check(r));
        report.absorb(module_characterization_check(r));
        return Ok(report);
    }
    report.absorb(descendent_check(r)?);
    report.absorb(induced_post_check(r));
    let smash = FinDimHopf::unchecked(smash_parts(&r.k, &r.h, &r.act));
    report.absorb(verify_hopf(&smash));
    report.absorb(graph_check(r));
    let (right, mp) = matched_pair_from_rrb(r)?;
    let mp_ok = mp.pass;
    report.absorb(mp);
    if mp_ok {
        let kt = r.descendent_unchecked();
        let dcp = FinDimHopf::unchecked(double_crossproduct_parts(&kt, &r.h, &r.act, &right));
        report.absorb(verify_hopf(&dcp));
        report.absorb(twist_check(r, &dcp));
    }
    report.absorb(module_characterization_check(r));
    report.absorb(adt_module_bialgebra_check(r, None)?);
    report.absorb(restriction_check(r));
    Ok(report)
}
