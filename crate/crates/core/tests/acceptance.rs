//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 6 asks for `▷_{−a}` as the convolution inverse of `▷_a`. For
//! `a ≠ 0` that is false (the inverse is `▷_a` itself), so the criterion is
//! checked literally, reported as FAIL, and the test asserts the exact shape
//! of the failure instead.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use posthopf::findim::post::{check_posthopf_iso, h4_scaling, verify_post_hopf_solved};
use posthopf::findim::rrb::{group_rb_witness, RrbJson};
use posthopf::findim::{rrb_pipeline, sweedler_h4, verify_post_hopf_findim};
use posthopf::kernel::int;
use posthopf::liepbw::{liepbw_pipeline, LiePbwJson};
use posthopf::posthopf::{verify_post_hopf, verify_subadjacent, OrderedPostHopf, UnorderedPostHopf};
use posthopf::trees::{b_minus_tree, b_plus, graft_left, graft_unordered, parse_forest, OrderedTree, UnorderedTree};
use posthopf::ybe::verify_ybe;
use posthopf::{LinComb, Report};

/// Trees in letter form: `a` opens a node, `b` closes it.
fn ab(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            'a' => '(',
            'b' => ')',
            other => other,
        })
        .collect()
}

fn sum<T: std::str::FromStr<Err = posthopf::Error> + Ord + Clone>(terms: &[(i64, &str)]) -> LinComb<T> {
    let mut v = LinComb::zero();
    for &(c, t) in terms {
        v.add_term(ab(t).parse().unwrap(), int(c));
    }
    v
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn line(n: usize, title: &str, elapsed: Duration, o: &Outcome) {
    let status = if o.pass { "PASS" } else { "FAIL" };
    println!("criterion {n} [{status}] {title} ({:.2?}){}", elapsed, if o.detail.is_empty() { String::new() } else { format!(": {}", o.detail) });
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let o = f();
    (o, start.elapsed())
}

fn from_reports(reports: &[&Report]) -> Outcome {
    let failed: Vec<String> = reports.iter().flat_map(|r| r.failures().map(|f| f.name.clone())).collect();
    let cases: usize = reports.iter().map(|r| r.identities.len()).sum();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() { format!("{cases} identities") } else { failed.join("; ") },
    }
}

fn criterion_1() -> Outcome {
    let tau: OrderedTree = ab("aabb").parse().unwrap();
    let omega: OrderedTree = ab("aabababb").parse().unwrap();
    let ordered = graft_left(&tau, &omega) == sum(&[(1, "aaabbabababb"), (1, "aaaabbbababb"), (1, "aabaaabbbabb"), (1, "aababaaabbbb")]);
    let tau2: OrderedTree = ab("aababb").parse().unwrap();
    let omega2: OrderedTree = ab("aaabbabb").parse().unwrap();
    let second = graft_left(&tau2, &omega2)
        == sum(&[(1, "aaababbaabbabb"), (1, "aaaababbabbabb"), (1, "aaaaababbbbabb"), (1, "aaabbaaababbbb")]);
    let tu: UnorderedTree = ab("aabb").parse().unwrap();
    let ou: UnorderedTree = ab("aabababb").parse().unwrap();
    let g = graft_unordered(&tu, &ou);
    let unordered = g == sum(&[(1, "aaabbabababb"), (3, "aaaabbbababb")]) && g.len() == 2;
    Outcome {
        pass: ordered && second && unordered,
        detail: format!("ordered {ordered}, second display {second}, unordered {unordered}"),
    }
}

fn criterion_2() -> Outcome {
    let forest = parse_forest::<OrderedTree>(&format!("{} {}", ab("aabb"), ab("aababb"))).unwrap();
    let plus = b_plus(&forest).as_str() == ab("aaabbaababbb");
    let t: OrderedTree = ab("aababaaabbbb").parse().unwrap();
    let minus: Vec<String> = b_minus_tree(&t).letters().iter().map(|x| x.as_str().to_string()).collect();
    let minus = minus == vec![ab("ab"), ab("ab"), ab("aaabbb")];
    Outcome {
        pass: plus && minus,
        detail: format!("B+ {plus}, B- {minus}"),
    }
}

fn criterion_3() -> Outcome {
    let ph = OrderedPostHopf::grafting(4);
    let r = verify_post_hopf(&ph, 4).unwrap();
    let mut o = from_reports(&[&r]);
    let con = r.identities.iter().any(|i| i.name.contains("Post-con") && i.name.contains("α(S▷(x))") && i.pass);
    o.pass &= con && r.identities.len() >= 8;
    o
}

fn criterion_4() -> Outcome {
    let ph = OrderedPostHopf::grafting(4);
    from_reports(&[&verify_subadjacent(&ph, 4).unwrap()])
}

fn criterion_5() -> Outcome {
    let ordered = verify_ybe(&OrderedPostHopf::grafting(3), 3).unwrap();
    let unordered = verify_ybe(&UnorderedPostHopf::grafting(3), 3).unwrap();
    let mut o = from_reports(&[&ordered, &unordered]);
    for needle in ["braid relation", "a∗▷b = (a1▷b1)∗▷(a2◁b2)", "R is a coalgebra map", "general R = explicit B± form"] {
        for r in [&ordered, &unordered] {
            o.pass &= r.identities.iter().any(|i| i.name.contains(needle));
        }
    }
    o
}

type ByParameter = Vec<(i64, Report)>;

/// The literal criterion: inverse witness `▷_{−a}`, plus the isomorphisms.
fn criterion_6() -> (Outcome, ByParameter, ByParameter) {
    let mut axioms = Vec::new();
    let mut isos = Vec::new();
    let (_, t1) = sweedler_h4(&int(1));
    for a in [0, 1, 2, -3] {
        let (h, t) = sweedler_h4(&int(a));
        let (_, inv) = sweedler_h4(&int(-a));
        axioms.push((a, verify_post_hopf_findim(&h, &t, &inv)));
        if a != 0 {
            isos.push((a, check_posthopf_iso(&h4_scaling(&int(a)), (&h, &t), (&h, &t1))));
        }
    }
    let failing: Vec<String> = axioms
        .iter()
        .filter(|(_, r)| !r.pass)
        .map(|(a, r)| format!("a = {a}: {}", r.failures().map(|f| f.witness.clone().unwrap_or_default()).collect::<Vec<_>>().join("; ")))
        .collect();
    let iso_ok = isos.iter().all(|(_, r)| r.pass);
    let o = Outcome {
        pass: failing.is_empty() && iso_ok,
        detail: format!(
            "isomorphisms {}; ▷_(-a) is not the convolution inverse for {}",
            if iso_ok { "pass" } else { "FAIL" },
            if failing.is_empty() { "no a".into() } else { failing.join(" | ") }
        ),
    };
    (o, axioms, isos)
}

fn criterion_7() -> Outcome {
    let input: RrbJson = serde_json::from_str(&std::fs::read_to_string(fixture("s3_rrb.json")).unwrap()).unwrap();
    let RrbJson::Group { .. } = &input else { panic!("group fixture expected") };
    let r = input.load().unwrap();
    let report = rrb_pipeline(&r).unwrap();
    let mut o = from_reports(&[&report]);
    // the shipped T satisfies the group identity on all 36 pairs
    let g = posthopf::findim::FiniteGroup::s3();
    let phi = g.conjugation();
    let t: Vec<usize> = (0..6).map(|h| g.inverse(h)).collect();
    o.pass &= group_rb_witness(&g, &g, &phi, &t).is_none();
    for needle in ["T(a)T(b)", "descendent", "graph of T", "Ψ(a∗_T b)", "Mat-1", "Mat-5", "⋈", "Φ_T(uv)", "⋆_T", "ad_T"] {
        o.pass &= report.identities.iter().any(|i| i.name.contains(needle));
    }
    o
}

fn criterion_8() -> Outcome {
    let input: LiePbwJson = serde_json::from_str(&std::fs::read_to_string(fixture("lie_aff2.json")).unwrap()).unwrap();
    let (r, d) = input.load().unwrap();
    assert_eq!(d, 3);
    let report = liepbw_pipeline(&r, 3).unwrap();
    let mut o = from_reports(&[&report]);
    o.pass &= r.g.dim() == 2 && *r.g.bracket_basis(0, 1) == LinComb::basis(0);
    o
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_posthopf"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn criterion_9() -> Outcome {
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("posthopf-trees", vec!["verify", "posthopf-trees", "--degree", "3", "--mutate", "recursion-sign"]),
        ("ybe", vec!["ybe", "--degree", "2", "--mutate", "subadjacent-antipode"]),
        ("h4", vec!["verify", "h4", "--a", "2", "--inverse", "neg-a"]),
        ("findim", vec!["verify", "findim", "fixtures/h4_corrupted_post.json"]),
        ("findim", vec!["verify", "findim", "fixtures/h4_corrupted_antipode.json"]),
        ("rrb", vec!["verify", "rrb", "fixtures/s3_rrb_broken.json"]),
        ("matched-pair", vec!["verify", "matched-pair", "fixtures/s3_rrb_broken.json"]),
        ("liepbw", vec!["verify", "liepbw", "fixtures/lie_aff2_broken.json"]),
    ];
    let mut bad = Vec::new();
    for (suite, args) in &cases {
        let (code, out) = run_cli(args);
        if code != 1 || !out.contains("witness:") || !out.contains("[FAIL]") {
            bad.push(format!("{suite} (exit {code})"));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() { format!("{} corrupted inputs rejected", cases.len()) } else { bad.join(", ") },
    }
}

fn main() {
    let titles = [
        "grafting displays",
        "B+ and B- displays",
        "post-Hopf axioms on ordered forests, degree <= 4",
        "subadjacent Hopf algebra, degree <= 4",
        "Yang-Baxter operator, degree <= 3, both alphabets",
        "H4 family with inverse ▷_(-a) and rescaling isomorphisms",
        "relative Rota-Baxter pipeline on k[S3]",
        "Lie/PBW pipeline on the 2-dim nonabelian algebra, degree <= 3",
        "corrupted inputs fail with a witness and exit code 1",
    ];
    let mut results = Vec::new();
    let (o, t) = timed(criterion_1);
    line(1, titles[0], t, &o);
    results.push(o.pass);
    let (o, t) = timed(criterion_2);
    line(2, titles[1], t, &o);
    results.push(o.pass);
    let (o, t) = timed(criterion_3);
    line(3, titles[2], t, &o);
    results.push(o.pass);
    let (o, t) = timed(criterion_4);
    line(4, titles[3], t, &o);
    results.push(o.pass);
    let (o, t) = timed(criterion_5);
    line(5, titles[4], t, &o);
    results.push(o.pass);

    let start = Instant::now();
    let (o6, axioms, isos) = criterion_6();
    line(6, titles[5], start.elapsed(), &o6);
    results.push(o6.pass);

    let (o, t) = timed(criterion_7);
    line(7, titles[6], t, &o);
    results.push(o.pass);
    let (o, t) = timed(criterion_8);
    line(8, titles[7], t, &o);
    results.push(o.pass);
    let (o, t) = timed(criterion_9);
    line(9, titles[8], t, &o);
    results.push(o.pass);

    for (i, pass) in results.iter().enumerate() {
        if i != 5 {
            assert!(pass, "criterion {} failed", i + 1);
        }
    }

    // Criterion 6 fails only through Post-con, only for a ≠ 0, while the
    // isomorphisms hold and the solved inverse makes every axiom pass.
    assert!(!o6.pass);
    assert!(isos.iter().all(|(_, r)| r.pass));
    for (a, r) in &axioms {
        let failing: Vec<&str> = r.failures().map(|f| f.name.as_str()).collect();
        if *a == 0 {
            assert!(failing.is_empty(), "{r}");
        } else {
            assert_eq!(failing, vec!["Post-con: α(x1)β(x2) = β(x1)α(x2) = ε(x)id"], "a = {a}");
        }
        let (h, t) = sweedler_h4(&int(*a));
        assert!(verify_post_hopf_solved(&h, &t).pass, "a = {a}");
        assert!(verify_post_hopf_findim(&h, &t, &t).pass, "▷_a inverts itself, a = {a}");
    }
    let passed = results.iter().filter(|p| **p).count();
    println!("acceptance: {passed}/{} criteria pass; criterion 6 fails as analysed", results.len());
}
