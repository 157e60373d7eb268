use std::process::{Command, Output};

use posthopf::coshuffle::Elem;
use posthopf::findim::post::FindimJson;
use posthopf::findim::rrb::{s3_inverse_instance, RrbJson};
use posthopf::findim::{sweedler_h4, FinDimHopf, FiniteGroup};
use posthopf::kernel::int;
use posthopf::liepbw::{LiePbwJson, LieRb};
use posthopf::posthopf::{pairs_up_to, OrderedPostHopf};
use posthopf::trees::{parse_forest, OrderedTree};
use posthopf::ybe::{r_table, YbeOperator};
use posthopf::Report;

fn posthopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posthopf"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn read(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn exit_code_matches_json_status() {
    let matrix: &[(&[&str], bool)] = &[
        (&["verify", "findim", "fixtures/h4_post.json"], true),
        (&["verify", "findim", "fixtures/z3.json"], true),
        (&["verify", "findim", "fixtures/h4_corrupted_post.json"], false),
        (&["verify", "findim", "fixtures/h4_corrupted_antipode.json"], false),
        (&["verify", "rrb", "fixtures/s3_rrb.json"], true),
        (&["verify", "rrb", "fixtures/s3_rrb_broken.json"], false),
        (&["verify", "matched-pair", "fixtures/s3_rrb.json"], true),
        (&["verify", "matched-pair", "fixtures/s3_rrb_broken.json"], false),
        (&["verify", "liepbw", "fixtures/lie_aff2.json"], true),
        (&["verify", "liepbw", "fixtures/lie_heisenberg.json"], true),
        (&["verify", "liepbw", "fixtures/lie_abelian2.json", "--degree", "2"], true),
        (&["verify", "liepbw", "fixtures/lie_aff2_broken.json"], false),
        (&["verify", "posthopf-trees", "--degree", "3", "--magma", "fixtures/magma_zero.json"], true),
        (&["verify", "posthopf-trees", "--degree", "3", "--magma", "fixtures/magma_ladder.json"], true),
        (&["verify", "posthopf-trees", "--degree", "3", "--alphabet", "unordered"], true),
        (&["verify", "posthopf-trees", "--degree", "3", "--mutate", "subadjacent-antipode"], false),
        (&["verify", "h4", "--a", "1"], true),
        (&["verify", "h4", "--a", "-3"], true),
        (&["verify", "h4", "--a", "1", "--inverse", "neg-a"], false),
        (&["verify", "h4", "--a", "0", "--inverse", "neg-a"], true),
        (&["ybe", "--degree", "0"], true),
        (&["ybe", "--degree", "2", "--mutate", "recursion-sign"], false),
    ];
    for (args, expect) in matrix {
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let out = posthopf(&with_json);
        let report: Report = serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(report.pass, *expect, "{args:?}");
        assert_eq!(out.status.code(), Some(if report.pass { 0 } else { 1 }), "{args:?}");
        assert_eq!(report.pass, report.identities.iter().all(|i| i.pass));
        if !report.pass {
            assert!(report.identities.iter().any(|i| !i.pass && i.witness.is_some()), "{args:?}");
            let text = stdout(&posthopf(args));
            assert!(text.contains("witness:") && text.ends_with("overall: FAIL\n"), "{args:?}");
        }
    }
}

#[test]
fn documented_examples() {
    let out = posthopf(&["graft", "(())", "(()()())"]);
    assert_eq!(stdout(&out).trim(), "(((()))()()) + ((())()()()) + (()((()))()) + (()()((())))");
    let out = posthopf(&["verify", "posthopf-trees", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = posthopf(&["ybe", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = posthopf(&["gl", "(())", "(())", "--degree", "4", "--unordered"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn errors_exit_two() {
    for args in [
        vec!["verify", "findim", "fixtures/missing.json"],
        vec!["verify", "rrb", "fixtures/h4_post.json"],
        vec!["graft", "())(", "()"],
        vec!["gl", "() ()", "()", "--degree", "2"],
        vec!["verify", "h4", "--a", "1/0"],
        vec!["ybe", "--mutate", "nonsense"],
        vec!["frobnicate"],
    ] {
        let out = posthopf(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn printed_combinations_round_trip() {
    for (x, y) in [("()", "()"), ("(()) ()", "(()())"), ("", "((()))"), ("() () ()", "")] {
        let out = posthopf(&["gl", x, y]);
        let text = stdout(&out);
        let parsed: Elem<OrderedTree> = text.trim().parse().unwrap();
        assert_eq!(parsed.to_string(), text.trim());
        let ph = OrderedPostHopf::grafting(6);
        let forest = |s: &str| posthopf::LinComb::basis(parse_forest::<OrderedTree>(s).unwrap());
        let expect = ph.gl_product(&forest(x), &forest(y)).unwrap();
        assert_eq!(parsed, expect);
    }
}

/// The frozen table agrees with both the general formula and the explicit
/// form through B⁺ and B⁻.
#[test]
fn frozen_r_table() {
    let frozen: Vec<String> = read("r_table_ordered_d3.txt").lines().map(str::to_string).collect();
    let ph = OrderedPostHopf::grafting(3);
    assert_eq!(r_table(&ph, 3), frozen);
    let ybe = YbeOperator::new(&ph);
    let explicit: Vec<String> = pairs_up_to(&ph.basis(3), 3)
        .into_iter()
        .map(|(x, y)| format!("{x} | {y} | {}", ybe.r_trees_explicit_word(&x, &y)))
        .collect();
    assert_eq!(explicit, frozen);
    assert_eq!(frozen.len(), 22);
    assert!(frozen.contains(&"() | () | -1 ⊗ (()) + () ⊗ () + (()) ⊗ 1".to_string()));
}

#[test]
fn fixtures_are_current() {
    fn same(name: &str, v: impl serde::Serialize) {
        let on_disk: serde_json::Value = serde_json::from_str(&read(name)).unwrap();
        assert_eq!(on_disk, serde_json::to_value(v).unwrap(), "{name}");
    }
    let (h, t) = sweedler_h4(&int(1));
    same("h4_post.json", FindimJson::new(&h, Some(&t), None));
    let z3 = posthopf::findim::group_algebra(&FiniteGroup::cyclic(3));
    same("z3.json", FindimJson::new(&z3, None, None));
    let (g, phi, inv) = s3_inverse_instance();
    same("s3_rrb.json", RrbJson::from_group(&g, &g, &phi, &inv));
    let id: Vec<usize> = (0..6).collect();
    same("s3_rrb_broken.json", RrbJson::from_group(&g, &g, &phi, &id));
    same("lie_aff2.json", LiePbwJson::from_rb(&LieRb::nonabelian2(), 3));
    same("lie_aff2_broken.json", LiePbwJson::from_rb(&LieRb::nonabelian2_broken(), 3));
    same("lie_heisenberg.json", LiePbwJson::from_rb(&LieRb::heisenberg(), 3));

    // corrupted files differ from the genuine ones in exactly one table entry
    let input: FindimJson = serde_json::from_str(&read("h4_corrupted_post.json")).unwrap();
    let (h2, post, _) = input.load().unwrap();
    let post = post.unwrap();
    assert_eq!(h2.parts(), h.parts());
    let diffs: Vec<_> = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| post[i][j] != t[i][j]).collect();
    assert_eq!(diffs, vec![(1, 1)]);
    let input: FindimJson = serde_json::from_str(&read("h4_corrupted_antipode.json")).unwrap();
    let (h3, _, _) = input.load().unwrap();
    assert!(FinDimHopf::new(h3.parts().clone()).is_err());
}
