use proptest::prelude::*;
use rankin_cli::document::{ContextSpec, CuspidalSpec, LineSpec, RepSpec, SegmentSpec};
use rankin_cli::{parse_input, render, run_cli, InputDocument, Outcome};

fn doc(name: &str) -> String {
    format!("{}/docs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Outcome {
    run_cli(std::iter::once("rankin").chain(args.iter().copied()))
}

#[test]
fn lfactor_on_segment_pair() {
    let out = run(&["--doc", &doc("segments_l7_q2.toml"), "lfactor", "st2", "chi"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("L: 1/(1 - 4X)"));
    assert!(out.stdout.contains("roots:\n  - 4\n"));
}

#[test]
fn ladic_lfactor_is_structured() {
    let out = run(&[
        "--doc",
        &doc("segments_l7_q2.toml"),
        "--format",
        "structured",
        "lfactor",
        "st2_adic",
        "st2_adic",
    ]);
    assert_eq!(out.code, 0);
    let t: toml::Table = toml::from_str(&out.stdout).unwrap();
    assert_eq!(t["world"].as_str(), Some("l-adic"));
    let roots: Vec<&str> = t["roots"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(roots, ["q^-1 * 1 * zeta(0)", "q^-2 * 1 * zeta(0)"]);
}

#[test]
fn gcd_lifts_on_trivial_characters() {
    let out = run(&["--doc", &doc("trivial_l3_q7.toml"), "--format", "structured", "gcd-lifts", "chi", "chi"]);
    assert_eq!(out.code, 0);
    let t: toml::Table = toml::from_str(&out.stdout).unwrap();
    assert_eq!(t["gcd"].as_str(), Some("1"));
    assert_eq!(t["L"].as_str(), Some("1"));
    let cert = t["certificate"].as_table().unwrap();
    assert!(cert.contains_key("left") && cert.contains_key("right"));
}

#[test]
fn reduce_reports_strict_division() {
    let out = run(&["--doc", &doc("trivial_l3_q7.toml"), "reduce", "chi", "chi"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("L_lift_reduced: 1/(1 - X)"));
    assert!(out.stdout.contains("strict: true"));
}

#[test]
fn verify_gamma_inductivity() {
    let out = run(&["verify", "gamma-inductivity", "--seed", "1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("gamma-inductivity.passed: true"));
}

#[test]
fn oracle_tate_agrees() {
    let out = run(&["oracle", "tate", "--ell", "7", "--q", "2", "--chi1", "1,0,0"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("mod_l.L_engine: 1/(1 - 2X)"), "{}", out.stdout);
    assert!(out.stdout.contains("mod_l.L_oracle: 1/(1 - 2X)"));
}

#[test]
fn input_errors_exit_2() {
    let bad = [
        vec!["--doc", "/nonexistent.toml", "lfactor", "a", "b"],
        vec!["lfactor", "a", "b"],
        vec!["verify", "nonsense"],
        vec!["--doc", "PLACEHOLDER", "lfactor", "st2", "missing"],
        vec!["frobnicate"],
    ];
    let path = doc("segments_l7_q2.toml");
    for args in bad {
        let args: Vec<&str> = args.into_iter().map(|a| if a == "PLACEHOLDER" { path.as_str() } else { a }).collect();
        let out = run(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn world_mismatch_exits_2() {
    let out = run(&["--doc", &doc("segments_l7_q2.toml"), "lfactor", "st2", "st2_adic"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("world"), "{}", out.stderr);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["--doc", &doc("trivial_l3_q7.toml"), "--format", "structured", "lift", "chi"];
    assert_eq!(run(&args), run(&args));
    let v = ["verify", "compat", "--seed", "5"];
    assert_eq!(run(&v), run(&v));
}

fn document() -> impl Strategy<Value = InputDocument> {
    let ctx = prop_oneof![Just((7u64, 2u64)), Just((5, 2)), Just((3, 7)), Just((2, 3))];
    (ctx, prop::collection::vec((-3i64..=3, any::<bool>(), 0usize..3, 0i64..2), 1..5)).prop_map(|((ell, q), cs)| {
        let lines = vec![
            LineSpec {
                label: "triv".into(),
                n: 1,
                f: 1,
                dual_label: "triv".into(),
                dual_base_twist: None,
                tag_map: None,
            },
            LineSpec {
                label: "sc2".into(),
                n: 2,
                f: 2,
                dual_label: "sc2".into(),
                dual_base_twist: Some("q^0".into()),
                tag_map: Some("identity".into()),
            },
        ];
        let mut cuspidals = Vec::new();
        let mut reps = Vec::new();
        for (i, (a, modl, line, b)) in cs.into_iter().enumerate() {
            let name = format!("c{i}");
            let world = if modl { "mod-l" } else { "l-adic" };
            cuspidals.push(CuspidalSpec {
                name: name.clone(),
                world: world.into(),
                line: if line == 0 { "sc2".into() } else { "triv".into() },
                twist: format!("q^{a}"),
                tag: (!modl && line == 2).then(|| format!("1/{ell}")),
                structure: None,
            });
            reps.push(RepSpec {
                name: format!("r{i}"),
                segments: vec![SegmentSpec {
                    cuspidal: name,
                    a,
                    b: a + b.min(if ell == 2 { 0 } else { 1 }),
                }],
            });
        }
        InputDocument {
            context: ContextSpec { ell, q },
            lines,
            cuspidals,
            reps,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(d in document()) {
        let text = render(&d);
        let parsed = parse_input(&text);
        prop_assume!(parsed.is_ok());
        let m = parsed.unwrap();
        prop_assert_eq!(&m.document, &d);
        prop_assert_eq!(render(&m.document), text);
    }
}
