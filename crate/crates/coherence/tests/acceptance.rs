//! The acceptance gate.  One test per criterion; each line of `cargo test
//! --test acceptance` output is one criterion passing or failing.

mod support;

use std::collections::BTreeSet;

use coherence::catalog::{catalog_entries, catalog_entry};
use coherence::colimit::instances::{
    arrow_diagram, cospan_diagram, point_diagram, triangle_diagram, yoneda_arrow, yoneda_point,
    yoneda_parallel_pair,
};
use coherence::colimit::{
    enumerate_qnats, equivalence, find_relative_terminal, hom_diagram, isomorphism, qcolim,
    quasi_yoneda_psi, quasi_yoneda_psi_mod, quasi_yoneda_psihat, quasi_yoneda_psihat_mor,
    quasi_yoneda_unit, Budget, GammaImage,
};
use coherence::finsk::verify_coprod_square;
use coherence::kronecker::{
    check_consequences, check_kronecker_model, crossing_delta_rule, derived_braiding,
    evident_inclusion, kronecker, KroneckerPresentation,
};
use coherence::models::{
    check_relations, eval_two_cell, model_interp, size_vectors, standard_interp, BraidWord,
    ModelKind, ModelValue, RibbonBraid,
};
use coherence::presentation::{Dimension, TheoryPresentation};
use coherence::report::{Report, Status};
use coherence::theories::{
    all_theory_names, build_theory, change_dimension, DimensionChange, TheoryName,
};

use support::{all_words, BraidBall};

fn pools(max_arity: usize, max_entry: usize) -> Vec<Vec<usize>> {
    (1..=max_arity).flat_map(|a| size_vectors(a, max_entry)).collect()
}

fn status_lines<'a>(report: &'a Report, prefix: &'a str) -> impl Iterator<Item = Status> + 'a {
    report.lines.iter().filter(move |l| l.id.starts_with(prefix)).map(|l| l.status)
}

fn monoid_product() -> KroneckerPresentation {
    let base = build_theory(TheoryName::Point);
    let arm = build_theory(TheoryName::SMon);
    let left = evident_inclusion(&base, &arm).unwrap();
    let right = evident_inclusion(&base, &arm).unwrap();
    kronecker(&base, &left, &right).unwrap()
}

#[test]
fn criterion_01_coproduct_squares_commute_in_fin() {
    for m in 0..=4 {
        for n in 0..=4 {
            for p in 0..=4 {
                assert!(verify_coprod_square(m, n, p), "square broke at {m},{n},{p}");
            }
        }
    }
}

#[test]
fn criterion_02_braid_equality_matches_the_rewriting_oracle() {
    let mut b3 = BraidBall::new(3, 10);
    for w in all_words(3, 6) {
        let word = BraidWord::from_letters(3, w.clone()).unwrap();
        assert_eq!(word.is_trivial(), b3.trivial(&w), "disagree on {w:?} in B3");
    }
    let short = all_words(3, 3);
    for a in &short {
        for b in &short {
            let wa = BraidWord::from_letters(3, a.clone()).unwrap();
            let wb = BraidWord::from_letters(3, b.clone()).unwrap();
            assert_eq!(wa.equal(&wb).unwrap(), b3.equal(a, b), "disagree on {a:?} vs {b:?}");
        }
    }

    let mut b4 = BraidBall::new(4, 8);
    for w in all_words(4, 5) {
        let word = BraidWord::from_letters(4, w.clone()).unwrap();
        assert_eq!(word.is_trivial(), b4.trivial(&w), "disagree on {w:?} in B4");
    }
    let short = all_words(4, 2);
    for a in &short {
        for b in &short {
            let wa = BraidWord::from_letters(4, a.clone()).unwrap();
            let wb = BraidWord::from_letters(4, b.clone()).unwrap();
            assert_eq!(wa.equal(&wb).unwrap(), b4.equal(a, b), "disagree on {a:?} vs {b:?}");
        }
    }

    let aba = BraidWord::from_letters(3, vec![1, 2, 1]).unwrap();
    let bab = BraidWord::from_letters(3, vec![2, 1, 2]).unwrap();
    assert!(aba.equal(&bab).unwrap());
    assert!(b3.equal(&[1, 2, 1], &[2, 1, 2]));

    let square = BraidWord::from_letters(3, vec![1, 1]).unwrap();
    assert!(!square.is_trivial());
    assert!(!b3.trivial(&[1, 1]));

    let delta2 = BraidWord::full_twist(3);
    for letter in [1i32, -1, 2, -2] {
        let side = BraidWord::from_letters(3, vec![letter]).unwrap();
        assert!(delta2.then(&side).unwrap().equal(&side.then(&delta2).unwrap()).unwrap());
        let mut left = delta2.letters().to_vec();
        left.push(letter);
        let mut right = vec![letter];
        right.extend_from_slice(delta2.letters());
        assert!(b3.equal(&left, &right), "full twist failed to commute past {letter}");
    }
}

#[test]
fn criterion_03_standard_interpretations_satisfy_their_theories() {
    let standard = [
        (ModelKind::Perm, TheoryName::SSym),
        (ModelKind::Braid, TheoryName::SBraid),
        (ModelKind::Ribbon, TheoryName::SBal),
    ];
    let sizes = pools(6, 2);
    for (kind, name) in standard {
        let theory = build_theory(name);
        let interp = standard_interp(kind, name).unwrap();
        let report = check_relations(&theory, &interp, &sizes).unwrap();
        assert!(report.passed(), "{name:?} under {kind:?}:\n{}", report.render());
        assert!(!report.lines.is_empty());
    }

    let theory = build_theory(TheoryName::SSym);
    let braided = model_interp(ModelKind::Braid, &theory).unwrap();
    let report = check_relations(&theory, &braided, &sizes).unwrap();
    assert!(!report.passed());

    let failing: BTreeSet<usize> = report
        .lines
        .iter()
        .filter(|l| l.status == Status::Fail)
        .map(|l| {
            l.id.strip_prefix("rel2.").unwrap().split('@').next().unwrap().parse().unwrap()
        })
        .collect();
    assert_eq!(failing.len(), 1, "only the involution axiom may break");
    let (lhs, rhs) = &theory.two_cell_relations[*failing.iter().next().unwrap()];
    let ModelValue::Braid(l) = eval_two_cell(&braided, lhs, &[1, 1]).unwrap() else {
        panic!("braid interpretation produced a non-braid");
    };
    let ModelValue::Braid(r) = eval_two_cell(&braided, rhs, &[1, 1]).unwrap() else {
        panic!("braid interpretation produced a non-braid");
    };
    let sides = [&l, &r];
    assert!(sides.iter().any(|w| w.equal(&BraidWord::full_twist(2)).unwrap()));
    assert!(sides.iter().any(|w| w.is_trivial()));
}

#[test]
fn criterion_04_squaring_a_monoid_theory_yields_a_braiding() {
    let kp = monoid_product();
    assert_eq!(kp.delta_table.len(), 1);
    assert!(kp.delta_invertible);

    let left = model_interp(ModelKind::Braid, &kp.underlying).unwrap();
    let right = model_interp(ModelKind::Braid, &kp.underlying).unwrap();
    let rule = crossing_delta_rule(ModelKind::Braid, &kp.underlying).unwrap();
    let hexagon = catalog_entry(&kp.underlying, "braiding-hexagon-left").unwrap();
    let sizes = pools(8, 2);
    let report = check_kronecker_model(&kp, left, right, rule, &sizes, &[hexagon]).unwrap();
    assert!(report.passed(), "{}", report.render());
    for prefix in ["cond1.", "cond2.", "cond3.", "catalog.braiding-hexagon-left@1,1,1"] {
        assert!(status_lines(&report, prefix).count() > 0, "nothing checked under {prefix}");
    }

    let braiding = derived_braiding(&kp).unwrap();
    let interp = model_interp(ModelKind::Braid, &kp.underlying).unwrap();
    let ModelValue::Braid(w) = eval_two_cell(&interp, &braiding, &[1, 1]).unwrap() else {
        panic!("braid interpretation produced a non-braid");
    };
    assert!(w.equal(&BraidWord::sigma(2, 1).unwrap()).unwrap());
}

#[test]
fn criterion_05_the_symmetry_square_separates_permutations_from_braids() {
    let theory = build_theory(TheoryName::SBraid);
    let entry = || vec![catalog_entry(&theory, "symmetry-square").unwrap()];
    let sizes = size_vectors(2, 2);

    let perm = model_interp(ModelKind::Perm, &theory).unwrap();
    let mut report = Report::new();
    check_consequences(&mut report, &perm, &entry(), &sizes);
    assert!(report.passed(), "{}", report.render());
    assert!(status_lines(&report, "catalog.symmetry-square").count() > 0);

    let braid = model_interp(ModelKind::Braid, &theory).unwrap();
    let mut report = Report::new();
    check_consequences(&mut report, &braid, &entry(), &sizes);
    assert!(!report.passed());
    assert!(status_lines(&report, "catalog.symmetry-square")
        .any(|s| s == Status::Fail));
}

#[test]
fn criterion_06_twist_naturality_fails_by_one_full_twist_in_the_ribbon_model() {
    let base = build_theory(TheoryName::Fin);
    let left = evident_inclusion(&base, &build_theory(TheoryName::SBraid)).unwrap();
    let right = evident_inclusion(&base, &build_theory(TheoryName::Twist)).unwrap();
    let kp = kronecker(&base, &left, &right).unwrap();
    let interp = model_interp(ModelKind::Ribbon, &kp.underlying).unwrap();

    let naturality = catalog_entry(&kp.underlying, "twist-naturality-eq").unwrap();
    let ModelValue::Ribbon(a) = eval_two_cell(&interp, &naturality.lhs, &[1, 1]).unwrap() else {
        panic!("ribbon interpretation produced a non-ribbon");
    };
    let ModelValue::Ribbon(b) = eval_two_cell(&interp, &naturality.rhs, &[1, 1]).unwrap() else {
        panic!("ribbon interpretation produced a non-ribbon");
    };
    assert!(!a.equal(&b).unwrap());

    let quotient = b.then(&a.inverse()).unwrap();
    let square =
        RibbonBraid::new(vec![0, 0], BraidWord::from_letters(2, vec![1, 1]).unwrap()).unwrap();
    assert!(
        quotient.equal(&square).unwrap() || quotient.inverse().equal(&square).unwrap(),
        "sides differ by {:?}, not by the squared crossing",
        quotient
    );

    let balance = vec![catalog_entry(&kp.underlying, "balance-eq").unwrap()];
    let mut report = Report::new();
    check_consequences(&mut report, &interp, &balance, &[vec![1, 1]]);
    assert!(report.passed(), "{}", report.render());
    assert!(status_lines(&report, "catalog.balance-eq").count() > 0);
}

#[test]
fn criterion_07_the_dodecahedron_equations_hold_for_braids() {
    let theory = build_theory(TheoryName::Braid);
    let names: Vec<String> = [
        "dodeca-hexagon-left",
        "dodeca-hexagon-right",
        "dodeca-naturality-left",
        "dodeca-naturality-right",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let entries = catalog_entries(&theory, &names).unwrap();
    let interp = model_interp(ModelKind::Braid, &theory).unwrap();
    let mut report = Report::new();
    check_consequences(&mut report, &interp, &entries, &[vec![1, 1, 1]]);
    assert!(report.passed(), "{}", report.render());
    assert_eq!(report.lines.len(), 4);
}

#[test]
fn criterion_08_dimension_change_round_trips() {
    for name in all_theory_names() {
        let theory = build_theory(name);
        if theory.dimension != Dimension::One {
            continue;
        }
        let up = change_dimension(DimensionChange::D, &theory).unwrap();
        let down = change_dimension(DimensionChange::Pi0, &up).unwrap();
        assert!(down.same_presentation(&theory).unwrap(), "round trip moved {name:?}");
    }

    let monoids = build_theory(TheoryName::Monoids);
    let up = change_dimension(DimensionChange::D, &monoids).unwrap();
    assert!(up.same_presentation(&build_theory(TheoryName::SMon)).unwrap());

    let collapsed = change_dimension(DimensionChange::Pi0, &build_theory(TheoryName::SBraid)).unwrap();
    assert!(collapsed.same_presentation(&build_theory(TheoryName::CommMonoids)).unwrap());
}

#[test]
fn criterion_09_representable_transformations_restrict_back_to_their_objects() {
    let instances = [yoneda_point(), yoneda_arrow(), yoneda_parallel_pair()];
    for (k, r) in instances {
        for u in 0..k.value(r).object_count() {
            let s = quasi_yoneda_psihat(&k, r, u).unwrap();
            assert_eq!(quasi_yoneda_psi(&k, r, &s).unwrap(), u);
        }
        for t in 0..k.value(r).morphism_count() {
            let m = quasi_yoneda_psihat_mor(&k, r, t).unwrap();
            assert_eq!(quasi_yoneda_psi_mod(&k, r, &m).unwrap(), t);
        }

        let source = hom_diagram(&k.index, r).unwrap();
        let mut budget = Budget::new(10_000_000);
        let qnats = enumerate_qnats(&source, &k, &GammaImage::empty(), &mut budget).unwrap();
        let isos = qnats.iter().filter(|s| s.is_iso(&k)).count();
        assert_eq!(isos, k.value(r).object_count());

        for s in &qnats {
            let unit = quasi_yoneda_unit(&k, r, s).unwrap();
            if s.is_iso(&k) {
                assert!(unit.is_iso(&k), "unit lost invertibility");
            }
        }
    }
}

#[test]
fn criterion_10_collapsing_onto_a_relative_terminal_preserves_the_value() {
    for (d, gamma) in [arrow_diagram(), cospan_diagram(), triangle_diagram()] {
        let t = find_relative_terminal(&d.index, &gamma).expect("instance has a terminal");
        let q = qcolim(&d, &gamma).unwrap();
        let mut budget = Budget::new(20_000_000);
        let pair = equivalence(&q.category, d.value(t), &mut budget).unwrap();
        assert!(pair.is_some(), "{} is not equivalent to its terminal value", q.category.name);
    }

    let (d, gamma) = point_diagram();
    let q = qcolim(&d, &gamma).unwrap();
    let mut budget = Budget::new(20_000_000);
    let pair = isomorphism(&q.category, d.value(0), &mut budget).unwrap();
    assert!(pair.is_some(), "collapse over a point changed the value");
}

#[test]
fn criterion_11_the_command_line_is_deterministic() {
    let dir = std::env::temp_dir().join("coherence-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let monoid_file = dir.join("monoid-square.sexp");
    let ribbon_file = dir.join("braid-twist.sexp");
    let monoid_file = monoid_file.to_str().unwrap();
    let ribbon_file = ribbon_file.to_str().unwrap();

    let script: Vec<(Vec<&str>, u8)> = vec![
        (vec!["list-theories"], 0),
        (vec!["show", "sBraid"], 0),
        (vec!["check", "sSym", "--model", "perm", "--sizes", "1,1"], 0),
        (vec!["check", "sSym", "--model", "braid", "--sizes", "1,2"], 1),
        (vec!["check", "sBraid", "--model", "braid", "--sizes", "1,2"], 0),
        (vec!["check", "sBraid", "--model", "perm", "--sizes", "1,2", "--catalog", "symmetry-square"], 0),
        (vec!["check", "sBraid", "--model", "braid", "--sizes", "1", "--catalog", "symmetry-square"], 1),
        (vec!["kronecker", "sMon", "sMon", "--over", "Point", "--out", monoid_file], 0),
        (vec!["check", monoid_file, "--model", "braid", "--sizes", "1,2", "--catalog", "braiding-hexagon-left"], 0),
        (vec!["kronecker", "sBraid", "Twist", "--over", "Fin", "--out", ribbon_file], 0),
        (vec!["check", ribbon_file, "--model", "ribbon", "--sizes", "1", "--catalog", "twist-naturality-eq,balance-eq"], 1),
        (vec!["check", "Braid", "--model", "braid", "--sizes", "1", "--catalog", "dodeca-hexagon-left,dodeca-hexagon-right,dodeca-naturality-left,dodeca-naturality-right"], 0),
        (vec!["normalize-braid", "--strands", "3", "s1 s2 s1"], 0),
        (vec!["change", "pi0", "sBraid"], 0),
        (vec!["change", "d", "Monoids"], 0),
        (vec!["qcolim", "tests/data/diagrams/triangle.sexp"], 0),
        (vec!["qcolim", "tests/data/diagrams/point.sexp"], 0),
        (vec!["frobnicate"], 2),
    ];

    let run_script = || -> String {
        let mut transcript = String::new();
        for (argv, expected) in &script {
            let (code, text) = coherence::cli::run_command(argv);
            assert_eq!(code, *expected, "{argv:?} exited {code}:\n{text}");
            transcript.push_str(&format!("$ {}\n[{code}]\n{text}", argv.join(" ")));
        }
        transcript
    };

    let first = run_script();
    let second = run_script();
    assert_eq!(first, second, "reruns must be byte-identical");
    let twist_fail = first
        .lines()
        .find(|l| l.starts_with("FAIL\tcatalog.twist-naturality-eq"))
        .expect("the ribbon run records its failure");
    assert!(twist_fail.contains("twists("), "failure names the ribbon braids: {twist_fail}");
}
