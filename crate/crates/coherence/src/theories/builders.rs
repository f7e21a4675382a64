//! Presentations for the standard catalog of theories.
//!
//! Generator names are fixed across the whole catalog: `tensor` (2 -> 1),
//! `unit` (0 -> 1), and the 2-cell generators `assoc`, `lunit`, `runit`,
//! `braid`, `twist`.  All 2-cell generators are invertible.
//!
//! Orientation conventions, chosen once and used everywhere:
//! `assoc` points from left-nested to right-nested tensoring, `lunit` and
//! `runit` point from the unit-composite toward the bare 1-cell, and `braid`
//! points from `tensor` to `tensor` after the input swap.

use crate::finsk::FinMap;
use crate::presentation::{
    Dimension, Gen1, Gen2, NormalizerKind, OneCellTerm, TheoryPresentation, TwoCellTerm,
};

pub(crate) fn tens() -> OneCellTerm {
    OneCellTerm::gen("tensor")
}

pub(crate) fn unit() -> OneCellTerm {
    OneCellTerm::gen("unit")
}

pub(crate) fn id1() -> OneCellTerm {
    OneCellTerm::identity(1)
}

pub(crate) fn swap2() -> OneCellTerm {
    OneCellTerm::base(FinMap::new(2, vec![1, 0]).unwrap())
}

/// Reindexing that feeds input `table[i]` to slot `i`.
pub(crate) fn slots(inputs: usize, table: Vec<usize>) -> OneCellTerm {
    OneCellTerm::base(FinMap::new(inputs, table).unwrap())
}

/// `(x0 tensor x1) tensor x2` as an operation 3 -> 1.
pub(crate) fn assoc_left() -> OneCellTerm {
    OneCellTerm::compose(tens(), OneCellTerm::juxt(tens(), id1()))
}

/// `x0 tensor (x1 tensor x2)` as an operation 3 -> 1.
pub(crate) fn assoc_right() -> OneCellTerm {
    OneCellTerm::compose(tens(), OneCellTerm::juxt(id1(), tens()))
}

/// `tensor` precomposed with the input swap.
pub(crate) fn tens_swapped() -> OneCellTerm {
    OneCellTerm::compose(tens(), swap2())
}

fn gen2(name: &str, source: OneCellTerm, target: OneCellTerm) -> Gen2 {
    Gen2 { name: name.into(), source, target, invertible: true }
}

/// The instance of `braid` acting on the two inputs in swapped order, i.e.
/// the 2-cell `tensor.swap => tensor.swap.swap`.
fn braid_reversed() -> TwoCellTerm {
    TwoCellTerm::gen("braid").after(swap2())
}

fn alpha() -> TwoCellTerm {
    TwoCellTerm::gen("assoc")
}

/// Pentagon on four inputs, as a pair of pasting terms from
/// `((x0 x1) x2) x3` to `x0 (x1 (x2 x3))`.
fn pentagon() -> (TwoCellTerm, TwoCellTerm) {
    let two_step = TwoCellTerm::vcomp(
        alpha().after(OneCellTerm::juxt(OneCellTerm::identity(2), tens())),
        alpha().after(OneCellTerm::juxt(tens(), OneCellTerm::identity(2))),
    );
    let three_step = TwoCellTerm::vcomp_all(vec![
        TwoCellTerm::juxt(alpha(), TwoCellTerm::Id(id1())).before(tens()),
        alpha().after(OneCellTerm::juxt_all(vec![id1(), tens(), id1()])),
        TwoCellTerm::juxt(TwoCellTerm::Id(id1()), alpha()).before(tens()),
    ]);
    (two_step, three_step)
}

/// Triangle on two inputs: reassociating past the unit agrees with the two
/// unit cells.
fn triangle() -> (TwoCellTerm, TwoCellTerm) {
    let left = TwoCellTerm::vcomp(
        TwoCellTerm::juxt(TwoCellTerm::Id(id1()), TwoCellTerm::gen("lunit")).before(tens()),
        alpha().after(OneCellTerm::juxt_all(vec![id1(), unit(), id1()])),
    );
    let right = TwoCellTerm::juxt(TwoCellTerm::gen("runit"), TwoCellTerm::Id(id1())).before(tens());
    (left, right)
}

/// Hexagons for the weak braided theories; `assoc` cells mediate all
/// rebracketings.  Both sides run from `(x0 x1) x2` shapes as displayed in
/// the doc comment of each binding.
fn hexagons() -> Vec<(TwoCellTerm, TwoCellTerm)> {
    let gamma = || TwoCellTerm::gen("braid");
    // (x0 x1) x2 => x1 (x2 x0): braid the first input past the other two.
    let h1_direct = TwoCellTerm::vcomp_all(vec![
        alpha(),
        gamma().after(OneCellTerm::juxt(id1(), tens())),
        alpha().after(slots(3, vec![1, 2, 0])),
    ]);
    let h1_stepwise = TwoCellTerm::vcomp_all(vec![
        TwoCellTerm::juxt(gamma(), TwoCellTerm::Id(id1())).before(tens()),
        alpha().after(slots(3, vec![1, 0, 2])),
        TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma())
            .before(tens())
            .after(slots(3, vec![1, 0, 2])),
    ]);
    // x0 (x1 x2) => (x2 x0) x1: braid the last input past the first two.
    let h2_direct = TwoCellTerm::vcomp_all(vec![
        TwoCellTerm::inverse(alpha()),
        gamma().after(OneCellTerm::juxt(tens(), id1())),
        TwoCellTerm::inverse(alpha()).after(slots(3, vec![2, 0, 1])),
    ]);
    let h2_stepwise = TwoCellTerm::vcomp_all(vec![
        TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma()).before(tens()),
        TwoCellTerm::inverse(alpha()).after(slots(3, vec![0, 2, 1])),
        TwoCellTerm::juxt(gamma(), TwoCellTerm::Id(id1()))
            .before(tens())
            .after(slots(3, vec![0, 2, 1])),
    ]);
    vec![(h1_direct, h1_stepwise), (h2_direct, h2_stepwise)]
}

/// Strict hexagons: no `assoc` cells, boundaries compared under the
/// strict-assoc normalizer.
fn strict_hexagons() -> Vec<(TwoCellTerm, TwoCellTerm)> {
    let gamma = || TwoCellTerm::gen("braid");
    // tensor(x0,x1,x2) => tensor(x2,x0,x1): braid the pair past the third
    // input at once, or move it across in two steps.
    let h1_direct = gamma().after(OneCellTerm::juxt(tens(), id1()));
    let h1_stepwise = TwoCellTerm::vcomp(
        TwoCellTerm::juxt(gamma(), TwoCellTerm::Id(id1()))
            .before(tens())
            .after(slots(3, vec![0, 2, 1])),
        TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma()).before(tens()),
    );
    // tensor(x0,x1,x2) => tensor(x1,x2,x0): braid the first input past the
    // pair at once, or in two steps.
    let h2_direct = gamma().after(OneCellTerm::juxt(id1(), tens()));
    let h2_stepwise = TwoCellTerm::vcomp(
        TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma())
            .before(tens())
            .after(slots(3, vec![1, 0, 2])),
        TwoCellTerm::juxt(gamma(), TwoCellTerm::Id(id1())).before(tens()),
    );
    vec![(h1_direct, h1_stepwise), (h2_direct, h2_stepwise)]
}

/// `braid` followed by its reversed instance equals the identity.
fn symmetry_relation() -> (TwoCellTerm, TwoCellTerm) {
    (
        TwoCellTerm::vcomp(braid_reversed(), TwoCellTerm::gen("braid")),
        TwoCellTerm::Id(tens()),
    )
}

/// Twisting a tensor equals twisting the parts and braiding both ways.
fn balance_relation() -> (TwoCellTerm, TwoCellTerm) {
    let theta = || TwoCellTerm::gen("twist");
    (
        theta().after(tens()),
        TwoCellTerm::vcomp_all(vec![
            TwoCellTerm::juxt(theta(), theta()).before(tens()),
            TwoCellTerm::gen("braid"),
            braid_reversed(),
        ]),
    )
}

fn mark_standard(t: &mut TheoryPresentation, rel2_indices: &[usize]) {
    for &i in rel2_indices {
        t.metadata.insert(format!("rel2.{i}"), "standard-import".into());
    }
}

/// Associativity and unit laws as 1-cell equations; shared by the strict
/// 2-theories and the plain monoid 1-theory.
fn strict_monoid_relations() -> Vec<(OneCellTerm, OneCellTerm)> {
    vec![
        (assoc_left(), assoc_right()),
        (OneCellTerm::compose(tens(), OneCellTerm::juxt(unit(), id1())), id1()),
        (OneCellTerm::compose(tens(), OneCellTerm::juxt(id1(), unit())), id1()),
    ]
}

fn monoid_gens() -> Vec<Gen1> {
    vec![
        Gen1 { name: "tensor".into(), source: 2, target: 1 },
        Gen1 { name: "unit".into(), source: 0, target: 1 },
    ]
}

fn weak_monoidal_gens2() -> Vec<Gen2> {
    vec![
        gen2("assoc", assoc_left(), assoc_right()),
        gen2("lunit", OneCellTerm::compose(tens(), OneCellTerm::juxt(unit(), id1())), id1()),
        gen2("runit", OneCellTerm::compose(tens(), OneCellTerm::juxt(id1(), unit())), id1()),
    ]
}

pub fn fin() -> TheoryPresentation {
    TheoryPresentation::new("Fin", Dimension::Two)
}

pub fn bin() -> TheoryPresentation {
    let mut t = TheoryPresentation::new("Bin", Dimension::Two);
    t.one_cell_gens.push(Gen1 { name: "tensor".into(), source: 2, target: 1 });
    t
}

pub fn point() -> TheoryPresentation {
    let mut t = TheoryPresentation::new("Point", Dimension::Two);
    t.one_cell_gens.push(Gen1 { name: "unit".into(), source: 0, target: 1 });
    t
}

pub fn magmas() -> TheoryPresentation {
    let mut t = TheoryPresentation::new("Magmas", Dimension::One);
    t.one_cell_gens.push(Gen1 { name: "tensor".into(), source: 2, target: 1 });
    t
}

pub fn monoids() -> TheoryPresentation {
    let mut t = TheoryPresentation::new("Monoids", Dimension::One);
    t.one_cell_gens = monoid_gens();
    t.one_cell_relations = strict_monoid_relations();
    t.normalizer = NormalizerKind::StrictAssoc;
    t
}

pub fn comm_monoids() -> TheoryPresentation {
    let mut t = monoids();
    t.name = "CommMonoids".into();
    t.one_cell_relations.push((tens_swapped(), tens()));
    t
}

pub fn mon() -> TheoryPresentation {
    let mut t = TheoryPresentation::new("Mon", Dimension::Two);
    t.one_cell_gens = monoid_gens();
    t.two_cell_gens = weak_monoidal_gens2();
    t.two_cell_relations.push(pentagon());
    t.two_cell_relations.push(triangle());
    mark_standard(&mut t, &[1]);
    t
}

pub fn assoc() -> TheoryPresentation {
    let mut t = mon();
    t.name = "Assoc".into();
    t.two_cell_relations.remove(0);
    t.metadata.clear();
    mark_standard(&mut t, &[0]);
    t
}

pub fn braid() -> TheoryPresentation {
    let mut t = mon();
    t.name = "Braid".into();
    t.two_cell_gens.push(gen2("braid", tens(), tens_swapped()));
    let first_hex = t.two_cell_relations.len();
    t.two_cell_relations.extend(hexagons());
    mark_standard(&mut t, &[first_hex, first_hex + 1]);
    t
}

pub fn comm() -> TheoryPresentation {
    let mut t = mon();
    t.name = "Comm".into();
    t.two_cell_gens.push(gen2("braid", tens(), tens_swapped()));
    t
}

pub fn sym() -> TheoryPresentation {
    let mut t = braid();
    t.name = "Sym".into();
    let i = t.two_cell_relations.len();
    t.two_cell_relations.push(symmetry_relation());
    mark_standard(&mut t, &[i]);
    t
}

pub fn bal() -> TheoryPresentation {
    let mut t = braid();
    t.name = "Bal".into();
    t.two_cell_gens.push(gen2("twist", id1(), id1()));
    let i = t.two_cell_relations.len();
    t.two_cell_relations.push(balance_relation());
    mark_standard(&mut t, &[i]);
    t
}

pub fn twist() -> TheoryPresentation {
    let mut t = TheoryPresentation::new("Twist", Dimension::Two);
    t.two_cell_gens.push(gen2("twist", id1(), id1()));
    t
}

pub fn s_mon() -> TheoryPresentation {
    let mut t = TheoryPresentation::new("sMon", Dimension::Two);
    t.one_cell_gens = monoid_gens();
    t.one_cell_relations = strict_monoid_relations();
    t.normalizer = NormalizerKind::StrictAssoc;
    t
}

pub fn s_braid() -> TheoryPresentation {
    let mut t = s_mon();
    t.name = "sBraid".into();
    t.two_cell_gens.push(gen2("braid", tens(), tens_swapped()));
    t.two_cell_relations.extend(strict_hexagons());
    mark_standard(&mut t, &[0, 1]);
    t
}

pub fn s_comm() -> TheoryPresentation {
    let mut t = s_mon();
    t.name = "sComm".into();
    t.two_cell_gens.push(gen2("braid", tens(), tens_swapped()));
    t
}

pub fn s_sym() -> TheoryPresentation {
    let mut t = s_braid();
    t.name = "sSym".into();
    let i = t.two_cell_relations.len();
    t.two_cell_relations.push(symmetry_relation());
    mark_standard(&mut t, &[i]);
    t
}

pub fn s_bal() -> TheoryPresentation {
    let mut t = s_braid();
    t.name = "sBal".into();
    t.two_cell_gens.push(gen2("twist", id1(), id1()));
    let i = t.two_cell_relations.len();
    t.two_cell_relations.push(balance_relation());
    mark_standard(&mut t, &[i]);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::{all_theory_names, build_theory};

    #[test]
    fn every_catalog_theory_validates() {
        for name in all_theory_names() {
            let t = build_theory(name);
            t.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn pentagon_boundaries() {
        let t = mon();
        let (lhs, rhs) = &t.two_cell_relations[0];
        let (src, tgt) = t.typecheck_two(lhs).unwrap();
        assert_eq!(
            format!("{}", t.normalize_one(&src).unwrap()),
            "4:(tensor(tensor(tensor(x0,x1),x2),x3))"
        );
        assert_eq!(
            format!("{}", t.normalize_one(&tgt).unwrap()),
            "4:(tensor(x0,tensor(x1,tensor(x2,x3))))"
        );
        assert!(t.boundaries_match(lhs, rhs).unwrap());
    }

    #[test]
    fn triangle_boundaries() {
        let t = mon();
        let (lhs, rhs) = &t.two_cell_relations[1];
        let (src, tgt) = t.typecheck_two(lhs).unwrap();
        assert_eq!(
            format!("{}", t.normalize_one(&src).unwrap()),
            "2:(tensor(tensor(x0,unit),x1))"
        );
        assert_eq!(format!("{}", t.normalize_one(&tgt).unwrap()), "2:(tensor(x0,x1))");
        assert!(t.boundaries_match(lhs, rhs).unwrap());
    }

    #[test]
    fn strict_hexagon_boundaries_flatten() {
        let t = s_braid();
        for (lhs, rhs) in &t.two_cell_relations {
            let (src, tgt) = t.typecheck_two(lhs).unwrap();
            let (src2, tgt2) = t.typecheck_two(rhs).unwrap();
            assert_eq!(
                t.normalize_one(&src).unwrap(),
                t.normalize_one(&src2).unwrap()
            );
            assert_eq!(t.normalize_one(&tgt).unwrap(), t.normalize_one(&tgt2).unwrap());
        }
        let (lhs, _) = &t.two_cell_relations[0];
        let (src, tgt) = t.typecheck_two(lhs).unwrap();
        assert_eq!(format!("{}", t.normalize_one(&src).unwrap()), "3:(tensor(x0,x1,x2))");
        assert_eq!(format!("{}", t.normalize_one(&tgt).unwrap()), "3:(tensor(x2,x0,x1))");
    }

    #[test]
    fn weak_hexagon_boundaries_agree() {
        let t = braid();
        for (i, (lhs, rhs)) in t.two_cell_relations.iter().enumerate() {
            assert!(t.boundaries_match(lhs, rhs).unwrap(), "relation {i}");
        }
    }

    #[test]
    fn balance_boundaries_are_endocells_of_tensor() {
        for t in [bal(), s_bal()] {
            let (lhs, rhs) = t.two_cell_relations.last().unwrap();
            let (src, tgt) = t.typecheck_two(lhs).unwrap();
            assert_eq!(t.one_eq(&src, &tens()).unwrap(), crate::presentation::Verdict::Equal);
            assert_eq!(t.one_eq(&tgt, &tens()).unwrap(), crate::presentation::Verdict::Equal);
            assert!(t.boundaries_match(lhs, rhs).unwrap());
        }
    }

    #[test]
    fn standard_imports_are_marked() {
        assert_eq!(braid().metadata.len(), 3);
        assert_eq!(sym().metadata.len(), 4);
        assert!(mon().metadata.contains_key("rel2.1"));
        assert!(fin().metadata.is_empty());
    }
}
