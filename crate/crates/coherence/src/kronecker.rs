//! Tensor product of two theories over a shared base: glue the presentations
//! along the base, then freely add one invertible interchange 2-cell per pair
//! of non-base 1-cell generators.  Expansion rules extend those cells to all
//! linear 1-cell terms, and a relation schema makes them natural in every
//! 2-cell generator of either half.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::finsk::{corner_sigma, FinMap};
use crate::models::{check_relations, eval_two_cell, model_interp, ModelInterp, ModelKind, ModelValue};
use crate::presentation::{
    Dimension, Gen2, NormalizerKind, OneCellTerm, TheoryMorphismPresentation, TheoryPresentation,
    TwoCellTerm,
};
use crate::report::Report;

/// A glued product presentation together with the data distinguishing it
/// from a bare [`TheoryPresentation`]: where each half went, and which
/// 2-cell generator mediates each generator pair.
#[derive(Debug, Clone)]
pub struct KroneckerPresentation {
    pub underlying: TheoryPresentation,
    pub base: TheoryPresentation,
    pub left_injection: TheoryMorphismPresentation,
    pub right_injection: TheoryMorphismPresentation,
    /// (left generator, right generator) keys use the renamed product-side
    /// generator names, as do the stored 2-cell generator names.
    pub delta_table: BTreeMap<(String, String), String>,
    pub delta_invertible: bool,
}

/// A named equation between two pasting terms over a product theory,
/// checked per size vector by [`check_kronecker_model`].
#[derive(Debug, Clone)]
pub struct ConsequenceEq {
    pub name: String,
    pub lhs: TwoCellTerm,
    pub rhs: TwoCellTerm,
    /// Size vectors to evaluate at.  Empty means: use every supplied size
    /// vector of matching arity.
    pub sizes: Vec<Vec<usize>>,
}

/// Model rule for interchange generators, parametric over the generator so
/// one closure can serve a whole delta table.
pub type DeltaRule = Box<dyn Fn(&Gen2, &[usize]) -> Result<ModelValue>>;

fn sig(m: usize, n: usize) -> OneCellTerm {
    OneCellTerm::Base(corner_sigma(m, n))
}

fn layer(f: &OneCellTerm, k: usize) -> OneCellTerm {
    OneCellTerm::juxt_all(vec![f.clone(); k])
}

fn layer2(cell: &TwoCellTerm, k: usize) -> TwoCellTerm {
    let mut copies = vec![cell.clone(); k];
    match copies.pop() {
        None => TwoCellTerm::id(OneCellTerm::identity(0)),
        Some(last) => copies.into_iter().rev().fold(last, |acc, t| TwoCellTerm::juxt(t, acc)),
    }
}

fn swap_map() -> FinMap {
    FinMap::new(2, vec![1, 0]).expect("transposition on two points")
}

/// Boundary of the interchange cell for a pair of 1-cell terms: `f` applied
/// columnwise then `g` rowwise on one side, the transposed order on the
/// other, with corner reindexings mediating between the two block layouts.
pub fn interchange_square(
    theory: &TheoryPresentation,
    f: &OneCellTerm,
    g: &OneCellTerm,
) -> Result<(OneCellTerm, OneCellTerm)> {
    let (a, a1) = theory.typecheck_one(f)?;
    let (b, b1) = theory.typecheck_one(g)?;
    let src = OneCellTerm::pipeline(vec![layer(f, b), sig(a1, b), layer(g, a1)]);
    let tgt = OneCellTerm::pipeline(vec![
        sig(a, b),
        layer(g, a),
        sig(b1, a),
        layer(f, b1),
        sig(a1, b1),
    ]);
    Ok((src, tgt))
}

fn reserved(name: &str) -> bool {
    name.starts_with("base.")
        || name.starts_with("left.")
        || name.starts_with("right.")
        || name.starts_with("delta:")
}

struct SideNames {
    one: BTreeMap<String, String>,
    two: BTreeMap<String, String>,
}

impl SideNames {
    fn one(&self, n: &str) -> String {
        self.one.get(n).cloned().unwrap_or_else(|| n.to_string())
    }
    fn two(&self, n: &str) -> String {
        self.two.get(n).cloned().unwrap_or_else(|| n.to_string())
    }
}

fn gen_image(term: &OneCellTerm) -> Option<&str> {
    match term {
        OneCellTerm::Gen(n) => Some(n),
        _ => None,
    }
}

fn gen_image_two(cell: &TwoCellTerm) -> Option<&str> {
    match cell {
        TwoCellTerm::Gen(n) => Some(n),
        _ => None,
    }
}

fn check_arm(base: &TheoryPresentation, arm: &TheoryMorphismPresentation) -> Result<()> {
    if !arm.source.same_presentation(base)? {
        return Err(Error::invalid(format!(
            "arm {} does not start from the shared base {}",
            arm.name, base.name
        )));
    }
    let report = arm.validate(None)?;
    if !report.passed() {
        return Err(Error::invalid(format!("arm {} is not a valid morphism", arm.name)));
    }
    Ok(())
}

/// Which base generator each arm generator canonically names, per side.
fn base_images(
    base: &TheoryPresentation,
    arm: &TheoryMorphismPresentation,
) -> Result<(BTreeMap<String, String>, BTreeMap<String, String>)> {
    let mut img1: BTreeMap<String, String> = BTreeMap::new();
    for b in &base.one_cell_gens {
        let term = arm.gen1_map.get(&b.name).ok_or_else(|| {
            Error::invalid(format!("arm {} misses base generator {}", arm.name, b.name))
        })?;
        let n = gen_image(term).ok_or_else(|| {
            Error::Unsupported(format!(
                "gluing needs generator-to-generator base images; {} sends {} to a composite",
                arm.name, b.name
            ))
        })?;
        if img1.insert(n.to_string(), b.name.clone()).is_some() {
            return Err(Error::Unsupported(format!(
                "two base generators share the image {n} under {}",
                arm.name
            )));
        }
    }
    let mut img2: BTreeMap<String, String> = BTreeMap::new();
    for b in &base.two_cell_gens {
        let cell = arm.gen2_map.get(&b.name).ok_or_else(|| {
            Error::invalid(format!("arm {} misses base generator {}", arm.name, b.name))
        })?;
        let n = gen_image_two(cell).ok_or_else(|| {
            Error::Unsupported(format!(
                "gluing needs generator-to-generator base images; {} sends {} to a pasting",
                arm.name, b.name
            ))
        })?;
        if img2.insert(n.to_string(), b.name.clone()).is_some() {
            return Err(Error::Unsupported(format!(
                "two base generators share the image {n} under {}",
                arm.name
            )));
        }
    }
    Ok((img1, img2))
}

fn glue(
    base: &TheoryPresentation,
    left_arm: &TheoryMorphismPresentation,
    right_arm: &TheoryMorphismPresentation,
) -> Result<(TheoryPresentation, SideNames, SideNames)> {
    check_arm(base, left_arm)?;
    check_arm(base, right_arm)?;
    let (limg1, limg2) = base_images(base, left_arm)?;
    let (rimg1, rimg2) = base_images(base, right_arm)?;

    let plain = |theory: &TheoryPresentation,
                 img1: &BTreeMap<String, String>,
                 img2: &BTreeMap<String, String>| {
        let mut names: BTreeSet<String> = BTreeSet::new();
        for g in &theory.one_cell_gens {
            if !img1.contains_key(&g.name) {
                names.insert(g.name.clone());
            }
        }
        for g in &theory.two_cell_gens {
            if !img2.contains_key(&g.name) {
                names.insert(g.name.clone());
            }
        }
        names
    };
    let lplain = plain(&left_arm.target, &limg1, &limg2);
    let rplain = plain(&right_arm.target, &rimg1, &rimg2);
    let clash: BTreeSet<&String> = lplain.intersection(&rplain).collect();

    let side_names = |theory: &TheoryPresentation,
                      img1: &BTreeMap<String, String>,
                      img2: &BTreeMap<String, String>,
                      prefix: &str| {
        let rename = |img: &BTreeMap<String, String>, n: &str| match img.get(n) {
            Some(b) => format!("base.{b}"),
            None if clash.contains(&n.to_string()) || reserved(n) => format!("{prefix}.{n}"),
            None => n.to_string(),
        };
        let mut names = SideNames { one: BTreeMap::new(), two: BTreeMap::new() };
        for g in &theory.one_cell_gens {
            names.one.insert(g.name.clone(), rename(img1, &g.name));
        }
        for g in &theory.two_cell_gens {
            names.two.insert(g.name.clone(), rename(img2, &g.name));
        }
        names
    };
    let lnames = side_names(&left_arm.target, &limg1, &limg2, "left");
    let rnames = side_names(&right_arm.target, &rimg1, &rimg2, "right");

    let lt = left_arm.target.rename_gens(&|n| lnames.one(n), &|n| lnames.two(n));
    let rt = right_arm.target.rename_gens(&|n| rnames.one(n), &|n| rnames.two(n));

    let dim = if lt.dimension == Dimension::Two || rt.dimension == Dimension::Two {
        Dimension::Two
    } else {
        Dimension::One
    };
    let mut out = TheoryPresentation::new(
        format!("{}*{}@{}", left_arm.target.name, right_arm.target.name, base.name),
        dim,
    );
    out.one_cell_gens = lt.one_cell_gens.clone();
    for g in &rt.one_cell_gens {
        match out.gen1(&g.name) {
            None => out.one_cell_gens.push(g.clone()),
            Some(existing) if existing == g => {}
            Some(_) => {
                return Err(Error::invalid(format!(
                    "shared generator {} has mismatched arities across the arms",
                    g.name
                )))
            }
        }
    }
    out.one_cell_relations = lt.one_cell_relations.clone();
    for rel in &rt.one_cell_relations {
        let mirrored = (rel.1.clone(), rel.0.clone());
        if !out.one_cell_relations.contains(rel) && !out.one_cell_relations.contains(&mirrored) {
            out.one_cell_relations.push(rel.clone());
        }
    }
    out.two_cell_gens = lt.two_cell_gens.clone();
    for g in &rt.two_cell_gens {
        match out.gen2(&g.name) {
            None => out.two_cell_gens.push(g.clone()),
            Some(existing) if existing == g => {}
            Some(_) => {
                return Err(Error::invalid(format!(
                    "shared generator {} has mismatched boundaries across the arms",
                    g.name
                )))
            }
        }
    }
    out.two_cell_relations = lt.two_cell_relations.clone();
    for rel in &rt.two_cell_relations {
        let mirrored = (rel.1.clone(), rel.0.clone());
        if !out.two_cell_relations.contains(rel) && !out.two_cell_relations.contains(&mirrored) {
            out.two_cell_relations.push(rel.clone());
        }
    }
    out.normalizer = if lt.normalizer == NormalizerKind::StrictAssoc
        || rt.normalizer == NormalizerKind::StrictAssoc
    {
        NormalizerKind::StrictAssoc
    } else {
        NormalizerKind::Syntactic
    };
    out.coherent = lt.coherent && rt.coherent;
    Ok((out, lnames, rnames))
}

/// Pushout of two presentation morphisms out of a shared base.  Base-image
/// generators are identified and renamed `base.*`; other generators keep
/// their names unless the two sides collide, in which case they are prefixed
/// `left.*` / `right.*`.
pub fn coproduct_over(
    base: &TheoryPresentation,
    left_arm: &TheoryMorphismPresentation,
    right_arm: &TheoryMorphismPresentation,
) -> Result<TheoryPresentation> {
    Ok(glue(base, left_arm, right_arm)?.0)
}

/// The morphism sending each generator of a theory with a namesake in
/// `target` to that namesake.  Errors when a generator has none.
pub fn evident_inclusion(
    base: &TheoryPresentation,
    target: &TheoryPresentation,
) -> Result<TheoryMorphismPresentation> {
    let mut m = TheoryMorphismPresentation::new(
        format!("{}->{}", base.name, target.name),
        base.clone(),
        target.clone(),
    );
    for g in &base.one_cell_gens {
        if target.gen1(&g.name).is_none() {
            return Err(Error::invalid(format!(
                "{} has no generator named {} to include into",
                target.name, g.name
            )));
        }
        m.map1(&g.name, OneCellTerm::gen(&g.name));
    }
    for g in &base.two_cell_gens {
        if target.gen2(&g.name).is_none() {
            return Err(Error::invalid(format!(
                "{} has no generator named {} to include into",
                target.name, g.name
            )));
        }
        m.map2(&g.name, TwoCellTerm::gen(&g.name));
    }
    Ok(m)
}

fn injection(
    name: &str,
    arm: &TheoryMorphismPresentation,
    names: &SideNames,
    product: &TheoryPresentation,
) -> TheoryMorphismPresentation {
    let mut m =
        TheoryMorphismPresentation::new(name, arm.target.clone(), product.clone());
    for g in &arm.target.one_cell_gens {
        m.map1(&g.name, OneCellTerm::gen(names.one(&g.name)));
    }
    for g in &arm.target.two_cell_gens {
        m.map2(&g.name, TwoCellTerm::gen(names.two(&g.name)));
    }
    m
}

/// Reindexing that regroups `b` rows of `p + q` entries into the `b*p`
/// entries of the first block followed by the `b*q` of the second.
fn split_rows(b: usize, p: usize, q: usize) -> FinMap {
    let mut table = vec![0usize; b * (p + q)];
    for i in 0..b {
        for r in 0..p {
            table[i * p + r] = i * (p + q) + r;
        }
        for r in 0..q {
            table[b * p + i * q + r] = i * (p + q) + p + r;
        }
    }
    FinMap::new(b * (p + q), table).expect("row split is a bijection")
}

/// Reindexing that interleaves `m` blocks of `r1` outputs with `m` blocks of
/// `s1` outputs back into `m` rows of `r1 + s1`.
fn merge_columns(m: usize, r1: usize, s1: usize) -> FinMap {
    let mut table = vec![0usize; m * (r1 + s1)];
    for i in 0..m {
        for t in 0..r1 {
            table[i * (r1 + s1) + t] = i * r1 + t;
        }
        for t in 0..s1 {
            table[i * (r1 + s1) + r1 + t] = m * r1 + i * s1 + t;
        }
    }
    FinMap::new(m * (r1 + s1), table).expect("column merge is a bijection")
}

fn is_base_cell(term: &OneCellTerm) -> bool {
    match term {
        OneCellTerm::Base(_) => true,
        OneCellTerm::Gen(n) => n.starts_with("base."),
        _ => false,
    }
}

/// Recursive expansion over product-side terms.  Both inputs use the
/// renamed generator vocabulary of `kp.underlying`.
fn expand(kp: &KroneckerPresentation, f: &OneCellTerm, g: &OneCellTerm) -> Result<TwoCellTerm> {
    let th = &kp.underlying;
    if is_base_cell(f) {
        return Ok(TwoCellTerm::id(interchange_square(th, f, g)?.0));
    }
    match f {
        OneCellTerm::Compose(f2, f1) => {
            let (_, c) = th.typecheck_one(f1)?;
            let (_, a1) = th.typecheck_one(f2)?;
            let (b, b1) = th.typecheck_one(g)?;
            let first = expand(kp, f2, g)?.after(layer(f1, b));
            let tail = OneCellTerm::pipeline(vec![sig(b1, c), layer(f2, b1), sig(a1, b1)]);
            let second = expand(kp, f1, g)?.before(tail);
            Ok(TwoCellTerm::vcomp(second, first))
        }
        OneCellTerm::Juxtapose(fa, fb) => {
            let (p, _) = th.typecheck_one(fa)?;
            let (q, _) = th.typecheck_one(fb)?;
            let (b, _) = th.typecheck_one(g)?;
            let da = expand(kp, fa, g)?;
            let db = expand(kp, fb, g)?;
            Ok(TwoCellTerm::juxt(da, db).after(OneCellTerm::Base(split_rows(b, p, q))))
        }
        OneCellTerm::Gen(fname) => {
            if is_base_cell(g) {
                return Ok(TwoCellTerm::id(interchange_square(th, f, g)?.0));
            }
            match g {
                OneCellTerm::Gen(gname) => {
                    let name = kp
                        .delta_table
                        .get(&(fname.clone(), gname.clone()))
                        .ok_or_else(|| {
                            Error::invalid(format!(
                                "no interchange generator for the pair ({fname}, {gname})"
                            ))
                        })?;
                    Ok(TwoCellTerm::gen(name))
                }
                OneCellTerm::Compose(g2, g1) => {
                    let (a, a1) = th.typecheck_one(f)?;
                    let (b, c) = th.typecheck_one(g1)?;
                    let first = expand(kp, f, g1)?.before(layer(g2, a1));
                    let tail = OneCellTerm::pipeline(vec![sig(a, b), layer(g1, a), sig(c, a)]);
                    let second = expand(kp, f, g2)?.after(tail);
                    Ok(TwoCellTerm::vcomp(second, first))
                }
                OneCellTerm::Juxtapose(ga, gb) => {
                    let (_, a1) = th.typecheck_one(f)?;
                    let (_, r1) = th.typecheck_one(ga)?;
                    let (_, s1) = th.typecheck_one(gb)?;
                    let da = expand(kp, f, ga)?;
                    let db = expand(kp, f, gb)?;
                    Ok(TwoCellTerm::juxt(da, db)
                        .before(OneCellTerm::Base(merge_columns(a1, r1, s1))))
                }
                OneCellTerm::Base(_) => unreachable!("base cells handled above"),
            }
        }
        OneCellTerm::Base(_) => unreachable!("base cells handled above"),
    }
}

/// Glue two theories over a base and add the interchange generators plus
/// their naturality relations.
pub fn kronecker(
    base: &TheoryPresentation,
    left_arm: &TheoryMorphismPresentation,
    right_arm: &TheoryMorphismPresentation,
) -> Result<KroneckerPresentation> {
    let (mut product, lnames, rnames) = glue(base, left_arm, right_arm)?;
    product.dimension = Dimension::Two;

    let plain_one = |arm: &TheoryMorphismPresentation, names: &SideNames| -> Vec<String> {
        arm.target
            .one_cell_gens
            .iter()
            .map(|g| names.one(&g.name))
            .filter(|n| !n.starts_with("base."))
            .collect()
    };
    let lefts = plain_one(left_arm, &lnames);
    let rights = plain_one(right_arm, &rnames);

    let mut delta_table = BTreeMap::new();
    for f in &lefts {
        for g in &rights {
            let name = format!("delta:{f}:{g}");
            let (src, tgt) =
                interchange_square(&product, &OneCellTerm::gen(f), &OneCellTerm::gen(g))?;
            product.two_cell_gens.push(Gen2 {
                name: name.clone(),
                source: src,
                target: tgt,
                invertible: true,
            });
            delta_table.insert((f.clone(), g.clone()), name);
        }
    }

    let left_injection = injection("left", left_arm, &lnames, &product);
    let right_injection = injection("right", right_arm, &rnames, &product);
    let mut kp = KroneckerPresentation {
        underlying: product,
        base: base.clone(),
        left_injection,
        right_injection,
        delta_table,
        delta_invertible: true,
    };

    let mut schemas = Vec::new();
    for alpha in &left_arm.target.two_cell_gens {
        let renamed = lnames.two(&alpha.name);
        if renamed.starts_with("base.") {
            continue;
        }
        let gen = kp.underlying.gen2(&renamed).expect("renamed generator present").clone();
        let (a, a1) = kp.underlying.typecheck_one(&gen.source)?;
        for gname in &rights {
            let gterm = OneCellTerm::gen(gname);
            let (b, b1) = kp.underlying.typecheck_one(&gterm)?;
            let cell = TwoCellTerm::gen(&renamed);
            let s_side = layer2(&cell, b)
                .before(OneCellTerm::pipeline(vec![sig(a1, b), layer(&gterm, a1)]));
            let t_side = layer2(&cell, b1)
                .after(OneCellTerm::pipeline(vec![sig(a, b), layer(&gterm, a), sig(b1, a)]))
                .before(sig(a1, b1));
            let lhs = TwoCellTerm::vcomp(expand(&kp, &gen.target, &gterm)?, s_side);
            let rhs = TwoCellTerm::vcomp(t_side, expand(&kp, &gen.source, &gterm)?);
            schemas.push((lhs, rhs));
        }
    }
    for beta in &right_arm.target.two_cell_gens {
        let renamed = rnames.two(&beta.name);
        if renamed.starts_with("base.") {
            continue;
        }
        let gen = kp.underlying.gen2(&renamed).expect("renamed generator present").clone();
        let (b, b1) = kp.underlying.typecheck_one(&gen.source)?;
        for fname in &lefts {
            let fterm = OneCellTerm::gen(fname);
            let (a, a1) = kp.underlying.typecheck_one(&fterm)?;
            let cell = TwoCellTerm::gen(&renamed);
            let s_side = layer2(&cell, a1)
                .after(OneCellTerm::pipeline(vec![layer(&fterm, b), sig(a1, b)]));
            let t_side = layer2(&cell, a)
                .after(sig(a, b))
                .before(OneCellTerm::pipeline(vec![sig(b1, a), layer(&fterm, b1), sig(a1, b1)]));
            let lhs = TwoCellTerm::vcomp(expand(&kp, &fterm, &gen.target)?, s_side);
            let rhs = TwoCellTerm::vcomp(t_side, expand(&kp, &fterm, &gen.source)?);
            schemas.push((lhs, rhs));
        }
    }
    kp.underlying.two_cell_relations.extend(schemas);
    kp.left_injection.target = kp.underlying.clone();
    kp.right_injection.target = kp.underlying.clone();
    Ok(kp)
}

/// Expand the interchange cell for a pair of linear 1-cell terms, given in
/// the vocabularies of the left and right theories respectively.
pub fn delta_term(
    kp: &KroneckerPresentation,
    f: &OneCellTerm,
    g: &OneCellTerm,
) -> Result<TwoCellTerm> {
    let f = kp.left_injection.apply_one(f)?;
    let g = kp.right_injection.apply_one(g)?;
    if !kp.underlying.is_linear(&f)? || !kp.underlying.is_linear(&g)? {
        return Err(Error::invalid("interchange expansion needs linear 1-cells on both sides"));
    }
    expand(kp, &f, &g)
}

/// The interchange square a [`delta_term`] call must bound, for the same
/// arm-side inputs.
pub fn delta_boundary(
    kp: &KroneckerPresentation,
    f: &OneCellTerm,
    g: &OneCellTerm,
) -> Result<(OneCellTerm, OneCellTerm)> {
    let f = kp.left_injection.apply_one(f)?;
    let g = kp.right_injection.apply_one(g)?;
    interchange_square(&kp.underlying, &f, &g)
}

/// Braiding obtained from a binary-generator interchange cell by plugging
/// the base unit into the two slot patterns `(A, e, e, B)` and
/// `(e, B, A, e)` and composing the first with the inverse of the second.
pub fn derived_braiding(kp: &KroneckerPresentation) -> Result<TwoCellTerm> {
    if !kp.delta_invertible {
        return Err(Error::invalid(
            "derived braiding inverts interchange cells, but this product's are not invertible",
        ));
    }
    let unit = kp
        .base
        .one_cell_gens
        .iter()
        .find(|g| g.source == 0 && g.target == 1)
        .ok_or_else(|| Error::invalid("derived braiding needs a 0-to-1 generator in the base"))?;
    let unit = OneCellTerm::gen(format!("base.{}", unit.name));
    let pair = kp
        .delta_table
        .iter()
        .find(|((f, g), _)| {
            let fa = kp.underlying.gen1(f).map(|x| (x.source, x.target));
            let ga = kp.underlying.gen1(g).map(|x| (x.source, x.target));
            fa == Some((2, 1)) && ga == Some((2, 1))
        })
        .map(|(_, name)| name.clone())
        .ok_or_else(|| {
            Error::invalid("derived braiding needs a binary generator on each side")
        })?;
    Ok(braiding_from_parts(TwoCellTerm::gen(pair), unit))
}

/// The two unit-slot instantiations of a binary-by-binary interchange cell,
/// composed into a braiding.  `delta` must have the four-input boundary of
/// such a cell and `unit` must be a shared `0 -> 1` generator.
pub(crate) fn braiding_from_parts(delta: TwoCellTerm, unit: OneCellTerm) -> TwoCellTerm {
    let id1 = OneCellTerm::identity(1);
    let outer_units = OneCellTerm::juxt_all(vec![
        id1.clone(),
        unit.clone(),
        unit.clone(),
        id1,
    ]);
    let inner_units = OneCellTerm::juxt_all(vec![
        unit.clone(),
        OneCellTerm::Base(swap_map()),
        unit,
    ]);
    TwoCellTerm::vcomp(
        TwoCellTerm::inverse(delta.clone().after(inner_units)),
        delta.after(outer_units),
    )
}

/// Default interchange rule: each cell acts as the positive lift of its
/// boundary block permutation.
pub fn crossing_delta_rule(
    kind: ModelKind,
    underlying: &TheoryPresentation,
) -> Result<DeltaRule> {
    let mut trimmed = underlying.clone();
    trimmed.two_cell_gens.retain(|g| g.name.starts_with("delta:"));
    trimmed.two_cell_relations.clear();
    let interp = model_interp(kind, &trimmed)?;
    Ok(Box::new(move |g: &Gen2, sizes: &[usize]| interp.rule_value(&g.name, sizes)))
}

fn combined_interp(
    kp: &KroneckerPresentation,
    left: ModelInterp,
    right: ModelInterp,
    delta_rule: DeltaRule,
) -> Result<ModelInterp> {
    if left.kind != right.kind {
        return Err(Error::model(format!(
            "arm interpretations disagree on the model kind: {} vs {}",
            left.kind, right.kind
        )));
    }
    if !left.theory.same_presentation(&kp.left_injection.source)?
        || !right.theory.same_presentation(&kp.right_injection.source)?
    {
        return Err(Error::model("arm interpretations must match the glued theories"));
    }
    let mut out = ModelInterp::new(left.kind, kp.underlying.clone());
    let lmap = kp.left_injection.gen2_map.clone();
    for (orig, rule) in left.into_rules() {
        if let Some(TwoCellTerm::Gen(renamed)) = lmap.get(&orig) {
            out.add_rule(renamed.clone(), rule);
        }
    }
    let rmap = kp.right_injection.gen2_map.clone();
    for (orig, rule) in right.into_rules() {
        if let Some(TwoCellTerm::Gen(renamed)) = rmap.get(&orig) {
            out.add_rule(renamed.clone(), rule);
        }
    }
    let delta_rule = Rc::new(delta_rule);
    for name in kp.delta_table.values() {
        let gen = kp
            .underlying
            .gen2(name)
            .ok_or_else(|| Error::model(format!("missing interchange generator {name}")))?
            .clone();
        let rule = Rc::clone(&delta_rule);
        out.add_rule(name.clone(), Box::new(move |sizes: &[usize]| rule(&gen, sizes)));
    }
    out.covers()?;
    Ok(out)
}

fn csv(sizes: &[usize]) -> String {
    sizes.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
}

fn matching<'a>(sizes: &'a [Vec<usize>], arity: usize) -> Vec<&'a Vec<usize>> {
    sizes.iter().filter(|sv| sv.len() == arity).collect()
}

fn probe_identity(
    report: &mut Report,
    interp: &ModelInterp,
    id: &str,
    term: &TwoCellTerm,
    sizes: &[Vec<usize>],
) {
    let arity = match interp
        .theory
        .typecheck_two(term)
        .and_then(|(src, _)| interp.theory.typecheck_one(&src))
    {
        Ok((a, _)) => a,
        Err(e) => {
            report.error(id, e.to_string());
            return;
        }
    };
    for sv in matching(sizes, arity) {
        let line = format!("{id}@{}", csv(sv));
        match eval_two_cell(interp, term, sv) {
            Ok(v) => {
                let total: usize = sv.iter().sum();
                match v.equal(&ModelValue::identity(interp.kind, total)) {
                    Ok(true) => report.pass(line, "identity"),
                    Ok(false) => report.fail(line, format!("expected identity, got {}", v.render())),
                    Err(e) => report.error(line, e.to_string()),
                }
            }
            Err(e) => report.error(line, e.to_string()),
        }
    }
}

fn probe_equal(
    report: &mut Report,
    interp: &ModelInterp,
    id: &str,
    lhs: &TwoCellTerm,
    rhs: &TwoCellTerm,
    sizes: &[Vec<usize>],
) {
    let arity = match interp
        .theory
        .typecheck_two(lhs)
        .and_then(|(src, _)| interp.theory.typecheck_one(&src))
    {
        Ok((a, _)) => a,
        Err(e) => {
            report.error(id, e.to_string());
            return;
        }
    };
    for sv in matching(sizes, arity) {
        let line = format!("{id}@{}", csv(sv));
        let l = eval_two_cell(interp, lhs, sv);
        let r = eval_two_cell(interp, rhs, sv);
        match (l, r) {
            (Ok(lv), Ok(rv)) => match lv.equal(&rv) {
                Ok(true) => report.pass(line, "equal"),
                Ok(false) => {
                    report.fail(line, format!("lhs={} rhs={}", lv.render(), rv.render()))
                }
                Err(e) => report.error(line, e.to_string()),
            },
            (Err(e), _) | (_, Err(e)) => report.error(line, e.to_string()),
        }
    }
}

/// Check a product presentation against a model: every stored 2-cell
/// relation (the arms' own plus the interchange naturality schema), the
/// definitional behaviour of expansion at base cells and under identity
/// composition and juxtaposition, and any requested consequence equations.
pub fn check_kronecker_model(
    kp: &KroneckerPresentation,
    left: ModelInterp,
    right: ModelInterp,
    delta_rule: DeltaRule,
    sizes: &[Vec<usize>],
    consequences: &[ConsequenceEq],
) -> Result<Report> {
    let interp = combined_interp(kp, left, right, delta_rule)?;
    let mut report = check_relations(&kp.underlying, &interp, sizes)?;

    let plain_images = |m: &TheoryMorphismPresentation| -> BTreeSet<String> {
        m.gen1_map
            .values()
            .filter_map(|t| match t {
                OneCellTerm::Gen(n) if !n.starts_with("base.") => Some(n.clone()),
                _ => None,
            })
            .collect()
    };
    let lefts = plain_images(&kp.left_injection);
    let rights = plain_images(&kp.right_injection);
    let base_cells =
        [("id1", OneCellTerm::identity(1)), ("swap", OneCellTerm::Base(swap_map()))];

    for g in &rights {
        let gterm = OneCellTerm::gen(g.as_str());
        for (label, u) in &base_cells {
            match expand(kp, u, &gterm) {
                Ok(t) => probe_identity(
                    &mut report,
                    &interp,
                    &format!("cond1.{label}:{g}"),
                    &t,
                    sizes,
                ),
                Err(e) => report.error(format!("cond1.{label}:{g}"), e.to_string()),
            }
        }
    }
    for f in &lefts {
        let fterm = OneCellTerm::gen(f.as_str());
        for (label, u) in &base_cells {
            match expand(kp, &fterm, u) {
                Ok(t) => probe_identity(
                    &mut report,
                    &interp,
                    &format!("cond1.{f}:{label}"),
                    &t,
                    sizes,
                ),
                Err(e) => report.error(format!("cond1.{f}:{label}"), e.to_string()),
            }
        }
    }

    for ((f, g), name) in &kp.delta_table {
        let fterm = OneCellTerm::gen(f);
        let gterm = OneCellTerm::gen(g);
        let (a, _) = kp.underlying.typecheck_one(&fterm)?;
        let (b, _) = kp.underlying.typecheck_one(&gterm)?;
        let plain = TwoCellTerm::gen(name);

        let doubled_f = OneCellTerm::juxt(fterm.clone(), fterm.clone());
        match expand(kp, &doubled_f, &gterm) {
            Ok(t) => {
                let pasted = TwoCellTerm::juxt(plain.clone(), plain.clone())
                    .after(OneCellTerm::Base(split_rows(b, a, a)));
                probe_equal(&mut report, &interp, &format!("cond2.{f}:{g}"), &t, &pasted, sizes);
            }
            Err(e) => report.error(format!("cond2.{f}:{g}"), e.to_string()),
        }

        let pre_identity = OneCellTerm::compose(fterm.clone(), OneCellTerm::identity(a));
        match expand(kp, &pre_identity, &gterm) {
            Ok(t) => probe_equal(
                &mut report,
                &interp,
                &format!("cond3.{f}:{g}"),
                &t,
                &plain,
                sizes,
            ),
            Err(e) => report.error(format!("cond3.{f}:{g}"), e.to_string()),
        }
        let post_identity = OneCellTerm::compose(gterm.clone(), OneCellTerm::identity(b));
        match expand(kp, &fterm, &post_identity) {
            Ok(t) => probe_equal(
                &mut report,
                &interp,
                &format!("cond3.{f}:{g}.mirror"),
                &t,
                &plain,
                sizes,
            ),
            Err(e) => report.error(format!("cond3.{f}:{g}.mirror"), e.to_string()),
        }
    }

    check_consequences(&mut report, &interp, consequences, sizes);
    Ok(report)
}

/// Probe each named equation in the given model, one report line per size
/// vector, under the `catalog.` id prefix.  Usable with any interpretation,
/// not only the combined one built by [`check_kronecker_model`].
pub fn check_consequences(
    report: &mut Report,
    interp: &ModelInterp,
    consequences: &[ConsequenceEq],
    sizes: &[Vec<usize>],
) {
    for eq in consequences {
        let id = format!("catalog.{}", eq.name);
        if eq.sizes.is_empty() {
            probe_equal(report, interp, &id, &eq.lhs, &eq.rhs, sizes);
        } else {
            probe_equal(report, interp, &id, &eq.lhs, &eq.rhs, &eq.sizes);
        }
    }
}

/// Syntactic comparison of a product with its mirror image: generators must
/// correspond under the left/right swap, 1-cell relations must agree up to
/// normalization, namesake 2-cells must keep their boundaries, and each
/// interchange cell must pair with the mirrored one at the same arities.
pub fn kronecker_swap_isomorphic(
    a: &KroneckerPresentation,
    b: &KroneckerPresentation,
) -> Result<bool> {
    if !a.delta_invertible || !b.delta_invertible {
        return Ok(false);
    }
    if !a.base.same_presentation(&b.base)? {
        return Ok(false);
    }
    let swapname = |n: &str| -> String {
        if let Some(rest) = n.strip_prefix("left.") {
            format!("right.{rest}")
        } else if let Some(rest) = n.strip_prefix("right.") {
            format!("left.{rest}")
        } else {
            n.to_string()
        }
    };
    let deltas_a: BTreeSet<&String> = a.delta_table.values().collect();
    let mut delta_swap: BTreeMap<String, String> = BTreeMap::new();
    for ((f, g), name) in &a.delta_table {
        match b.delta_table.get(&(swapname(g), swapname(f))) {
            Some(m) => {
                delta_swap.insert(name.clone(), m.clone());
            }
            None => return Ok(false),
        }
    }
    if a.delta_table.len() != b.delta_table.len() {
        return Ok(false);
    }

    let want: BTreeSet<(String, usize, usize)> = a
        .underlying
        .one_cell_gens
        .iter()
        .map(|g| (swapname(&g.name), g.source, g.target))
        .collect();
    let have: BTreeSet<(String, usize, usize)> = b
        .underlying
        .one_cell_gens
        .iter()
        .map(|g| (g.name.clone(), g.source, g.target))
        .collect();
    if want != have {
        return Ok(false);
    }

    let renamed = a.underlying.rename_gens(&|n| swapname(n), &|n| {
        delta_swap.get(n).cloned().unwrap_or_else(|| swapname(n))
    });
    let normal_pair = |theory: &TheoryPresentation, l: &OneCellTerm, r: &OneCellTerm| {
        let ln = format!("{:?}", theory.normalize_one(l)?);
        let rn = format!("{:?}", theory.normalize_one(r)?);
        Ok::<_, Error>(if ln <= rn { (ln, rn) } else { (rn, ln) })
    };
    let mut rels_a = BTreeSet::new();
    for (l, r) in &renamed.one_cell_relations {
        rels_a.insert(normal_pair(&b.underlying, l, r)?);
    }
    let mut rels_b = BTreeSet::new();
    for (l, r) in &b.underlying.one_cell_relations {
        rels_b.insert(normal_pair(&b.underlying, l, r)?);
    }
    if rels_a != rels_b {
        return Ok(false);
    }

    for g in &a.underlying.two_cell_gens {
        if deltas_a.contains(&g.name) {
            let mirror = delta_swap.get(&g.name).expect("mirrored interchange cell");
            let h = match b.underlying.gen2(mirror) {
                Some(h) => h,
                None => return Ok(false),
            };
            let ga = a.underlying.typecheck_one(&g.source)?;
            let ha = b.underlying.typecheck_one(&h.source)?;
            if ga != ha || g.invertible != h.invertible {
                return Ok(false);
            }
        } else {
            let renamed_gen = renamed.gen2(&swapname(&g.name)).expect("renamed generator");
            let h = match b.underlying.gen2(&swapname(&g.name)) {
                Some(h) => h,
                None => return Ok(false),
            };
            use crate::presentation::Verdict;
            if b.underlying.one_eq(&renamed_gen.source, &h.source)? != Verdict::Equal
                || b.underlying.one_eq(&renamed_gen.target, &h.target)? != Verdict::Equal
                || g.invertible != h.invertible
            {
                return Ok(false);
            }
        }
    }
    if a.underlying.two_cell_gens.len() != b.underlying.two_cell_gens.len()
        || a.underlying.two_cell_relations.len() != b.underlying.two_cell_relations.len()
    {
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{size_vectors, standard_interp, Permutation};
    use crate::presentation::Verdict;
    use crate::theories::{build_theory, TheoryName};

    fn arm(base: TheoryName, target: TheoryName) -> TheoryMorphismPresentation {
        evident_inclusion(&build_theory(base), &build_theory(target)).unwrap()
    }

    fn smon_square() -> KroneckerPresentation {
        let base = build_theory(TheoryName::Point);
        kronecker(
            &base,
            &arm(TheoryName::Point, TheoryName::SMon),
            &arm(TheoryName::Point, TheoryName::SMon),
        )
        .unwrap()
    }

    #[test]
    fn pointed_coproduct_shares_the_unit() {
        let base = build_theory(TheoryName::Point);
        let t = coproduct_over(
            &base,
            &arm(TheoryName::Point, TheoryName::SMon),
            &arm(TheoryName::Point, TheoryName::SMon),
        )
        .unwrap();
        let mut names: Vec<&str> = t.one_cell_gens.iter().map(|g| g.name.as_str()).collect();
        names.sort();
        assert_eq!(names, vec!["base.unit", "left.tensor", "right.tensor"]);
        assert_eq!(t.name, "sMon*sMon@Point");
        t.validate().unwrap();
    }

    #[test]
    fn coproduct_over_the_empty_base_with_an_empty_arm_is_the_other_arm() {
        let fin = build_theory(TheoryName::Fin);
        let smon = build_theory(TheoryName::SMon);
        let left = evident_inclusion(&fin, &smon).unwrap();
        let right = evident_inclusion(&fin, &fin).unwrap();
        let t = coproduct_over(&fin, &left, &right).unwrap();
        assert!(t.same_presentation(&smon).unwrap());
    }

    #[test]
    fn the_pointed_square_has_one_interchange_cell_with_the_expected_boundary() {
        let kp = smon_square();
        assert_eq!(kp.delta_table.len(), 1);
        let name = kp.delta_table.values().next().unwrap();
        assert_eq!(name, "delta:left.tensor:right.tensor");
        let gen = kp.underlying.gen2(name).unwrap();

        let phi = OneCellTerm::gen("left.tensor");
        let tens = OneCellTerm::gen("right.tensor");
        let want_src = OneCellTerm::compose(tens.clone(), OneCellTerm::juxt(phi.clone(), phi.clone()));
        let want_tgt = OneCellTerm::compose(
            phi,
            OneCellTerm::compose(
                OneCellTerm::juxt(tens.clone(), tens),
                OneCellTerm::Base(corner_sigma(2, 2)),
            ),
        );
        assert_eq!(kp.underlying.one_eq(&gen.source, &want_src).unwrap(), Verdict::Equal);
        assert_eq!(kp.underlying.one_eq(&gen.target, &want_tgt).unwrap(), Verdict::Equal);
        assert!(kp.underlying.two_cell_relations.is_empty());
        kp.underlying.validate().unwrap();
    }

    #[test]
    fn expansion_of_a_composite_bounds_its_own_interchange_square() {
        let kp = smon_square();
        let tens = OneCellTerm::gen("tensor");
        let f = OneCellTerm::compose(
            tens.clone(),
            OneCellTerm::juxt(tens.clone(), OneCellTerm::identity(1)),
        );
        let t = delta_term(&kp, &f, &tens).unwrap();
        let (src, tgt) = kp.underlying.typecheck_two(&t).unwrap();
        let (want_src, want_tgt) = delta_boundary(&kp, &f, &tens).unwrap();
        assert_eq!(kp.underlying.one_eq(&src, &want_src).unwrap(), Verdict::Equal);
        assert_eq!(kp.underlying.one_eq(&tgt, &want_tgt).unwrap(), Verdict::Equal);
        assert!(matches!(t, TwoCellTerm::VComp(_, _)));
    }

    #[test]
    fn derived_braiding_swaps_two_objects() {
        let kp = smon_square();
        let braiding = derived_braiding(&kp).unwrap();
        let (src, tgt) = kp.underlying.typecheck_two(&braiding).unwrap();
        let tens = OneCellTerm::gen("right.tensor");
        let swapped = OneCellTerm::compose(tens.clone(), OneCellTerm::Base(swap_map()));
        assert_eq!(kp.underlying.one_eq(&src, &tens).unwrap(), Verdict::Equal);
        assert_eq!(kp.underlying.one_eq(&tgt, &swapped).unwrap(), Verdict::Equal);

        let interp = model_interp(ModelKind::Braid, &kp.underlying).unwrap();
        let v = eval_two_cell(&interp, &braiding, &[1, 1]).unwrap();
        match v {
            ModelValue::Braid(w) => assert_eq!(w.letters().iter().map(|l| l.abs()).sum::<i32>(), 1),
            other => panic!("expected a braid value, got {}", other.render()),
        }
        let perm = model_interp(ModelKind::Perm, &kp.underlying).unwrap();
        let v = eval_two_cell(&perm, &braiding, &[1, 1]).unwrap();
        assert_eq!(v, ModelValue::Perm(Permutation::from_table(vec![1, 0]).unwrap()));
    }

    #[test]
    fn the_pointed_square_passes_its_model_check() {
        let kp = smon_square();
        let left = model_interp(ModelKind::Braid, &kp.left_injection.source).unwrap();
        let right = model_interp(ModelKind::Braid, &kp.right_injection.source).unwrap();
        let rule = crossing_delta_rule(ModelKind::Braid, &kp.underlying).unwrap();
        let mut sizes = size_vectors(4, 1);
        sizes.extend(size_vectors(2, 1));
        sizes.extend(size_vectors(8, 1));
        let report = check_kronecker_model(&kp, left, right, rule, &sizes, &[]).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.lines.iter().any(|l| l.id.starts_with("cond1.")));
        assert!(report.lines.iter().any(|l| l.id.starts_with("cond2.")));
        assert!(report.lines.iter().any(|l| l.id.starts_with("cond3.")));
    }

    #[test]
    fn the_braided_twist_product_forces_twist_naturality() {
        let fin = build_theory(TheoryName::Fin);
        let kp = kronecker(
            &fin,
            &arm(TheoryName::Fin, TheoryName::SBraid),
            &arm(TheoryName::Fin, TheoryName::Twist),
        )
        .unwrap();
        // The twist theory has no 1-cell generators, so no interchange
        // cells arise; the product's force is the naturality schema of the
        // twist against the braided side's generators.
        assert!(kp.delta_table.is_empty());
        let own_relations = build_theory(TheoryName::SBraid).two_cell_relations.len()
            + build_theory(TheoryName::Twist).two_cell_relations.len();
        assert_eq!(kp.underlying.two_cell_relations.len(), own_relations + 2);
        kp.underlying.validate().unwrap();

        let last = kp.underlying.two_cell_relations.len() - 2;
        let (lhs, rhs) = &kp.underlying.two_cell_relations[last];
        let interp = model_interp(ModelKind::Ribbon, &kp.underlying).unwrap();
        let lv = eval_two_cell(&interp, lhs, &[1, 1]).unwrap();
        let rv = eval_two_cell(&interp, rhs, &[1, 1]).unwrap();
        assert!(!lv.equal(&rv).unwrap(), "ribbon categories are balanced, not symmetric");
    }

    #[test]
    fn mirrored_products_are_swap_isomorphic() {
        let base = build_theory(TheoryName::Point);
        let ab = kronecker(
            &base,
            &arm(TheoryName::Point, TheoryName::SMon),
            &arm(TheoryName::Point, TheoryName::SBraid),
        )
        .unwrap();
        let ba = kronecker(
            &base,
            &arm(TheoryName::Point, TheoryName::SBraid),
            &arm(TheoryName::Point, TheoryName::SMon),
        )
        .unwrap();
        assert!(kronecker_swap_isomorphic(&ab, &ba).unwrap());
        assert!(kronecker_swap_isomorphic(&ab, &smon_square()).is_ok_and(|v| !v));
    }

    #[test]
    fn nonlinear_input_is_rejected() {
        let kp = smon_square();
        let diag = OneCellTerm::Base(FinMap::new(1, vec![0, 0]).unwrap());
        let f = OneCellTerm::compose(OneCellTerm::gen("tensor"), diag);
        assert!(delta_term(&kp, &f, &OneCellTerm::gen("tensor")).is_err());
    }

    #[test]
    fn the_ribbon_model_rejects_exactly_the_forced_naturality() {
        let fin = build_theory(TheoryName::Fin);
        let kp = kronecker(
            &fin,
            &arm(TheoryName::Fin, TheoryName::SBraid),
            &arm(TheoryName::Fin, TheoryName::Twist),
        )
        .unwrap();
        let left = model_interp(ModelKind::Ribbon, &build_theory(TheoryName::SBraid)).unwrap();
        let right = standard_interp(ModelKind::Ribbon, TheoryName::Twist).unwrap();
        let rule = crossing_delta_rule(ModelKind::Ribbon, &kp.underlying).unwrap();
        let mut sizes = Vec::new();
        for arity in 0..=4 {
            sizes.extend(size_vectors(arity, 1));
        }
        let report = check_kronecker_model(&kp, left, right, rule, &sizes, &[]).unwrap();
        assert!(!report.passed(), "{report}");
        let forced = kp.underlying.two_cell_relations.len() - 2;
        for line in &report.lines {
            if line.status == crate::report::Status::Fail {
                assert!(
                    line.id.starts_with(&format!("rel2.{forced}@1,1")),
                    "unexpected failure: {line}"
                );
            }
        }
    }
}
