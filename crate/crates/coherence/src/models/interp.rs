//! Free-model evaluation of pasting terms.
//!
//! A 2-cell between linear 1-cells `n -> p` denotes, in the free model on
//! one generator, a p-tuple of morphisms: one per output of the boundary,
//! acting on the strands of the variables in that output.  The evaluator
//! keeps that tuple shape throughout the recursion.  Horizontal pasting is
//! where it pays off: the outer 1-cell's leaf order regroups the inner
//! components, then the outer cell's value composes on top, block by block.
//!
//! Every generator instance, and the final result, is checked against the
//! strand bijection its boundary demands.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::presentation::{
    Gen2, OneCellTerm, OpTree, TheoryPresentation, TwoCellTerm, Verdict,
};
use crate::report::Report;
use crate::theories::{build_theory, TheoryName};

use super::braid::{positive_lift, BraidWord};
use super::perm::Permutation;
use super::ribbon::RibbonBraid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelKind {
    Perm,
    Braid,
    Ribbon,
    Thin,
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModelKind::Perm => "perm",
            ModelKind::Braid => "braid",
            ModelKind::Ribbon => "ribbon",
            ModelKind::Thin => "thin",
        })
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perm" => Ok(ModelKind::Perm),
            "braid" => Ok(ModelKind::Braid),
            "ribbon" => Ok(ModelKind::Ribbon),
            "thin" => Ok(ModelKind::Thin),
            other => Err(Error::model(format!("unknown model kind {other:?}"))),
        }
    }
}

/// A morphism of one of the shipped free models.  Thin morphisms carry only
/// their strand count: parallel thin cells are always equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelValue {
    Perm(Permutation),
    Braid(BraidWord),
    Ribbon(RibbonBraid),
    Thin(usize),
}

impl ModelValue {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelValue::Perm(_) => ModelKind::Perm,
            ModelValue::Braid(_) => ModelKind::Braid,
            ModelValue::Ribbon(_) => ModelKind::Ribbon,
            ModelValue::Thin(_) => ModelKind::Thin,
        }
    }

    pub fn identity(kind: ModelKind, strands: usize) -> ModelValue {
        match kind {
            ModelKind::Perm => ModelValue::Perm(Permutation::identity(strands)),
            ModelKind::Braid => ModelValue::Braid(BraidWord::identity(strands)),
            ModelKind::Ribbon => ModelValue::Ribbon(RibbonBraid::identity(strands)),
            ModelKind::Thin => ModelValue::Thin(strands),
        }
    }

    pub fn strands(&self) -> usize {
        match self {
            ModelValue::Perm(p) => p.degree(),
            ModelValue::Braid(b) => b.strands(),
            ModelValue::Ribbon(r) => r.strands(),
            ModelValue::Thin(n) => *n,
        }
    }

    pub fn then(&self, other: &ModelValue) -> Result<ModelValue> {
        match (self, other) {
            (ModelValue::Perm(a), ModelValue::Perm(b)) => Ok(ModelValue::Perm(a.then(b)?)),
            (ModelValue::Braid(a), ModelValue::Braid(b)) => Ok(ModelValue::Braid(a.then(b)?)),
            (ModelValue::Ribbon(a), ModelValue::Ribbon(b)) => Ok(ModelValue::Ribbon(a.then(b)?)),
            (ModelValue::Thin(a), ModelValue::Thin(b)) if a == b => Ok(ModelValue::Thin(*a)),
            _ => Err(Error::model("cannot compose values of different models")),
        }
    }

    pub fn block_sum(&self, other: &ModelValue) -> Result<ModelValue> {
        match (self, other) {
            (ModelValue::Perm(a), ModelValue::Perm(b)) => Ok(ModelValue::Perm(a.block_sum(b))),
            (ModelValue::Braid(a), ModelValue::Braid(b)) => Ok(ModelValue::Braid(a.block_sum(b))),
            (ModelValue::Ribbon(a), ModelValue::Ribbon(b)) => {
                Ok(ModelValue::Ribbon(a.block_sum(b)))
            }
            (ModelValue::Thin(a), ModelValue::Thin(b)) => Ok(ModelValue::Thin(a + b)),
            _ => Err(Error::model("cannot sum values of different models")),
        }
    }

    pub fn inverse(&self) -> ModelValue {
        match self {
            ModelValue::Perm(p) => ModelValue::Perm(p.inverse()),
            ModelValue::Braid(b) => ModelValue::Braid(b.inverse()),
            ModelValue::Ribbon(r) => ModelValue::Ribbon(r.inverse()),
            ModelValue::Thin(n) => ModelValue::Thin(*n),
        }
    }

    pub fn equal(&self, other: &ModelValue) -> Result<bool> {
        match (self, other) {
            (ModelValue::Perm(a), ModelValue::Perm(b)) => Ok(a == b),
            (ModelValue::Braid(a), ModelValue::Braid(b)) => a.equal(b),
            (ModelValue::Ribbon(a), ModelValue::Ribbon(b)) => a.equal(b),
            (ModelValue::Thin(a), ModelValue::Thin(b)) => Ok(a == b),
            _ => Err(Error::model("cannot compare values of different models")),
        }
    }

    /// Underlying strand bijection; thin morphisms have none.
    pub fn underlying(&self) -> Option<Permutation> {
        match self {
            ModelValue::Perm(p) => Some(p.clone()),
            ModelValue::Braid(b) => Some(b.perm_of()),
            ModelValue::Ribbon(r) => Some(r.braid.perm_of()),
            ModelValue::Thin(_) => None,
        }
    }

    pub fn render(&self) -> String {
        match self {
            ModelValue::Perm(p) => p.to_string(),
            ModelValue::Braid(b) => {
                let nf = b.normal_form_string();
                if nf.is_empty() {
                    "e".to_string()
                } else {
                    nf
                }
            }
            ModelValue::Ribbon(r) => r.to_string(),
            ModelValue::Thin(n) => format!("thin({n})"),
        }
    }
}

pub type GenRule = Box<dyn Fn(&[usize]) -> Result<ModelValue>>;

/// An interpretation of a theory's 2-cell generators as parametric model
/// morphisms: each rule receives the strand sizes of the generator's
/// variables.
pub struct ModelInterp {
    pub kind: ModelKind,
    pub theory: TheoryPresentation,
    rules: BTreeMap<String, GenRule>,
}

impl ModelInterp {
    pub fn new(kind: ModelKind, theory: TheoryPresentation) -> Self {
        ModelInterp { kind, theory, rules: BTreeMap::new() }
    }

    pub fn add_rule(&mut self, gen: impl Into<String>, rule: GenRule) {
        self.rules.insert(gen.into(), rule);
    }

    pub fn has_rule(&self, gen: &str) -> bool {
        self.rules.contains_key(gen)
    }

    pub fn rule_value(&self, gen: &str, sizes: &[usize]) -> Result<ModelValue> {
        let rule = self
            .rules
            .get(gen)
            .ok_or_else(|| Error::model(format!("uninterpreted 2-cell generator {gen}")))?;
        rule(sizes)
    }

    /// Consumes the interpretation, releasing its rule table so the rules
    /// can be rebound under renamed generators.
    pub fn into_rules(self) -> BTreeMap<String, GenRule> {
        self.rules
    }

    /// Errors unless every 2-cell generator of the theory has a rule.
    pub fn covers(&self) -> Result<()> {
        for g in &self.theory.two_cell_gens {
            if !self.rules.contains_key(&g.name) {
                return Err(Error::model(format!("uninterpreted 2-cell generator {}", g.name)));
            }
        }
        Ok(())
    }
}

/// Variables of each output of a 1-cell, in leaf order, after the theory's
/// own normalization.
fn leaf_groups(theory: &TheoryPresentation, term: &OneCellTerm) -> Result<Vec<Vec<usize>>> {
    let nf = theory.normalize_one(term)?;
    Ok(nf.outputs.iter().map(tree_vars).collect())
}

fn tree_vars(tree: &OpTree) -> Vec<usize> {
    fn walk(tree: &OpTree, out: &mut Vec<usize>) {
        match tree {
            OpTree::Var(v) => out.push(*v),
            OpTree::App { args, .. } => {
                for a in args {
                    walk(a, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(tree, &mut out);
    out
}

/// The strand bijection sending the source arrangement of variable blocks
/// to the target arrangement.
fn block_perm_from_orders(
    src_order: &[usize],
    tgt_order: &[usize],
    sizes: &[usize],
) -> Result<Permutation> {
    let offsets = |order: &[usize]| -> Result<BTreeMap<usize, usize>> {
        let mut map = BTreeMap::new();
        let mut at = 0;
        for &v in order {
            let size = *sizes.get(v).ok_or_else(|| {
                Error::model(format!("size-vector mismatch: no size for variable x{v}"))
            })?;
            if map.insert(v, at).is_some() {
                return Err(Error::model(format!("nonlinear boundary: x{v} appears twice")));
            }
            at += size;
        }
        Ok(map)
    };
    let src = offsets(src_order)?;
    let tgt = offsets(tgt_order)?;
    if src.keys().ne(tgt.keys()) {
        return Err(Error::model("boundary sides use different variables"));
    }
    let total: usize = src_order.iter().map(|&v| sizes[v]).sum();
    let mut table = vec![0; total];
    for (&v, &from) in &src {
        for t in 0..sizes[v] {
            table[from + t] = tgt[&v] + t;
        }
    }
    Permutation::from_table(table)
}

fn expected_block_perm(
    theory: &TheoryPresentation,
    src: &OneCellTerm,
    tgt: &OneCellTerm,
    sizes: &[usize],
) -> Result<Permutation> {
    let src_order: Vec<usize> = leaf_groups(theory, src)?.concat();
    let tgt_order: Vec<usize> = leaf_groups(theory, tgt)?.concat();
    block_perm_from_orders(&src_order, &tgt_order, sizes)
}

fn group_sizes(groups: &[Vec<usize>], sizes: &[usize]) -> Result<Vec<usize>> {
    groups
        .iter()
        .map(|group| {
            group
                .iter()
                .map(|&v| {
                    sizes.get(v).copied().ok_or_else(|| {
                        Error::model(format!("size-vector mismatch: no size for variable x{v}"))
                    })
                })
                .sum()
        })
        .collect()
}

fn eval_tuple(
    interp: &ModelInterp,
    term: &TwoCellTerm,
    sizes: &[usize],
) -> Result<Vec<ModelValue>> {
    let theory = &interp.theory;
    match term {
        TwoCellTerm::Id(w) => {
            let groups = leaf_groups(theory, w)?;
            group_sizes(&groups, sizes)?
                .into_iter()
                .map(|n| Ok(ModelValue::identity(interp.kind, n)))
                .collect()
        }
        TwoCellTerm::Gen(name) => {
            let g = theory
                .gen2(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            let src_groups = leaf_groups(theory, &g.source)?;
            if src_groups.len() != 1 {
                return Err(Error::model(format!(
                    "generator {name} has {} outputs; strand models interpret single-output \
                     generators only",
                    src_groups.len()
                )));
            }
            let value = interp.rule_value(name, sizes)?;
            let expected = expected_block_perm(theory, &g.source, &g.target, sizes)?;
            if value.strands() != expected.degree() {
                return Err(Error::model(format!(
                    "rule for {name} produced {} strands, boundary needs {}",
                    value.strands(),
                    expected.degree()
                )));
            }
            if let Some(actual) = value.underlying() {
                if actual != expected {
                    return Err(Error::model(format!(
                        "rule for {name} has strand bijection {actual}, boundary needs {expected}"
                    )));
                }
            }
            Ok(vec![value])
        }
        TwoCellTerm::VComp(second, first) => {
            let (_, mid) = theory.typecheck_two(first)?;
            let (mid2, _) = theory.typecheck_two(second)?;
            if leaf_groups(theory, &mid)? != leaf_groups(theory, &mid2)? {
                return Err(Error::model(
                    "vertical interface orders variables differently on the two sides",
                ));
            }
            let lower = eval_tuple(interp, first, sizes)?;
            let upper = eval_tuple(interp, second, sizes)?;
            lower
                .iter()
                .zip(upper.iter())
                .map(|(a, b)| a.then(b))
                .collect()
        }
        TwoCellTerm::HComp(outer, inner) => {
            let (_, inner_tgt) = theory.typecheck_two(inner)?;
            let (outer_src, _) = theory.typecheck_two(outer)?;
            let components = eval_tuple(interp, inner, sizes)?;
            let feed_sizes = group_sizes(&leaf_groups(theory, &inner_tgt)?, sizes)?;
            let outer_values = eval_tuple(interp, outer, &feed_sizes)?;
            let outer_groups = leaf_groups(theory, &outer_src)?;
            outer_groups
                .iter()
                .zip(outer_values.iter())
                .map(|(group, above)| {
                    let mut below = ModelValue::identity(interp.kind, 0);
                    for &j in group {
                        let part = components.get(j).ok_or_else(|| {
                            Error::model(format!("horizontal pasting feeds missing output {j}"))
                        })?;
                        below = below.block_sum(part)?;
                    }
                    below.then(above)
                })
                .collect()
        }
        TwoCellTerm::Juxtapose(l, r) => {
            let (left_src, _) = theory.typecheck_two(l)?;
            let (n_left, _) = theory.typecheck_one(&left_src)?;
            if n_left > sizes.len() {
                return Err(Error::model("size-vector mismatch: juxtaposition splits past end"));
            }
            let (sl, sr) = sizes.split_at(n_left);
            let mut out = eval_tuple(interp, l, sl)?;
            out.extend(eval_tuple(interp, r, sr)?);
            Ok(out)
        }
        TwoCellTerm::Inverse(inner) => {
            Ok(eval_tuple(interp, inner, sizes)?.iter().map(ModelValue::inverse).collect())
        }
    }
}

/// Evaluates a pasting term in the free model, one strand block per input
/// variable.
pub fn eval_two_cell(
    interp: &ModelInterp,
    term: &TwoCellTerm,
    sizes: &[usize],
) -> Result<ModelValue> {
    let theory = &interp.theory;
    let (src, tgt) = theory.typecheck_two(term)?;
    if !theory.is_linear(&src)? || !theory.is_linear(&tgt)? {
        return Err(Error::model("nonlinear boundary: strand models need each variable once"));
    }
    let (arity, _) = theory.typecheck_one(&src)?;
    if sizes.len() != arity {
        return Err(Error::model(format!(
            "size-vector mismatch: {} sizes for {arity} variables",
            sizes.len()
        )));
    }
    let mut value = ModelValue::identity(interp.kind, 0);
    for part in eval_tuple(interp, term, sizes)? {
        value = value.block_sum(&part)?;
    }
    if let Some(actual) = value.underlying() {
        let expected = expected_block_perm(theory, &src, &tgt, sizes)?;
        if actual != expected {
            return Err(Error::model(format!(
                "evaluated strand bijection {actual} disagrees with boundary {expected}"
            )));
        }
    }
    Ok(value)
}

fn order_pair(theory: &TheoryPresentation, g: &Gen2) -> Result<(Vec<usize>, Vec<usize>)> {
    Ok((
        leaf_groups(theory, &g.source)?.concat(),
        leaf_groups(theory, &g.target)?.concat(),
    ))
}

fn lift_rule(kind: ModelKind, src_order: Vec<usize>, tgt_order: Vec<usize>) -> GenRule {
    Box::new(move |sizes| {
        let p = block_perm_from_orders(&src_order, &tgt_order, sizes)?;
        let total = p.degree();
        Ok(match kind {
            ModelKind::Perm => ModelValue::Perm(p),
            ModelKind::Braid => ModelValue::Braid(positive_lift(&p)),
            ModelKind::Ribbon => {
                ModelValue::Ribbon(RibbonBraid::new(vec![0; total], positive_lift(&p))?)
            }
            ModelKind::Thin => ModelValue::Thin(total),
        })
    })
}

fn twist_rule(kind: ModelKind) -> GenRule {
    Box::new(move |sizes| {
        let total: usize = sizes.iter().sum();
        Ok(match kind {
            ModelKind::Perm => ModelValue::Perm(Permutation::identity(total)),
            ModelKind::Braid => ModelValue::Braid(BraidWord::full_twist(total)),
            ModelKind::Ribbon => ModelValue::Ribbon(RibbonBraid::new(
                vec![1; total],
                BraidWord::full_twist(total),
            )?),
            ModelKind::Thin => ModelValue::Thin(total),
        })
    })
}

/// Builds the interpretation the generator names call for: braiding and
/// interchange generators become block crossings (their positive
/// permutation-braid lift), coherence cells become identities, twist
/// generators the per-block full twist.  Unknown generator names are
/// rejected.
pub fn model_interp(kind: ModelKind, theory: &TheoryPresentation) -> Result<ModelInterp> {
    let mut interp = ModelInterp::new(kind, theory.clone());
    for g in &theory.two_cell_gens {
        let short = g.name.rsplit('.').next().unwrap_or(&g.name);
        let rule = if g.name.starts_with("delta:") || short == "braid" {
            let (src, tgt) = order_pair(theory, g)?;
            lift_rule(kind, src, tgt)
        } else if matches!(short, "assoc" | "lunit" | "runit") {
            let (src, tgt) = order_pair(theory, g)?;
            lift_rule(kind, src, tgt)
        } else if short == "twist" {
            twist_rule(kind)
        } else {
            return Err(Error::model(format!(
                "no standard interpretation for 2-cell generator {}",
                g.name
            )));
        };
        interp.add_rule(g.name.clone(), rule);
    }
    Ok(interp)
}

/// The free model a named theory acts on, restricted to the pairs where the
/// model really is the free algebra on one generator.
pub fn standard_interp(kind: ModelKind, name: TheoryName) -> Result<ModelInterp> {
    let compatible = matches!(
        (kind, name),
        (ModelKind::Perm, TheoryName::SSym)
            | (ModelKind::Braid, TheoryName::SBraid)
            | (ModelKind::Ribbon, TheoryName::SBal)
            | (ModelKind::Ribbon, TheoryName::Twist)
            | (ModelKind::Thin, TheoryName::Mon)
    );
    if !compatible {
        return Err(Error::model(format!(
            "no standard free model pairing {kind} with {name}"
        )));
    }
    model_interp(kind, &build_theory(name))
}

/// Evaluates both sides of every 2-cell relation at every supplied size
/// vector whose length matches the relation's arity.
pub fn check_relations(
    theory: &TheoryPresentation,
    interp: &ModelInterp,
    size_vectors: &[Vec<usize>],
) -> Result<Report> {
    interp.covers()?;
    let mut report = Report::new();
    for (i, (lhs, rhs)) in theory.two_cell_relations.iter().enumerate() {
        let (src, _) = theory.typecheck_two(lhs)?;
        let (arity, _) = theory.typecheck_one(&src)?;
        for sv in size_vectors.iter().filter(|sv| sv.len() == arity) {
            let id = format!("rel2.{i}@{}", sv.iter().join(","));
            match (eval_two_cell(interp, lhs, sv), eval_two_cell(interp, rhs, sv)) {
                (Ok(a), Ok(b)) => match a.equal(&b) {
                    Ok(true) => report.pass(id, "equal"),
                    Ok(false) => {
                        report.fail(id, format!("lhs={} rhs={}", a.render(), b.render()))
                    }
                    Err(e) => report.error(id, e.to_string()),
                },
                (Err(e), _) | (_, Err(e)) => report.error(id, e.to_string()),
            }
        }
    }
    Ok(report)
}

/// All size vectors of the given arity with entries in `1..=max`.
pub fn size_vectors(arity: usize, max: usize) -> Vec<Vec<usize>> {
    if arity == 0 {
        return vec![Vec::new()];
    }
    (0..arity).map(|_| 1..=max).multi_cartesian_product().collect()
}

/// Decides 2-cell equality by evaluating in the free model the theory's
/// name points at, one strand per variable.  Unknown theories, and terms
/// the models cannot interpret, stay undecided.
pub fn free_model_oracle(
    theory: &TheoryPresentation,
    a: &TwoCellTerm,
    b: &TwoCellTerm,
) -> Result<Verdict> {
    let kind = match theory.name.as_str() {
        "Mon" => ModelKind::Thin,
        "Sym" | "sSym" => ModelKind::Perm,
        "Braid" | "sBraid" => ModelKind::Braid,
        "Bal" | "sBal" | "Twist" => ModelKind::Ribbon,
        _ => return Ok(Verdict::Undecided),
    };
    let Ok(interp) = model_interp(kind, theory) else {
        return Ok(Verdict::Undecided);
    };
    let Ok((src, _)) = theory.typecheck_two(a) else {
        return Ok(Verdict::Undecided);
    };
    let (arity, _) = theory.typecheck_one(&src)?;
    let ones = vec![1; arity];
    match (eval_two_cell(&interp, a, &ones), eval_two_cell(&interp, b, &ones)) {
        (Ok(x), Ok(y)) => Ok(if x.equal(&y)? { Verdict::Equal } else { Verdict::Distinct }),
        _ => Ok(Verdict::Undecided),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finsk::FinMap;

    fn braid_interp() -> ModelInterp {
        standard_interp(ModelKind::Braid, TheoryName::SBraid).unwrap()
    }

    #[test]
    fn braiding_is_a_single_crossing_on_single_strands() {
        let interp = braid_interp();
        let v = eval_two_cell(&interp, &TwoCellTerm::gen("braid"), &[1, 1]).unwrap();
        assert_eq!(v, ModelValue::Braid(BraidWord::sigma(2, 1).unwrap()));
        let v = eval_two_cell(&interp, &TwoCellTerm::gen("braid"), &[2, 1]).unwrap();
        assert_eq!(
            v,
            ModelValue::Braid(BraidWord::from_letters(3, vec![2, 1]).unwrap())
        );
    }

    #[test]
    fn braiding_is_the_block_swap_on_permutations() {
        let interp = standard_interp(ModelKind::Perm, TheoryName::SSym).unwrap();
        let v = eval_two_cell(&interp, &TwoCellTerm::gen("braid"), &[1, 1]).unwrap();
        assert_eq!(v, ModelValue::Perm(Permutation::block_transposition(1, 1)));
    }

    #[test]
    fn identities_evaluate_to_identities() {
        let interp = braid_interp();
        let w = OneCellTerm::juxt(OneCellTerm::gen("tensor"), OneCellTerm::identity(1));
        let v = eval_two_cell(&interp, &TwoCellTerm::id(w), &[2, 1, 3]).unwrap();
        assert_eq!(v, ModelValue::Braid(BraidWord::identity(6)));
    }

    #[test]
    fn strict_braid_relations_hold_in_their_model() {
        let theory = build_theory(TheoryName::SBraid);
        let interp = braid_interp();
        let vectors: Vec<Vec<usize>> = size_vectors(3, 2);
        let report = check_relations(&theory, &interp, &vectors).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn symmetry_fails_under_braids() {
        let sym = build_theory(TheoryName::SSym);
        let interp = model_interp(ModelKind::Braid, &sym).unwrap();
        let vectors = size_vectors(2, 1);
        let report = check_relations(&sym, &interp, &vectors).unwrap();
        assert!(!report.passed(), "{report}");
    }

    #[test]
    fn pentagon_sides_agree_in_the_thin_model() {
        let mon = build_theory(TheoryName::Mon);
        let interp = standard_interp(ModelKind::Thin, TheoryName::Mon).unwrap();
        let mut vectors = size_vectors(4, 1);
        vectors.extend(size_vectors(1, 1));
        vectors.extend(size_vectors(2, 1));
        let report = check_relations(&mon, &interp, &vectors).unwrap();
        assert!(report.passed(), "{report}");
        assert!(!report.lines.is_empty());
    }

    #[test]
    fn twist_rule_on_one_strand_is_a_bare_twist() {
        let interp = standard_interp(ModelKind::Ribbon, TheoryName::Twist).unwrap();
        let v = eval_two_cell(&interp, &TwoCellTerm::gen("twist"), &[1]).unwrap();
        assert_eq!(
            v,
            ModelValue::Ribbon(
                RibbonBraid::new(vec![1], BraidWord::identity(1)).unwrap()
            )
        );
    }

    #[test]
    fn incompatible_standard_pairs_are_rejected() {
        assert!(standard_interp(ModelKind::Perm, TheoryName::SBraid).is_err());
        assert!(standard_interp(ModelKind::Braid, TheoryName::Mon).is_err());
    }

    #[test]
    fn nonlinear_boundaries_are_rejected() {
        let interp = braid_interp();
        let dup = OneCellTerm::base(FinMap::new(1, vec![0, 0]).unwrap());
        let w = OneCellTerm::compose(OneCellTerm::gen("tensor"), dup);
        let err = eval_two_cell(&interp, &TwoCellTerm::id(w), &[1]).unwrap_err();
        assert!(err.to_string().contains("nonlinear"));
    }

    #[test]
    fn oracle_matches_the_model() {
        let sym = build_theory(TheoryName::SSym);
        let square = TwoCellTerm::vcomp(
            TwoCellTerm::gen("braid").after(OneCellTerm::base(FinMap::new(2, vec![1, 0]).unwrap())),
            TwoCellTerm::gen("braid"),
        );
        let idt = TwoCellTerm::id(OneCellTerm::gen("tensor"));
        assert_eq!(free_model_oracle(&sym, &square, &idt).unwrap(), Verdict::Equal);

        let sbraid = build_theory(TheoryName::SBraid);
        let square_b = TwoCellTerm::vcomp(
            TwoCellTerm::gen("braid").after(OneCellTerm::base(FinMap::new(2, vec![1, 0]).unwrap())),
            TwoCellTerm::gen("braid"),
        );
        let idt_b = TwoCellTerm::id(OneCellTerm::gen("tensor"));
        assert_eq!(
            free_model_oracle(&sbraid, &square_b, &idt_b).unwrap(),
            Verdict::Distinct
        );
    }
}
