//! Finite truncations of the slice of a theory morphism over an arity.
//!
//! An object pairs an arity `m` with a 1-cell `g : m -> n` of the target
//! theory; a morphism `(m, g) -> (m', g')` is a source-theory 1-cell
//! `h : m -> m'` whose image satisfies `g' . G(h) = g` up to the target's
//! word problem.  Everything runs on normal forms: arities up to
//! `n + depth`, trees with at most `depth` generator applications, and
//! hom-sets closed under composition afterwards under a budget, since the
//! closure can genuinely be infinite.
//!
//! The construction refuses theories whose hom structure it cannot
//! represent: sources with 2-cell generators (hom-categories here are
//! discrete) and targets that are not thin.  When the target's word
//! problem returns no verdict for some candidate morphism, both endpoint
//! objects are dropped and reported rather than guessed at.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::presentation::{
    OneNormal, OpTree, TheoryMorphismPresentation, TheoryPresentation, Verdict,
};
use crate::report::Report;

use super::cat::{Budget, CategoryBuilder};
use super::qcolim::find_relative_terminal;
use super::twocat::{FiniteTwoCategory, GammaImage};

#[derive(Debug, Clone)]
pub struct TruncatedComma {
    pub index: FiniteTwoCategory,
    /// The base sub-2-category: 1-cells whose underlying `h` only reindexes
    /// variables.  Identities are always of this kind.
    pub base_gamma: GammaImage,
    /// One entry per index object, in object order: the shape `g`, whose
    /// `source` field is the arity `m`.
    pub objects: Vec<OneNormal>,
    /// Sizes plus any objects excluded over an undecided word problem.
    pub report: Report,
}

impl TruncatedComma {
    /// The designated-terminal detector run against the base sub-category.
    pub fn relative_terminal(&self) -> Option<usize> {
        find_relative_terminal(&self.index, &self.base_gamma)
    }
}

fn thin(t: &TheoryPresentation) -> bool {
    t.dimension == crate::presentation::Dimension::One
        || t.two_cell_gens.is_empty()
        || t.coherent
}

fn single_output_gens(t: &TheoryPresentation) -> Result<Vec<(String, usize)>> {
    let mut gens = Vec::new();
    for g in &t.one_cell_gens {
        if g.target != 1 {
            return Err(Error::Unsupported(format!(
                "generator {} of {} produces {} outputs; shape enumeration handles single-output generators",
                g.name, t.name, g.target
            )));
        }
        gens.push((g.name.clone(), g.source));
    }
    Ok(gens)
}

/// All trees over `m` variables with at most `depth` generator layers.
fn trees(
    m: usize,
    depth: usize,
    gens: &[(String, usize)],
    budget: &mut Budget,
) -> Result<Vec<OpTree>> {
    let mut layer: BTreeSet<OpTree> = (0..m).map(OpTree::Var).collect();
    for _ in 0..depth {
        let prev: Vec<OpTree> = layer.iter().cloned().collect();
        for (name, arity) in gens {
            let mut tuples: Vec<Vec<OpTree>> = vec![Vec::new()];
            for _ in 0..*arity {
                let mut grown = Vec::new();
                for partial in &tuples {
                    for t in &prev {
                        budget.spend(1)?;
                        let mut next = partial.clone();
                        next.push(t.clone());
                        grown.push(next);
                    }
                }
                tuples = grown;
            }
            for args in tuples {
                layer.insert(OpTree::app(name.clone(), 0, args));
            }
        }
    }
    Ok(layer.into_iter().collect())
}

/// Cartesian power: `width` trees drawn from `pool`.
fn forests(pool: &[OpTree], width: usize, budget: &mut Budget) -> Result<Vec<Vec<OpTree>>> {
    let mut out: Vec<Vec<OpTree>> = vec![Vec::new()];
    for _ in 0..width {
        let mut grown = Vec::new();
        for partial in &out {
            for t in pool {
                budget.spend(1)?;
                let mut next = partial.clone();
                next.push(t.clone());
                grown.push(next);
            }
        }
        out = grown;
    }
    Ok(out)
}

fn subst(tree: &OpTree, env: &[OpTree]) -> OpTree {
    match tree {
        OpTree::Var(i) => env[*i].clone(),
        OpTree::App { gen, output, args } => OpTree::App {
            gen: gen.clone(),
            output: *output,
            args: args.iter().map(|a| subst(a, env)).collect(),
        },
    }
}

/// `after . first` on normal forms: feed the outputs of `first` into the
/// variables of `after`.
fn compose_nf(after: &OneNormal, first: &OneNormal) -> OneNormal {
    OneNormal {
        source: first.source,
        outputs: after.outputs.iter().map(|t| subst(t, &first.outputs)).collect(),
    }
}

fn tree_weight(t: &OpTree) -> usize {
    match t {
        OpTree::Var(_) => 1,
        OpTree::App { args, .. } => 1 + args.iter().map(tree_weight).sum::<usize>(),
    }
}

fn weight(nf: &OneNormal) -> usize {
    nf.outputs.iter().map(tree_weight).sum::<usize>() + 1
}

/// Pushes a source-theory tree through the morphism by splicing in the
/// normal forms of the generator images.
fn image_tree(images: &BTreeMap<String, OneNormal>, tree: &OpTree) -> Result<OpTree> {
    match tree {
        OpTree::Var(i) => Ok(OpTree::Var(*i)),
        OpTree::App { gen, output, args } => {
            let img = images
                .get(gen)
                .ok_or_else(|| Error::UnknownGenerator(gen.clone()))?;
            let mapped: Vec<OpTree> =
                args.iter().map(|a| image_tree(images, a)).collect::<Result<_>>()?;
            Ok(subst(&img.outputs[*output], &mapped))
        }
    }
}

fn is_reindexing(nf: &OneNormal) -> bool {
    nf.outputs.iter().all(|t| matches!(t, OpTree::Var(_)))
}

fn identity_nf(m: usize) -> OneNormal {
    OneNormal { source: m, outputs: (0..m).map(OpTree::Var).collect() }
}

struct MorTable {
    /// (source object, target object, h), position = registration order.
    records: Vec<(usize, usize, OneNormal)>,
    index_of: BTreeMap<(usize, usize, OneNormal), usize>,
    /// Category morphism index per record position.
    mor_of: Vec<usize>,
    /// h per category morphism index.
    h_of_mor: BTreeMap<usize, OneNormal>,
}

impl MorTable {
    fn new() -> MorTable {
        MorTable {
            records: Vec::new(),
            index_of: BTreeMap::new(),
            mor_of: Vec::new(),
            h_of_mor: BTreeMap::new(),
        }
    }

    fn register(
        &mut self,
        builder: &mut CategoryBuilder,
        a: usize,
        b: usize,
        h: OneNormal,
    ) -> usize {
        if let Some(&m) = self.index_of.get(&(a, b, h.clone())) {
            return m;
        }
        let m = if a == b && h == identity_nf(h.source) {
            builder.identity_of(a)
        } else {
            builder.morphism(format!("{h}@{a}>{b}"), a, b)
        };
        self.records.push((a, b, h.clone()));
        self.mor_of.push(m);
        self.index_of.insert((a, b, h.clone()), m);
        self.h_of_mor.insert(m, h);
        m
    }
}

/// The finite truncation of the slice of `g` over arity `n`: objects keep
/// shapes with at most `depth` generator layers over at most `n + depth`
/// inputs, morphisms are enumerated to the same depth and then closed under
/// composition while the budget lasts.
pub fn comma_truncate(
    g: &TheoryMorphismPresentation,
    n: usize,
    depth: usize,
    budget: &mut Budget,
) -> Result<TruncatedComma> {
    if !g.source.two_cell_gens.is_empty() {
        return Err(Error::Unsupported(format!(
            "source theory {} carries 2-cell generators; this slice is built with discrete hom-categories",
            g.source.name
        )));
    }
    if !thin(&g.target) {
        return Err(Error::Unsupported(format!(
            "target theory {} is not thin, so connecting 2-cells are not unique",
            g.target.name
        )));
    }
    let source_gens = single_output_gens(&g.source)?;
    let target_gens = single_output_gens(&g.target)?;

    let mut images = BTreeMap::new();
    for (name, _) in &source_gens {
        let term = g
            .gen1_map
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
        images.insert(name.clone(), g.target.normalize_one(term)?);
    }

    let mut report = Report::new();
    let mut shape_set: BTreeSet<OneNormal> = BTreeSet::new();
    for m in 0..=n + depth {
        let pool = trees(m, depth, &target_gens, budget)?;
        for outputs in forests(&pool, n, budget)? {
            shape_set.insert(g.target.normalize_forest(OneNormal { source: m, outputs })?);
        }
    }
    let all_shapes: Vec<OneNormal> = shape_set.into_iter().collect();

    let mut source_pools: BTreeMap<usize, Vec<OpTree>> = BTreeMap::new();
    for nf in &all_shapes {
        if !source_pools.contains_key(&nf.source) {
            source_pools.insert(nf.source, trees(nf.source, depth, &source_gens, budget)?);
        }
    }

    // Candidate morphisms per object pair, by the depth-bounded sweep.  An
    // undecided word problem poisons both endpoints.
    let mut excluded: BTreeSet<usize> = BTreeSet::new();
    let mut candidates: BTreeMap<(usize, usize), Vec<OneNormal>> = BTreeMap::new();
    for (a, ga) in all_shapes.iter().enumerate() {
        for (b, gb) in all_shapes.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for outputs in forests(&source_pools[&ga.source], gb.source, budget)? {
                let h =
                    g.source.normalize_forest(OneNormal { source: ga.source, outputs })?;
                if !seen.insert(h.clone()) {
                    continue;
                }
                let imaged = OneNormal {
                    source: h.source,
                    outputs: h
                        .outputs
                        .iter()
                        .map(|t| image_tree(&images, t))
                        .collect::<Result<_>>()?,
                };
                let composite = compose_nf(gb, &imaged);
                match g.target.forest_eq(&composite, ga)? {
                    Verdict::Equal => candidates.entry((a, b)).or_default().push(h),
                    Verdict::Distinct => {}
                    Verdict::Undecided => {
                        excluded.insert(a);
                        excluded.insert(b);
                    }
                }
            }
        }
    }
    for &e in &excluded {
        report.undecided(
            format!("comma.exclude.{}", all_shapes[e]),
            "word problem gave no verdict for a candidate morphism at this object",
        );
    }

    let keep: Vec<usize> = (0..all_shapes.len()).filter(|i| !excluded.contains(i)).collect();
    let renumber: BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let shapes: Vec<OneNormal> = keep.iter().map(|&i| all_shapes[i].clone()).collect();

    let mut builder = CategoryBuilder::new(format!("comma.{}", g.name));
    for nf in &shapes {
        builder.object(format!("{nf}"));
    }

    let mut table = MorTable::new();
    for (&(a, b), hs) in &candidates {
        if excluded.contains(&a) || excluded.contains(&b) {
            continue;
        }
        for h in hs {
            table.register(&mut builder, renumber[&a], renumber[&b], h.clone());
        }
    }

    // Close under composition; composites of valid morphisms stay valid, so
    // only the budget bounds this.  Spending by result size keeps runaway
    // closures from allocating without bound before the budget trips.
    let mut frontier: Vec<usize> = (0..table.records.len()).collect();
    while let Some(fi) = frontier.pop() {
        for si in 0..table.records.len() {
            for (first, second) in [(fi, si), (si, fi)] {
                let (a1, b1, h1) = table.records[first].clone();
                let (a2, b2, h2) = table.records[second].clone();
                if b1 != a2 {
                    continue;
                }
                let h = g.source.normalize_forest(compose_nf(&h2, &h1))?;
                budget.spend(weight(&h))?;
                if !table.index_of.contains_key(&(a1, b2, h.clone())) {
                    table.register(&mut builder, a1, b2, h);
                    frontier.push(table.records.len() - 1);
                }
            }
        }
    }

    for first in 0..table.records.len() {
        for second in 0..table.records.len() {
            let (a1, b1, ref h1) = table.records[first];
            let (a2, b2, ref h2) = table.records[second];
            if b1 != a2 {
                continue;
            }
            let h = g.source.normalize_forest(compose_nf(h2, h1))?;
            let result = table.index_of[&(a1, b2, h)];
            builder.composite(table.mor_of[second], table.mor_of[first], result);
        }
    }

    let cat = builder.build()?;
    let index = FiniteTwoCategory::from_category(&cat)?;

    let mut base_gamma = GammaImage::empty();
    for i in 0..index.object_count() {
        base_gamma.objects.insert(i);
    }
    for i in 0..cat.object_count() {
        for j in 0..cat.object_count() {
            for (cell, &m) in cat.hom(i, j).iter().enumerate() {
                if is_reindexing(&table.h_of_mor[&m]) {
                    base_gamma.one_cells.insert((i, j, cell));
                }
            }
        }
    }
    base_gamma.validate(&index)?;

    report.info("comma.objects", format!("{}", shapes.len()));
    report.info("comma.cells", format!("{}", cat.morphism_count()));

    Ok(TruncatedComma { index, base_gamma, objects: shapes, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::OneCellTerm;
    use crate::theories::build_theory;

    fn identity_on(name: &str) -> TheoryMorphismPresentation {
        let t = build_theory(name.parse().unwrap());
        let mut m =
            TheoryMorphismPresentation::new(format!("id.{name}"), t.clone(), t.clone());
        for g in &t.one_cell_gens {
            m.map1(&g.name, OneCellTerm::Gen(g.name.clone()));
        }
        m
    }

    #[test]
    fn the_slice_of_finite_maps_over_one_output() {
        let g = identity_on("Fin");
        let c = comma_truncate(&g, 1, 2, &mut Budget::new(1_000_000)).unwrap();
        // Shapes are variable picks: one at arity 1, two at 2, three at 3.
        assert_eq!(c.objects.len(), 6);
        assert!(c.objects.contains(&identity_nf(1)));
        assert!(c.report.fully_decided());
        // The identity shape at arity 1 absorbs everything uniquely.
        let t = c.relative_terminal().unwrap();
        assert_eq!(c.objects[t], identity_nf(1));
    }

    #[test]
    fn every_slice_cell_over_a_free_base_is_a_reindexing() {
        let g = identity_on("Fin");
        let c = comma_truncate(&g, 1, 2, &mut Budget::new(1_000_000)).unwrap();
        assert_eq!(c.base_gamma, GammaImage::full(&c.index));
    }

    #[test]
    fn depth_zero_keeps_only_reindexing_shapes() {
        let g = identity_on("Monoids");
        let c = comma_truncate(&g, 2, 0, &mut Budget::new(1_000_000)).unwrap();
        assert!(c.objects.iter().all(is_reindexing));
        assert_eq!(c.objects.len(), 5);
    }

    #[test]
    fn a_two_dimensional_source_is_refused() {
        let t = build_theory("sBraid".parse().unwrap());
        let m = TheoryMorphismPresentation::new("id.sBraid", t.clone(), t);
        let err = comma_truncate(&m, 1, 1, &mut Budget::new(10_000)).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn an_infinite_hom_set_exhausts_the_budget_instead_of_truncating() {
        // The empty-word shape keeps every endomorphism in its hom-set, so
        // the closure cannot finish.
        let g = identity_on("Monoids");
        let err = comma_truncate(&g, 1, 1, &mut Budget::new(50_000)).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }
}
