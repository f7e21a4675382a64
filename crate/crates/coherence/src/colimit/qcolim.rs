//! Quasi-colimits of diagrams of finite categories.
//!
//! The construction goes through the total category of elements: objects
//! are pairs of an index object and an object of its value, morphisms are
//! pairs of an index 1-cell and a connecting morphism in the target value.
//! Two identifications are then closed into a congruence at once:
//!
//! * parallel morphisms connected by an index 2-cell are merged, which is
//!   what collapsing the 2-dimensional structure to connected components
//!   means here, and
//! * the canonical generator of every designated 1-cell is merged with the
//!   identities at its ends, so the resulting cocone is strictly natural
//!   over the designated sub-index.
//!
//! The congruence is closed under composition on both sides before the
//! quotient category is assembled, and assembling validates the result
//! from scratch.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::cat::{CategoryBuilder, FiniteCategory, FiniteFunctor, NatTransf};
use super::qnat::QuasiNatTransformation;
use super::twocat::{FiniteTwoCategory, GammaImage, TwoDiagram};

/// Hard cap on the size of the intermediate category of elements.  The
/// congruence closure sweeps are cubic in the morphism count, so this stays
/// small enough for a worst case to finish.
const ELEMENTS_LIMIT: usize = 1500;

#[derive(Debug, Clone)]
pub struct QuasiColimit {
    pub category: FiniteCategory,
    /// The universal cocone: a quasi-natural transformation into the
    /// constant diagram at `category`, with identity comparisons over the
    /// designated sub-index.
    pub cocone: QuasiNatTransformation,
    /// Where each pair (index object, value object) lands.
    pub object_class: BTreeMap<(usize, usize), usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ElementMor {
    i: usize,
    j: usize,
    cell: usize,
    x: usize,
    phi: usize,
}

struct Elements {
    cat: FiniteCategory,
    object_index: BTreeMap<(usize, usize), usize>,
    lookup: BTreeMap<(usize, usize, usize, usize, usize), usize>,
}

fn elements_of(d: &TwoDiagram) -> Result<Elements> {
    let index = &d.index;
    let n = index.object_count();

    let mut objects = Vec::new();
    let mut object_index = BTreeMap::new();
    for i in 0..n {
        for x in 0..d.value(i).object_count() {
            object_index.insert((i, x), objects.len());
            objects.push((i, x));
        }
    }

    let mut records: Vec<ElementMor> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let hom = index.hom(i, j);
            for cell in 0..hom.object_count() {
                let functor = d.functor(i, j, cell);
                for x in 0..d.value(i).object_count() {
                    let landed = functor.obj[x];
                    for phi in 0..d.value(j).morphism_count() {
                        if d.value(j).morphism(phi).source != landed {
                            continue;
                        }
                        records.push(ElementMor { i, j, cell, x, phi });
                        if records.len() + objects.len() > ELEMENTS_LIMIT {
                            return Err(Error::Budget(format!(
                                "category of elements exceeds {ELEMENTS_LIMIT} cells"
                            )));
                        }
                    }
                }
            }
        }
    }

    let mut builder = CategoryBuilder::new(format!("elements.{}", index.name));
    for &(i, x) in &objects {
        builder.object(format!(
            "{}.{}",
            index.object_name(i),
            d.value(i).object_name(x)
        ));
    }

    let mut lookup = BTreeMap::new();
    for rec in &records {
        let identity = rec.i == rec.j
            && index.is_identity_cell(rec.i, rec.j, rec.cell)
            && d.value(rec.i).is_identity(rec.phi)
            && d.value(rec.i).morphism(rec.phi).source == rec.x;
        let key = (rec.i, rec.j, rec.cell, rec.x, rec.phi);
        if identity {
            lookup.insert(key, builder.identity_of(object_index[&(rec.i, rec.x)]));
            continue;
        }
        let source = object_index[&(rec.i, rec.x)];
        let target = object_index[&(rec.j, d.value(rec.j).morphism(rec.phi).target)];
        let name = format!(
            "{}.{}|{}|{}.{}",
            index.object_name(rec.i),
            d.value(rec.i).object_name(rec.x),
            index.hom(rec.i, rec.j).object_name(rec.cell),
            index.object_name(rec.j),
            d.value(rec.j).morphism(rec.phi).name
        );
        lookup.insert(key, builder.morphism(name, source, target));
    }

    let keys: Vec<((usize, usize, usize, usize, usize), usize)> =
        lookup.iter().map(|(k, v)| (*k, *v)).collect();
    for &((i1, j1, cell1, x1, phi1), first) in &keys {
        let mid = d.value(j1).morphism(phi1).target;
        for &((i2, j2, cell2, x2, phi2), second) in &keys {
            if i2 != j1 || x2 != mid {
                continue;
            }
            let composite_cell = index.hcomp_cell(i1, j1, j2, cell2, cell1);
            let pushed = d.functor(j1, j2, cell2).mor[phi1];
            let composite_phi = d.value(j2).compose(phi2, pushed)?;
            let composite = lookup[&(i1, j2, composite_cell, x1, composite_phi)];
            builder.composite(second, first, composite);
        }
    }

    Ok(Elements { cat: builder.build()?, object_index, lookup })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> UnionFind {
        UnionFind { parent: (0..size).collect() }
    }

    fn find(&mut self, a: usize) -> usize {
        if self.parent[a] != a {
            let root = self.find(self.parent[a]);
            self.parent[a] = root;
        }
        self.parent[a]
    }

    /// Keeps the smaller index as the representative, so class order is
    /// stable across runs.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// The quasi-colimit of a finite diagram, strict over the designated
/// sub-index.  The returned cocone is validated against the diagram before
/// being handed back.
pub fn qcolim(d: &TwoDiagram, gamma: &GammaImage) -> Result<QuasiColimit> {
    gamma.validate(&d.index)?;
    let elements = elements_of(d)?;
    let index = &d.index;
    let cat = &elements.cat;

    let mut objects = UnionFind::new(cat.object_count());
    let mut morphisms = UnionFind::new(cat.morphism_count());

    // Parallel morphisms connected by an index 2-cell collapse.
    for i in 0..index.object_count() {
        for j in 0..index.object_count() {
            let hom = index.hom(i, j);
            for iota in 0..hom.morphism_count() {
                if hom.is_identity(iota) {
                    continue;
                }
                let from = hom.morphism(iota).source;
                let to = hom.morphism(iota).target;
                for x in 0..d.value(i).object_count() {
                    let step = d.transf(i, j, iota).components[x];
                    for phi2 in 0..d.value(j).morphism_count() {
                        let start = d.functor(i, j, to).obj[x];
                        if d.value(j).morphism(phi2).source != start {
                            continue;
                        }
                        let phi1 = d.value(j).compose(phi2, step)?;
                        let a = elements.lookup[&(i, j, from, x, phi1)];
                        let b = elements.lookup[&(i, j, to, x, phi2)];
                        morphisms.union(a, b);
                    }
                }
            }
        }
    }

    // Designated 1-cells become identities: their canonical generators
    // merge with the identities at both ends.
    for &(i, j, cell) in &gamma.one_cells {
        if index.is_identity_cell(i, j, cell) {
            continue;
        }
        for x in 0..d.value(i).object_count() {
            let landed = d.functor(i, j, cell).obj[x];
            let generator = elements.lookup[&(i, j, cell, x, d.value(j).identity(landed))];
            let src_obj = elements.object_index[&(i, x)];
            let tgt_obj = elements.object_index[&(j, landed)];
            objects.union(src_obj, tgt_obj);
            morphisms.union(generator, cat.identity(src_obj));
            morphisms.union(generator, cat.identity(tgt_obj));
        }
    }

    // Close under composition on both sides.
    loop {
        let mut changed = false;
        for a in 0..cat.morphism_count() {
            for b in (a + 1)..cat.morphism_count() {
                if morphisms.find(a) != morphisms.find(b) {
                    continue;
                }
                for n in 0..cat.morphism_count() {
                    if cat.morphism(a).target == cat.morphism(n).source
                        && cat.morphism(b).target == cat.morphism(n).source
                    {
                        changed |= morphisms.union(cat.compose(n, a)?, cat.compose(n, b)?);
                    }
                    if cat.morphism(n).target == cat.morphism(a).source
                        && cat.morphism(n).target == cat.morphism(b).source
                    {
                        changed |= morphisms.union(cat.compose(a, n)?, cat.compose(b, n)?);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    // Morphism classes must respect object classes.
    for m in 0..cat.morphism_count() {
        let root = morphisms.find(m);
        let (s1, t1) = (cat.morphism(m).source, cat.morphism(m).target);
        let (s2, t2) = (cat.morphism(root).source, cat.morphism(root).target);
        if objects.find(s1) != objects.find(s2) || objects.find(t1) != objects.find(t2) {
            return Err(Error::invalid(
                "identified morphisms ended up with unidentified boundaries".to_string(),
            ));
        }
    }

    let mut object_class_of_root = BTreeMap::new();
    let mut class_names = Vec::new();
    for o in 0..cat.object_count() {
        let root = objects.find(o);
        object_class_of_root.entry(root).or_insert_with(|| {
            class_names.push(cat.object_name(root).to_string());
            class_names.len() - 1
        });
    }

    let mut is_identity_class = vec![None; cat.morphism_count()];
    for o in 0..cat.object_count() {
        let root = morphisms.find(cat.identity(o));
        is_identity_class[root] = Some(object_class_of_root[&objects.find(o)]);
    }

    let mut builder = CategoryBuilder::new(format!("qcolim.{}", index.name));
    for name in &class_names {
        builder.object(name.clone());
    }
    let mut class_of_mor: Vec<Option<usize>> = vec![None; cat.morphism_count()];
    for m in 0..cat.morphism_count() {
        let root = morphisms.find(m);
        if class_of_mor[root].is_none() {
            let idx = match is_identity_class[root] {
                Some(obj_class) => builder.identity_of(obj_class),
                None => {
                    let src = object_class_of_root[&objects.find(cat.morphism(root).source)];
                    let tgt = object_class_of_root[&objects.find(cat.morphism(root).target)];
                    builder.morphism(format!("[{}]", cat.morphism(root).name), src, tgt)
                }
            };
            class_of_mor[root] = Some(idx);
        }
        class_of_mor[m] = class_of_mor[root];
    }
    let class_of = |m: usize| class_of_mor[m].expect("every class was named");

    // Quotient composition: compose any pair of representatives that still
    // meet head to tail; every choice must land in one class, and classes
    // holding an identity must act like one.
    let mut quotient_table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for m1 in 0..cat.morphism_count() {
        for m2 in 0..cat.morphism_count() {
            if cat.morphism(m1).target != cat.morphism(m2).source {
                continue;
            }
            let composite = class_of(cat.compose(m2, m1)?);
            if is_identity_class[morphisms.find(m2)].is_some() && composite != class_of(m1) {
                return Err(Error::invalid(
                    "quotient composition breaks the left unit law".to_string(),
                ));
            }
            if is_identity_class[morphisms.find(m1)].is_some() && composite != class_of(m2) {
                return Err(Error::invalid(
                    "quotient composition breaks the right unit law".to_string(),
                ));
            }
            let key = (class_of(m2), class_of(m1));
            if let Some(&previous) = quotient_table.get(&key) {
                if previous != composite {
                    return Err(Error::invalid(
                        "quotient composition is not well defined".to_string(),
                    ));
                }
            } else {
                quotient_table.insert(key, composite);
            }
        }
    }
    for (&(after, first), &result) in &quotient_table {
        builder.composite(after, first, result);
    }
    let category = builder.build().map_err(|e| match e {
        Error::Invalid(msg) if msg.contains("missing composite") => Error::Unsupported(format!(
            "the designated sub-index does not mediate every composite: {msg}"
        )),
        other => other,
    })?;

    let mut object_class = BTreeMap::new();
    for (&(i, x), &o) in &elements.object_index {
        object_class.insert((i, x), object_class_of_root[&objects.find(o)]);
    }

    let constant = TwoDiagram::constant(index, &category)?;
    let mut components = Vec::with_capacity(index.object_count());
    for i in 0..index.object_count() {
        let obj = (0..d.value(i).object_count()).map(|x| object_class[&(i, x)]).collect();
        let id_cell = index.identity_cell(i);
        let mor = (0..d.value(i).morphism_count())
            .map(|phi| {
                let x = d.value(i).morphism(phi).source;
                class_of(elements.lookup[&(i, i, id_cell, x, phi)])
            })
            .collect();
        components.push(FiniteFunctor { obj, mor });
    }
    let mut cells = BTreeMap::new();
    for i in 0..index.object_count() {
        for j in 0..index.object_count() {
            let hom = index.hom(i, j);
            for cell in 0..hom.object_count() {
                let comps = (0..d.value(i).object_count())
                    .map(|x| {
                        let landed = d.functor(i, j, cell).obj[x];
                        class_of(elements.lookup[&(i, j, cell, x, d.value(j).identity(landed))])
                    })
                    .collect();
                cells.insert((i, j, cell), NatTransf { components: comps });
            }
        }
    }
    let cocone = QuasiNatTransformation::new(d, &constant, gamma, components, cells)?;

    Ok(QuasiColimit { category, cocone, object_class })
}

/// Finds an object every other object maps into, with all those 1-cells
/// joined by unique invertible 2-cells, and uniquely so from designated
/// objects.  Returns the first such object.
pub fn find_relative_terminal(
    index: &FiniteTwoCategory,
    gamma: &GammaImage,
) -> Option<usize> {
    'candidates: for t in 0..index.object_count() {
        for i in 0..index.object_count() {
            let hom = index.hom(i, t);
            if hom.object_count() == 0 {
                continue 'candidates;
            }
            for l in 0..hom.object_count() {
                for l2 in 0..hom.object_count() {
                    if hom.isos(l, l2).len() != 1 {
                        continue 'candidates;
                    }
                }
            }
            if gamma.objects.contains(&i) && hom.object_count() != 1 {
                continue 'candidates;
            }
        }
        return Some(t);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colimit::cat::{equivalence, isomorphism, Budget};
    use crate::colimit::instances;

    #[test]
    fn over_a_point_the_quasi_colimit_is_the_value_itself() {
        let (d, gamma) = instances::point_diagram();
        let q = qcolim(&d, &gamma).unwrap();
        let witness =
            isomorphism(&q.category, d.value(0), &mut Budget::new(1_000_000)).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn collapsing_an_arrow_recovers_its_target_value() {
        let (d, gamma) = instances::arrow_diagram();
        let t = find_relative_terminal(&d.index, &gamma).unwrap();
        assert_eq!(t, 1);
        let q = qcolim(&d, &gamma).unwrap();
        assert_eq!(q.category.object_count(), 2);
        let witness =
            equivalence(&q.category, d.value(t), &mut Budget::new(2_000_000)).unwrap();
        assert!(witness.is_some());
        // The designated generator became an identity, so the source point
        // shares its class with the landing object.
        assert_eq!(q.object_class[&(0, 0)], q.object_class[&(1, 0)]);
    }

    #[test]
    fn a_cospan_of_points_collapses_onto_the_shared_target() {
        let (d, gamma) = instances::cospan_diagram();
        let t = find_relative_terminal(&d.index, &gamma).unwrap();
        assert_eq!(t, 2);
        let q = qcolim(&d, &gamma).unwrap();
        let witness =
            isomorphism(&q.category, d.value(t), &mut Budget::new(2_000_000)).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn the_triangle_folds_onto_its_terminal_value() {
        let (d, gamma) = instances::triangle_diagram();
        let t = find_relative_terminal(&d.index, &gamma).unwrap();
        assert_eq!(t, 2);
        let q = qcolim(&d, &gamma).unwrap();
        let witness =
            isomorphism(&q.category, d.value(t), &mut Budget::new(2_000_000)).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn an_invertible_two_cell_identifies_the_parallel_generators() {
        let d = instances::parallel_pair_diagram();
        let q = qcolim(&d, &GammaImage::empty()).unwrap();
        // Two generators (a, p) -> (t, x) existed before the quotient; the
        // index 2-cell merges them.
        let src = q.object_class[&(0, 0)];
        let tgt = q.object_class[&(1, 0)];
        assert_eq!(q.category.hom(src, tgt).len(), 1);
        assert_eq!(q.category.object_count(), 3);
    }

    #[test]
    fn weak_terminals_are_detected_but_uniqueness_is_demanded_on_gamma() {
        let index = instances::parallel_pair_index();
        assert_eq!(find_relative_terminal(&index, &GammaImage::empty()), Some(1));
        assert_eq!(find_relative_terminal(&index, &GammaImage::full(&index)), None);
    }

    #[test]
    fn gamma_collapse_makes_designated_comparisons_identities() {
        let (d, gamma) = instances::arrow_diagram();
        let q = qcolim(&d, &gamma).unwrap();
        for (&(i, j, _), transf) in &q.cocone.cells {
            if i == 0 && j == 1 {
                assert!(transf.components.iter().all(|&m| q.category.is_identity(m)));
            }
        }
    }

    #[test]
    fn an_oversized_diagram_is_refused_not_truncated() {
        let mut ib = CategoryBuilder::new("wide");
        let a = ib.object("a");
        let t = ib.object("t");
        for k in 0..70 {
            ib.morphism(format!("f{k}"), a, t);
        }
        let wide = FiniteTwoCategory::from_category(&ib.build().unwrap()).unwrap();
        let names: Vec<String> = (0..70).map(|k| format!("o{k}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let src = FiniteCategory::discrete("src", &refs);
        let val = FiniteCategory::discrete("val", &["*"]);
        let cross = FiniteFunctor { obj: vec![0; 70], mor: vec![0; 70] };
        let mut one_maps = BTreeMap::new();
        one_maps.insert((0usize, 0usize), vec![FiniteFunctor::identity(&src)]);
        one_maps.insert((1, 1), vec![FiniteFunctor::identity(&val)]);
        one_maps.insert((0, 1), vec![cross; 70]);
        one_maps.insert((1, 0), Vec::new());
        let mut two_maps = BTreeMap::new();
        two_maps.insert(
            (0usize, 0usize),
            vec![NatTransf::identity(&src, &FiniteFunctor::identity(&src))],
        );
        two_maps.insert((1, 1), vec![NatTransf::identity(&val, &FiniteFunctor::identity(&val))]);
        two_maps.insert((0, 1), vec![NatTransf { components: vec![0; 70] }; 70]);
        two_maps.insert((1, 0), Vec::new());
        let d = TwoDiagram::new(wide, vec![src, val], one_maps, two_maps).unwrap();
        let err = qcolim(&d, &GammaImage::empty()).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }
}
