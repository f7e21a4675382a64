//! Quasi-natural transformations between diagrams of categories, the
//! modifications between them, and the representable round trip.
//!
//! A quasi-natural transformation keeps a functor per index object and, per
//! index 1-cell, a comparison 2-cell filling the usual naturality square
//! instead of demanding that it commute.  The validator enforces the
//! contract: comparisons at identity 1-cells (and at every designated
//! 1-cell) are identities, comparisons paste along composites, and they are
//! compatible with the index's 2-cells.  Juxtaposition compatibility is
//! vacuous here because a finite index carries no sum structure; the
//! theory-level checks cover that clause separately.
//!
//! `quasi_yoneda_*` implement both directions of the representable
//! comparison for a diagram `K` and a chosen index object `r`: evaluation
//! at the identity, and the expansion of an object of `K(r)` into a
//! transformation out of `hom(r, -)`.  Expansion followed by evaluation is
//! the identity on the nose; the unit comparison in the other direction is
//! assembled from the stored 2-cells at the identity and is invertible
//! exactly when those are.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::cat::{all_functors, all_nat_transfs, Budget, FiniteFunctor, NatTransf};
use super::twocat::{hom_diagram, GammaImage, TwoDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiNatTransformation {
    /// One functor `d(i) -> e(i)` per index object.
    pub components: Vec<FiniteFunctor>,
    /// One comparison per index 1-cell `(i, j, cell)`, a transformation
    /// `e(cell) . component_i => component_j . d(cell)`.
    pub cells: BTreeMap<(usize, usize, usize), NatTransf>,
}

impl QuasiNatTransformation {
    pub fn new(
        d: &TwoDiagram,
        e: &TwoDiagram,
        designated: &GammaImage,
        components: Vec<FiniteFunctor>,
        cells: BTreeMap<(usize, usize, usize), NatTransf>,
    ) -> Result<QuasiNatTransformation> {
        let q = QuasiNatTransformation { components, cells };
        q.validate(d, e, designated)?;
        Ok(q)
    }

    /// Boundary functors of the comparison at one index 1-cell.
    fn square(
        &self,
        d: &TwoDiagram,
        e: &TwoDiagram,
        i: usize,
        j: usize,
        cell: usize,
    ) -> (FiniteFunctor, FiniteFunctor) {
        let left = self.components[i].then(e.functor(i, j, cell));
        let right = d.functor(i, j, cell).then(&self.components[j]);
        (left, right)
    }

    pub fn validate(&self, d: &TwoDiagram, e: &TwoDiagram, designated: &GammaImage) -> Result<()> {
        let index = &d.index;
        let n = index.object_count();
        if self.components.len() != n {
            return Err(Error::invalid("one functor per index object expected".to_string()));
        }
        designated.validate(index)?;
        for i in 0..n {
            self.components[i].validate(d.value(i), e.value(i))?;
        }
        for i in 0..n {
            for j in 0..n {
                let hom = index.hom(i, j);
                for cell in 0..hom.object_count() {
                    let transf = self.cells.get(&(i, j, cell)).ok_or_else(|| {
                        Error::invalid(format!("missing comparison at ({i}, {j}, {cell})"))
                    })?;
                    let (left, right) = self.square(d, e, i, j, cell);
                    transf.validate(d.value(i), e.value(j), &left, &right)?;
                    let forced_identity = index.is_identity_cell(i, j, cell)
                        || designated.contains_cell(i, j, cell);
                    if forced_identity {
                        if left != right {
                            return Err(Error::invalid(format!(
                                "comparison at ({i}, {j}, {cell}) must be an identity \
                                 but its boundaries differ"
                            )));
                        }
                        if *transf != NatTransf::identity(e.value(j), &left) {
                            return Err(Error::invalid(format!(
                                "comparison at ({i}, {j}, {cell}) is not an identity"
                            )));
                        }
                    }
                }
            }
        }
        // Comparisons paste along composites of index 1-cells.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let inner = index.hom(i, j);
                    let outer = index.hom(j, k);
                    for f in 0..inner.object_count() {
                        for g in 0..outer.object_count() {
                            let gf = index.hcomp_cell(i, j, k, g, f);
                            let sigma_f = &self.cells[&(i, j, f)];
                            let sigma_g = &self.cells[&(j, k, g)];
                            let d_f = d.functor(i, j, f);
                            let e_g = e.functor(j, k, g);
                            for x in 0..d.value(i).object_count() {
                                let pasted = e.value(k).compose(
                                    sigma_g.components[d_f.obj[x]],
                                    e_g.mor[sigma_f.components[x]],
                                )?;
                                if self.cells[&(i, k, gf)].components[x] != pasted {
                                    return Err(Error::invalid(format!(
                                        "comparisons do not paste over ({i}, {j}, {k})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        // Compatibility with the index's 2-cells.
        for i in 0..n {
            for j in 0..n {
                let hom = index.hom(i, j);
                for iota in 0..hom.morphism_count() {
                    let from = hom.morphism(iota).source;
                    let to = hom.morphism(iota).target;
                    let d_iota = d.transf(i, j, iota);
                    let e_iota = e.transf(i, j, iota);
                    for x in 0..d.value(i).object_count() {
                        let lhs = e.value(j).compose(
                            self.components[j].mor[d_iota.components[x]],
                            self.cells[&(i, j, from)].components[x],
                        )?;
                        let rhs = e.value(j).compose(
                            self.cells[&(i, j, to)].components[x],
                            e_iota.components[self.components[i].obj[x]],
                        )?;
                        if lhs != rhs {
                            return Err(Error::invalid(format!(
                                "2-cell compatibility fails at ({i}, {j}) for 2-cell {}",
                                hom.morphism(iota).name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// True when every comparison 2-cell is invertible.
    pub fn is_iso(&self, e: &TwoDiagram) -> bool {
        self.cells.iter().all(|(&(_, j, _), t)| t.is_iso(e.value(j)))
    }
}

/// A morphism of quasi-natural transformations: one transformation per
/// index object, compatible with both families of comparison cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    pub components: Vec<NatTransf>,
}

impl Modification {
    pub fn new(
        d: &TwoDiagram,
        e: &TwoDiagram,
        from: &QuasiNatTransformation,
        to: &QuasiNatTransformation,
        components: Vec<NatTransf>,
    ) -> Result<Modification> {
        let m = Modification { components };
        m.validate(d, e, from, to)?;
        Ok(m)
    }

    pub fn validate(
        &self,
        d: &TwoDiagram,
        e: &TwoDiagram,
        from: &QuasiNatTransformation,
        to: &QuasiNatTransformation,
    ) -> Result<()> {
        let n = d.index.object_count();
        if self.components.len() != n {
            return Err(Error::invalid("one transformation per index object expected".to_string()));
        }
        for i in 0..n {
            self.components[i].validate(
                d.value(i),
                e.value(i),
                &from.components[i],
                &to.components[i],
            )?;
        }
        for i in 0..n {
            for j in 0..n {
                let hom = d.index.hom(i, j);
                for cell in 0..hom.object_count() {
                    let e_cell = e.functor(i, j, cell);
                    let d_cell = d.functor(i, j, cell);
                    for x in 0..d.value(i).object_count() {
                        let lhs = e.value(j).compose(
                            to.cells[&(i, j, cell)].components[x],
                            e_cell.mor[self.components[i].components[x]],
                        )?;
                        let rhs = e.value(j).compose(
                            self.components[j].components[d_cell.obj[x]],
                            from.cells[&(i, j, cell)].components[x],
                        )?;
                        if lhs != rhs {
                            return Err(Error::invalid(format!(
                                "modification cube fails at ({i}, {j}, {cell})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_iso(&self, e: &TwoDiagram) -> bool {
        self.components.iter().enumerate().all(|(i, t)| t.is_iso(e.value(i)))
    }
}

/// Exhaustively enumerates the quasi-natural transformations `d -> e` that
/// are identities on the designated sub-index.  The budget bounds the whole
/// search; exceeding it is an error, never a partial answer.
pub fn enumerate_qnats(
    d: &TwoDiagram,
    e: &TwoDiagram,
    designated: &GammaImage,
    budget: &mut Budget,
) -> Result<Vec<QuasiNatTransformation>> {
    designated.validate(&d.index)?;
    let n = d.index.object_count();
    let per_object: Vec<Vec<FiniteFunctor>> = (0..n)
        .map(|i| all_functors(d.value(i), e.value(i), budget))
        .collect::<Result<Vec<_>>>()?;

    let mut found = Vec::new();
    let mut chosen: Vec<FiniteFunctor> = Vec::new();
    pick_functors(d, e, designated, &per_object, &mut chosen, budget, &mut found)?;
    Ok(found)
}

fn pick_functors(
    d: &TwoDiagram,
    e: &TwoDiagram,
    designated: &GammaImage,
    per_object: &[Vec<FiniteFunctor>],
    chosen: &mut Vec<FiniteFunctor>,
    budget: &mut Budget,
    found: &mut Vec<QuasiNatTransformation>,
) -> Result<()> {
    if chosen.len() == per_object.len() {
        return fill_cells(d, e, designated, chosen, budget, found);
    }
    for f in &per_object[chosen.len()] {
        budget.spend(1)?;
        chosen.push(f.clone());
        pick_functors(d, e, designated, per_object, chosen, budget, found)?;
        chosen.pop();
    }
    Ok(())
}

fn fill_cells(
    d: &TwoDiagram,
    e: &TwoDiagram,
    designated: &GammaImage,
    components: &[FiniteFunctor],
    budget: &mut Budget,
    found: &mut Vec<QuasiNatTransformation>,
) -> Result<()> {
    let index = &d.index;
    let n = index.object_count();
    let mut slots: Vec<((usize, usize, usize), Vec<NatTransf>)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let hom = index.hom(i, j);
            for cell in 0..hom.object_count() {
                let left = components[i].then(e.functor(i, j, cell));
                let right = d.functor(i, j, cell).then(&components[j]);
                let forced = index.is_identity_cell(i, j, cell)
                    || designated.contains_cell(i, j, cell);
                if forced {
                    if left != right {
                        return Ok(());
                    }
                    slots.push((
                        (i, j, cell),
                        vec![NatTransf::identity(e.value(j), &left)],
                    ));
                } else {
                    let options =
                        all_nat_transfs(d.value(i), e.value(j), &left, &right, budget)?;
                    if options.is_empty() {
                        return Ok(());
                    }
                    slots.push(((i, j, cell), options));
                }
            }
        }
    }
    let mut cells = BTreeMap::new();
    pick_cells(d, e, designated, components, &slots, 0, &mut cells, budget, found)
}

#[allow(clippy::too_many_arguments)]
fn pick_cells(
    d: &TwoDiagram,
    e: &TwoDiagram,
    designated: &GammaImage,
    components: &[FiniteFunctor],
    slots: &[((usize, usize, usize), Vec<NatTransf>)],
    depth: usize,
    cells: &mut BTreeMap<(usize, usize, usize), NatTransf>,
    budget: &mut Budget,
    found: &mut Vec<QuasiNatTransformation>,
) -> Result<()> {
    if depth == slots.len() {
        let candidate = QuasiNatTransformation {
            components: components.to_vec(),
            cells: cells.clone(),
        };
        if candidate.validate(d, e, designated).is_ok() {
            found.push(candidate);
        }
        return Ok(());
    }
    let (key, options) = &slots[depth];
    for option in options {
        budget.spend(1)?;
        cells.insert(*key, option.clone());
        pick_cells(d, e, designated, components, slots, depth + 1, cells, budget, found)?;
    }
    cells.remove(key);
    Ok(())
}

/// Exhaustively enumerates the modifications `from => to`.
pub fn enumerate_modifications(
    d: &TwoDiagram,
    e: &TwoDiagram,
    from: &QuasiNatTransformation,
    to: &QuasiNatTransformation,
    budget: &mut Budget,
) -> Result<Vec<Modification>> {
    let n = d.index.object_count();
    let per_object: Vec<Vec<NatTransf>> = (0..n)
        .map(|i| {
            all_nat_transfs(
                d.value(i),
                e.value(i),
                &from.components[i],
                &to.components[i],
                budget,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    pick_modification(d, e, from, to, &per_object, &mut chosen, budget, &mut found)?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn pick_modification(
    d: &TwoDiagram,
    e: &TwoDiagram,
    from: &QuasiNatTransformation,
    to: &QuasiNatTransformation,
    per_object: &[Vec<NatTransf>],
    chosen: &mut Vec<NatTransf>,
    budget: &mut Budget,
    found: &mut Vec<Modification>,
) -> Result<()> {
    if chosen.len() == per_object.len() {
        let candidate = Modification { components: chosen.clone() };
        if candidate.validate(d, e, from, to).is_ok() {
            found.push(candidate);
        }
        return Ok(());
    }
    for t in &per_object[chosen.len()] {
        budget.spend(1)?;
        chosen.push(t.clone());
        pick_modification(d, e, from, to, per_object, chosen, budget, found)?;
        chosen.pop();
    }
    Ok(())
}

/// Evaluation at the identity: the object of `k(r)` a transformation out of
/// `hom(r, -)` picks out.
pub fn quasi_yoneda_psi(k: &TwoDiagram, r: usize, s: &QuasiNatTransformation) -> Result<usize> {
    let id_cell = k.index.identity_cell(r);
    s.components
        .get(r)
        .map(|f| f.obj[id_cell])
        .ok_or_else(|| Error::invalid("transformation does not cover the chosen object".to_string()))
}

/// Evaluation at the identity on a modification.
pub fn quasi_yoneda_psi_mod(k: &TwoDiagram, r: usize, m: &Modification) -> Result<usize> {
    let id_cell = k.index.identity_cell(r);
    m.components
        .get(r)
        .map(|t| t.components[id_cell])
        .ok_or_else(|| Error::invalid("modification does not cover the chosen object".to_string()))
}

/// Expansion of an object `u` of `k(r)` into the transformation
/// `hom(r, -) -> k` acting by application: 1-cells are sent to their value
/// on `u`, 2-cells to their component at `u`.  All comparison cells are
/// identities because the diagram composes strictly.
pub fn quasi_yoneda_psihat(k: &TwoDiagram, r: usize, u: usize) -> Result<QuasiNatTransformation> {
    let source = hom_diagram(&k.index, r)?;
    if u >= k.value(r).object_count() {
        return Err(Error::invalid(format!("no object {u} to expand")));
    }
    let n = k.index.object_count();
    let mut components = Vec::with_capacity(n);
    for d in 0..n {
        let hom = k.index.hom(r, d);
        let obj = (0..hom.object_count()).map(|f| k.functor(r, d, f).obj[u]).collect();
        let mor = (0..hom.morphism_count())
            .map(|alpha| k.transf(r, d, alpha).components[u])
            .collect();
        components.push(FiniteFunctor { obj, mor });
    }
    let mut cells = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for cell in 0..k.index.hom(i, j).object_count() {
                let boundary = components[i].then(k.functor(i, j, cell));
                cells.insert((i, j, cell), NatTransf::identity(k.value(j), &boundary));
            }
        }
    }
    QuasiNatTransformation::new(&source, k, &GammaImage::empty(), components, cells)
}

/// Expansion of a morphism `t : u -> u'` of `k(r)` into a modification
/// between the two expansions.
pub fn quasi_yoneda_psihat_mor(k: &TwoDiagram, r: usize, t: usize) -> Result<Modification> {
    let source = hom_diagram(&k.index, r)?;
    let mor = k.value(r).morphism(t).clone();
    let from = quasi_yoneda_psihat(k, r, mor.source)?;
    let to = quasi_yoneda_psihat(k, r, mor.target)?;
    let n = k.index.object_count();
    let mut components = Vec::with_capacity(n);
    for d in 0..n {
        let hom = k.index.hom(r, d);
        let comps = (0..hom.object_count()).map(|f| k.functor(r, d, f).mor[t]).collect();
        components.push(NatTransf { components: comps });
    }
    Modification::new(&source, k, &from, &to, components)
}

/// The unit comparison from the expansion of the evaluation back to the
/// original transformation.  Its component at a 1-cell `f : r -> d` is the
/// stored comparison of `s` at `f`, taken at the identity; in particular it
/// is invertible whenever every comparison of `s` is.
pub fn quasi_yoneda_unit(
    k: &TwoDiagram,
    r: usize,
    s: &QuasiNatTransformation,
) -> Result<Modification> {
    let source = hom_diagram(&k.index, r)?;
    let expanded = quasi_yoneda_psihat(k, r, quasi_yoneda_psi(k, r, s)?)?;
    let id_obj = k.index.identity_cell(r);
    let n = k.index.object_count();
    let mut components = Vec::with_capacity(n);
    for d in 0..n {
        let hom = k.index.hom(r, d);
        let comps = (0..hom.object_count())
            .map(|f| s.cells[&(r, d, f)].components[id_obj])
            .collect();
        components.push(NatTransf { components: comps });
    }
    Modification::new(&source, k, &expanded, s, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colimit::cat::{CategoryBuilder, FiniteCategory};
    use crate::colimit::twocat::FiniteTwoCategory;

    fn walking_arrow() -> FiniteCategory {
        let mut b = CategoryBuilder::new("arrow");
        let x = b.object("x");
        let y = b.object("y");
        b.morphism("f", x, y);
        b.build().unwrap()
    }

    fn arrow_index() -> FiniteTwoCategory {
        FiniteTwoCategory::from_category(&walking_arrow()).unwrap()
    }

    /// Index the walking arrow; value the walking arrow at both ends with
    /// the identity functor across.
    fn identity_arrow_diagram() -> TwoDiagram {
        let index = arrow_index();
        TwoDiagram::constant(&index, &walking_arrow()).unwrap()
    }

    #[test]
    fn representable_transformations_of_the_arrow_are_its_morphisms() {
        let k = identity_arrow_diagram();
        let source = hom_diagram(&k.index, 0).unwrap();
        let mut budget = Budget::new(1_000_000);
        let qnats = enumerate_qnats(&source, &k, &GammaImage::empty(), &mut budget).unwrap();
        // One transformation per morphism of the value category: the
        // comparison at the unique non-identity index 1-cell is exactly a
        // morphism out of the picked object.
        assert_eq!(qnats.len(), 3);
        let iso: Vec<_> = qnats.iter().filter(|s| s.is_iso(&k)).collect();
        assert_eq!(iso.len(), k.value(0).object_count());
    }

    #[test]
    fn expansion_then_evaluation_is_the_identity() {
        let k = identity_arrow_diagram();
        for u in 0..k.value(0).object_count() {
            let s = quasi_yoneda_psihat(&k, 0, u).unwrap();
            assert_eq!(quasi_yoneda_psi(&k, 0, &s).unwrap(), u);
        }
        for t in 0..k.value(0).morphism_count() {
            let m = quasi_yoneda_psihat_mor(&k, 0, t).unwrap();
            assert_eq!(quasi_yoneda_psi_mod(&k, 0, &m).unwrap(), t);
        }
    }

    #[test]
    fn the_unit_reuses_the_stored_comparisons_and_tracks_their_invertibility() {
        let k = identity_arrow_diagram();
        let source = hom_diagram(&k.index, 0).unwrap();
        let mut budget = Budget::new(1_000_000);
        let qnats = enumerate_qnats(&source, &k, &GammaImage::empty(), &mut budget).unwrap();
        for s in &qnats {
            let unit = quasi_yoneda_unit(&k, 0, s).unwrap();
            let id_obj = k.index.identity_cell(0);
            for d in 0..k.index.object_count() {
                for f in 0..k.index.hom(0, d).object_count() {
                    assert_eq!(
                        unit.components[d].components[f],
                        s.cells[&(0, d, f)].components[id_obj]
                    );
                }
            }
            assert_eq!(unit.is_iso(&k), s.is_iso(&k));
        }
    }

    #[test]
    fn designated_cells_force_identity_comparisons() {
        let k = identity_arrow_diagram();
        let source = hom_diagram(&k.index, 0).unwrap();
        let mut budget = Budget::new(1_000_000);
        let all = enumerate_qnats(&source, &k, &GammaImage::empty(), &mut budget).unwrap();
        let strict = enumerate_qnats(
            &source,
            &k,
            &GammaImage::full(&k.index),
            &mut Budget::new(1_000_000),
        )
        .unwrap();
        assert!(strict.len() < all.len());
        for s in &strict {
            assert!(all.contains(s));
            for (&(_, j, _), t) in &s.cells {
                assert!(t.components.iter().all(|&m| k.value(j).is_identity(m)));
            }
        }
    }

    #[test]
    fn budget_exhaustion_refuses_instead_of_truncating() {
        let k = identity_arrow_diagram();
        let source = hom_diagram(&k.index, 0).unwrap();
        let err = enumerate_qnats(&source, &k, &GammaImage::empty(), &mut Budget::new(5));
        assert!(matches!(err, Err(Error::Budget(_))));
    }
}
