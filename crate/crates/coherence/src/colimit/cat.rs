//! Finite categories given by explicit composition tables, with the
//! functor and natural-transformation machinery built on top.
//!
//! Everything here is index-based: objects and morphisms are positions in
//! the owning category's lists, so functors and transformations are plain
//! integer tables.  Enumeration routines walk those tables exhaustively
//! under a step budget; they either finish the search or refuse with a
//! budget error, never silently truncate.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Shared step counter for the exhaustive searches.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: usize,
}

impl Budget {
    pub fn new(steps: usize) -> Self {
        Budget { remaining: steps }
    }

    pub fn remaining(&self) -> usize {
        self.remaining
    }

    pub fn spend(&mut self, steps: usize) -> Result<()> {
        if steps > self.remaining {
            self.remaining = 0;
            return Err(Error::Budget("search budget exhausted".into()));
        }
        self.remaining -= steps;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A category with finitely many objects and morphisms and a total
/// composition table.  Construction goes through [`CategoryBuilder`], which
/// validates identity laws, totality, and associativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    table: BTreeMap<(usize, usize), usize>,
}

pub struct CategoryBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    table: BTreeMap<(usize, usize), usize>,
}

impl CategoryBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CategoryBuilder {
            name: name.into(),
            objects: Vec::new(),
            morphisms: Vec::new(),
            identities: Vec::new(),
            table: BTreeMap::new(),
        }
    }

    /// Adds an object together with its identity morphism `id.{name}`.
    pub fn object(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        let obj = self.objects.len();
        self.morphisms.push(Morphism {
            name: format!("id.{name}"),
            source: obj,
            target: obj,
        });
        self.identities.push(self.morphisms.len() - 1);
        self.objects.push(name);
        obj
    }

    pub fn identity_of(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn morphism(&mut self, name: impl Into<String>, source: usize, target: usize) -> usize {
        self.morphisms.push(Morphism { name: name.into(), source, target });
        self.morphisms.len() - 1
    }

    /// Records `after . first = result`.  Identity composites are filled in
    /// automatically at build time.
    pub fn composite(&mut self, after: usize, first: usize, result: usize) {
        self.table.insert((after, first), result);
    }

    pub fn build(self) -> Result<FiniteCategory> {
        let CategoryBuilder { name, objects, morphisms, identities, mut table } = self;

        let mut seen = std::collections::BTreeSet::new();
        for o in &objects {
            if !seen.insert(o.clone()) {
                return Err(Error::invalid(format!("duplicate object name {o} in {name}")));
            }
        }
        seen.clear();
        for m in &morphisms {
            if !seen.insert(m.name.clone()) {
                return Err(Error::invalid(format!("duplicate morphism name {} in {name}", m.name)));
            }
            if m.source >= objects.len() || m.target >= objects.len() {
                return Err(Error::invalid(format!("morphism {} out of range in {name}", m.name)));
            }
        }

        for (i, m) in morphisms.iter().enumerate() {
            table.insert((i, identities[m.source]), i);
            table.insert((identities[m.target], i), i);
        }

        for (&(after, first), &result) in &table {
            let f = &morphisms[first];
            let g = &morphisms[after];
            let r = &morphisms[result];
            if f.target != g.source {
                return Err(Error::invalid(format!(
                    "composite {} . {} recorded for a non-composable pair in {name}",
                    g.name, f.name
                )));
            }
            if r.source != f.source || r.target != g.target {
                return Err(Error::invalid(format!(
                    "composite {} . {} = {} has the wrong boundary in {name}",
                    g.name, f.name, r.name
                )));
            }
        }
        for (first, f) in morphisms.iter().enumerate() {
            for (after, g) in morphisms.iter().enumerate() {
                if f.target == g.source && !table.contains_key(&(after, first)) {
                    return Err(Error::invalid(format!(
                        "missing composite {} . {} in {name}",
                        g.name, f.name
                    )));
                }
            }
        }

        let cat = FiniteCategory { name, objects, morphisms, identities, table };
        for f in 0..cat.morphisms.len() {
            for g in 0..cat.morphisms.len() {
                if cat.morphisms[f].target != cat.morphisms[g].source {
                    continue;
                }
                for h in 0..cat.morphisms.len() {
                    if cat.morphisms[g].target != cat.morphisms[h].source {
                        continue;
                    }
                    let gf = cat.table[&(g, f)];
                    let hg = cat.table[&(h, g)];
                    if cat.table[&(h, gf)] != cat.table[&(hg, f)] {
                        return Err(Error::invalid(format!(
                            "composition in {} is not associative at ({}, {}, {})",
                            cat.name,
                            cat.morphisms[h].name,
                            cat.morphisms[g].name,
                            cat.morphisms[f].name
                        )));
                    }
                }
            }
        }
        Ok(cat)
    }
}

impl FiniteCategory {
    pub fn discrete(name: impl Into<String>, objects: &[&str]) -> FiniteCategory {
        let mut b = CategoryBuilder::new(name);
        for o in objects {
            b.object(*o);
        }
        b.build().expect("a discrete category always validates")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_name(&self, obj: usize) -> &str {
        &self.objects[obj]
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn object_named(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_named(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn identity(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].source] == m
            && self.morphisms[m].source == self.morphisms[m].target
    }

    pub fn compose(&self, after: usize, first: usize) -> Result<usize> {
        self.table.get(&(after, first)).copied().ok_or_else(|| {
            Error::invalid(format!(
                "{} . {} is not composable in {}",
                self.morphisms[after].name, self.morphisms[first].name, self.name
            ))
        })
    }

    pub fn hom(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].source == source && self.morphisms[m].target == target)
            .collect()
    }

    pub fn inverse(&self, m: usize) -> Option<usize> {
        let mor = &self.morphisms[m];
        self.hom(mor.target, mor.source).into_iter().find(|&n| {
            self.table[&(n, m)] == self.identities[mor.source]
                && self.table[&(m, n)] == self.identities[mor.target]
        })
    }

    pub fn is_iso(&self, m: usize) -> bool {
        self.inverse(m).is_some()
    }

    /// Invertible morphisms from `source` to `target`.
    pub fn isos(&self, source: usize, target: usize) -> Vec<usize> {
        self.hom(source, target).into_iter().filter(|&m| self.is_iso(m)).collect()
    }
}

/// A functor between two [`FiniteCategory`] values, stored as the object and
/// morphism tables.  The categories are passed explicitly to every check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteFunctor {
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
}

impl FiniteFunctor {
    pub fn identity(c: &FiniteCategory) -> FiniteFunctor {
        FiniteFunctor {
            obj: (0..c.object_count()).collect(),
            mor: (0..c.morphism_count()).collect(),
        }
    }

    pub fn new(
        c: &FiniteCategory,
        d: &FiniteCategory,
        obj: Vec<usize>,
        mor: Vec<usize>,
    ) -> Result<FiniteFunctor> {
        let f = FiniteFunctor { obj, mor };
        f.validate(c, d)?;
        Ok(f)
    }

    pub fn validate(&self, c: &FiniteCategory, d: &FiniteCategory) -> Result<()> {
        if self.obj.len() != c.object_count() || self.mor.len() != c.morphism_count() {
            return Err(Error::invalid(format!("functor tables do not fit {}", c.name)));
        }
        if self.obj.iter().any(|&o| o >= d.object_count())
            || self.mor.iter().any(|&m| m >= d.morphism_count())
        {
            return Err(Error::invalid(format!("functor tables do not land in {}", d.name)));
        }
        for (m, mor) in (0..c.morphism_count()).map(|m| (m, c.morphism(m))) {
            let image = d.morphism(self.mor[m]);
            if image.source != self.obj[mor.source] || image.target != self.obj[mor.target] {
                return Err(Error::invalid(format!(
                    "functor breaks the boundary of {}",
                    mor.name
                )));
            }
        }
        for o in 0..c.object_count() {
            if self.mor[c.identity(o)] != d.identity(self.obj[o]) {
                return Err(Error::invalid(format!(
                    "functor moves the identity of {}",
                    c.object_name(o)
                )));
            }
        }
        for f in 0..c.morphism_count() {
            for g in 0..c.morphism_count() {
                if c.morphism(f).target != c.morphism(g).source {
                    continue;
                }
                let gf = c.compose(g, f)?;
                if self.mor[gf] != d.compose(self.mor[g], self.mor[f])? {
                    return Err(Error::invalid(format!(
                        "functor breaks the composite {} . {}",
                        c.morphism(g).name,
                        c.morphism(f).name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Applies `self` first, `next` second.
    pub fn then(&self, next: &FiniteFunctor) -> FiniteFunctor {
        FiniteFunctor {
            obj: self.obj.iter().map(|&o| next.obj[o]).collect(),
            mor: self.mor.iter().map(|&m| next.mor[m]).collect(),
        }
    }

    pub fn apply_obj(&self, obj: usize) -> usize {
        self.obj[obj]
    }

    pub fn apply_mor(&self, m: usize) -> usize {
        self.mor[m]
    }
}

/// A natural transformation, stored as one component morphism of the target
/// category per source object.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NatTransf {
    pub components: Vec<usize>,
}

impl NatTransf {
    pub fn identity(d: &FiniteCategory, f: &FiniteFunctor) -> NatTransf {
        NatTransf { components: f.obj.iter().map(|&o| d.identity(o)).collect() }
    }

    /// Checks `self : f => g` for functors `c -> d`.
    pub fn validate(
        &self,
        c: &FiniteCategory,
        d: &FiniteCategory,
        f: &FiniteFunctor,
        g: &FiniteFunctor,
    ) -> Result<()> {
        if self.components.len() != c.object_count() {
            return Err(Error::invalid("one component per object expected".to_string()));
        }
        for o in 0..c.object_count() {
            let comp = d.morphism(self.components[o]);
            if comp.source != f.obj[o] || comp.target != g.obj[o] {
                return Err(Error::invalid(format!(
                    "component at {} has the wrong boundary",
                    c.object_name(o)
                )));
            }
        }
        for m in 0..c.morphism_count() {
            let mor = c.morphism(m);
            let left = d.compose(self.components[mor.target], f.mor[m])?;
            let right = d.compose(g.mor[m], self.components[mor.source])?;
            if left != right {
                return Err(Error::invalid(format!("naturality fails at {}", mor.name)));
            }
        }
        Ok(())
    }

    /// Vertical composite: `self` applied after `first`.
    pub fn vcomp(&self, first: &NatTransf, d: &FiniteCategory) -> Result<NatTransf> {
        let components = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(&second, &first)| d.compose(second, first))
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTransf { components })
    }

    pub fn is_iso(&self, d: &FiniteCategory) -> bool {
        self.components.iter().all(|&m| d.is_iso(m))
    }
}

/// Every functor `c -> d`, in lexicographic table order.
pub fn all_functors(
    c: &FiniteCategory,
    d: &FiniteCategory,
    budget: &mut Budget,
) -> Result<Vec<FiniteFunctor>> {
    if c.object_count() == 0 {
        return Ok(vec![FiniteFunctor { obj: Vec::new(), mor: Vec::new() }]);
    }
    if d.object_count() == 0 {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    let mut obj = vec![0usize; c.object_count()];
    loop {
        budget.spend(1)?;
        assign_morphisms(c, d, &obj, budget, &mut found)?;
        let mut pos = c.object_count();
        loop {
            if pos == 0 {
                return Ok(found);
            }
            pos -= 1;
            obj[pos] += 1;
            if obj[pos] < d.object_count() {
                break;
            }
            obj[pos] = 0;
        }
    }
}

fn assign_morphisms(
    c: &FiniteCategory,
    d: &FiniteCategory,
    obj: &[usize],
    budget: &mut Budget,
    found: &mut Vec<FiniteFunctor>,
) -> Result<()> {
    let free: Vec<usize> = (0..c.morphism_count()).filter(|&m| !c.is_identity(m)).collect();
    let mut mor: Vec<usize> = (0..c.morphism_count())
        .map(|m| if c.is_identity(m) { d.identity(obj[c.morphism(m).source]) } else { usize::MAX })
        .collect();
    search_morphisms(c, d, obj, &free, 0, &mut mor, budget, found)
}

#[allow(clippy::too_many_arguments)]
fn search_morphisms(
    c: &FiniteCategory,
    d: &FiniteCategory,
    obj: &[usize],
    free: &[usize],
    depth: usize,
    mor: &mut Vec<usize>,
    budget: &mut Budget,
    found: &mut Vec<FiniteFunctor>,
) -> Result<()> {
    if depth == free.len() {
        let cand = FiniteFunctor { obj: obj.to_vec(), mor: mor.clone() };
        if cand.validate(c, d).is_ok() {
            found.push(cand);
        }
        return Ok(());
    }
    let m = free[depth];
    let src = obj[c.morphism(m).source];
    let tgt = obj[c.morphism(m).target];
    for image in d.hom(src, tgt) {
        budget.spend(1)?;
        mor[m] = image;
        if partial_ok(c, d, mor) {
            search_morphisms(c, d, obj, free, depth + 1, mor, budget, found)?;
        }
    }
    mor[m] = usize::MAX;
    Ok(())
}

/// Rejects a partial morphism table as soon as an already-determined
/// composite disagrees with it.
fn partial_ok(c: &FiniteCategory, d: &FiniteCategory, mor: &[usize]) -> bool {
    for f in 0..c.morphism_count() {
        if mor[f] == usize::MAX {
            continue;
        }
        for g in 0..c.morphism_count() {
            if mor[g] == usize::MAX || c.morphism(f).target != c.morphism(g).source {
                continue;
            }
            let gf = c.compose(g, f).expect("validated category");
            if mor[gf] == usize::MAX {
                continue;
            }
            let image = d.compose(mor[g], mor[f]).expect("boundaries preserved");
            if mor[gf] != image {
                return false;
            }
        }
    }
    true
}

/// Every natural transformation `f => g`, in lexicographic component order.
pub fn all_nat_transfs(
    c: &FiniteCategory,
    d: &FiniteCategory,
    f: &FiniteFunctor,
    g: &FiniteFunctor,
    budget: &mut Budget,
) -> Result<Vec<NatTransf>> {
    let slots: Vec<Vec<usize>> =
        (0..c.object_count()).map(|o| d.hom(f.obj[o], g.obj[o])).collect();
    let mut found = Vec::new();
    let mut components = Vec::new();
    pick_components(c, d, f, g, &slots, &mut components, budget, &mut found)?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn pick_components(
    c: &FiniteCategory,
    d: &FiniteCategory,
    f: &FiniteFunctor,
    g: &FiniteFunctor,
    slots: &[Vec<usize>],
    partial: &mut Vec<usize>,
    budget: &mut Budget,
    found: &mut Vec<NatTransf>,
) -> Result<()> {
    if partial.len() == slots.len() {
        let cand = NatTransf { components: partial.clone() };
        if cand.validate(c, d, f, g).is_ok() {
            found.push(cand);
        }
        return Ok(());
    }
    for &m in &slots[partial.len()] {
        budget.spend(1)?;
        partial.push(m);
        pick_components(c, d, f, g, slots, partial, budget, found)?;
        partial.pop();
    }
    Ok(())
}

/// Searches for an adjoint pair of functors witnessing an equivalence.
///
/// `Ok(Some((to_b, to_a)))` carries validated functors with invertible
/// round-trip comparisons.  `Ok(None)` means the whole space was enumerated
/// without finding a witness; read it as "not verified", the instances this
/// routine is used on are too small to distinguish that from a disproof but
/// the caller should not.
pub fn equivalence(
    a: &FiniteCategory,
    b: &FiniteCategory,
    budget: &mut Budget,
) -> Result<Option<(FiniteFunctor, FiniteFunctor)>> {
    let forward = all_functors(a, b, budget)?;
    let backward = all_functors(b, a, budget)?;
    for f in &forward {
        for g in &backward {
            budget.spend(1)?;
            let round_a = f.then(g);
            let round_b = g.then(f);
            let unit_isos = all_nat_transfs(a, a, &FiniteFunctor::identity(a), &round_a, budget)?
                .into_iter()
                .any(|t| t.is_iso(a));
            if !unit_isos {
                continue;
            }
            let counit_isos = all_nat_transfs(b, b, &round_b, &FiniteFunctor::identity(b), budget)?
                .into_iter()
                .any(|t| t.is_iso(b));
            if counit_isos {
                return Ok(Some((f.clone(), g.clone())));
            }
        }
    }
    Ok(None)
}

/// Strict isomorphism search: functor pairs composing to the identity on
/// the nose, both ways.
pub fn isomorphism(
    a: &FiniteCategory,
    b: &FiniteCategory,
    budget: &mut Budget,
) -> Result<Option<(FiniteFunctor, FiniteFunctor)>> {
    if a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count() {
        return Ok(None);
    }
    let forward = all_functors(a, b, budget)?;
    let backward = all_functors(b, a, budget)?;
    for f in &forward {
        for g in &backward {
            budget.spend(1)?;
            if f.then(g) == FiniteFunctor::identity(a) && g.then(f) == FiniteFunctor::identity(b) {
                return Ok(Some((f.clone(), g.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walking_arrow() -> FiniteCategory {
        let mut b = CategoryBuilder::new("arrow");
        let x = b.object("x");
        let y = b.object("y");
        b.morphism("f", x, y);
        b.build().unwrap()
    }

    fn chaotic_pair() -> FiniteCategory {
        let mut b = CategoryBuilder::new("pair");
        let x = b.object("x");
        let y = b.object("y");
        let f = b.morphism("f", x, y);
        let g = b.morphism("g", y, x);
        b.composite(g, f, b.identity_of(x));
        b.composite(f, g, b.identity_of(y));
        b.build().unwrap()
    }

    #[test]
    fn builder_demands_a_total_table() {
        let mut b = CategoryBuilder::new("broken");
        let x = b.object("x");
        b.morphism("e", x, x);
        let err = b.build().unwrap_err();
        assert!(err.to_string().contains("missing composite"));
    }

    #[test]
    fn builder_rejects_non_associative_tables() {
        let mut b = CategoryBuilder::new("broken");
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        let id = b.identity_of(x);
        b.composite(e, e, id);
        let c = b.build().unwrap();
        assert_eq!(c.compose(e, e).unwrap(), id);

        let mut b = CategoryBuilder::new("broken");
        let x = b.object("x");
        let e = b.morphism("e", x, x);
        let u = b.morphism("u", x, x);
        let id = b.identity_of(x);
        b.composite(e, e, u);
        b.composite(e, u, id);
        b.composite(u, e, e);
        b.composite(u, u, u);
        assert!(b.build().is_err());
    }

    #[test]
    fn the_walking_arrow_has_three_endofunctors() {
        let c = walking_arrow();
        let all = all_functors(&c, &c, &mut Budget::new(10_000)).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.contains(&FiniteFunctor::identity(&c)));
    }

    #[test]
    fn isos_are_detected_in_the_chaotic_pair() {
        let c = chaotic_pair();
        let f = c.morphism_named("f").unwrap();
        assert!(c.is_iso(f));
        assert_eq!(c.inverse(f), c.morphism_named("g"));
        assert_eq!(c.isos(0, 1).len(), 1);
    }

    #[test]
    fn the_chaotic_pair_collapses_to_a_point() {
        let pair = chaotic_pair();
        let point = FiniteCategory::discrete("point", &["*"]);
        let witness = equivalence(&pair, &point, &mut Budget::new(100_000)).unwrap();
        assert!(witness.is_some());
        assert!(isomorphism(&pair, &point, &mut Budget::new(100_000)).unwrap().is_none());
    }

    #[test]
    fn natural_transformations_between_arrow_endofunctors() {
        let c = walking_arrow();
        let id = FiniteFunctor::identity(&c);
        let all = all_functors(&c, &c, &mut Budget::new(10_000)).unwrap();
        let const_y = all
            .iter()
            .find(|f| f.obj == vec![1, 1])
            .expect("constant functor at the arrow's target");
        let transfs =
            all_nat_transfs(&c, &c, &id, const_y, &mut Budget::new(10_000)).unwrap();
        assert_eq!(transfs.len(), 1);
        let back = all_nat_transfs(&c, &c, const_y, &id, &mut Budget::new(10_000)).unwrap();
        assert!(back.is_empty());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let c = chaotic_pair();
        let err = all_functors(&c, &c, &mut Budget::new(3)).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }
}
