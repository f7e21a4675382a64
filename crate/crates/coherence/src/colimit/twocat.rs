//! Finite 2-categories and 2-functors into the category world.
//!
//! A [`FiniteTwoCategory`] stores one hom-[`FiniteCategory`] per ordered
//! pair of objects plus explicit horizontal-composition tables.  Validation
//! is exhaustive: unit laws, associativity, and the interchange law are all
//! checked by enumeration, so a value that survives construction really is
//! a strict 2-category.
//!
//! A [`TwoDiagram`] is a strict 2-functor from such an index into finite
//! categories; its functoriality is likewise checked on the nose.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

use super::cat::{CategoryBuilder, FiniteCategory, FiniteFunctor, NatTransf};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTwoCategory {
    pub name: String,
    objects: Vec<String>,
    homs: Vec<Vec<FiniteCategory>>,
    identities: Vec<usize>,
    hcomp_obj: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
    hcomp_mor: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
}

pub struct TwoCatBuilder {
    name: String,
    objects: Vec<String>,
    homs: BTreeMap<(usize, usize), FiniteCategory>,
    identities: BTreeMap<usize, usize>,
    hcomp_obj: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
    hcomp_mor: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
}

impl TwoCatBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        TwoCatBuilder {
            name: name.into(),
            objects: Vec::new(),
            homs: BTreeMap::new(),
            identities: BTreeMap::new(),
            hcomp_obj: BTreeMap::new(),
            hcomp_mor: BTreeMap::new(),
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> usize {
        self.objects.push(name.into());
        self.objects.len() - 1
    }

    /// Installs the hom-category from `i` to `j`.  Unset homs default to
    /// the empty category, except `hom(i, i)` which defaults to the trivial
    /// one-cell category.
    pub fn hom(&mut self, i: usize, j: usize, cells: FiniteCategory) -> &mut Self {
        self.homs.insert((i, j), cells);
        self
    }

    /// Marks which object of `hom(i, i)` is the identity 1-cell.  Only
    /// needed when that hom-category has more than one object.
    pub fn identity_cell(&mut self, i: usize, cell: usize) -> &mut Self {
        self.identities.insert(i, cell);
        self
    }

    /// Installs the horizontal-composition tables for the triple
    /// `(i, j, k)`: `obj[g][f]` composes 1-cells, `mor[beta][alpha]`
    /// composes 2-cells, outer index from `hom(j, k)`, inner from
    /// `hom(i, j)`.  Triples where one side is an identity hom with a
    /// single cell are filled in automatically.
    pub fn hcomp(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        obj: Vec<Vec<usize>>,
        mor: Vec<Vec<usize>>,
    ) -> &mut Self {
        self.hcomp_obj.insert((i, j, k), obj);
        self.hcomp_mor.insert((i, j, k), mor);
        self
    }

    pub fn build(self) -> Result<FiniteTwoCategory> {
        let TwoCatBuilder { name, objects, homs, identities, mut hcomp_obj, mut hcomp_mor } = self;
        let n = objects.len();

        let mut hom_grid: Vec<Vec<FiniteCategory>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let cat = match homs.get(&(i, j)) {
                    Some(c) => c.clone(),
                    None if i == j => {
                        let mut b = CategoryBuilder::new(format!("hom.{}.{}", objects[i], objects[j]));
                        b.object(format!("1_{}", objects[i]));
                        b.build()?
                    }
                    None => CategoryBuilder::new(format!("hom.{}.{}", objects[i], objects[j]))
                        .build()?,
                };
                row.push(cat);
            }
            hom_grid.push(row);
        }

        let mut ids = Vec::with_capacity(n);
        for i in 0..n {
            let id = match identities.get(&i) {
                Some(&cell) => cell,
                None if hom_grid[i][i].object_count() == 1 => 0,
                None => {
                    return Err(Error::invalid(format!(
                        "identity 1-cell of {} is ambiguous",
                        objects[i]
                    )))
                }
            };
            ids.push(id);
        }

        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if hcomp_obj.contains_key(&(i, j, k)) {
                        continue;
                    }
                    let left = &hom_grid[i][j];
                    let right = &hom_grid[j][k];
                    if left.object_count() == 0 || right.object_count() == 0 {
                        hcomp_obj.insert((i, j, k), vec![Vec::new(); right.object_count()]);
                        hcomp_mor.insert((i, j, k), vec![Vec::new(); right.morphism_count()]);
                        continue;
                    }
                    let trivially_left = i == j
                        && left.object_count() == 1
                        && left.morphism_count() == 1
                        && ids[i] == 0;
                    let trivially_right = j == k
                        && right.object_count() == 1
                        && right.morphism_count() == 1
                        && ids[j] == 0;
                    if trivially_left {
                        let obj = (0..right.object_count()).map(|g| vec![g]).collect();
                        let mor = (0..right.morphism_count()).map(|b| vec![b]).collect();
                        hcomp_obj.insert((i, j, k), obj);
                        hcomp_mor.insert((i, j, k), mor);
                    } else if trivially_right {
                        let obj = vec![(0..left.object_count()).collect()];
                        let mor = vec![(0..left.morphism_count()).collect()];
                        hcomp_obj.insert((i, j, k), obj);
                        hcomp_mor.insert((i, j, k), mor);
                    } else {
                        return Err(Error::invalid(format!(
                            "missing horizontal composition table ({i}, {j}, {k}) in {name}"
                        )));
                    }
                }
            }
        }

        let two = FiniteTwoCategory {
            name,
            objects,
            homs: hom_grid,
            identities: ids,
            hcomp_obj,
            hcomp_mor,
        };
        two.validate()?;
        Ok(two)
    }
}

impl FiniteTwoCategory {
    /// Views an ordinary category as a 2-category with only identity
    /// 2-cells.
    pub fn from_category(c: &FiniteCategory) -> Result<FiniteTwoCategory> {
        let mut b = TwoCatBuilder::new(c.name.clone());
        for o in 0..c.object_count() {
            b.object(c.object_name(o));
        }
        let mut cells: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for i in 0..c.object_count() {
            for j in 0..c.object_count() {
                cells.insert((i, j), c.hom(i, j));
            }
        }
        for ((i, j), ms) in &cells {
            let mut hb = CategoryBuilder::new(format!("hom.{}.{}", c.object_name(*i), c.object_name(*j)));
            for &m in ms {
                hb.object(c.morphism(m).name.clone());
            }
            b.hom(*i, *j, hb.build()?);
            if i == j {
                let id_pos = ms
                    .iter()
                    .position(|&m| m == c.identity(*i))
                    .expect("hom(i, i) contains the identity");
                b.identity_cell(*i, id_pos);
            }
        }
        for i in 0..c.object_count() {
            for j in 0..c.object_count() {
                for k in 0..c.object_count() {
                    let inner = &cells[&(i, j)];
                    let outer = &cells[&(j, k)];
                    if inner.is_empty() || outer.is_empty() {
                        continue;
                    }
                    let result = &cells[&(i, k)];
                    let mut obj = Vec::with_capacity(outer.len());
                    for &g in outer {
                        let mut row = Vec::with_capacity(inner.len());
                        for &f in inner {
                            let gf = c.compose(g, f)?;
                            let pos = result
                                .iter()
                                .position(|&m| m == gf)
                                .expect("composite lands in hom(i, k)");
                            row.push(pos);
                        }
                        obj.push(row);
                    }
                    // Discrete homs: the 2-cell table mirrors the 1-cell one.
                    let mor = obj.clone();
                    b.hcomp(i, j, k, obj, mor);
                }
            }
        }
        b.build()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, obj: usize) -> &str {
        &self.objects[obj]
    }

    pub fn object_named(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom(&self, i: usize, j: usize) -> &FiniteCategory {
        &self.homs[i][j]
    }

    pub fn identity_cell(&self, i: usize) -> usize {
        self.identities[i]
    }

    pub fn is_identity_cell(&self, i: usize, j: usize, cell: usize) -> bool {
        i == j && self.identities[i] == cell
    }

    /// Horizontal composite of 1-cells `g . f` for `f : i -> j`,
    /// `g : j -> k`.
    pub fn hcomp_cell(&self, i: usize, j: usize, k: usize, g: usize, f: usize) -> usize {
        self.hcomp_obj[&(i, j, k)][g][f]
    }

    /// Horizontal composite of 2-cells.
    pub fn hcomp_two(&self, i: usize, j: usize, k: usize, beta: usize, alpha: usize) -> usize {
        self.hcomp_mor[&(i, j, k)][beta][alpha]
    }

    fn validate(&self) -> Result<()> {
        let n = self.objects.len();
        if self.homs.len() != n || self.homs.iter().any(|row| row.len() != n) {
            return Err(Error::invalid(format!("hom grid of {} is ragged", self.name)));
        }
        for i in 0..n {
            if self.identities[i] >= self.homs[i][i].object_count() {
                return Err(Error::invalid(format!(
                    "identity 1-cell of {} out of range",
                    self.objects[i]
                )));
            }
        }

        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    self.validate_hcomp(i, j, k)?;
                }
            }
        }

        for i in 0..n {
            for j in 0..n {
                let hom = &self.homs[i][j];
                for f in 0..hom.object_count() {
                    if self.hcomp_cell(i, i, j, f, self.identities[i]) != f
                        || self.hcomp_cell(i, j, j, self.identities[j], f) != f
                    {
                        return Err(Error::invalid(format!(
                            "identity 1-cells are not neutral in {}",
                            self.name
                        )));
                    }
                }
                let id_i = self.homs[i][i].identity(self.identities[i]);
                let id_j = self.homs[j][j].identity(self.identities[j]);
                for a in 0..hom.morphism_count() {
                    if self.hcomp_two(i, i, j, a, id_i) != a
                        || self.hcomp_two(i, j, j, id_j, a) != a
                    {
                        return Err(Error::invalid(format!(
                            "identity 2-cells are not neutral in {}",
                            self.name
                        )));
                    }
                }
            }
        }

        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        self.validate_assoc(i, j, k, l)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_hcomp(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let inner = &self.homs[i][j];
        let outer = &self.homs[j][k];
        let result = &self.homs[i][k];
        let obj = self
            .hcomp_obj
            .get(&(i, j, k))
            .ok_or_else(|| Error::invalid(format!("missing 1-cell table ({i}, {j}, {k})")))?;
        let mor = self
            .hcomp_mor
            .get(&(i, j, k))
            .ok_or_else(|| Error::invalid(format!("missing 2-cell table ({i}, {j}, {k})")))?;
        if obj.len() != outer.object_count()
            || obj.iter().any(|row| row.len() != inner.object_count())
            || mor.len() != outer.morphism_count()
            || mor.iter().any(|row| row.len() != inner.morphism_count())
        {
            return Err(Error::invalid(format!(
                "horizontal tables ({i}, {j}, {k}) have the wrong shape in {}",
                self.name
            )));
        }
        for row in obj {
            for &cell in row {
                if cell >= result.object_count() {
                    return Err(Error::invalid(format!(
                        "1-cell composite out of range in ({i}, {j}, {k})"
                    )));
                }
            }
        }
        for (b, row) in mor.iter().enumerate() {
            for (a, &two) in row.iter().enumerate() {
                if two >= result.morphism_count() {
                    return Err(Error::invalid(format!(
                        "2-cell composite out of range in ({i}, {j}, {k})"
                    )));
                }
                let (bs, bt) = (outer.morphism(b).source, outer.morphism(b).target);
                let (as_, at) = (inner.morphism(a).source, inner.morphism(a).target);
                let img = result.morphism(two);
                if img.source != obj[bs][as_] || img.target != obj[bt][at] {
                    return Err(Error::invalid(format!(
                        "2-cell composite boundary broken in ({i}, {j}, {k})"
                    )));
                }
            }
        }
        // Functoriality in both arguments at once; this is the interchange
        // law plus preservation of identity 2-cells.
        for g in 0..outer.object_count() {
            for f in 0..inner.object_count() {
                let composite = obj[g][f];
                if mor[outer.identity(g)][inner.identity(f)] != result.identity(composite) {
                    return Err(Error::invalid(format!(
                        "identity 2-cells not preserved in ({i}, {j}, {k})"
                    )));
                }
            }
        }
        for b2 in 0..outer.morphism_count() {
            for b1 in 0..outer.morphism_count() {
                if outer.morphism(b1).target != outer.morphism(b2).source {
                    continue;
                }
                let b21 = outer.compose(b2, b1)?;
                for a2 in 0..inner.morphism_count() {
                    for a1 in 0..inner.morphism_count() {
                        if inner.morphism(a1).target != inner.morphism(a2).source {
                            continue;
                        }
                        let a21 = inner.compose(a2, a1)?;
                        let paired = mor[b21][a21];
                        let separate = result.compose(mor[b2][a2], mor[b1][a1])?;
                        if paired != separate {
                            return Err(Error::invalid(format!(
                                "interchange fails in ({i}, {j}, {k}) of {}",
                                self.name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_assoc(&self, i: usize, j: usize, k: usize, l: usize) -> Result<()> {
        let fs = self.homs[i][j].object_count();
        let gs = self.homs[j][k].object_count();
        let hs = self.homs[k][l].object_count();
        for f in 0..fs {
            for g in 0..gs {
                for h in 0..hs {
                    let gf = self.hcomp_cell(i, j, k, g, f);
                    let hg = self.hcomp_cell(j, k, l, h, g);
                    if self.hcomp_cell(i, k, l, h, gf) != self.hcomp_cell(i, j, l, hg, f) {
                        return Err(Error::invalid(format!(
                            "1-cell composition not associative in {}",
                            self.name
                        )));
                    }
                }
            }
        }
        let fm = self.homs[i][j].morphism_count();
        let gm = self.homs[j][k].morphism_count();
        let hm = self.homs[k][l].morphism_count();
        for a in 0..fm {
            for b in 0..gm {
                for c in 0..hm {
                    let ba = self.hcomp_two(i, j, k, b, a);
                    let cb = self.hcomp_two(j, k, l, c, b);
                    if self.hcomp_two(i, k, l, c, ba) != self.hcomp_two(i, j, l, cb, a) {
                        return Err(Error::invalid(format!(
                            "2-cell composition not associative in {}",
                            self.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A designated sub-2-graph of an index, typically the image of a relabeling
/// 2-functor.  Quasi-natural data is required to restrict to identities on
/// it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GammaImage {
    pub objects: BTreeSet<usize>,
    pub one_cells: BTreeSet<(usize, usize, usize)>,
}

impl GammaImage {
    pub fn empty() -> GammaImage {
        GammaImage::default()
    }

    pub fn full(t: &FiniteTwoCategory) -> GammaImage {
        let mut g = GammaImage::empty();
        for i in 0..t.object_count() {
            g.objects.insert(i);
            for j in 0..t.object_count() {
                for cell in 0..t.hom(i, j).object_count() {
                    g.one_cells.insert((i, j, cell));
                }
            }
        }
        g
    }

    pub fn contains_cell(&self, i: usize, j: usize, cell: usize) -> bool {
        self.one_cells.contains(&(i, j, cell))
    }

    /// A valid image contains the endpoints and identities of its cells and
    /// is closed under horizontal composition.
    pub fn validate(&self, t: &FiniteTwoCategory) -> Result<()> {
        for &o in &self.objects {
            if o >= t.object_count() {
                return Err(Error::invalid("designated object out of range".to_string()));
            }
            if !self.contains_cell(o, o, t.identity_cell(o)) {
                return Err(Error::invalid(format!(
                    "designated image misses the identity of {}",
                    t.object_name(o)
                )));
            }
        }
        for &(i, j, cell) in &self.one_cells {
            if i >= t.object_count() || j >= t.object_count() || cell >= t.hom(i, j).object_count()
            {
                return Err(Error::invalid("designated 1-cell out of range".to_string()));
            }
            if !self.objects.contains(&i) || !self.objects.contains(&j) {
                return Err(Error::invalid(
                    "designated 1-cell with undesignated endpoint".to_string(),
                ));
            }
        }
        for &(i, j, f) in &self.one_cells {
            for &(j2, k, g) in &self.one_cells {
                if j2 != j {
                    continue;
                }
                let gf = t.hcomp_cell(i, j, k, g, f);
                if !self.contains_cell(i, k, gf) {
                    return Err(Error::invalid(
                        "designated image not closed under composition".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A strict 2-functor from a finite index into finite categories.
#[derive(Debug, Clone)]
pub struct TwoDiagram {
    pub index: FiniteTwoCategory,
    values: Vec<FiniteCategory>,
    one_maps: BTreeMap<(usize, usize), Vec<FiniteFunctor>>,
    two_maps: BTreeMap<(usize, usize), Vec<NatTransf>>,
}

impl TwoDiagram {
    pub fn new(
        index: FiniteTwoCategory,
        values: Vec<FiniteCategory>,
        one_maps: BTreeMap<(usize, usize), Vec<FiniteFunctor>>,
        two_maps: BTreeMap<(usize, usize), Vec<NatTransf>>,
    ) -> Result<TwoDiagram> {
        let d = TwoDiagram { index, values, one_maps, two_maps };
        d.validate()?;
        Ok(d)
    }

    pub fn constant(index: &FiniteTwoCategory, value: &FiniteCategory) -> Result<TwoDiagram> {
        let n = index.object_count();
        let values = vec![value.clone(); n];
        let mut one_maps = BTreeMap::new();
        let mut two_maps = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let hom = index.hom(i, j);
                one_maps.insert(
                    (i, j),
                    vec![FiniteFunctor::identity(value); hom.object_count()],
                );
                two_maps.insert(
                    (i, j),
                    vec![
                        NatTransf::identity(value, &FiniteFunctor::identity(value));
                        hom.morphism_count()
                    ],
                );
            }
        }
        TwoDiagram::new(index.clone(), values, one_maps, two_maps)
    }

    pub fn value(&self, i: usize) -> &FiniteCategory {
        &self.values[i]
    }

    pub fn functor(&self, i: usize, j: usize, cell: usize) -> &FiniteFunctor {
        &self.one_maps[&(i, j)][cell]
    }

    pub fn transf(&self, i: usize, j: usize, two: usize) -> &NatTransf {
        &self.two_maps[&(i, j)][two]
    }

    fn validate(&self) -> Result<()> {
        let n = self.index.object_count();
        if self.values.len() != n {
            return Err(Error::invalid("one value category per index object expected".to_string()));
        }
        for i in 0..n {
            for j in 0..n {
                let hom = self.index.hom(i, j);
                let fs = self
                    .one_maps
                    .get(&(i, j))
                    .ok_or_else(|| Error::invalid(format!("missing 1-cell images ({i}, {j})")))?;
                let ts = self
                    .two_maps
                    .get(&(i, j))
                    .ok_or_else(|| Error::invalid(format!("missing 2-cell images ({i}, {j})")))?;
                if fs.len() != hom.object_count() || ts.len() != hom.morphism_count() {
                    return Err(Error::invalid(format!(
                        "image tables ({i}, {j}) have the wrong shape"
                    )));
                }
                for f in fs {
                    f.validate(&self.values[i], &self.values[j])?;
                }
                for (a, t) in ts.iter().enumerate() {
                    let src = hom.morphism(a).source;
                    let tgt = hom.morphism(a).target;
                    t.validate(&self.values[i], &self.values[j], &fs[src], &fs[tgt])?;
                }
                for cell in 0..hom.object_count() {
                    if ts[hom.identity(cell)]
                        != NatTransf::identity(&self.values[j], &fs[cell])
                    {
                        return Err(Error::invalid(format!(
                            "identity 2-cell image broken at ({i}, {j})"
                        )));
                    }
                }
                for b in 0..hom.morphism_count() {
                    for a in 0..hom.morphism_count() {
                        if hom.morphism(a).target != hom.morphism(b).source {
                            continue;
                        }
                        let ba = hom.compose(b, a)?;
                        let expect = ts[b].vcomp(&ts[a], &self.values[j])?;
                        if ts[ba] != expect {
                            return Err(Error::invalid(format!(
                                "vertical composition not preserved at ({i}, {j})"
                            )));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            if self.one_maps[&(i, i)][self.index.identity_cell(i)]
                != FiniteFunctor::identity(&self.values[i])
            {
                return Err(Error::invalid(format!(
                    "identity 1-cell of {} not sent to the identity functor",
                    self.index.object_name(i)
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let inner = self.index.hom(i, j);
                    let outer = self.index.hom(j, k);
                    for f in 0..inner.object_count() {
                        for g in 0..outer.object_count() {
                            let gf = self.index.hcomp_cell(i, j, k, g, f);
                            let expect = self.functor(i, j, f).then(self.functor(j, k, g));
                            if *self.functor(i, k, gf) != expect {
                                return Err(Error::invalid(format!(
                                    "1-cell composition not preserved over ({i}, {j}, {k})"
                                )));
                            }
                        }
                    }
                    for a in 0..inner.morphism_count() {
                        for b in 0..outer.morphism_count() {
                            let ba = self.index.hcomp_two(i, j, k, b, a);
                            let expect = self.horizontal(i, j, k, b, a)?;
                            if *self.transf(i, k, ba) != expect {
                                return Err(Error::invalid(format!(
                                    "2-cell whiskering not preserved over ({i}, {j}, {k})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Horizontal composite of the images of 2-cells `beta . alpha`.
    fn horizontal(&self, i: usize, j: usize, k: usize, beta: usize, alpha: usize) -> Result<NatTransf> {
        let inner = self.index.hom(i, j);
        let outer = self.index.hom(j, k);
        let f_tgt = self.functor(i, j, inner.morphism(alpha).target);
        let g_src = self.functor(j, k, outer.morphism(beta).source);
        let t_alpha = self.transf(i, j, alpha);
        let t_beta = self.transf(j, k, beta);
        let components = (0..self.values[i].object_count())
            .map(|x| {
                let left = t_beta.components[f_tgt.obj[x]];
                let right = g_src.mor[t_alpha.components[x]];
                self.values[k].compose(left, right)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTransf { components })
    }
}

/// The covariant hom 2-functor `hom(r, -)` of a finite 2-category, packaged
/// as a diagram over that same index: values are hom-categories, 1-cells
/// act by postcomposition, 2-cells by whiskering.
pub fn hom_diagram(t: &FiniteTwoCategory, r: usize) -> Result<TwoDiagram> {
    if r >= t.object_count() {
        return Err(Error::invalid(format!("{} has no object {r}", t.name)));
    }
    let n = t.object_count();
    let values: Vec<FiniteCategory> = (0..n).map(|d| t.hom(r, d).clone()).collect();
    let mut one_maps = BTreeMap::new();
    let mut two_maps = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let hom = t.hom(i, j);
            let source = t.hom(r, i);
            let mut fs = Vec::with_capacity(hom.object_count());
            for cell in 0..hom.object_count() {
                let id_two = hom.identity(cell);
                let obj = (0..source.object_count())
                    .map(|f| t.hcomp_cell(r, i, j, cell, f))
                    .collect();
                let mor = (0..source.morphism_count())
                    .map(|a| t.hcomp_two(r, i, j, id_two, a))
                    .collect();
                fs.push(FiniteFunctor { obj, mor });
            }
            let mut ts = Vec::with_capacity(hom.morphism_count());
            for iota in 0..hom.morphism_count() {
                let components = (0..source.object_count())
                    .map(|f| t.hcomp_two(r, i, j, iota, source.identity(f)))
                    .collect();
                ts.push(NatTransf { components });
            }
            one_maps.insert((i, j), fs);
            two_maps.insert((i, j), ts);
        }
    }
    TwoDiagram::new(t.clone(), values, one_maps, two_maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colimit::instances::parallel_pair_index;

    fn walking_arrow() -> FiniteCategory {
        let mut b = CategoryBuilder::new("arrow");
        let x = b.object("x");
        let y = b.object("y");
        b.morphism("f", x, y);
        b.build().unwrap()
    }

    #[test]
    fn a_category_lifts_to_a_locally_discrete_two_category() {
        let c = walking_arrow();
        let t = FiniteTwoCategory::from_category(&c).unwrap();
        assert_eq!(t.object_count(), 2);
        assert_eq!(t.hom(0, 1).object_count(), 1);
        assert_eq!(t.hom(1, 0).object_count(), 0);
        assert!(t.is_identity_cell(0, 0, t.identity_cell(0)));
    }

    #[test]
    fn the_parallel_pair_index_validates_with_an_iso_two_cell() {
        let t = parallel_pair_index();
        let hom = t.hom(0, 1);
        assert_eq!(hom.object_count(), 2);
        assert_eq!(hom.isos(0, 1).len(), 1);
        assert_eq!(t.hom(0, 0).object_count(), 1);
    }

    #[test]
    fn gamma_images_must_be_closed() {
        let t = parallel_pair_index();
        let mut g = GammaImage::empty();
        g.one_cells.insert((0, 1, 0));
        assert!(g.validate(&t).is_err());
        let full = GammaImage::full(&t);
        assert!(full.validate(&t).is_ok());
        assert!(GammaImage::empty().validate(&t).is_ok());
    }

    #[test]
    fn constant_diagrams_validate_over_every_index() {
        let value = walking_arrow();
        for index in [
            FiniteTwoCategory::from_category(&walking_arrow()).unwrap(),
            parallel_pair_index(),
        ] {
            let d = TwoDiagram::constant(&index, &value).unwrap();
            assert_eq!(d.value(0).object_count(), 2);
        }
    }

    #[test]
    fn hom_diagrams_validate_and_postcompose() {
        let c = {
            let mut b = CategoryBuilder::new("triangle");
            let x = b.object("x");
            let y = b.object("y");
            let z = b.object("z");
            let f = b.morphism("f", x, y);
            let g = b.morphism("g", y, z);
            let h = b.morphism("h", x, z);
            b.composite(g, f, h);
            b.build().unwrap()
        };
        let t = FiniteTwoCategory::from_category(&c).unwrap();
        let d = hom_diagram(&t, 0).unwrap();
        assert_eq!(d.value(0).object_count(), 1);
        assert_eq!(d.value(2).object_count(), 1);
        let y_to_z = 0;
        let post = d.functor(1, 2, y_to_z);
        assert_eq!(post.obj.len(), d.value(1).object_count());

        let pair = parallel_pair_index();
        let d = hom_diagram(&pair, 0).unwrap();
        assert_eq!(d.value(1).object_count(), 2);
        let iota = pair.hom(0, 1).morphism_named("iota").unwrap();
        let whisker = d.transf(0, 1, iota);
        assert_eq!(whisker.components.len(), d.value(0).object_count());
        assert!(whisker.is_iso(d.value(1)));
    }
}
