//! Finitely presented theories: generator lists, relations, and the
//! decision procedures that work directly on presentations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

use super::normal::{detect_strict, strict_normal, syntactic_normal, OneNormal, StrictInfo};
use super::term::{OneCellTerm, TwoCellTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    One,
    Two,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::One => write!(f, "1"),
            Dimension::Two => write!(f, "2"),
        }
    }
}

/// How 1-cell terms are normalized before comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NormalizerKind {
    /// Free normal form only; relations stay visible.
    Syntactic,
    /// Additionally flatten associative binary generators and erase their
    /// two-sided units.
    StrictAssoc,
}

/// Outcome of a word-problem query.  `Undecided` means the procedure cannot
/// settle the question with the normalizers at hand, not that the answer is
/// unknown in principle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    Distinct,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal => write!(f, "equal"),
            Verdict::Distinct => write!(f, "distinct"),
            Verdict::Undecided => write!(f, "undecided"),
        }
    }
}

/// A 1-cell generator, written in the algebraic direction: `source` is the
/// number of inputs consumed, `target` the number of outputs produced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen1 {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A 2-cell generator between parallel 1-cell terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen2 {
    pub name: String,
    pub source: OneCellTerm,
    pub target: OneCellTerm,
    pub invertible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoryPresentation {
    pub name: String,
    pub dimension: Dimension,
    pub one_cell_gens: Vec<Gen1>,
    pub one_cell_relations: Vec<(OneCellTerm, OneCellTerm)>,
    pub two_cell_gens: Vec<Gen2>,
    pub two_cell_relations: Vec<(TwoCellTerm, TwoCellTerm)>,
    pub normalizer: NormalizerKind,
    /// When set, hom-categories are thin: any two parallel 2-cells are equal
    /// and every 2-cell is invertible.
    pub coherent: bool,
    /// Free-form annotations, e.g. which axioms are standard imports rather
    /// than primary sources.  Ignored by presentation comparison.
    pub metadata: BTreeMap<String, String>,
}

impl TheoryPresentation {
    pub fn new(name: impl Into<String>, dimension: Dimension) -> Self {
        TheoryPresentation {
            name: name.into(),
            dimension,
            one_cell_gens: Vec::new(),
            one_cell_relations: Vec::new(),
            two_cell_gens: Vec::new(),
            two_cell_relations: Vec::new(),
            normalizer: NormalizerKind::Syntactic,
            coherent: false,
            metadata: BTreeMap::new(),
        }
    }

    pub fn gen1(&self, name: &str) -> Option<&Gen1> {
        self.one_cell_gens.iter().find(|g| g.name == name)
    }

    pub fn gen2(&self, name: &str) -> Option<&Gen2> {
        self.two_cell_gens.iter().find(|g| g.name == name)
    }

    /// Input and output arity of a 1-cell term.
    pub fn typecheck_one(&self, term: &OneCellTerm) -> Result<(usize, usize)> {
        match term {
            OneCellTerm::Base(u) => Ok((u.target, u.source)),
            OneCellTerm::Gen(name) => {
                let g = self
                    .gen1(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                Ok((g.source, g.target))
            }
            OneCellTerm::Compose(outer, inner) => {
                let (a, b) = self.typecheck_one(inner)?;
                let (c, d) = self.typecheck_one(outer)?;
                if b != c {
                    return Err(Error::arity(format!(
                        "composition mismatch: inner produces {b}, outer consumes {c}"
                    )));
                }
                Ok((a, d))
            }
            OneCellTerm::Juxtapose(l, r) => {
                let (a, b) = self.typecheck_one(l)?;
                let (c, d) = self.typecheck_one(r)?;
                Ok((a + c, b + d))
            }
        }
    }

    pub fn strict_info(&self) -> Result<StrictInfo> {
        detect_strict(self)
    }

    /// Normal form under this presentation's normalizer.
    pub fn normalize_one(&self, term: &OneCellTerm) -> Result<OneNormal> {
        self.normalize_forest(syntactic_normal(self, term)?)
    }

    /// Normal form of an already-expanded forest.
    pub fn normalize_forest(&self, nf: OneNormal) -> Result<OneNormal> {
        match self.normalizer {
            NormalizerKind::Syntactic => Ok(nf),
            NormalizerKind::StrictAssoc => Ok(strict_normal(&self.strict_info()?, nf)),
        }
    }

    /// Word problem for 1-cells.  Matching normal forms always mean equal;
    /// a mismatch is conclusive only when every relation is accounted for by
    /// the normalizer.
    pub fn one_eq(&self, a: &OneCellTerm, b: &OneCellTerm) -> Result<Verdict> {
        self.forest_eq(&syntactic_normal(self, a)?, &syntactic_normal(self, b)?)
    }

    /// The same word problem, asked of expanded forests.
    pub fn forest_eq(&self, a: &OneNormal, b: &OneNormal) -> Result<Verdict> {
        if self.normalize_forest(a.clone())? == self.normalize_forest(b.clone())? {
            return Ok(Verdict::Equal);
        }
        let absorbed = match self.normalizer {
            NormalizerKind::Syntactic => self.one_cell_relations.is_empty(),
            NormalizerKind::StrictAssoc => self.strict_info()?.all_absorbed(),
        };
        Ok(if absorbed { Verdict::Distinct } else { Verdict::Undecided })
    }

    /// True when every input variable is consumed exactly once.
    pub fn is_linear(&self, term: &OneCellTerm) -> Result<bool> {
        let nf = syntactic_normal(self, term)?;
        Ok(nf.var_usage().iter().all(|&c| c == 1))
    }

    /// Source and target 1-cells of a 2-cell term.
    pub fn typecheck_two(&self, cell: &TwoCellTerm) -> Result<(OneCellTerm, OneCellTerm)> {
        match cell {
            TwoCellTerm::Id(w) => {
                self.typecheck_one(w)?;
                Ok((w.clone(), w.clone()))
            }
            TwoCellTerm::Gen(name) => {
                let g = self
                    .gen2(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                Ok((g.source.clone(), g.target.clone()))
            }
            TwoCellTerm::VComp(second, first) => {
                let (src, mid) = self.typecheck_two(first)?;
                let (mid2, tgt) = self.typecheck_two(second)?;
                if self.one_eq(&mid, &mid2)? == Verdict::Distinct {
                    return Err(Error::typing(format!(
                        "vertical interface mismatch: {} vs {}",
                        self.normalize_one(&mid)?,
                        self.normalize_one(&mid2)?
                    )));
                }
                Ok((src, tgt))
            }
            TwoCellTerm::HComp(outer, inner) => {
                let (w, w2) = self.typecheck_two(inner)?;
                let (u, u2) = self.typecheck_two(outer)?;
                let src = OneCellTerm::compose(u, w);
                let tgt = OneCellTerm::compose(u2, w2);
                self.typecheck_one(&src)?;
                self.typecheck_one(&tgt)?;
                Ok((src, tgt))
            }
            TwoCellTerm::Juxtapose(l, r) => {
                let (a, b) = self.typecheck_two(l)?;
                let (c, d) = self.typecheck_two(r)?;
                Ok((OneCellTerm::juxt(a, c), OneCellTerm::juxt(b, d)))
            }
            TwoCellTerm::Inverse(inner) => {
                let (src, tgt) = self.typecheck_two(inner)?;
                if !self.is_invertible_pasting(inner) {
                    return Err(Error::typing(
                        "inverse of a pasting containing a non-invertible generator",
                    ));
                }
                Ok((tgt, src))
            }
        }
    }

    /// True when every generator instance in the pasting is invertible.
    pub fn is_invertible_pasting(&self, cell: &TwoCellTerm) -> bool {
        if self.coherent {
            return true;
        }
        cell.gen_names()
            .iter()
            .all(|name| self.gen2(name).map(|g| g.invertible).unwrap_or(false))
    }

    /// Equality of 2-cell terms by structure alone: thin hom-categories make
    /// every parallel pair equal, and generator-free pastings denote
    /// identities.  Anything else stays undecided here; model evaluation can
    /// often do better.
    pub fn two_eq_structural(&self, a: &TwoCellTerm, b: &TwoCellTerm) -> Result<Verdict> {
        let (sa, ta) = self.typecheck_two(a)?;
        let (sb, tb) = self.typecheck_two(b)?;
        let src = self.one_eq(&sa, &sb)?;
        let tgt = self.one_eq(&ta, &tb)?;
        if src == Verdict::Distinct || tgt == Verdict::Distinct {
            return Ok(Verdict::Distinct);
        }
        if src != Verdict::Equal || tgt != Verdict::Equal {
            return Ok(Verdict::Undecided);
        }
        if self.coherent {
            return Ok(Verdict::Equal);
        }
        if a.is_identity_pasting() && b.is_identity_pasting() {
            return Ok(Verdict::Equal);
        }
        Ok(Verdict::Undecided)
    }

    /// Parallel boundary check for two 2-cell terms; used when validating
    /// relations and morphisms.
    pub fn boundaries_match(&self, a: &TwoCellTerm, b: &TwoCellTerm) -> Result<bool> {
        let (sa, ta) = self.typecheck_two(a)?;
        let (sb, tb) = self.typecheck_two(b)?;
        Ok(self.one_eq(&sa, &sb)? != Verdict::Distinct
            && self.one_eq(&ta, &tb)? != Verdict::Distinct)
    }

    /// Structural well-formedness of the presentation itself.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for g in &self.one_cell_gens {
            if !seen.insert(&g.name) {
                return Err(Error::invalid(format!("duplicate 1-cell generator {}", g.name)));
            }
        }
        let mut seen2 = BTreeSet::new();
        for g in &self.two_cell_gens {
            if !seen2.insert(&g.name) {
                return Err(Error::invalid(format!("duplicate 2-cell generator {}", g.name)));
            }
        }
        if self.dimension == Dimension::One
            && (!self.two_cell_gens.is_empty() || !self.two_cell_relations.is_empty())
        {
            return Err(Error::Dimension(format!(
                "theory {} has dimension 1 but carries 2-cell data",
                self.name
            )));
        }
        for (lhs, rhs) in &self.one_cell_relations {
            let a = self.typecheck_one(lhs)?;
            let b = self.typecheck_one(rhs)?;
            if a != b {
                return Err(Error::invalid(format!(
                    "1-cell relation sides not parallel in {}: {:?} vs {:?}",
                    self.name, a, b
                )));
            }
        }
        for g in &self.two_cell_gens {
            let a = self.typecheck_one(&g.source)?;
            let b = self.typecheck_one(&g.target)?;
            if a != b {
                return Err(Error::invalid(format!(
                    "2-cell generator {} has non-parallel boundary: {:?} vs {:?}",
                    g.name, a, b
                )));
            }
        }
        for (lhs, rhs) in &self.two_cell_relations {
            if !self.boundaries_match(lhs, rhs)? {
                return Err(Error::invalid(format!(
                    "2-cell relation sides not parallel in {}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// Relations as a sorted list of sorted normal-form pairs; the canonical
    /// shape used by presentation comparison.
    fn canonical_one_relations(&self) -> Result<Vec<(OneNormal, OneNormal)>> {
        let mut rels = Vec::new();
        for (lhs, rhs) in &self.one_cell_relations {
            let a = syntactic_normal(self, lhs)?;
            let b = syntactic_normal(self, rhs)?;
            rels.push(if a <= b { (a, b) } else { (b, a) });
        }
        rels.sort();
        rels.dedup();
        Ok(rels)
    }

    fn canonical_two_relations(&self) -> Vec<(TwoCellTerm, TwoCellTerm)> {
        let mut rels: Vec<(TwoCellTerm, TwoCellTerm)> = self
            .two_cell_relations
            .iter()
            .cloned()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        rels.sort();
        rels.dedup();
        rels
    }

    /// Equality of presentations up to relation order and orientation; the
    /// `name` field is ignored.
    pub fn same_presentation(&self, other: &TheoryPresentation) -> Result<bool> {
        if self.dimension != other.dimension
            || self.normalizer != other.normalizer
            || self.coherent != other.coherent
        {
            return Ok(false);
        }
        let mut mine = self.one_cell_gens.clone();
        let mut theirs = other.one_cell_gens.clone();
        mine.sort();
        theirs.sort();
        if mine != theirs {
            return Ok(false);
        }
        let mut mine2 = self.two_cell_gens.clone();
        let mut theirs2 = other.two_cell_gens.clone();
        mine2.sort();
        theirs2.sort();
        if mine2.len() != theirs2.len() {
            return Ok(false);
        }
        for (g, h) in mine2.iter().zip(theirs2.iter()) {
            if g.name != h.name || g.invertible != h.invertible {
                return Ok(false);
            }
            if syntactic_normal(self, &g.source)? != syntactic_normal(other, &h.source)?
                || syntactic_normal(self, &g.target)? != syntactic_normal(other, &h.target)?
            {
                return Ok(false);
            }
        }
        if self.canonical_one_relations()? != other.canonical_one_relations()? {
            return Ok(false);
        }
        Ok(self.canonical_two_relations() == other.canonical_two_relations())
    }

    /// Rename generators via the given maps, through all terms and relations.
    pub fn rename_gens(
        &self,
        map1: &dyn Fn(&str) -> String,
        map2: &dyn Fn(&str) -> String,
    ) -> TheoryPresentation {
        fn rename_one(t: &OneCellTerm, m: &dyn Fn(&str) -> String) -> OneCellTerm {
            match t {
                OneCellTerm::Base(u) => OneCellTerm::Base(u.clone()),
                OneCellTerm::Gen(g) => OneCellTerm::Gen(m(g)),
                OneCellTerm::Compose(a, b) => {
                    OneCellTerm::compose(rename_one(a, m), rename_one(b, m))
                }
                OneCellTerm::Juxtapose(a, b) => {
                    OneCellTerm::juxt(rename_one(a, m), rename_one(b, m))
                }
            }
        }
        fn rename_two(
            t: &TwoCellTerm,
            m1: &dyn Fn(&str) -> String,
            m2: &dyn Fn(&str) -> String,
        ) -> TwoCellTerm {
            match t {
                TwoCellTerm::Id(w) => TwoCellTerm::Id(rename_one(w, m1)),
                TwoCellTerm::Gen(g) => TwoCellTerm::Gen(m2(g)),
                TwoCellTerm::VComp(a, b) => {
                    TwoCellTerm::vcomp(rename_two(a, m1, m2), rename_two(b, m1, m2))
                }
                TwoCellTerm::HComp(a, b) => {
                    TwoCellTerm::hcomp(rename_two(a, m1, m2), rename_two(b, m1, m2))
                }
                TwoCellTerm::Juxtapose(a, b) => {
                    TwoCellTerm::juxt(rename_two(a, m1, m2), rename_two(b, m1, m2))
                }
                TwoCellTerm::Inverse(a) => TwoCellTerm::inverse(rename_two(a, m1, m2)),
            }
        }
        TheoryPresentation {
            name: self.name.clone(),
            dimension: self.dimension,
            one_cell_gens: self
                .one_cell_gens
                .iter()
                .map(|g| Gen1 { name: map1(&g.name), source: g.source, target: g.target })
                .collect(),
            one_cell_relations: self
                .one_cell_relations
                .iter()
                .map(|(a, b)| (rename_one(a, map1), rename_one(b, map1)))
                .collect(),
            two_cell_gens: self
                .two_cell_gens
                .iter()
                .map(|g| Gen2 {
                    name: map2(&g.name),
                    source: rename_one(&g.source, map1),
                    target: rename_one(&g.target, map1),
                    invertible: g.invertible,
                })
                .collect(),
            two_cell_relations: self
                .two_cell_relations
                .iter()
                .map(|(a, b)| (rename_two(a, map1, map2), rename_two(b, map1, map2)))
                .collect(),
            normalizer: self.normalizer,
            coherent: self.coherent,
            metadata: self.metadata.clone(),
        }
    }

    /// Search for a generator bijection making the presentations equal.
    pub fn presentation_isomorphic(&self, other: &TheoryPresentation) -> Result<bool> {
        if self.one_cell_gens.len() != other.one_cell_gens.len()
            || self.two_cell_gens.len() != other.two_cell_gens.len()
        {
            return Ok(false);
        }
        let names1: Vec<&str> = self.one_cell_gens.iter().map(|g| g.name.as_str()).collect();
        let names2: Vec<&str> = self.two_cell_gens.iter().map(|g| g.name.as_str()).collect();
        let targets1: Vec<&str> = other.one_cell_gens.iter().map(|g| g.name.as_str()).collect();
        let targets2: Vec<&str> = other.two_cell_gens.iter().map(|g| g.name.as_str()).collect();
        for perm1 in targets1.iter().permutations(targets1.len()) {
            let ok_arities = names1.iter().zip(perm1.iter()).all(|(a, b)| {
                let ga = self.gen1(a).unwrap();
                let gb = other.gen1(b).unwrap();
                (ga.source, ga.target) == (gb.source, gb.target)
            });
            if !ok_arities {
                continue;
            }
            for perm2 in targets2.iter().permutations(targets2.len()) {
                let m1 = |g: &str| -> String {
                    names1
                        .iter()
                        .position(|n| *n == g)
                        .map(|i| perm1[i].to_string())
                        .unwrap_or_else(|| g.to_string())
                };
                let m2 = |g: &str| -> String {
                    names2
                        .iter()
                        .position(|n| *n == g)
                        .map(|i| perm2[i].to_string())
                        .unwrap_or_else(|| g.to_string())
                };
                let renamed = self.rename_gens(&m1, &m2);
                if renamed.same_presentation(other)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finsk::FinMap;
    use crate::presentation::normal::OpTree;

    fn free_binary() -> TheoryPresentation {
        let mut t = TheoryPresentation::new("binary", Dimension::One);
        t.one_cell_gens.push(Gen1 { name: "m".into(), source: 2, target: 1 });
        t
    }

    fn monoid_like() -> TheoryPresentation {
        let mut t = free_binary();
        t.one_cell_gens.push(Gen1 { name: "e".into(), source: 0, target: 1 });
        let m = |a, b| OneCellTerm::compose(OneCellTerm::gen("m"), OneCellTerm::juxt(a, b));
        let x0 = || OneCellTerm::identity(1);
        t.one_cell_relations.push((
            m(m(x0(), x0()), x0()),
            OneCellTerm::compose(
                OneCellTerm::gen("m"),
                OneCellTerm::juxt(
                    OneCellTerm::identity(1),
                    OneCellTerm::compose(OneCellTerm::gen("m"), OneCellTerm::identity(2)),
                ),
            ),
        ));
        t.one_cell_relations.push((m(OneCellTerm::gen("e"), x0()), x0()));
        t.one_cell_relations.push((m(x0(), OneCellTerm::gen("e")), x0()));
        t.normalizer = NormalizerKind::StrictAssoc;
        t
    }

    #[test]
    fn base_normal_form_reads_off_the_table() {
        let t = free_binary();
        let u = FinMap::new(2, vec![1, 1, 0]).unwrap();
        let nf = t.normalize_one(&OneCellTerm::base(u)).unwrap();
        assert_eq!(nf.source, 2);
        assert_eq!(nf.outputs, vec![OpTree::Var(1), OpTree::Var(1), OpTree::Var(0)]);
    }

    #[test]
    fn compose_substitutes() {
        let t = free_binary();
        let dup = OneCellTerm::base(FinMap::new(1, vec![0, 0]).unwrap());
        let term = OneCellTerm::compose(OneCellTerm::gen("m"), dup);
        let nf = t.normalize_one(&term).unwrap();
        assert_eq!(format!("{nf}"), "1:(m(x0,x0))");
        assert!(!t.is_linear(&term).unwrap());
    }

    #[test]
    fn free_theory_equality_is_decisive() {
        let t = free_binary();
        let left = OneCellTerm::compose(
            OneCellTerm::gen("m"),
            OneCellTerm::juxt(
                OneCellTerm::compose(OneCellTerm::gen("m"), OneCellTerm::identity(2)),
                OneCellTerm::identity(1),
            ),
        );
        let right = OneCellTerm::compose(
            OneCellTerm::gen("m"),
            OneCellTerm::juxt(
                OneCellTerm::identity(1),
                OneCellTerm::compose(OneCellTerm::gen("m"), OneCellTerm::identity(2)),
            ),
        );
        assert_eq!(t.one_eq(&left, &right).unwrap(), Verdict::Distinct);
        assert_eq!(t.one_eq(&left, &left).unwrap(), Verdict::Equal);
    }

    #[test]
    fn strict_normalizer_decides_monoid_words() {
        let t = monoid_like();
        t.validate().unwrap();
        let left = OneCellTerm::compose(
            OneCellTerm::gen("m"),
            OneCellTerm::juxt(
                OneCellTerm::compose(OneCellTerm::gen("m"), OneCellTerm::identity(2)),
                OneCellTerm::identity(1),
            ),
        );
        let right = OneCellTerm::compose(
            OneCellTerm::gen("m"),
            OneCellTerm::juxt(
                OneCellTerm::identity(1),
                OneCellTerm::compose(OneCellTerm::gen("m"), OneCellTerm::identity(2)),
            ),
        );
        assert_eq!(t.one_eq(&left, &right).unwrap(), Verdict::Equal);
        let with_unit = OneCellTerm::compose(
            OneCellTerm::gen("m"),
            OneCellTerm::juxt(OneCellTerm::gen("e"), OneCellTerm::identity(1)),
        );
        assert_eq!(t.one_eq(&with_unit, &OneCellTerm::identity(1)).unwrap(), Verdict::Equal);
        let swap = OneCellTerm::base(FinMap::new(2, vec![1, 0]).unwrap());
        let flipped = OneCellTerm::compose(OneCellTerm::gen("m"), swap);
        assert_eq!(t.one_eq(&OneCellTerm::gen("m"), &flipped).unwrap(), Verdict::Distinct);
    }

    #[test]
    fn unabsorbed_relation_forces_undecided() {
        let mut t = monoid_like();
        let swap = OneCellTerm::base(FinMap::new(2, vec![1, 0]).unwrap());
        t.one_cell_relations
            .push((OneCellTerm::gen("m"), OneCellTerm::compose(OneCellTerm::gen("m"), swap)));
        let swap = OneCellTerm::base(FinMap::new(2, vec![1, 0]).unwrap());
        let flipped = OneCellTerm::compose(OneCellTerm::gen("m"), swap);
        assert_eq!(t.one_eq(&OneCellTerm::gen("m"), &flipped).unwrap(), Verdict::Undecided);
    }

    #[test]
    fn dimension_one_rejects_two_cells() {
        let mut t = free_binary();
        t.two_cell_gens.push(Gen2 {
            name: "bad".into(),
            source: OneCellTerm::gen("m"),
            target: OneCellTerm::gen("m"),
            invertible: false,
        });
        assert!(t.validate().is_err());
    }

    #[test]
    fn same_presentation_ignores_order_and_orientation() {
        let mut a = monoid_like();
        let mut b = monoid_like();
        b.name = "other".into();
        b.one_cell_relations.reverse();
        let (l, r) = b.one_cell_relations[2].clone();
        b.one_cell_relations[2] = (r, l);
        assert!(a.same_presentation(&b).unwrap());
        a.one_cell_relations.pop();
        assert!(!a.same_presentation(&b).unwrap());
    }

    #[test]
    fn iso_search_finds_a_renaming() {
        let a = monoid_like();
        let b = a.rename_gens(
            &|g| if g == "m" { "mul".into() } else { "one".into() },
            &|g| g.into(),
        );
        assert!(a.presentation_isomorphic(&b).unwrap());
        assert!(!a.same_presentation(&b).unwrap());
    }
}
