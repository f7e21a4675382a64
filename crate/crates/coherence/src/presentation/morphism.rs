//! Presented morphisms between theories: generator assignments plus the
//! checks that they respect arities, boundaries, and relations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::report::Report;

use super::term::{OneCellTerm, TwoCellTerm};
use super::theory::{TheoryPresentation, Verdict};

/// Callback deciding 2-cell equality in a given theory; used to settle
/// relation checks that the structural procedure leaves open, typically by
/// evaluating both sides in a concrete model.
pub type TwoCellOracle<'a> =
    &'a dyn Fn(&TheoryPresentation, &TwoCellTerm, &TwoCellTerm) -> Result<Verdict>;

#[derive(Debug, Clone)]
pub struct TheoryMorphismPresentation {
    pub name: String,
    pub source: TheoryPresentation,
    pub target: TheoryPresentation,
    pub gen1_map: BTreeMap<String, OneCellTerm>,
    pub gen2_map: BTreeMap<String, TwoCellTerm>,
}

impl TheoryMorphismPresentation {
    pub fn new(
        name: impl Into<String>,
        source: TheoryPresentation,
        target: TheoryPresentation,
    ) -> Self {
        TheoryMorphismPresentation {
            name: name.into(),
            source,
            target,
            gen1_map: BTreeMap::new(),
            gen2_map: BTreeMap::new(),
        }
    }

    pub fn map1(&mut self, gen: impl Into<String>, image: OneCellTerm) -> &mut Self {
        self.gen1_map.insert(gen.into(), image);
        self
    }

    pub fn map2(&mut self, gen: impl Into<String>, image: TwoCellTerm) -> &mut Self {
        self.gen2_map.insert(gen.into(), image);
        self
    }

    /// Push a 1-cell term through the generator assignment.
    pub fn apply_one(&self, term: &OneCellTerm) -> Result<OneCellTerm> {
        match term {
            OneCellTerm::Base(u) => Ok(OneCellTerm::Base(u.clone())),
            OneCellTerm::Gen(g) => self
                .gen1_map
                .get(g)
                .cloned()
                .ok_or_else(|| Error::UnknownGenerator(format!("{} (no image under {})", g, self.name))),
            OneCellTerm::Compose(a, b) => {
                Ok(OneCellTerm::compose(self.apply_one(a)?, self.apply_one(b)?))
            }
            OneCellTerm::Juxtapose(a, b) => {
                Ok(OneCellTerm::juxt(self.apply_one(a)?, self.apply_one(b)?))
            }
        }
    }

    /// Push a 2-cell term through the generator assignment.
    pub fn apply_two(&self, cell: &TwoCellTerm) -> Result<TwoCellTerm> {
        match cell {
            TwoCellTerm::Id(w) => Ok(TwoCellTerm::Id(self.apply_one(w)?)),
            TwoCellTerm::Gen(g) => self
                .gen2_map
                .get(g)
                .cloned()
                .ok_or_else(|| Error::UnknownGenerator(format!("{} (no image under {})", g, self.name))),
            TwoCellTerm::VComp(a, b) => {
                Ok(TwoCellTerm::vcomp(self.apply_two(a)?, self.apply_two(b)?))
            }
            TwoCellTerm::HComp(a, b) => {
                Ok(TwoCellTerm::hcomp(self.apply_two(a)?, self.apply_two(b)?))
            }
            TwoCellTerm::Juxtapose(a, b) => {
                Ok(TwoCellTerm::juxt(self.apply_two(a)?, self.apply_two(b)?))
            }
            TwoCellTerm::Inverse(a) => Ok(TwoCellTerm::inverse(self.apply_two(a)?)),
        }
    }

    /// Full validation report.  One line per generator and per relation;
    /// 2-cell relation checks fall back to the oracle when the structural
    /// decision is open.
    pub fn validate(&self, oracle: Option<TwoCellOracle>) -> Result<Report> {
        let mut report = Report::new();
        let prefix = format!("morphism.{}", self.name);

        for g in &self.source.one_cell_gens {
            let id = format!("{prefix}.gen1.{}", g.name);
            match self.gen1_map.get(&g.name) {
                None => report.fail(id, "no image assigned"),
                Some(image) => match self.target.typecheck_one(image) {
                    Err(e) => report.fail(id, format!("image ill-typed: {e}")),
                    Ok((s, t)) if (s, t) != (g.source, g.target) => report.fail(
                        id,
                        format!("arity changed: {}->{} became {s}->{t}", g.source, g.target),
                    ),
                    Ok(_) => report.pass(id, "arity preserved"),
                },
            }
        }

        for g in &self.source.two_cell_gens {
            let id = format!("{prefix}.gen2.{}", g.name);
            let image = match self.gen2_map.get(&g.name) {
                None => {
                    report.fail(id, "no image assigned");
                    continue;
                }
                Some(image) => image,
            };
            let (src, tgt) = match self.target.typecheck_two(image) {
                Err(e) => {
                    report.fail(id, format!("image ill-typed: {e}"));
                    continue;
                }
                Ok(b) => b,
            };
            let want_src = self.apply_one(&g.source)?;
            let want_tgt = self.apply_one(&g.target)?;
            let s_ok = self.target.one_eq(&src, &want_src)?;
            let t_ok = self.target.one_eq(&tgt, &want_tgt)?;
            if s_ok == Verdict::Distinct || t_ok == Verdict::Distinct {
                report.fail(id, "image boundary differs from mapped boundary");
                continue;
            }
            if g.invertible && !self.target.is_invertible_pasting(image) {
                report.fail(id, "invertible generator mapped to non-invertible pasting");
                continue;
            }
            if s_ok == Verdict::Equal && t_ok == Verdict::Equal {
                report.pass(id, "boundary preserved");
            } else {
                report.undecided(id, "boundary comparison undecided");
            }
        }

        for (i, (lhs, rhs)) in self.source.one_cell_relations.iter().enumerate() {
            let id = format!("{prefix}.rel1.{i}");
            match self.check_rel1(lhs, rhs) {
                Err(e) => report.error(id, format!("{e}")),
                Ok((Verdict::Equal, _)) => report.pass(id, "relation preserved"),
                Ok((Verdict::Distinct, detail)) => report.fail(id, detail),
                Ok((Verdict::Undecided, _)) => report.undecided(id, "image equality undecided"),
            }
        }

        for (i, (lhs, rhs)) in self.source.two_cell_relations.iter().enumerate() {
            let id = format!("{prefix}.rel2.{i}");
            match self.check_rel2(lhs, rhs, oracle) {
                Err(e) => report.error(id, format!("{e}")),
                Ok(Verdict::Equal) => report.pass(id, "relation preserved"),
                Ok(Verdict::Distinct) => report.fail(id, "images are distinct 2-cells"),
                Ok(Verdict::Undecided) => report.undecided(id, "image equality undecided"),
            }
        }

        Ok(report)
    }

    fn check_rel1(&self, lhs: &OneCellTerm, rhs: &OneCellTerm) -> Result<(Verdict, String)> {
        let a = self.apply_one(lhs)?;
        let b = self.apply_one(rhs)?;
        let verdict = self.target.one_eq(&a, &b)?;
        let detail = if verdict == Verdict::Distinct {
            format!(
                "images differ: {} vs {}",
                self.target.normalize_one(&a)?,
                self.target.normalize_one(&b)?
            )
        } else {
            String::new()
        };
        Ok((verdict, detail))
    }

    fn check_rel2(
        &self,
        lhs: &TwoCellTerm,
        rhs: &TwoCellTerm,
        oracle: Option<TwoCellOracle>,
    ) -> Result<Verdict> {
        let a = self.apply_two(lhs)?;
        let b = self.apply_two(rhs)?;
        let verdict = self.target.two_eq_structural(&a, &b)?;
        if verdict == Verdict::Undecided {
            if let Some(f) = oracle {
                return f(&self.target, &a, &b);
            }
        }
        Ok(verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finsk::FinMap;
    use crate::presentation::theory::{Dimension, Gen1, NormalizerKind};
    use crate::report::Status;

    fn semigroup() -> TheoryPresentation {
        let mut t = TheoryPresentation::new("semigroup", Dimension::One);
        t.one_cell_gens.push(Gen1 { name: "m".into(), source: 2, target: 1 });
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
        t.one_cell_relations.push((left, right));
        t.normalizer = NormalizerKind::StrictAssoc;
        t
    }

    #[test]
    fn identity_on_semigroup_passes() {
        let t = semigroup();
        let mut m = TheoryMorphismPresentation::new("id", t.clone(), t);
        m.map1("m", OneCellTerm::gen("m"));
        let report = m.validate(None).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn opposite_map_preserves_associativity() {
        let t = semigroup();
        let mut m = TheoryMorphismPresentation::new("op", t.clone(), t);
        let swap = OneCellTerm::base(FinMap::new(2, vec![1, 0]).unwrap());
        m.map1("m", OneCellTerm::compose(OneCellTerm::gen("m"), swap));
        let report = m.validate(None).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn arity_change_is_reported() {
        let t = semigroup();
        let mut m = TheoryMorphismPresentation::new("broken", t.clone(), t);
        m.map1("m", OneCellTerm::identity(1));
        let report = m.validate(None).unwrap();
        assert_eq!(report.status_of("morphism.broken.gen1.m"), Some(Status::Fail));
    }

    #[test]
    fn projection_kills_associativity_witness() {
        let t = semigroup();
        let mut m = TheoryMorphismPresentation::new("fst", t.clone(), t);
        let fst = OneCellTerm::base(FinMap::new(2, vec![0]).unwrap());
        m.map1("m", fst);
        let report = m.validate(None).unwrap();
        assert_eq!(report.status_of("morphism.fst.rel1.0"), Some(Status::Pass));
    }
}
