//! Finite categories and diagrams as text.
//!
//! ```text
//! (cat NAME
//!   (obj A)
//!   (mor f A B)
//!   (cmp g f gf))        ; g after f equals gf
//! ```
//!
//! Identities are implicit: every object gets `id.NAME`, and composites
//! with an identity factor fill themselves in.  All other composites must
//! be listed, or the loader rejects the table as incomplete.
//!
//! ```text
//! (diagram
//!   (index (cat ...))
//!   (value A (cat ...))          ; one per index object
//!   (functor f (obj p q) (mor m n))  ; one per non-identity index arrow
//!   (gamma (obj A) (mor f)))     ; designated sub-index, default: everything
//! ```
//!
//! Functor clauses map objects and non-identity morphisms of the source
//! value by name; identities follow along.  The designated sub-index closes
//! itself under identities and composition of what it names.

use std::collections::BTreeMap;

use super::sexpr::{self, SExpr};
use crate::colimit::instances::one_step_diagram;
use crate::colimit::{CategoryBuilder, FiniteCategory, FiniteFunctor, FiniteTwoCategory};
use crate::colimit::{GammaImage, TwoDiagram};
use crate::error::{Error, Result};

fn pin<T>(clause: &SExpr, result: Result<T>) -> Result<T> {
    result.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => clause.err(other.to_string()),
    })
}

pub fn category_from_sexpr(root: &SExpr) -> Result<FiniteCategory> {
    if root.head()? != "cat" {
        return Err(root.err("expected a (cat ...) form"));
    }
    let tail = root.tail()?;
    let name = tail.first().ok_or_else(|| root.err("(cat ...) needs a name"))?.as_name()?;
    let clauses = &tail[1..];

    let mut builder = CategoryBuilder::new(name);
    let mut objects: BTreeMap<String, usize> = BTreeMap::new();
    let mut morphisms: BTreeMap<String, usize> = BTreeMap::new();
    for clause in clauses {
        if clause.head()? != "obj" {
            continue;
        }
        let name = clause.args(1)?[0].as_name()?;
        if objects.contains_key(name) {
            return Err(clause.err(format!("object {name} declared twice")));
        }
        let id = builder.object(name);
        objects.insert(name.to_string(), id);
        morphisms.insert(format!("id.{name}"), builder.identity_of(id));
    }
    let obj = |clause: &SExpr, name: &str| -> Result<usize> {
        objects
            .get(name)
            .copied()
            .ok_or_else(|| clause.err(format!("unknown object {name}")))
    };
    for clause in clauses {
        if clause.head()? != "mor" {
            continue;
        }
        let args = clause.args(3)?;
        let name = args[0].as_name()?;
        if morphisms.contains_key(name) {
            return Err(clause.err(format!("morphism {name} declared twice")));
        }
        let source = obj(clause, args[1].as_name()?)?;
        let target = obj(clause, args[2].as_name()?)?;
        morphisms.insert(name.to_string(), builder.morphism(name, source, target));
    }
    for clause in clauses {
        let head = clause.head()?;
        if head == "obj" || head == "mor" {
            continue;
        }
        if head != "cmp" {
            return Err(clause.err(format!("unknown clause ({head} ...)")));
        }
        let args = clause.args(3)?;
        let mor = |e: &SExpr| -> Result<usize> {
            let name = e.as_name()?;
            morphisms
                .get(name)
                .copied()
                .ok_or_else(|| e.err(format!("unknown morphism {name}")))
        };
        builder.composite(mor(&args[0])?, mor(&args[1])?, mor(&args[2])?);
    }
    pin(root, builder.build())
}

pub fn category_to_sexpr(cat: &FiniteCategory) -> SExpr {
    let mut items = vec![SExpr::sym("cat"), SExpr::sym(cat.name.clone())];
    for o in 0..cat.object_count() {
        items.push(SExpr::list(vec![SExpr::sym("obj"), SExpr::sym(cat.object_name(o))]));
    }
    for m in 0..cat.morphism_count() {
        if cat.is_identity(m) {
            continue;
        }
        let mor = cat.morphism(m);
        items.push(SExpr::list(vec![
            SExpr::sym("mor"),
            SExpr::sym(mor.name.clone()),
            SExpr::sym(cat.object_name(mor.source)),
            SExpr::sym(cat.object_name(mor.target)),
        ]));
    }
    for g in 0..cat.morphism_count() {
        for f in 0..cat.morphism_count() {
            if cat.is_identity(g) || cat.is_identity(f) {
                continue;
            }
            if cat.morphism(f).target != cat.morphism(g).source {
                continue;
            }
            let gf = cat.compose(g, f).expect("total composition table");
            items.push(SExpr::list(vec![
                SExpr::sym("cmp"),
                SExpr::sym(cat.morphism(g).name.clone()),
                SExpr::sym(cat.morphism(f).name.clone()),
                SExpr::sym(cat.morphism(gf).name.clone()),
            ]));
        }
    }
    SExpr::list(items)
}

pub fn print_category(cat: &FiniteCategory) -> String {
    sexpr::print_clauses(&category_to_sexpr(cat))
}

fn functor_from_clause(
    clause: &SExpr,
    source: &FiniteCategory,
    target: &FiniteCategory,
) -> Result<FiniteFunctor> {
    let mut obj_map: BTreeMap<&str, &str> = BTreeMap::new();
    let mut mor_map: BTreeMap<&str, &str> = BTreeMap::new();
    for pair in &clause.tail()?[1..] {
        let args = pair.args(2)?;
        let (from, to) = (args[0].as_name()?, args[1].as_name()?);
        let taken = match pair.head()? {
            "obj" => obj_map.insert(from, to).is_some(),
            "mor" => mor_map.insert(from, to).is_some(),
            other => return Err(pair.err(format!("unknown clause ({other} ...)"))),
        };
        if taken {
            return Err(pair.err(format!("{from} mapped twice")));
        }
    }
    let mut obj = Vec::new();
    for o in 0..source.object_count() {
        let name = source.object_name(o).to_string();
        let image = obj_map
            .remove(name.as_str())
            .ok_or_else(|| clause.err(format!("object {name} has no image")))?;
        let landed = target
            .object_named(image)
            .ok_or_else(|| clause.err(format!("unknown object {image}")))?;
        obj.push(landed);
    }
    if let Some(extra) = obj_map.keys().next() {
        return Err(clause.err(format!("unknown object {extra}")));
    }
    let mut mor = Vec::new();
    for m in 0..source.morphism_count() {
        let name = &source.morphism(m).name;
        match mor_map.remove(name.as_str()) {
            Some(image) => mor.push(
                target
                    .morphism_named(image)
                    .ok_or_else(|| clause.err(format!("unknown morphism {image}")))?,
            ),
            None if source.is_identity(m) => {
                mor.push(target.identity(obj[source.morphism(m).source]))
            }
            None => return Err(clause.err(format!("morphism {name} has no image"))),
        }
    }
    if let Some(extra) = mor_map.keys().next() {
        return Err(clause.err(format!("unknown morphism {extra}")));
    }
    let f = FiniteFunctor { obj, mor };
    pin(clause, f.validate(source, target))?;
    Ok(f)
}

pub fn diagram_from_sexpr(root: &SExpr) -> Result<(TwoDiagram, GammaImage)> {
    if root.head()? != "diagram" {
        return Err(root.err("expected a (diagram ...) form"));
    }
    let mut index_clause = None;
    let mut value_clauses = Vec::new();
    let mut functor_clauses = Vec::new();
    let mut gamma_clause = None;
    for clause in root.tail()? {
        match clause.head()? {
            "index" if index_clause.is_none() => index_clause = Some(clause),
            "index" => return Err(clause.err("a second (index ...) clause")),
            "value" => value_clauses.push(clause),
            "functor" => functor_clauses.push(clause),
            "gamma" if gamma_clause.is_none() => gamma_clause = Some(clause),
            "gamma" => return Err(clause.err("a second (gamma ...) clause")),
            other => return Err(clause.err(format!("unknown clause ({other} ...)"))),
        }
    }
    let index_clause = index_clause.ok_or_else(|| root.err("missing (index ...) clause"))?;
    let index_cat = category_from_sexpr(&index_clause.args(1)?[0])?;

    let mut values: Vec<Option<FiniteCategory>> = vec![None; index_cat.object_count()];
    for clause in value_clauses {
        let args = clause.args(2)?;
        let name = args[0].as_name()?;
        let slot = index_cat
            .object_named(name)
            .ok_or_else(|| clause.err(format!("unknown index object {name}")))?;
        if values[slot].is_some() {
            return Err(clause.err(format!("value of {name} given twice")));
        }
        values[slot] = Some(category_from_sexpr(&args[1])?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(o, v)| {
            v.ok_or_else(|| {
                index_clause.err(format!("index object {} has no value", index_cat.object_name(o)))
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut by_name: BTreeMap<&str, &SExpr> = BTreeMap::new();
    for clause in &functor_clauses {
        let name = clause
            .tail()?
            .first()
            .ok_or_else(|| clause.err("(functor ...) needs a morphism name"))?
            .as_name()?;
        if by_name.insert(name, clause).is_some() {
            return Err(clause.err(format!("functor for {name} given twice")));
        }
    }
    let mut per_morphism = Vec::new();
    for m in 0..index_cat.morphism_count() {
        let mor = index_cat.morphism(m);
        let f = if index_cat.is_identity(m) {
            FiniteFunctor::identity(&values[mor.source])
        } else {
            let clause = by_name.remove(mor.name.as_str()).ok_or_else(|| {
                root.err(format!("no (functor {} ...) clause for the index arrow", mor.name))
            })?;
            functor_from_clause(clause, &values[mor.source], &values[mor.target])?
        };
        per_morphism.push(f);
    }
    if let Some(extra) = by_name.keys().next() {
        return Err(root.err(format!("functor clause for unknown index arrow {extra}")));
    }

    let index = pin(index_clause, FiniteTwoCategory::from_category(&index_cat))?;
    let mut table = BTreeMap::new();
    for i in 0..index_cat.object_count() {
        for j in 0..index_cat.object_count() {
            let fs = index_cat.hom(i, j).iter().map(|&m| per_morphism[m].clone()).collect();
            table.insert((i, j), fs);
        }
    }
    let diagram = pin(root, one_step_diagram(index, values, table))?;

    let gamma = match gamma_clause {
        None => GammaImage::full(&diagram.index),
        Some(clause) => {
            let mut gamma = GammaImage::empty();
            for item in clause.tail()? {
                let args = item.args(1)?;
                let name = args[0].as_name()?;
                match item.head()? {
                    "obj" => {
                        let o = index_cat
                            .object_named(name)
                            .ok_or_else(|| item.err(format!("unknown index object {name}")))?;
                        gamma.objects.insert(o);
                    }
                    "mor" => {
                        let m = index_cat
                            .morphism_named(name)
                            .ok_or_else(|| item.err(format!("unknown index arrow {name}")))?;
                        let mor = index_cat.morphism(m);
                        gamma.objects.insert(mor.source);
                        gamma.objects.insert(mor.target);
                        let pos = index_cat
                            .hom(mor.source, mor.target)
                            .iter()
                            .position(|&x| x == m)
                            .expect("hom lists every parallel morphism");
                        gamma.one_cells.insert((mor.source, mor.target, pos));
                    }
                    other => return Err(item.err(format!("unknown clause ({other} ...)"))),
                }
            }
            let designated: Vec<usize> = gamma.objects.iter().copied().collect();
            for o in designated {
                gamma.one_cells.insert((o, o, diagram.index.identity_cell(o)));
            }
            loop {
                let cells: Vec<_> = gamma.one_cells.iter().copied().collect();
                let before = gamma.one_cells.len();
                for &(i, j, f) in &cells {
                    for &(j2, k, g) in &cells {
                        if j == j2 {
                            gamma.one_cells.insert((i, k, diagram.index.hcomp_cell(i, j, k, g, f)));
                        }
                    }
                }
                if gamma.one_cells.len() == before {
                    break;
                }
            }
            pin(clause, gamma.validate(&diagram.index))?;
            gamma
        }
    };
    Ok((diagram, gamma))
}

/// Full pipeline from file text to a diagram with its designated sub-index.
pub fn parse_diagram_file(text: &str) -> Result<(TwoDiagram, GammaImage)> {
    diagram_from_sexpr(&sexpr::parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colimit::instances::{chain_three, walking_arrow};
    use crate::colimit::qcolim;

    #[test]
    fn a_printed_category_reads_back_identically() {
        for cat in [walking_arrow(), chain_three()] {
            let text = print_category(&cat);
            let back = category_from_sexpr(&sexpr::parse(&text).unwrap()).unwrap();
            assert_eq!(back, cat, "{text}");
            assert_eq!(print_category(&back), text);
        }
    }

    #[test]
    fn an_incomplete_composition_table_is_rejected_with_location() {
        let text = "(cat C\n  (obj a) (obj b) (obj c)\n  (mor f a b)\n  (mor g b c))";
        let err = category_from_sexpr(&sexpr::parse(text).unwrap()).unwrap_err();
        match err {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (1, 1));
                assert!(msg.contains("missing composite"), "{msg}");
            }
            other => panic!("expected a positioned error, got {other}"),
        }
    }

    #[test]
    fn a_collapse_diagram_loads_and_computes() {
        let text = "(diagram
  (index (cat I (obj a) (obj b) (mor f a b)))
  (value a (cat A (obj p) (obj q) (mor m p q)))
  (value b (cat B (obj x)))
  (functor f (obj p x) (obj q x) (mor m id.x)))";
        let (diagram, gamma) = parse_diagram_file(text).unwrap();
        assert_eq!(gamma, GammaImage::full(&diagram.index));
        let q = qcolim(&diagram, &gamma).unwrap();
        assert_eq!(q.category.object_count(), 1);
    }

    #[test]
    fn a_partial_gamma_closes_under_composition() {
        let text = "(diagram
  (index (cat I (obj x) (obj y) (obj z) (mor f x y) (mor g y z) (mor h x z) (cmp g f h)))
  (value x (cat X (obj p)))
  (value y (cat Y (obj p)))
  (value z (cat Z (obj p)))
  (functor f (obj p p))
  (functor g (obj p p))
  (functor h (obj p p))
  (gamma (mor f) (mor g)))";
        let (diagram, gamma) = parse_diagram_file(text).unwrap();
        let m = diagram.index.hom(0, 2);
        assert_eq!(m.object_count(), 1);
        assert!(gamma.one_cells.contains(&(0, 2, 0)));
        assert_eq!(gamma.objects.len(), 3);
    }

    #[test]
    fn a_missing_value_or_functor_is_reported() {
        let text = "(diagram (index (cat I (obj a))))";
        let err = parse_diagram_file(text).unwrap_err();
        assert!(err.to_string().contains("has no value"), "{err}");
        let text = "(diagram
  (index (cat I (obj a) (obj b) (mor f a b)))
  (value a (cat A (obj p)))
  (value b (cat B (obj x))))";
        let err = parse_diagram_file(text).unwrap_err();
        assert!(err.to_string().contains("no (functor f"), "{err}");
    }
}
