//! Theory presentations as text.
//!
//! ```text
//! (theory NAME
//!   (gen1 NAME SRC TGT)
//!   (gen2 NAME TERM TERM [iso])
//!   (rel1 TERM TERM)
//!   (rel2 TERM TERM)
//!   (normalizer syntactic|strict-assoc)
//!   (dim 1|2)
//!   (coherent)
//!   (meta "KEY" "VALUE"))
//! ```
//!
//! 1-cell terms: `(base (TGT entries...))` for a reindexing, `(gen NAME)`,
//! `(o OUTER INNER)` for composition, `(+ LEFT RIGHT)` for juxtaposition.
//! 2-cell terms: `(id TERM)`, `(gen NAME)`, `(v SECOND FIRST)`,
//! `(h OUTER INNER)`, `(+ LEFT RIGHT)`, `(inv TERM)`.
//!
//! Clauses may appear in any order; the printer emits them in the order
//! above.  `(dim ...)` defaults to 2 exactly when 2-cell clauses are
//! present, `(normalizer ...)` to `syntactic`.

use super::sexpr::{self, SExpr};
use crate::error::{Error, Result};
use crate::finsk::FinMap;
use crate::presentation::{
    Dimension, Gen1, Gen2, NormalizerKind, OneCellTerm, TheoryPresentation, TwoCellTerm,
};

pub fn one_term_to_sexpr(term: &OneCellTerm) -> SExpr {
    match term {
        OneCellTerm::Base(map) => {
            let mut entries = vec![SExpr::nat(map.target)];
            entries.extend(map.table.iter().map(|&v| SExpr::nat(v)));
            SExpr::list(vec![SExpr::sym("base"), SExpr::list(entries)])
        }
        OneCellTerm::Gen(name) => SExpr::list(vec![SExpr::sym("gen"), SExpr::sym(name.clone())]),
        OneCellTerm::Compose(outer, inner) => SExpr::list(vec![
            SExpr::sym("o"),
            one_term_to_sexpr(outer),
            one_term_to_sexpr(inner),
        ]),
        OneCellTerm::Juxtapose(left, right) => SExpr::list(vec![
            SExpr::sym("+"),
            one_term_to_sexpr(left),
            one_term_to_sexpr(right),
        ]),
    }
}

pub fn two_term_to_sexpr(term: &TwoCellTerm) -> SExpr {
    match term {
        TwoCellTerm::Id(t) => SExpr::list(vec![SExpr::sym("id"), one_term_to_sexpr(t)]),
        TwoCellTerm::Gen(name) => SExpr::list(vec![SExpr::sym("gen"), SExpr::sym(name.clone())]),
        TwoCellTerm::VComp(second, first) => SExpr::list(vec![
            SExpr::sym("v"),
            two_term_to_sexpr(second),
            two_term_to_sexpr(first),
        ]),
        TwoCellTerm::HComp(outer, inner) => SExpr::list(vec![
            SExpr::sym("h"),
            two_term_to_sexpr(outer),
            two_term_to_sexpr(inner),
        ]),
        TwoCellTerm::Juxtapose(left, right) => SExpr::list(vec![
            SExpr::sym("+"),
            two_term_to_sexpr(left),
            two_term_to_sexpr(right),
        ]),
        TwoCellTerm::Inverse(inner) => {
            SExpr::list(vec![SExpr::sym("inv"), two_term_to_sexpr(inner)])
        }
    }
}

pub fn one_term_from_sexpr(expr: &SExpr) -> Result<OneCellTerm> {
    match expr.head()? {
        "base" => {
            let entries = expr.args(1)?[0].as_list()?;
            let target = entries
                .first()
                .ok_or_else(|| expr.err("(base ...) needs (TARGET entries...)"))?
                .as_nat()?;
            let table = entries[1..].iter().map(|e| e.as_nat()).collect::<Result<Vec<_>>>()?;
            let map = FinMap::new(target, table).map_err(|e| expr.err(e.to_string()))?;
            Ok(OneCellTerm::Base(map))
        }
        "gen" => Ok(OneCellTerm::Gen(expr.args(1)?[0].as_name()?.to_string())),
        "o" => {
            let args = expr.args(2)?;
            Ok(OneCellTerm::Compose(
                Box::new(one_term_from_sexpr(&args[0])?),
                Box::new(one_term_from_sexpr(&args[1])?),
            ))
        }
        "+" => {
            let args = expr.args(2)?;
            Ok(OneCellTerm::Juxtapose(
                Box::new(one_term_from_sexpr(&args[0])?),
                Box::new(one_term_from_sexpr(&args[1])?),
            ))
        }
        other => Err(expr.err(format!("unknown 1-cell term head {other}"))),
    }
}

pub fn two_term_from_sexpr(expr: &SExpr) -> Result<TwoCellTerm> {
    match expr.head()? {
        "id" => Ok(TwoCellTerm::Id(one_term_from_sexpr(&expr.args(1)?[0])?)),
        "gen" => Ok(TwoCellTerm::Gen(expr.args(1)?[0].as_name()?.to_string())),
        "v" => {
            let args = expr.args(2)?;
            Ok(TwoCellTerm::VComp(
                Box::new(two_term_from_sexpr(&args[0])?),
                Box::new(two_term_from_sexpr(&args[1])?),
            ))
        }
        "h" => {
            let args = expr.args(2)?;
            Ok(TwoCellTerm::HComp(
                Box::new(two_term_from_sexpr(&args[0])?),
                Box::new(two_term_from_sexpr(&args[1])?),
            ))
        }
        "+" => {
            let args = expr.args(2)?;
            Ok(TwoCellTerm::Juxtapose(
                Box::new(two_term_from_sexpr(&args[0])?),
                Box::new(two_term_from_sexpr(&args[1])?),
            ))
        }
        "inv" => Ok(TwoCellTerm::Inverse(Box::new(two_term_from_sexpr(&expr.args(1)?[0])?))),
        other => Err(expr.err(format!("unknown 2-cell term head {other}"))),
    }
}

pub fn theory_to_sexpr(theory: &TheoryPresentation) -> SExpr {
    let mut items = vec![SExpr::sym("theory"), SExpr::sym(theory.name.clone())];
    for g in &theory.one_cell_gens {
        items.push(SExpr::list(vec![
            SExpr::sym("gen1"),
            SExpr::sym(g.name.clone()),
            SExpr::nat(g.source),
            SExpr::nat(g.target),
        ]));
    }
    for g in &theory.two_cell_gens {
        let mut clause = vec![
            SExpr::sym("gen2"),
            SExpr::sym(g.name.clone()),
            one_term_to_sexpr(&g.source),
            one_term_to_sexpr(&g.target),
        ];
        if g.invertible {
            clause.push(SExpr::sym("iso"));
        }
        items.push(SExpr::list(clause));
    }
    for (lhs, rhs) in &theory.one_cell_relations {
        items.push(SExpr::list(vec![
            SExpr::sym("rel1"),
            one_term_to_sexpr(lhs),
            one_term_to_sexpr(rhs),
        ]));
    }
    for (lhs, rhs) in &theory.two_cell_relations {
        items.push(SExpr::list(vec![
            SExpr::sym("rel2"),
            two_term_to_sexpr(lhs),
            two_term_to_sexpr(rhs),
        ]));
    }
    let normalizer = match theory.normalizer {
        NormalizerKind::Syntactic => "syntactic",
        NormalizerKind::StrictAssoc => "strict-assoc",
    };
    items.push(SExpr::list(vec![SExpr::sym("normalizer"), SExpr::sym(normalizer)]));
    let dim = match theory.dimension {
        Dimension::One => 1,
        Dimension::Two => 2,
    };
    items.push(SExpr::list(vec![SExpr::sym("dim"), SExpr::nat(dim)]));
    if theory.coherent {
        items.push(SExpr::list(vec![SExpr::sym("coherent")]));
    }
    for (key, value) in &theory.metadata {
        items.push(SExpr::list(vec![
            SExpr::sym("meta"),
            SExpr::str(key.clone()),
            SExpr::str(value.clone()),
        ]));
    }
    SExpr::list(items)
}

pub fn print_theory(theory: &TheoryPresentation) -> String {
    sexpr::print_clauses(&theory_to_sexpr(theory))
}

/// Keeps positioned errors as they are and pins everything else (arity
/// mismatches, unknown generators) to the clause being processed.
fn pin<T>(clause: &SExpr, result: Result<T>) -> Result<T> {
    result.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => clause.err(other.to_string()),
    })
}

pub fn theory_from_sexpr(root: &SExpr) -> Result<TheoryPresentation> {
    if root.head()? != "theory" {
        return Err(root.err("expected a (theory ...) form"));
    }
    let tail = root.tail()?;
    let name = tail
        .first()
        .ok_or_else(|| root.err("(theory ...) needs a name"))?
        .as_name()?
        .to_string();
    let clauses = &tail[1..];

    let mut by_kind: Vec<(&str, &SExpr)> = Vec::new();
    for clause in clauses {
        let head = clause.head()?;
        match head {
            "gen1" | "gen2" | "rel1" | "rel2" | "normalizer" | "dim" | "coherent" | "meta" => {
                by_kind.push((head, clause))
            }
            other => return Err(clause.err(format!("unknown clause ({other} ...)"))),
        }
    }

    let has_two_cells = by_kind.iter().any(|(k, _)| matches!(*k, "gen2" | "rel2"));
    let mut theory = TheoryPresentation::new(name, Dimension::One);
    theory.dimension = if has_two_cells { Dimension::Two } else { Dimension::One };

    for (kind, clause) in &by_kind {
        match *kind {
            "dim" => {
                theory.dimension = match clause.args(1)?[0].as_nat()? {
                    1 => Dimension::One,
                    2 => Dimension::Two,
                    n => return Err(clause.err(format!("dimension must be 1 or 2, found {n}"))),
                }
            }
            "normalizer" => {
                theory.normalizer = match clause.args(1)?[0].as_sym()? {
                    "syntactic" => NormalizerKind::Syntactic,
                    "strict-assoc" => NormalizerKind::StrictAssoc,
                    other => {
                        return Err(clause.err(format!(
                            "unknown normalizer {other}; expected syntactic or strict-assoc"
                        )))
                    }
                }
            }
            "coherent" => {
                clause.args(0)?;
                theory.coherent = true;
            }
            "meta" => {
                let args = clause.args(2)?;
                theory
                    .metadata
                    .insert(args[0].as_name()?.to_string(), args[1].as_name()?.to_string());
            }
            "gen1" => {
                let args = clause.args(3)?;
                theory.one_cell_gens.push(Gen1 {
                    name: args[0].as_name()?.to_string(),
                    source: args[1].as_nat()?,
                    target: args[2].as_nat()?,
                });
            }
            _ => {}
        }
    }

    for (kind, clause) in &by_kind {
        if *kind != "gen2" {
            continue;
        }
        let args = clause.tail()?;
        let invertible = match args.len() {
            3 => false,
            4 if args[3].as_sym().map(|s| s == "iso").unwrap_or(false) => true,
            _ => {
                return Err(clause.err("(gen2 ...) takes NAME SOURCE TARGET and an optional iso"))
            }
        };
        let gen = Gen2 {
            name: args[0].as_name()?.to_string(),
            source: one_term_from_sexpr(&args[1])?,
            target: one_term_from_sexpr(&args[2])?,
            invertible,
        };
        let src = pin(clause, theory.typecheck_one(&gen.source))?;
        let tgt = pin(clause, theory.typecheck_one(&gen.target))?;
        if src != tgt {
            return Err(clause.err(format!(
                "2-cell generator {} has non-parallel boundary: {:?} vs {:?}",
                gen.name, src, tgt
            )));
        }
        theory.two_cell_gens.push(gen);
    }

    for (kind, clause) in &by_kind {
        if *kind != "rel1" {
            continue;
        }
        let args = clause.args(2)?;
        let lhs = one_term_from_sexpr(&args[0])?;
        let rhs = one_term_from_sexpr(&args[1])?;
        let a = pin(clause, theory.typecheck_one(&lhs))?;
        let b = pin(clause, theory.typecheck_one(&rhs))?;
        if a != b {
            return Err(clause.err(format!("relation sides not parallel: {a:?} vs {b:?}")));
        }
        theory.one_cell_relations.push((lhs, rhs));
    }

    for (kind, clause) in &by_kind {
        if *kind != "rel2" {
            continue;
        }
        let args = clause.args(2)?;
        let lhs = two_term_from_sexpr(&args[0])?;
        let rhs = two_term_from_sexpr(&args[1])?;
        pin(clause, theory.typecheck_two(&lhs))?;
        pin(clause, theory.typecheck_two(&rhs))?;
        if !pin(clause, theory.boundaries_match(&lhs, &rhs))? {
            return Err(clause.err("relation sides not parallel"));
        }
        theory.two_cell_relations.push((lhs, rhs));
    }

    pin(root, theory.validate())?;
    Ok(theory)
}

/// Full pipeline from file text to a validated presentation.
pub fn parse_theory_file(text: &str) -> Result<TheoryPresentation> {
    theory_from_sexpr(&sexpr::parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::{all_theory_names, build_theory};

    #[test]
    fn a_single_generator_theory_parses() {
        let t = parse_theory_file("(theory Bin (gen1 tensor 2 1))").unwrap();
        assert_eq!(t.name, "Bin");
        assert_eq!(t.dimension, Dimension::One);
        assert_eq!(t.one_cell_gens.len(), 1);
        assert_eq!(t.one_cell_gens[0].source, 2);
        let lifted = parse_theory_file("(theory Bin (gen1 tensor 2 1) (dim 2))").unwrap();
        assert!(lifted.same_presentation(&build_theory("Bin".parse().unwrap())).unwrap());
    }

    #[test]
    fn every_shipped_theory_survives_the_round_trip() {
        for name in all_theory_names() {
            let theory = build_theory(name);
            let text = print_theory(&theory);
            let back = parse_theory_file(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
            assert_eq!(back.name, theory.name, "{name}");
            assert_eq!(back.metadata, theory.metadata, "{name}");
            assert!(back.same_presentation(&theory).unwrap(), "{name}:\n{text}");
            assert_eq!(print_theory(&back), text, "{name}");
        }
    }

    #[test]
    fn the_printed_text_is_a_fixed_point_of_parse_then_print() {
        let text = print_theory(&build_theory("sBraid".parse().unwrap()));
        let reparsed = parse_theory_file(&text).unwrap();
        assert_eq!(print_theory(&reparsed), text);
    }

    #[test]
    fn an_undeclared_generator_is_reported_with_its_clause_position() {
        let text = "(theory T\n  (gen1 u 2 1)\n  (rel1 (gen u) (gen v)))";
        match parse_theory_file(text).unwrap_err() {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (3, 3));
                assert!(msg.contains('v'), "{msg}");
            }
            other => panic!("expected a positioned error, got {other}"),
        }
    }

    #[test]
    fn an_arity_mismatch_is_reported_with_its_clause_position() {
        let text = "(theory T\n  (gen1 u 2 1)\n  (rel1 (o (gen u) (gen u)) (gen u)))";
        match parse_theory_file(text).unwrap_err() {
            Error::Parse { line, col, .. } => assert_eq!((line, col), (3, 3)),
            other => panic!("expected a positioned error, got {other}"),
        }
    }

    #[test]
    fn a_missing_relation_side_is_a_syntax_error_with_location() {
        let text = "(theory T\n  (gen1 u 2 1)\n  (rel1 (gen u)))";
        match parse_theory_file(text).unwrap_err() {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (3, 3));
                assert!(msg.contains("2 arguments"), "{msg}");
            }
            other => panic!("expected a positioned error, got {other}"),
        }
    }

    #[test]
    fn non_parallel_two_cell_boundaries_are_rejected() {
        let text = "(theory T\n  (gen1 u 2 1)\n  (gen2 bad (gen u) (base (1 0))))";
        let err = parse_theory_file(text).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }
}
