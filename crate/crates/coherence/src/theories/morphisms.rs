//! The arrows of the theory diagram: inclusions that add axioms or
//! structure, strictifications that collapse the coherence cells, and the
//! twist-killing projection onto the symmetric theories.
//!
//! Every arrow sends each 1-cell generator to the generator of the same
//! name.  A 2-cell generator goes to its namesake when the target declares
//! one, and to the identity 2-cell on its source boundary otherwise; that
//! single rule produces all of the diagram's arrows.

use crate::error::{Error, Result};
use crate::presentation::{TheoryMorphismPresentation, TwoCellTerm};

use super::{build_theory, TheoryName};

use TheoryName::*;

/// Generating arrows of the diagram; composites are derived.
pub fn standard_morphism_names() -> Vec<(TheoryName, TheoryName)> {
    vec![
        (Assoc, Mon),
        (Mon, Braid),
        (Comm, Braid),
        (Comm, SComm),
        (Braid, Sym),
        (Braid, Bal),
        (Bal, Sym),
        (Mon, SMon),
        (Braid, SBraid),
        (Sym, SSym),
        (Bal, SBal),
        (SMon, SBraid),
        (SComm, SBraid),
        (SBraid, SSym),
        (SBraid, SBal),
        (SBal, SSym),
    ]
}

fn evident_arrow(src: TheoryName, dst: TheoryName) -> TheoryMorphismPresentation {
    let source = build_theory(src);
    let target = build_theory(dst);
    let mut m = TheoryMorphismPresentation::new(format!("{src}->{dst}"), source, target);
    for g in m.source.one_cell_gens.clone() {
        m.map1(&g.name, crate::presentation::OneCellTerm::gen(&g.name));
    }
    for g in m.source.two_cell_gens.clone() {
        let image = if m.target.gen2(&g.name).is_some() {
            TwoCellTerm::gen(&g.name)
        } else {
            TwoCellTerm::Id(g.source.clone())
        };
        m.map2(&g.name, image);
    }
    m
}

fn compose_arrows(
    second: &TheoryMorphismPresentation,
    first: &TheoryMorphismPresentation,
) -> Result<TheoryMorphismPresentation> {
    let mut m = TheoryMorphismPresentation::new(
        format!("{}.{}", first.name, second.name),
        first.source.clone(),
        second.target.clone(),
    );
    for (g, image) in &first.gen1_map {
        m.gen1_map.insert(g.clone(), second.apply_one(image)?);
    }
    for (g, image) in &first.gen2_map {
        m.gen2_map.insert(g.clone(), second.apply_two(image)?);
    }
    Ok(m)
}

/// The diagram arrow from `src` to `dst`, following generating arrows;
/// errors when no path exists.
pub fn standard_morphism(src: TheoryName, dst: TheoryName) -> Result<TheoryMorphismPresentation> {
    if src == dst {
        return Ok(evident_arrow(src, dst));
    }
    let edges = standard_morphism_names();
    // breadth-first search keeps composites short and deterministic
    let mut frontier: Vec<(TheoryName, Vec<(TheoryName, TheoryName)>)> = vec![(src, vec![])];
    let mut seen = vec![src];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (node, path) in frontier {
            for &(a, b) in &edges {
                if a != node || seen.contains(&b) {
                    continue;
                }
                let mut path = path.clone();
                path.push((a, b));
                if b == dst {
                    let mut arrow = evident_arrow(path[0].0, path[0].1);
                    for &(a2, b2) in &path[1..] {
                        arrow = compose_arrows(&evident_arrow(a2, b2), &arrow)?;
                    }
                    arrow.name = format!("{src}->{dst}");
                    return Ok(arrow);
                }
                seen.push(b);
                next.push((b, path));
            }
        }
        frontier = next;
    }
    Err(Error::invalid(format!("no standard arrow {src} -> {dst}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn generating_arrows_have_sound_generator_maps() {
        for (a, b) in standard_morphism_names() {
            let m = standard_morphism(a, b).unwrap();
            let report = m.validate(None).unwrap();
            for line in &report.lines {
                assert_ne!(
                    line.status,
                    Status::Fail,
                    "{} -> {}: {}",
                    a,
                    b,
                    line
                );
            }
        }
    }

    #[test]
    fn every_arrow_validates_with_the_free_model_fallback() {
        let oracle = crate::models::free_model_oracle;
        for (a, b) in standard_morphism_names() {
            let m = standard_morphism(a, b).unwrap();
            let report = m.validate(Some(&oracle)).unwrap();
            assert!(report.passed(), "{} -> {}:\n{report}", a, b);
            assert!(report.fully_decided(), "{} -> {}:\n{report}", a, b);
        }
    }

    #[test]
    fn strictification_decides_its_relations_syntactically() {
        let m = standard_morphism(TheoryName::Mon, TheoryName::SMon).unwrap();
        let report = m.validate(None).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.fully_decided(), "{report}");
    }

    #[test]
    fn composites_are_found() {
        let m = standard_morphism(TheoryName::Assoc, TheoryName::SSym).unwrap();
        assert_eq!(m.source.name, "Assoc");
        assert_eq!(m.target.name, "sSym");
        let report = m.validate(None).unwrap();
        for line in &report.lines {
            assert_ne!(line.status, Status::Fail, "{line}");
        }
    }

    #[test]
    fn twist_dies_in_the_symmetric_theory() {
        let m = standard_morphism(TheoryName::Bal, TheoryName::Sym).unwrap();
        assert!(m.gen2_map["twist"].is_identity_pasting());
        assert!(matches!(m.gen2_map["braid"], TwoCellTerm::Gen(_)));
    }

    #[test]
    fn missing_arrows_are_rejected() {
        assert!(standard_morphism(TheoryName::Sym, TheoryName::Mon).is_err());
        assert!(standard_morphism(TheoryName::Fin, TheoryName::Mon).is_err());
    }
}
