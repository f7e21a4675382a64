//! Named pasting equalities for use as model-check probes.
//!
//! None of these equations is an axiom of the presentation it is checked
//! against; each one either follows from the ambient structure or visibly
//! fails in a model, and both outcomes are worth pinning down by name.  An
//! entry is instantiated against a concrete presentation by vocabulary
//! search, so the same name works over a catalog theory (`sBraid`, `Bal`,
//! `Braid`) and over a glued product whose generators carry prefixes.
//!
//! A braiding is found as a 2-cell generator with short name `braid`; when
//! there is none, it is assembled from a binary-by-binary interchange cell
//! and the shared unit, the same composite [`derived_braiding`] builds.
//!
//! [`derived_braiding`]: crate::kronecker::derived_braiding

use crate::error::{Error, Result};
use crate::finsk::FinMap;
use crate::kronecker::{braiding_from_parts, ConsequenceEq};
use crate::presentation::{NormalizerKind, OneCellTerm, OpTree, TheoryPresentation, TwoCellTerm};

/// Stable entry names, sorted.
pub const CATALOG_NAMES: [&str; 9] = [
    "balance-eq",
    "braiding-hexagon-left",
    "braiding-hexagon-right",
    "dodeca-hexagon-left",
    "dodeca-hexagon-right",
    "dodeca-naturality-left",
    "dodeca-naturality-right",
    "symmetry-square",
    "twist-naturality-eq",
];

fn id1() -> OneCellTerm {
    OneCellTerm::identity(1)
}

fn sw2() -> OneCellTerm {
    OneCellTerm::base(FinMap::new(2, vec![1, 0]).expect("transposition on two points"))
}

fn perm3(table: [usize; 3]) -> OneCellTerm {
    OneCellTerm::base(FinMap::new(3, table.to_vec()).expect("permutation on three points"))
}

fn short(name: &str) -> &str {
    name.rsplit('.').next().unwrap_or(name)
}

/// Find a 2-cell generator by its unprefixed name, skipping interchange
/// cells so a product's `delta:...` generators never shadow arm vocabulary.
fn find_cell<'a>(theory: &'a TheoryPresentation, want: &str) -> Option<&'a crate::presentation::Gen2> {
    theory
        .two_cell_gens
        .iter()
        .find(|g| !g.name.starts_with("delta:") && short(&g.name) == want)
}

/// The generator applied at the root of a term's single-output normal form.
fn root_gen(theory: &TheoryPresentation, term: &OneCellTerm) -> Result<OneCellTerm> {
    let nf = theory.normalize_one(term)?;
    match nf.outputs.as_slice() {
        [OpTree::App { gen, .. }] => Ok(OneCellTerm::gen(gen.clone())),
        _ => Err(Error::Unsupported(format!(
            "expected a single generator application, found {nf}"
        ))),
    }
}

struct BraidedVocab {
    gamma: TwoCellTerm,
    tensor: OneCellTerm,
}

fn braiding(theory: &TheoryPresentation) -> Result<BraidedVocab> {
    if let Some(g) = find_cell(theory, "braid") {
        return Ok(BraidedVocab {
            gamma: TwoCellTerm::gen(g.name.clone()),
            tensor: root_gen(theory, &g.source)?,
        });
    }
    let mut quads = theory.two_cell_gens.iter().filter(|g| {
        g.name.starts_with("delta:")
            && theory.typecheck_one(&g.source).map(|a| a == (4, 1)).unwrap_or(false)
    });
    let delta = quads.next().ok_or_else(|| {
        Error::Unsupported(
            "no braiding in scope: need a braid cell or a binary interchange cell".into(),
        )
    })?;
    if quads.next().is_some() {
        return Err(Error::Unsupported(
            "several binary interchange cells make the braiding ambiguous".into(),
        ));
    }
    if !delta.invertible {
        return Err(Error::Unsupported(
            "the interchange cell is not invertible, so no braiding arises".into(),
        ));
    }
    let unit = theory
        .one_cell_gens
        .iter()
        .find(|g| g.name.starts_with("base.") && g.source == 0 && g.target == 1)
        .ok_or_else(|| {
            Error::Unsupported("no shared unit to plug into the interchange cell".into())
        })?;
    let gamma = braiding_from_parts(
        TwoCellTerm::gen(delta.name.clone()),
        OneCellTerm::gen(unit.name.clone()),
    );
    let (src, _) = theory.typecheck_two(&gamma)?;
    Ok(BraidedVocab { gamma, tensor: root_gen(theory, &src)? })
}

fn twist_of(theory: &TheoryPresentation) -> Result<TwoCellTerm> {
    find_cell(theory, "twist")
        .map(|g| TwoCellTerm::gen(g.name.clone()))
        .ok_or_else(|| Error::Unsupported("no twist cell in scope".into()))
}

fn assoc_of(theory: &TheoryPresentation) -> Result<TwoCellTerm> {
    find_cell(theory, "assoc")
        .map(|g| TwoCellTerm::gen(g.name.clone()))
        .ok_or_else(|| Error::Unsupported("no reassociation cell in scope".into()))
}

fn require_strict(theory: &TheoryPresentation, name: &str) -> Result<()> {
    if theory.normalizer != NormalizerKind::StrictAssoc {
        return Err(Error::Unsupported(format!(
            "{name} needs strictly associative tensoring; the dodeca entries carry the weak form"
        )));
    }
    Ok(())
}

fn entry(name: &str, lhs: TwoCellTerm, rhs: TwoCellTerm) -> ConsequenceEq {
    ConsequenceEq { name: name.into(), lhs, rhs, sizes: Vec::new() }
}

/// Build one named equation against the vocabulary of `theory`.
pub fn catalog_entry(theory: &TheoryPresentation, name: &str) -> Result<ConsequenceEq> {
    match name {
        // Braiding twice, the second instance on swapped inputs, against the
        // identity.  Separates the symmetric models from the braided ones.
        "symmetry-square" => {
            let BraidedVocab { gamma, tensor } = braiding(theory)?;
            Ok(entry(
                name,
                TwoCellTerm::vcomp(gamma.clone().after(sw2()), gamma),
                TwoCellTerm::Id(tensor),
            ))
        }
        // Braiding a tensored pair past a third object, in one move or one
        // factor at a time.
        "braiding-hexagon-left" => {
            require_strict(theory, name)?;
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let lhs = gamma.clone().after(OneCellTerm::juxt(u.clone(), id1()));
            let rhs = TwoCellTerm::vcomp(
                TwoCellTerm::juxt(gamma.clone(), TwoCellTerm::Id(id1()))
                    .before(u.clone())
                    .after(perm3([0, 2, 1])),
                TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma).before(u),
            );
            Ok(entry(name, lhs, rhs))
        }
        // The mirror: braiding one object past a tensored pair.
        "braiding-hexagon-right" => {
            require_strict(theory, name)?;
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let lhs = gamma.clone().after(OneCellTerm::juxt(id1(), u.clone()));
            let rhs = TwoCellTerm::vcomp(
                TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma.clone())
                    .before(u.clone())
                    .after(perm3([1, 0, 2])),
                TwoCellTerm::juxt(gamma, TwoCellTerm::Id(id1())).before(u),
            );
            Ok(entry(name, lhs, rhs))
        }
        // Twisting a tensor against twisting the parts and braiding both
        // ways.
        "balance-eq" => {
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let theta = twist_of(theory)?;
            let lhs = theta.clone().after(u.clone());
            let rhs = TwoCellTerm::vcomp_all(vec![
                TwoCellTerm::juxt(theta.clone(), theta).before(u),
                gamma.clone(),
                gamma.after(sw2()),
            ]);
            Ok(entry(name, lhs, rhs))
        }
        // Braiding after twisting the parts against twisting the tensor
        // after braiding.  Holds when the twist is natural for the braiding;
        // the ribbon model refuses it.
        "twist-naturality-eq" => {
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let theta = twist_of(theory)?;
            let lhs = TwoCellTerm::vcomp(
                gamma.clone(),
                TwoCellTerm::juxt(theta.clone(), theta.clone()).before(u.clone()),
            );
            let rhs = TwoCellTerm::vcomp(
                theta.after(OneCellTerm::compose(u, sw2())),
                gamma,
            );
            Ok(entry(name, lhs, rhs))
        }
        // The two hexagonal faces, with reassociation cells mediating every
        // rebracketing.
        "dodeca-hexagon-left" => {
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let alpha = assoc_of(theory)?;
            let lhs = TwoCellTerm::vcomp_all(vec![
                alpha.clone(),
                gamma.clone().after(OneCellTerm::juxt(id1(), u.clone())),
                alpha.clone().after(perm3([1, 2, 0])),
            ]);
            let rhs = TwoCellTerm::vcomp_all(vec![
                TwoCellTerm::juxt(gamma.clone(), TwoCellTerm::Id(id1())).before(u.clone()),
                alpha.after(perm3([1, 0, 2])),
                TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma)
                    .before(u)
                    .after(perm3([1, 0, 2])),
            ]);
            Ok(entry(name, lhs, rhs))
        }
        "dodeca-hexagon-right" => {
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let alpha = assoc_of(theory)?;
            let lhs = TwoCellTerm::vcomp_all(vec![
                TwoCellTerm::inverse(alpha.clone()),
                gamma.clone().after(OneCellTerm::juxt(u.clone(), id1())),
                TwoCellTerm::inverse(alpha.clone()).after(perm3([2, 0, 1])),
            ]);
            let rhs = TwoCellTerm::vcomp_all(vec![
                TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma.clone()).before(u.clone()),
                TwoCellTerm::inverse(alpha).after(perm3([0, 2, 1])),
                TwoCellTerm::juxt(gamma, TwoCellTerm::Id(id1()))
                    .before(u)
                    .after(perm3([0, 2, 1])),
            ]);
            Ok(entry(name, lhs, rhs))
        }
        // The rectangular faces: the block braiding is natural in each of
        // its two arguments.  No reassociation cell is needed, since both
        // routes stay in matching bracketings.
        "dodeca-naturality-left" => {
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let swapped = OneCellTerm::compose(u.clone(), sw2());
            let lhs = TwoCellTerm::vcomp(
                gamma.clone().after(OneCellTerm::juxt(swapped, id1())),
                TwoCellTerm::juxt(gamma.clone(), TwoCellTerm::Id(id1())).before(u.clone()),
            );
            let rhs = TwoCellTerm::vcomp(
                TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma.clone())
                    .before(u.clone())
                    .after(perm3([2, 0, 1])),
                gamma.after(OneCellTerm::juxt(u, id1())),
            );
            Ok(entry(name, lhs, rhs))
        }
        "dodeca-naturality-right" => {
            let BraidedVocab { gamma, tensor: u } = braiding(theory)?;
            let swapped = OneCellTerm::compose(u.clone(), sw2());
            let lhs = TwoCellTerm::vcomp(
                gamma.clone().after(OneCellTerm::juxt(id1(), swapped)),
                TwoCellTerm::juxt(TwoCellTerm::Id(id1()), gamma.clone()).before(u.clone()),
            );
            let rhs = TwoCellTerm::vcomp(
                TwoCellTerm::juxt(gamma.clone(), TwoCellTerm::Id(id1()))
                    .before(u.clone())
                    .after(perm3([1, 2, 0])),
                gamma.after(OneCellTerm::juxt(id1(), u)),
            );
            Ok(entry(name, lhs, rhs))
        }
        _ => Err(Error::Invalid(format!(
            "unknown catalog entry `{name}`; known: {}",
            CATALOG_NAMES.join(", ")
        ))),
    }
}

/// Build several entries at once, in the order given.
pub fn catalog_entries(theory: &TheoryPresentation, names: &[String]) -> Result<Vec<ConsequenceEq>> {
    names.iter().map(|n| catalog_entry(theory, n)).collect()
}
