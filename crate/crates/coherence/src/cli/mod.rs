//! Command-line front end.
//!
//! Every subcommand reads its inputs from arguments and files, never from
//! the environment, and prints either a report (sorted tab-separated
//! `STATUS  check-id  detail` lines) or a single s-expression artifact.
//! Identical invocations produce identical bytes.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a
//! computation refuses, 2 for usage and parse problems.

pub mod diagram_io;
pub mod sexpr;
pub mod theory_io;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use itertools::Itertools;

pub use theory_io::{parse_theory_file, print_theory};

use crate::catalog::catalog_entries;
use crate::colimit::{find_relative_terminal, qcolim};
use crate::error::{Error, Result};
use crate::kronecker::{evident_inclusion, kronecker};
use crate::models::{check_relations, model_interp, BraidWord, ModelKind};
use crate::presentation::TheoryPresentation;
use crate::report::Report;
use crate::theories::{all_theory_names, build_theory, change_dimension, DimensionChange};

const USAGE: &str = "expected one of: list-theories | show <name> | \
kronecker <left> <right> --over <base> [--out FILE] | \
check <name> --model perm|braid|ribbon|thin [--sizes CSV] [--catalog NAMES] | \
normalize-braid --strands N <word> | qcolim <diagram-file> | change c|u|d|pi0 <name>";

enum Outcome {
    /// An s-expression artifact; success by construction.
    Artifact(String),
    /// A report whose lines decide the exit code.
    Checked(Report),
    /// Arguments or input files were malformed.
    Usage(String),
    /// Well-formed request the mathematics refused.
    Refused { id: String, msg: String },
}

/// Runs one invocation and returns its exit code with everything the
/// command would print.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (u8, String) {
    let args: Vec<&str> = argv.iter().map(AsRef::as_ref).collect();
    let outcome = match args.split_first() {
        None => Outcome::Usage(format!("missing subcommand; {USAGE}")),
        Some((&"list-theories", rest)) => list_theories(rest),
        Some((&"show", rest)) => show(rest),
        Some((&"kronecker", rest)) => kronecker_cmd(rest),
        Some((&"check", rest)) => check_cmd(rest),
        Some((&"normalize-braid", rest)) => normalize_braid(rest),
        Some((&"qcolim", rest)) => qcolim_cmd(rest),
        Some((&"change", rest)) => change_cmd(rest),
        Some((&other, _)) => Outcome::Usage(format!("unknown subcommand {other}; {USAGE}")),
    };
    match outcome {
        Outcome::Artifact(text) => (0, text),
        Outcome::Checked(report) => {
            let code = if report.passed() { 0 } else { 1 };
            (code, report.render())
        }
        Outcome::Usage(msg) => (2, format!("ERROR\tusage\t{msg}\n")),
        Outcome::Refused { id, msg } => (1, format!("ERROR\t{id}\t{msg}\n")),
    }
}

struct Flags {
    positional: Vec<String>,
    named: BTreeMap<String, String>,
}

fn parse_flags(rest: &[&str], allowed: &[&str]) -> std::result::Result<Flags, String> {
    let mut flags = Flags { positional: Vec::new(), named: BTreeMap::new() };
    let mut it = rest.iter();
    while let Some(&arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if !allowed.contains(&name) {
                return Err(format!("unknown flag --{name}"));
            }
            let value = it.next().ok_or_else(|| format!("--{name} needs a value"))?;
            if flags.named.insert(name.to_string(), value.to_string()).is_some() {
                return Err(format!("--{name} given twice"));
            }
        } else {
            flags.positional.push(arg.to_string());
        }
    }
    Ok(flags)
}

macro_rules! flags {
    ($rest:expr, $allowed:expr) => {
        match parse_flags($rest, $allowed) {
            Ok(f) => f,
            Err(msg) => return Outcome::Usage(msg),
        }
    };
}

fn positionals<const N: usize>(flags: &Flags, names: [&str; N]) -> std::result::Result<[String; N], String> {
    if flags.positional.len() != N {
        return Err(format!(
            "expected {} positional argument{} ({}), found {}",
            N,
            if N == 1 { "" } else { "s" },
            names.join(" "),
            flags.positional.len()
        ));
    }
    Ok(std::array::from_fn(|i| flags.positional[i].clone()))
}

macro_rules! positionals {
    ($flags:expr, $names:expr) => {
        match positionals(&$flags, $names) {
            Ok(p) => p,
            Err(msg) => return Outcome::Usage(msg),
        }
    };
}

/// Catalog name, or a path to a theory file (the `kronecker --out` format).
fn resolve_theory(name: &str) -> std::result::Result<TheoryPresentation, Outcome> {
    if let Ok(known) = name.parse() {
        return Ok(build_theory(known));
    }
    if !Path::new(name).is_file() {
        return Err(Outcome::Usage(format!(
            "unknown theory {name}, and no theory file of that name exists"
        )));
    }
    let text = std::fs::read_to_string(name)
        .map_err(|e| Outcome::Usage(format!("cannot read {name}: {e}")))?;
    parse_theory_file(&text).map_err(|e| Outcome::Usage(format!("{name}: {e}")))
}

macro_rules! theory {
    ($name:expr) => {
        match resolve_theory($name) {
            Ok(t) => t,
            Err(outcome) => return outcome,
        }
    };
}

fn list_theories(rest: &[&str]) -> Outcome {
    let flags = flags!(rest, &[]);
    positionals!(flags, []);
    let mut report = Report::new();
    for name in all_theory_names() {
        let t = build_theory(name);
        report.info(
            format!("theory.{name}"),
            format!(
                "dimension {}, {} 1-cell generators, {} 1-cell relations, \
                 {} 2-cell generators, {} 2-cell relations",
                t.dimension,
                t.one_cell_gens.len(),
                t.one_cell_relations.len(),
                t.two_cell_gens.len(),
                t.two_cell_relations.len()
            ),
        );
    }
    Outcome::Checked(report)
}

fn show(rest: &[&str]) -> Outcome {
    let flags = flags!(rest, &[]);
    let [name] = positionals!(flags, ["name"]);
    Outcome::Artifact(print_theory(&theory!(&name)))
}

fn kronecker_cmd(rest: &[&str]) -> Outcome {
    let flags = flags!(rest, &["over", "out"]);
    let [left, right] = positionals!(flags, ["left", "right"]);
    let Some(over) = flags.named.get("over") else {
        return Outcome::Usage("kronecker needs --over <base>".into());
    };
    let base = theory!(over);
    let left = theory!(&left);
    let right = theory!(&right);
    let product = evident_inclusion(&base, &left)
        .and_then(|l| Ok((l, evident_inclusion(&base, &right)?)))
        .and_then(|(l, r)| kronecker(&base, &l, &r));
    let kp = match product {
        Ok(kp) => kp,
        Err(e) => return Outcome::Refused { id: "kronecker".into(), msg: e.to_string() },
    };
    let text = print_theory(&kp.underlying);
    match flags.named.get("out") {
        None => Outcome::Artifact(text),
        Some(file) => {
            if let Err(e) = std::fs::write(file, &text) {
                return Outcome::Refused {
                    id: "kronecker.out".into(),
                    msg: format!("cannot write {file}: {e}"),
                };
            }
            let mut report = Report::new();
            report.info("kronecker.theory", kp.underlying.name.clone());
            report.info("kronecker.delta-cells", kp.delta_table.len().to_string());
            report.info(
                "kronecker.invertible",
                if kp.delta_invertible { "yes" } else { "no" },
            );
            report.info("kronecker.out", file);
            Outcome::Checked(report)
        }
    }
}

fn model_kind(name: &str) -> Option<ModelKind> {
    match name {
        "perm" => Some(ModelKind::Perm),
        "braid" => Some(ModelKind::Braid),
        "ribbon" => Some(ModelKind::Ribbon),
        "thin" => Some(ModelKind::Thin),
        _ => None,
    }
}

/// The `--sizes` pool: the sizes each variable independently ranges over.
fn size_pool(csv: &str) -> std::result::Result<Vec<usize>, String> {
    let mut pool = BTreeSet::new();
    for part in csv.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("--sizes expects naturals, found {part:?}"))?;
        if n == 0 {
            return Err("--sizes entries must be at least 1".into());
        }
        pool.insert(n);
    }
    Ok(pool.into_iter().collect())
}

fn check_cmd(rest: &[&str]) -> Outcome {
    let flags = flags!(rest, &["model", "sizes", "catalog"]);
    let [name] = positionals!(flags, ["name"]);
    let Some(kind) = flags.named.get("model").and_then(|m| model_kind(m)) else {
        return Outcome::Usage("check needs --model perm|braid|ribbon|thin".into());
    };
    let pool = match size_pool(flags.named.get("sizes").map_or("1,2", |s| s)) {
        Ok(pool) => pool,
        Err(msg) => return Outcome::Usage(msg),
    };
    let theory = theory!(&name);
    let interp = match model_interp(kind, &theory) {
        Ok(interp) => interp,
        Err(e) => return Outcome::Refused { id: "check.interp".into(), msg: e.to_string() },
    };
    let entries = match flags.named.get("catalog") {
        None => Vec::new(),
        Some(csv) => {
            let names: Vec<String> = csv.split(',').map(|s| s.trim().to_string()).collect();
            match catalog_entries(&theory, &names) {
                Ok(entries) => entries,
                Err(Error::Invalid(msg)) => return Outcome::Usage(msg),
                Err(e) => {
                    return Outcome::Refused { id: "check.catalog".into(), msg: e.to_string() }
                }
            }
        }
    };

    let mut arities = BTreeSet::new();
    let arity_of = |lhs: &crate::presentation::TwoCellTerm| -> Result<usize> {
        let (src, _) = theory.typecheck_two(lhs)?;
        Ok(theory.typecheck_one(&src)?.0)
    };
    let mut gather = || -> Result<()> {
        for (lhs, _) in &theory.two_cell_relations {
            arities.insert(arity_of(lhs)?);
        }
        for eq in &entries {
            arities.insert(arity_of(&eq.lhs)?);
        }
        Ok(())
    };
    if let Err(e) = gather() {
        return Outcome::Refused { id: "check.typing".into(), msg: e.to_string() };
    }
    let mut vectors: Vec<Vec<usize>> = Vec::new();
    for &arity in &arities {
        if arity == 0 {
            vectors.push(Vec::new());
        } else {
            vectors.extend((0..arity).map(|_| pool.iter().copied()).multi_cartesian_product());
        }
    }

    let mut report = match check_relations(&theory, &interp, &vectors) {
        Ok(report) => report,
        Err(e) => return Outcome::Refused { id: "check.relations".into(), msg: e.to_string() },
    };
    crate::kronecker::check_consequences(&mut report, &interp, &entries, &vectors);
    Outcome::Checked(report)
}

fn normalize_braid(rest: &[&str]) -> Outcome {
    let flags = flags!(rest, &["strands"]);
    let [word] = positionals!(flags, ["word"]);
    let Some(strands) = flags.named.get("strands").and_then(|s| s.parse::<usize>().ok()) else {
        return Outcome::Usage("normalize-braid needs --strands N".into());
    };
    let braid = match BraidWord::parse(strands, &word) {
        Ok(braid) => braid,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let mut report = Report::new();
    report.info("braid.strands", strands.to_string());
    report.info("braid.word", display_or(&braid.to_string(), "id"));
    report.info("braid.normal", display_or(&braid.normal_form_string(), "id"));
    report.info("braid.exponent-sum", braid.exponent_sum().to_string());
    report.info(
        "braid.permutation",
        braid.perm_of().table().iter().map(usize::to_string).join(" "),
    );
    Outcome::Checked(report)
}

fn display_or(text: &str, empty: &str) -> String {
    if text.is_empty() {
        empty.to_string()
    } else {
        text.to_string()
    }
}

fn qcolim_cmd(rest: &[&str]) -> Outcome {
    let flags = flags!(rest, &[]);
    let [file] = positionals!(flags, ["diagram-file"]);
    let text = match std::fs::read_to_string(&file) {
        Ok(text) => text,
        Err(e) => return Outcome::Usage(format!("cannot read {file}: {e}")),
    };
    let (diagram, gamma) = match diagram_io::parse_diagram_file(&text) {
        Ok(parsed) => parsed,
        Err(e) => return Outcome::Usage(format!("{file}: {e}")),
    };
    let q = match qcolim(&diagram, &gamma) {
        Ok(q) => q,
        Err(e) => return Outcome::Refused { id: "qcolim".into(), msg: e.to_string() },
    };
    let mut report = Report::new();
    report.info("qcolim.objects", q.category.object_count().to_string());
    report.info("qcolim.cells", q.category.morphism_count().to_string());
    for (&(i, x), &class) in &q.object_class {
        report.info(
            format!(
                "qcolim.class.{}.{}",
                diagram.index.object_name(i),
                diagram.value(i).object_name(x)
            ),
            q.category.object_name(class),
        );
    }
    let landing = match find_relative_terminal(&diagram.index, &gamma) {
        Some(t) => diagram.index.object_name(t).to_string(),
        None => "none".into(),
    };
    report.info("qcolim.terminal", landing);
    Outcome::Checked(report)
}

fn change_cmd(rest: &[&str]) -> Outcome {
    let flags = flags!(rest, &[]);
    let [kind, name] = positionals!(flags, ["c|u|d|pi0", "name"]);
    let kind: DimensionChange = match kind.parse() {
        Ok(kind) => kind,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let theory = theory!(&name);
    match change_dimension(kind, &theory) {
        Ok(changed) => Outcome::Artifact(print_theory(&changed)),
        Err(e) => Outcome::Refused { id: "change".into(), msg: e.to_string() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (u8, String) {
        run_command(args)
    }

    #[test]
    fn unknown_subcommands_and_bad_flags_exit_two() {
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&[]).0, 2);
        assert_eq!(run(&["show"]).0, 2);
        assert_eq!(run(&["show", "NoSuchTheory"]).0, 2);
        assert_eq!(run(&["check", "sSym", "--model", "weird"]).0, 2);
        assert_eq!(run(&["check", "sSym", "--model", "perm", "--frob", "x"]).0, 2);
        assert_eq!(run(&["normalize-braid", "--strands", "3", "s9"]).0, 2);
    }

    #[test]
    fn passing_checks_exit_zero_with_pass_lines() {
        let (code, text) = run(&["check", "sSym", "--model", "perm", "--sizes", "1,1"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
        assert!(!text.is_empty());
    }

    #[test]
    fn a_failing_check_exits_one() {
        let (code, text) = run(&["check", "sSym", "--model", "braid", "--sizes", "1"]);
        assert_eq!(code, 1, "{text}");
        assert!(text.lines().any(|l| l.starts_with("FAIL")), "{text}");
    }

    #[test]
    fn show_round_trips_through_its_own_output() {
        let (code, text) = run(&["show", "sBraid"]);
        assert_eq!(code, 0);
        let parsed = parse_theory_file(&text).unwrap();
        assert_eq!(print_theory(&parsed), text);
    }

    #[test]
    fn braid_normalization_reports_the_garside_form() {
        let (code, text) = run(&["normalize-braid", "--strands", "3", "s1 s1^-1"]);
        assert_eq!(code, 0);
        assert!(text.contains("braid.normal\tid"), "{text}");
        let (code, text) = run(&["normalize-braid", "--strands", "3", "s1 s2 s1"]);
        assert_eq!(code, 0);
        let (_, text2) = run(&["normalize-braid", "--strands", "3", "s2 s1 s2"]);
        let pick = |t: &str| {
            t.lines()
                .find(|l| l.contains("braid.normal"))
                .map(str::to_string)
                .unwrap()
        };
        assert_eq!(pick(&text), pick(&text2));
    }

    #[test]
    fn identical_invocations_give_identical_bytes() {
        for args in [
            vec!["list-theories"],
            vec!["show", "Mon"],
            vec!["check", "sBraid", "--model", "braid", "--sizes", "1,2"],
            vec!["change", "pi0", "sBraid"],
        ] {
            assert_eq!(run(&args), run(&args), "{args:?}");
        }
    }

    #[test]
    fn change_rejects_the_wrong_dimension_with_exit_one() {
        let (code, text) = run(&["change", "pi0", "Monoids"]);
        assert_eq!(code, 1);
        assert!(text.starts_with("ERROR\tchange\t"), "{text}");
        let (code, _) = run(&["change", "d", "Monoids"]);
        assert_eq!(code, 0);
    }
}
