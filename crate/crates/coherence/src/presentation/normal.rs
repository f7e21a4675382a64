//! Tuple-of-trees normal forms for 1-cell terms.
//!
//! A term `m -> k` normalizes to `k` operation trees over the variables
//! `x0 .. x{m-1}`.  Base leaves become variable tuples, composition becomes
//! substitution, and juxtaposition concatenates with a variable shift.  Two
//! terms have the same normal form exactly when the free theory proves them
//! equal.
//!
//! On top of the syntactic form sits an optional strictness pass: binary
//! generators whose associativity appears among the relations are flattened
//! into argument lists, and their two-sided units are erased.  The pass is a
//! single bottom-up rewrite; flattened nodes never reappear above a rewritten
//! subtree, so one sweep reaches a fixed point.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

use super::term::OneCellTerm;
use super::theory::TheoryPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpTree {
    Var(usize),
    App {
        gen: String,
        /// Output component of the generator this node selects.  Zero for
        /// single-output generators.
        output: usize,
        args: Vec<OpTree>,
    },
}

impl OpTree {
    pub fn app(gen: impl Into<String>, output: usize, args: Vec<OpTree>) -> Self {
        OpTree::App { gen: gen.into(), output, args }
    }

    fn shift_vars(&mut self, by: usize) {
        match self {
            OpTree::Var(k) => *k += by,
            OpTree::App { args, .. } => {
                for a in args {
                    a.shift_vars(by);
                }
            }
        }
    }

    fn substitute(&self, env: &[OpTree]) -> OpTree {
        match self {
            OpTree::Var(k) => env[*k].clone(),
            OpTree::App { gen, output, args } => OpTree::App {
                gen: gen.clone(),
                output: *output,
                args: args.iter().map(|a| a.substitute(env)).collect(),
            },
        }
    }

    fn count_vars(&self, counts: &mut [usize]) {
        match self {
            OpTree::Var(k) => counts[*k] += 1,
            OpTree::App { args, .. } => {
                for a in args {
                    a.count_vars(counts);
                }
            }
        }
    }
}

impl fmt::Display for OpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpTree::Var(k) => write!(f, "x{k}"),
            OpTree::App { gen, output, args } => {
                write!(f, "{gen}")?;
                if *output != 0 {
                    write!(f, "#{output}")?;
                }
                if !args.is_empty() {
                    write!(f, "(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{a}")?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

/// Normal form of a 1-cell term with `source` free variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneNormal {
    pub source: usize,
    pub outputs: Vec<OpTree>,
}

impl OneNormal {
    pub fn target(&self) -> usize {
        self.outputs.len()
    }

    /// Occurrence count of each variable across all outputs.
    pub fn var_usage(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.source];
        for t in &self.outputs {
            t.count_vars(&mut counts);
        }
        counts
    }
}

impl fmt::Display for OneNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:(", self.source)?;
        for (i, t) in self.outputs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// Purely syntactic normalization; no relations are consulted.
pub fn syntactic_normal(theory: &TheoryPresentation, term: &OneCellTerm) -> Result<OneNormal> {
    match term {
        OneCellTerm::Base(u) => Ok(OneNormal {
            source: u.target,
            outputs: u.table.iter().map(|&k| OpTree::Var(k)).collect(),
        }),
        OneCellTerm::Gen(name) => {
            let g = theory
                .gen1(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            let args: Vec<OpTree> = (0..g.source).map(OpTree::Var).collect();
            Ok(OneNormal {
                source: g.source,
                outputs: (0..g.target)
                    .map(|k| OpTree::app(name.clone(), k, args.clone()))
                    .collect(),
            })
        }
        OneCellTerm::Compose(outer, inner) => {
            let inner_nf = syntactic_normal(theory, inner)?;
            let outer_nf = syntactic_normal(theory, outer)?;
            if inner_nf.target() != outer_nf.source {
                return Err(Error::arity(format!(
                    "composition mismatch: inner produces {}, outer consumes {}",
                    inner_nf.target(),
                    outer_nf.source
                )));
            }
            Ok(OneNormal {
                source: inner_nf.source,
                outputs: outer_nf
                    .outputs
                    .iter()
                    .map(|t| t.substitute(&inner_nf.outputs))
                    .collect(),
            })
        }
        OneCellTerm::Juxtapose(left, right) => {
            let l = syntactic_normal(theory, left)?;
            let mut r = syntactic_normal(theory, right)?;
            for t in &mut r.outputs {
                t.shift_vars(l.source);
            }
            let mut outputs = l.outputs;
            outputs.extend(r.outputs);
            Ok(OneNormal { source: l.source + r.source, outputs })
        }
    }
}

/// Which relations the strictness pass accounts for, and how.
#[derive(Debug, Clone, Default)]
pub struct StrictInfo {
    /// Binary generators flattened into argument lists.
    pub flat: BTreeSet<String>,
    /// Two-sided unit attached to each flattened generator.
    pub unit_of: BTreeMap<String, String>,
    /// Per-relation flag: true when the normal form already identifies the
    /// two sides, so the relation carries no extra information.
    pub absorbed: Vec<bool>,
}

impl StrictInfo {
    pub fn all_absorbed(&self) -> bool {
        self.absorbed.iter().all(|&b| b)
    }
}

enum RelShape {
    Assoc(String),
    LeftUnit(String, String),
    RightUnit(String, String),
    Other,
}

fn classify_relation(a: &OneNormal, b: &OneNormal) -> RelShape {
    fn is_var(t: &OpTree, k: usize) -> bool {
        matches!(t, OpTree::Var(v) if *v == k)
    }
    fn binary_app(t: &OpTree) -> Option<(&str, &OpTree, &OpTree)> {
        match t {
            OpTree::App { gen, output: 0, args } if args.len() == 2 => {
                Some((gen, &args[0], &args[1]))
            }
            _ => None,
        }
    }
    fn nullary_app(t: &OpTree) -> Option<&str> {
        match t {
            OpTree::App { gen, output: 0, args } if args.is_empty() => Some(gen),
            _ => None,
        }
    }
    fn assoc_sides(l: &OpTree, r: &OpTree) -> Option<String> {
        let (g, ll, lr) = binary_app(l)?;
        let (g2, rl, rr) = binary_app(r)?;
        if g != g2 {
            return None;
        }
        let (h, a, b) = binary_app(ll)?;
        if h != g || !is_var(a, 0) || !is_var(b, 1) || !is_var(lr, 2) {
            return None;
        }
        let (h2, c, d) = binary_app(rr)?;
        if h2 != g || !is_var(rl, 0) || !is_var(c, 1) || !is_var(d, 2) {
            return None;
        }
        Some(g.to_string())
    }
    fn unit_side(t: &OpTree) -> Option<(String, String, bool)> {
        let (g, l, r) = binary_app(t)?;
        if let Some(u) = nullary_app(l) {
            if is_var(r, 0) {
                return Some((g.to_string(), u.to_string(), true));
            }
        }
        if let Some(u) = nullary_app(r) {
            if is_var(l, 0) {
                return Some((g.to_string(), u.to_string(), false));
            }
        }
        None
    }

    if a.source == 3 && a.outputs.len() == 1 && b.outputs.len() == 1 {
        for (l, r) in [(&a.outputs[0], &b.outputs[0]), (&b.outputs[0], &a.outputs[0])] {
            if let Some(g) = assoc_sides(l, r) {
                return RelShape::Assoc(g);
            }
        }
    }
    if a.source == 1 && a.outputs.len() == 1 && b.outputs.len() == 1 {
        for (l, r) in [(&a.outputs[0], &b.outputs[0]), (&b.outputs[0], &a.outputs[0])] {
            if is_var(r, 0) {
                if let Some((g, u, left)) = unit_side(l) {
                    return if left { RelShape::LeftUnit(g, u) } else { RelShape::RightUnit(g, u) };
                }
            }
        }
    }
    RelShape::Other
}

/// Scan the relation list for associativity and unit shapes.
pub fn detect_strict(theory: &TheoryPresentation) -> Result<StrictInfo> {
    let mut shapes = Vec::new();
    for (lhs, rhs) in &theory.one_cell_relations {
        let a = syntactic_normal(theory, lhs)?;
        let b = syntactic_normal(theory, rhs)?;
        shapes.push(classify_relation(&a, &b));
    }
    let mut info = StrictInfo::default();
    let mut left_units: BTreeSet<(String, String)> = BTreeSet::new();
    let mut right_units: BTreeSet<(String, String)> = BTreeSet::new();
    for shape in &shapes {
        match shape {
            RelShape::Assoc(g) => {
                info.flat.insert(g.clone());
            }
            RelShape::LeftUnit(g, u) => {
                left_units.insert((g.clone(), u.clone()));
            }
            RelShape::RightUnit(g, u) => {
                right_units.insert((g.clone(), u.clone()));
            }
            RelShape::Other => {}
        }
    }
    for (g, u) in left_units.intersection(&right_units) {
        if info.flat.contains(g) {
            info.unit_of.insert(g.clone(), u.clone());
        }
    }
    info.absorbed = shapes
        .iter()
        .map(|shape| match shape {
            RelShape::Assoc(g) => info.flat.contains(g),
            RelShape::LeftUnit(g, u) | RelShape::RightUnit(g, u) => {
                info.unit_of.get(g) == Some(u)
            }
            RelShape::Other => false,
        })
        .collect();
    Ok(info)
}

/// Flatten designated binary generators and erase their units, bottom-up.
pub fn strict_pass(info: &StrictInfo, tree: OpTree) -> OpTree {
    match tree {
        OpTree::Var(k) => OpTree::Var(k),
        OpTree::App { gen, output, args } => {
            let args: Vec<OpTree> = args.into_iter().map(|a| strict_pass(info, a)).collect();
            if !info.flat.contains(&gen) {
                return OpTree::App { gen, output, args };
            }
            let unit = info.unit_of.get(&gen);
            let mut flat: Vec<OpTree> = Vec::new();
            for a in args {
                match a {
                    OpTree::App { gen: g2, output: 0, args: inner } if g2 == gen => {
                        flat.extend(inner);
                    }
                    other => flat.push(other),
                }
            }
            if let Some(u) = unit {
                flat.retain(|a| !matches!(a,
                    OpTree::App { gen: g2, output: 0, args } if g2 == u && args.is_empty()));
            }
            match flat.len() {
                0 => {
                    let u = unit.expect("empty flattened node implies an erased unit");
                    OpTree::app(u.clone(), 0, vec![])
                }
                1 => flat.into_iter().next().unwrap(),
                _ => OpTree::App { gen, output, args: flat },
            }
        }
    }
}

pub fn strict_normal(info: &StrictInfo, nf: OneNormal) -> OneNormal {
    OneNormal {
        source: nf.source,
        outputs: nf.outputs.into_iter().map(|t| strict_pass(info, t)).collect(),
    }
}
