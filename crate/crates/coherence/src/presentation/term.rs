//! Syntax trees for 1-cells and 2-cells over a generator signature.
//!
//! Terms are stored in the algebraic direction: a 1-cell `f : m -> n` is an
//! operation consuming `m` inputs and producing `n` outputs, so a binary
//! multiplication is `2 -> 1` and a constant is `0 -> 1`.  A `Base` leaf
//! wraps a finite map `u : [m] -> [n]` and denotes the variable reindexing
//! `n -> m` whose i-th output is the input `u(i)`; duplication and
//! permutation of variables are all expressed this way.

use crate::finsk::FinMap;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OneCellTerm {
    /// Variable reindexing induced by a finite map.
    Base(FinMap),
    /// A named generator from the ambient presentation.
    Gen(String),
    /// `Compose(outer, inner)`: feed the inner term's outputs to the outer
    /// term.  Requires `inner.target == outer.source`.
    Compose(Box<OneCellTerm>, Box<OneCellTerm>),
    /// Side-by-side sum; arities add componentwise.
    Juxtapose(Box<OneCellTerm>, Box<OneCellTerm>),
}

impl OneCellTerm {
    pub fn gen(name: impl Into<String>) -> Self {
        OneCellTerm::Gen(name.into())
    }

    pub fn base(map: FinMap) -> Self {
        OneCellTerm::Base(map)
    }

    /// Identity on `n` wires.
    pub fn identity(n: usize) -> Self {
        OneCellTerm::Base(FinMap::identity(n))
    }

    pub fn compose(outer: OneCellTerm, inner: OneCellTerm) -> Self {
        OneCellTerm::Compose(Box::new(outer), Box::new(inner))
    }

    pub fn juxt(left: OneCellTerm, right: OneCellTerm) -> Self {
        OneCellTerm::Juxtapose(Box::new(left), Box::new(right))
    }

    /// Right-nested juxtaposition of several terms; empty input is the
    /// identity on zero wires.
    pub fn juxt_all(terms: Vec<OneCellTerm>) -> Self {
        let mut iter = terms.into_iter().rev();
        match iter.next() {
            None => OneCellTerm::identity(0),
            Some(last) => iter.fold(last, |acc, t| OneCellTerm::juxt(t, acc)),
        }
    }

    /// Left-to-right composition chain: `pipeline([a, b, c])` applies `a`
    /// first.  Panics on empty input.
    pub fn pipeline(stages: Vec<OneCellTerm>) -> Self {
        let mut iter = stages.into_iter();
        let first = iter.next().expect("pipeline of at least one stage");
        iter.fold(first, |acc, next| OneCellTerm::compose(next, acc))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoCellTerm {
    /// Identity 2-cell on a 1-cell.
    Id(OneCellTerm),
    /// Instance of a named 2-cell generator.
    Gen(String),
    /// `VComp(second, first)`: vertical pasting, `first` applied first.
    VComp(Box<TwoCellTerm>, Box<TwoCellTerm>),
    /// `HComp(outer, inner)`: horizontal pasting along 1-cell composition;
    /// the inner cell's boundary feeds the outer one.
    HComp(Box<TwoCellTerm>, Box<TwoCellTerm>),
    /// Side-by-side sum of 2-cells.
    Juxtapose(Box<TwoCellTerm>, Box<TwoCellTerm>),
    /// Formal inverse; only valid over invertible generators.
    Inverse(Box<TwoCellTerm>),
}

impl TwoCellTerm {
    pub fn gen(name: impl Into<String>) -> Self {
        TwoCellTerm::Gen(name.into())
    }

    pub fn id(w: OneCellTerm) -> Self {
        TwoCellTerm::Id(w)
    }

    pub fn vcomp(second: TwoCellTerm, first: TwoCellTerm) -> Self {
        TwoCellTerm::VComp(Box::new(second), Box::new(first))
    }

    /// Vertical pasting of a chain, first element applied first.  Panics on
    /// empty input.
    pub fn vcomp_all(stages: Vec<TwoCellTerm>) -> Self {
        let mut iter = stages.into_iter();
        let first = iter.next().expect("vcomp of at least one stage");
        iter.fold(first, |acc, next| TwoCellTerm::vcomp(next, acc))
    }

    pub fn hcomp(outer: TwoCellTerm, inner: TwoCellTerm) -> Self {
        TwoCellTerm::HComp(Box::new(outer), Box::new(inner))
    }

    pub fn juxt(left: TwoCellTerm, right: TwoCellTerm) -> Self {
        TwoCellTerm::Juxtapose(Box::new(left), Box::new(right))
    }

    pub fn inverse(cell: TwoCellTerm) -> Self {
        TwoCellTerm::Inverse(Box::new(cell))
    }

    /// Whisker on the right: run `w` first, then this cell.
    pub fn after(self, w: OneCellTerm) -> Self {
        TwoCellTerm::hcomp(self, TwoCellTerm::Id(w))
    }

    /// Whisker on the left: run this cell first, then `w`.
    pub fn before(self, w: OneCellTerm) -> Self {
        TwoCellTerm::hcomp(TwoCellTerm::Id(w), self)
    }

    /// True when the pasting contains no generator instances, so it denotes
    /// the identity 2-cell on its boundary.
    pub fn is_identity_pasting(&self) -> bool {
        match self {
            TwoCellTerm::Id(_) => true,
            TwoCellTerm::Gen(_) => false,
            TwoCellTerm::VComp(a, b)
            | TwoCellTerm::HComp(a, b)
            | TwoCellTerm::Juxtapose(a, b) => a.is_identity_pasting() && b.is_identity_pasting(),
            TwoCellTerm::Inverse(a) => a.is_identity_pasting(),
        }
    }

    /// Names of the 2-cell generators occurring in the term.
    pub fn gen_names(&self) -> Vec<&str> {
        fn walk<'a>(t: &'a TwoCellTerm, out: &mut Vec<&'a str>) {
            match t {
                TwoCellTerm::Id(_) => {}
                TwoCellTerm::Gen(g) => out.push(g),
                TwoCellTerm::VComp(a, b)
                | TwoCellTerm::HComp(a, b)
                | TwoCellTerm::Juxtapose(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                TwoCellTerm::Inverse(a) => walk(a, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}
