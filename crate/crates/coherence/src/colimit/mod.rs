//! Finite 2-dimensional diagrams and their collapses.
//!
//! The pieces, bottom up: explicit finite categories with budgeted
//! functor and transformation search ([`cat`]), finite 2-categories with
//! designated sub-structure and strict diagrams over them ([`twocat`]),
//! quasi-natural transformations with evaluation at representables
//! ([`qnat`]), the quotient that collapses a diagram to a single category
//! ([`qcolim`]), finite slices of theory morphisms ([`comma`]), and a shelf
//! of small worked diagrams ([`instances`]).
//!
//! Every search in here takes a step budget and refuses to answer once it
//! runs out.  Nothing truncates silently.

pub mod cat;
pub mod comma;
pub mod instances;
pub mod qcolim;
pub mod qnat;
pub mod twocat;

pub use cat::{
    all_functors, all_nat_transfs, equivalence, isomorphism, Budget, CategoryBuilder,
    FiniteCategory, FiniteFunctor, Morphism, NatTransf,
};
pub use comma::{comma_truncate, TruncatedComma};
pub use qcolim::{find_relative_terminal, qcolim, QuasiColimit};
pub use qnat::{
    enumerate_modifications, enumerate_qnats, quasi_yoneda_psi, quasi_yoneda_psi_mod,
    quasi_yoneda_psihat, quasi_yoneda_psihat_mor, quasi_yoneda_unit, Modification,
    QuasiNatTransformation,
};
pub use twocat::{
    hom_diagram, FiniteTwoCategory, GammaImage, TwoCatBuilder, TwoDiagram,
};
