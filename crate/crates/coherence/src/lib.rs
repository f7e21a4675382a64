//! A symbolic workbench for finitely presented algebraic 2-theories.
//!
//! The crate builds up in layers: finite maps between skeletal finite sets
//! (`finsk`), term syntax and normal forms for presented theories
//! (`presentation`), a catalog of standard theories and the operations
//! between them (`theories`), concrete models in permutations, braids, and
//! ribbon braids (`models`), interchange products with their derived
//! braidings (`kronecker`), and quasi-colimits of 2-functors (`colimit`).
//! The `cli` module exposes the whole stack through a small command set; see
//! the crate examples for guided tours of each layer.

pub mod catalog;
pub mod cli;
pub mod colimit;
pub mod error;
pub mod finsk;
pub mod kronecker;
pub mod models;
pub mod presentation;
pub mod report;
pub mod theories;

pub use error::{Error, Result};
