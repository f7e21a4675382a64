//! Presentations of algebraic 2-theories and the word-problem machinery
//! that operates on them.

pub mod morphism;
pub mod normal;
pub mod term;
pub mod theory;

pub use morphism::{TheoryMorphismPresentation, TwoCellOracle};
pub use normal::{OneNormal, OpTree, StrictInfo};
pub use term::{OneCellTerm, TwoCellTerm};
pub use theory::{Dimension, Gen1, Gen2, NormalizerKind, TheoryPresentation, Verdict};
