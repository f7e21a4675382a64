//! Concrete free models: permutations, braid words, ribbon braids, and the
//! thin witness model, plus the evaluator that interprets pasting terms in
//! them.

pub mod braid;
pub mod interp;
pub mod perm;
pub mod ribbon;

pub use braid::{positive_lift, BraidWord, GarsideNormalForm};
pub use interp::{
    check_relations, eval_two_cell, free_model_oracle, model_interp, size_vectors,
    standard_interp, GenRule, ModelInterp, ModelKind, ModelValue,
};
pub use perm::Permutation;
pub use ribbon::RibbonBraid;
