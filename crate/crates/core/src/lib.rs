//! Vincular and arrow pattern matching, membership tests and enumeration
//! for cyclic permutations avoiding 321, with the counting sequences and
//! growth-rate bounds built on them.

pub mod cache;
pub mod characterize;
pub mod enumerate;
pub mod error;
pub mod growth;
pub mod pattern;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use pattern::{ArrowPattern, PatternExpression, PatternTerm, VincularPattern};
pub use perm::{CycleForm, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/membership.md")]
    mod membership {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/growth.md")]
    mod growth {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
