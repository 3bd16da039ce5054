//! Exact computational machinery for double groupoids and finite quantum
//! groupoids attached to a factorization `G = HK` of a finite group.
//!
//! Given subgroups `H, K` of a finite group `G` with `G = HK`, the crate
//! builds the set of squares with commuting edge products, the two partial
//! (horizontal/vertical) products on it, the pair of finite-dimensional
//! *-algebras spanned by the squares, their coproducts, counits and
//! antipodes, the duality bracket between the two sides, the presented
//! double crossed product with its explicit isomorphism onto the square
//! algebra, and the crossed product of the two sides. Every axiom and
//! identity is machine-verified over exact rational arithmetic; checkers
//! return named reports with failure witnesses instead of asserting.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion crate `qgroupoid-cli`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod action;
pub mod ct;
pub mod double_groupoid;
pub mod group;
pub mod groupoid;
pub mod linalg;
pub mod matched_pair;
pub mod presentation;
pub mod rat;
pub mod report;
pub mod star_algebra;
pub mod weak_hopf;

pub use group::{ElemId, FiniteGroup, GroupError, Subgroup};

pub use rat::Rat;
pub use report::{Check, Report};
