//! Solubilizers and solubility graphs of finite permutation groups.
//!
//! For a finite group `G` and `x ∈ G`, the solubilizer `Sol_G(x)` is the set of
//! `y` for which `⟨x, y⟩` is soluble, and the solubility graph joins two
//! distinct elements when they generate a soluble subgroup. This crate
//! computes both over permutation groups small enough to enumerate, together
//! with the surrounding structure (derived and lower central series, soluble
//! radical, quotients) and a harness that checks known arithmetic and
//! structural facts about solubilizers across a catalog of groups.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod graph;
pub mod perm;
pub mod solubilizer;
pub mod structure;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{ElementSet, PermGroup, Permutation};
