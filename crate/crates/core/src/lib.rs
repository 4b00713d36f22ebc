//! Decision procedures for the implication order of cyclic loop conditions
//! and the pp-constructability order of finite disjoint unions of directed
//! cycles, together with a brute-force digraph oracle that checks the fast
//! procedures against first principles.

pub mod arith;
pub mod cond;
pub mod cycset;
pub mod digraph;
mod error;
mod limits;
pub mod oracle;
pub mod poset;

pub use cond::{Condition, PrimeSet};
pub use cycset::CycleSet;
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use limits::Limits;
pub use poset::{CompareResult, HasseGraph, HasseKind, NpcFingerprint};
