//! Exact computations with Clifford groups, their invariant rings, weight
//! enumerators of self-dual codes and Barnes-Wall lattices.

pub mod error;
pub mod exact;
pub mod codes;
pub mod enumerators;
pub mod groups;
pub mod invariants;
pub mod lattices;
pub mod selftest;

pub use error::{Error, Result};
