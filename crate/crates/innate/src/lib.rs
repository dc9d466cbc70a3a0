//! Permutation-group tools for innately transitive groups and their catalog.

pub mod actions;
pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod perm;
