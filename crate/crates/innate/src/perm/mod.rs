//! Permutation-group engine.

mod action;
mod blocks;
mod centralizer;
mod chain;
mod coset;
mod group;
mod hom;
mod iso;
mod normal;
mod permutation;
mod quotient;
mod rank;
mod textfmt;

use thiserror::Error;

pub use action::{LabeledAction, PointLabel};
pub use blocks::{blocks_containing_zero, minimal_block_containing, minimal_block_systems, BlockSystem};
pub use centralizer::{centralizer_in_symmetric, centralizer_of_transitive, is_semiregular};
pub use chain::StabChain;
pub use coset::{coset_action, coset_action_with_cap, CosetAction, CosetSpace, DEFAULT_COSET_CAP};
pub use group::GeneratedGroup;
pub use hom::Homomorphism;
pub use iso::{
    fingerprint, perm_isomorphic, perm_isomorphic_constrained, Fingerprint, IsoConstraint, IsoWitness,
    ISO_ELEMENT_CAP,
};
pub use normal::{
    conjugacy_classes, is_nonabelian_simple, minimal_normal_subgroups, normal_subgroups_up_to_index,
    normal_subgroups_with_abelian_quotient, normal_subgroups_with_cap, prime_power, SMALL_GROUP_CAP,
};
pub use permutation::Permutation;
pub use quotient::{augment_with_cells, project, quotient_on_blocks, ActionQuotient};
pub use rank::{is_two_transitive, orbital_count, rank, suborbit_lengths};
pub use textfmt::{format_generators, parse_generators, parse_group};


#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("partition is not invariant under the group")]
    BlocksNotInvariant,
    #[error("witness does not normalize the point stabilizer")]
    WitnessNotNormalizing,
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("coset index {index} exceeds cap {cap}")]
    IndexOverflow { index: u128, cap: u128 },
    #[error("group of order {order} exceeds enumeration cap {cap}")]
    GroupTooLarge { order: u128, cap: u128 },
    #[error("generator images do not define a homomorphism")]
    NotHomomorphism,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("no isomorphism exists")]
    NotFound,
    #[error("parse error: {0}")]
    ParseError(String),
}
