//! Construction recipes for the catalog of properly innately transitive groups, the batch
//! verification harness, generator-file ingestion and the worked examples.

mod entries;
mod examples;
mod harness;
mod ingest;
mod recipe;

use std::path::PathBuf;

use thiserror::Error;

use crate::actions::ActionError;
use crate::algebra::AlgebraError;
use crate::classify::ClassifyError;
use crate::perm::PermError;

pub use entries::{builtin_catalog, CatalogEntry, ExpectedRow, Matching};
pub use examples::{
    example_pit_on_twelve, example_spread_design, example_z14_design, phi_images_on_26, Example, PhiComparison,
};
pub use harness::{run_catalog, run_entry, CheckResult, EntryReport, EntryStatus, RowResult, VerificationReport};
pub use ingest::{data_dir, ingest_generators, DATA_DIR_VAR};
pub use recipe::{build_construction, Construction, PlinthRecipe, RRecipe, RShape, SigmaRecipe};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("data file {0} not found")]
    DataFileMissing(PathBuf),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("group order {found} differs from the expected {expected}")]
    OrderMismatch { expected: u128, found: u128 },
    #[error("no subgroup matches the recipe: {0}")]
    RecipeFailed(String),
    #[error("unknown catalog entry {0}")]
    UnknownEntry(String),
}
