//! Shared fixtures for the benchmarks.

use innate::actions::scaled_projective_action;
use innate::algebra::FiniteField;
use innate::catalog::{builtin_catalog, CatalogEntry};
use innate::perm::GeneratedGroup;

/// `C x PSL(2,9)` extended by its outer automorphisms, on 20 points.
pub fn degree_twenty_group() -> GeneratedGroup {
    let f = FiniteField::new(3, 2).expect("GF(9)");
    scaled_projective_action(2, &f, 2).expect("r divides q-1").action.group()
}

pub fn catalog_entry(id: &str) -> CatalogEntry {
    builtin_catalog()
        .into_iter()
        .find(|e| e.id == id)
        .unwrap_or_else(|| panic!("no catalog entry {id}"))
}
