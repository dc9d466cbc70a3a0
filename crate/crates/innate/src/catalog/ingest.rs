use std::path::{Path, PathBuf};

use crate::perm::{parse_group, GeneratedGroup};

use super::CatalogError;

/// Environment variable overriding the directory of generator files.
pub const DATA_DIR_VAR: &str = "INNATE_DATA_DIR";

/// The generator-file directory: `$INNATE_DATA_DIR`, or the workspace's bundled `data/`.
pub fn data_dir() -> PathBuf {
    std::env::var_os(DATA_DIR_VAR)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data")))
}

/// Reads a generator file and, when `expected_order` is given, certifies the group order.
pub fn ingest_generators(path: &Path, expected_order: Option<u128>) -> Result<GeneratedGroup, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CatalogError::DataFileMissing(path.to_path_buf()),
        _ => CatalogError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        },
    })?;
    let g = parse_group(&text)?;
    if let Some(expected) = expected_order {
        let found = g.order();
        if found != expected {
            return Err(CatalogError::OrderMismatch { expected, found });
        }
    }
    Ok(g)
}
