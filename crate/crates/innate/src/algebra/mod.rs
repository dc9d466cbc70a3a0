//! Finite fields, matrices over them, semilinear maps and classical generator sets.

mod classical;
mod dump;
mod field;
mod matrix;
mod semilinear;

use thiserror::Error;

pub use classical::{
    conjugate, gl_extra, gu_extra, preserves_unitary_form, primitive_scalar, sl_generators, sl_order,
    sp2_order, sp_generators, su3_generators, su3_order, symplectic_form, symplectic_transvection,
    unitary_base, unitary_form, ClassicalGenerators,
};
pub use dump::{dump_matrices, parse_matrices};
pub use field::{Elem, FiniteField, MAX_FIELD_ORDER};
pub use matrix::{normalize, Matrix};
pub use semilinear::SemilinearElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid extension degree {0}")]
    InvalidDegree(u32),
    #[error("field of order {p}^{a} exceeds the supported size")]
    FieldTooLarge { p: u32, a: u32 },
    #[error("invalid dimension {0}")]
    InvalidDimension(usize),
    #[error("matrix dimensions differ")]
    DimensionMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("field of order {0} is not a square")]
    NotQuadratic(u32),
    #[error("unsupported field of order {0}")]
    UnsupportedField(u32),
    #[error("generator does not preserve the form")]
    FormNotPreserved,
    #[error("parse error: {0}")]
    ParseError(String),
}
