//! Explicit actions: projective and isotropic points, scaled points, quadratic forms,
//! the PΓL(2,8) example, and automorphism lifting over a coset action.

mod lift;
mod linear;
mod ree;
mod symplectic;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::perm::PermError;

pub use lift::{
    intermediate_subgroups, lift_automorphism, normalizer_over_plinth, outer_specs, AutLiftSpec, NormalizerData,
    LIFT_BUDGET, MAX_INTERMEDIATE_INDEX,
};
pub use linear::{
    isotropic_action, isotropic_domain, linear_semilinear_generators, projective_action, projective_domain,
    scaled_isotropic_action, scaled_projective_action, semilinear_action, semilinear_projective_action,
    unitary_semilinear_generators, ScaledAction, VectorDomain,
};
pub use ree::{ree3_line7_action, Line7Action};
pub use symplectic::{dickson_class, dickson_kernel, form_table, form_type, form_value, FormType, SymplecticActions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("r = {r} does not divide {modulus}")]
    RNotDividing { r: u32, modulus: u64 },
    #[error("generator {0} does not preserve the point set")]
    DomainNotInvariant(String),
    #[error("no generators supplied")]
    NoGenerators,
    #[error("element does not preserve the quadratic form")]
    NotInStabilizer,
    #[error("automorphism {0} does not map R to a conjugate of R")]
    NotLiftable(String),
    #[error("images for {0} do not define an automorphism of the plinth")]
    NotAutomorphism(String),
    #[error("index {0} is too large for subgroup enumeration")]
    IndexTooLarge(u128),
    #[error("could not find {0}")]
    NotFound(&'static str),
}
