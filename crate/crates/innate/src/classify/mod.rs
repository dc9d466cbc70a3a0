//! Classification pipeline: proper innate transitivity, the maps to special pairs, the
//! arithmetic line predicates, the rank-3 criteria and partial linear spaces.

mod criteria;
mod pit;
mod pls;
mod report;
mod special;
mod table1;

use thiserror::Error;

use crate::perm::PermError;

pub use criteria::{r_transitive_off_sigma, rank3_criteria, Rank3Criteria};
pub use pit::{detect_pit, phi_hat, PhiHat, PitDecomposition, PitOutcome};
pub use pls::{verify_pls, IncidenceStructure, PlsAxiom, PlsReport};
pub use report::{classify_group, identify_quotient, ClassifyOutcome, PitReport, QuotientSignature};
pub use special::{
    is_special_pair, oracle_special_scan, pairs_equivalent, socle, FailedCondition, ScanEntry, SpecialPairVerdict,
    PAIR_BUDGET, SCAN_CAP,
};
pub use table1::{multiplicative_order, table1_predicate, Table1Instance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("subgroup does not fix the point {0}")]
    SigmaNotFixed(usize),
    #[error("unknown line {0}")]
    UnknownLine(u8),
    #[error("missing parameter {0}")]
    MissingParameter(&'static str),
    #[error("{0} is not prime")]
    RNotPrime(u64),
    #[error("not a special pair with a 2-transitive cell action; rank is {rank}")]
    PreconditionFailed { rank: usize },
    #[error("not a partial linear space: {0}")]
    NotPartialLinearSpace(PlsAxiom),
    #[error("degree {group} does not match {points} points")]
    DegreeMismatch { group: usize, points: usize },
    #[error("invalid design: {0}")]
    InvalidDesign(String),
}
