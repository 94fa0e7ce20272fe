//! Permutation groups small enough to enumerate: class data, coset
//! distributions, pair searches, BN-pair data and the Steinberg module.

mod bn;
pub mod catalog;
mod coset;
mod group;
mod io;
mod perm;

pub use bn::{invariant_sylow, steinberg_element_module, BNData};
pub use coset::{coset_distribution, filtered_pair_search, ClassInvariant, CosetReport, InvariantSpec, Predicate};
pub use group::{closure, ConjugacyClasses, Enumeration, PermGroup, DEGREE_LIMIT, ENUMERATION_LIMIT};
pub use io::{eval_word, parse_perm_blocks, parse_perms, write_perms};
pub use perm::Perm;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch")]
    DegreeMismatch,
    #[error("degree {0} exceeds the supported limit")]
    DegreeTooLarge(usize),
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("group has more than {0} elements")]
    LimitExceeded(usize),
    #[error("element is not in the group")]
    NotInGroup,
    #[error("invalid BN-pair data: {0}")]
    BadBn(String),
    #[error("no invariant Sylow subgroup found")]
    NoInvariantSylow,
    #[error("parse error: {0}")]
    Parse(String),
}
