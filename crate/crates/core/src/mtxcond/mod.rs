//! Modules over finite fields: MeatAxe chopping, isomorphism testing and
//! fixed-point condensation.

mod condense;
mod io;
mod meataxe;
mod module;

pub use condense::{
    condensed_trace, trace_formula_average, verify_extra, ExtraCheck, MatrixCondensation, PermCondensation,
};
pub use io::{parse_module, replay_certificate_text, write_module};
pub use meataxe::{
    chop, factor_trace, find_submodule, hom_space, is_irreducible, iso, iso_irreducible, occurrence_action,
    replay_certificate, spin, spin_many, standard_basis, AlgebraWord, ChopCertificate, CompositionFactor,
    CompositionSeries, Direction, NodeOutcome, NodeRecord, Subquotient, SPLIT_BUDGET,
};
pub use module::{brauer_value, brauer_value_in, permutation_matrix, FGModule};

use thiserror::Error;

use crate::gfla::GfError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MtxError {
    #[error("generator matrix is not invertible")]
    NotInvertible,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("field mismatch or unsupported field")]
    Field,
    #[error("subspace is not invariant")]
    NotInvariant,
    #[error("element is not semisimple over the splitting field")]
    NotSemisimple,
    #[error("module is not irreducible")]
    NotIrreducible,
    #[error("seed vector is zero")]
    ZeroSeed,
    #[error("split budget exhausted; partial certificate:\n{partial}")]
    Budget { partial: String },
    #[error("no factor occurrence {0}")]
    FactorIndex(usize),
    #[error("|V| = {order} is divisible by p = {p}")]
    CondensationOrder { order: usize, p: u32 },
    #[error("coset multiset has {total} elements, expected {expected}")]
    Multiset { total: usize, expected: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Gf(#[from] GfError),
}
