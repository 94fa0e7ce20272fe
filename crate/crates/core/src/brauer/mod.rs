//! Decomposition matrices: basic sets, projective characters, parameter
//! elimination, index-2 Clifford theory and a brute-force oracle over
//! finite fields.

mod basic;
mod clifford;
mod decmat;
mod facts;
mod factsio;
pub mod fixtures;
mod oracle;
mod pipeline;
mod proj;

pub use basic::{block_ell, cyclotomic_rank, relations_matrix, solve_cyclotomic, verify_basic_set, BasicSet, EllSource};
pub use clifford::{clifford_case, clifford_split, CliffordCase, CoverKind, SplitColumns};
pub use decmat::{
    epsilon_row_permutation, epsilon_twist_columns, expand_nonbasic, parse_decmat, parse_relmat, write_decmat, write_relmat,
    DecMat, ParamMatrix, RelationsMatrix,
};
pub use facts::{solve_parameters, Fact, FactOutcome, SolveReport};
pub use factsio::parse_facts;
pub use oracle::{brute_force_decomposition, clifford_oracle, splitting_degree, BruteForce, OracleReport, TENSOR_DIM_LIMIT};
pub use pipeline::{decompose_block, default_recipes, BlockDecomposition, PimColumn, TensorRecipe};
pub use proj::{
    induce_projective, peel_pims, projective_from_tensor, vanishes_off_p_regular, PeelCertificate, PeelMode, ProjChar, Provenance,
};

use thiserror::Error;

use crate::chartab::ChartabError;
use crate::exact::ExactError;
use crate::mtxcond::MtxError;

#[derive(Debug, Error)]
pub enum BrauerError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("shape: {0}")]
    Shape(String),
    #[error("bad label `{0}`")]
    Label(String),
    #[error("basic set has {got} characters, the block needs {expected}")]
    BasicSetSize { got: usize, expected: usize },
    #[error("{0} is not in the block")]
    NotInBlock(String),
    #[error("basic set is linearly dependent on p-regular classes")]
    Dependent,
    #[error("{0} is not in the span of the basic set")]
    NotSpanned(String),
    #[error("{0} has a non-integral expansion in the basic set")]
    NonIntegral(String),
    #[error("integer overflow")]
    Overflow,
    #[error("class function is not a character")]
    NotACharacter,
    #[error("{0} does not have defect zero")]
    NotDefectZero(String),
    #[error("{0} does not vanish on p-singular classes")]
    NotProjective(String),
    #[error("known PIM {0} is zero")]
    ZeroColumn(usize),
    #[error("known PIM {0} has lead entry other than 1")]
    LeadEntry(usize),
    #[error("peeling PIM {pim} leaves a negative entry in row {row}")]
    Negative { pim: usize, row: usize },
    #[error("clifford: {0}")]
    Clifford(String),
    #[error("no assignment survives; last eliminated by fact {fact} ({label})")]
    NoSurvivors { fact: usize, label: String },
    #[error("oracle: {0}")]
    Oracle(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Mtx(#[from] MtxError),
}
