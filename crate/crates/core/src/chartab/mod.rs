//! Ordinary character tables: validation, induction and restriction along
//! fusions, blocks, table automorphisms and index-2 extension labels.

mod auto;
mod blocks;
mod dixon;
mod extension;
pub mod fixtures;
mod fusion;
pub mod io;
mod table;

pub use auto::{automorphism_orbit_of_fusions, character_permutation, is_invariant, table_automorphism_check, table_automorphisms};
pub use blocks::{block_field_degree, block_of, block_partition, block_partition_in, Block};
pub use dixon::dixon_schneider;
pub use extension::{label_extension, ExtLabel, ExtensionLabeling};
pub use fusion::{fusion_from_groups, identity_fusion, FusionMap};
pub use io::{parse_fusion, parse_table, write_fusion, write_table, LineMap};
pub use table::{nu_p, Character, CharacterTable, ClassInfo, Issue};

#[derive(Debug, thiserror::Error)]
pub enum ChartabError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid table: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("class function has {got} entries, expected {expected}")]
    Length { got: usize, expected: usize },
    #[error("value is not rational")]
    NotRational,
    #[error("fusion: {0}")]
    Fusion(String),
    #[error("fusion is not of index 2")]
    NotIndexTwo,
    #[error("no sign character for the index-2 subgroup")]
    NoSignCharacter,
    #[error("group: {0}")]
    Group(String),
    #[error("field: {0}")]
    Field(String),
    #[error("reduction: {0}")]
    Reduction(String),
}
