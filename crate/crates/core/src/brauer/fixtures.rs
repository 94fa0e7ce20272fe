//! Shipped decomposition data of the principal blocks of the large example
//! group and its extension, with the facts used to pin down parameters.
//!
//! Column `j` (0-based) of each block matrix is the PIM `Phi_{j+1}`; the
//! `_proj` files continue the numbering (mod 3 from `Phi_32`, mod 7 from
//! `Phi_25`).

use super::{parse_decmat, parse_facts, parse_relmat, BrauerError, DecMat, Fact, RelationsMatrix};

const MOD3_B1: &str = include_str!("../../fixtures/mod3_b1.decmat");
const MOD3_B1_REL: &str = include_str!("../../fixtures/mod3_b1.relmat");
const MOD3_B1_PROJ: &str = include_str!("../../fixtures/mod3_b1_proj.decmat");
const MOD3_B2: &str = include_str!("../../fixtures/mod3_b2.decmat");
const MOD3_B9: &str = include_str!("../../fixtures/mod3_b9.decmat");
const MOD7_B1: &str = include_str!("../../fixtures/mod7_b1.decmat");
const MOD7_B1_PROJ: &str = include_str!("../../fixtures/mod7_b1_proj.decmat");
const MOD3_B1_FACTS: &str = include_str!("../../fixtures/mod3_b1.facts");
const MOD7_B1_FACTS: &str = include_str!("../../fixtures/mod7_b1.facts");
const MOD7_B1_TRACES: &str = include_str!("../../fixtures/mod7_b1_traces.facts");

pub fn mod3_b1() -> Result<DecMat, BrauerError> {
    parse_decmat(MOD3_B1)
}
pub fn mod3_b1_relations() -> Result<RelationsMatrix, BrauerError> {
    parse_relmat(MOD3_B1_REL)
}
/// `Phi_32 .. Phi_40` on the basic set of the principal 3-block.
pub fn mod3_b1_projectives() -> Result<DecMat, BrauerError> {
    parse_decmat(MOD3_B1_PROJ)
}
pub fn mod3_b2() -> Result<DecMat, BrauerError> {
    parse_decmat(MOD3_B2)
}
/// Keeps its parameter `b` open: nothing shipped decides it.
pub fn mod3_b9() -> Result<DecMat, BrauerError> {
    parse_decmat(MOD3_B9)
}
pub fn mod7_b1() -> Result<DecMat, BrauerError> {
    parse_decmat(MOD7_B1)
}
/// `Phi_25`, `Phi_26` of the principal 7-block.
pub fn mod7_b1_projectives() -> Result<DecMat, BrauerError> {
    parse_decmat(MOD7_B1_PROJ)
}

/// Composition factors of the condensed Steinberg-type module in
/// characteristic 7.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensedFactors {
    pub prime: u32,
    pub degrees: Vec<u64>,
    /// order of the condensation subgroup
    pub v_order: u64,
    pub ambient_dim: u64,
}

impl CondensedFactors {
    pub fn condensed_dim(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

/// Loads the factor degrees and checks that they fill the condensed
/// space, whose dimension is the ambient one divided by `|V|`.
pub fn mod7_condensed_factors() -> Result<CondensedFactors, BrauerError> {
    let f = CondensedFactors { prime: 7, degrees: vec![720, 720, 3711, 18555, 39900, 67466], v_order: 128, ambient_dim: 1 << 24 };
    if f.ambient_dim % f.v_order != 0 || f.condensed_dim() != f.ambient_dim / f.v_order {
        return Err(BrauerError::Shape(format!("factor degrees sum to {}, expected {}", f.condensed_dim(), f.ambient_dim / f.v_order)));
    }
    Ok(f)
}

/// Identity `Phi_1 = Phi_32 - 2 Phi_5 - 3 Phi_10 - 2 Phi_11` and the traces
/// of one condensed element on the 720-dimensional factors (one of trace
/// -1, three of trace 1) against the pair `a`, `at`.
pub fn mod3_b1_facts() -> Result<Vec<Fact>, BrauerError> {
    parse_facts(MOD3_B1_FACTS, &mod3_b1()?, Some(&mod3_b1_projectives()?))
}

/// `5640192^-` is absent from `Phi_6 + at Phi_17 + a Phi_18`, which equals
/// `Phi_25` entrywise, and `Phi_26` decomposes into `Phi_1 .. Phi_24`.
pub fn mod7_projective_facts() -> Result<Vec<Fact>, BrauerError> {
    parse_facts(MOD7_B1_FACTS, &mod7_b1()?, Some(&mod7_b1_projectives()?))
}

/// Traces 1 and 1 of one condensed element on the two 720-dimensional
/// factors; each carries the pair `c`, `ct`.
pub fn mod7_trace_facts() -> Result<Vec<Fact>, BrauerError> {
    parse_facts(MOD7_B1_TRACES, &mod7_b1()?, None)
}
