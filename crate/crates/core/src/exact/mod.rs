//! Exact arithmetic: rationals, cyclotomic numbers, rational linear systems
//! and integer expressions over finitely many bounded parameters.

mod cyclotomic;
mod linsolve;
mod param;

pub use cyclotomic::Cyclotomic;
pub use linsolve::{rat_solve, rref_rational, SolveResult};
pub use param::{
    param_eval, param_solve, param_substitute, Assignment, Constraint, ParamInt, ParamSystem, Relation,
};

use thiserror::Error;

/// Arbitrary-precision rational number (always normalized).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("conductor {n} is divisible by the characteristic {p}")]
    ConductorDivisible { n: u64, p: u32 },
    #[error("field of order {q} has no primitive {n}-th root of unity")]
    NoRootsOfUnity { n: u64, q: u64 },
    #[error("denominator divisible by {p}")]
    DenominatorDivisible { p: u64 },
    #[error("value {0} is not real")]
    NotReal(String),
    #[error("sign of {0} could not be certified")]
    Unresolved(String),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("parameter `{name}` = {value} outside its domain")]
    OutOfDomain { name: String, value: i64 },
    #[error("duplicate parameter `{0}`")]
    DuplicateParam(String),
    #[error("unassigned parameter `{0}`")]
    Unassigned(String),
    #[error("product of non-binary parameters `{0}` is not supported")]
    NonBinaryProduct(String),
}

/// Rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}
