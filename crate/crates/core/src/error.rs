use thiserror::Error;

use crate::algebra::Violation;
use crate::table::ElementId;

/// Structurally malformed input, as opposed to a well-formed table that
/// violates the axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("table has no rows")]
    EmptyTable,
    #[error("row {row} has {len} cells but the table has order {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("element {index} is out of range for order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A hypothesis required by an operation does not hold for the given algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisFailure {
    #[error("not homogeneous: u={u}, v1={v1}, v2={v2} admit no splitting of u")]
    NotHomogeneous {
        u: ElementId,
        v1: ElementId,
        v2: ElementId,
    },
    #[error("not sharply dominating: element {x} lacks a {which} sharp bound")]
    NotSharplyDominating { x: ElementId, which: &'static str },
    #[error("triple is not admissible: {0}")]
    InvalidTriple(String),
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("axioms violated: {}", display_violations(.0))]
    Axioms(Vec<Violation>),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisFailure),
    /// A construction that the theory guarantees to succeed did not.
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("refused: {0}")]
    Refused(String),
}

fn display_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
