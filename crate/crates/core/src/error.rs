use std::fmt;

use thiserror::Error;

use crate::model::Rational;

/// Which identifier namespace an id belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdKind {
    Agent,
    Issue,
}

impl fmt::Display for IdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdKind::Agent => f.write_str("agent"),
            IdKind::Issue => f.write_str("issue"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cell for agent {agent:?} (row {row}), issue {issue:?} holds {value:?}; expected +1, 1, -1 or 0")]
    Domain {
        row: usize,
        agent: String,
        issue: String,
        value: String,
    },

    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: IdKind, id: String },

    #[error("situation table needs at least one agent and one issue")]
    EmptyTable,

    #[error("unknown {kind} id {id:?}")]
    UnknownId { kind: IdKind, id: String },

    #[error("issue set is empty")]
    EmptyIssueSet,

    #[error("agent set is empty")]
    EmptyAgentSet,

    #[error("invalid thresholds: {0}")]
    InvalidThreshold(String),

    #[error("invalid auxiliary model: {0}")]
    InvalidModel(String),

    #[error("degree pair ({alliance}, {conflict}) is not one of (1,0), (0,1), (0,0)")]
    InvalidDegree { alliance: Rational, conflict: Rational },

    #[error("{what} is {actual}, above the limit of {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("issue at column {0} appears in more than one literal")]
    DuplicateIssue(usize),

    #[error("the empty strategy has no degrees")]
    EmptyStrategy,

    #[error("literal on issue at column {0} is neutral; only non-neutral strategies have a dual")]
    NeutralLiteral(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
