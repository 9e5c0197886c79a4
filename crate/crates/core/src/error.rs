use std::fmt;

use thiserror::Error;

/// Which side of a matrix an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Col,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Col => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A 1-based index fell outside `1..=limit`.
    #[error("{axis} index {index} out of bounds (valid range 1..={limit})")]
    Bounds {
        axis: Axis,
        index: usize,
        limit: usize,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    /// The leading principal minor of the given order vanished during elimination.
    #[error("zero pivot: leading principal minor of order {order} is singular")]
    PivotFailure { order: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("certification failed at stage {t}, entry ({i},{j}): {detail}")]
    Certification {
        t: usize,
        i: usize,
        j: usize,
        detail: String,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
