use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("table `{table}` has {found} cells, expected {expected}")]
    TableShape {
        table: &'static str,
        found: usize,
        expected: usize,
    },

    #[error("table `{table}` cell ({row},{col}) holds {value}, outside carrier of size {size}")]
    TableEntry {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },

    #[error("carrier size must be between 1 and {max}, got {size}")]
    Size { size: usize, max: usize },

    #[error("operation result undefined in this window: {0}")]
    Undefined(String),

    #[error("invalid triangle: vertices must be pairwise distinct, got ({0},{1},{2})")]
    DegenerateTriangle(usize, usize, usize),

    #[error("invalid tuple: {0}")]
    Tuple(String),

    #[error("invalid model parameters: {0}")]
    Model(String),

    #[error("invalid search spec: {0}")]
    Search(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("interval syntax: {0}")]
    Interval(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
