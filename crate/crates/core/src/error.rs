use thiserror::Error;

/// Crate-wide error type. Variant names follow the operation contracts.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element index {index} out of range for order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("image array is not a bijection on 1..{degree}")]
    MalformedPermutation { degree: usize },

    #[error("odd permutation is not an element of an alternating group")]
    ParityViolation,

    #[error("syntax error at position {position}: expected {expected}")]
    SyntaxError { position: usize, expected: String },

    #[error("illegal parameter for family {family}: {reason}")]
    ParameterError { family: char, reason: String },

    #[error("group order {order} exceeds materialization cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("direct products of lazily represented groups are not materializable")]
    ProductOfLazy,

    #[error("clique search exceeded the node budget of {budget}")]
    Timeout { budget: u64 },

    #[error("graph on {vertices} vertices is too large for the exhaustive oracle (max {max})")]
    TooLarge { vertices: usize, max: usize },

    #[error("seed set is not a clique: vertices {0} and {1} are not adjacent")]
    NotAClique(usize, usize),

    #[error("graph is not a matroid")]
    NotAMatroid,

    #[error("matroid criterion and exchange property disagree (implementation bug)")]
    Inconsistent,

    #[error("operation requires an AC-group")]
    NotAcGroup,

    #[error("operation requires a non-abelian group")]
    AbelianGroup,

    #[error("set is not a maximal pairwise non-commuting set: {0}")]
    NotMaximal(String),

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("group spec does not match the required Q:2^n x C:m shape: {0}")]
    SpecMismatch(String),

    #[error("invalid Cayley table: {0}")]
    Validation(#[from] ValidationError),
}

/// Structured validation failures for imported Cayley tables, naming the
/// first violated law and the offending indices.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("order must be positive")]
    EmptyGroup,

    #[error("table has {rows} rows, expected {order}")]
    BadRowCount { rows: usize, order: usize },

    #[error("row {row} has {cols} entries, expected {order}")]
    BadColCount { row: usize, cols: usize, order: usize },

    #[error("entry table[{row}][{col}] = {value} is out of range 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("no two-sided identity element exists")]
    NoIdentity,

    #[error("row {row} is not a permutation (duplicate value {value})")]
    RowNotPermutation { row: usize, value: usize },

    #[error("column {col} is not a permutation (duplicate value {value})")]
    ColNotPermutation { col: usize, value: usize },

    #[error("element {element} has no inverse")]
    NoInverse { element: usize },

    #[error("associativity fails at triple ({i}, {j}, {k}): (i*j)*k = {lhs}, i*(j*k) = {rhs}")]
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
        lhs: usize,
        rhs: usize,
    },

    #[error("labels array has {labels} entries, expected {order}")]
    BadLabelCount { labels: usize, order: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
