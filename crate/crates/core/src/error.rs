use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table must have {expected} rows of {expected} entries; row {row} has {found}")]
    Shape {
        expected: usize,
        row: usize,
        found: usize,
    },

    #[error("semigroup must have at least one element")]
    EmptyTable,

    #[error("entry {value} at row {row}, column {col} is outside 0..{n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("not associative: ({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}")]
    Associativity {
        x: usize,
        y: usize,
        z: usize,
        left: usize,
        right: usize,
    },

    #[error("declared zero {zero} is not absorbing (witness element {witness})")]
    Zero { zero: usize, witness: usize },

    #[error("input must be nonempty")]
    EmptyInput,

    #[error("not an ideal: {x}*{y} = {product} leaves the subset")]
    NotAnIdeal { x: usize, y: usize, product: usize },

    #[error("not closed under multiplication: {x}*{y} = {product} leaves the subset")]
    NotClosed { x: usize, y: usize, product: usize },

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("{what} has no zero element")]
    NoZeroElement { what: String },

    #[error("sandwich matrix {kind} {index} has no nonzero entry")]
    IrregularSandwich { kind: &'static str, index: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a semilattice: {0}")]
    NotASemilattice(String),

    #[error("numerical block sizes still ambiguous after {attempts} attempts")]
    NumericalAmbiguity { attempts: usize },

    #[error("unsupported order {0}")]
    UnsupportedOrder(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
