use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("{what} of size {size} exceeds capacity {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("relation is not transitive: pair ({}, {}) is forced but missing", .witness.0, .witness.1)]
    NotTransitive { witness: (usize, usize) },

    #[error("expected a set over {expected} points, got one over {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("{argument} is not open: the up-set of point {point} leaves it")]
    NotOpen {
        argument: &'static str,
        point: usize,
    },

    #[error("map is not an involution at point {point}")]
    NotInvolution { point: usize },

    #[error("involution is not antitone: {x} R {y} but not v({y}) R v({x})")]
    NotAntitone { x: usize, y: usize },

    #[error("lattice law '{law}' fails at {witness:?}")]
    LatticeLaw {
        law: &'static str,
        witness: Vec<usize>,
    },

    #[error("table '{table}' has wrong shape: expected {expected}, found {found}")]
    TableShape {
        table: String,
        expected: usize,
        found: usize,
    },

    #[error("table '{table}' disagrees with its derived value at {witness:?}")]
    InconsistentTable {
        table: &'static str,
        witness: Vec<usize>,
    },

    #[error("class '{class}' needs the '{table}' table")]
    MissingTable { class: String, table: &'static str },

    #[error("unknown class '{0}'")]
    UnknownClass(String),

    #[error("set {0:?} is not a filter")]
    NotFilter(Vec<usize>),

    #[error("set {0:?} is not a deductive system")]
    NotDeductiveSystem(Vec<usize>),

    #[error("lattice is not distributive at (a, b, c) = ({}, {}, {})", .witness.0, .witness.1, .witness.2)]
    NotDistributive { witness: (usize, usize, usize) },

    #[error("-(~P) for point {point} is not a prime filter")]
    PhiNotPoint { point: usize },

    #[error("prime filter space carries no involution")]
    MissingInvolution,

    #[error("algebra is not a Kleene algebra: {axiom} fails at {witness:?}")]
    NotKleene { axiom: String, witness: Vec<usize> },

    #[error("no relative pseudocomplement of {a} with respect to {b}")]
    MissingImplication { a: usize, b: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("information system: {0}")]
    InfoSystem(String),

    #[error("unknown label '{0}'")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
