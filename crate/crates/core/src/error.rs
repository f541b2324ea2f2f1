use thiserror::Error;

/// Errors raised while reading a formula.
///
/// Offsets are character offsets into the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("UnbalancedParenthesis at offset {offset}")]
    UnbalancedParenthesis { offset: usize },
    #[error("UnknownSymbol '{symbol}' at offset {offset}")]
    UnknownSymbol { symbol: char, offset: usize },
    #[error("DanglingUnary '{op}' at offset {offset}")]
    DanglingUnary { op: char, offset: usize },
    #[error("BareGroup at offset {offset}: a parenthesized group must be followed by '+' or '*'")]
    BareGroup { offset: usize },
    #[error("EmptyNotAllowed at offset {offset}: empty formulas are not allowed in semigroup mode")]
    EmptyNotAllowed { offset: usize },
    #[error("OpNotInSignature '{op}' at offset {offset}: not available in {mode} mode")]
    OpNotInSignature {
        op: char,
        offset: usize,
        mode: &'static str,
    },
}

/// Errors raised while building or reading a Σ-tree.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("NotATree: {0}")]
    NotATree(String),
    #[error("NoTrunk: no directed path from start {start} to end {end}")]
    NoTrunk { start: usize, end: usize },
    #[error("BadVertexId: vertex {id} out of range for {n} vertices")]
    BadVertexId { id: usize, n: usize },
    #[error("BadLabel: letter index {index} outside an alphabet of {len} letters")]
    BadLabel { index: u32, len: usize },
    #[error("UnknownSymbol '{0}' is not in the alphabet")]
    UnknownSymbol(char),
    #[error("InvalidAlphabet: {0}")]
    InvalidAlphabet(String),
    #[error("AlphabetMismatch: trees are over different alphabets")]
    AlphabetMismatch,
    #[error("InvalidJson: {0}")]
    InvalidJson(String),
}

/// Top-level error for the solver and command front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
