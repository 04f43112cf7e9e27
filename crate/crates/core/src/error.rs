use std::fmt;

use thiserror::Error;

/// Which matroid axiom a candidate circuit family failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Every circuit is nonempty.
    C1,
    /// Circuits form an antichain.
    C2,
    /// Circuit elimination with a single eliminated element.
    C3,
    /// All maximal circuit-free sets have the same size.
    Bases,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::Bases => "bases",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("axiom {axiom} violated: {witness}")]
    AxiomViolation { axiom: Axiom, witness: String },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("element `{0}` listed twice")]
    DuplicateElement(String),

    #[error("ground set has {0} elements; at most 128 are supported")]
    TooLarge(usize),

    #[error("contract and delete sets overlap in {0:?}")]
    OverlappingSets(Vec<String>),

    #[error("{0:?} is not a base")]
    NotABase(Vec<String>),

    #[error("element `{0}` is on the wrong side of the base")]
    ElementPositionInvalid(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("2-sum operands overlap in {0:?}; exactly one shared element is required")]
    BadOverlap(Vec<String>),

    #[error("shared element `{element}` is a {kind} of {side}")]
    DegenerateSharedEdge {
        element: String,
        kind: &'static str,
        side: &'static str,
    },

    #[error("nodes `{0}` and `{1}` violate the overlap-1 condition: {2}")]
    OverlapViolation(String, String, String),

    #[error("dummy `{0}` does not appear in exactly the two matroids of its tree edge")]
    StrayDummy(String),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("inconsistent precircuit at {0}")]
    InconsistentPrecircuit(String),

    #[error("dummy element `{0}` may not be contracted or deleted")]
    DummyTouched(String),

    #[error("glued family is not a matroid: {0}")]
    NotAMatroid(Box<Error>),

    #[error("ray is not nice: {0}")]
    NotNice(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("matroid is not connected")]
    NotConnected,

    #[error("matroid is too small: {0}")]
    TooSmall(String),

    #[error("uniqueness failure: {0}")]
    UniquenessFailure(String),

    #[error("lemma violated: {0}")]
    LemmaViolation(String),

    #[error("no path: {0}")]
    NoPath(String),

    #[error("assertion failed: {0}")]
    AssertionFailure(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
