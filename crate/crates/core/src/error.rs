use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial contains the marker b; expected a pure x-polynomial")]
    BetaPresent,
    #[error("weak composition {0} is not snowy")]
    NotSnowy(String),
    #[error("rook diagram is attacking: two cells share {0}")]
    AttackingRooks(String),
    #[error("cell ({0},{1}) is not in the diagram")]
    MissingCell(u32, u32),
    #[error("cell ({0},{1}) is a ghost")]
    GhostCell(u32, u32),
    #[error("value {0} does not occur in the permutation")]
    ValueAbsent(u32),
    #[error("ambient size {ambient} is smaller than the permutation's support {len}")]
    AmbientTooSmall { ambient: usize, len: usize },
    #[error("rook diagram is not contained in the staircase of size {0}")]
    NotInStaircase(usize),
    #[error("no basis element with leading monomial {0}; input is outside the span")]
    NoBasisElement(String),
    #[error("expansion failed: {0}")]
    ExpansionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
