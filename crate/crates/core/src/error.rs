use thiserror::Error;

/// Which axiom of a linear space an input line set breaks, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryViolation {
    #[error("line {line} references point {point}, but only {points} points exist")]
    PointOutOfRange { line: usize, point: usize, points: usize },
    #[error("line {line} has fewer than two distinct points")]
    ShortLine { line: usize },
    #[error("points {p} and {q} lie on two lines ({first} and {second})")]
    PairOnTwoLines {
        p: usize,
        q: usize,
        first: usize,
        second: usize,
    },
    #[error("points {p} and {q} lie on no common line")]
    PairUncovered { p: usize, q: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("block ({row}, {col}) is outside the partition")]
    BlockIndex { row: usize, col: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a geometry: {0}")]
    Geometry(#[from] GeometryViolation),
    #[error("point {0} is out of range")]
    PointOutOfRange(usize),
    #[error("a line through a point and itself is undefined (point {0})")]
    DegeneratePair(usize),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("finite field: {0}")]
    Field(String),
    #[error("not a projective plane: {0}")]
    NotAPlane(String),
    #[error("block form violation: {0}")]
    BlockForm(String),
    #[error("not a Latin square: {0}")]
    NotLatin(String),
    #[error("MPLS: {0}")]
    Mpls(String),
    #[error("matrix is not {k}-regular: {detail}")]
    NotRegular { k: usize, detail: String },
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
