use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division left a nonzero remainder or a non-integer quotient")]
    InexactDivision,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial vanishes at an interval endpoint {0}")]
    EndpointIsRoot(String),
    #[error("polynomial is not square-free (gcd with derivative has degree {0})")]
    NotSquareFree(usize),
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("invalid edge {u}-{v}: {msg}")]
    InvalidEdge { u: usize, v: usize, msg: String },
    #[error("invalid creation sequence: {0}")]
    InvalidSequence(String),
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("vertices {0} and {1} are not twins")]
    NotTwins(usize, usize),
    #[error("cofactor labels must differ, got {0} twice")]
    EqualLabels(usize),
    #[error("only {real} of {degree} roots are real; input is not the characteristic polynomial of a symmetric matrix")]
    NonRealRoots { real: usize, degree: usize },
    #[error("interval does not isolate exactly one root (Sturm count {0})")]
    NotIsolating(usize),
    #[error("derivative vanishes at {0}; no first-order estimate")]
    DerivativeVanishes(f64),
    #[error("estimator is degenerate at {0}: f, f' and f'' all vanish")]
    Degenerate(f64),
    #[error("removed eigenvalue {0} not present in the spectrum")]
    RemovedEigenvalueMissing(i64),
    #[error("spectrum sizes do not match: {g} vs {gp} (expected {g} = {gp} + 1)")]
    SizeMismatch { g: usize, gp: usize },
    #[error("eigenvalue index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("reconstruction search found no matching graph")]
    NoMatch,
    #[error("fixture missing: {0}")]
    FixtureMissing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
