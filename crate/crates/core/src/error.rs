use thiserror::Error;

use crate::witness::Witness;

/// Every failure the toolkit can report.
///
/// Structural failures carry a [`Witness`]: the basis tuple that broke the
/// property together with both evaluated sides, so a report can be re-checked
/// by hand.
#[derive(Debug, Error)]
pub enum Error {
    #[error("subspace is not contained in the ambient subspace (basis vector {index} lies outside)")]
    NotContained { index: usize },

    #[error("linear system has no solution: {context}")]
    NoSolution { context: String },

    #[error("matrix is not invertible: {context}")]
    Singular { context: String },

    #[error("unsupported root system {kind}{rank}")]
    UnsupportedType { kind: String, rank: usize },

    #[error("construction failed: {0}")]
    ConstructionFailure(String),

    #[error("ad x is not nilpotent within {bound} steps")]
    NotNilpotent { bound: usize },

    #[error("operator parameter t must be nonzero")]
    ZeroParameter,

    #[error("table is not associative: {0}")]
    NotAssociative(Witness),

    #[error("table is not alternative: {0}")]
    NotAlternative(Witness),

    #[error("not a differential: {0}")]
    NotADifferential(Witness),

    #[error("Leibniz identity fails: {0}")]
    LeibnizIdentityFailure(Witness),

    #[error("tensor power of degree {degree} needs {coords} coordinates, above the cap {cap}")]
    DegreeTooLarge { degree: usize, coords: usize, cap: usize },

    #[error("algebra is not perfect: dim [L,L] = {derived} < dim L = {dim}")]
    NotPerfect { derived: usize, dim: usize },

    #[error("dialgebra has no bar-unit")]
    MissingBarUnit,

    #[error("dialgebra is not commutative: {0}")]
    NotCommutative(Witness),

    #[error("embedded elements do not close under the Chevalley bracket: {0}")]
    NotASubalgebra(Witness),

    #[error("weight-space decomposition failed: {0}")]
    EigenspaceMismatch(String),

    #[error("zero weight space is not spanned by opposite root-space brackets: {0}")]
    ZeroConditionFailure(String),

    #[error("transport sign for root {root} is {value}, not +1 or -1")]
    SignNotUnit { root: String, value: String },

    #[error("transport map to root {root} is not invertible on the root space")]
    NonInvertibleRestriction { root: String },

    #[error("bracket lands outside the root space {root}: {detail}")]
    ValueOutsideRootSpace { root: String, detail: String },

    #[error("map on the zero weight space is ill-defined: {0}")]
    L0IllDefined(String),

    #[error("relation {relation} fails: {witness}")]
    RelationFailure { relation: String, witness: Witness },

    #[error("not a Delta-homomorphism: {0}")]
    NotDeltaHom(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
