use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for family `{kind}`: {reason}")]
    InvalidFamilyParams { kind: String, reason: String },

    #[error("graph6: empty input")]
    Graph6Empty,

    #[error("graph6: byte {byte:#04x} at position {position} outside printable range 63..=126")]
    Graph6InvalidByte { byte: u8, position: usize },

    #[error("graph6: multi-byte order header (n > 62) is not supported")]
    Graph6ExtendedHeader,

    #[error("graph6: wrong payload length for n = {n}: expected {expected} bytes, got {actual}")]
    Graph6PayloadLength { n: usize, expected: usize, actual: usize },

    #[error("graph6: cannot encode a graph on {n} vertices (limit is 62)")]
    Graph6UnsupportedOrder { n: usize },

    #[error("invalid loop mask: {0}")]
    InvalidLoopMask(String),

    #[error("loop at vertex {vertex} out of range for a graph on {order} vertices")]
    LoopVertexOutOfRange { vertex: usize, order: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:.3e})")]
    NonConvergence { residual: f64, sweeps: usize },

    #[error("matrix order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("matrix entries ({i}, {j}) and ({j}, {i}) differ; input must be symmetric")]
    NotSymmetric { i: usize, j: usize },

    #[error("join quadratic has complex roots (discriminant {discriminant:.6e})")]
    ComplexRoots { discriminant: f64 },

    #[error("block spec of size {size} must carry size - 1 residual eigenvalues, got {residual_len}")]
    InvalidBlockSpec { size: usize, residual_len: usize },

    #[error("spectrum length {actual} does not match order {expected}")]
    SpectrumLengthMismatch { expected: usize, actual: usize },

    #[error("operation requires a graph on at least one vertex")]
    ZeroOrder,

    #[error("graph on {n} vertices is too small (need at least {min})")]
    OrderTooSmall { n: usize, min: usize },

    #[error("exhaustive enumeration supports 2..=6 vertices, got {n}")]
    EnumerationOrderOutOfRange { n: usize },

    #[error("component of size {size} is too small for an independent-set witness")]
    ComponentTooSmall { size: usize },

    #[error("copy count must be at least 1")]
    CopyCountZero,

    #[error(
        "tolerance ambiguity: E(G) = {e_base}, E(G_S) = {e_ind}, E(G_comp) = {e_comp} \
         (neither loop set exceeds the base energy beyond tolerance)"
    )]
    ToleranceAmbiguity { e_base: f64, e_ind: f64, e_comp: f64 },

    #[error("eigenvalue sum {eigen_sum} does not match trace {expected} (solver inconsistency)")]
    TraceMismatch { eigen_sum: f64, expected: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
