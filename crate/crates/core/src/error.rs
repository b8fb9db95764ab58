//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {input:?}: {reason}")]
    InvalidRational { input: String, reason: String },

    #[error("cofactor index ({i},{j}) out of range for order {order} (indices are 1-based)")]
    IndexOutOfRange { i: usize, j: usize, order: usize },

    #[error("row {row} out of range for a matrix with {rows} rows (1-based)")]
    RowOutOfRange { row: usize, rows: usize },

    #[error("edge {index}: loop at vertex {vertex} (loops are not allowed)")]
    LoopEdge { index: usize, vertex: usize },

    #[error("edge {index}: duplicate of edge {first} ({u},{v})")]
    DuplicateEdge {
        index: usize,
        first: usize,
        u: usize,
        v: usize,
    },

    #[error("edge {index}: endpoint {endpoint} out of range for {vertex_count} vertices")]
    EndpointOutOfRange {
        index: usize,
        endpoint: usize,
        vertex_count: usize,
    },

    #[error("{weights} weights supplied for {edges} edges")]
    WeightCountMismatch { weights: usize, edges: usize },

    #[error("orientation entry {index}: ({pos},{neg}) is not a permutation of edge ({u},{v})")]
    BadOrientation {
        index: usize,
        pos: usize,
        neg: usize,
        u: usize,
        v: usize,
    },

    #[error("orientation covers {got} edges, graph has {expected}")]
    OrientationLengthMismatch { got: usize, expected: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected: no spanning tree exists")]
    Disconnected,

    #[error("enumeration refused: graph has {edges} edges, budget is {budget}")]
    EnumerationBudget { edges: usize, budget: usize },

    #[error("graph would have {vertices} vertices, budget is {budget}")]
    VertexBudget { vertices: usize, budget: usize },

    #[error("edge subset has {got} edges, expected {expected}")]
    WrongSubsetSize { got: usize, expected: usize },

    #[error("edge index {index} out of range for {edges} edges")]
    EdgeIndexOutOfRange { index: usize, edges: usize },

    #[error("edge index {index} appears twice in the subset")]
    DuplicateEdgeIndex { index: usize },

    #[error("anchor ({alpha},{beta}) invalid: f({alpha},{beta}) = {value}, expected 0")]
    AnchorConditionF {
        alpha: String,
        beta: String,
        value: String,
    },

    #[error("anchor ({alpha},{beta}) invalid: g({alpha},{beta}) + h({alpha},{beta}) = {value}, expected 0")]
    AnchorConditionGH {
        alpha: String,
        beta: String,
        value: String,
    },

    #[error("no anchor given: this operation needs an anchor point")]
    AnchorRequired,

    #[error("unknown preset {name:?} (known: northshield, mizuno-sato, gencharpoly, bartholdi, laplacian-charpoly)")]
    UnknownPreset { name: String },

    #[error("preset {preset:?} is stated for unit weights, but the graph has non-unit weights")]
    UnitWeightsRequired { preset: String },

    #[error("coordinate {index}: size {size} is below the minimum of 2")]
    SizeTooSmall { index: usize, size: usize },

    #[error("{sizes} sizes and {weights} weights supplied; counts must match")]
    HammingLengthMismatch { sizes: usize, weights: usize },

    #[error("at least one coordinate is required")]
    NoCoordinates,

    #[error("minimum spanning tree closed form applies to hypercubes only (all sizes 2)")]
    MstRequiresHypercube,

    #[error("parse error: {message}")]
    Parse { message: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        // serde_json includes "at line L column C" in the message.
        Error::Parse {
            message: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
