use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Vertex;
use crate::labeling::Labeling;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` expects {expected}, got `{got}`")]
    BadParams { family: &'static str, expected: &'static str, got: String },
    #[error("family `{family}` requires {requirement}, got {got}")]
    OutOfRange { family: &'static str, requirement: &'static str, got: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelingError {
    #[error("expected {expected} labels, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("label {label} at vertex {vertex} exceeds the admissible maximum {max}")]
    LabelOutOfRange { vertex: Vertex, label: u32, max: u32 },
    #[error("k must be at least 1")]
    ZeroK,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("attack pattern has {size} vertices but k = {k}")]
    PatternTooLarge { size: usize, k: usize },
    #[error("attack pattern is empty")]
    EmptyPattern,
    #[error("attack pattern references vertex {vertex} (graph has {n})")]
    InvalidVertex { vertex: Vertex, n: usize },
    #[error("attack pattern repeats vertex {0}")]
    RepeatedVertex(Vertex),
    #[error("k = {k} exceeds the vertex count {n}")]
    KExceedsVertexCount { k: usize, n: usize },
    #[error("labeling has {got} labels, graph has {n} vertices")]
    LabelingMismatch { got: usize, n: usize },
    #[error("enumeration budget of {budget} subsets exceeded")]
    BudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("k must satisfy 1 <= k <= n (k = {k}, n = {n})")]
    InvalidK { k: usize, n: usize },
    /// The search was cut off; `best` is the best proper labeling seen, an
    /// upper bound only.
    #[error("search budget of {budget} exceeded; best weight found {}", best.weight())]
    BudgetExceeded { budget: u64, best: Labeling },
    #[error("brute-force budget exceeded: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("k = {k} exceeds the vertex count {n}")]
    KExceedsVertexCount { k: usize, n: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("no explicit construction for {0}")]
    NoConstruction(String),
    #[error("construction for {spec} with k = {k} failed its self-check")]
    SelfCheckFailed { spec: String, k: usize, witness: Option<Vec<Vertex>> },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DischargeError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("labeling must be a 2-SRD labeling (k = 2), got k = {0}")]
    WrongK(usize),
    #[error("labeling is not a proper 2-SRD function")]
    Improper,
    #[error("zero vertex {0} has no defender; no rule applies")]
    NoRule(Vertex),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
