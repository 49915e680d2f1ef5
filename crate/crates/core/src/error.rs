use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("operation needs a digraph with at least one vertex")]
    EmptyDigraph,
    #[error("input digraph is not semicomplete")]
    NotSemicomplete,
    #[error("input digraph is not a tournament")]
    NotTournament,
    #[error("part {index} of the chain is not {what}")]
    InvalidPart { index: usize, what: &'static str },
    #[error("invalid parameters for {family}: {constraint}")]
    InvalidParameter { family: &'static str, constraint: String },
    #[error("{what} supports at most {limit} vertices, got {n}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("extremal scan refused for n = {n}: {reason}")]
    ScanRefused { n: usize, reason: &'static str },
    #[error("set {index} of the set-cover instance is empty")]
    EmptyCoverSet { index: usize },
    #[error("element {element} of set {index} is outside the ground set 1..={ground}")]
    ElementOutOfRange { index: usize, element: usize, ground: usize },
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("formula is not irreducible: variable x{0} is not covered by a matching")]
    NotIrreducible(usize),
    #[error("invalid hamiltonian path: {0}")]
    InvalidPath(String),
    #[error("construction check failed: {0}")]
    ConstructionCheck(String),
    #[error("solver self-check failed: {0}")]
    SelfCheck(&'static str),
}
