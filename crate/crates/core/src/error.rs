use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {order} exceeds the capacity of {max} vertices")]
    Capacity { order: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("{what} is undefined for order {order}")]
    OrderTooSmall { what: &'static str, order: usize },

    #[error("parameters out of domain: {0}")]
    Domain(String),

    #[error("no independent set of size {s} exists (independence number is {alpha})")]
    SigmaUndefined { s: usize, alpha: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("refusing to run: {0} (pass --force to override)")]
    ScaleGuard(String),
}
