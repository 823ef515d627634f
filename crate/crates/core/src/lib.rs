//! Extremal sizes of nonhamiltonian and nontraceable graphs with prescribed
//! order and connectivity: closed forms, the extremal constructions, exact
//! hamiltonicity and connectivity solvers, and exhaustive verification over
//! isomorphism classes of small graphs.

pub mod canon;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod hamiltonicity;
pub mod invariants;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph};
pub use graph6::{decode_graph6, encode_graph6};
