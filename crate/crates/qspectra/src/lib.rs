//! Exact spectral toolkit for small simple graphs.
//!
//! Everything spectral here is integer-exact: characteristic polynomials of
//! the adjacency, Laplacian and signless-Laplacian matrices are computed over
//! arbitrary-precision integers, eigenvalue questions are answered by Sturm
//! root counting over the rationals, and spectral-determination verdicts come
//! from isomorphism-free exhaustive enumeration at the target's order. No
//! floating point participates in any decision.

pub mod cache;
pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod lab;
pub mod poly;
pub mod spectra;

pub use canon::{canonical_form, CanonicalCode, CanonicalLabeling};
pub use enumerate::{Enumerator, EXHAUSTIVE_CAP};
pub use families::FamilySpec;
pub use graph::{ComponentClass, Graph, StructuralProfile};
pub use spectra::{CharPoly, MatrixKind, QInvariants};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A family constructor was called with parameters violating its contract.
    #[error("{family}: parameter constraint violated: {constraint}")]
    Parameter {
        family: &'static str,
        constraint: String,
    },

    /// A construction would exceed the order cap of the graph representation.
    #[error("order {requested} exceeds the cap of {cap} vertices")]
    OrderCap { requested: usize, cap: usize },

    /// A vertex index was out of range for the graph it was used with.
    #[error("vertex index {index} out of range for a graph of order {order}")]
    VertexIndex { index: usize, order: usize },

    /// Malformed graph6 text.
    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// A request beyond the exhaustive-enumeration cap.
    #[error("order {requested} is beyond the exhaustive cap of {cap}")]
    Scope { requested: usize, cap: usize },

    /// A theorem instance whose hypotheses do not hold.
    #[error("{theorem}: hypothesis violated: {check}")]
    Hypothesis {
        theorem: String,
        check: String,
    },

    /// Malformed cache file contents.
    #[error("cache line {line}: {reason}")]
    Cache { line: usize, reason: String },

    /// Malformed family-spec text.
    #[error("cannot parse family spec {input:?}: {reason}")]
    FamilyParse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
