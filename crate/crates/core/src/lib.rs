//! Multiplicative Zagreb indices of cactus graphs: exact evaluation, extremal
//! bounds and constructions, improving rewrite moves and exhaustive checks.

pub mod bounds;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod indices;
pub mod rewrite;

pub use error::{Error, Result};
pub use graph::{CactusGraph, Graph};
pub use indices::{Exponent, Index, IndexValue};
