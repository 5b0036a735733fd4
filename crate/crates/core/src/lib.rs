//! Exact counting of independent sets by size in small graphs, together with
//! the machinery needed to exhaustively verify extremal statements over the
//! family of `n`-vertex graphs with minimum degree `delta`: canonical forms,
//! isomorphism-free enumeration, named extremal constructions, criticality
//! analysis and a verification driver with JSON reports.

pub mod canon;
pub mod constructions;
pub mod counting;
pub mod criticality;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod verifier;

pub use canon::CanonicalForm;
pub use counting::CountVector;
pub use error::{Error, Result};
pub use graph::Graph;
