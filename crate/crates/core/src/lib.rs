//! Signed and multisigned complete graphs: classifying the multisigns of
//! all Hamiltonian cycles from triangle multisigns, plus brute-force
//! oracles that check the classification.
//!
//! A multisign is an element of `{-1,+1}^m` under componentwise
//! multiplication; `m = 1` is the ordinary signed case. The central entry
//! point is [`classify::classify_hamiltonian`], which runs in `O(n^3)`
//! without enumerating cycles. [`oracle`] enumerates to check it.

pub mod classify;
pub mod cli;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod multisign;
pub mod oracle;
pub mod props;

pub use classify::{
    classify_hamiltonian, classify_triangles, hourglass_condition, hourglass_swap, is_balanced,
    Balance, Basis, HamiltonianClass, HamiltonianVerdict, TriangleClass,
};
pub use error::{Error, Result};
pub use graph::{CycleSeq, MultisignedCompleteGraph};
pub use io::{parse_graph, serialize_graph, DocumentError};
pub use multisign::Multisign;
