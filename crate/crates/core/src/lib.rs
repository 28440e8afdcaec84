//! Degree-sequence realization by cactus graph families.
//!
//! - [`seq`]: sequences, parsing, and the derived parameters.
//! - [`graph`]: simple graphs, block decomposition and family membership.
//! - [`decide`]: exact realizability predicates.
//! - [`realize`]: linear-time witness construction.
//! - [`oracle`]: exhaustive enumeration at small `n`.

pub mod decide;
pub mod family;
pub mod graph;
pub mod oracle;
pub mod realize;
pub mod seq;

pub use decide::{decide, decide_forcibly, explain, Forcibly, Rule, Verdict};
pub use family::{Family, FamilySet};
pub use graph::{
    block_decomposition, degree_sequence_of, euler_cycle_identity, is_member, verify_realization,
    BlockDecomposition, Graph, GraphError,
};
pub use realize::{realize, realize_detailed, RealizeError, Realization, RealizationState};
pub use seq::{parse_sequence, DegreeSequence, ParseError, SequenceParams};
