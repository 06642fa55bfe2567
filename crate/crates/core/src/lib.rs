//! Open k-monopolies in graphs.
//!
//! A set `M` k-controls a vertex `v` when `δ_M(v) ≥ δ(v)/2 + k`, and is an
//! open k-monopoly when it k-controls every vertex. This crate provides the
//! predicates for monopolies and the closely related alliance and signed
//! domination notions, exact minimisers with certificates, the closed-form
//! bounds and exact values, certificate conversions, the total-domination
//! reduction gadget, and partitions into monopolies.

mod arith;
pub mod bounds;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod partition;
pub mod predicates;
pub mod reduction;
pub mod solver;
pub mod transforms;

pub use bounds::{BoundRecord, Side};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{valid_k_range, Graph, VertexSet};
pub use io::{parse_edge_list, write_edge_list, ParseError};
pub use partition::{PartitionResult, PartitionStatus};
pub use predicates::SignedAssignment;
pub use solver::{Problem, SolveReport, SolverOptions, Status, Witness};
