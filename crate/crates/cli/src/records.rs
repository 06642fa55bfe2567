//! Structured output records. Field declaration order is the emitted order.

use monopoly_core::solver::SearchStats;
use monopoly_core::{BoundRecord, Status};
use serde::Serialize;

#[derive(Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Serialize)]
pub struct SolveRecord<'a> {
    pub command: &'static str,
    pub graph: GraphInfo,
    pub problem: &'static str,
    pub k: Option<i64>,
    pub status: Status,
    /// Size, or weight for signed problems.
    pub optimum: Option<i64>,
    /// Sorted; the +1 vertices for signed problems.
    pub witness: Option<Vec<usize>>,
    pub bounds: &'a [BoundRecord],
    pub stats: SearchStats,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct VerifyRecord {
    pub command: &'static str,
    pub graph: GraphInfo,
    pub problem: &'static str,
    pub k: Option<i64>,
    pub set: Vec<usize>,
    pub holds: bool,
    pub violator: Option<usize>,
}

#[derive(Serialize)]
pub struct BoundsRecord<'a> {
    pub command: &'static str,
    pub graph: GraphInfo,
    pub k: i64,
    pub bounds: &'a [BoundRecord],
    pub closed_form: Option<i64>,
}

#[derive(Serialize)]
pub struct TransformRecord {
    pub command: &'static str,
    pub graph: GraphInfo,
    pub direction: &'static str,
    pub k: i64,
    pub strict: bool,
    pub input: Vec<usize>,
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub weight: i64,
}

#[derive(Serialize)]
pub struct IdentityRecord {
    pub status: &'static str,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub equal: Option<bool>,
    pub h_order: usize,
    pub limit: Option<usize>,
}

#[derive(Serialize)]
pub struct ReduceRecord {
    pub command: &'static str,
    pub graph: GraphInfo,
    pub h_n: usize,
    pub h_m: usize,
    pub added_vertices: usize,
    pub added_edges: usize,
    pub added_leaves: usize,
    pub out: Option<String>,
    pub origin_map: Option<String>,
    /// H's edge list when no `--out` file was given.
    pub edge_list: Option<String>,
    pub identity: Option<IdentityRecord>,
}

#[derive(Serialize)]
pub struct PropertiesRecord {
    pub balanced_degrees: bool,
    pub even_degrees: bool,
    pub equal_induced_sizes: bool,
    pub cut_identity: bool,
    pub cut: usize,
    pub m_x: usize,
    pub m_y: usize,
}

#[derive(Serialize)]
pub struct PartitionRecord {
    pub command: &'static str,
    pub graph: GraphInfo,
    pub k: i64,
    pub r: usize,
    pub status: &'static str,
    pub parts: Vec<Vec<usize>>,
    pub nodes_explored: u64,
    pub properties: Option<PropertiesRecord>,
}

#[derive(Serialize)]
pub struct GenRecord {
    pub command: &'static str,
    pub spec: String,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct FormulaRecord {
    pub command: &'static str,
    pub spec: String,
    pub k: i64,
    pub value: i64,
    pub solver: Option<i64>,
    pub agrees: Option<bool>,
}
