//! Partitions of the vertex set into r pairwise-disjoint k-monopolies.

use crate::arith::ceil_div;
use crate::error::{Error, Result};
use crate::graph::{check_k, Graph, VertexSet};
use crate::predicates;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionStatus {
    Found,
    NoneExists,
    /// Excluded without search: `r > 2 − 2k` or `k > 0`.
    BoundExcluded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionResult {
    /// Sorted by smallest member; empty unless `status == Found`.
    pub parts: Vec<VertexSet>,
    pub r: usize,
    pub k: i64,
    pub status: PartitionStatus,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct PartitionOptions {
    /// Skip search when the part-count bound already rules the partition out.
    /// Disabling it lets the bound itself be checked empirically.
    pub bound_precheck: bool,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions { bound_precheck: true }
    }
}

/// True when `r` k-monopoly parts are ruled out by `r ≤ 2 − 2k, k ≤ 0`.
pub fn excluded_by_bound(k: i64, r: usize) -> bool {
    k > 0 || r as i64 > 2 - 2 * k
}

struct Search<'a> {
    g: &'a Graph,
    r: usize,
    need: Vec<i64>,
    part: Vec<Option<usize>>,
    /// count[p][v]: neighbors of v already placed in part p
    count: Vec<Vec<i64>>,
    open: Vec<i64>,
    used: usize,
    nodes: u64,
}

impl Search<'_> {
    fn viable(&self, v: usize) -> bool {
        let check = |u: usize| (0..self.r).all(|p| self.count[p][u] + self.open[u] >= self.need[u]);
        check(v) && self.g.neighbors(v).iter().all(|&u| check(u))
    }

    fn place(&mut self, v: usize, p: usize) {
        self.part[v] = Some(p);
        for &u in self.g.neighbors(v) {
            self.count[p][u] += 1;
            self.open[u] -= 1;
        }
    }

    fn unplace(&mut self, v: usize) {
        let p = self.part[v].take().unwrap();
        for &u in self.g.neighbors(v) {
            self.count[p][u] -= 1;
            self.open[u] += 1;
        }
    }

    fn run(&mut self, v: usize) -> bool {
        self.nodes += 1;
        let n = self.g.order();
        if v == n {
            return self.used == self.r;
        }
        // not enough vertices left to open the remaining parts
        if self.r - self.used > n - v {
            return false;
        }
        // parts are opened in order, so part p first appears before part p+1
        let limit = (self.used + 1).min(self.r);
        for p in 0..limit {
            let opened = p == self.used;
            self.place(v, p);
            if opened {
                self.used += 1;
            }
            if self.viable(v) && self.run(v + 1) {
                return true;
            }
            if opened {
                self.used -= 1;
            }
            self.unplace(v);
        }
        false
    }
}

pub fn find_monopoly_partition(
    g: &Graph,
    k: i64,
    r: usize,
    opts: &PartitionOptions,
) -> Result<PartitionResult> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("a partition needs r >= 2 parts, got {r}")));
    }
    check_k(g, k)?;
    let mut result = PartitionResult {
        parts: vec![],
        r,
        k,
        status: PartitionStatus::NoneExists,
        nodes_explored: 0,
    };
    if opts.bound_precheck && excluded_by_bound(k, r) {
        result.status = PartitionStatus::BoundExcluded;
        return Ok(result);
    }
    let n = g.order();
    let mut search = Search {
        g,
        r,
        need: (0..n).map(|v| ceil_div(g.degree(v) as i64 + 2 * k, 2)).collect(),
        part: vec![None; n],
        count: vec![vec![0; n]; r],
        open: (0..n).map(|v| g.degree(v) as i64).collect(),
        used: 0,
        nodes: 0,
    };
    let found = r <= n && search.run(0);
    result.nodes_explored = search.nodes;
    if found {
        let mut parts = vec![VertexSet::empty(n); r];
        for (v, p) in search.part.iter().enumerate() {
            parts[p.unwrap()].insert(v);
        }
        debug_assert!(parts.iter().all(|s| predicates::is_k_monopoly(g, s, k) == Ok(true)));
        result.parts = parts;
        result.status = PartitionStatus::Found;
    }
    Ok(result)
}

/// Structural facts about a partition of V into two 0-monopolies `{X, Y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPartReport {
    /// δ_X(v) = δ_Y(v) for every v.
    pub balanced_degrees: bool,
    /// Every degree is even.
    pub even_degrees: bool,
    /// |E(⟨X⟩)| = |E(⟨Y⟩)|.
    pub equal_induced_sizes: bool,
    /// c(X, Y) = m − 2|E(⟨X⟩)|.
    pub cut_identity: bool,
    pub cut: usize,
    pub m_x: usize,
    pub m_y: usize,
}

impl TwoPartReport {
    pub fn all_hold(&self) -> bool {
        self.balanced_degrees && self.even_degrees && self.equal_induced_sizes && self.cut_identity
    }
}

pub fn check_two_part_properties(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<TwoPartReport> {
    g.check_set(x)?;
    g.check_set(y)?;
    if !x.is_disjoint(y) || x.len() + y.len() != g.order() {
        return Err(Error::InvalidParameter("X and Y must partition V".into()));
    }
    for (name, s) in [("X", x), ("Y", y)] {
        if let Some(vertex) = predicates::monopoly_violation(g, s, 0)? {
            return Err(Error::Violation { what: format!("0-monopoly condition for {name}"), vertex });
        }
    }
    let n = g.order();
    let cut = g.cut_size(x)?;
    let m_x = g.induced_size(x)?;
    let m_y = g.induced_size(y)?;
    Ok(TwoPartReport {
        balanced_degrees: (0..n).all(|v| g.degree_in(v, x).ok() == g.degree_in(v, y).ok()),
        even_degrees: (0..n).all(|v| g.degree(v).is_multiple_of(2)),
        equal_induced_sizes: m_x == m_y,
        cut_identity: cut + 2 * m_x == g.size(),
        cut,
        m_x,
        m_y,
    })
}
