//! Exact minimisation by depth-first branch and bound.
//!
//! All supported problems reduce to the same shape: find a smallest set `S`
//! such that every vertex `v` has at least `need_in(v)` neighbors in `S` when
//! `v ∈ S` and at least `need_out(v)` when `v ∉ S`. Signed problems search
//! over `B₁`, whose weight `2|B₁| − n` grows with `|B₁|`.
//!
//! Search decides vertices in descending-degree order, excluding before
//! including, and prunes on
//! - per-vertex capacity: decided-in plus undecided neighbors must still be
//!   able to reach the requirement,
//! - a deficit lower bound on the number of vertices still to add,
//! - a static lower bound (for monopolies, the max-degree bound), which stops
//!   the search once the incumbent reaches it.
//!
//! When every `need_in(v) ≤ need_out(v)` the target is monotone (supersets of
//! feasible sets stay feasible), so `V` itself decides feasibility up front.
//!
//! The tree is split at a fixed depth into independent subproblems which run
//! on a rayon pool. Each subproblem starts from the same greedy incumbent, so
//! node counts do not depend on the worker count. A final canonicalisation
//! pass returns the lexicographically smallest optimal witness.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::ceil_div;
use crate::bounds::{self, BoundRecord};
use crate::error::{Error, Result};
use crate::graph::{check_k, Graph, VertexSet};
use crate::predicates::{self, SignedAssignment};

/// Largest order accepted without [`SolverOptions::allow_large`].
pub const DEFAULT_MAX_ORDER: usize = 64;

const SPLIT_DEPTH: usize = 6;

/// Largest order [`exhaustive_minimum`] will enumerate.
pub const EXHAUSTIVE_MAX_ORDER: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "problem", rename_all = "kebab-case")]
pub enum Problem {
    /// Open k-monopoly, 𝓜_k(G).
    Monopoly { k: i64 },
    /// Total domination, γ_t(G).
    TotalDomination,
    /// Global defensive k-alliance that is also a global offensive k-alliance.
    DefensiveOffensive { k: i64 },
    /// Signed total k-domination, γ_st^k(G).
    SignedTotal { k: i64 },
    /// Global powerful k-alliance, γ_k^p(G).
    Powerful { k: i64 },
    /// Signed (closed-neighborhood) k-domination, γ_s^k(G).
    Signed { k: i64 },
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::Monopoly { .. } => "monopoly",
            Problem::TotalDomination => "total-dom",
            Problem::DefensiveOffensive { .. } => "def-off-alliance",
            Problem::SignedTotal { .. } => "signed-total",
            Problem::Powerful { .. } => "powerful",
            Problem::Signed { .. } => "signed",
        }
    }

    pub fn k(&self) -> Option<i64> {
        match *self {
            Problem::TotalDomination => None,
            Problem::Monopoly { k }
            | Problem::DefensiveOffensive { k }
            | Problem::SignedTotal { k }
            | Problem::Powerful { k }
            | Problem::Signed { k } => Some(k),
        }
    }

    /// Signed problems report weights and ±1 witnesses.
    pub fn is_signed(&self) -> bool {
        matches!(self, Problem::SignedTotal { .. } | Problem::Signed { .. })
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        match *self {
            Problem::Monopoly { k } => check_k(g, k),
            Problem::SignedTotal { k } | Problem::Signed { k } if k < 1 => Err(
                Error::InvalidParameter(format!("signed domination levels start at 1, got {k}")),
            ),
            _ => Ok(()),
        }
    }

    /// First vertex at which `s` fails this problem's condition, evaluated by
    /// the predicates module. The empty set is an error for set problems.
    pub fn violation(&self, g: &Graph, s: &VertexSet) -> Result<Option<usize>> {
        let f = || SignedAssignment::from_positive(s.clone());
        match *self {
            Problem::Monopoly { k } => predicates::monopoly_violation(g, s, k),
            Problem::TotalDomination => {
                if s.is_empty() {
                    return Err(Error::EmptySet);
                }
                predicates::total_domination_violation(g, s)
            }
            Problem::DefensiveOffensive { k } => {
                let d = predicates::defensive_violation(g, s, k, true)?;
                let o = predicates::offensive_violation(g, s, k, true)?;
                Ok(min_option(d, o))
            }
            Problem::SignedTotal { k } => predicates::signed_total_violation(g, &f(), k),
            Problem::Powerful { k } => predicates::powerful_violation(g, s, k, true),
            Problem::Signed { k } => predicates::signed_violation(g, &f(), k),
        }
    }

    pub fn is_feasible(&self, g: &Graph, s: &VertexSet) -> bool {
        matches!(self.violation(g, s), Ok(None))
    }

    fn requirements(&self, g: &Graph) -> Requirements {
        let n = g.order();
        let mut need_in = Vec::with_capacity(n);
        let mut need_out = Vec::with_capacity(n);
        for v in 0..n {
            let d = g.degree(v) as i64;
            let (inside, outside) = match *self {
                // 2δ_S(v) ≥ δ(v) + 2k regardless of membership
                Problem::Monopoly { k } => {
                    let r = ceil_div(d + 2 * k, 2);
                    (r, r)
                }
                Problem::TotalDomination => (1, 1),
                // members: 2δ_S ≥ δ + k; non-members must be dominated and then
                // lie in ∂S, where the same inequality applies
                Problem::DefensiveOffensive { k } => {
                    let r = ceil_div(d + k, 2);
                    (r, r.max(1))
                }
                Problem::Powerful { k } => (ceil_div(d + k, 2), ceil_div(d + k + 2, 2).max(1)),
                // 2δ_S(v) − δ(v) ≥ k
                Problem::SignedTotal { k } => {
                    let r = ceil_div(d + k, 2);
                    (r, r)
                }
                // 2δ_S(v) − δ(v) ± 1 ≥ k
                Problem::Signed { k } => (ceil_div(d + k - 1, 2), ceil_div(d + k + 1, 2)),
            };
            need_in.push(inside.max(0));
            need_out.push(outside.max(0));
        }
        Requirements { need_in, need_out }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{} (k = {k})", self.name()),
            None => write!(f, "{}", self.name()),
        }
    }
}

fn min_option(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Set(VertexSet),
    Signed(SignedAssignment),
}

impl Witness {
    /// The underlying vertex set (`B₁` for signed witnesses).
    pub fn set(&self) -> &VertexSet {
        match self {
            Witness::Set(s) => s,
            Witness::Signed(f) => f.b1(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Optimal,
    Infeasible,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub canonicalization_nodes: u64,
    pub subproblems: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub problem: Problem,
    pub status: Status,
    /// Cardinality, or weight for signed problems; `None` when infeasible.
    pub optimum: Option<i64>,
    pub witness: Option<Witness>,
    pub stats: SearchStats,
    pub bounds_used: Vec<BoundRecord>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolverOptions {
    /// Worker threads; `None` uses every core.
    pub workers: Option<usize>,
    /// Lift the [`DEFAULT_MAX_ORDER`] guard.
    pub allow_large: bool,
}

struct Requirements {
    need_in: Vec<i64>,
    need_out: Vec<i64>,
}

impl Requirements {
    fn monotone(&self) -> bool {
        self.need_in.iter().zip(&self.need_out).all(|(a, b)| a <= b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decision {
    Open,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    decision: Vec<Decision>,
    count_in: Vec<i64>,
    count_open: Vec<i64>,
    size: usize,
    nodes: u64,
}

struct Incumbent {
    /// Only solutions strictly smaller than this are of interest.
    limit: usize,
    best: Option<VertexSet>,
    first_only: bool,
}

impl Incumbent {
    fn done(&self, floor: usize) -> bool {
        (self.first_only && self.best.is_some()) || self.limit <= floor
    }
}

struct Engine<'a> {
    g: &'a Graph,
    req: Requirements,
    order: Vec<usize>,
    allow_empty: bool,
    max_degree: i64,
    /// No feasible set is smaller than this.
    floor: usize,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, problem: &Problem) -> Self {
        let req = problem.requirements(g);
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let allow_empty = problem.is_signed();
        let mut floor = (0..g.order())
            .map(|v| req.need_in[v].min(req.need_out[v]))
            .max()
            .unwrap_or(0)
            .max(0) as usize;
        if !allow_empty {
            floor = floor.max(1);
        }
        if let Problem::Monopoly { k } = problem {
            if let Ok(b) = bounds::general_bounds(g, *k) {
                floor = floor.max(b.lower.max(0) as usize);
            }
        }
        Engine {
            g,
            req,
            order,
            allow_empty,
            max_degree: g.max_degree() as i64,
            floor,
        }
    }

    fn fresh_state(&self) -> State {
        let n = self.g.order();
        State {
            decision: vec![Decision::Open; n],
            count_in: vec![0; n],
            count_open: (0..n).map(|v| self.g.degree(v) as i64).collect(),
            size: 0,
            nodes: 0,
        }
    }

    fn need(&self, st: &State, v: usize) -> i64 {
        match st.decision[v] {
            Decision::In => self.req.need_in[v],
            Decision::Out => self.req.need_out[v],
            Decision::Open => self.req.need_in[v].min(self.req.need_out[v]),
        }
    }

    fn can_satisfy(&self, st: &State, v: usize) -> bool {
        st.count_in[v] + st.count_open[v] >= self.need(st, v)
    }

    fn assign(&self, st: &mut State, v: usize, d: Decision) {
        debug_assert_eq!(st.decision[v], Decision::Open);
        st.decision[v] = d;
        let inc = (d == Decision::In) as i64;
        st.size += inc as usize;
        for &u in self.g.neighbors(v) {
            st.count_open[u] -= 1;
            st.count_in[u] += inc;
        }
    }

    fn unassign(&self, st: &mut State, v: usize) {
        let inc = (st.decision[v] == Decision::In) as i64;
        st.decision[v] = Decision::Open;
        st.size -= inc as usize;
        for &u in self.g.neighbors(v) {
            st.count_open[u] += 1;
            st.count_in[u] -= inc;
        }
    }

    fn locally_feasible(&self, st: &State, v: usize) -> bool {
        self.can_satisfy(st, v) && self.g.neighbors(v).iter().all(|&u| self.can_satisfy(st, u))
    }

    /// Lower bound on the final size of any completion of `st`.
    fn lower_bound(&self, st: &State) -> usize {
        let mut worst = 0;
        let mut total = 0;
        for v in 0..self.g.order() {
            let deficit = (self.need(st, v) - st.count_in[v]).max(0);
            worst = worst.max(deficit);
            total += deficit;
        }
        let spread = if self.max_degree > 0 { ceil_div(total, self.max_degree) } else { total };
        st.size + worst.max(spread) as usize
    }

    fn next_open(&self, st: &State, mut depth: usize) -> usize {
        while depth < self.order.len() && st.decision[self.order[depth]] != Decision::Open {
            depth += 1;
        }
        depth
    }

    fn dfs(&self, st: &mut State, depth: usize, inc: &mut Incumbent) {
        st.nodes += 1;
        if self.lower_bound(st) >= inc.limit {
            return;
        }
        let depth = self.next_open(st, depth);
        if depth == self.order.len() {
            if st.size == 0 && !self.allow_empty {
                return;
            }
            // capacity checks are exact once nothing is open
            debug_assert!((0..self.g.order()).all(|v| st.count_in[v] >= self.need(st, v)));
            inc.limit = st.size;
            let mut set = VertexSet::empty(self.g.order());
            for (v, d) in st.decision.iter().enumerate() {
                if *d == Decision::In {
                    set.insert(v);
                }
            }
            inc.best = Some(set);
            return;
        }
        let v = self.order[depth];
        for d in [Decision::Out, Decision::In] {
            self.assign(st, v, d);
            if self.locally_feasible(st, v) {
                self.dfs(st, depth + 1, inc);
            }
            self.unassign(st, v);
            if inc.done(self.floor) {
                return;
            }
        }
    }

    /// Start from `V` (if feasible) and greedily drop low-degree vertices.
    fn warm_start(&self) -> Option<VertexSet> {
        let mut st = self.fresh_state();
        for v in 0..self.g.order() {
            self.assign(&mut st, v, Decision::In);
        }
        if !(0..self.g.order()).all(|v| self.can_satisfy(&st, v)) {
            return None;
        }
        let mut by_degree: Vec<usize> = (0..self.g.order()).collect();
        by_degree.sort_by_key(|&v| (self.g.degree(v), std::cmp::Reverse(v)));
        for v in by_degree {
            if st.size == 1 && !self.allow_empty {
                break;
            }
            self.unassign(&mut st, v);
            self.assign(&mut st, v, Decision::Out);
            if !self.locally_feasible(&st, v) {
                self.unassign(&mut st, v);
                self.assign(&mut st, v, Decision::In);
            }
        }
        let mut set = VertexSet::empty(self.g.order());
        for v in (0..self.g.order()).filter(|&v| st.decision[v] == Decision::In) {
            set.insert(v);
        }
        Some(set)
    }

    /// Fixed-depth prefixes of the branching order that survive local checks.
    fn prefixes(&self) -> (Vec<State>, u64) {
        let depth = SPLIT_DEPTH.min(self.order.len());
        let mut frontier = vec![self.fresh_state()];
        let mut nodes = 0;
        for &v in &self.order[..depth] {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for st in frontier {
                for d in [Decision::Out, Decision::In] {
                    let mut child = st.clone();
                    self.assign(&mut child, v, d);
                    nodes += 1;
                    if self.locally_feasible(&child, v) {
                        next.push(child);
                    }
                }
            }
            frontier = next;
        }
        (frontier, nodes)
    }

    fn search(&self, limit: usize, workers: Option<usize>) -> Result<(Option<VertexSet>, SearchStats)> {
        let (prefixes, split_nodes) = self.prefixes();
        let depth = SPLIT_DEPTH.min(self.order.len());
        let run = |st: &State| {
            let mut st = st.clone();
            st.nodes = 0;
            let mut inc = Incumbent { limit, best: None, first_only: false };
            self.dfs(&mut st, depth, &mut inc);
            (inc.best, st.nodes)
        };
        let results: Vec<(Option<VertexSet>, u64)> = match workers {
            Some(1) => prefixes.iter().map(run).collect(),
            _ => {
                let mut builder = rayon::ThreadPoolBuilder::new();
                if let Some(w) = workers {
                    builder = builder.num_threads(w);
                }
                let pool = builder
                    .build()
                    .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
                pool.install(|| prefixes.par_iter().map(run).collect())
            }
        };
        let mut stats = SearchStats {
            nodes_explored: split_nodes,
            canonicalization_nodes: 0,
            subproblems: prefixes.len(),
        };
        let mut best: Option<VertexSet> = None;
        for (found, nodes) in results {
            stats.nodes_explored += nodes;
            if let Some(s) = found {
                if best.as_ref().is_none_or(|b| s.len() < b.len()) {
                    best = Some(s);
                }
            }
        }
        Ok((best, stats))
    }

    /// Lexicographically smallest sorted witness of size `size`: walk vertices
    /// in index order, keeping each one in whenever an optimal completion
    /// still exists.
    fn canonicalize(&self, size: usize) -> (VertexSet, u64) {
        let mut fixed = self.fresh_state();
        let mut nodes = 0;
        for v in 0..self.g.order() {
            self.assign(&mut fixed, v, Decision::In);
            let keep = fixed.size <= size && self.locally_feasible(&fixed, v) && {
                let mut st = fixed.clone();
                st.nodes = 0;
                let mut inc = Incumbent { limit: size + 1, best: None, first_only: true };
                self.dfs(&mut st, 0, &mut inc);
                nodes += st.nodes;
                inc.best.is_some()
            };
            if !keep {
                self.unassign(&mut fixed, v);
                self.assign(&mut fixed, v, Decision::Out);
            }
        }
        let mut set = VertexSet::empty(self.g.order());
        for v in (0..self.g.order()).filter(|&v| fixed.decision[v] == Decision::In) {
            set.insert(v);
        }
        (set, nodes)
    }
}

/// Solves `problem` on `g` exactly.
pub fn solve(g: &Graph, problem: Problem, opts: &SolverOptions) -> Result<SolveReport> {
    problem.validate(g)?;
    if g.order() > DEFAULT_MAX_ORDER && !opts.allow_large {
        return Err(Error::TooLarge { n: g.order(), limit: DEFAULT_MAX_ORDER });
    }
    let engine = Engine::new(g, &problem);
    let bounds_used = match problem {
        Problem::Monopoly { k } => bounds::applicable_bounds(g, k),
        _ => vec![],
    };

    let warm = engine.warm_start();
    let infeasible = SolveReport {
        problem,
        status: Status::Infeasible,
        optimum: None,
        witness: None,
        stats: SearchStats::default(),
        bounds_used: bounds_used.clone(),
    };
    if warm.is_none() && engine.req.monotone() {
        return Ok(infeasible);
    }

    let limit = warm.as_ref().map_or(g.order() + 1, |w| w.len());
    let (found, mut stats) = if warm.as_ref().is_some_and(|w| w.len() <= engine.floor) {
        (None, SearchStats::default())
    } else {
        engine.search(limit, opts.workers)?
    };
    let Some(best) = found.or(warm) else {
        return Ok(SolveReport { stats, ..infeasible });
    };

    let (witness_set, canon_nodes) = engine.canonicalize(best.len());
    stats.canonicalization_nodes = canon_nodes;
    debug_assert_eq!(witness_set.len(), best.len());
    debug_assert!(problem.is_feasible(g, &witness_set));

    let n = g.order() as i64;
    let size = witness_set.len() as i64;
    let (optimum, witness) = if problem.is_signed() {
        (2 * size - n, Witness::Signed(SignedAssignment::from_positive(witness_set)))
    } else {
        (size, Witness::Set(witness_set))
    };
    Ok(SolveReport {
        problem,
        status: Status::Optimal,
        optimum: Some(optimum),
        witness: Some(witness),
        stats,
        bounds_used,
    })
}

pub fn min_k_monopoly(g: &Graph, k: i64) -> Result<SolveReport> {
    solve(g, Problem::Monopoly { k }, &SolverOptions::default())
}

pub fn min_total_dominating(g: &Graph) -> Result<SolveReport> {
    solve(g, Problem::TotalDomination, &SolverOptions::default())
}

pub fn min_global_def_off_alliance(g: &Graph, k: i64) -> Result<SolveReport> {
    solve(g, Problem::DefensiveOffensive { k }, &SolverOptions::default())
}

pub fn min_signed_total_k_dom(g: &Graph, k: i64) -> Result<SolveReport> {
    solve(g, Problem::SignedTotal { k }, &SolverOptions::default())
}

pub fn min_global_powerful_alliance(g: &Graph, k: i64) -> Result<SolveReport> {
    solve(g, Problem::Powerful { k }, &SolverOptions::default())
}

pub fn min_signed_k_dom(g: &Graph, k: i64) -> Result<SolveReport> {
    solve(g, Problem::Signed { k }, &SolverOptions::default())
}

/// Plain enumeration by increasing size using only the predicates; returns the
/// lexicographically smallest minimum set, or `None` when nothing qualifies.
/// Used for cross-checking reports, not for solving.
pub fn exhaustive_minimum(g: &Graph, problem: Problem) -> Result<Option<VertexSet>> {
    problem.validate(g)?;
    let n = g.order();
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::TooLarge { n, limit: EXHAUSTIVE_MAX_ORDER });
    }
    let start = if problem.is_signed() { 0 } else { 1 };
    for size in start..=n {
        let mut chosen = Vec::with_capacity(size);
        if let Some(s) = first_combination(g, problem, size, 0, &mut chosen) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn first_combination(
    g: &Graph,
    problem: Problem,
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
) -> Option<VertexSet> {
    if chosen.len() == size {
        let s = VertexSet::from_vertices(g.order(), chosen).unwrap();
        return problem.is_feasible(g, &s).then_some(s);
    }
    for v in from..=g.order() - (size - chosen.len()) {
        chosen.push(v);
        let found = first_combination(g, problem, size, v + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
