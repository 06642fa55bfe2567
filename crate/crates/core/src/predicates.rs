//! Decision procedures for k-control, k-monopolies, total domination, signed
//! (total) k-domination and defensive/offensive/powerful k-alliances.
//!
//! Every predicate evaluates the literal arithmetic condition for any integer
//! `k`; whether `k` is meaningful for a given graph is the caller's business.
//! Half-integer thresholds `δ(v)/2 + k` are compared in doubled form.
//!
//! The `*_violation` variants return the first vertex (lowest index) at which
//! the condition fails.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A ±1 labelling of the vertices, stored as the set `B₁` of `+1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedAssignment {
    positive: VertexSet,
}

impl SignedAssignment {
    pub fn from_positive(positive: VertexSet) -> Self {
        SignedAssignment { positive }
    }

    /// Builds `f = (B₁, B₋₁)`; the two sets must partition the universe.
    pub fn from_parts(b1: VertexSet, b_minus1: VertexSet) -> Result<Self> {
        if b1.universe() != b_minus1.universe() {
            return Err(Error::SetMismatch { expected: b1.universe(), found: b_minus1.universe() });
        }
        if !b1.is_disjoint(&b_minus1) || b1.len() + b_minus1.len() != b1.universe() {
            return Err(Error::InvalidParameter("B1 and B-1 must partition V".into()));
        }
        Ok(SignedAssignment { positive: b1 })
    }

    pub fn all_positive(n: usize) -> Self {
        Self::from_positive(VertexSet::full(n))
    }

    pub fn b1(&self) -> &VertexSet {
        &self.positive
    }

    pub fn b_minus1(&self) -> VertexSet {
        self.positive.complement()
    }

    pub fn value(&self, v: usize) -> i64 {
        if self.positive.contains(v) {
            1
        } else {
            -1
        }
    }

    /// Σ f(v) = |B₁| − |B₋₁|.
    pub fn weight(&self) -> i64 {
        2 * self.positive.len() as i64 - self.positive.universe() as i64
    }
}

fn deg(g: &Graph, v: usize) -> i64 {
    g.degree(v) as i64
}

fn din(g: &Graph, v: usize, s: &VertexSet) -> i64 {
    g.degree_in_unchecked(v, s) as i64
}

fn first_failure(g: &Graph, mut ok: impl FnMut(usize) -> bool) -> Option<usize> {
    (0..g.order()).find(|&v| !ok(v))
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.order() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n: g.order() })
    }
}

/// `δ_M(v) ≥ δ(v)/2 + k`, evaluated as `2δ_M(v) ≥ δ(v) + 2k`.
pub fn controlled_by_definition(g: &Graph, m: &VertexSet, v: usize, k: i64) -> bool {
    2 * din(g, v, m) >= deg(g, v) + 2 * k
}

/// `δ_M(v) ≥ δ_{M̄}(v) + 2k`.
pub fn controlled_by_balance(g: &Graph, m: &VertexSet, v: usize, k: i64) -> bool {
    let inside = din(g, v, m);
    let outside = deg(g, v) - inside;
    inside >= outside + 2 * k
}

/// `δ_{M̄}(v) ≤ δ(v)/2 − k`, evaluated as `2δ_{M̄}(v) ≤ δ(v) − 2k`.
pub fn controlled_by_complement(g: &Graph, m: &VertexSet, v: usize, k: i64) -> bool {
    let outside = g.degree_in_unchecked(v, &m.complement()) as i64;
    2 * outside <= deg(g, v) - 2 * k
}

pub fn is_k_controlled(g: &Graph, m: &VertexSet, v: usize, k: i64) -> Result<bool> {
    check_vertex(g, v)?;
    g.check_set(m)?;
    Ok(controlled_by_definition(g, m, v, k))
}

pub fn monopoly_violation(g: &Graph, m: &VertexSet, k: i64) -> Result<Option<usize>> {
    g.check_set(m)?;
    if m.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(first_failure(g, |v| controlled_by_definition(g, m, v, k)))
}

pub fn is_k_monopoly(g: &Graph, m: &VertexSet, k: i64) -> Result<bool> {
    Ok(monopoly_violation(g, m, k)?.is_none())
}

pub fn total_domination_violation(g: &Graph, d: &VertexSet) -> Result<Option<usize>> {
    g.check_set(d)?;
    Ok(first_failure(g, |v| din(g, v, d) >= 1))
}

pub fn is_total_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    Ok(total_domination_violation(g, d)?.is_none())
}

/// Every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(g.dominates(s))
}

/// f(N(v)) = δ_{B₁}(v) − δ_{B₋₁}(v).
pub fn open_sum(g: &Graph, f: &SignedAssignment, v: usize) -> i64 {
    2 * din(g, v, f.b1()) - deg(g, v)
}

/// f(N[v]) = f(N(v)) + f(v).
pub fn closed_sum(g: &Graph, f: &SignedAssignment, v: usize) -> i64 {
    open_sum(g, f, v) + f.value(v)
}

pub fn signed_total_violation(g: &Graph, f: &SignedAssignment, k: i64) -> Result<Option<usize>> {
    g.check_set(f.b1())?;
    Ok(first_failure(g, |v| open_sum(g, f, v) >= k))
}

pub fn is_signed_total_k_dominating(g: &Graph, f: &SignedAssignment, k: i64) -> Result<bool> {
    Ok(signed_total_violation(g, f, k)?.is_none())
}

pub fn signed_violation(g: &Graph, f: &SignedAssignment, k: i64) -> Result<Option<usize>> {
    g.check_set(f.b1())?;
    Ok(first_failure(g, |v| closed_sum(g, f, v) >= k))
}

pub fn is_signed_k_dominating(g: &Graph, f: &SignedAssignment, k: i64) -> Result<bool> {
    Ok(signed_violation(g, f, k)?.is_none())
}

// δ_S(v) ≥ δ_{S̄}(v) + k
fn alliance_condition(g: &Graph, s: &VertexSet, v: usize, k: i64) -> bool {
    let inside = din(g, v, s);
    inside >= deg(g, v) - inside + k
}

fn defensive_failure(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Option<usize> {
    first_failure(g, |v| {
        if s.contains(v) {
            alliance_condition(g, s, v, k)
        } else {
            !global || din(g, v, s) > 0
        }
    })
}

fn offensive_failure(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Option<usize> {
    first_failure(g, |v| {
        if s.contains(v) {
            return true;
        }
        let in_boundary = din(g, v, s) > 0;
        if !in_boundary {
            return !global;
        }
        alliance_condition(g, s, v, k)
    })
}

/// First vertex violating the defensive condition (members of `s`) or, with
/// `global`, the domination condition (non-members). Empty sets are rejected.
pub fn defensive_violation(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Result<Option<usize>> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(defensive_failure(g, s, k, global))
}

/// First vertex of `∂S` violating the offensive condition, or with `global`
/// the first undominated vertex. Empty sets are rejected.
pub fn offensive_violation(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Result<Option<usize>> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(offensive_failure(g, s, k, global))
}

/// Alliances are nonempty by definition, so the empty set yields `false`.
pub fn is_defensive_k_alliance(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Result<bool> {
    g.check_set(s)?;
    Ok(!s.is_empty() && defensive_failure(g, s, k, global).is_none())
}

pub fn is_offensive_k_alliance(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Result<bool> {
    g.check_set(s)?;
    Ok(!s.is_empty() && offensive_failure(g, s, k, global).is_none())
}

/// Defensive k-alliance and offensive (k+2)-alliance.
pub fn is_powerful_k_alliance(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Result<bool> {
    Ok(is_defensive_k_alliance(g, s, k, global)? && is_offensive_k_alliance(g, s, k + 2, global)?)
}

pub fn powerful_violation(g: &Graph, s: &VertexSet, k: i64, global: bool) -> Result<Option<usize>> {
    let d = defensive_violation(g, s, k, global)?;
    let o = offensive_violation(g, s, k + 2, global)?;
    Ok(match (d, o) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    })
}
