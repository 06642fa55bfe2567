//! Brute-force reference answers built from the predicates alone. Nothing here
//! touches the solver.

use monopoly_core::predicates as p;
use monopoly_core::{Graph, SignedAssignment, VertexSet};

pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Monopoly(i64),
    TotalDom,
    DefOff(i64),
    SignedTotal(i64),
    Powerful(i64),
    Signed(i64),
}

impl Target {
    pub fn accepts(self, g: &Graph, s: &VertexSet) -> bool {
        let f = || SignedAssignment::from_positive(s.clone());
        match self {
            Target::Monopoly(k) => !s.is_empty() && p::is_k_monopoly(g, s, k).unwrap(),
            Target::TotalDom => !s.is_empty() && p::is_total_dominating(g, s).unwrap(),
            Target::DefOff(k) => {
                p::is_defensive_k_alliance(g, s, k, true).unwrap()
                    && p::is_offensive_k_alliance(g, s, k, true).unwrap()
            }
            Target::SignedTotal(k) => p::is_signed_total_k_dominating(g, &f(), k).unwrap(),
            Target::Powerful(k) => p::is_powerful_k_alliance(g, s, k, true).unwrap(),
            Target::Signed(k) => p::is_signed_k_dominating(g, &f(), k).unwrap(),
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(self, Target::SignedTotal(_) | Target::Signed(_))
    }
}

/// Every subset of V as a [`VertexSet`].
pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= ORACLE_MAX_ORDER);
    (0u64..1 << n).map(move |mask| VertexSet::from_mask(n, mask))
}

/// Smallest accepted set, ties broken by the sorted vertex list.
pub fn minimum_set(g: &Graph, t: Target) -> Option<VertexSet> {
    subsets(g.order())
        .filter(|s| t.accepts(g, s))
        .min_by_key(|s| (s.len(), s.to_vec()))
}

/// Optimum in the solver's units: size, or weight `2|B₁| − n` for signed targets.
pub fn optimum(g: &Graph, t: Target) -> Option<i64> {
    let s = minimum_set(g, t)?;
    let size = s.len() as i64;
    Some(if t.is_signed() { 2 * size - g.order() as i64 } else { size })
}
