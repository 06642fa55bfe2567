//! Closed-form bounds and exact values for the k-monopoly number 𝓜_k(G).
//!
//! Every ceiling/floor below uses mathematical floor division, so negative
//! `k` rounds the same way the real-valued formulas do.

use serde::Serialize;

use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{check_k, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
    Exact,
}

/// A bound value together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub name: &'static str,
    pub value: i64,
    pub side: Side,
    pub applicability: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralBounds {
    pub lower: i64,
    pub upper: i64,
}

/// `max(1, ⌈(Δ+2k)/2⌉) ≤ 𝓜_k(G) ≤ n − ⌊(δ−2k)/2⌋`.
///
/// A vertex u of maximum degree needs `δ_M(u) ≥ Δ/2 + k`. When u lies in M
/// this forces one more vertex, but a minimum k-monopoly need not contain u,
/// so the often-quoted `⌈(Δ+2k+2)/2⌉` is not a valid lower bound; see
/// [`max_degree_member_bound`].
pub fn general_bounds(g: &Graph, k: i64) -> Result<GeneralBounds> {
    check_k(g, k)?;
    let (n, min, max) = (g.order() as i64, g.min_degree() as i64, g.max_degree() as i64);
    Ok(GeneralBounds {
        lower: ceil_div(max + 2 * k, 2).max(1),
        upper: n - floor_div(min - 2 * k, 2),
    })
}

/// `⌈(Δ+2k+2)/2⌉`: a lower bound on every k-monopoly that contains a vertex
/// of maximum degree, and nothing more. Some graphs have 𝓜_k below it, e.g.
/// the 6-vertex graph with edges 03 04 05 13 15 24 25 34 35 45, where
/// `{0, 3, 4}` is a 0-monopoly and the expression gives 4.
pub fn max_degree_member_bound(g: &Graph, k: i64) -> Result<i64> {
    check_k(g, k)?;
    Ok(ceil_div(g.max_degree() as i64 + 2 * k + 2, 2))
}

/// `⌈(3kn − m)/(2k)⌉`, proved for positive `k` only.
pub fn size_lower_bound(g: &Graph, k: i64) -> Result<i64> {
    check_k(g, k)?;
    if k == 0 {
        return Err(Error::InvalidParameter("size bound is undefined at k = 0".into()));
    }
    if k < 0 {
        return Err(Error::InvalidParameter(
            "size bound is only established for k >= 1; see size_bound_formula for negative k".into(),
        ));
    }
    Ok(size_bound_formula(g, k))
}

/// The raw size-bound expression for any nonzero `k`. For negative `k` the
/// final division by `2k` reverses the derivation's inequality, so the value
/// is an experiment, not a bound.
pub fn size_bound_formula(g: &Graph, k: i64) -> i64 {
    assert!(k != 0);
    let (n, m) = (g.order() as i64, g.size() as i64);
    ceil_div(3 * k * n - m, 2 * k)
}

/// `⌈n(2k+r)/(2r)⌉` for r-regular graphs.
pub fn regular_lower_bound(g: &Graph, k: i64) -> Result<i64> {
    let r = g.regularity().ok_or(Error::NotRegular)? as i64;
    check_k(g, k)?;
    let n = g.order() as i64;
    Ok(ceil_div(n * (2 * k + r), 2 * r))
}

fn family_k_range(spec: &FamilySpec) -> Result<std::ops::RangeInclusive<i64>> {
    crate::graph::valid_k_range(&spec.generate()?)
}

/// Closed-form 𝓜_k for the families where one is known.
pub fn exact_formula(spec: &FamilySpec, k: i64) -> Result<i64> {
    let unsupported = || Error::UnsupportedFormula { family: spec.to_string(), k };
    spec.validate()?;
    let range = family_k_range(spec)?;
    if !range.contains(&k) {
        return Err(Error::KOutOfRange { k, lo: *range.start(), hi: *range.end() });
    }
    let value = match *spec {
        FamilySpec::Complete(n) => ceil_div(n as i64 + 2 * k + 1, 2),
        FamilySpec::CompleteBipartite(r, t) => {
            ceil_div(r as i64 + 2 * k, 2) + ceil_div(t as i64 + 2 * k, 2)
        }
        FamilySpec::Cycle(n) | FamilySpec::Path(n) if k == 0 && n >= 3 => {
            let n = n as i64;
            match n % 4 {
                0 => n / 2,
                2 => (n + 2) / 2,
                _ => (n + 1) / 2,
            }
        }
        FamilySpec::Wheel(n) | FamilySpec::Fan(n) if k == 1 => n as i64,
        _ => return Err(unsupported()),
    };
    Ok(value)
}

/// Is G one of P₂, P₃, P₄, C₃, C₄? These are exactly the graphs with
/// `𝓜_k(G) = 2` for some `k ≥ 0`. Negative k admits more: `𝓜_{−1}(K₄) = 2`.
/// At four or fewer vertices the sorted degree sequence separates these
/// from every other graph.
pub fn is_monopoly_number_two(g: &Graph) -> bool {
    if g.order() > 4 {
        return false;
    }
    let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    matches!(
        degrees.as_slice(),
        [1, 1] | [1, 1, 2] | [1, 1, 2, 2] | [2, 2, 2] | [2, 2, 2, 2]
    )
}

/// Characterisation of `𝓜_k(G) = n`: `k = ⌊δ/2⌋` and every vertex has a
/// neighbor of degree δ (or δ+1 when δ is even).
pub fn is_monopoly_number_n(g: &Graph, k: i64) -> bool {
    if g.order() == 0 || g.isolated_vertex().is_some() {
        return false;
    }
    let min = g.min_degree();
    if k != (min / 2) as i64 {
        return false;
    }
    let tight = |d: usize| d == min || (min.is_multiple_of(2) && d == min + 1);
    (0..g.order()).all(|v| g.neighbors(v).iter().any(|&u| tight(g.degree(u))))
}

/// Every bound that applies to `(g, k)`, for reporting alongside a solve.
pub fn applicable_bounds(g: &Graph, k: i64) -> Vec<BoundRecord> {
    let mut out = vec![];
    if let Ok(b) = general_bounds(g, k) {
        out.push(BoundRecord {
            name: "max_degree_lower",
            value: b.lower,
            side: Side::Lower,
            applicability: "k in valid range".into(),
        });
        out.push(BoundRecord {
            name: "min_degree_upper",
            value: b.upper,
            side: Side::Upper,
            applicability: "k in valid range".into(),
        });
    }
    if let Ok(v) = size_lower_bound(g, k) {
        out.push(BoundRecord {
            name: "order_size_lower",
            value: v,
            side: Side::Lower,
            applicability: "k >= 1".into(),
        });
    }
    if let Ok(v) = regular_lower_bound(g, k) {
        out.push(BoundRecord {
            name: "regular_lower",
            value: v,
            side: Side::Lower,
            applicability: format!("{}-regular", g.regularity().unwrap()),
        });
    }
    if is_monopoly_number_n(g, k) {
        out.push(BoundRecord {
            name: "characterisation_n",
            value: g.order() as i64,
            side: Side::Exact,
            applicability: "k = floor(min_degree/2) with tight neighbors".into(),
        });
    }
    out
}
