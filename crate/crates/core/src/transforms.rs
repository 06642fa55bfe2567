//! Certificate conversions between k-monopolies, global alliances and signed
//! (total) dominating functions.
//!
//! Conversions always build the image object. Under [`Strictness::Strict`]
//! they also verify the source against the relevant condition and report the
//! first vertex where it fails.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::predicates::{self, SignedAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Lenient,
}

/// `M ↦ (B₁ = M, B₋₁ = M̄)`.
pub fn monopoly_to_signed_total(m: &VertexSet) -> SignedAssignment {
    SignedAssignment::from_positive(m.clone())
}

/// `f ↦ B₁`. A signed total `level`-dominating function with even
/// `level = 2k ≥ 2` yields a k-monopoly.
pub fn signed_total_to_monopoly(
    g: &Graph,
    f: &SignedAssignment,
    level: i64,
    strictness: Strictness,
) -> Result<VertexSet> {
    if level < 2 || level % 2 != 0 {
        return Err(Error::BadLevel(level));
    }
    if strictness == Strictness::Strict {
        if let Some(vertex) = predicates::signed_total_violation(g, f, level)? {
            return Err(Error::Violation {
                what: format!("signed total {level}-domination"),
                vertex,
            });
        }
    }
    Ok(f.b1().clone())
}

fn check_powerful_k(g: &Graph, k: i64) -> Result<()> {
    let hi = g.min_degree() as i64;
    if (0..=hi).contains(&k) {
        Ok(())
    } else {
        Err(Error::KOutOfRange { k, lo: 0, hi })
    }
}

/// `S ↦ (B₁ = S, B₋₁ = S̄)` for a global powerful k-alliance `S`,
/// `k ∈ {0..δ}`. Strict mode names the failing case: 1 for a member breaking
/// the defensive k condition, 2 for a non-member breaking the offensive
/// (k+2) condition or domination.
pub fn powerful_to_signed(
    g: &Graph,
    s: &VertexSet,
    k: i64,
    strictness: Strictness,
) -> Result<SignedAssignment> {
    check_powerful_k(g, k)?;
    g.check_set(s)?;
    if strictness == Strictness::Strict {
        if let Some(vertex) = predicates::powerful_violation(g, s, k, true)? {
            let case = if s.contains(vertex) { 1 } else { 2 };
            return Err(Error::Violation {
                what: format!("case {case}: global powerful {k}-alliance"),
                vertex,
            });
        }
    }
    Ok(SignedAssignment::from_positive(s.clone()))
}

/// `f ↦ B₁` for a signed (k+1)-dominating function. Strict mode names the
/// failing case: 3 for a `+1` vertex, 4 for a `−1` vertex.
pub fn signed_to_powerful(
    g: &Graph,
    f: &SignedAssignment,
    k: i64,
    strictness: Strictness,
) -> Result<VertexSet> {
    check_powerful_k(g, k)?;
    if strictness == Strictness::Strict {
        if let Some(vertex) = predicates::signed_violation(g, f, k + 1)? {
            let case = if f.b1().contains(vertex) { 3 } else { 4 };
            return Err(Error::Violation {
                what: format!("case {case}: signed {}-domination", k + 1),
                vertex,
            });
        }
    }
    Ok(f.b1().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::predicates::{is_k_monopoly, is_signed_k_dominating, is_signed_total_k_dominating};

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs).unwrap()
    }

    #[test]
    fn monopoly_to_signed_total_examples() {
        let k5 = gen("complete:5");
        let f = monopoly_to_signed_total(&set(5, &[0, 1, 2, 3]));
        assert_eq!(f.weight(), 3);
        assert!(is_signed_total_k_dominating(&k5, &f, 2).unwrap());
        assert_eq!(monopoly_to_signed_total(&VertexSet::full(6)), SignedAssignment::all_positive(6));
        let c8 = gen("cycle:8");
        let f = monopoly_to_signed_total(&set(8, &[0, 1, 4, 5]));
        assert!(!is_signed_total_k_dominating(&c8, &f, 2).unwrap());
    }

    #[test]
    fn signed_total_to_monopoly_examples() {
        let k5 = gen("complete:5");
        let f = SignedAssignment::from_positive(set(5, &[0, 1, 2, 3]));
        let m = signed_total_to_monopoly(&k5, &f, 2, Strictness::Strict).unwrap();
        assert_eq!(m, set(5, &[0, 1, 2, 3]));
        assert!(is_k_monopoly(&k5, &m, 1).unwrap());

        let c4 = gen("cycle:4");
        let m = signed_total_to_monopoly(&c4, &SignedAssignment::all_positive(4), 2, Strictness::Strict).unwrap();
        assert!(is_k_monopoly(&c4, &m, 1).unwrap());

        let c8 = gen("cycle:8");
        let f = SignedAssignment::from_positive(set(8, &[0, 1, 4, 5]));
        let err = signed_total_to_monopoly(&c8, &f, 2, Strictness::Strict).unwrap_err();
        assert!(matches!(err, Error::Violation { vertex: 0, .. }));
        assert!(signed_total_to_monopoly(&c8, &f, 2, Strictness::Lenient).is_ok());
        assert_eq!(signed_total_to_monopoly(&c8, &f, 3, Strictness::Lenient), Err(Error::BadLevel(3)));
        assert_eq!(signed_total_to_monopoly(&c8, &f, 0, Strictness::Lenient), Err(Error::BadLevel(0)));
    }

    #[test]
    fn powerful_examples() {
        let k3 = gen("complete:3");
        let f = powerful_to_signed(&k3, &set(3, &[0, 1]), 0, Strictness::Strict).unwrap();
        assert_eq!(f.weight(), 1);
        assert!(is_signed_k_dominating(&k3, &f, 1).unwrap());

        let c6 = gen("cycle:6");
        let f = powerful_to_signed(&c6, &VertexSet::full(6), 0, Strictness::Strict).unwrap();
        assert_eq!(f, SignedAssignment::all_positive(6));

        let c8 = gen("cycle:8");
        let err = powerful_to_signed(&c8, &set(8, &[0, 1, 4, 5]), 0, Strictness::Strict).unwrap_err();
        assert_eq!(
            err,
            Error::Violation { what: "case 2: global powerful 0-alliance".into(), vertex: 2 }
        );
        assert!(matches!(
            powerful_to_signed(&c8, &VertexSet::full(8), 3, Strictness::Strict),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn signed_to_powerful_examples() {
        let k3 = gen("complete:3");
        let f = SignedAssignment::from_positive(set(3, &[0, 1]));
        assert_eq!(signed_to_powerful(&k3, &f, 0, Strictness::Strict).unwrap(), set(3, &[0, 1]));
        let p3 = gen("path:3");
        let f = SignedAssignment::from_positive(set(3, &[1]));
        let err = signed_to_powerful(&p3, &f, 0, Strictness::Strict).unwrap_err();
        assert!(matches!(err, Error::Violation { vertex: 0, ref what } if what.starts_with("case 4")));
    }
}
