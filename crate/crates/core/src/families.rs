//! Deterministic generators for the named graph families.
//!
//! Vertex numbering is fixed per family:
//! - `path`, `cycle`: consecutive, `i ~ i+1` (and `n-1 ~ 0` for cycles);
//! - `wheel`, `fan`: hub is vertex 0, rim/path on `1..n`;
//! - `complete_bipartite r,t`: side of size `r` is `0..r`, the other `r..r+t`;
//! - `hypercube d`: vertex bit strings, adjacent when they differ in one bit;
//! - `family_f t`: clique `v_i = i`, satellites `u_i = t + i`, with `u_i`
//!   joined to `v_i, v_{i+1}, ..., v_{i+(t-3)/2}` (indices mod `t`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Fan(usize),
    Hypercube(usize),
    FamilyF(usize),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Fan(_) => "fan",
            FamilySpec::Hypercube(_) => "hypercube",
            FamilySpec::FamilyF(_) => "family_f",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilySpec::Path(n) if n < 2 => bad(format!("path needs n >= 2, got {n}")),
            FamilySpec::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Complete(n) if n < 2 => bad(format!("complete needs n >= 2, got {n}")),
            FamilySpec::CompleteBipartite(r, t) if r == 0 || t == 0 => {
                bad(format!("complete_bipartite needs r, t >= 1, got {r},{t}"))
            }
            FamilySpec::Wheel(n) if n < 4 => bad(format!("wheel needs n >= 4, got {n}")),
            FamilySpec::Fan(n) if n < 3 => bad(format!("fan needs n >= 3, got {n}")),
            FamilySpec::Hypercube(d) if d == 0 || d > 16 => {
                bad(format!("hypercube needs 1 <= d <= 16, got {d}"))
            }
            FamilySpec::FamilyF(t) if t < 5 || (t - 1) % 4 != 0 => {
                bad(format!("family_f needs t >= 5 with t - 1 divisible by 4, got {t}"))
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let (n, edges) = match *self {
            FamilySpec::Path(n) => (n, (1..n).map(|i| (i - 1, i)).collect()),
            FamilySpec::Cycle(n) => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
            FamilySpec::Complete(n) => (n, clique(0..n)),
            FamilySpec::CompleteBipartite(r, t) => {
                let edges = (0..r).flat_map(|a| (r..r + t).map(move |b| (a, b))).collect();
                (r + t, edges)
            }
            FamilySpec::Wheel(n) => {
                let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                edges.extend((1..n).map(|i| (i, if i + 1 == n { 1 } else { i + 1 })));
                (n, edges)
            }
            FamilySpec::Fan(n) => {
                let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                edges.extend((2..n).map(|i| (i - 1, i)));
                (n, edges)
            }
            FamilySpec::Hypercube(d) => {
                let n = 1usize << d;
                let edges = (0..n)
                    .flat_map(|x| (0..d).map(move |b| (x, x ^ (1 << b))))
                    .filter(|&(x, y)| x < y)
                    .collect();
                (n, edges)
            }
            FamilySpec::FamilyF(t) => {
                let mut edges = clique(0..t);
                for i in 0..t {
                    for j in 0..(t - 1) / 2 {
                        edges.push((t + i, (i + j) % t));
                    }
                }
                (2 * t, edges)
            }
        };
        Graph::from_edges(n, &edges)
    }
}

fn clique(range: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let mut edges = vec![];
    for u in range.clone() {
        for v in u + 1..range.end {
            edges.push((u, v));
        }
    }
    edges
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(r, t) => write!(f, "complete_bipartite:{r},{t}"),
            FamilySpec::Path(x)
            | FamilySpec::Cycle(x)
            | FamilySpec::Complete(x)
            | FamilySpec::Wheel(x)
            | FamilySpec::Fan(x)
            | FamilySpec::Hypercube(x)
            | FamilySpec::FamilyF(x) => write!(f, "{}:{x}", self.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses generator strings such as `cycle:8` or `complete_bipartite:3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad generator spec `{s}`"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        let spec = match (name.trim(), nums.as_slice()) {
            ("path", [n]) => FamilySpec::Path(*n),
            ("cycle", [n]) => FamilySpec::Cycle(*n),
            ("complete", [n]) => FamilySpec::Complete(*n),
            ("complete_bipartite", [r, t]) => FamilySpec::CompleteBipartite(*r, *t),
            ("wheel", [n]) => FamilySpec::Wheel(*n),
            ("fan", [n]) => FamilySpec::Fan(*n),
            ("hypercube", [d]) => FamilySpec::Hypercube(*d),
            ("family_f", [t]) => FamilySpec::FamilyF(*t),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}
