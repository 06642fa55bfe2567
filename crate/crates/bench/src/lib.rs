//! Benchmark instances for `monopoly-core`.

use monopoly_core::{FamilySpec, Graph};

/// Named graphs sized so one exact solve takes milliseconds to about a second.
pub const SOLVER_SPECS: &[&str] = &[
    "cycle:24",
    "path:24",
    "wheel:14",
    "complete_bipartite:7,8",
    "hypercube:4",
    "family_f:9",
];

pub fn generate(spec: &str) -> Graph {
    let family: FamilySpec = spec.parse().expect("bench specs are valid");
    family.generate().expect("bench specs are valid")
}
