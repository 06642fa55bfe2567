//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact; `TOLERANCE` pins that. Each criterion also has
//! a wall-clock budget and fails if it overruns.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::corpus::{connected_graphs_up_to, family, random_sample};
use common::oracle::{self, Target};
use monopoly_core::bounds;
use monopoly_core::partition::{self, PartitionOptions};
use monopoly_core::predicates as p;
use monopoly_core::reduction::{build_reduction, verify_reduction_identity, IdentityCheck};
use monopoly_core::solver::{self, Problem};
use monopoly_core::{valid_k_range, FamilySpec, Graph, PartitionStatus, SignedAssignment, SolverOptions, Status, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All quantities are integers and must match exactly.
const TOLERANCE: i64 = 0;

type Outcome = Result<String, String>;

fn same(a: i64, b: i64) -> bool {
    (a - b).abs() <= TOLERANCE
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn edges(g: &Graph) -> String {
    let list: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}{v}")).collect();
    format!("n={} edges {}", g.order(), list.join(" "))
}

fn monopoly_number(g: &Graph, k: i64) -> i64 {
    solver::min_k_monopoly(g, k).unwrap().optimum.unwrap()
}

fn optimum(g: &Graph, problem: Problem) -> Option<i64> {
    solver::solve(g, problem, &SolverOptions::default()).unwrap().optimum
}

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn closed_forms() -> Outcome {
    let mut checked = 0;
    let mut cases: Vec<(String, i64)> = vec![];
    for n in 2..=10 {
        let s = format!("complete:{n}");
        for k in valid_k_range(&family(&s)).unwrap() {
            cases.push((s.clone(), k));
        }
    }
    for r in 1..=5 {
        for t in 1..=5 {
            let s = format!("complete_bipartite:{r},{t}");
            for k in valid_k_range(&family(&s)).unwrap() {
                cases.push((s.clone(), k));
            }
        }
    }
    for n in 3..=14 {
        cases.push((format!("cycle:{n}"), 0));
        cases.push((format!("path:{n}"), 0));
    }
    for (spec_str, k) in &cases {
        let expected = bounds::exact_formula(&spec(spec_str), *k).map_err(|e| format!("{spec_str}: {e}"))?;
        let got = monopoly_number(&family(spec_str), *k);
        ensure(same(got, expected), || format!("{spec_str} k={k}: solver {got}, closed form {expected}"))?;
        checked += 1;
    }
    let mut full: Vec<String> = (4..=10).map(|n| format!("wheel:{n}")).collect();
    full.extend((3..=10).map(|n| format!("fan:{n}")));
    for s in &full {
        let g = family(s);
        let got = monopoly_number(&g, 1);
        ensure(same(got, g.order() as i64), || format!("{s} k=1: solver {got}, expected n"))?;
        checked += 1;
    }
    for r in [2usize, 4] {
        let s = format!("complete_bipartite:{r},{}", r + 1);
        let g = family(&s);
        let k = (r / 2) as i64;
        let got = monopoly_number(&g, k);
        ensure(same(got, g.order() as i64), || format!("{s} k={k}: solver {got}, expected n"))?;
        checked += 1;
    }
    Ok(format!("{checked} (family, k) instances match"))
}

fn random_subset(rng: &mut impl Rng, n: usize) -> VertexSet {
    loop {
        let s = VertexSet::from_mask(n, rng.gen::<u64>() & ((1 << n) - 1));
        if !s.is_empty() {
            return s;
        }
    }
}

/// Monopoly (i), alliance (ii) and signed-total (iii) views of one set.
fn check_monopoly_views(g: &Graph, m: &VertexSet, k: i64) -> Result<(), String> {
    let mono = p::is_k_monopoly(g, m, k).unwrap();
    let alliance = p::is_defensive_k_alliance(g, m, 2 * k, true).unwrap()
        && p::is_offensive_k_alliance(g, m, 2 * k, true).unwrap();
    let signed = p::is_signed_total_k_dominating(g, &SignedAssignment::from_positive(m.clone()), 2 * k).unwrap();
    ensure(mono == alliance && mono == signed, || {
        format!("{} M={m} k={k}: monopoly {mono}, alliance {alliance}, signed {signed}", edges(g))
    })
}

fn check_powerful_view(g: &Graph, s: &VertexSet, k: i64) -> Result<(), String> {
    let powerful = p::is_powerful_k_alliance(g, s, k, true).unwrap();
    let signed = p::is_signed_k_dominating(g, &SignedAssignment::from_positive(s.clone()), k + 1).unwrap();
    ensure(powerful == signed, || format!("{} S={s} k={k}: powerful {powerful}, signed {signed}", edges(g)))
}

fn equivalences() -> Outcome {
    let mut checks = 0u64;
    for g in connected_graphs_up_to(8) {
        let hi = *valid_k_range(&g).unwrap().end();
        let delta = g.min_degree() as i64;
        for m in oracle::subsets(g.order()).filter(|s| !s.is_empty()) {
            for k in (1..=2).filter(|&k| k <= hi) {
                check_monopoly_views(&g, &m, k)?;
                checks += 1;
            }
            for k in (0..=1).filter(|&k| k <= delta) {
                check_powerful_view(&g, &m, k)?;
                checks += 1;
            }
        }
    }
    let exhaustive = checks;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let graphs = random_sample(20, 100, 9..=12);
    for g in &graphs {
        let hi = *valid_k_range(g).unwrap().end();
        let delta = g.min_degree() as i64;
        for _ in 0..100 {
            let m = random_subset(&mut rng, g.order());
            for k in (1..=2).filter(|&k| k <= hi) {
                check_monopoly_views(g, &m, k)?;
            }
            for k in (0..=1).filter(|&k| k <= delta) {
                check_powerful_view(g, &m, k)?;
            }
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive checks on connected graphs n <= 8, 10^4 random subsets on n in 9..=12"
    ))
}

fn weight_identities() -> Outcome {
    let mut graphs = connected_graphs_up_to(7);
    graphs.extend(random_sample(30, 150, 8..=10));
    let (mut total, mut powerful) = (0, 0);
    for g in &graphs {
        let n = g.order() as i64;
        for k in (1..=*valid_k_range(g).unwrap().end()).filter(|&k| k >= 1) {
            let st = optimum(g, Problem::SignedTotal { k: 2 * k });
            let m = monopoly_number(g, k);
            ensure(st.is_some_and(|w| same(w, 2 * m - n)), || {
                format!("{} k={k}: signed total {st:?}, 2M-n = {}", edges(g), 2 * m - n)
            })?;
            total += 1;
        }
        for k in 0..=g.min_degree() as i64 {
            let gp = optimum(g, Problem::Powerful { k });
            let s = optimum(g, Problem::Signed { k: k + 1 });
            match gp {
                Some(gp) => ensure(s.is_some_and(|w| same(w, 2 * gp - n)), || {
                    format!("{} k={k}: signed {s:?}, 2gp-n = {}", edges(g), 2 * gp - n)
                })?,
                None => ensure(s.is_none(), || format!("{} k={k}: signed exists without alliance", edges(g)))?,
            }
            powerful += 1;
        }
    }
    Ok(format!("{} graphs, {total} signed-total and {powerful} signed identities", graphs.len()))
}

fn reduction_identity() -> Outcome {
    let mut orders = vec![];
    for s in ["path:2", "path:3", "path:4", "cycle:3", "cycle:4", "complete:3", "complete_bipartite:1,3"] {
        let g = family(s);
        let h_order = build_reduction(&g).unwrap().h.order();
        match verify_reduction_identity(&g, &SolverOptions::default()).unwrap() {
            IdentityCheck::Verified { lhs, rhs, .. } => {
                ensure(same(lhs, rhs), || format!("{s}: lhs {lhs}, rhs {rhs}"))?;
                orders.push(format!("{s}:{lhs}/|H|={h_order}"));
            }
            other => return Err(format!("{s}: {other:?}")),
        }
    }
    Ok(format!("identity holds: {}", orders.join(", ")))
}

fn bound_sandwiches() -> Outcome {
    let mut graphs = connected_graphs_up_to(7);
    graphs.extend(random_sample(50, 200, 8..=12));
    let mut pairs = 0;
    let mut stated_violations: Vec<String> = vec![];
    for g in &graphs {
        for k in valid_k_range(g).unwrap() {
            pairs += 1;
            let m = monopoly_number(g, k);
            let stated_lower = bounds::max_degree_member_bound(g, k).unwrap();
            let b = bounds::general_bounds(g, k).unwrap();
            if m < stated_lower {
                stated_violations.push(format!("{} k={k}: M={m} < {stated_lower}", edges(g)));
            }
            ensure(b.lower <= m && m <= b.upper, || format!("{} k={k}: {b:?} vs {m}", edges(g)))?;
            if k >= 1 {
                let lb = bounds::size_lower_bound(g, k).unwrap();
                ensure(lb <= m, || format!("{} k={k}: size bound {lb} > {m}", edges(g)))?;
            }
            if g.regularity().is_some() {
                let lb = bounds::regular_lower_bound(g, k).unwrap();
                ensure(lb <= m, || format!("{} k={k}: regular bound {lb} > {m}", edges(g)))?;
            }
        }
    }
    let f5 = family("family_f:5");
    ensure(monopoly_number(&f5, 1) == 5 && bounds::size_lower_bound(&f5, 1).unwrap() == 5, || {
        "family_f:5 does not attain the size bound at 5".into()
    })?;
    let c8 = family("cycle:8");
    ensure(monopoly_number(&c8, 0) == 4 && bounds::regular_lower_bound(&c8, 0).unwrap() == 4, || {
        "cycle:8 does not attain the regular bound at 4".into()
    })?;
    let summary = format!(
        "{} graphs, {pairs} (graph, k) pairs; upper, size (k >= 1) and regular bounds hold, ceil((D+2k)/2) holds, tightness witnesses attained",
        graphs.len()
    );
    if stated_violations.is_empty() {
        Ok(summary)
    } else {
        Err(format!(
            "stated lower bound ceil((D+2k+2)/2) exceeds the true minimum on {} pairs, first: {}; {summary}",
            stated_violations.len(),
            stated_violations[0]
        ))
    }
}

fn regular_total_domination() -> Outcome {
    let mut specs: Vec<String> = (3..=14).map(|n| format!("cycle:{n}")).collect();
    specs.extend((2..=8).map(|n| format!("complete:{n}")));
    specs.extend((1..=4).map(|r| format!("complete_bipartite:{r},{r}")));
    specs.extend(["hypercube:2".into(), "hypercube:3".into()]);
    for s in &specs {
        let g = family(s);
        let r = g.regularity().unwrap() as i64;
        let k = 1 - (r + 1) / 2;
        let m = monopoly_number(&g, k);
        let gt = optimum(&g, Problem::TotalDomination).unwrap();
        ensure(same(m, gt), || format!("{s} k={k}: M={m}, total domination {gt}"))?;
    }
    Ok(format!("{} regular graphs", specs.len()))
}

fn characterisations() -> Outcome {
    let mut outside = vec![];
    let mut outside_nonnegative = 0;
    let mut missing = vec![];
    let small = connected_graphs_up_to(5);
    for g in &small {
        let two_at: Vec<i64> = valid_k_range(g).unwrap().filter(|&k| monopoly_number(g, k) == 2).collect();
        let in_class = bounds::is_monopoly_number_two(g);
        if !two_at.is_empty() && !in_class {
            outside.push(format!("{} at k={two_at:?}", edges(g)));
            outside_nonnegative += two_at.iter().filter(|&&k| k >= 0).count();
        }
        if two_at.is_empty() && in_class {
            missing.push(edges(g));
        }
    }
    let mut full_checks = 0;
    for g in connected_graphs_up_to(7) {
        for k in valid_k_range(&g).unwrap() {
            let full = monopoly_number(&g, k) == g.order() as i64;
            ensure(full == bounds::is_monopoly_number_n(&g, k), || {
                format!("{} k={k}: solver says M=n is {full}", edges(&g))
            })?;
            full_checks += 1;
        }
    }
    ensure(missing.is_empty(), || format!("class members without M=2: {missing:?}"))?;
    let summary = format!("M=n characterisation agrees on {full_checks} (graph, k) pairs, n <= 7");
    if outside.is_empty() {
        Ok(format!("M=2 exactly on P2, P3, P4, C3, C4; {summary}"))
    } else {
        Err(format!(
            "M_k=2 also holds outside {{P2, P3, P4, C3, C4}} on {} graphs ({} of them at some k >= 0), first: {}; {summary}",
            outside.len(),
            outside_nonnegative,
            outside[0]
        ))
    }
}

fn partitions() -> Outcome {
    let opts = PartitionOptions::default();
    for s in ["cycle:4", "cycle:8", "cycle:12", "hypercube:2"] {
        let g = family(s);
        let res = partition::find_monopoly_partition(&g, 0, 2, &opts).unwrap();
        ensure(res.status == PartitionStatus::Found, || format!("{s}: {:?}", res.status))?;
        let rep = partition::check_two_part_properties(&g, &res.parts[0], &res.parts[1]).unwrap();
        ensure(rep.all_hold(), || format!("{s}: {rep:?}"))?;
    }
    let mut none: Vec<String> = vec!["cycle:5".into(), "cycle:6".into()];
    none.extend((2..=10).map(|n| format!("path:{n}")));
    for s in &none {
        let res = partition::find_monopoly_partition(&family(s), 0, 2, &opts).unwrap();
        ensure(res.status == PartitionStatus::NoneExists, || format!("{s}: {:?}", res.status))?;
    }
    let unchecked = PartitionOptions { bound_precheck: false };
    let mut graphs = connected_graphs_up_to(7);
    graphs.extend(random_sample(80, 100, 8..=10));
    let mut searches = 0;
    for g in &graphs {
        for k in valid_k_range(g).unwrap() {
            let first = (3 - 2 * k).max(2) as usize;
            for r in first..=g.order() {
                let res = partition::find_monopoly_partition(g, k, r, &unchecked).unwrap();
                ensure(res.status != PartitionStatus::Found, || {
                    format!("{} k={k} r={r}: partition {:?}", edges(g), res.parts)
                })?;
                searches += 1;
            }
        }
    }
    Ok(format!("named cases behave; {searches} unchecked searches with r > 2-2k found nothing"))
}

fn targets(g: &Graph) -> Vec<(Problem, Target)> {
    let big = g.max_degree() as i64;
    let mut out = vec![(Problem::TotalDomination, Target::TotalDom)];
    for k in valid_k_range(g).unwrap() {
        out.push((Problem::Monopoly { k }, Target::Monopoly(k)));
    }
    for k in -big..=big {
        out.push((Problem::DefensiveOffensive { k }, Target::DefOff(k)));
    }
    for k in 1..=big {
        out.push((Problem::SignedTotal { k }, Target::SignedTotal(k)));
    }
    for k in 0..=g.min_degree() as i64 {
        out.push((Problem::Powerful { k }, Target::Powerful(k)));
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let graphs = random_sample(90, 200, 4..=12);
    let mut instances = 0;
    for g in &graphs {
        for (problem, target) in targets(g) {
            let report = solver::solve(g, problem, &SolverOptions::default()).unwrap();
            let expected = oracle::minimum_set(g, target);
            match &expected {
                None => ensure(report.status == Status::Infeasible, || {
                    format!("{} {problem}: solver {:?}, oracle infeasible", edges(g), report.optimum)
                })?,
                Some(set) => {
                    let opt = oracle::optimum(g, target).unwrap();
                    ensure(report.optimum.is_some_and(|o| same(o, opt)), || {
                        format!("{} {problem}: solver {:?}, oracle {opt}", edges(g), report.optimum)
                    })?;
                    let w = report.witness.as_ref().unwrap().set();
                    ensure(w == set, || format!("{} {problem}: witness {w}, oracle {set}", edges(g)))?;
                }
            }
            instances += 1;
        }
    }
    Ok(format!("{instances} (graph, problem, k) instances on 200 graphs"))
}

fn path_five_report() -> Outcome {
    let g = family("path:5");
    let pairs: Vec<VertexSet> = oracle::subsets(5).filter(|s| s.len() == 2).collect();
    ensure(pairs.iter().all(|s| !Target::Monopoly(0).accepts(&g, s)), || "a 2-vertex 0-monopoly exists".into())?;
    ensure(oracle::optimum(&g, Target::Monopoly(0)) == Some(3), || "oracle minimum is not 3".into())?;
    let out = Command::new(env!("CARGO_BIN_EXE_monopoly"))
        .args(["solve", "--gen", "path:5", "--k", "0"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    ensure(text.contains("optimum: 3\n"), || format!("optimum missing from report:\n{text}"))?;
    let note = "no open 0-monopoly with 2 vertices exists; the minimum 3 is confirmed";
    ensure(text.contains(note), || format!("resolution note missing from report:\n{text}"))?;
    Ok(format!("oracle rejects all {} pairs; report states \"{note}\"", pairs.len()))
}

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "closed-form reproduction", 120, closed_forms),
        (2, "equivalence suites", 300, equivalences),
        (3, "weight identities", 300, weight_identities),
        (4, "reduction identity", 180, reduction_identity),
        (5, "bound sandwiches", 600, bound_sandwiches),
        (6, "regular graphs: M = total domination", 120, regular_total_domination),
        (7, "characterisations", 300, characterisations),
        (8, "partition suite", 300, partitions),
        (9, "oracle equivalence", 600, oracle_equivalence),
        (10, "P5 resolution in solve report", 60, path_five_report),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {}", e.downcast_ref::<String>().cloned().unwrap_or_default())));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > Duration::from_secs(budget) {
                Err(format!("over budget ({:.1}s > {budget}s); {detail}", elapsed.as_secs_f64()))
            } else {
                Ok(detail)
            }
        });
        let (verdict, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if result.is_err() {
            failures += 1;
        }
        println!("criterion {id:>2} {verdict} [{name}] {:.1}s/{budget}s: {detail}", elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
