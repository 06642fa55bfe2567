use std::fmt::Write as _;
use std::fs;

use monopoly_core::bounds;
use monopoly_core::partition::{self, PartitionOptions};
use monopoly_core::predicates;
use monopoly_core::reduction::{self, IdentityCheck};
use monopoly_core::solver::{self, Problem};
use monopoly_core::transforms::{self, Strictness};
use monopoly_core::{
    parse_edge_list, write_edge_list, BoundRecord, Error, FamilySpec, Graph, PartitionStatus, SignedAssignment,
    Side, SolverOptions, Status, VertexSet,
};
use serde::Serialize;

use crate::records::*;
use crate::{Cli, Command, Direction, Outcome, ProblemArg, Source};

/// Solve reports cross-check against plain enumeration up to this order.
pub const ENUMERATION_LIMIT: usize = 16;

type CmdResult = Result<Outcome, String>;

struct Loaded {
    g: Graph,
    label: String,
    family: Option<FamilySpec>,
}

impl Loaded {
    fn info(&self) -> GraphInfo {
        GraphInfo { source: self.label.clone(), n: self.g.order(), m: self.g.size() }
    }

    fn header(&self) -> String {
        format!("graph: {} (n = {}, m = {})\n", self.label, self.g.order(), self.g.size())
    }
}

fn load(source: &Source) -> Result<Loaded, String> {
    if let Some(spec) = &source.generator {
        let family: FamilySpec = spec.parse().map_err(|e: Error| e.to_string())?;
        let g = family.generate().map_err(|e| e.to_string())?;
        return Ok(Loaded { g, label: family.to_string(), family: Some(family) });
    }
    let path = source.input.as_ref().expect("clap enforces one source");
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let g = parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Loaded { g, label: path.display().to_string(), family: None })
}

fn parse_set(n: usize, text: &str) -> Result<VertexSet, String> {
    let mut vs = vec![];
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| format!("bad vertex `{part}` in --set"))?;
        vs.push(v);
    }
    VertexSet::from_vertices(n, &vs).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records always serialize")
}

fn problem_of(arg: ProblemArg, k: Option<i64>) -> Problem {
    let signed_default = k.unwrap_or(1);
    let k = k.unwrap_or(0);
    match arg {
        ProblemArg::Monopoly => Problem::Monopoly { k },
        ProblemArg::TotalDom => Problem::TotalDomination,
        ProblemArg::DefOffAlliance => Problem::DefensiveOffensive { k },
        ProblemArg::SignedTotal => Problem::SignedTotal { k: signed_default },
        ProblemArg::Powerful => Problem::Powerful { k },
        ProblemArg::Signed => Problem::Signed { k: signed_default },
    }
}

/// What a feasible set of `problem` is called, for notes.
fn noun(problem: Problem) -> String {
    match problem {
        Problem::Monopoly { k } => format!("open {k}-monopoly"),
        Problem::TotalDomination => "total dominating set".into(),
        Problem::DefensiveOffensive { k } => format!("global defensive and offensive {k}-alliance"),
        Problem::SignedTotal { k } => format!("signed total {k}-dominating function"),
        Problem::Powerful { k } => format!("global powerful {k}-alliance"),
        Problem::Signed { k } => format!("signed {k}-dominating function"),
    }
}

fn bound_line(b: &BoundRecord) -> String {
    let side = match b.side {
        Side::Lower => "lower",
        Side::Upper => "upper",
        Side::Exact => "exact",
    };
    format!("{} ({side}) = {}  [{}]", b.name, b.value, b.applicability)
}

fn options(cli: &Cli) -> SolverOptions {
    SolverOptions { workers: cli.workers, allow_large: cli.max_n_override }
}

pub fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Solve { source, problem, k } => solve(cli, &load(source)?, problem_of(*problem, *k)),
        Command::Verify { source, problem, k, set } => {
            verify(&load(source)?, problem_of(*problem, *k), set)
        }
        Command::Bounds { source, k } => bounds_cmd(&load(source)?, *k),
        Command::Transform { source, direction, k, set, strict } => {
            transform(&load(source)?, *direction, *k, set, *strict)
        }
        Command::Reduce { source, out, origin_map, verify } => {
            reduce(cli, &load(source)?, out.as_deref(), origin_map.as_deref(), *verify)
        }
        Command::Partition { source, k, r, no_bound_precheck } => {
            partition_cmd(&load(source)?, *k, *r, !no_bound_precheck)
        }
        Command::Gen { spec } => gen(spec),
        Command::Formula { spec, k, check } => formula(cli, spec, *k, *check),
    }
}

/// Independent confirmation of a solve by enumeration, plus the closed form
/// where one exists.
fn solve_notes(loaded: &Loaded, problem: Problem, optimum: Option<i64>, witness_len: usize) -> Vec<String> {
    let g = &loaded.g;
    let n = g.order();
    let mut notes = vec![];
    if let (Problem::Monopoly { k }, Some(family), Some(opt)) = (problem, &loaded.family, optimum) {
        if let Ok(v) = bounds::exact_formula(family, k) {
            let verdict = if v == opt { "agrees" } else { "DISAGREES" };
            notes.push(format!("closed form for {family} at k = {k}: {v} ({verdict})"));
        }
    }
    if n > ENUMERATION_LIMIT {
        notes.push(format!("enumeration cross-check skipped above {ENUMERATION_LIMIT} vertices"));
        return notes;
    }
    let subsets = 1u64 << n;
    let what = noun(problem);
    let found = solver::exhaustive_minimum(g, problem).expect("problem already validated");
    let note = match (found, optimum) {
        (None, None) => format!("enumeration over all {subsets} subsets: no {what} exists"),
        (Some(s), Some(opt)) if s.len() == witness_len => {
            if problem.is_signed() {
                format!(
                    "enumeration over all {subsets} subsets: no {what} of weight below {opt} exists; the minimum {opt} is confirmed"
                )
            } else if s.len() > 1 {
                format!(
                    "enumeration over all {subsets} subsets: no {what} with {} vertices exists; the minimum {opt} is confirmed",
                    s.len() - 1
                )
            } else {
                format!("enumeration over all {subsets} subsets: the minimum {opt} is confirmed")
            }
        }
        (found, _) => format!(
            "enumeration MISMATCH: exhaustive minimum {:?} against solver optimum {optimum:?}",
            found.map(|s| s.len())
        ),
    };
    notes.push(note);
    notes
}

fn solve(cli: &Cli, loaded: &Loaded, problem: Problem) -> CmdResult {
    let report = solver::solve(&loaded.g, problem, &options(cli)).map_err(|e| e.to_string())?;
    let witness = report.witness.as_ref().map(|w| w.set().clone());
    let notes = solve_notes(loaded, problem, report.optimum, witness.as_ref().map_or(0, |w| w.len()));

    let mut text = loaded.header();
    writeln!(text, "problem: {problem}").unwrap();
    match (report.status, report.optimum, &witness) {
        (Status::Optimal, Some(opt), Some(w)) => {
            writeln!(text, "status: optimal").unwrap();
            if problem.is_signed() {
                writeln!(text, "minimum weight: {opt}").unwrap();
                writeln!(text, "positive vertices: {w}").unwrap();
                writeln!(text, "negative vertices: {}", w.complement()).unwrap();
            } else {
                writeln!(text, "optimum: {opt}").unwrap();
                writeln!(text, "witness: {w}").unwrap();
            }
        }
        _ => writeln!(text, "status: infeasible (no {} exists)", noun(problem)).unwrap(),
    }
    if !report.bounds_used.is_empty() {
        writeln!(text, "bounds:").unwrap();
        for b in &report.bounds_used {
            writeln!(text, "  {}", bound_line(b)).unwrap();
        }
    }
    let s = report.stats;
    writeln!(
        text,
        "search: {} nodes, {} subproblems, {} canonicalization nodes",
        s.nodes_explored, s.subproblems, s.canonicalization_nodes
    )
    .unwrap();
    if !notes.is_empty() {
        writeln!(text, "notes:").unwrap();
        for note in &notes {
            writeln!(text, "  - {note}").unwrap();
        }
    }

    let json = to_json(&SolveRecord {
        command: "solve",
        graph: loaded.info(),
        problem: problem.name(),
        k: problem.k(),
        status: report.status,
        optimum: report.optimum,
        witness: witness.map(|w| w.to_vec()),
        bounds: &report.bounds_used,
        stats: report.stats,
        notes,
    });
    Ok(Outcome { text, json, code: 0 })
}

fn verify(loaded: &Loaded, problem: Problem, set: &str) -> CmdResult {
    let g = &loaded.g;
    let s = parse_set(g.order(), set)?;
    let violator = problem.violation(g, &s).map_err(|e| e.to_string())?;
    let holds = violator.is_none();
    let mut text = loaded.header();
    writeln!(text, "problem: {problem}").unwrap();
    let label = if problem.is_signed() { "positive vertices" } else { "set" };
    writeln!(text, "{label}: {s}").unwrap();
    writeln!(text, "holds: {holds}").unwrap();
    if let Some(v) = violator {
        writeln!(text, "first violating vertex: {v}").unwrap();
    }
    let json = to_json(&VerifyRecord {
        command: "verify",
        graph: loaded.info(),
        problem: problem.name(),
        k: problem.k(),
        set: s.to_vec(),
        holds,
        violator,
    });
    Ok(Outcome { text, json, code: if holds { 0 } else { 1 } })
}

fn bounds_cmd(loaded: &Loaded, k: i64) -> CmdResult {
    let g = &loaded.g;
    monopoly_core::valid_k_range(g)
        .and_then(|r| {
            if r.contains(&k) {
                Ok(())
            } else {
                Err(Error::KOutOfRange { k, lo: *r.start(), hi: *r.end() })
            }
        })
        .map_err(|e| e.to_string())?;
    let records = bounds::applicable_bounds(g, k);
    let closed_form = loaded.family.as_ref().and_then(|f| bounds::exact_formula(f, k).ok());
    let mut text = loaded.header();
    writeln!(text, "k: {k}").unwrap();
    for b in &records {
        writeln!(text, "{}", bound_line(b)).unwrap();
    }
    if let Some(v) = closed_form {
        writeln!(text, "closed form: {v}").unwrap();
    }
    let json = to_json(&BoundsRecord { command: "bounds", graph: loaded.info(), k, bounds: &records, closed_form });
    Ok(Outcome { text, json, code: 0 })
}

fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::MonopolyToSignedTotal => "monopoly-to-signed-total",
        Direction::SignedTotalToMonopoly => "signed-total-to-monopoly",
        Direction::PowerfulToSigned => "powerful-to-signed",
        Direction::SignedToPowerful => "signed-to-powerful",
    }
}

fn transform(loaded: &Loaded, direction: Direction, k: i64, set: &str, strict: bool) -> CmdResult {
    let g = &loaded.g;
    let input = parse_set(g.order(), set)?;
    let strictness = if strict { Strictness::Strict } else { Strictness::Lenient };
    let positive: Result<VertexSet, Error> = match direction {
        Direction::MonopolyToSignedTotal => {
            let check = if strict {
                predicates::monopoly_violation(g, &input, k).and_then(|v| match v {
                    Some(vertex) => Err(Error::Violation { what: format!("open {k}-monopoly"), vertex }),
                    None => Ok(()),
                })
            } else {
                Ok(())
            };
            check.map(|()| transforms::monopoly_to_signed_total(&input).b1().clone())
        }
        Direction::SignedTotalToMonopoly => transforms::signed_total_to_monopoly(
            g,
            &SignedAssignment::from_positive(input.clone()),
            2 * k,
            strictness,
        ),
        Direction::PowerfulToSigned => {
            transforms::powerful_to_signed(g, &input, k, strictness).map(|f| f.b1().clone())
        }
        Direction::SignedToPowerful => {
            transforms::signed_to_powerful(g, &SignedAssignment::from_positive(input.clone()), k, strictness)
        }
    };
    let positive = match positive {
        Ok(p) => p,
        Err(Error::Violation { what, vertex }) => {
            let text = format!(
                "{}direction: {}\nsource certificate rejected: {what} fails at vertex {vertex}\n",
                loaded.header(),
                direction_name(direction)
            );
            let json = to_json(&VerifyRecord {
                command: "transform",
                graph: loaded.info(),
                problem: direction_name(direction),
                k: Some(k),
                set: input.to_vec(),
                holds: false,
                violator: Some(vertex),
            });
            return Ok(Outcome { text, json, code: 1 });
        }
        Err(e) => return Err(e.to_string()),
    };
    let f = SignedAssignment::from_positive(positive.clone());
    let mut text = loaded.header();
    writeln!(text, "direction: {}", direction_name(direction)).unwrap();
    writeln!(text, "input: {input}").unwrap();
    match direction {
        Direction::MonopolyToSignedTotal | Direction::PowerfulToSigned => {
            writeln!(text, "B1 (+1): {}", f.b1()).unwrap();
            writeln!(text, "B-1 (-1): {}", f.b_minus1()).unwrap();
            writeln!(text, "weight: {}", f.weight()).unwrap();
        }
        _ => writeln!(text, "set: {positive}").unwrap(),
    }
    let json = to_json(&TransformRecord {
        command: "transform",
        graph: loaded.info(),
        direction: direction_name(direction),
        k,
        strict,
        input: input.to_vec(),
        positive: f.b1().to_vec(),
        negative: f.b_minus1().to_vec(),
        weight: f.weight(),
    });
    Ok(Outcome { text, json, code: 0 })
}

fn reduce(
    cli: &Cli,
    loaded: &Loaded,
    out: Option<&std::path::Path>,
    origin_map: Option<&std::path::Path>,
    verify: bool,
) -> CmdResult {
    let g = &loaded.g;
    let red = reduction::build_reduction(g).map_err(|e| e.to_string())?;
    let edge_text = write_edge_list(&red.h);
    if let Some(path) = out {
        fs::write(path, &edge_text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = origin_map {
        fs::write(path, red.origin_map()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let mut text = loaded.header();
    writeln!(text, "H: n = {}, m = {}", red.h.order(), red.h.size()).unwrap();
    writeln!(
        text,
        "added: {} vertices, {} edges, {} leaves",
        red.added_vertices, red.added_edges, red.added_leaves
    )
    .unwrap();
    let mut code = 0;
    let identity = if verify {
        let check = reduction::verify_reduction_identity(g, &options(cli)).map_err(|e| e.to_string())?;
        Some(match check {
            IdentityCheck::Verified { lhs, rhs, equal, .. } => {
                writeln!(text, "identity: lhs {lhs}, rhs {rhs}, {}", if equal { "equal" } else { "NOT equal" })
                    .unwrap();
                if !equal {
                    code = 1;
                }
                IdentityRecord {
                    status: "verified",
                    lhs: Some(lhs),
                    rhs: Some(rhs),
                    equal: Some(equal),
                    h_order: red.h.order(),
                    limit: None,
                }
            }
            IdentityCheck::Unverifiable { h_order, limit } => {
                writeln!(
                    text,
                    "identity: unverifiable, H has {h_order} vertices and exact search stops at {limit} (see --max-n-override)"
                )
                .unwrap();
                code = 1;
                IdentityRecord {
                    status: "unverifiable",
                    lhs: None,
                    rhs: None,
                    equal: None,
                    h_order,
                    limit: Some(limit),
                }
            }
        })
    } else {
        None
    };
    match out {
        Some(path) => writeln!(text, "H written to {}", path.display()).unwrap(),
        None => {
            writeln!(text, "edge list of H:").unwrap();
            text.push_str(&edge_text);
        }
    }
    if let Some(path) = origin_map {
        writeln!(text, "origin map written to {}", path.display()).unwrap();
    }
    let json = to_json(&ReduceRecord {
        command: "reduce",
        graph: loaded.info(),
        h_n: red.h.order(),
        h_m: red.h.size(),
        added_vertices: red.added_vertices,
        added_edges: red.added_edges,
        added_leaves: red.added_leaves,
        out: out.map(|p| p.display().to_string()),
        origin_map: origin_map.map(|p| p.display().to_string()),
        edge_list: out.is_none().then_some(edge_text),
        identity,
    });
    Ok(Outcome { text, json, code })
}

fn partition_cmd(loaded: &Loaded, k: i64, r: usize, precheck: bool) -> CmdResult {
    let g = &loaded.g;
    let result = partition::find_monopoly_partition(g, k, r, &PartitionOptions { bound_precheck: precheck })
        .map_err(|e| e.to_string())?;
    let status = match result.status {
        PartitionStatus::Found => "found",
        PartitionStatus::NoneExists => "none",
        PartitionStatus::BoundExcluded => "bound_excluded",
    };
    let mut text = loaded.header();
    writeln!(text, "partition into {r} open {k}-monopolies: {status}").unwrap();
    for (i, part) in result.parts.iter().enumerate() {
        writeln!(text, "  part {i}: {part}").unwrap();
    }
    if result.status == PartitionStatus::BoundExcluded {
        writeln!(text, "  (needs k <= 0 and r <= 2 - 2k)").unwrap();
    }
    writeln!(text, "search: {} nodes", result.nodes_explored).unwrap();
    let properties = match (result.status, result.parts.as_slice()) {
        (PartitionStatus::Found, [x, y]) if k == 0 => {
            let rep = partition::check_two_part_properties(g, x, y).map_err(|e| e.to_string())?;
            writeln!(text, "two-part properties:").unwrap();
            writeln!(text, "  balanced degrees: {}", rep.balanced_degrees).unwrap();
            writeln!(text, "  even degrees: {}", rep.even_degrees).unwrap();
            writeln!(text, "  equal induced sizes: {} ({} and {})", rep.equal_induced_sizes, rep.m_x, rep.m_y)
                .unwrap();
            writeln!(text, "  cut = m - 2|E(X)|: {} (cut {})", rep.cut_identity, rep.cut).unwrap();
            Some(PropertiesRecord {
                balanced_degrees: rep.balanced_degrees,
                even_degrees: rep.even_degrees,
                equal_induced_sizes: rep.equal_induced_sizes,
                cut_identity: rep.cut_identity,
                cut: rep.cut,
                m_x: rep.m_x,
                m_y: rep.m_y,
            })
        }
        _ => None,
    };
    let json = to_json(&PartitionRecord {
        command: "partition",
        graph: loaded.info(),
        k,
        r,
        status,
        parts: result.parts.iter().map(VertexSet::to_vec).collect(),
        nodes_explored: result.nodes_explored,
        properties,
    });
    Ok(Outcome { text, json, code: 0 })
}

fn gen(spec: &str) -> CmdResult {
    let family: FamilySpec = spec.parse().map_err(|e: Error| e.to_string())?;
    let g = family.generate().map_err(|e| e.to_string())?;
    let json = to_json(&GenRecord {
        command: "gen",
        spec: family.to_string(),
        n: g.order(),
        m: g.size(),
        edges: g.edges(),
    });
    Ok(Outcome { text: write_edge_list(&g), json, code: 0 })
}

fn formula(cli: &Cli, spec: &str, k: i64, check: bool) -> CmdResult {
    let family: FamilySpec = spec.parse().map_err(|e: Error| e.to_string())?;
    let value = bounds::exact_formula(&family, k).map_err(|e| e.to_string())?;
    let mut text = format!("closed form for {family} at k = {k}: {value}\n");
    let solved = if check {
        let g = family.generate().map_err(|e| e.to_string())?;
        let rep = solver::solve(&g, Problem::Monopoly { k }, &options(cli)).map_err(|e| e.to_string())?;
        let opt = rep.optimum.expect("V is always a k-monopoly");
        writeln!(text, "exact search: {opt} ({})", if opt == value { "agrees" } else { "DISAGREES" }).unwrap();
        Some(opt)
    } else {
        None
    };
    let agrees = solved.map(|s| s == value);
    let json = to_json(&FormulaRecord { command: "formula", spec: family.to_string(), k, value, solver: solved, agrees });
    Ok(Outcome { text, json, code: if agrees == Some(false) { 1 } else { 0 } })
}
