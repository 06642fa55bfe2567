//! Test corpora: every graph on a few vertices up to isomorphism, seeded
//! random connected graphs and the named families.

use std::collections::HashSet;
use std::sync::OnceLock;

use monopoly_core::{FamilySpec, Graph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const MAX_ENUMERATED: usize = 8;

/// Adjacency rows as bitmasks.
type Adj = Vec<u16>;

fn refine(adj: &Adj) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Lexicographically smallest adjacency code over labelings that list vertices
/// by refined colour. Equal for isomorphic graphs, distinct otherwise.
fn canonical_code(adj: &Adj) -> u64 {
    let n = adj.len();
    let colour = refine(adj);
    let mut slots: Vec<usize> = colour.clone();
    slots.sort_unstable();
    let total = n * n.saturating_sub(1) / 2;
    let mut best = u64::MAX;
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut used = 0u16;

    #[allow(clippy::too_many_arguments)]
    fn go(
        adj: &Adj,
        colour: &[usize],
        slots: &[usize],
        total: usize,
        placed: &mut Vec<usize>,
        used: &mut u16,
        code: u64,
        best: &mut u64,
    ) {
        let p = placed.len();
        let n = adj.len();
        if p == n {
            *best = (*best).min(code);
            return;
        }
        for v in 0..n {
            if *used >> v & 1 == 1 || colour[v] != slots[p] {
                continue;
            }
            let mut row = 0u64;
            for &q in placed.iter() {
                row = row << 1 | (adj[v] >> q & 1) as u64;
            }
            let next = code << p | row;
            let bits = (p + 1) * p / 2;
            if total > 0 && next > *best >> (total - bits) {
                continue;
            }
            placed.push(v);
            *used |= 1 << v;
            go(adj, colour, slots, total, placed, used, next, best);
            *used &= !(1 << v);
            placed.pop();
        }
    }

    go(adj, &colour, &slots, total, &mut placed, &mut used, 0, &mut best);
    best ^ ((n as u64) << 58)
}

fn to_graph(adj: &Adj) -> Graph {
    let n = adj.len();
    let mut edges = vec![];
    for (u, row) in adj.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn all_adjs() -> &'static Vec<Vec<Adj>> {
    static CACHE: OnceLock<Vec<Vec<Adj>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut levels: Vec<Vec<Adj>> = vec![vec![vec![]], vec![vec![0]]];
        for n in 2..=MAX_ENUMERATED {
            let mut seen = HashSet::new();
            let mut out = vec![];
            for base in &levels[n - 1] {
                for nbrs in 0u16..(1 << (n - 1)) {
                    let mut adj = base.clone();
                    for (u, row) in adj.iter_mut().enumerate() {
                        *row |= (nbrs >> u & 1) << (n - 1);
                    }
                    adj.push(nbrs);
                    if seen.insert(canonical_code(&adj)) {
                        out.push(adj);
                    }
                }
            }
            levels.push(out);
        }
        levels
    })
}

/// Every graph on `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATED);
    all_adjs()[n].iter().map(to_graph).collect()
}

/// Every connected graph on `n >= 2` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (2..=n).flat_map(connected_graphs).collect()
}

/// Random spanning tree plus each remaining pair independently with `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = vec![];
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    // relabel so the tree is not always rooted at 0
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_sample(seed: u64, count: usize, orders: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            let p = rng.gen_range(0.1..0.7);
            random_connected(&mut rng, n, p)
        })
        .collect()
}

pub fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().unwrap().generate().unwrap()
}
