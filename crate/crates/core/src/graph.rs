//! Simple undirected graphs on dense vertex identifiers `0..n` and the
//! bitset-backed vertex sets every other module works with.

use std::fmt;
use std::ops::RangeInclusive;

use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `0..n` for a fixed universe size `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from a list of members, rejecting out-of-range entries.
    pub fn from_vertices(universe: usize, vertices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(universe);
        for &v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Interprets the low `universe` bits of `mask` as a characteristic vector.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD);
        let mut s = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == WORD { u64::MAX } else { (1u64 << universe) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} out of range");
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} out of range");
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.universe);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection_len(other) == 0
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        let mut out = self.clone();
        for (o, w) in out.words.iter_mut().zip(&other.words) {
            *o |= w;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&v| self.contains(v))
    }

    /// Members in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    neighborhoods: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `0..n`. Self-loops, parallel edges and out-of-range
    /// endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut neighborhoods = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if neighborhoods[u].contains(v) {
                return Err(Error::InvalidParameter(format!("duplicate edge {u} {v}")));
            }
            neighborhoods[u].insert(v);
            neighborhoods[v].insert(u);
        }
        let adjacency: Vec<Vec<usize>> = neighborhoods.iter().map(VertexSet::to_vec).collect();
        let graph = Graph {
            adjacency,
            neighborhoods,
            edge_count: edges.len(),
        };
        debug_assert_eq!(graph.degree_sum(), 2 * graph.edge_count);
        Ok(graph)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    fn degree_sum(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Sorted open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn neighborhood(&self, v: usize) -> &VertexSet {
        &self.neighborhoods[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.neighborhoods[u].contains(v)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.order() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        (0..self.order()).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.order()).find(|&v| self.degree(v) == 0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }

    /// Proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for &w in self.neighbors(u) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Chordality via maximum cardinality search followed by a
    /// perfect-elimination-ordering check. Quadratic; meant for small graphs.
    pub fn is_chordal(&self) -> bool {
        let n = self.order();
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        // position in the elimination ordering (reverse of visit order)
        let mut position = vec![0usize; n];
        for step in (0..n).rev() {
            let v = (0..n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            numbered[v] = true;
            position[v] = step;
            for &w in self.neighbors(v) {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| position[v]);
        for &v in &order {
            let later: Vec<usize> = self
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w] > position[v])
                .collect();
            if let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) {
                if later
                    .iter()
                    .any(|&w| w != parent && !self.has_edge(parent, w))
                {
                    return false;
                }
            }
        }
        true
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.order() {
            Ok(())
        } else {
            Err(Error::SetMismatch { expected: self.order(), found: s.universe() })
        }
    }

    /// δ_S(v): number of neighbors of `v` inside `s`.
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> Result<usize> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        Ok(self.degree_in_unchecked(v, s))
    }

    #[inline]
    pub(crate) fn degree_in_unchecked(&self, v: usize, s: &VertexSet) -> usize {
        self.neighborhoods[v].intersection_len(s)
    }

    /// ∂S = N[S] − S.
    pub fn boundary(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.boundary_unchecked(s))
    }

    pub(crate) fn boundary_unchecked(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.order());
        for v in s.iter() {
            for &w in self.neighbors(v) {
                if !s.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// c(S, S̄): edges with exactly one endpoint in `s`.
    pub fn cut_size(&self, s: &VertexSet) -> Result<usize> {
        self.check_set(s)?;
        let outside = s.complement();
        Ok(s.iter().map(|v| self.degree_in_unchecked(v, &outside)).sum())
    }

    /// |E(⟨S⟩)|: edges with both endpoints in `s`.
    pub fn induced_size(&self, s: &VertexSet) -> Result<usize> {
        self.check_set(s)?;
        let twice: usize = s.iter().map(|v| self.degree_in_unchecked(v, s)).sum();
        Ok(twice / 2)
    }

    /// Does `s` dominate the graph (every vertex outside has a neighbor inside)?
    pub(crate) fn dominates(&self, s: &VertexSet) -> bool {
        (0..self.order()).all(|v| s.contains(v) || self.degree_in_unchecked(v, s) > 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

/// The interval `1 − ⌈δ/2⌉ ..= ⌊δ/2⌋` of k for which k-monopolies are defined.
pub fn valid_k_range(g: &Graph) -> Result<RangeInclusive<i64>> {
    if let Some(vertex) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex { vertex });
    }
    if g.order() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let delta = g.min_degree() as i64;
    Ok(1 - ceil_div(delta, 2)..=floor_div(delta, 2))
}

pub(crate) fn check_k(g: &Graph, k: i64) -> Result<()> {
    let range = valid_k_range(g)?;
    if range.contains(&k) {
        Ok(())
    } else {
        Err(Error::KOutOfRange { k, lo: *range.start(), hi: *range.end() })
    }
}
