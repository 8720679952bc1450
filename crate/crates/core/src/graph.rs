//! Simple undirected graphs on dense vertex identifiers `0..n`.
//!
//! Edges are stored in canonical form (smaller endpoint first) and sorted, so the
//! position of an edge in [`Graph::edges`] is a stable edge identifier for as long
//! as the graph value lives. Graphs are immutable once built.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonical edge between two distinct vertices.
    ///
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("self-loop")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::InvalidGraph(format!("self-loop at vertex {a}"))),
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v
    }

    #[inline]
    pub fn endpoints(self) -> [usize; 2] {
        [self.u, self.v]
    }

    #[inline]
    pub fn has_endpoint(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// Two edges are adjacent when they share an endpoint.
    #[inline]
    pub fn is_adjacent(self, other: Edge) -> bool {
        self.has_endpoint(other.u) || self.has_endpoint(other.v)
    }

    #[inline]
    pub fn is_independent(self, other: Edge) -> bool {
        !self.is_adjacent(other)
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    /// The common endpoint of two distinct adjacent edges.
    pub fn shared_vertex(self, other: Edge) -> Option<usize> {
        if self == other {
            return None;
        }
        self.endpoints().into_iter().find(|&x| other.has_endpoint(x))
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(p: [usize; 2]) -> Result<Self> {
        Edge::try_new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Common vertex of a set of edges, if the set lies in one fan.
///
/// Returns `Some(None)` when the set has fewer than two edges (any fan will do),
/// `Some(Some(v))` when all edges share `v`, and `None` when no vertex is common.
pub fn fan_apex(edges: &[Edge]) -> Option<Option<usize>> {
    match edges {
        [] | [_] => Some(None),
        [first, rest @ ..] => first
            .endpoints()
            .into_iter()
            .find(|&x| rest.iter().all(|e| e.has_endpoint(x)))
            .map(Some),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph; rejects loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            let e = Edge::try_new(a, b)?;
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e}")));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<Edge>) -> Self {
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    /// Copy of this graph with the given extra edges (already present ones are ignored).
    pub fn with_edges<I: IntoIterator<Item = Edge>>(&self, extra: I) -> Result<Self> {
        let mut set: BTreeSet<Edge> = self.edges.iter().copied().collect();
        for e in extra {
            if e.v >= self.n {
                return Err(Error::InvalidGraph(format!("edge {e} outside 0..{}", self.n)));
            }
            set.insert(e);
        }
        Ok(Self::from_edge_set(self.n, set))
    }

    /// Copy of this graph without the given edges.
    pub fn without_edges(&self, removed: &[Edge]) -> Self {
        let set: BTreeSet<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        Self::from_edge_set(self.n, set)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order; the index is the edge id.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && b < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// True iff every pair of the given vertices is adjacent.
    pub fn induces_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &a)| {
            vertices[i + 1..].iter().all(|&b| self.has_edge(a, b))
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-colouring (`false`/`true` per vertex), smallest vertex of every
    /// component coloured `false`; `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &y in &self.adjacency[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Map from edge to id, for callers doing many lookups.
    pub fn edge_index(&self) -> HashMap<Edge, usize> {
        self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m())
    }
}

/// Two disjoint vertex sets covering the graph, with every edge crossing between them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartitePartition {
    part1: Vec<usize>,
    part2: Vec<usize>,
}

impl BipartitePartition {
    /// Checks disjointness and coverage of `0..n`; parts are stored sorted.
    pub fn new(n: usize, mut part1: Vec<usize>, mut part2: Vec<usize>) -> Result<Self> {
        part1.sort_unstable();
        part2.sort_unstable();
        let mut seen = vec![false; n];
        for &v in part1.iter().chain(&part2) {
            if v >= n {
                return Err(Error::InvalidOrder(format!("vertex {v} outside 0..{n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrder(format!("vertex {v} listed twice")));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidOrder(format!("vertex {v} missing from partition")));
        }
        Ok(BipartitePartition { part1, part2 })
    }

    pub fn part1(&self) -> &[usize] {
        &self.part1
    }

    pub fn part2(&self) -> &[usize] {
        &self.part2
    }

    pub fn in_part1(&self, v: usize) -> bool {
        self.part1.binary_search(&v).is_ok()
    }

    /// True iff every edge of `g` has one endpoint in each part.
    pub fn separates(&self, g: &Graph) -> bool {
        self.part1.len() + self.part2.len() == g.n()
            && g.edges().iter().all(|e| self.in_part1(e.u()) != self.in_part1(e.v()))
    }
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_edges(n, edges).expect("complete graph is simple")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> (Graph, BipartitePartition) {
    let edges = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)));
    let g = Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple");
    let p = BipartitePartition::new(a + b, (0..a).collect(), (a..a + b).collect())
        .expect("parts cover the vertex set");
    (g, p)
}

/// `K_{1,3,h}` with parts `{0}`, `{1,2,3}`, `{4,..,3+h}`.
pub fn complete_tripartite_13h(h: usize) -> Graph {
    let n = 4 + h;
    let mut edges: Vec<(usize, usize)> = (1..4).map(|b| (0, b)).collect();
    for c in 4..n {
        edges.push((0, c));
        for b in 1..4 {
            edges.push((b, c));
        }
    }
    Graph::from_edges(n, edges).expect("K_{1,3,h} is simple")
}

pub fn cycle_graph(n: usize) -> Graph {
    if n < 3 {
        return path_graph(n);
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Plain enumeration of all 5-vertex subsets.
pub fn contains_k5(g: &Graph) -> bool {
    find_k5(g).is_some()
}

/// The lexicographically first 5-clique, if any.
pub fn find_k5(g: &Graph) -> Option<[usize; 5]> {
    let n = g.n();
    // vertices of degree < 4 can never be in a K5
    let cand: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    let k = cand.len();
    for i0 in 0..k {
        for i1 in i0 + 1..k {
            if !g.has_edge(cand[i0], cand[i1]) {
                continue;
            }
            for i2 in i1 + 1..k {
                let picked = [cand[i0], cand[i1], cand[i2]];
                if !g.induces_clique(&picked) {
                    continue;
                }
                for i3 in i2 + 1..k {
                    let picked = [cand[i0], cand[i1], cand[i2], cand[i3]];
                    if !g.induces_clique(&picked) {
                        continue;
                    }
                    for &c4 in &cand[i3 + 1..] {
                        let q = [cand[i0], cand[i1], cand[i2], cand[i3], c4];
                        if g.induces_clique(&q) {
                            return Some(q);
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invariants(g: &Graph) {
        let degsum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(degsum, 2 * g.m());
        assert!(g.m() <= g.n() * g.n().saturating_sub(1) / 2);
        for e in g.edges() {
            assert!(e.u() < e.v());
            assert!(g.neighbors(e.u()).contains(&e.v()));
            assert!(g.neighbors(e.v()).contains(&e.u()));
        }
    }

    fn naive_k5(g: &Graph) -> bool {
        let n = g.n();
        let mut idx = [0usize; 5];
        fn rec(g: &Graph, n: usize, idx: &mut [usize; 5], depth: usize, start: usize) -> bool {
            if depth == 5 {
                return g.induces_clique(idx);
            }
            (start..n).any(|v| {
                idx[depth] = v;
                rec(g, n, idx, depth + 1, v + 1)
            })
        }
        rec(g, n, &mut idx, 0, 0)
    }

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph(5).m(), 10);
        assert_eq!(complete_graph(7).m(), 21);
        let k0 = complete_graph(0);
        assert_eq!((k0.n(), k0.m()), (0, 0));
        for n in 0..9 {
            invariants(&complete_graph(n));
        }
    }

    #[test]
    fn complete_bipartite_sizes() {
        let (g, p) = complete_bipartite(2, 3);
        assert_eq!(g.m(), 6);
        assert!(p.separates(&g));
        assert_eq!(complete_bipartite(1, 4).0.m(), 4);
        assert_eq!(complete_bipartite(3, 3).0.m(), 9);
        invariants(&g);
    }

    #[test]
    fn tripartite_sizes() {
        assert_eq!(complete_tripartite_13h(6).m(), 27);
        assert_eq!(complete_tripartite_13h(1).m(), 7);
        assert_eq!(complete_tripartite_13h(10).m(), 43);
        for h in 1..8 {
            let g = complete_tripartite_13h(h);
            invariants(&g);
            assert_eq!(g.m(), 3 + 4 * h);
        }
    }

    #[test]
    fn k5_detection() {
        assert!(contains_k5(&complete_graph(5)));
        assert!(!contains_k5(&complete_bipartite(2, 3).0));
        let k5 = complete_graph(5);
        let minus = k5.without_edges(&[Edge::new(1, 3)]);
        assert!(!contains_k5(&minus));
        assert!(contains_k5(&complete_graph(7)));
        assert!(!contains_k5(&cycle_graph(9)));
    }

    #[test]
    fn k5_matches_naive_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(5..9);
            let p = rng.gen_range(0.5..0.95);
            let mut pairs = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        pairs.push((a, b));
                    }
                }
            }
            let g = Graph::from_edges(n, pairs).unwrap();
            assert_eq!(contains_k5(&g), naive_k5(&g));
        }
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn fan_apex_cases() {
        let e = Edge::new;
        assert_eq!(fan_apex(&[]), Some(None));
        assert_eq!(fan_apex(&[e(0, 1)]), Some(None));
        assert_eq!(fan_apex(&[e(0, 1), e(1, 2), e(1, 5)]), Some(Some(1)));
        assert_eq!(fan_apex(&[e(0, 1), e(1, 2), e(0, 2)]), None);
        assert_eq!(fan_apex(&[e(0, 1), e(2, 3)]), None);
    }

    #[test]
    fn two_coloring_detects_odd_cycles() {
        assert!(cycle_graph(6).two_coloring().is_some());
        assert!(cycle_graph(5).two_coloring().is_none());
        assert!(complete_bipartite(3, 4).0.two_coloring().is_some());
    }
}
