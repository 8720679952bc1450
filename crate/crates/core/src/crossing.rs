//! Crossing graphs: one node per edge of the drawn graph, adjacent when the
//! two edges cross.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::outer::{interleaves, OuterDrawing};
use crate::topo::TopoDrawing;
use crate::two_layer::{two_layer_crosses, TwoLayerOrder};

/// The drawing model a crossing graph was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingSource {
    Outer,
    TwoLayer,
    Topological,
    Synthetic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingGraph {
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    source: CrossingSource,
}

impl CrossingGraph {
    /// From explicit crossing pairs of node ids. Crossing nodes must be
    /// independent edges.
    pub fn from_pairs(edges: Vec<Edge>, pairs: &[(usize, usize)], source: CrossingSource) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); edges.len()];
        for &(a, b) in pairs {
            if a >= edges.len() || b >= edges.len() {
                return Err(Error::InvalidGraph(format!("crossing pair ({a},{b}) out of range")));
            }
            if !edges[a].is_independent(edges[b]) {
                return Err(Error::NonSimple(format!(
                    "edges {} and {} share an endpoint",
                    edges[a], edges[b]
                )));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
            adj.dedup();
        }
        Ok(CrossingGraph {
            edges,
            adjacency,
            source,
        })
    }

    pub fn from_outer(d: &OuterDrawing) -> Self {
        Self::from_pairs(d.graph().edges().to_vec(), &d.crossing_pairs(), CrossingSource::Outer).unwrap()
    }

    pub fn from_two_layer(g: &Graph, t: &TwoLayerOrder) -> Result<Self> {
        if t.n() != g.n() {
            return Err(Error::InvalidOrder("layers do not cover the graph".into()));
        }
        let edges = g.edges();
        let mut pairs = Vec::new();
        for i in 0..edges.len() {
            if t.is_top(edges[i].u()) == t.is_top(edges[i].v()) {
                return Err(Error::Precondition(format!("edge {} joins two vertices of one layer", edges[i])));
            }
            for j in i + 1..edges.len() {
                if two_layer_crosses(t, edges[i], edges[j]) {
                    pairs.push((i, j));
                }
            }
        }
        Self::from_pairs(edges.to_vec(), &pairs, CrossingSource::TwoLayer)
    }

    pub fn from_topo(d: &TopoDrawing) -> Self {
        Self::from_pairs(d.graph().edges().to_vec(), &d.crossing_pairs(), CrossingSource::Topological).unwrap()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self) -> CrossingSource {
        self.source
    }

    /// The drawn edge represented by node `i`.
    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn pair_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, adj) in self.adjacency.iter().enumerate() {
            out.extend(adj.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    /// Nodes without neighbors, i.e. uncrossed edges.
    pub fn isolated(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.adjacency[i].is_empty()).collect()
    }

    /// Proper 2-coloring by depth-first search; `None` when an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.len()];
        for s in 0..self.len() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let cx = color[x].unwrap();
                for &y in &self.adjacency[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            stack.push(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// All simple cycles of length at most `max_len` as node sequences, each
    /// starting at its smallest node with the second entry below the last.
    pub fn simple_cycles(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.len()];
        for s in 0..self.len() {
            path.push(s);
            on_path[s] = true;
            self.extend_cycles(s, max_len, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
            path.pop();
        }
        out.sort();
        out
    }

    fn extend_cycles(
        &self,
        s: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let x = *path.last().unwrap();
        for &y in &self.adjacency[x] {
            if y == s && path.len() >= 3 && path[1] < x {
                out.push(path.clone());
            }
            if y > s && !on_path[y] && path.len() < max_len {
                path.push(y);
                on_path[y] = true;
                self.extend_cycles(s, max_len, path, on_path, out);
                on_path[y] = false;
                path.pop();
            }
        }
    }
}

/// An odd cycle of the crossing graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycleReport {
    /// Crossing-graph node ids (edge ids of the drawn graph), in cycle order.
    pub nodes: Vec<usize>,
    pub cycle: Vec<Edge>,
    pub length: usize,
    /// Sorted end-vertices of the cycle's edges.
    pub support: Vec<usize>,
}

impl OddCycleReport {
    /// Report for a cycle given by crossing-graph node ids.
    pub fn from_nodes(cg: &CrossingGraph, nodes: Vec<usize>) -> Self {
        let cycle: Vec<Edge> = nodes.iter().map(|&i| cg.edge(i)).collect();
        let mut support: Vec<usize> = cycle.iter().flat_map(|e| e.endpoints()).collect();
        support.sort_unstable();
        support.dedup();
        OddCycleReport {
            length: nodes.len(),
            nodes,
            cycle,
            support,
        }
    }
}

/// Rotation/reflection representative: smallest node first, second below last.
fn canonical_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let k = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(k);
    let last = c.len() - 1;
    if c.len() > 2 && c[1] > c[last] {
        c[1..].reverse();
    }
    c
}

/// A shortest odd cycle, or `None` when the crossing graph is bipartite.
///
/// Breadth-first search from every node; an edge joining two nodes at equal
/// distance `d` closes an odd walk of length `2d + 1`. The global minimum over
/// all sources is a simple cycle. Among the cycles found at minimum length the
/// lexicographically least canonical one is returned.
pub fn shortest_odd_cycle(cg: &CrossingGraph) -> Option<OddCycleReport> {
    let n = cg.len();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut order = Vec::new();
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in cg.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        for &x in &order {
            if let Some(b) = &best {
                if 2 * dist[x] + 1 > b.len() {
                    break;
                }
            }
            for &y in cg.neighbors(x) {
                if x < y && dist[x] == dist[y] {
                    let Some(cycle) = close_walk(&parent, s, x, y) else {
                        continue;
                    };
                    let cycle = canonical_cycle(cycle);
                    let better = match &best {
                        None => true,
                        Some(b) => (cycle.len(), &cycle) < (b.len(), b),
                    };
                    if better {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best.map(|c| OddCycleReport::from_nodes(cg, c))
}

/// s -> ... -> x, y -> ... -> s along BFS parents, if the two paths meet only at s.
fn close_walk(parent: &[usize], s: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let climb = |mut v: usize| {
        let mut p = vec![v];
        while v != s {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let px = climb(x);
    let py = climb(y);
    let shared = px.iter().filter(|v| py.contains(v)).count();
    if shared != 1 {
        return None;
    }
    let mut cycle: Vec<usize> = px.into_iter().rev().collect();
    cycle.extend(py.into_iter().take_while(|&v| v != s));
    Some(cycle)
}

/// Whether the five edges of a 5-cycle span exactly five vertices that induce K5.
pub fn k5_support_check(d: &OuterDrawing, r: &OddCycleReport) -> Result<bool> {
    if r.length != 5 || r.cycle.len() != 5 {
        return Err(Error::Precondition(format!("expected a 5-cycle, got length {}", r.length)));
    }
    let g = d.graph();
    for (i, &e) in r.cycle.iter().enumerate() {
        let f = r.cycle[(i + 1) % 5];
        if !g.has_edge(e.u(), e.v()) || !interleaves(d.order(), e, f) {
            return Err(Error::Precondition(format!("{e} and {f} are not crossing edges of the drawing")));
        }
    }
    Ok(r.support.len() == 5 && g.induces_clique(&r.support))
}

/// Splits the edges into two crossing-free sets: uncrossed edges and one color
/// class of each crossed component go to the first set.
pub fn outerplanar_decomposition(d: &OuterDrawing) -> Result<(Vec<Edge>, Vec<Edge>)> {
    let cg = CrossingGraph::from_outer(d);
    let Some(color) = cg.two_coloring() else {
        return Err(Error::Precondition("crossing graph has an odd cycle".into()));
    };
    // two_coloring gives the smallest node of every component color false
    let mut e1 = Vec::new();
    let mut e2 = Vec::new();
    for (i, &c) in color.iter().enumerate() {
        if c {
            e2.push(cg.edge(i));
        } else {
            e1.push(cg.edge(i));
        }
    }
    Ok((e1, e2))
}
