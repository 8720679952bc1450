//! Planarized rotation systems.
//!
//! A [`TopoDrawing`] stores a simple drawing of a graph combinatorially: every
//! crossing becomes a degree-4 node, every edge records the crossings it meets
//! from its smaller to its larger endpoint, and every node (real vertex or
//! crossing) records the counter-clockwise cyclic order of the fragment-ends
//! leaving it.

mod faces;
mod fan;
mod fragments;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use faces::{check_realizable, planarization_stats, PlanarizationStats};
pub use fan::{is_k_planar, max_crossings_per_edge, validate_fan_planar, Violation, ViolationKind};
pub use fragments::{fragment_graph, spine_components, Fragment, FragmentGraph};

/// A node of the planarized map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Node {
    Vertex(usize),
    Crossing(usize),
}

/// A fragment-end at some node: the piece of `edge` leaving the node towards `toward`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: usize,
    pub toward: Node,
}

impl Dart {
    pub fn new(edge: usize, toward: Node) -> Self {
        Dart { edge, toward }
    }
}

/// Integer coordinates of a drawing: one point per vertex and, per edge id,
/// the interior bend points from the smaller to the larger endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Geometry {
    pub vertices: Vec<(i64, i64)>,
    pub bends: Vec<Vec<(i64, i64)>>,
}

/// Raw, unchecked drawing data. Turned into a [`TopoDrawing`] by [`TopoDrawing::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawingParts {
    pub graph: Graph,
    /// Edge-id pair of every crossing node.
    pub crossings: Vec<[usize; 2]>,
    /// Crossing ids met along each edge (indexed by edge id), smaller endpoint first.
    pub routes: Vec<Vec<usize>>,
    /// Counter-clockwise rotation at each real vertex.
    pub vertex_rotations: Vec<Vec<Dart>>,
    /// Counter-clockwise rotation at each crossing.
    pub crossing_rotations: Vec<Vec<Dart>>,
    pub geometry: Option<Geometry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoDrawing {
    graph: Graph,
    crossings: Vec<[usize; 2]>,
    routes: Vec<Vec<usize>>,
    vertex_rotations: Vec<Vec<Dart>>,
    crossing_rotations: Vec<[Dart; 4]>,
    geometry: Option<Geometry>,
}

impl TopoDrawing {
    /// Checks every structural invariant of the model and freezes the drawing.
    pub fn new(parts: DrawingParts) -> Result<Self> {
        let DrawingParts {
            graph,
            crossings,
            routes,
            vertex_rotations,
            crossing_rotations,
            geometry,
        } = parts;
        let m = graph.m();
        let n = graph.n();
        if routes.len() != m {
            return Err(Error::Structural(format!("{} routes for {m} edges", routes.len())));
        }
        if vertex_rotations.len() != n {
            return Err(Error::Structural(format!(
                "{} vertex rotations for {n} vertices",
                vertex_rotations.len()
            )));
        }
        if crossing_rotations.len() != crossings.len() {
            return Err(Error::Structural(format!(
                "{} crossing rotations for {} crossings",
                crossing_rotations.len(),
                crossings.len()
            )));
        }

        let mut crossings = crossings;
        let mut pairs = BTreeSet::new();
        for (c, pair) in crossings.iter_mut().enumerate() {
            pair.sort_unstable();
            let [a, b] = *pair;
            if b >= m {
                return Err(Error::Structural(format!("crossing {c} names unknown edge {b}")));
            }
            if a == b {
                return Err(Error::NonSimple(format!("crossing {c} is a self-crossing of edge {a}")));
            }
            let (ea, eb) = (graph.edge(a), graph.edge(b));
            if ea.is_adjacent(eb) {
                return Err(Error::NonSimple(format!("adjacent edges {ea} and {eb} cross")));
            }
            if !pairs.insert((a, b)) {
                return Err(Error::NonSimple(format!("edges {ea} and {eb} cross more than once")));
            }
        }

        // every crossing must sit exactly once on the routes of its two edges, nowhere else
        let mut seen = vec![0usize; crossings.len()];
        for (e, route) in routes.iter().enumerate() {
            let mut local = BTreeSet::new();
            for &c in route {
                if c >= crossings.len() {
                    return Err(Error::Structural(format!("route of edge {e} names unknown crossing {c}")));
                }
                if !crossings[c].contains(&e) {
                    return Err(Error::Structural(format!(
                        "crossing {c} on the route of edge {e} does not involve it"
                    )));
                }
                if !local.insert(c) {
                    return Err(Error::NonSimple(format!("edge {e} passes crossing {c} twice")));
                }
                seen[c] += 1;
            }
        }
        if let Some(c) = seen.iter().position(|&k| k != 2) {
            return Err(Error::Structural(format!(
                "crossing {c} appears {} times on routes, expected 2",
                seen[c]
            )));
        }

        let mut drawing = TopoDrawing {
            graph,
            crossings,
            routes,
            vertex_rotations: Vec::new(),
            crossing_rotations: Vec::new(),
            geometry,
        };

        for (v, rot) in vertex_rotations.iter().enumerate() {
            let expected: BTreeSet<Dart> = drawing
                .graph
                .neighbors(v)
                .iter()
                .map(|&w| {
                    let e = drawing.graph.edge_id(Edge::new(v, w)).unwrap();
                    Dart::new(e, drawing.first_node_from(e, v))
                })
                .collect();
            let given: BTreeSet<Dart> = rot.iter().copied().collect();
            if given.len() != rot.len() || given != expected {
                return Err(Error::Structural(format!(
                    "rotation at vertex {v} does not list exactly its incident fragment-ends"
                )));
            }
        }
        drawing.vertex_rotations = vertex_rotations;

        let mut crot = Vec::with_capacity(drawing.crossings.len());
        for (c, rot) in crossing_rotations.iter().enumerate() {
            let [a, b] = drawing.crossings[c];
            let expected: BTreeSet<Dart> = [a, b]
                .into_iter()
                .flat_map(|e| {
                    let (p, q) = drawing.neighbors_on_route(e, c);
                    [Dart::new(e, p), Dart::new(e, q)]
                })
                .collect();
            let given: BTreeSet<Dart> = rot.iter().copied().collect();
            if rot.len() != 4 || given != expected {
                return Err(Error::Structural(format!(
                    "rotation at crossing {c} does not list exactly its four fragment-ends"
                )));
            }
            // the two fragments of one edge must be opposite
            if rot[0].edge != rot[2].edge || rot[1].edge != rot[3].edge {
                return Err(Error::Structural(format!(
                    "rotation at crossing {c} does not alternate between its two edges"
                )));
            }
            crot.push([rot[0], rot[1], rot[2], rot[3]]);
        }
        drawing.crossing_rotations = crot;

        if let Some(geo) = &drawing.geometry {
            if geo.vertices.len() != n || geo.bends.len() != m {
                return Err(Error::Structural("geometry does not match the graph".into()));
            }
        }
        Ok(drawing)
    }

    /// Deconstructs the drawing into its raw parts.
    pub fn to_parts(&self) -> DrawingParts {
        DrawingParts {
            graph: self.graph.clone(),
            crossings: self.crossings.clone(),
            routes: self.routes.clone(),
            vertex_rotations: self.vertex_rotations.clone(),
            crossing_rotations: self.crossing_rotations.iter().map(|r| r.to_vec()).collect(),
            geometry: self.geometry.clone(),
        }
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Edge ids of crossing `c`, smaller first.
    #[inline]
    pub fn crossing_edges(&self, c: usize) -> [usize; 2] {
        self.crossings[c]
    }

    pub fn crossings(&self) -> &[[usize; 2]] {
        &self.crossings
    }

    /// Crossings met along edge `e`, from its smaller to its larger endpoint.
    #[inline]
    pub fn route(&self, e: usize) -> &[usize] {
        &self.routes[e]
    }

    pub fn rotation(&self, node: Node) -> &[Dart] {
        match node {
            Node::Vertex(v) => &self.vertex_rotations[v],
            Node::Crossing(c) => &self.crossing_rotations[c],
        }
    }

    pub fn geometry(&self) -> Option<&Geometry> {
        self.geometry.as_ref()
    }

    /// Same drawing without coordinates.
    pub fn without_geometry(&self) -> Self {
        TopoDrawing {
            geometry: None,
            ..self.clone()
        }
    }

    /// Edge ids crossing edge `e`, in route order.
    pub fn crossers(&self, e: usize) -> Vec<usize> {
        self.routes[e]
            .iter()
            .map(|&c| {
                let [a, b] = self.crossings[c];
                if a == e {
                    b
                } else {
                    a
                }
            })
            .collect()
    }

    /// Unordered edge-id pairs that cross, sorted.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.crossings.iter().map(|&[a, b]| (a, b)).collect();
        out.sort_unstable();
        out
    }

    /// Full node sequence of edge `e`, smaller endpoint first.
    pub fn route_nodes(&self, e: usize) -> Vec<Node> {
        let edge = self.graph.edge(e);
        let mut nodes = Vec::with_capacity(self.routes[e].len() + 2);
        nodes.push(Node::Vertex(edge.u()));
        nodes.extend(self.routes[e].iter().map(|&c| Node::Crossing(c)));
        nodes.push(Node::Vertex(edge.v()));
        nodes
    }

    /// The node following endpoint `v` along edge `e`.
    fn first_node_from(&self, e: usize, v: usize) -> Node {
        let edge = self.graph.edge(e);
        let route = &self.routes[e];
        if v == edge.u() {
            route.first().map_or(Node::Vertex(edge.v()), |&c| Node::Crossing(c))
        } else {
            route.last().map_or(Node::Vertex(edge.u()), |&c| Node::Crossing(c))
        }
    }

    /// (previous, next) nodes around crossing `c` along edge `e`.
    pub fn neighbors_on_route(&self, e: usize, c: usize) -> (Node, Node) {
        let nodes = self.route_nodes(e);
        let i = nodes
            .iter()
            .position(|&x| x == Node::Crossing(c))
            .expect("crossing on route");
        (nodes[i - 1], nodes[i + 1])
    }

    /// Relabels crossings by their sorted edge pair and starts every rotation at
    /// its least dart; two drawings are the same up to crossing labels iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> TopoDrawing {
        let mut order: Vec<usize> = (0..self.crossings.len()).collect();
        order.sort_by_key(|&c| self.crossings[c]);
        let mut relabel = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        self.relabeled(&relabel, true)
    }

    /// Applies a crossing permutation (`perm[old] = new`).
    pub fn relabel_crossings(&self, perm: &[usize]) -> Result<TopoDrawing> {
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..self.crossings.len()).collect::<Vec<_>>() {
            return Err(Error::Structural("not a permutation of the crossings".into()));
        }
        Ok(self.relabeled(perm, false))
    }

    fn relabeled(&self, perm: &[usize], normalize_rotations: bool) -> TopoDrawing {
        let map_node = |n: Node| match n {
            Node::Crossing(c) => Node::Crossing(perm[c]),
            v => v,
        };
        let map_dart = |d: Dart| Dart::new(d.edge, map_node(d.toward));
        let mut crossings = vec![[0, 0]; self.crossings.len()];
        let mut crossing_rotations = vec![[Dart::new(0, Node::Vertex(0)); 4]; self.crossings.len()];
        for (old, &new) in perm.iter().enumerate() {
            crossings[new] = self.crossings[old];
            let mut rot: Vec<Dart> = self.crossing_rotations[old].iter().map(|&d| map_dart(d)).collect();
            if normalize_rotations {
                rotate_to_min(&mut rot);
            }
            crossing_rotations[new] = [rot[0], rot[1], rot[2], rot[3]];
        }
        let routes = self
            .routes
            .iter()
            .map(|r| r.iter().map(|&c| perm[c]).collect())
            .collect();
        let vertex_rotations = self
            .vertex_rotations
            .iter()
            .map(|r| {
                let mut rot: Vec<Dart> = r.iter().map(|&d| map_dart(d)).collect();
                if normalize_rotations {
                    rotate_to_min(&mut rot);
                }
                rot
            })
            .collect();
        TopoDrawing {
            graph: self.graph.clone(),
            crossings,
            routes,
            vertex_rotations,
            crossing_rotations,
            geometry: self.geometry.clone(),
        }
    }

    /// Equality up to crossing labels and rotation starting points (geometry ignored).
    pub fn same_up_to_crossing_labels(&self, other: &TopoDrawing) -> bool {
        let a = self.without_geometry().canonical();
        let b = other.without_geometry().canonical();
        a == b
    }

    /// Edge ids grouped by whether they are crossed at all.
    pub fn crossed_edges(&self) -> Vec<usize> {
        (0..self.graph.m()).filter(|&e| !self.routes[e].is_empty()).collect()
    }

    /// All nodes of the planarized map.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (0..self.graph.n())
            .map(Node::Vertex)
            .chain((0..self.crossings.len()).map(Node::Crossing))
    }

    /// Map from crossing edge pairs to crossing id.
    pub fn crossing_lookup(&self) -> BTreeMap<(usize, usize), usize> {
        self.crossings
            .iter()
            .enumerate()
            .map(|(c, &[a, b])| ((a, b), c))
            .collect()
    }
}

fn rotate_to_min(rot: &mut [Dart]) {
    if let Some(i) = rot
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1).then(Ordering::Equal))
        .map(|(i, _)| i)
    {
        rot.rotate_left(i);
    }
}

/// True iff no three edges pairwise cross.
pub fn has_three_mutually_crossing(d: &TopoDrawing) -> Option<[usize; 3]> {
    let m = d.graph().m();
    let mut adj = vec![BTreeSet::new(); m];
    for (a, b) in d.crossing_pairs() {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    for a in 0..m {
        for &b in adj[a].range(a + 1..) {
            if let Some(&c) = adj[a].range(b + 1..).find(|c| adj[b].contains(c)) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    /// K4 on a square: vertices 0,1,2,3 counter-clockwise, diagonals (0,2),(1,3) cross once.
    pub(crate) fn k4_parts() -> DrawingParts {
        let g = complete_graph(4);
        let id = |a, b| g.edge_id(Edge::new(a, b)).unwrap();
        let (e01, e02, e03, e12, e13, e23) = (id(0, 1), id(0, 2), id(0, 3), id(1, 2), id(1, 3), id(2, 3));
        let x = Node::Crossing(0);
        let v = Node::Vertex;
        DrawingParts {
            crossings: vec![[e02, e13]],
            routes: {
                let mut r = vec![Vec::new(); 6];
                r[e02] = vec![0];
                r[e13] = vec![0];
                r
            },
            vertex_rotations: vec![
                vec![Dart::new(e01, v(1)), Dart::new(e02, x), Dart::new(e03, v(3))],
                vec![Dart::new(e12, v(2)), Dart::new(e13, x), Dart::new(e01, v(0))],
                vec![Dart::new(e23, v(3)), Dart::new(e02, x), Dart::new(e12, v(1))],
                vec![Dart::new(e03, v(0)), Dart::new(e13, x), Dart::new(e23, v(2))],
            ],
            crossing_rotations: vec![vec![
                Dart::new(e02, v(2)),
                Dart::new(e13, v(3)),
                Dart::new(e02, v(0)),
                Dart::new(e13, v(1)),
            ]],
            graph: g,
            geometry: None,
        }
    }

    #[test]
    fn k4_with_one_crossing_is_accepted() {
        let d = TopoDrawing::new(k4_parts()).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert!(check_realizable(&d));
    }

    #[test]
    fn non_alternating_crossing_rotation_is_structural_error() {
        let mut parts = k4_parts();
        parts.crossing_rotations[0].swap(1, 2);
        assert!(matches!(TopoDrawing::new(parts), Err(Error::Structural(_))));
    }

    #[test]
    fn adjacent_crossing_is_non_simple() {
        let mut parts = k4_parts();
        parts.crossings[0] = [0, 1];
        assert!(matches!(TopoDrawing::new(parts), Err(Error::NonSimple(_))));
    }

    #[test]
    fn missing_route_entry_is_structural_error() {
        let mut parts = k4_parts();
        let g = parts.graph.clone();
        parts.routes[g.edge_id(Edge::new(1, 3)).unwrap()].clear();
        assert!(TopoDrawing::new(parts).is_err());
    }

    #[test]
    fn canonical_ignores_crossing_labels() {
        let d = TopoDrawing::new(k4_parts()).unwrap();
        let relabeled = d.relabel_crossings(&[0]).unwrap();
        assert!(d.same_up_to_crossing_labels(&relabeled));
    }
}
