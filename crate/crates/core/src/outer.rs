//! Outer drawings as circular vertex orders.
//!
//! With every vertex on the outer face of a simple drawing, two edges cross
//! exactly when their endpoints interleave along the boundary. Outer
//! fan-planarity of a fixed order is therefore a combinatorial predicate, and
//! the side condition never applies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{ingest_straight_line, Point};
use crate::graph::{fan_apex, Edge, Graph};
use crate::topo::TopoDrawing;

/// A cyclic permutation of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CircularOrder {
    order: Vec<usize>,
    #[serde(skip)]
    positions: Vec<usize>,
}

impl CircularOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut positions = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrder(format!("vertex {v} outside 0..{n}")));
            }
            if positions[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!("vertex {v} appears twice")));
            }
            positions[v] = i;
        }
        Ok(CircularOrder { order, positions })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).unwrap()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.positions[v]
    }

    #[inline]
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut order = self.order.clone();
        if !order.is_empty() {
            let k = k % order.len();
            order.rotate_left(k);
        }
        Self::new(order).unwrap()
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Self::new(order).unwrap()
    }

    /// Representative of the rotation/reflection class: vertex 0 first and the
    /// second entry smaller than the last.
    pub fn canonical(&self) -> Self {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let mut c = self.rotated(self.position(0));
        if n > 2 && c.order[1] > c.order[n - 1] {
            c.order[1..].reverse();
            c = Self::new(c.order).unwrap();
        }
        c
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Consecutive pairs around the circle (the boundary edges of a drawing on this order).
    pub fn hull_edges(&self) -> Vec<Edge> {
        let n = self.len();
        if n < 2 {
            return Vec::new();
        }
        let mut out: Vec<Edge> = (0..n)
            .filter(|&i| n > 2 || i + 1 < n)
            .map(|i| Edge::new(self.order[i], self.order[(i + 1) % n]))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl TryFrom<Vec<usize>> for CircularOrder {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CircularOrder> for Vec<usize> {
    fn from(c: CircularOrder) -> Self {
        c.order
    }
}

impl fmt::Display for CircularOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Crossing test on raw positions; edges sharing an endpoint never cross.
#[inline]
pub fn interleaves_at(positions: &[usize], e: Edge, f: Edge) -> bool {
    if e.is_adjacent(f) {
        return false;
    }
    let (a, b) = (positions[e.u()], positions[e.v()]);
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let inside = |x: usize| lo < positions[x] && positions[x] < hi;
    inside(f.u()) != inside(f.v())
}

/// True iff the chords `e` and `f` cross in the outer drawing on `order`.
pub fn interleaves(order: &CircularOrder, e: Edge, f: Edge) -> bool {
    interleaves_at(&order.positions, e, f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterDrawing {
    graph: Graph,
    order: CircularOrder,
}

impl OuterDrawing {
    pub fn new(graph: Graph, order: CircularOrder) -> Result<Self> {
        if graph.n() != order.len() {
            return Err(Error::InvalidOrder(format!(
                "order has {} vertices, graph has {}",
                order.len(),
                graph.n()
            )));
        }
        Ok(OuterDrawing { graph, order })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &CircularOrder {
        &self.order
    }

    /// Edge-id pairs `(i, j)`, `i < j`, that cross.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let edges = self.graph.edges();
        let mut out = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if interleaves(&self.order, edges[i], edges[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Edges crossing `e`, in edge order.
    pub fn crossers(&self, e: Edge) -> Vec<Edge> {
        self.graph
            .edges()
            .iter()
            .copied()
            .filter(|&f| interleaves(&self.order, e, f))
            .collect()
    }
}

/// An edge crossed by two independent edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OuterViolation {
    pub edge: Edge,
    pub crossers: (Edge, Edge),
}

/// One violation per offending edge (first independent crosser pair), in edge order.
pub fn outer_violations(d: &OuterDrawing) -> Vec<OuterViolation> {
    let mut out = Vec::new();
    for &e in d.graph.edges() {
        let xs = d.crossers(e);
        if fan_apex(&xs).is_some() {
            continue;
        }
        'pairs: for (i, &f) in xs.iter().enumerate() {
            for &g in &xs[i + 1..] {
                if f.is_independent(g) {
                    out.push(OuterViolation { edge: e, crossers: (f, g) });
                    break 'pairs;
                }
            }
        }
    }
    out
}

/// Whether the edges on `positions` stay outer fan-planar after adding `g`,
/// assuming they were before.
pub(crate) fn addition_keeps_fan(positions: &[usize], edges: &[Edge], g: Edge) -> bool {
    let xs: Vec<Edge> = edges
        .iter()
        .copied()
        .filter(|&f| interleaves_at(positions, g, f))
        .collect();
    if fan_apex(&xs).is_none() {
        return false;
    }
    xs.iter().all(|&f| {
        // crossers of f now include g
        let mut fx: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|&h| interleaves_at(positions, f, h))
            .collect();
        fx.push(g);
        fan_apex(&fx).is_some()
    })
}

/// Greedy closure: adds absent edges in lexicographic order, restarting after each
/// insertion, while the order stays fan-planar.
pub fn saturate(d: &OuterDrawing) -> Result<Graph> {
    if !outer_violations(d).is_empty() {
        return Err(Error::Precondition("drawing is not outer fan-planar".into()));
    }
    let n = d.graph.n();
    let pos = d.order.positions();
    let mut edges: Vec<Edge> = d.graph.edges().to_vec();
    'restart: loop {
        for a in 0..n {
            for b in a + 1..n {
                let g = Edge::new(a, b);
                if edges.binary_search(&g).is_ok() {
                    continue;
                }
                if addition_keeps_fan(pos, &edges, g) {
                    let at = edges.binary_search(&g).unwrap_err();
                    edges.insert(at, g);
                    continue 'restart;
                }
            }
        }
        break;
    }
    Graph::from_edges(n, edges.iter().map(|e| (e.u(), e.v())))
}

/// Points in convex counter-clockwise position, one per circle slot.
fn convex_points(n: usize, attempt: u64) -> Vec<Point> {
    // x strictly increasing, points on y = x^2 form a convex chain
    let mut x = 0i64;
    let mut state = attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
    (0..n)
        .map(|i| {
            if i > 0 {
                let step = if attempt == 0 {
                    1
                } else {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    1 + (state % 7) as i64
                };
                x += step;
            }
            (x, x * x)
        })
        .collect()
}

/// Rotation system of the drawing with vertices in convex position on the
/// order and straight chords.
pub fn outer_to_topo(d: &OuterDrawing) -> TopoDrawing {
    let n = d.graph.n();
    for attempt in 0..256 {
        let slots = convex_points(n, attempt);
        let pts: Vec<Point> = (0..n).map(|v| slots[d.order.position(v)]).collect();
        if let Ok(t) = ingest_straight_line(d.graph.clone(), pts) {
            return t;
        }
    }
    unreachable!("no non-degenerate convex placement found")
}

/// Advances `p` to the next permutation in lexicographic order; false after the last.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};
    use crate::topo::{check_realizable, max_crossings_per_edge, validate_fan_planar};

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn interleaving_examples() {
        let o = CircularOrder::identity(4);
        assert!(interleaves(&o, e(0, 2), e(1, 3)));
        assert!(!interleaves(&o, e(0, 1), e(2, 3)));
        assert!(!interleaves(&o, e(0, 2), e(0, 3)));
    }

    #[test]
    fn interleaving_symmetric_and_invariant_exhaustive() {
        // every order of 6 vertices, every edge pair
        let n = 6;
        let all: Vec<Edge> = complete_graph(n).edges().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            let o = CircularOrder::new(perm.clone()).unwrap();
            let rot = o.rotated(2);
            let rev = o.reversed();
            for &a in &all {
                for &b in &all {
                    let x = interleaves(&o, a, b);
                    assert_eq!(x, interleaves(&o, b, a));
                    assert_eq!(x, interleaves(&rot, a, b));
                    assert_eq!(x, interleaves(&rev, a, b));
                }
            }
            count += 1;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(count, 720);
    }

    #[test]
    fn canonical_form() {
        let o = CircularOrder::new(vec![3, 4, 0, 2, 1]).unwrap();
        let c = o.canonical();
        assert_eq!(c.as_slice(), &[0, 2, 1, 3, 4]);
        assert_eq!(CircularOrder::new(vec![0, 4, 1, 2, 3]).unwrap().canonical().as_slice(), &[0, 3, 2, 1, 4]);
        assert!(c.is_canonical());
        assert_eq!(o.reversed().canonical(), c);
    }

    #[test]
    fn k5_valid_k6_invalid() {
        let d = OuterDrawing::new(complete_graph(5), CircularOrder::identity(5)).unwrap();
        assert!(outer_violations(&d).is_empty());
        assert_eq!(d.crossers(e(0, 2)), vec![e(1, 3), e(1, 4)]);
        let d6 = OuterDrawing::new(complete_graph(6), CircularOrder::identity(6)).unwrap();
        let v = outer_violations(&d6);
        assert!(!v.is_empty());
        for x in v {
            assert!(x.crossers.0.is_independent(x.crossers.1));
            assert!(interleaves(d6.order(), x.edge, x.crossers.0));
            assert!(interleaves(d6.order(), x.edge, x.crossers.1));
        }
    }

    #[test]
    fn planar_outer_drawing_has_no_violation() {
        let d = OuterDrawing::new(cycle_graph(7), CircularOrder::identity(7)).unwrap();
        assert!(outer_violations(&d).is_empty());
        assert!(d.crossing_pairs().is_empty());
    }

    #[test]
    fn saturation_examples() {
        let c5 = OuterDrawing::new(cycle_graph(5), CircularOrder::identity(5)).unwrap();
        assert_eq!(saturate(&c5).unwrap(), complete_graph(5));
        let k5 = OuterDrawing::new(complete_graph(5), CircularOrder::new(vec![0, 3, 1, 4, 2]).unwrap()).unwrap();
        if outer_violations(&k5).is_empty() {
            assert_eq!(saturate(&k5).unwrap(), complete_graph(5));
        }
        let c4 = OuterDrawing::new(cycle_graph(4), CircularOrder::identity(4)).unwrap();
        assert_eq!(saturate(&c4).unwrap(), complete_graph(4));
    }

    #[test]
    fn saturation_rejects_invalid_input() {
        let d6 = OuterDrawing::new(complete_graph(6), CircularOrder::identity(6)).unwrap();
        assert!(matches!(saturate(&d6), Err(Error::Precondition(_))));
    }

    #[test]
    fn saturation_contains_hull_and_is_fixed_point() {
        let order = CircularOrder::new(vec![0, 4, 2, 6, 1, 5, 3]).unwrap();
        let d = OuterDrawing::new(Graph::empty(7), order.clone()).unwrap();
        let s = saturate(&d).unwrap();
        for h in order.hull_edges() {
            assert!(s.has_edge(h.u(), h.v()));
        }
        let again = OuterDrawing::new(s.clone(), order).unwrap();
        assert!(outer_violations(&again).is_empty());
        assert_eq!(saturate(&again).unwrap(), s);
    }

    #[test]
    fn topo_conversion_counts() {
        let k5 = OuterDrawing::new(complete_graph(5), CircularOrder::identity(5)).unwrap();
        let t = outer_to_topo(&k5);
        assert_eq!(t.crossing_count(), 5);
        assert!(check_realizable(&t));
        assert!(validate_fan_planar(&t).is_empty());
        assert_eq!(max_crossings_per_edge(&t), 2);

        let c6 = OuterDrawing::new(cycle_graph(6), CircularOrder::identity(6)).unwrap();
        assert_eq!(outer_to_topo(&c6).crossing_count(), 0);

        let k4 = OuterDrawing::new(complete_graph(4), CircularOrder::identity(4)).unwrap();
        assert_eq!(outer_to_topo(&k4).crossing_count(), 1);
    }

    #[test]
    fn topo_conversion_matches_interleaving_pairs() {
        let order = CircularOrder::new(vec![2, 0, 5, 1, 4, 3, 6]).unwrap();
        let d = OuterDrawing::new(complete_graph(7), order).unwrap();
        let t = outer_to_topo(&d);
        assert_eq!(t.crossing_pairs(), d.crossing_pairs());
        assert!(check_realizable(&t));
    }
}
