use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph};

/// Gadgets replacing one original edge `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeGadgets {
    pub edge: Edge,
    /// `u1..u7` with `u1 = u`.
    pub u_side: [usize; 7],
    /// `v1..v7` with `v1 = v`.
    pub v_side: [usize; 7],
    /// `(u7, v7)`.
    pub spanning: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    /// One entry per original edge, in edge order.
    pub gadget_map: Vec<EdgeGadgets>,
}

/// Replaces every edge `(u, v)` by a K7 attached at `u`, a K7 attached at `v`,
/// and the spanning edge between their far vertices. Original vertices keep
/// their ids; edge `t` adds vertices `n + 12t .. n + 12t + 12`.
pub fn reduce_one_planarity(g: &Graph) -> ReductionOutput {
    let n = g.n();
    let mut pairs = Vec::with_capacity(43 * g.m());
    let mut gadget_map = Vec::with_capacity(g.m());
    for (t, &e) in g.edges().iter().enumerate() {
        let base = n + 12 * t;
        let mut u_side = [e.u(); 7];
        let mut v_side = [e.v(); 7];
        for k in 1..7 {
            u_side[k] = base + k - 1;
            v_side[k] = base + 6 + k - 1;
        }
        for side in [&u_side, &v_side] {
            for a in 0..7 {
                for b in a + 1..7 {
                    pairs.push((side[a], side[b]));
                }
            }
        }
        pairs.push((u_side[6], v_side[6]));
        gadget_map.push(EdgeGadgets {
            edge: e,
            u_side,
            v_side,
            spanning: Edge::new(u_side[6], v_side[6]),
        });
    }
    let graph = Graph::from_edges(n + 12 * g.m(), pairs).expect("gadgets are edge-disjoint");
    ReductionOutput { graph, gadget_map }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn check(g: &Graph) {
        let r = reduce_one_planarity(g);
        assert_eq!(r.graph.n(), g.n() + 12 * g.m());
        assert_eq!(r.graph.m(), 43 * g.m());
        let mut far = Vec::new();
        for gm in &r.gadget_map {
            assert!(r.graph.induces_clique(&gm.u_side));
            assert!(r.graph.induces_clique(&gm.v_side));
            assert!(r.graph.has_edge(gm.spanning.u(), gm.spanning.v()));
            far.extend(gm.spanning.endpoints());
        }
        let before = far.len();
        far.sort_unstable();
        far.dedup();
        assert_eq!(far.len(), before, "spanning edges form a matching");
    }

    #[test]
    fn sizes() {
        let k2 = complete_graph(2);
        let r = reduce_one_planarity(&k2);
        assert_eq!((r.graph.n(), r.graph.m()), (14, 43));
        let r = reduce_one_planarity(&complete_graph(4));
        assert_eq!((r.graph.n(), r.graph.m()), (76, 258));
        let r = reduce_one_planarity(&Graph::empty(3));
        assert_eq!((r.graph.n(), r.graph.m()), (3, 0));
        check(&complete_graph(5));
    }

    #[test]
    fn original_edges_are_replaced() {
        let r = reduce_one_planarity(&complete_graph(3));
        assert!(!r.graph.has_edge(0, 1));
        assert_eq!(r.graph.degree(0), 12);
    }
}
