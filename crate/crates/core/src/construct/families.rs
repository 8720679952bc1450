use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, Edge, Graph};
use crate::outer::CircularOrder;
use crate::two_layer::TwoLayerOrder;

/// `h` copies of K5 glued along single outer edges, with an outer fan-planar order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedFamily {
    pub graph: Graph,
    pub witness: CircularOrder,
    pub h: usize,
}

/// Starts from K5 on `0..5` in order; each further block takes the
/// lexicographically least hull edge `(a, b)` of the current order, inserts
/// three new vertices between `a` and `b`, and adds K5 on those five vertices.
pub fn glued_k5_family(h: usize) -> Result<GluedFamily> {
    if h == 0 {
        return Err(Error::Precondition("the family needs at least one K5 block".into()));
    }
    let mut order: Vec<usize> = (0..5).collect();
    let mut edges: Vec<Edge> = crate::graph::complete_graph(5).edges().to_vec();
    for _ in 1..h {
        let n = order.len();
        let current = CircularOrder::new(order.clone()).unwrap();
        let glue = current.hull_edges()[0];
        let (x, y, z) = (n, n + 1, n + 2);
        // insert after whichever endpoint precedes the other cyclically
        let pa = current.position(glue.u());
        let pb = current.position(glue.v());
        let (first, last, at) = if (pa + 1) % n == pb {
            (glue.u(), glue.v(), pa + 1)
        } else {
            (glue.v(), glue.u(), pb + 1)
        };
        order.splice(at..at, [x, y, z]);
        let block = [first, x, y, z, last];
        for i in 0..5 {
            for j in i + 1..5 {
                let e = Edge::new(block[i], block[j]);
                if e != glue {
                    edges.push(e);
                }
            }
        }
    }
    let n = order.len();
    let graph = Graph::from_edges(n, edges.iter().map(|e| (e.u(), e.v())))?;
    let witness = CircularOrder::new(order)?.canonical();
    Ok(GluedFamily { graph, witness, h })
}

/// K_{2,n-2} with the two-vertex side `{0, 1}` on top and the rest below, in id order.
pub fn k2_family(n: usize) -> Result<(Graph, TwoLayerOrder)> {
    if n < 3 {
        return Err(Error::Precondition(format!("K_(2,n-2) needs n >= 3, got {n}")));
    }
    let (g, p) = complete_bipartite(2, n - 2);
    let t = TwoLayerOrder::new(p.part1().to_vec(), p.part2().to_vec())?;
    Ok((g, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::{k5_support_check, CrossingGraph, OddCycleReport};
    use crate::outer::{outer_violations, saturate, OuterDrawing};
    use crate::two_layer::{augment_layers, two_layer_violations};

    #[test]
    fn glued_sizes() {
        for (h, n, m) in [(1, 5, 10), (2, 8, 19), (3, 11, 28), (6, 20, 55)] {
            let f = glued_k5_family(h).unwrap();
            assert_eq!((f.graph.n(), f.graph.m()), (n, m));
            assert_eq!(m, 3 * n - 5);
            assert!(f.witness.is_canonical());
            let d = OuterDrawing::new(f.graph.clone(), f.witness.clone()).unwrap();
            assert!(outer_violations(&d).is_empty());
        }
        assert!(glued_k5_family(0).is_err());
    }

    #[test]
    fn glued_family_is_saturated_and_its_five_cycles_span_k5s() {
        for h in 1..=4 {
            let f = glued_k5_family(h).unwrap();
            let d = OuterDrawing::new(f.graph.clone(), f.witness.clone()).unwrap();
            assert_eq!(saturate(&d).unwrap(), f.graph);
            let cg = CrossingGraph::from_outer(&d);
            let cycles = cg.simple_cycles(cg.len());
            let fives: Vec<_> = cycles.iter().filter(|c| c.len() == 5).collect();
            assert_eq!(fives.len(), h);
            for c in fives {
                let r = OddCycleReport::from_nodes(&cg, c.clone());
                assert!(k5_support_check(&d, &r).unwrap());
            }
        }
    }

    #[test]
    fn k2_family_counts() {
        for (n, m) in [(3, 2), (5, 6), (8, 12)] {
            let (g, t) = k2_family(n).unwrap();
            assert_eq!(g.m(), m);
            assert_eq!(m, 2 * n - 4);
            assert!(two_layer_violations(&g, &t).unwrap().is_empty());
        }
        assert!(k2_family(2).is_err());
    }

    #[test]
    fn k2_family_augments_to_3n_minus_6() {
        for n in 3..=10 {
            let (g, t) = k2_family(n).unwrap();
            let (aug, order) = augment_layers(&g, &t).unwrap();
            assert_eq!(aug.m(), 3 * n - 6);
            let cg = CrossingGraph::from_two_layer(&g, &t).unwrap();
            assert!(cg.is_bipartite());
            let d = OuterDrawing::new(aug, order).unwrap();
            assert!(CrossingGraph::from_outer(&d).is_bipartite());
        }
    }
}
