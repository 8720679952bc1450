//! Concrete drawings, all built from exact integer geometry so that the
//! rotation systems come out of the ingestion code rather than being typed in.

use crate::geometry::{ingest_polylines, ingest_straight_line, Point};
use crate::graph::{complete_graph, complete_tripartite_13h, Edge, Graph};
use crate::topo::TopoDrawing;

/// Straight-line coordinates of a 2-planar fan-planar K7 drawing. Vertex 0 is
/// the leftmost and vertex 6 the rightmost point; every other vertex lies
/// strictly above the line through them.
pub const K7_COORDS: [Point; 7] = [(0, 9), (5, 11), (11, 12), (9, 17), (10, 19), (7, 12), (20, 9)];

/// Fan-planar drawing of K7 with at most two crossings per edge.
pub fn k7_drawing() -> TopoDrawing {
    ingest_straight_line(complete_graph(7), K7_COORDS.to_vec()).expect("K7 coordinates are in general position")
}

/// Fan-planar drawing of K_{1,3,h} (vertex ids as in [`complete_tripartite_13h`]:
/// `a = 0`, `b1..b3 = 1..3`, `c_j = 3 + j`).
///
/// The `c_j` sit on a horizontal line; `b1`/`b3` above it on the left/right,
/// `b2`/`a` below it. The fans of `b1` and `b3` cross each other, as do the fans
/// of `b2` and `a`. The edge `a b1` runs around the whole picture.
pub fn k13h_drawing(h: usize) -> TopoDrawing {
    assert!(h >= 1, "K_(1,3,h) needs h >= 1");
    let g = complete_tripartite_13h(h);
    let right = 2 * h as i64 + 2;
    let mut pts: Vec<Point> = vec![(right, -2), (0, 2), (0, -2), (right, 2)];
    pts.extend((1..=h as i64).map(|j| (2 * j, 0)));
    let mut bends = vec![Vec::new(); g.m()];
    let around = g.edge_id(Edge::new(0, 1)).unwrap();
    bends[around] = vec![(right + 2, -3), (right + 2, 3), (0, 3)];
    ingest_polylines(g, pts, bends).expect("K_(1,3,h) drawing is in general position")
}

/// Edge `(0,1)` crossed by the independent edges `(2,3)` and `(4,5)`.
pub fn independent_crossers_configuration() -> TopoDrawing {
    let g = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
    ingest_straight_line(g, vec![(0, 0), (6, 0), (2, -2), (2, 2), (4, -2), (4, 2)]).unwrap()
}

/// Edge `(0,1)` crossed by `(2,3)` and `(2,4)`, both leaving the apex 2 but
/// passing the crossed edge in opposite directions.
pub fn different_sides_configuration() -> TopoDrawing {
    let g = Graph::from_edges(5, [(0, 1), (2, 3), (2, 4)]).unwrap();
    let mut bends = vec![Vec::new(); 3];
    // (2,4) leaves 2 to the right, climbs above the crossed edge and comes back down
    bends[2] = vec![(8, -2), (8, 2), (4, 2)];
    ingest_polylines(g, vec![(0, 0), (6, 0), (2, -2), (2, 2), (4, -1)], bends).unwrap()
}

/// Same three edges as [`different_sides_configuration`], both crossers
/// passing the crossed edge upwards.
pub fn same_side_configuration() -> TopoDrawing {
    let g = Graph::from_edges(5, [(0, 1), (2, 3), (2, 4)]).unwrap();
    ingest_straight_line(g, vec![(0, 0), (6, 0), (2, -2), (2, 2), (4, 2)]).unwrap()
}

/// The 10-cycle with chords whose edges carry the K7 gadgets (vertex `v_k` has id `k - 1`).
pub const CARRIER_EDGES: [(usize, usize); 13] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (0, 9),
    (0, 3),
    (4, 9),
    (5, 8),
];

/// The four extra edges `(v1,v7), (v2,v6), (v3,v9), (v4,v8)`.
pub const EXTRA_EDGES: [(usize, usize); 4] = [(0, 6), (1, 5), (2, 8), (3, 7)];

/// Radius multiple of the outside route of each extra edge; nested pairs get
/// nested routes so only interleaving pairs meet.
const EXTRA_RADII: [i64; 4] = [4, 2, 5, 3];

/// A graph whose given drawing is 2-planar but violates fan-planarity: the
/// carrier graph with every edge replaced by a K7 copy (the carrier endpoints
/// become the gadget's extreme vertices) plus [`EXTRA_EDGES`].
///
/// Vertices `0..10` are the cycle vertices; gadget `t` (in sorted carrier
/// order) owns the five interior vertices `10 + 5t .. 15 + 5t`.
pub fn nonfanplanar_2planar() -> (Graph, TopoDrawing) {
    const R: f64 = 1000.0;
    const STEP: f64 = std::f64::consts::PI / 5.0;
    let polar = |angle: f64, r: f64| -> Point { ((r * angle.cos()).round() as i64, (r * angle.sin()).round() as i64) };
    // cycle vertex positions before the global scale of 20
    let base: Vec<Point> = (0..10).map(|k| polar(k as f64 * STEP, R)).collect();

    let mut carriers: Vec<Edge> = CARRIER_EDGES.iter().map(|&(a, b)| Edge::new(a, b)).collect();
    carriers.sort_unstable();

    let mut coords: Vec<Point> = base.iter().map(|&(x, y)| (20 * x, 20 * y)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (t, c) in carriers.iter().enumerate() {
        let (pi, pj) = (base[c.u()], base[c.v()]);
        let d = (pj.0 - pi.0, pj.1 - pi.1);
        // thin side of the strip, pointing into the polygon
        let mut q = ((-d.1 as f64 / 20.0).round() as i64, (d.0 as f64 / 20.0).round() as i64);
        let mid = (pi.0 + pj.0, pi.1 + pj.1);
        if q.0 * -mid.0 + q.1 * -mid.1 < 0 {
            q = (-q.0, -q.1);
        }
        let ids: Vec<usize> = (0..7)
            .map(|k| match k {
                0 => c.u(),
                6 => c.v(),
                _ => 10 + 5 * t + (k - 1),
            })
            .collect();
        for &(x, y) in &K7_COORDS[1..6] {
            coords.push((20 * pi.0 + x * d.0 + (y - 9) * q.0, 20 * pi.1 + x * d.1 + (y - 9) * q.1));
        }
        for a in 0..7 {
            for b in a + 1..7 {
                pairs.push((ids[a], ids[b]));
            }
        }
    }
    pairs.extend(EXTRA_EDGES);
    let g = Graph::from_edges(coords.len(), pairs).unwrap();

    let mut bends = vec![Vec::new(); g.m()];
    for (&(a, b), &r) in EXTRA_EDGES.iter().zip(&EXTRA_RADII) {
        let mut route = vec![(20 * r * base[a].0, 20 * r * base[a].1)];
        for k in a..b {
            route.push(polar((k as f64 + 0.5) * STEP, 20.0 * r as f64 * R));
        }
        route.push((20 * r * base[b].0, 20 * r * base[b].1));
        bends[g.edge_id(Edge::new(a, b)).unwrap()] = route;
    }
    let d = ingest_polylines(g.clone(), coords, bends).expect("counterexample drawing is in general position");
    (g, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::{
        check_realizable, has_three_mutually_crossing, max_crossings_per_edge, spine_components, validate_fan_planar,
        ViolationKind,
    };

    #[test]
    fn k7_is_fan_planar_two_planar_and_spine_connected() {
        let d = k7_drawing();
        assert_eq!(d.graph().m(), 21);
        assert!(check_realizable(&d));
        assert!(validate_fan_planar(&d).is_empty());
        assert!(max_crossings_per_edge(&d) <= 2);
        assert_eq!(spine_components(&d), vec![(0..7).collect::<Vec<_>>()]);
        assert!(has_three_mutually_crossing(&d).is_none());
    }

    #[test]
    fn k13h_drawings_are_fan_planar() {
        for h in 1..=10 {
            let d = k13h_drawing(h);
            assert_eq!(d.graph().n(), 4 + h);
            assert!(validate_fan_planar(&d).is_empty(), "h = {h}");
            assert_eq!(d.crossing_count(), h * (h - 1));
        }
        assert_eq!(k13h_drawing(1).crossing_count(), 0);
        assert!(k13h_drawing(6).crossing_count() >= 15);
    }

    #[test]
    fn forbidden_configurations() {
        let v = validate_fan_planar(&independent_crossers_configuration());
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::IndependentCrossers);
        assert_eq!(v[0].witness[0], Edge::new(0, 1));

        let v = validate_fan_planar(&different_sides_configuration());
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::DifferentSides);
        assert_eq!(v[0].witness, vec![Edge::new(0, 1), Edge::new(2, 3), Edge::new(2, 4)]);

        assert!(validate_fan_planar(&same_side_configuration()).is_empty());
    }

    #[test]
    fn counterexample_counts_and_violations() {
        let (g, d) = nonfanplanar_2planar();
        assert_eq!(g.n(), 75);
        assert_eq!(g.m(), 277);
        assert!(check_realizable(&d));
        assert!(max_crossings_per_edge(&d) <= 2);
        let v = validate_fan_planar(&d);
        for (a, b) in EXTRA_EDGES {
            let e = Edge::new(a, b);
            assert!(v.iter().any(|x| x.kind == ViolationKind::IndependentCrossers && x.witness[0] == e));
        }
        // only the extra edges are crossed by anything outside their own gadget
        assert_eq!(v.len(), 4);
    }
}
