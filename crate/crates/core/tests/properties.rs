use proptest::prelude::*;

use fanplan::crossing::{shortest_odd_cycle, CrossingGraph};
use fanplan::geometry::ingest_straight_line;
use fanplan::graph::{Edge, Graph};
use fanplan::io::{drawing_from_json, drawing_to_json};
use fanplan::outer::{interleaves, outer_to_topo, outer_violations, saturate, CircularOrder, OuterDrawing};
use fanplan::topo::{check_realizable, has_three_mutually_crossing, validate_fan_planar, TopoDrawing};
use fanplan::two_layer::{two_layer_to_circular, two_layer_violations, TwoLayerOrder};

fn order(max_n: usize) -> impl Strategy<Value = CircularOrder> {
    (3..=max_n)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| CircularOrder::new(v).unwrap())
}

/// A random graph on `n` vertices, as a subset mask of all pairs.
fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
        Graph::from_edges(n, pairs.iter().zip(&mask).filter(|(_, &k)| k).map(|(&p, _)| p)).unwrap()
    })
}

fn outer_drawing(max_n: usize) -> impl Strategy<Value = OuterDrawing> {
    order(max_n).prop_flat_map(|o| graph_on(o.len()).prop_map(move |g| OuterDrawing::new(g, o.clone()).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn interleaving_symmetric_and_dihedral(o in order(8), a in 0usize..8, b in 0usize..8, c in 0usize..8, d in 0usize..8, k in 0usize..8) {
        let n = o.len();
        prop_assume!(a % n != b % n && c % n != d % n);
        let e = Edge::new(a % n, b % n);
        let f = Edge::new(c % n, d % n);
        let x = interleaves(&o, e, f);
        prop_assert_eq!(x, interleaves(&o, f, e));
        prop_assert_eq!(x, interleaves(&o.rotated(k % n), e, f));
        prop_assert_eq!(x, interleaves(&o.reversed(), e, f));
        prop_assert_eq!(x, interleaves(&o.canonical(), e, f));
    }

    #[test]
    fn outer_agrees_with_topological_validator(d in outer_drawing(8)) {
        let t = outer_to_topo(&d);
        prop_assert!(check_realizable(&t));
        let outer_ok = outer_violations(&d).is_empty();
        let topo_ok = validate_fan_planar(&t).is_empty();
        prop_assert_eq!(outer_ok, topo_ok);
        if outer_ok {
            prop_assert!(has_three_mutually_crossing(&t).is_none());
        }
    }

    #[test]
    fn saturation_is_a_maximal_fixed_point(o in order(7)) {
        let d = OuterDrawing::new(Graph::empty(o.len()), o.clone()).unwrap();
        let s = saturate(&d).unwrap();
        for e in o.hull_edges() {
            prop_assert!(s.has_edge(e.u(), e.v()));
        }
        let again = saturate(&OuterDrawing::new(s.clone(), o.clone()).unwrap()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert!(s.m() <= 3 * o.len() - 5);
    }

    #[test]
    fn relabeling_crossings_changes_nothing(d in outer_drawing(7), seed in any::<u64>()) {
        let t = outer_to_topo(&d).without_geometry();
        let c = t.crossing_count();
        let mut perm: Vec<usize> = (0..c).collect();
        // Fisher-Yates driven by a xorshift of the seed
        let mut s = seed | 1;
        for i in (1..c).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let r = t.relabel_crossings(&perm).unwrap();
        prop_assert!(r.same_up_to_crossing_labels(&t));
        prop_assert_eq!(check_realizable(&r), check_realizable(&t));
        prop_assert_eq!(validate_fan_planar(&r).is_empty(), validate_fan_planar(&t).is_empty());
    }

    #[test]
    fn drawing_file_round_trip(d in outer_drawing(7)) {
        let t = outer_to_topo(&d);
        prop_assert_eq!(drawing_from_json(&drawing_to_json(&t)).unwrap(), t.clone());
        let bare = t.without_geometry();
        prop_assert_eq!(drawing_from_json(&drawing_to_json(&bare)).unwrap(), bare);
    }

    /// Points on the parabola y = x^2 are in convex position with circular
    /// order given by x, so segment crossings must be exactly the interleavings.
    #[test]
    fn convex_ingestion_matches_interleaving(
        steps in prop::collection::vec(1i64..40, 3..=8),
        seed in any::<u64>(),
        density in 0u32..=100,
    ) {
        let n = steps.len();
        let xs: Vec<i64> = steps.iter().scan(-100i64, |x, s| { *x += s; Some(*x) }).collect();
        let mut by_x: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            by_x.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let mut pts = vec![(0, 0); n];
        for (slot, &v) in by_x.iter().enumerate() {
            pts[v] = (xs[slot], xs[slot] * xs[slot]);
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| (a * 31 + b * 17 + seed as usize) % 100 < density as usize)
            .collect();
        let g = Graph::from_edges(n, pairs).unwrap();
        let t = match ingest_straight_line(g.clone(), pts) {
            Ok(t) => t,
            Err(_) => return Err(TestCaseError::reject("three concurrent chords")),
        };
        let o = OuterDrawing::new(g, CircularOrder::new(by_x).unwrap()).unwrap();
        let mut expected = o.crossing_pairs();
        expected.sort_unstable();
        let mut got = t.crossing_pairs();
        got.sort_unstable();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn two_layer_is_the_circular_case(
        (n1, n2) in (1usize..=4, 1usize..=4),
        mask in prop::collection::vec(any::<bool>(), 16),
        seed in any::<u64>(),
    ) {
        let top: Vec<usize> = (0..n1).collect();
        let mut bottom: Vec<usize> = (n1..n1 + n2).collect();
        bottom.rotate_left((seed % n2 as u64) as usize);
        let pairs: Vec<(usize, usize)> = (0..n1)
            .flat_map(|a| (n1..n1 + n2).map(move |b| (a, b)))
            .enumerate()
            .filter(|(i, _)| mask[*i])
            .map(|(_, p)| p)
            .collect();
        let g = Graph::from_edges(n1 + n2, pairs).unwrap();
        let t = TwoLayerOrder::new(top, bottom).unwrap();
        let tl = two_layer_violations(&g, &t).unwrap().is_empty();
        let o = OuterDrawing::new(g.clone(), two_layer_to_circular(&t)).unwrap();
        prop_assert_eq!(tl, outer_violations(&o).is_empty());
        let cg = CrossingGraph::from_two_layer(&g, &t).unwrap();
        prop_assert_eq!(cg.pairs(), CrossingGraph::from_outer(&o).pairs());
    }

    #[test]
    fn odd_cycle_iff_not_two_colorable(d in outer_drawing(8)) {
        let cg = CrossingGraph::from_outer(&d);
        let odd = shortest_odd_cycle(&cg);
        prop_assert_eq!(odd.is_none(), cg.two_coloring().is_some());
        if let Some(r) = odd {
            prop_assert!(r.length % 2 == 1 && r.length >= 3);
            for i in 0..r.length {
                let (a, b) = (r.cycle[i], r.cycle[(i + 1) % r.length]);
                prop_assert!(interleaves(d.order(), a, b));
            }
        }
    }
}

#[test]
fn topo_drawing_is_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<TopoDrawing>();
}
