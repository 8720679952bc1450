//! Exact integer geometry: turns straight-line or polyline drawings into
//! rotation systems.
//!
//! All predicates use `i128` arithmetic on coordinates bounded by
//! [`COORD_LIMIT`]; intersection parameters are compared as fractions by
//! cross-multiplication, so no rounding ever happens.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::topo::{Dart, DrawingParts, Geometry, Node, TopoDrawing};

pub type Point = (i64, i64);

/// Largest admissible absolute coordinate (keeps fraction comparisons inside `i128`).
pub const COORD_LIMIT: i64 = 1 << 30;

type Vec2 = (i128, i128);

#[inline]
fn sub(a: Point, b: Point) -> Vec2 {
    (a.0 as i128 - b.0 as i128, a.1 as i128 - b.1 as i128)
}

#[inline]
fn cross(a: Vec2, b: Vec2) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

#[inline]
fn dot(a: Vec2, b: Vec2) -> i128 {
    a.0 * b.0 + a.1 * b.1
}

/// Sign of the turn a -> b -> c (positive = counter-clockwise).
pub fn orientation(a: Point, b: Point, c: Point) -> Ordering {
    cross(sub(b, a), sub(c, a)).cmp(&0)
}

/// True iff the open segments `p1p2` and `q1q2` cross at a single interior point.
pub fn segments_cross_properly(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let o1 = orientation(p1, p2, q1);
    let o2 = orientation(p1, p2, q2);
    let o3 = orientation(q1, q2, p1);
    let o4 = orientation(q1, q2, p2);
    o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
        && o1 != o2
        && o3 != o4
}

/// True iff `x` lies on the closed segment `ab`.
fn on_segment(a: Point, b: Point, x: Point) -> bool {
    cross(sub(b, a), sub(x, a)) == 0 && dot(sub(x, a), sub(x, b)) <= 0
}

/// A non-negative fraction `num/den` with `den > 0`.
#[derive(Debug, Clone, Copy)]
struct Param {
    num: i128,
    den: i128,
}

impl Param {
    fn new(num: i128, den: i128) -> Self {
        if den < 0 {
            Param { num: -num, den: -den }
        } else {
            Param { num, den }
        }
    }

    fn cmp(self, other: Param) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

/// Counter-clockwise angular order of direction vectors, starting at +x.
fn angle_cmp(a: Vec2, b: Vec2) -> Ordering {
    let half = |d: Vec2| u8::from(!(d.1 > 0 || (d.1 == 0 && d.0 > 0)));
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

struct Segment {
    edge: usize,
    index: usize,
    a: Point,
    b: Point,
}

struct Hit {
    e: usize,
    f: usize,
    seg_e: usize,
    t_e: Param,
    seg_f: usize,
    t_f: Param,
}

/// Straight-line drawing from vertex coordinates.
pub fn ingest_straight_line(graph: Graph, vertices: Vec<Point>) -> Result<TopoDrawing> {
    let m = graph.m();
    ingest_polylines(graph, vertices, vec![Vec::new(); m])
}

/// Polyline drawing: `bends[e]` lists the interior points of edge `e` from its
/// smaller to its larger endpoint.
pub fn ingest_polylines(graph: Graph, vertices: Vec<Point>, bends: Vec<Vec<Point>>) -> Result<TopoDrawing> {
    let n = graph.n();
    let m = graph.m();
    if vertices.len() != n {
        return Err(Error::Degenerate(format!("{} coordinates for {n} vertices", vertices.len())));
    }
    if bends.len() != m {
        return Err(Error::Degenerate(format!("{} bend lists for {m} edges", bends.len())));
    }
    for &(x, y) in vertices.iter().chain(bends.iter().flatten()) {
        if x.abs() > COORD_LIMIT || y.abs() > COORD_LIMIT {
            return Err(Error::Degenerate(format!(
                "coordinate ({x},{y}) exceeds the supported range ±{COORD_LIMIT}"
            )));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if vertices[a] == vertices[b] {
                return Err(Error::Degenerate(format!("vertices {a} and {b} coincide")));
            }
        }
    }

    let mut segments = Vec::new();
    let mut seg_ranges = Vec::with_capacity(m);
    for (e, edge) in graph.edges().iter().enumerate() {
        let mut pts = vec![vertices[edge.u()]];
        pts.extend(bends[e].iter().copied());
        pts.push(vertices[edge.v()]);
        let start = segments.len();
        for (index, w) in pts.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(Error::Degenerate(format!("edge {edge} has a zero-length segment")));
            }
            segments.push(Segment {
                edge: e,
                index,
                a: w[0],
                b: w[1],
            });
        }
        seg_ranges.push(start..segments.len());
        for &p in &bends[e] {
            if let Some(v) = vertices.iter().position(|&q| q == p) {
                return Err(Error::Degenerate(format!("bend of edge {edge} sits on vertex {v}")));
            }
        }
    }

    // vertices strictly inside segments of other edges
    for (v, &p) in vertices.iter().enumerate() {
        for s in &segments {
            let edge = graph.edge(s.edge);
            let at_end = (s.index == 0 && edge.u() == v && s.a == p)
                || (s.b == p && edge.v() == v && s.index + 1 == seg_ranges[s.edge].len());
            if !at_end && on_segment(s.a, s.b, p) {
                return Err(Error::Degenerate(format!("vertex {v} lies on edge {edge}")));
            }
        }
    }

    let mut hits: Vec<Hit> = Vec::new();
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            let (s, t) = (&segments[i], &segments[j]);
            if let Some(hit) = intersect(&graph, s, t, &seg_ranges)? {
                hits.push(hit);
            }
        }
    }

    // simplicity: adjacent edges never cross, independent edges cross at most once
    hits.sort_by_key(|h| (h.e, h.f));
    for w in hits.windows(2) {
        if w[0].e == w[1].e && w[0].f == w[1].f {
            return Err(Error::NonSimple(format!(
                "edges {} and {} cross more than once",
                graph.edge(w[0].e),
                graph.edge(w[0].f)
            )));
        }
    }
    for h in &hits {
        if graph.edge(h.e).is_adjacent(graph.edge(h.f)) {
            return Err(Error::NonSimple(format!(
                "adjacent edges {} and {} cross",
                graph.edge(h.e),
                graph.edge(h.f)
            )));
        }
    }

    // crossing id = rank of the edge pair; per edge, order by (segment, parameter)
    let mut on_edge: Vec<Vec<(usize, Param, usize)>> = vec![Vec::new(); m];
    for (c, h) in hits.iter().enumerate() {
        on_edge[h.e].push((h.seg_e, h.t_e, c));
        on_edge[h.f].push((h.seg_f, h.t_f, c));
    }
    for list in &mut on_edge {
        list.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
        for w in list.windows(2) {
            if w[0].0 == w[1].0 && w[0].1.cmp(w[1].1) == Ordering::Equal {
                let (c1, c2) = (&hits[w[0].2], &hits[w[1].2]);
                return Err(Error::Degenerate(format!(
                    "three edges meet at one point: crossings of {}x{} and {}x{} coincide",
                    graph.edge(c1.e),
                    graph.edge(c1.f),
                    graph.edge(c2.e),
                    graph.edge(c2.f)
                )));
            }
        }
    }
    let routes: Vec<Vec<usize>> = on_edge.iter().map(|l| l.iter().map(|x| x.2).collect()).collect();
    let crossings: Vec<[usize; 2]> = hits.iter().map(|h| [h.e, h.f]).collect();

    let node_around = |e: usize, c: usize| -> (Node, Node) {
        let edge = graph.edge(e);
        let r = &routes[e];
        let i = r.iter().position(|&x| x == c).unwrap();
        let prev = if i == 0 { Node::Vertex(edge.u()) } else { Node::Crossing(r[i - 1]) };
        let next = if i + 1 == r.len() { Node::Vertex(edge.v()) } else { Node::Crossing(r[i + 1]) };
        (prev, next)
    };

    let mut vertex_rotations = Vec::with_capacity(n);
    for v in 0..n {
        let mut darts: Vec<(Vec2, Dart)> = Vec::new();
        for &w in graph.neighbors(v) {
            let e = graph.edge_id(crate::graph::Edge::new(v, w)).unwrap();
            let segs = &segments[seg_ranges[e].clone()];
            let (dir, toward) = if graph.edge(e).u() == v {
                let toward = routes[e].first().map_or(Node::Vertex(w), |&c| Node::Crossing(c));
                (sub(segs[0].b, segs[0].a), toward)
            } else {
                let last = segs.last().unwrap();
                let toward = routes[e].last().map_or(Node::Vertex(w), |&c| Node::Crossing(c));
                (sub(last.a, last.b), toward)
            };
            darts.push((dir, Dart::new(e, toward)));
        }
        darts.sort_by(|a, b| angle_cmp(a.0, b.0));
        vertex_rotations.push(darts.into_iter().map(|x| x.1).collect());
    }

    let mut crossing_rotations = Vec::with_capacity(hits.len());
    for (c, h) in hits.iter().enumerate() {
        let se = &segments[seg_ranges[h.e].start + h.seg_e];
        let sf = &segments[seg_ranges[h.f].start + h.seg_f];
        let (re, rf) = (sub(se.b, se.a), sub(sf.b, sf.a));
        let (ep, en) = node_around(h.e, c);
        let (fp, fn_) = node_around(h.f, c);
        let mut darts = [
            (re, Dart::new(h.e, en)),
            ((-re.0, -re.1), Dart::new(h.e, ep)),
            (rf, Dart::new(h.f, fn_)),
            ((-rf.0, -rf.1), Dart::new(h.f, fp)),
        ];
        darts.sort_by(|a, b| angle_cmp(a.0, b.0));
        crossing_rotations.push(darts.iter().map(|x| x.1).collect());
    }

    TopoDrawing::new(DrawingParts {
        graph,
        crossings,
        routes,
        vertex_rotations,
        crossing_rotations,
        geometry: Some(Geometry { vertices, bends }),
    })
}

fn intersect(
    graph: &Graph,
    s: &Segment,
    t: &Segment,
    ranges: &[std::ops::Range<usize>],
) -> Result<Option<Hit>> {
    let r = sub(s.b, s.a);
    let q = sub(t.b, t.a);
    let pq = sub(t.a, s.a);
    let denom = cross(r, q);
    let (es, et) = (graph.edge(s.edge), graph.edge(t.edge));
    let describe = || {
        if s.edge == t.edge {
            format!("edge {es} intersects itself")
        } else {
            format!("edges {es} and {et} touch or overlap")
        }
    };

    if denom == 0 {
        if cross(pq, r) != 0 {
            return Ok(None);
        }
        // collinear: project onto r
        let rr = dot(r, r);
        let t0 = dot(sub(t.a, s.a), r);
        let t1 = dot(sub(t.b, s.a), r);
        let (lo, hi) = (t0.min(t1), t0.max(t1));
        if hi < 0 || lo > rr {
            return Ok(None);
        }
        if hi == 0 || lo == rr {
            // single touching point at an endpoint
            let p = if hi == 0 { s.a } else { s.b };
            return touching(graph, s, t, p, ranges).map(|_| None);
        }
        return Err(Error::Degenerate(format!("{} (collinear overlap)", describe())));
    }

    let ts = Param::new(cross(pq, q), denom);
    let tt = Param::new(cross(pq, r), denom);
    let zero = Param { num: 0, den: 1 };
    let one = Param { num: 1, den: 1 };
    let inside = |p: Param| p.cmp(zero) != Ordering::Less && p.cmp(one) != Ordering::Greater;
    if !inside(ts) || !inside(tt) {
        return Ok(None);
    }
    let strict = |p: Param| p.cmp(zero) == Ordering::Greater && p.cmp(one) == Ordering::Less;
    if strict(ts) && strict(tt) {
        if s.edge == t.edge {
            return Err(Error::NonSimple(describe()));
        }
        let (hit_e, hit_f) = if s.edge < t.edge { ((s, ts), (t, tt)) } else { ((t, tt), (s, ts)) };
        return Ok(Some(Hit {
            e: hit_e.0.edge,
            f: hit_f.0.edge,
            seg_e: hit_e.0.index,
            t_e: hit_e.1,
            seg_f: hit_f.0.index,
            t_f: hit_f.1,
        }));
    }
    // the contact point is an endpoint of at least one segment
    let p = if ts.cmp(zero) == Ordering::Equal {
        s.a
    } else if ts.cmp(one) == Ordering::Equal {
        s.b
    } else if tt.cmp(zero) == Ordering::Equal {
        t.a
    } else {
        t.b
    };
    touching(graph, s, t, p, ranges).map(|_| None)
}

/// Decides whether segments touching at `p` is a legal contact: both must end
/// at `p`, and `p` must be either a shared real vertex or the bend joining two
/// consecutive segments of one edge.
fn touching(graph: &Graph, s: &Segment, t: &Segment, p: Point, ranges: &[std::ops::Range<usize>]) -> Result<()> {
    let ends_at = |x: &Segment| x.a == p || x.b == p;
    let (es, et) = (graph.edge(s.edge), graph.edge(t.edge));
    if !ends_at(s) || !ends_at(t) {
        return Err(Error::Degenerate(format!(
            "edges {es} and {et} touch at ({}, {}) without crossing",
            p.0, p.1
        )));
    }
    let vertex_end = |x: &Segment| -> Option<usize> {
        let e = graph.edge(x.edge);
        let last = ranges[x.edge].len() - 1;
        if x.index == 0 && x.a == p {
            Some(e.u())
        } else if x.index == last && x.b == p {
            Some(e.v())
        } else {
            None
        }
    };
    match (vertex_end(s), vertex_end(t)) {
        (Some(a), Some(b)) if a == b => Ok(()),
        (None, None) if s.edge == t.edge && s.index.abs_diff(t.index) == 1 => Ok(()),
        _ => Err(Error::Degenerate(format!(
            "edges {es} and {et} meet at ({}, {}) outside a shared vertex",
            p.0, p.1
        ))),
    }
}
