//! Straight-line drawings as text: lines `v x y`, then an edge list.
//!
//! The edge section may start with the usual `n m` header; since `n` is never
//! a valid endpoint, a first line whose first value equals the vertex count is
//! read as that header.

use super::edgelist::{content_lines, numbers, parse_err, tokens};
use crate::error::Result;
use crate::geometry::{ingest_straight_line, Point};
use crate::graph::Graph;
use crate::topo::TopoDrawing;

pub fn parse_coordinates(text: &str) -> Result<(Graph, Vec<Point>)> {
    let mut placed: Vec<Option<Point>> = Vec::new();
    let mut pairs = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut in_edges = false;
    let mut last_line = 1;
    for (ln, body) in content_lines(text) {
        last_line = ln;
        let fields: Vec<(i64, usize)> = tokens(ln, body, "an integer")?;
        match fields.len() {
            3 if !in_edges => {
                let (v, cv) = fields[0];
                if v < 0 {
                    return Err(parse_err(ln, cv, format!("vertex id {v} is negative")));
                }
                let v = v as usize;
                if v >= placed.len() {
                    placed.resize(v + 1, None);
                }
                if placed[v].replace((fields[1].0, fields[2].0)).is_some() {
                    return Err(parse_err(ln, cv, format!("vertex {v} placed twice")));
                }
            }
            3 => return Err(parse_err(ln, 1, "vertex line after the edge section started")),
            2 => {
                let f = numbers(ln, body)?;
                let n = placed.len();
                if !in_edges && f[0].0 == n {
                    header = Some((ln, f[1].0));
                } else {
                    pairs.push((ln, f[0], f[1]));
                }
                in_edges = true;
            }
            k => return Err(parse_err(ln, 1, format!("expected `v x y` or `u v`, found {k} fields"))),
        }
    }
    let n = placed.len();
    let mut vertices = Vec::with_capacity(n);
    for (v, p) in placed.into_iter().enumerate() {
        match p {
            Some(p) => vertices.push(p),
            None => return Err(parse_err(1, 1, format!("vertex {v} has no coordinates"))),
        }
    }
    if let Some((hl, m)) = header {
        if m != pairs.len() {
            return Err(parse_err(hl, 1, format!("header declares {m} edges, found {}", pairs.len())));
        }
    }
    let mut edges = Vec::with_capacity(pairs.len());
    for (ln, (u, cu), (v, cv)) in pairs {
        if u >= n || v >= n {
            let col = if u >= n { cu } else { cv };
            return Err(parse_err(ln, col, format!("edge {u} {v} uses an unplaced vertex")));
        }
        if u == v {
            return Err(parse_err(ln, cu, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    let _ = last_line;
    Ok((Graph::from_edges(n, edges)?, vertices))
}

pub fn ingest_coordinates(text: &str) -> Result<TopoDrawing> {
    let (g, pts) = parse_coordinates(text)?;
    ingest_straight_line(g, pts)
}

/// Coordinate-file text of a graph with one point per vertex.
pub fn write_coordinates(g: &Graph, points: &[Point]) -> String {
    let mut s = String::new();
    for (v, (x, y)) in points.iter().enumerate() {
        s.push_str(&format!("{v} {x} {y}\n"));
    }
    s.push_str(&format!("{} {}\n", g.n(), g.m()));
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::complete_graph;
    use crate::outer::{outer_to_topo, CircularOrder, OuterDrawing};
    use crate::topo::validate_fan_planar;

    #[test]
    fn square_with_diagonals() {
        let d = ingest_coordinates("0 0 0\n1 1 0\n2 1 1\n3 0 1\n0 1\n1 2\n2 3\n0 3\n0 2\n1 3\n").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert!(validate_fan_planar(&d).is_empty());
    }

    #[test]
    fn header_is_optional() {
        let with = ingest_coordinates("0 0 0\n1 4 0\n2 0 4\n3 3\n0 1\n1 2\n0 2\n").unwrap();
        let without = ingest_coordinates("0 0 0\n1 4 0\n2 0 4\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(with, without);
    }

    #[test]
    fn convex_k5_matches_outer_model() {
        let pts = [(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)];
        let text = write_coordinates(&complete_graph(5), &pts);
        let d = ingest_coordinates(&text).unwrap();
        assert_eq!(d.crossing_count(), 5);
        let outer = outer_to_topo(&OuterDrawing::new(complete_graph(5), CircularOrder::identity(5)).unwrap());
        assert!(d.without_geometry().same_up_to_crossing_labels(&outer.without_geometry()));
    }

    #[test]
    fn hexagon_diagonals_are_degenerate() {
        let text = "0 2 0\n1 1 2\n2 -1 2\n3 -2 0\n4 -1 -2\n5 1 -2\n0 3\n1 4\n2 5\n";
        match ingest_coordinates(text) {
            Err(Error::Degenerate(m)) => assert!(m.contains("three edges")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn diagnostics() {
        assert!(matches!(
            parse_coordinates("0 0 0\n1 1 1\n0 1\n2 5 5\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(parse_coordinates("0 0 0\n0 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_coordinates("0 0 0\n1 1 z\n"), Err(Error::Parse { line: 2, column: 5, .. })));
        assert!(matches!(parse_coordinates("0 0 0\n2 1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_coordinates("0 0 0\n1 1 1\n0 7\n"), Err(Error::Parse { line: 3, column: 3, .. })));
    }
}
