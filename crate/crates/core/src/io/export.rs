//! DOT, SVG and JSON renderings of drawings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::outer::{outer_to_topo, OuterDrawing};
use crate::topo::TopoDrawing;

use super::drawing_file::drawing_to_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Svg,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub enum DrawingRef<'a> {
    Topo(&'a TopoDrawing),
    Outer(&'a OuterDrawing),
}

pub fn export(d: DrawingRef<'_>, format: ExportFormat) -> Result<String> {
    match (d, format) {
        (DrawingRef::Outer(o), ExportFormat::Svg) => Ok(outer_svg(o)),
        (DrawingRef::Outer(o), f) => export(DrawingRef::Topo(&outer_to_topo(o)), f),
        (DrawingRef::Topo(t), ExportFormat::Dot) => Ok(dot(t)),
        (DrawingRef::Topo(t), ExportFormat::Svg) => topo_svg(t),
        (DrawingRef::Topo(t), ExportFormat::Json) => Ok(drawing_to_json(t)),
    }
}

/// The planarization: real vertices as circles, crossings as small filled boxes.
pub fn dot(d: &TopoDrawing) -> String {
    let g = d.graph();
    let mut s = String::from("graph fanplan {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        writeln!(s, "  v{v} [label=\"{v}\"];").unwrap();
    }
    for x in 0..d.crossing_count() {
        writeln!(s, "  c{x} [shape=box, style=filled, fillcolor=red, width=0.1, height=0.1, label=\"\"];").unwrap();
    }
    for (i, e) in g.edges().iter().enumerate() {
        let mut chain = vec![format!("v{}", e.u())];
        chain.extend(d.route(i).iter().map(|x| format!("c{x}")));
        chain.push(format!("v{}", e.v()));
        for w in chain.windows(2) {
            writeln!(s, "  {} -- {};", w[0], w[1]).unwrap();
        }
    }
    s.push_str("}\n");
    s
}

fn svg_open(s: &mut String, min: (f64, f64), max: (f64, f64)) {
    let pad = 0.05 * (max.0 - min.0).max(max.1 - min.1).max(1.0);
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        min.0 - pad,
        min.1 - pad,
        max.0 - min.0 + 2.0 * pad,
        max.1 - min.1 + 2.0 * pad
    )
    .unwrap();
}

fn svg_vertices(s: &mut String, pts: &[(f64, f64)], r: f64) {
    for (v, &(x, y)) in pts.iter().enumerate() {
        writeln!(s, "  <circle class=\"vertex\" cx=\"{x}\" cy=\"{y}\" r=\"{r}\"><title>{v}</title></circle>").unwrap();
    }
}

fn outer_svg(d: &OuterDrawing) -> String {
    let n = d.graph().n();
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|v| {
            let a = std::f64::consts::TAU * d.order().position(v) as f64 / n.max(1) as f64;
            (100.0 * a.cos(), 100.0 * a.sin())
        })
        .collect();
    let mut s = String::new();
    svg_open(&mut s, (-100.0, -100.0), (100.0, 100.0));
    writeln!(s, "  <circle cx=\"0\" cy=\"0\" r=\"100\" fill=\"none\" stroke=\"#ccc\"/>").unwrap();
    for e in d.graph().edges() {
        let (a, b) = (pts[e.u()], pts[e.v()]);
        writeln!(
            s,
            "  <line class=\"edge\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
            a.0, a.1, b.0, b.1
        )
        .unwrap();
    }
    svg_vertices(&mut s, &pts, 3.0);
    s.push_str("</svg>\n");
    s
}

fn topo_svg(d: &TopoDrawing) -> Result<String> {
    let geo = d
        .geometry()
        .ok_or_else(|| Error::Unsupported("svg needs stored coordinates or an outer order".into()))?;
    let g = d.graph();
    // svg's y axis points down
    let flip = |&(x, y): &(i64, i64)| (x as f64, -(y as f64));
    let all: Vec<(f64, f64)> = geo.vertices.iter().chain(geo.bends.iter().flatten()).map(flip).collect();
    let lo = all.iter().fold((f64::MAX, f64::MAX), |a, p| (a.0.min(p.0), a.1.min(p.1)));
    let hi = all.iter().fold((f64::MIN, f64::MIN), |a, p| (a.0.max(p.0), a.1.max(p.1)));
    let (lo, hi) = if all.is_empty() { ((0.0, 0.0), (1.0, 1.0)) } else { (lo, hi) };
    let mut s = String::new();
    svg_open(&mut s, lo, hi);
    let r = 0.01 * (hi.0 - lo.0).max(hi.1 - lo.1).max(1.0);
    for (i, e) in g.edges().iter().enumerate() {
        let mut pts = vec![flip(&geo.vertices[e.u()])];
        pts.extend(geo.bends[i].iter().map(flip));
        pts.push(flip(&geo.vertices[e.v()]));
        let list: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        writeln!(
            s,
            "  <polyline class=\"edge\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
            list.join(" "),
            r / 3.0
        )
        .unwrap();
    }
    let verts: Vec<(f64, f64)> = geo.vertices.iter().map(flip).collect();
    svg_vertices(&mut s, &verts, r);
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::k7_drawing;
    use crate::graph::complete_graph;
    use crate::io::drawing_from_json;
    use crate::outer::CircularOrder;

    #[test]
    fn outer_k5_svg() {
        let o = OuterDrawing::new(complete_graph(5), CircularOrder::identity(5)).unwrap();
        let s = export(DrawingRef::Outer(&o), ExportFormat::Svg).unwrap();
        assert_eq!(s.matches("class=\"vertex\"").count(), 5);
        assert_eq!(s.matches("<line").count(), 10);
    }

    #[test]
    fn dot_node_count() {
        for d in [k7_drawing(), k7_drawing().without_geometry()] {
            let s = export(DrawingRef::Topo(&d), ExportFormat::Dot).unwrap();
            let nodes = s.lines().filter(|l| l.contains('[') && !l.contains("node [")).count();
            assert_eq!(nodes, 7 + d.crossing_count());
            let segments = s.matches(" -- ").count();
            assert_eq!(segments, d.graph().m() + 2 * d.crossing_count());
        }
    }

    #[test]
    fn json_and_svg_for_topo() {
        let d = k7_drawing();
        let j = export(DrawingRef::Topo(&d), ExportFormat::Json).unwrap();
        assert_eq!(drawing_from_json(&j).unwrap(), d);
        let s = export(DrawingRef::Topo(&d), ExportFormat::Svg).unwrap();
        assert_eq!(s.matches("<polyline").count(), 21);
        assert!(matches!(
            export(DrawingRef::Topo(&d.without_geometry()), ExportFormat::Svg),
            Err(Error::Unsupported(_))
        ));
    }
}
