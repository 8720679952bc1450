//! JSON encoding of planarized rotation systems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::topo::{Dart, DrawingParts, Geometry, Node, TopoDrawing};

pub const DRAWING_VERSION: &str = "fanplan-drawing/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingEntry {
    pub id: usize,
    pub edges: [Edge; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteEntry {
    pub edge: Edge,
    pub crossings: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartEntry {
    pub edge: Edge,
    pub toward: Node,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationEntry {
    pub node: Node,
    /// Counter-clockwise.
    pub order: Vec<DartEntry>,
}

/// On-disk form of a [`TopoDrawing`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingFile {
    pub version: String,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub crossings: Vec<CrossingEntry>,
    /// Only edges with at least one crossing are listed.
    pub routes: Vec<RouteEntry>,
    pub rotations: Vec<RotationEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<Geometry>,
}

impl DrawingFile {
    pub fn from_drawing(d: &TopoDrawing) -> Self {
        let g = d.graph();
        let crossings = d
            .crossings()
            .iter()
            .enumerate()
            .map(|(id, &[a, b])| CrossingEntry {
                id,
                edges: [g.edge(a), g.edge(b)],
            })
            .collect();
        let routes = (0..g.m())
            .filter(|&e| !d.route(e).is_empty())
            .map(|e| RouteEntry {
                edge: g.edge(e),
                crossings: d.route(e).to_vec(),
            })
            .collect();
        let rotations = d
            .nodes()
            .map(|node| RotationEntry {
                node,
                order: d
                    .rotation(node)
                    .iter()
                    .map(|dart| DartEntry {
                        edge: g.edge(dart.edge),
                        toward: dart.toward,
                    })
                    .collect(),
            })
            .collect();
        DrawingFile {
            version: DRAWING_VERSION.to_string(),
            vertices: (0..g.n()).collect(),
            edges: g.edges().to_vec(),
            crossings,
            routes,
            rotations,
            geometry: d.geometry().cloned(),
        }
    }

    /// Rebuilds the drawing, rejecting anything the model does not allow.
    pub fn to_drawing(&self) -> Result<TopoDrawing> {
        if self.version != DRAWING_VERSION {
            return Err(Error::Json(format!(
                "unsupported version `{}`, expected `{DRAWING_VERSION}`",
                self.version
            )));
        }
        let n = self.vertices.len();
        let mut ids = self.vertices.clone();
        ids.sort_unstable();
        if ids.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidGraph("vertex ids must be exactly 0..n".into()));
        }
        let graph = Graph::from_edges(n, self.edges.iter().map(|e| (e.u(), e.v())))?;
        let edge_id = |e: Edge| {
            graph
                .edge_id(e)
                .ok_or_else(|| Error::Structural(format!("edge {e} is not in the edge list")))
        };

        let c = self.crossings.len();
        let mut crossings = vec![None; c];
        for entry in &self.crossings {
            if entry.id >= c || crossings[entry.id].is_some() {
                return Err(Error::Structural(format!("crossing ids must be exactly 0..{c}")));
            }
            crossings[entry.id] = Some([edge_id(entry.edges[0])?, edge_id(entry.edges[1])?]);
        }
        let crossings: Vec<[usize; 2]> = crossings.into_iter().map(Option::unwrap).collect();

        let mut routes = vec![Vec::new(); graph.m()];
        for r in &self.routes {
            let e = edge_id(r.edge)?;
            if !routes[e].is_empty() {
                return Err(Error::Structural(format!("edge {} has two routes", r.edge)));
            }
            routes[e] = r.crossings.clone();
        }

        let mut vertex_rotations = vec![None; n];
        let mut crossing_rotations = vec![None; c];
        for rot in &self.rotations {
            let order = rot
                .order
                .iter()
                .map(|d| Ok(Dart::new(edge_id(d.edge)?, d.toward)))
                .collect::<Result<Vec<Dart>>>()?;
            let slot = match rot.node {
                Node::Vertex(v) if v < n => &mut vertex_rotations[v],
                Node::Crossing(x) if x < c => &mut crossing_rotations[x],
                other => return Err(Error::Structural(format!("rotation for unknown node {other:?}"))),
            };
            if slot.replace(order).is_some() {
                return Err(Error::Structural(format!("node {:?} has two rotations", rot.node)));
            }
        }
        // isolated vertices may omit their (empty) rotation
        let vertex_rotations = vertex_rotations.into_iter().map(Option::unwrap_or_default).collect();
        let crossing_rotations = crossing_rotations
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or_else(|| Error::Structural(format!("crossing {i} has no rotation"))))
            .collect::<Result<Vec<_>>>()?;

        TopoDrawing::new(DrawingParts {
            graph,
            crossings,
            routes,
            vertex_rotations,
            crossing_rotations,
            geometry: self.geometry.clone(),
        })
    }
}

pub fn drawing_to_json(d: &TopoDrawing) -> String {
    serde_json::to_string_pretty(&DrawingFile::from_drawing(d)).expect("drawing serializes")
}

pub fn drawing_from_json(text: &str) -> Result<TopoDrawing> {
    let file: DrawingFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_drawing()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{k13h_drawing, k7_drawing};

    #[test]
    fn round_trip_identity() {
        for d in [k7_drawing(), k13h_drawing(4), k7_drawing().without_geometry()] {
            let text = drawing_to_json(&d);
            assert!(text.contains(DRAWING_VERSION));
            assert_eq!(drawing_from_json(&text).unwrap(), d);
        }
    }

    #[test]
    fn rejects_bad_version_and_structure() {
        let text = drawing_to_json(&k7_drawing()).replace(DRAWING_VERSION, "other/9");
        assert!(matches!(drawing_from_json(&text), Err(Error::Json(_))));

        let mut f = DrawingFile::from_drawing(&k7_drawing().without_geometry());
        // break the alternation at the first crossing
        let rot = &mut f.rotations.iter_mut().find(|r| matches!(r.node, Node::Crossing(0))).unwrap().order;
        rot.swap(1, 2);
        assert!(matches!(f.to_drawing(), Err(Error::Structural(_))));

        assert!(matches!(drawing_from_json("{ \"version\": 3"), Err(Error::Parse { .. })));
    }
}
