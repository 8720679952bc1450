use std::collections::HashMap;

use super::{Dart, Node, TopoDrawing};

/// Counts of the planarized map and the result of face tracing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarizationStats {
    pub vertices: usize,
    pub edges: usize,
    /// Faces of the whole drawing, the unbounded face counted once.
    pub faces: usize,
    pub components: usize,
    /// Every component satisfies V - E + F = 2 on its own.
    pub genus_zero: bool,
}

impl PlanarizationStats {
    /// V' - E' + F'.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

fn node_index(d: &TopoDrawing, node: Node) -> usize {
    match node {
        Node::Vertex(v) => v,
        Node::Crossing(c) => d.graph().n() + c,
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Traces the faces of the planarized map.
pub fn planarization_stats(d: &TopoDrawing) -> PlanarizationStats {
    let total = d.graph().n() + d.crossing_count();
    let nodes: Vec<Node> = d.nodes().collect();

    // (node, dart) -> index within that node's rotation
    let mut position: HashMap<(Node, Dart), usize> = HashMap::new();
    let mut offsets = Vec::with_capacity(total + 1);
    let mut darts = 0usize;
    for &x in &nodes {
        offsets.push(darts);
        for (i, &dart) in d.rotation(x).iter().enumerate() {
            position.insert((x, dart), i);
        }
        darts += d.rotation(x).len();
    }
    offsets.push(darts);

    let mut parent: Vec<usize> = (0..total).collect();
    for &x in &nodes {
        for dart in d.rotation(x) {
            let (a, b) = (
                find(&mut parent, node_index(d, x)),
                find(&mut parent, node_index(d, dart.toward)),
            );
            parent[a] = b;
        }
    }

    // per component: vertices, darts, faces
    let mut comp_v = vec![0i64; total];
    let mut comp_darts = vec![0i64; total];
    let mut comp_f = vec![0i64; total];
    for &x in &nodes {
        let r = find(&mut parent, node_index(d, x));
        comp_v[r] += 1;
        comp_darts[r] += d.rotation(x).len() as i64;
    }

    let mut visited = vec![false; darts];
    for &x in &nodes {
        let xi = node_index(d, x);
        for start in 0..d.rotation(x).len() {
            if visited[offsets[xi] + start] {
                continue;
            }
            let root = find(&mut parent, xi);
            comp_f[root] += 1;
            let (mut at, mut i) = (x, start);
            loop {
                let ai = node_index(d, at);
                if visited[offsets[ai] + i] {
                    break;
                }
                visited[offsets[ai] + i] = true;
                let dart = d.rotation(at)[i];
                let next = dart.toward;
                let back = Dart::new(dart.edge, at);
                let j = position[&(next, back)];
                let deg = d.rotation(next).len();
                at = next;
                i = (j + 1) % deg;
            }
        }
    }

    let mut components = 0;
    let mut genus_zero = true;
    let mut traced_faces = 0i64;
    for r in 0..total {
        if find(&mut parent, r) != r {
            continue;
        }
        components += 1;
        // an isolated node bounds a single face
        let f = if comp_darts[r] == 0 { 1 } else { comp_f[r] };
        traced_faces += f;
        if comp_v[r] - comp_darts[r] / 2 + f != 2 {
            genus_zero = false;
        }
    }
    let faces = if components == 0 {
        1
    } else {
        (traced_faces - (components as i64 - 1)) as usize
    };
    PlanarizationStats {
        vertices: total,
        edges: darts / 2,
        faces,
        components,
        genus_zero,
    }
}

/// True iff the rotation system is a plane embedding (sphere characteristic in every component).
pub fn check_realizable(d: &TopoDrawing) -> bool {
    planarization_stats(d).genus_zero
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, Edge};
    use crate::topo::{DrawingParts, TopoDrawing};

    fn triangle() -> TopoDrawing {
        let g = cycle_graph(3);
        let id = |a, b| g.edge_id(Edge::new(a, b)).unwrap();
        let v = Node::Vertex;
        let parts = DrawingParts {
            crossings: vec![],
            routes: vec![vec![]; 3],
            vertex_rotations: vec![
                vec![Dart::new(id(0, 1), v(1)), Dart::new(id(0, 2), v(2))],
                vec![Dart::new(id(1, 2), v(2)), Dart::new(id(0, 1), v(0))],
                vec![Dart::new(id(0, 2), v(0)), Dart::new(id(1, 2), v(1))],
            ],
            crossing_rotations: vec![],
            graph: g,
            geometry: None,
        };
        TopoDrawing::new(parts).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let s = planarization_stats(&triangle());
        assert!(s.genus_zero);
        assert_eq!(s.faces, 2);
        assert_eq!(s.euler_characteristic(), 1 + s.components as i64);
    }

    #[test]
    fn k4_crossing_rotation_twisted_at_vertex_is_not_plane() {
        // swapping two darts at a degree-3 vertex mirrors it: the map becomes toroidal
        let mut parts = crate::topo::tests::k4_parts();
        parts.vertex_rotations[0].swap(0, 1);
        let d = TopoDrawing::new(parts).unwrap();
        assert!(!check_realizable(&d));
    }

    #[test]
    fn isolated_vertices_are_components() {
        let g = crate::graph::Graph::empty(3);
        let parts = DrawingParts {
            crossings: vec![],
            routes: vec![],
            vertex_rotations: vec![vec![]; 3],
            crossing_rotations: vec![],
            graph: g,
            geometry: None,
        };
        let d = TopoDrawing::new(parts).unwrap();
        let s = planarization_stats(&d);
        assert_eq!(s.components, 3);
        assert_eq!(s.faces, 1);
        assert!(s.genus_zero);
        assert_eq!(s.euler_characteristic(), 4);
    }
}
