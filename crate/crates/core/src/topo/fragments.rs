use std::collections::{BTreeMap, VecDeque};

use super::{Node, TopoDrawing};

/// Piece of a crossed edge between consecutive nodes of its route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fragment {
    pub edge: usize,
    pub index: usize,
    pub ends: (Node, Node),
}

/// Fragments with adjacency "shares a crossing or an end-vertex".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentGraph {
    pub fragments: Vec<Fragment>,
    pub adjacency: Vec<Vec<usize>>,
    /// Fragment ids incident to each real vertex.
    pub anchors: Vec<Vec<usize>>,
}

impl FragmentGraph {
    pub fn len(&self) -> usize {
        self.fragments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fragments.is_empty()
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }
}

pub fn fragment_graph(d: &TopoDrawing) -> FragmentGraph {
    let mut fragments = Vec::new();
    for e in 0..d.graph().m() {
        if d.route(e).is_empty() {
            continue;
        }
        let nodes = d.route_nodes(e);
        for (index, w) in nodes.windows(2).enumerate() {
            fragments.push(Fragment {
                edge: e,
                index,
                ends: (w[0], w[1]),
            });
        }
    }

    let mut at_node: BTreeMap<Node, Vec<usize>> = BTreeMap::new();
    for (i, f) in fragments.iter().enumerate() {
        at_node.entry(f.ends.0).or_default().push(i);
        at_node.entry(f.ends.1).or_default().push(i);
    }
    let mut adjacency = vec![Vec::new(); fragments.len()];
    for group in at_node.values() {
        for &a in group {
            adjacency[a].extend(group.iter().copied().filter(|&b| b != a));
        }
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
        adj.dedup();
    }
    let mut anchors = vec![Vec::new(); d.graph().n()];
    for (node, group) in &at_node {
        if let Node::Vertex(v) = *node {
            anchors[v] = group.clone();
        }
    }
    FragmentGraph {
        fragments,
        adjacency,
        anchors,
    }
}

/// Real vertices grouped by "joined by a sequence of adjacent fragments".
/// Vertices without fragments are singletons. Groups are sorted.
pub fn spine_components(d: &TopoDrawing) -> Vec<Vec<usize>> {
    let fg = fragment_graph(d);
    let n = d.graph().n();
    let mut comp_of_fragment = vec![usize::MAX; fg.len()];
    let mut next = 0;
    for s in 0..fg.len() {
        if comp_of_fragment[s] != usize::MAX {
            continue;
        }
        comp_of_fragment[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &fg.adjacency[x] {
                if comp_of_fragment[y] == usize::MAX {
                    comp_of_fragment[y] = next;
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut out = Vec::new();
    for v in 0..n {
        match fg.anchors[v].first() {
            Some(&f) => groups.entry(comp_of_fragment[f]).or_default().push(v),
            None => out.push(vec![v]),
        }
    }
    out.extend(groups.into_values());
    out.sort();
    out
}
