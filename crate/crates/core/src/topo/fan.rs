//! Fan-planarity conditions on a rotation system.
//!
//! Condition (a): the crossers of every edge lie in one fan.
//! Condition (b): when an edge `e` has two or more crossers with common apex `u`,
//! every crosser traversed away from `u` passes `e` from the same side. The side is
//! read at each crossing node: orient `e` along its route, and check whether the
//! crosser's fragment towards `u` follows `e`'s incoming fragment
//! counter-clockwise or precedes it.

use serde::{Deserialize, Serialize};

use super::{check_realizable, Dart, Node, TopoDrawing};
use crate::graph::{fan_apex, Edge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    IndependentCrossers,
    DifferentSides,
    NotRealizable,
    NonSimple,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::IndependentCrossers => "independent-crossers",
            ViolationKind::DifferentSides => "different-sides",
            ViolationKind::NotRealizable => "not-realizable",
            ViolationKind::NonSimple => "non-simple",
        }
    }
}

/// A violated condition with its witness edges; for crossing violations the
/// first witness is the crossed edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<Edge>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Violation {
    pub fn new(kind: ViolationKind, witness: Vec<Edge>) -> Self {
        Violation {
            kind,
            witness,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.kind.as_str())?;
        for (i, e) in self.witness.iter().enumerate() {
            f.write_str(if i == 0 { ": " } else { ", " })?;
            write!(f, "{e}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Condition (a) on one edge; returns the witness edges of a violation.
fn independent_crossers(e: Edge, crossers: &[Edge]) -> Option<Vec<Edge>> {
    if fan_apex(crossers).is_some() {
        return None;
    }
    for (i, &f) in crossers.iter().enumerate() {
        if let Some(&g) = crossers[i + 1..].iter().find(|g| f.is_independent(**g)) {
            return Some(vec![e, f, g]);
        }
    }
    // pairwise adjacent but no common vertex: the crossers contain a triangle
    let mut w = vec![e];
    w.extend(crossers.iter().take(3));
    Some(w)
}

/// Side bit of crosser `f` at crossing `c` on edge `e` with respect to apex `apex`.
fn side(d: &TopoDrawing, e: usize, f: usize, c: usize, apex: usize) -> bool {
    let rot = d.rotation(Node::Crossing(c));
    let (e_prev, _) = d.neighbors_on_route(e, c);
    let (f_prev, f_next) = d.neighbors_on_route(f, c);
    let toward_apex = if d.graph().edge(f).u() == apex { f_prev } else { f_next };
    let i = rot
        .iter()
        .position(|&x| x == Dart::new(e, e_prev))
        .expect("incoming fragment at crossing");
    rot[(i + 1) % 4] == Dart::new(f, toward_apex)
}

/// Checks conditions (a) and (b). Output is sorted; empty iff the drawing is fan-planar.
pub fn validate_fan_planar(d: &TopoDrawing) -> Vec<Violation> {
    if !check_realizable(d) {
        return vec![Violation::new(ViolationKind::NotRealizable, Vec::new())
            .with_detail("rotation system is not a plane embedding")];
    }
    let g = d.graph();
    let mut out = Vec::new();
    for e in 0..g.m() {
        let ids = d.crossers(e);
        if ids.is_empty() {
            continue;
        }
        let crossers: Vec<Edge> = ids.iter().map(|&f| g.edge(f)).collect();
        if let Some(w) = independent_crossers(g.edge(e), &crossers) {
            out.push(Violation::new(ViolationKind::IndependentCrossers, w));
            continue;
        }
        let Some(Some(apex)) = fan_apex(&crossers) else {
            continue;
        };
        let route = d.route(e);
        let first = side(d, e, ids[0], route[0], apex);
        for (k, (&f, &c)) in ids.iter().zip(route).enumerate().skip(1) {
            if side(d, e, f, c, apex) != first {
                out.push(
                    Violation::new(
                        ViolationKind::DifferentSides,
                        vec![g.edge(e), crossers[0], crossers[k]],
                    )
                    .with_detail(format!("apex {apex}")),
                );
                break;
            }
        }
    }
    out.sort();
    out
}

/// Maximum number of crossings on a single edge.
pub fn max_crossings_per_edge(d: &TopoDrawing) -> usize {
    (0..d.graph().m()).map(|e| d.route(e).len()).max().unwrap_or(0)
}

pub fn is_k_planar(d: &TopoDrawing, k: usize) -> bool {
    max_crossings_per_edge(d) <= k
}
