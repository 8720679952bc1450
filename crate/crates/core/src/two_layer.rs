//! 2-layer drawings: vertices on two parallel lines, crossings are inversions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{fan_apex, BipartitePartition, Edge, Graph};
use crate::outer::{CircularOrder, OuterViolation};

#[derive(Serialize, Deserialize)]
struct RawLayers {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

/// Left-to-right orders of the two layers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLayers", into = "RawLayers")]
pub struct TwoLayerOrder {
    top: Vec<usize>,
    bottom: Vec<usize>,
    partition: BipartitePartition,
    /// Index within its own layer.
    slot: Vec<usize>,
}

impl TwoLayerOrder {
    /// The layers must together cover `0..top.len() + bottom.len()` exactly once.
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let n = top.len() + bottom.len();
        let partition = BipartitePartition::new(n, top.clone(), bottom.clone())
            .map_err(|e| Error::InvalidOrder(e.to_string()))?;
        let mut slot = vec![0; n];
        for (i, &v) in top.iter().enumerate() {
            slot[v] = i;
        }
        for (i, &v) in bottom.iter().enumerate() {
            slot[v] = i;
        }
        Ok(TwoLayerOrder {
            top,
            bottom,
            partition,
            slot,
        })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn partition(&self) -> &BipartitePartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.slot.len()
    }

    pub fn is_top(&self, v: usize) -> bool {
        self.partition.in_part1(v)
    }

    /// Both layers reversed; the drawing is mirrored and crossings are unchanged.
    pub fn reversed(&self) -> Self {
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        top.reverse();
        bottom.reverse();
        Self::new(top, bottom).unwrap()
    }

    /// `(top slot, bottom slot)` of a top-bottom edge.
    fn ends(&self, e: Edge) -> (usize, usize) {
        if self.is_top(e.u()) {
            (self.slot[e.u()], self.slot[e.v()])
        } else {
            (self.slot[e.v()], self.slot[e.u()])
        }
    }
}

impl TryFrom<RawLayers> for TwoLayerOrder {
    type Error = Error;

    fn try_from(r: RawLayers) -> Result<Self> {
        Self::new(r.top, r.bottom)
    }
}

impl From<TwoLayerOrder> for RawLayers {
    fn from(t: TwoLayerOrder) -> Self {
        RawLayers {
            top: t.top,
            bottom: t.bottom,
        }
    }
}

/// True iff the top-bottom edges `e` and `f` cross.
pub fn two_layer_crosses(t: &TwoLayerOrder, e: Edge, f: Edge) -> bool {
    if e.is_adjacent(f) {
        return false;
    }
    let (et, eb) = t.ends(e);
    let (ft, fb) = t.ends(f);
    (et < ft) != (eb < fb)
}

fn check_layers(g: &Graph, t: &TwoLayerOrder) -> Result<()> {
    if t.n() != g.n() {
        return Err(Error::InvalidOrder(format!(
            "layers hold {} vertices, graph has {}",
            t.n(),
            g.n()
        )));
    }
    if let Some(e) = g.edges().iter().find(|e| t.is_top(e.u()) == t.is_top(e.v())) {
        return Err(Error::Precondition(format!("edge {e} joins two vertices of one layer")));
    }
    Ok(())
}

/// Edges crossed by two independent edges, one witness pair each.
pub fn two_layer_violations(g: &Graph, t: &TwoLayerOrder) -> Result<Vec<OuterViolation>> {
    check_layers(g, t)?;
    let mut out = Vec::new();
    for &e in g.edges() {
        let xs: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|&f| two_layer_crosses(t, e, f))
            .collect();
        if fan_apex(&xs).is_some() {
            continue;
        }
        'pairs: for (i, &f) in xs.iter().enumerate() {
            for &h in &xs[i + 1..] {
                if f.is_independent(h) {
                    out.push(OuterViolation { edge: e, crossers: (f, h) });
                    break 'pairs;
                }
            }
        }
    }
    Ok(out)
}

/// Top left-to-right followed by bottom right-to-left.
pub fn two_layer_to_circular(t: &TwoLayerOrder) -> CircularOrder {
    let mut order = t.top.clone();
    order.extend(t.bottom.iter().rev());
    CircularOrder::new(order).unwrap()
}

/// Adds the paths along both layers, turning the 2-layer drawing into an outer
/// drawing of a supergraph with `n - 2` more edges.
pub fn augment_layers(g: &Graph, t: &TwoLayerOrder) -> Result<(Graph, CircularOrder)> {
    if !two_layer_violations(g, t)?.is_empty() {
        return Err(Error::Precondition("layer orders are not fan-planar".into()));
    }
    if t.top.is_empty() || t.bottom.is_empty() {
        return Err(Error::Precondition("both layers must be non-empty".into()));
    }
    let layer_paths = t
        .top
        .windows(2)
        .chain(t.bottom.windows(2))
        .map(|w| Edge::new(w[0], w[1]));
    let augmented = g.with_edges(layer_paths)?;
    Ok((augmented, two_layer_to_circular(t)))
}
