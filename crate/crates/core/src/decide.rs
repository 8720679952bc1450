//! Exact decision procedures over vertex orders, and extremal edge-count oracles.
//!
//! All searches are sequential and enumerate candidates in lexicographic order,
//! so the first valid order found is the least one and runs are reproducible.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{fan_apex, Edge, Graph};
use crate::outer::{interleaves_at, next_permutation, outer_violations, CircularOrder, OuterDrawing};
use crate::two_layer::{two_layer_violations, TwoLayerOrder};

/// Limits for a search; `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_orders: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn new(max_orders: Option<u64>, time_limit: Option<Duration>) -> Result<Self> {
        if max_orders == Some(0) {
            return Err(Error::Precondition("order budget must be positive".into()));
        }
        if time_limit == Some(Duration::ZERO) {
            return Err(Error::Precondition("time limit must be positive".into()));
        }
        Ok(SearchBudget { max_orders, time_limit })
    }

    pub fn with_max_orders(mut self, n: u64) -> Self {
        self.max_orders = Some(n);
        self
    }

    pub fn with_time_limit(mut self, t: Duration) -> Self {
        self.time_limit = Some(t);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    /// The budget ran out before the search space was exhausted.
    Unknown,
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision<W> {
    pub answer: Answer,
    pub witness: Option<W>,
    /// Complete orders accounted for, including those cut off by pruning.
    pub explored: u64,
}

impl<W> Decision<W> {
    fn yes(w: W, explored: u64) -> Self {
        Decision {
            answer: Answer::Yes,
            witness: Some(w),
            explored,
        }
    }

    fn without_witness(answer: Answer, explored: u64) -> Self {
        Decision {
            answer,
            witness: None,
            explored,
        }
    }
}

/// Budget bookkeeping shared by all searches.
struct Meter {
    budget: SearchBudget,
    start: Instant,
    explored: u64,
    ticks: u64,
    exhausted: bool,
    /// Size of the whole search space when known; reaching it is never exhaustion.
    total: Option<u64>,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            explored: 0,
            ticks: 0,
            exhausted: false,
            total: None,
        }
    }

    fn with_total(mut self, total: u64) -> Self {
        self.total = Some(total);
        self
    }

    /// Called on entering a search node; true when the search must stop.
    fn stop(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        if let Some(max) = self.budget.max_orders {
            if self.explored >= max && self.total.is_none_or(|t| self.explored < t) {
                self.exhausted = true;
            }
        }
        self.ticks += 1;
        if self.ticks.is_multiple_of(256) {
            if let Some(limit) = self.budget.time_limit {
                if self.start.elapsed() >= limit {
                    self.exhausted = true;
                }
            }
        }
        self.exhausted
    }

    fn account(&mut self, orders: u64) {
        self.explored = self.explored.saturating_add(orders);
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |a, b| a.saturating_mul(b))
}

/// Circular orders of `n` vertices up to rotation and reflection.
pub fn canonical_circular_orders(n: usize) -> u64 {
    if n < 3 {
        1
    } else {
        factorial(n - 1) / 2
    }
}

/// Whether adding `g` to the pairwise-checked set `edges` keeps every crosser set a fan.
fn addition_keeps_fan_by(edges: &[Edge], g: Edge, cross: &impl Fn(Edge, Edge) -> bool) -> bool {
    let xs: Vec<Edge> = edges.iter().copied().filter(|&f| cross(g, f)).collect();
    if fan_apex(&xs).is_none() {
        return false;
    }
    xs.iter().all(|&f| {
        let mut fx: Vec<Edge> = edges.iter().copied().filter(|&h| cross(f, h)).collect();
        fx.push(g);
        fan_apex(&fx).is_some()
    })
}

struct OuterSearch<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<usize>,
    positions: Vec<usize>,
    used: Vec<bool>,
    complete: Vec<Edge>,
    meter: Meter,
    found: Option<Vec<usize>>,
}

impl OuterSearch<'_> {
    /// Canonical completions of the current prefix (vertex 0 first, second below last).
    fn completions(&self) -> u64 {
        let k = self.order.len();
        let r = self.n - k;
        if r == 0 {
            return 1;
        }
        let x = self.order[1];
        let above = (x + 1..self.n).filter(|&v| !self.used[v]).count();
        above as u64 * factorial(r - 1)
    }

    fn place(&mut self, v: usize) -> usize {
        let k = self.order.len();
        self.order.push(v);
        self.positions[v] = k;
        self.used[v] = true;
        let before = self.complete.len();
        for &w in self.g.neighbors(v) {
            if self.used[w] {
                self.complete.push(Edge::new(v, w));
            }
        }
        before
    }

    fn unplace(&mut self, v: usize, before: usize) {
        self.complete.truncate(before);
        self.used[v] = false;
        self.positions[v] = usize::MAX;
        self.order.pop();
    }

    /// Checks the edges completed by the last placement, one at a time.
    fn new_edges_ok(&self, before: usize) -> bool {
        let pos = &self.positions;
        let cross = |a: Edge, b: Edge| interleaves_at(pos, a, b);
        (before..self.complete.len()).all(|i| addition_keeps_fan_by(&self.complete[..i], self.complete[i], &cross))
    }

    fn run(&mut self) {
        if self.meter.stop() || self.found.is_some() {
            return;
        }
        let k = self.order.len();
        if k == self.n {
            self.meter.account(1);
            self.found = Some(self.order.clone());
            return;
        }
        for v in 1..self.n {
            if self.used[v] {
                continue;
            }
            // canonical: second entry below last
            if k == self.n - 1 && self.n > 2 && v < self.order[1] {
                continue;
            }
            let before = self.place(v);
            let viable = k != 1 || self.completions() > 0;
            if viable {
                if self.new_edges_ok(before) {
                    self.run();
                } else {
                    let c = self.completions();
                    self.meter.account(c);
                }
            }
            self.unplace(v, before);
            if self.found.is_some() || self.meter.exhausted {
                return;
            }
        }
    }
}

/// Decides outer fan-planarity by searching canonical circular orders with pruning.
/// A yes-witness is the lexicographically least valid canonical order.
pub fn decide_outer_fan_planar(g: &Graph, budget: SearchBudget) -> Decision<CircularOrder> {
    let n = g.n();
    if n == 0 {
        return Decision::yes(CircularOrder::identity(0), 1);
    }
    let mut s = OuterSearch {
        g,
        n,
        order: Vec::with_capacity(n),
        positions: vec![usize::MAX; n],
        used: vec![false; n],
        complete: Vec::new(),
        meter: Meter::new(budget).with_total(canonical_circular_orders(n)),
        found: None,
    };
    s.place(0);
    s.run();
    let explored = s.meter.explored;
    match s.found {
        Some(order) => Decision::yes(CircularOrder::new(order).unwrap(), explored),
        None if s.meter.exhausted => Decision::without_witness(Answer::Unknown, explored),
        None => Decision::without_witness(Answer::No, explored),
    }
}

/// Same contract as [`decide_outer_fan_planar`], checking every canonical order in full.
pub fn decide_outer_unpruned(g: &Graph, budget: SearchBudget) -> Decision<CircularOrder> {
    let n = g.n();
    if n <= 1 {
        return Decision::yes(CircularOrder::identity(n), 1);
    }
    let mut meter = Meter::new(budget).with_total(canonical_circular_orders(n));
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        if meter.stop() {
            return Decision::without_witness(Answer::Unknown, meter.explored);
        }
        if rest.len() < 2 || rest[0] < rest[rest.len() - 1] {
            meter.account(1);
            let mut order = vec![0];
            order.extend(&rest);
            let order = CircularOrder::new(order).unwrap();
            let d = OuterDrawing::new(g.clone(), order.clone()).unwrap();
            if outer_violations(&d).is_empty() {
                return Decision::yes(order, meter.explored);
            }
        }
        if !next_permutation(&mut rest) {
            return Decision::without_witness(Answer::No, meter.explored);
        }
    }
}

/// Layer assignments for a bipartite graph: one polarity per component, vertex 0 on top.
fn layer_assignments(g: &Graph) -> Option<Vec<Vec<bool>>> {
    let coloring = g.two_coloring()?;
    let comps = g.components();
    let mut out = Vec::new();
    let free = comps.len().saturating_sub(1);
    for mask in 0u64..(1u64 << free) {
        let mut top = vec![false; g.n()];
        for (ci, comp) in comps.iter().enumerate() {
            let root_top = ci == 0 || mask >> (ci - 1) & 1 == 0;
            let root_color = coloring[comp[0]];
            for &v in comp {
                top[v] = (coloring[v] == root_color) == root_top;
            }
        }
        out.push(top);
    }
    Some(out)
}

struct LayerSearch<'a> {
    g: &'a Graph,
    top_set: Vec<usize>,
    bottom_set: Vec<usize>,
    top: Vec<usize>,
    bottom: Vec<usize>,
    slot: Vec<usize>,
    is_top: Vec<bool>,
    used: Vec<bool>,
    complete: Vec<Edge>,
    meter: Meter,
    found: Option<(Vec<usize>, Vec<usize>)>,
}

impl LayerSearch<'_> {
    fn crosses(&self, e: Edge, f: Edge) -> bool {
        if e.is_adjacent(f) {
            return false;
        }
        let ends = |x: Edge| {
            if self.is_top[x.u()] {
                (self.slot[x.u()], self.slot[x.v()])
            } else {
                (self.slot[x.v()], self.slot[x.u()])
            }
        };
        let (et, eb) = ends(e);
        let (ft, fb) = ends(f);
        (et < ft) != (eb < fb)
    }

    /// Whether the finished sequence is the representative under simultaneous reversal.
    fn canonical_ok(&self) -> bool {
        if self.top_set.len() >= 2 {
            self.top[0] < self.top[self.top.len() - 1]
        } else if self.bottom_set.len() >= 2 && self.bottom.len() == self.bottom_set.len() {
            self.bottom[0] < self.bottom[self.bottom.len() - 1]
        } else {
            true
        }
    }

    fn run(&mut self) {
        if self.meter.stop() || self.found.is_some() {
            return;
        }
        let on_top = self.top.len() < self.top_set.len();
        if !on_top && self.bottom.len() == self.bottom_set.len() {
            if self.canonical_ok() {
                self.meter.account(1);
                self.found = Some((self.top.clone(), self.bottom.clone()));
            }
            return;
        }
        let layer = if on_top { self.top_set.clone() } else { self.bottom_set.clone() };
        for v in layer {
            if self.used[v] {
                continue;
            }
            let seq_len = if on_top { self.top.len() } else { self.bottom.len() };
            self.slot[v] = seq_len;
            self.used[v] = true;
            if on_top {
                self.top.push(v);
            } else {
                self.bottom.push(v);
            }
            let before = self.complete.len();
            for &w in self.g.neighbors(v) {
                if self.used[w] {
                    self.complete.push(Edge::new(v, w));
                }
            }
            let top_done = self.top.len() == self.top_set.len();
            if on_top && top_done && self.top_set.len() >= 2 && !self.canonical_ok() {
                // reversed duplicate of an order already covered
            } else {
                let ok = (before..self.complete.len()).all(|i| {
                    addition_keeps_fan_by(&self.complete[..i], self.complete[i], &|a, b| self.crosses(a, b))
                });
                if ok {
                    self.run();
                } else {
                    // top is complete here: edges need a bottom endpoint
                    let r = self.bottom_set.len() - self.bottom.len();
                    self.meter.account(factorial(r));
                }
            }
            self.complete.truncate(before);
            if on_top {
                self.top.pop();
            } else {
                self.bottom.pop();
            }
            self.used[v] = false;
            if self.found.is_some() || self.meter.exhausted {
                return;
            }
        }
    }
}

/// Decides 2-layer fan-planarity: every layer assignment of the components,
/// then layer permutations up to simultaneous reversal. A yes-witness is the
/// least valid `(top, bottom)` pair in lexicographic order.
pub fn decide_two_layer_fan_planar(g: &Graph, budget: SearchBudget) -> Decision<TwoLayerOrder> {
    let Some(assignments) = layer_assignments(g) else {
        return Decision::without_witness(Answer::No, 0);
    };
    let start = Instant::now();
    let mut explored = 0u64;
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for is_top in assignments {
        let remaining = SearchBudget {
            max_orders: budget.max_orders.map(|m| m.saturating_sub(explored)),
            time_limit: budget.time_limit.map(|t| t.saturating_sub(start.elapsed())),
        };
        if remaining.max_orders == Some(0) || remaining.time_limit == Some(Duration::ZERO) {
            return Decision::without_witness(Answer::Unknown, explored);
        }
        let top_set: Vec<usize> = (0..g.n()).filter(|&v| is_top[v]).collect();
        let bottom_set: Vec<usize> = (0..g.n()).filter(|&v| !is_top[v]).collect();
        let mut s = LayerSearch {
            g,
            top_set,
            bottom_set,
            top: Vec::new(),
            bottom: Vec::new(),
            slot: vec![usize::MAX; g.n()],
            is_top,
            used: vec![false; g.n()],
            complete: Vec::new(),
            meter: Meter::new(remaining),
            found: None,
        };
        s.run();
        explored += s.meter.explored;
        if s.meter.exhausted && s.found.is_none() {
            return Decision::without_witness(Answer::Unknown, explored);
        }
        if let Some(w) = s.found {
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
            }
        }
    }
    match best {
        Some((top, bottom)) => Decision::yes(TwoLayerOrder::new(top, bottom).unwrap(), explored),
        None => Decision::without_witness(Answer::No, explored),
    }
}

/// Same contract as [`decide_two_layer_fan_planar`], checking every order in full.
pub fn decide_two_layer_unpruned(g: &Graph, budget: SearchBudget) -> Decision<TwoLayerOrder> {
    let Some(assignments) = layer_assignments(g) else {
        return Decision::without_witness(Answer::No, 0);
    };
    let mut meter = Meter::new(budget);
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for is_top in assignments {
        let mut top: Vec<usize> = (0..g.n()).filter(|&v| is_top[v]).collect();
        let bottom0: Vec<usize> = (0..g.n()).filter(|&v| !is_top[v]).collect();
        let mut found = None;
        'tops: loop {
            let mut bottom = bottom0.clone();
            loop {
                if meter.stop() {
                    return Decision::without_witness(Answer::Unknown, meter.explored);
                }
                let canonical = if top.len() >= 2 {
                    top[0] < top[top.len() - 1]
                } else {
                    bottom.len() < 2 || bottom[0] < bottom[bottom.len() - 1]
                };
                if canonical {
                    meter.account(1);
                    let t = TwoLayerOrder::new(top.clone(), bottom.clone()).unwrap();
                    if two_layer_violations(g, &t).unwrap().is_empty() {
                        found = Some((top.clone(), bottom.clone()));
                        break 'tops;
                    }
                }
                if !next_permutation(&mut bottom) {
                    break;
                }
            }
            if !next_permutation(&mut top) {
                break;
            }
        }
        if let Some(w) = found {
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
            }
        }
    }
    match best {
        Some((top, bottom)) => Decision::yes(TwoLayerOrder::new(top, bottom).unwrap(), meter.explored),
        None => Decision::without_witness(Answer::No, meter.explored),
    }
}

/// Branch and bound over a candidate edge list: maximum (and optionally all
/// maximum) edge subsets keeping every crosser set a fan.
struct EdgeBnb<'a, F: Fn(Edge, Edge) -> bool> {
    candidates: &'a [Edge],
    cross: F,
    chosen: Vec<Edge>,
    best: usize,
    keep_all: bool,
    maxima: Vec<Vec<Edge>>,
    meter: Meter,
}

impl<F: Fn(Edge, Edge) -> bool> EdgeBnb<'_, F> {
    fn run(&mut self, i: usize) {
        if self.meter.stop() {
            return;
        }
        self.meter.account(1);
        let possible = self.chosen.len() + (self.candidates.len() - i);
        if possible < self.best || (!self.keep_all && possible == self.best) {
            return;
        }
        if i == self.candidates.len() {
            if self.chosen.len() > self.best {
                self.best = self.chosen.len();
                self.maxima.clear();
            }
            if self.keep_all {
                self.maxima.push(self.chosen.clone());
            }
            return;
        }
        let g = self.candidates[i];
        if addition_keeps_fan_by(&self.chosen, g, &self.cross) {
            self.chosen.push(g);
            self.run(i + 1);
            self.chosen.pop();
        }
        self.run(i + 1);
    }
}

fn outer_bnb(n: usize, budget: SearchBudget, incumbent: usize, keep_all: bool) -> Result<(usize, Vec<Vec<Edge>>)> {
    let candidates: Vec<Edge> = crate::graph::complete_graph(n).edges().to_vec();
    let positions: Vec<usize> = (0..n).collect();
    let mut bnb = EdgeBnb {
        candidates: &candidates,
        cross: |a: Edge, b: Edge| interleaves_at(&positions, a, b),
        chosen: Vec::new(),
        best: incumbent,
        keep_all,
        maxima: Vec::new(),
        meter: Meter::new(budget),
    };
    bnb.run(0);
    if bnb.meter.exhausted {
        return Err(Error::BudgetExhausted { lower_bound: bnb.best });
    }
    Ok((bnb.best, bnb.maxima))
}

/// Lower bound from a saturated drawing on the identity order.
fn outer_incumbent(n: usize) -> usize {
    let d = OuterDrawing::new(Graph::empty(n), CircularOrder::identity(n)).unwrap();
    crate::outer::saturate(&d).map(|g| g.m()).unwrap_or(0)
}

/// Maximum edge count of an outer fan-planar graph on `n` vertices, `3 <= n <= 7`.
///
/// Any outer drawing is isomorphic to one on the identity order, so a single
/// order suffices; edge subsets are explored by branch and bound. The budget
/// counts search nodes.
pub fn max_outer_edges(n: usize, budget: SearchBudget) -> Result<usize> {
    if !(3..=7).contains(&n) {
        return Err(Error::Precondition(format!("n = {n} outside the oracle range 3..=7")));
    }
    let inc = outer_incumbent(n);
    // the incumbent is attained, so search only for strictly larger sets
    outer_bnb(n, budget, inc, false).map(|(best, _)| best)
}

/// Every maximum outer fan-planar edge set on the identity order of `n` vertices.
pub fn maximum_outer_graphs(n: usize, budget: SearchBudget) -> Result<Vec<Graph>> {
    if !(3..=7).contains(&n) {
        return Err(Error::Precondition(format!("n = {n} outside the oracle range 3..=7")));
    }
    let (_, maxima) = outer_bnb(n, budget, outer_incumbent(n), true)?;
    Ok(maxima
        .into_iter()
        .map(|es| Graph::from_edges(n, es.iter().map(|e| (e.u(), e.v()))).unwrap())
        .collect())
}

/// Maximum edge count of a 2-layer fan-planar graph with layers of sizes `n1`
/// and `n2` (both at most 4), over all bipartite edge subsets.
///
/// Fixed layer orders suffice up to relabeling; the budget counts search nodes.
pub fn max_two_layer_edges(n1: usize, n2: usize, budget: SearchBudget) -> Result<usize> {
    if n1 > 4 || n2 > 4 {
        return Err(Error::Precondition(format!("layers ({n1},{n2}) outside the oracle range")));
    }
    let (full, _) = crate::graph::complete_bipartite(n1, n2);
    let candidates = full.edges().to_vec();
    // top vertices 0..n1 keep slot = id, bottom vertices n1.. keep slot = id - n1
    let slot = |v: usize| if v < n1 { v } else { v - n1 };
    let cross = |a: Edge, b: Edge| {
        !a.is_adjacent(b) && ((slot(a.u()) < slot(b.u())) != (slot(a.v()) < slot(b.v())))
    };
    let mut bnb = EdgeBnb {
        candidates: &candidates,
        cross,
        chosen: Vec::new(),
        best: 0,
        keep_all: false,
        maxima: Vec::new(),
        meter: Meter::new(budget),
    };
    // a star from the first top vertex plus one more edge per extra top vertex is always valid
    bnb.best = if n1 == 0 || n2 == 0 { 0 } else { n2 + (n1 - 1) }.min(candidates.len());
    bnb.run(0);
    if bnb.meter.exhausted {
        return Err(Error::BudgetExhausted { lower_bound: bnb.best });
    }
    Ok(bnb.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph};
    use crate::two_layer::two_layer_violations;

    fn unlimited() -> SearchBudget {
        SearchBudget::unlimited()
    }

    #[test]
    fn k5_yes_with_identity_witness() {
        let d = decide_outer_fan_planar(&complete_graph(5), unlimited());
        assert_eq!(d.answer, Answer::Yes);
        assert_eq!(d.witness.unwrap().as_slice(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn k6_no_after_sixty_orders() {
        let d = decide_outer_fan_planar(&complete_graph(6), unlimited());
        assert_eq!(d.answer, Answer::No);
        assert_eq!(d.explored, 60);
        let u = decide_outer_unpruned(&complete_graph(6), unlimited());
        assert_eq!(u.answer, Answer::No);
        assert_eq!(u.explored, 60);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let d = decide_outer_fan_planar(&complete_graph(6), unlimited().with_max_orders(10));
        assert_eq!(d.answer, Answer::Unknown);
        assert!(d.witness.is_none());
        let d = decide_outer_fan_planar(&complete_graph(6), unlimited().with_max_orders(60));
        assert_eq!(d.answer, Answer::No);
        assert!(SearchBudget::new(Some(0), None).is_err());
    }

    #[test]
    fn tiny_graphs() {
        for n in 0..4 {
            let d = decide_outer_fan_planar(&complete_graph(n), unlimited());
            assert_eq!(d.answer, Answer::Yes);
            assert_eq!(d.witness.unwrap().len(), n);
        }
    }

    #[test]
    fn pruned_and_unpruned_agree_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(2..=6);
            let p = rng.gen_range(0.3..0.95);
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, pairs).unwrap();
            let a = decide_outer_fan_planar(&g, unlimited());
            let b = decide_outer_unpruned(&g, unlimited());
            assert_eq!(a.answer, b.answer);
            assert_eq!(a.witness, b.witness);
            if let Some(w) = a.witness {
                assert!(w.is_canonical());
                assert!(outer_violations(&OuterDrawing::new(g.clone(), w).unwrap()).is_empty());
            }
            let a = decide_two_layer_fan_planar(&g, unlimited());
            let b = decide_two_layer_unpruned(&g, unlimited());
            assert_eq!(a.answer, b.answer);
            assert_eq!(a.witness, b.witness);
            if let Some(w) = a.witness {
                assert!(two_layer_violations(&g, &w).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn two_layer_examples() {
        let (k23, _) = complete_bipartite(2, 3);
        let d = decide_two_layer_fan_planar(&k23, unlimited());
        assert_eq!(d.answer, Answer::Yes);
        assert!(two_layer_violations(&k23, d.witness.as_ref().unwrap()).unwrap().is_empty());
        let (k33, _) = complete_bipartite(3, 3);
        assert_eq!(decide_two_layer_fan_planar(&k33, unlimited()).answer, Answer::No);
        assert_eq!(decide_two_layer_fan_planar(&cycle_graph(3), unlimited()).answer, Answer::No);
    }

    #[test]
    fn two_layer_disconnected_uses_both_polarities() {
        // two disjoint stars K_{1,3}: valid in any polarity
        let g = Graph::from_edges(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        let d = decide_two_layer_fan_planar(&g, unlimited());
        assert_eq!(d.answer, Answer::Yes);
        let w = d.witness.unwrap();
        assert!(w.is_top(0));
        // both centres on top is the least assignment
        assert_eq!(w.top(), &[0, 4]);
    }

    #[test]
    fn outer_oracle_small_values() {
        assert_eq!(max_outer_edges(3, unlimited()).unwrap(), 3);
        assert_eq!(max_outer_edges(4, unlimited()).unwrap(), 6);
        assert_eq!(max_outer_edges(5, unlimited()).unwrap(), 10);
        assert!(max_outer_edges(8, unlimited()).is_err());
    }

    #[test]
    fn outer_oracle_budget_reports_lower_bound() {
        match max_outer_edges(6, unlimited().with_max_orders(5)) {
            Err(Error::BudgetExhausted { lower_bound }) => assert!(lower_bound >= 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn maximum_outer_graphs_are_valid_and_maximum() {
        let all = maximum_outer_graphs(5, unlimited()).unwrap();
        assert_eq!(all, vec![complete_graph(5)]);
    }

    #[test]
    fn two_layer_oracle_small_values() {
        assert_eq!(max_two_layer_edges(2, 3, unlimited()).unwrap(), 6);
        assert_eq!(max_two_layer_edges(1, 3, unlimited()).unwrap(), 3);
        assert_eq!(max_two_layer_edges(0, 3, unlimited()).unwrap(), 0);
        assert!(max_two_layer_edges(3, 3, unlimited()).unwrap() <= 8);
    }

    #[test]
    fn monotone_under_edge_removal() {
        let g = complete_graph(5);
        for &e in g.edges() {
            let h = g.without_edges(&[e]);
            assert_eq!(decide_outer_fan_planar(&h, unlimited()).answer, Answer::Yes);
        }
    }
}
