//! Separation oracles: given a fractional point, find violated
//! inequalities of each class or certify none exist.
//!
//! The one-sided min-cut and node cardinality-forcing classes separate
//! exactly in polynomial time (max-flow per node, greedy per forbidden
//! size); the modified cardinality-forcing class reduces to the greedy
//! run once per excluded node. Parity exclusion and cardinality-subgraph
//! separation are NP-hard in general, so those oracles enumerate
//! exhaustively up to a node budget and fall back to local search above
//! it, reporting which mode ran through the `exhausted` flag.

use crate::cardinality::CardinalitySequence;
use crate::error::{invalid, Error, Result};
use crate::generators::{self, Parity};
use crate::graph::{Geometry, Space, Variant};
use crate::inequality::LinearInequality;
use crate::maxflow::FlowNetwork;
use crate::rational::{rat, Rational};
use num_traits::Zero;

/// A nonnegative rational point in the arc/edge space of a graph; the
/// query object of every separation oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalPoint {
    space: Space,
    entries: Vec<Rational>,
}

impl FractionalPoint {
    pub fn new(space: Space, entries: Vec<Rational>) -> Result<Self> {
        let expected = space.geometry().len();
        if entries.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e < &Rational::zero()) {
            return Err(invalid("fractional points must be componentwise nonnegative"));
        }
        Ok(FractionalPoint { space, entries })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, geometry: &Geometry, u: usize, v: usize) -> Rational {
        geometry
            .index_of(u, v)
            .map_or_else(|| rat(0), |i| self.entries[i].clone())
    }

    /// Sum over arcs leaving `v` (directed) or edges at `v` (undirected).
    pub fn out_value(&self, geometry: &Geometry, v: usize) -> Rational {
        let mut acc = Rational::zero();
        for (i, &(a, b)) in geometry.coords().iter().enumerate() {
            let hit = if self.space.variant.is_directed() {
                a == v
            } else {
                a == v || b == v
            };
            if hit {
                acc += &self.entries[i];
            }
        }
        acc
    }

    /// Sum over arcs entering `v` (directed only).
    pub fn in_value(&self, geometry: &Geometry, v: usize) -> Rational {
        let mut acc = Rational::zero();
        for (i, &(_, b)) in geometry.coords().iter().enumerate() {
            if b == v {
                acc += &self.entries[i];
            }
        }
        acc
    }
}

/// A violated inequality with its exact violation amount.
#[derive(Debug, Clone)]
pub struct ViolatedCut {
    pub ineq: LinearInequality,
    pub violation: Rational,
}

/// Output of a separation oracle. Every listed inequality is genuinely
/// violated by the queried point (re-checked on construction);
/// `exhausted` reports whether the oracle searched its class exactly.
#[derive(Debug, Clone)]
pub struct SeparationResult {
    pub violated: Vec<ViolatedCut>,
    pub exhausted: bool,
}

impl SeparationResult {
    pub fn new(
        point: &FractionalPoint,
        cuts: Vec<LinearInequality>,
        exhausted: bool,
    ) -> Result<Self> {
        let mut violated = Vec::with_capacity(cuts.len());
        for ineq in cuts {
            let violation = ineq.violation(point.entries())?;
            if violation.is_zero() {
                return Err(Error::Internal(format!(
                    "separator emitted a non-violated inequality: {}",
                    ineq.class.describe()
                )));
            }
            violated.push(ViolatedCut { ineq, violation });
        }
        Ok(SeparationResult { violated, exhausted })
    }

    pub fn empty(exhausted: bool) -> Self {
        SeparationResult {
            violated: Vec::new(),
            exhausted,
        }
    }

    pub fn best_violation(&self) -> Option<&Rational> {
        self.violated.iter().map(|c| &c.violation).max()
    }
}

/// Exact separation of the one-sided min-cut class over the path
/// digraph: for each internal node l, a minimum cut separating the
/// merged endpoints from l under capacities x* is compared with the
/// inflow of l.
pub fn separate_one_sided_min_cut(
    point: &FractionalPoint,
    budget_nodes: usize,
) -> Result<SeparationResult> {
    let space = point.space();
    if space.variant != Variant::Path {
        return Err(invalid("one-sided min-cut separation runs on the path digraph"));
    }
    let _ = budget_nodes;
    let n = space.n;
    let geometry = space.geometry();
    let mut cuts = Vec::new();
    for l in 1..n {
        // Contracted network: node 0 is the merged endpoint pair, nodes
        // 1..n-1 keep their labels.
        let mut net = FlowNetwork::new(n);
        for (i, &(u, v)) in geometry.coords().iter().enumerate() {
            let cap = point.entries()[i].clone();
            if u == 0 {
                net.add_arc(0, v, cap);
            } else if v == n {
                net.add_arc(u, 0, cap);
            } else {
                net.add_arc(u, v, cap);
            }
        }
        let (cut_value, source_side) = net.max_flow(0, l)?;
        let inflow = point.in_value(&geometry, l);
        if cut_value < inflow {
            let mut s: Vec<usize> = source_side.into_iter().filter(|&v| v != 0).collect();
            s.push(0);
            s.push(n);
            s.sort_unstable();
            cuts.push(generators::one_sided_min_cut(&geometry, &s, l)?);
        }
    }
    SeparationResult::new(point, cuts, true)
}

/// Exact greedy separation of the node cardinality-forcing class: for
/// each forbidden node count, the left-hand side is maximized by taking
/// the nodes with the largest out-values, so the single greedy pick per
/// size decides the whole class. Ties break toward smaller node labels.
pub fn separate_cf_greedy(
    point: &FractionalPoint,
    c: &CardinalitySequence,
) -> Result<SeparationResult> {
    let space = point.space();
    if !space.variant.is_directed() {
        return Err(invalid("cardinality-forcing separation runs on directed spaces"));
    }
    let geometry = space.geometry();
    let n = space.n;
    let is_path = space.variant == Variant::Path;

    // Out-values, sorted descending with ascending node labels on ties.
    let pool: Vec<usize> = if is_path {
        (1..n).collect()
    } else {
        (1..=n).collect()
    };
    let mut ranked: Vec<(usize, Rational)> = pool
        .iter()
        .map(|&v| (v, point.out_value(&geometry, v)))
        .collect();
    ranked.sort_by(|(va, ya), (vb, yb)| yb.cmp(ya).then(va.cmp(vb)));

    let mut cuts = Vec::new();
    for p in c.gapped_brackets() {
        for w in (c.at(p) + 1)..c.at(p + 1) {
            let free = if is_path { w - 1 } else { w };
            if free > ranked.len() {
                continue;
            }
            let mut wset: Vec<usize> = ranked[..free].iter().map(|(v, _)| *v).collect();
            if is_path {
                wset.push(0);
                wset.push(n);
            }
            wset.sort_unstable();
            let ineq = generators::cf_node(&geometry, &wset, c, p)?;
            if !ineq.violation(point.entries())?.is_zero() {
                cuts.push(ineq);
            }
        }
    }
    SeparationResult::new(point, cuts, true)
}

/// Greedy separation of the arc cardinality-forcing class; exact by the
/// same exchange argument, picking the largest arc values per forbidden
/// arc count.
pub fn separate_cf_arc_greedy(
    point: &FractionalPoint,
    c: &CardinalitySequence,
) -> Result<SeparationResult> {
    let space = point.space();
    let geometry = space.geometry();
    let mut ranked: Vec<usize> = (0..geometry.len()).collect();
    ranked.sort_by(|&a, &b| point.entries()[b].cmp(&point.entries()[a]).then(a.cmp(&b)));

    let mut cuts = Vec::new();
    for p in c.gapped_brackets() {
        for f in (c.at(p) + 1)..c.at(p + 1) {
            if f > ranked.len() {
                continue;
            }
            let arcs: Vec<(usize, usize)> =
                ranked[..f].iter().map(|&i| geometry.coords()[i]).collect();
            let ineq = generators::cf_arc(&geometry, &arcs, c, p)?;
            if !ineq.violation(point.entries())?.is_zero() {
                cuts.push(ineq);
            }
        }
    }
    SeparationResult::new(point, cuts, true)
}

/// Separation of the modified cardinality-forcing class on the complete
/// digraph: for each excluded node r the greedy maximizer runs on the
/// rest, which is exact for fixed r, and every r is tried.
pub fn separate_mcf(
    point: &FractionalPoint,
    c: &CardinalitySequence,
) -> Result<SeparationResult> {
    let space = point.space();
    if space.variant != Variant::Cycle {
        return Err(invalid("modified cardinality-forcing separation runs on the complete digraph"));
    }
    let n = space.n;
    let geometry = space.geometry();
    let mut cuts = Vec::new();
    for p in 2..c.len().saturating_sub(1) {
        if c.at(p + 1) != c.at(p) + 2 || c.at(p + 2) != c.at(p) + 4 {
            continue;
        }
        if c.last() > n || n < 6 {
            continue;
        }
        let size = c.at(p) + 1;
        for r in 1..=n {
            // Score of node v with r excluded: out-value without the arc
            // into r. P collects the top scores.
            let mut scored: Vec<(usize, Rational)> = (1..=n)
                .filter(|&v| v != r)
                .map(|v| {
                    let score = point.out_value(&geometry, v) - point.get(&geometry, v, r);
                    (v, score)
                })
                .collect();
            scored.sort_by(|(va, sa), (vb, sb)| sb.cmp(sa).then(va.cmp(vb)));
            if size > scored.len() {
                continue;
            }
            let p_set: Vec<usize> = scored[..size].iter().map(|(v, _)| *v).collect();
            let q_set: Vec<usize> = scored[size..].iter().map(|(v, _)| *v).collect();
            let ineq = generators::modified_cf(&geometry, &p_set, &q_set, r, c, p)?;
            if !ineq.violation(point.entries())?.is_zero() {
                cuts.push(ineq);
            }
        }
    }
    SeparationResult::new(point, cuts, true)
}

/// Score used by the parity-exclusion separators: the left-hand side of
/// the candidate inequality; smaller is more violated.
fn parity_lhs(
    point: &FractionalPoint,
    geometry: &Geometry,
    side_of: &[u8], // 0 = S, 1 = T, 2 = outside both
    parity: Parity,
) -> Rational {
    let mut acc = Rational::zero();
    let top = geometry.space.n;
    for (i, &(u, v)) in geometry.coords().iter().enumerate() {
        if point.entries()[i].is_zero() {
            continue;
        }
        let (su, sv) = (side_of[u], side_of[v]);
        let mut coeff = 0i64;
        if su == sv && su != 2 {
            coeff += 1;
        }
        // The odd cycle form carries correction terms at the top node,
        // which sits outside both parts; the even form has none.
        if geometry.space.variant == Variant::Cycle && parity == Parity::Odd {
            if su == 1 && v == top {
                coeff += 1;
            }
            if u == top && sv == 1 {
                coeff -= 1;
            }
        }
        if coeff != 0 {
            acc += rat(coeff) * &point.entries()[i];
        }
    }
    acc
}

/// Separation of the odd/even exclusion constraints. Exhaustive over all
/// partitions up to `budget_nodes`; otherwise a deterministic single-flip
/// local search (never reporting a non-violated inequality). The most
/// violated partition found is emitted.
pub fn separate_parity_exclusion(
    point: &FractionalPoint,
    c: &CardinalitySequence,
    parity: Parity,
    budget_nodes: usize,
) -> Result<SeparationResult> {
    let space = point.space();
    if !space.variant.is_directed() {
        return Err(invalid("parity separation runs on directed spaces"));
    }
    match parity {
        Parity::Odd if !c.all_even() => return Ok(SeparationResult::empty(true)),
        Parity::Even if !(c.all_odd() && c.first() >= 3) => {
            return Ok(SeparationResult::empty(true))
        }
        _ => {}
    }
    let n = space.n;
    let geometry = space.geometry();
    let is_path = space.variant == Variant::Path;

    // Free nodes to assign between S (0) and T (1).
    let free: Vec<usize> = match (is_path, parity) {
        (true, _) => (1..n).collect(),
        (false, Parity::Odd) => (1..n).collect(), // top node stays out
        (false, Parity::Even) => (2..=n).collect(), // node 1 pinned to S
    };
    let node_count = space.node_count();
    let mut side_of = vec![2u8; n + 1];
    match (is_path, parity) {
        (true, Parity::Odd) => {
            side_of[0] = 0;
            side_of[n] = 1;
        }
        (true, Parity::Even) => {
            side_of[0] = 0;
            side_of[n] = 0;
        }
        (false, Parity::Odd) => {}
        (false, Parity::Even) => side_of[1] = 0,
    }

    let rhs = if !is_path && parity == Parity::Odd {
        rat(0)
    } else {
        rat(1)
    };

    let emit = |side_of: &[u8]| -> Result<Option<LinearInequality>> {
        let s: Vec<usize> = (0..=n).filter(|&v| side_of[v] == 0).collect();
        let t: Vec<usize> = (0..=n).filter(|&v| side_of[v] == 1).collect();
        if s.is_empty() || t.is_empty() {
            return Ok(None);
        }
        Ok(Some(generators::parity_exclusion(&geometry, &s, &t, parity, c)?))
    };

    if node_count <= budget_nodes {
        // Exhaustive over all assignments of the free nodes.
        let mut best: Option<(Rational, Vec<u8>)> = None;
        for mask in 0..(1u64 << free.len()) {
            let mut sides = side_of.clone();
            for (bit, &v) in free.iter().enumerate() {
                sides[v] = ((mask >> bit) & 1) as u8;
            }
            let s_count = sides.iter().filter(|&&x| x == 0).count();
            let t_count = sides.iter().filter(|&&x| x == 1).count();
            if s_count == 0 || t_count == 0 {
                continue;
            }
            let lhs = parity_lhs(point, &geometry, &sides, parity);
            if best.as_ref().is_none_or(|(b, _)| lhs < *b) {
                best = Some((lhs, sides));
            }
        }
        let cuts = match best {
            Some((lhs, sides)) if lhs < rhs => emit(&sides)?.into_iter().collect(),
            _ => Vec::new(),
        };
        return SeparationResult::new(point, cuts, true);
    }

    // Local search: alternate assignment start, single-node flips.
    let mut sides = side_of.clone();
    for (i, &v) in free.iter().enumerate() {
        sides[v] = (i % 2) as u8;
    }
    let mut current = parity_lhs(point, &geometry, &sides, parity);
    loop {
        let mut improved = false;
        for &v in &free {
            let old = sides[v];
            sides[v] = 1 - old;
            let s_count = sides.iter().filter(|&&x| x == 0).count();
            let t_count = sides.iter().filter(|&&x| x == 1).count();
            if s_count == 0 || t_count == 0 {
                sides[v] = old;
                continue;
            }
            let candidate = parity_lhs(point, &geometry, &sides, parity);
            if candidate < current {
                current = candidate;
                improved = true;
            } else {
                sides[v] = old;
            }
        }
        if !improved {
            break;
        }
    }
    let cuts = if current < rhs {
        emit(&sides)?.into_iter().collect()
    } else {
        Vec::new()
    };
    SeparationResult::new(point, cuts, false)
}

fn card_subgraph_lhs(
    point: &FractionalPoint,
    geometry: &Geometry,
    in_w: &[bool],
    cross_penalty: &Rational,
) -> Rational {
    let mut acc = Rational::zero();
    for (i, &(u, v)) in geometry.coords().iter().enumerate() {
        if point.entries()[i].is_zero() {
            continue;
        }
        let (a, b) = (in_w[u], in_w[v]);
        if a && b {
            acc += rat(2) * &point.entries()[i];
        } else if a || b {
            acc -= cross_penalty * &point.entries()[i];
        }
    }
    acc
}

/// Separation of the cardinality-subgraph class. Exhaustive over all
/// node sets of each forbidden size up to `budget_nodes`; above it, a
/// greedy swap ascent per size. The most violated set per (bracket,
/// size) is emitted.
pub fn separate_cardinality_subgraph(
    point: &FractionalPoint,
    c: &CardinalitySequence,
    budget_nodes: usize,
) -> Result<SeparationResult> {
    let space = point.space();
    if !space.variant.is_directed() {
        return Err(invalid("cardinality-subgraph separation runs on directed spaces"));
    }
    let n = space.n;
    let geometry = space.geometry();
    let is_path = space.variant == Variant::Path;
    let pool: Vec<usize> = if is_path {
        (1..n).collect()
    } else {
        (1..=n).collect()
    };
    let node_count = space.node_count();
    let exhaustive = node_count <= budget_nodes;

    let mut cuts = Vec::new();
    for p in c.gapped_brackets() {
        for w in (c.at(p) + 1)..c.at(p + 1) {
            let free = if is_path { w - 1 } else { w };
            if free > pool.len() || free == 0 {
                continue;
            }
            let penalty = rat((w - c.at(p) - 1) as i64);
            let rhs = rat(2 * c.at(p) as i64);
            let mut in_w = vec![false; n + 1];
            if is_path {
                in_w[0] = true;
                in_w[n] = true;
            }

            let best_set: Option<Vec<usize>> = if exhaustive {
                let mut best: Option<(Rational, Vec<usize>)> = None;
                let mut choose = |sel: &[usize]| {
                    let mut flags = in_w.clone();
                    for &v in sel {
                        flags[v] = true;
                    }
                    let lhs = card_subgraph_lhs(point, &geometry, &flags, &penalty);
                    if best.as_ref().is_none_or(|(b, _)| lhs > *b) {
                        best = Some((lhs, sel.to_vec()));
                    }
                };
                for sel in combinations_of(&pool, free) {
                    choose(&sel);
                }
                best.filter(|(lhs, _)| *lhs > rhs).map(|(_, sel)| sel)
            } else {
                // Greedy: seed with the largest out-values, then improve by
                // single-node swaps.
                let mut ranked: Vec<usize> = pool.clone();
                ranked.sort_by(|&a, &b| {
                    point
                        .out_value(&geometry, b)
                        .cmp(&point.out_value(&geometry, a))
                        .then(a.cmp(&b))
                });
                let mut sel: Vec<usize> = ranked[..free].to_vec();
                let mut flags = in_w.clone();
                for &v in &sel {
                    flags[v] = true;
                }
                let mut current = card_subgraph_lhs(point, &geometry, &flags, &penalty);
                loop {
                    let mut improved = false;
                    'swap: for i in 0..sel.len() {
                        let candidates: Vec<usize> =
                            pool.iter().copied().filter(|&v| !flags[v]).collect();
                        for candidate in candidates {
                            let out = sel[i];
                            flags[out] = false;
                            flags[candidate] = true;
                            let lhs = card_subgraph_lhs(point, &geometry, &flags, &penalty);
                            if lhs > current {
                                current = lhs;
                                sel[i] = candidate;
                                improved = true;
                                continue 'swap;
                            }
                            flags[out] = true;
                            flags[candidate] = false;
                        }
                    }
                    if !improved {
                        break;
                    }
                }
                if current > rhs {
                    Some(sel)
                } else {
                    None
                }
            };

            if let Some(sel) = best_set {
                let mut wset = sel;
                if is_path {
                    wset.push(0);
                    wset.push(n);
                }
                wset.sort_unstable();
                cuts.push(generators::cardinality_subgraph(&geometry, &wset, c, p)?);
            }
        }
    }
    SeparationResult::new(point, cuts, exhaustive)
}

/// Separation of the multiple cycle exclusion class (complete digraph):
/// for each ordered node pair (v, w), a minimum v-w cut under x* decides
/// exactness of the whole class.
pub fn separate_multi_cycle_exclusion(point: &FractionalPoint) -> Result<SeparationResult> {
    let space = point.space();
    if space.variant != Variant::Cycle {
        return Err(invalid("multiple cycle exclusion separation runs on the complete digraph"));
    }
    let n = space.n;
    let geometry = space.geometry();
    let mut cuts = Vec::new();
    for v in 1..=n {
        for w in 1..=n {
            if v == w {
                continue;
            }
            let mut net = FlowNetwork::new(n + 1);
            for (i, &(a, b)) in geometry.coords().iter().enumerate() {
                net.add_arc(a, b, point.entries()[i].clone());
            }
            let (cut_value, source_side) = net.max_flow(v, w)?;
            let score = point.out_value(&geometry, v) + point.out_value(&geometry, w)
                - cut_value
                - rat(1);
            if score > Rational::zero() {
                let s: Vec<usize> = source_side.into_iter().filter(|&x| x >= 1).collect();
                // The degenerate cuts S = {v} and S = N minus {w} encode
                // constraints already present in the base system.
                if s.len() < 2 || s.len() > n - 2 {
                    continue;
                }
                cuts.push(generators::multiple_cycle_exclusion(&geometry, &s, v, w)?);
            }
        }
    }
    SeparationResult::new(point, cuts, true)
}

fn combinations_of(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..pool.len() {
            current.push(pool[i]);
            rec(pool, k, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, k, 0, &mut Vec::new(), &mut out);
    out
}
