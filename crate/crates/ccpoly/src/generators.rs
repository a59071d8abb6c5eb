//! Generators for every structured inequality class, across the four
//! polytope families.
//!
//! Each generator validates the structural preconditions of its class
//! (set memberships, cardinality brackets, parity) and produces the
//! coefficient row in the frozen coordinate order of the supplied
//! geometry. Generators do not decide facetness; see `facet` for the
//! classification predicates and `verify` for ground truth.

use crate::cardinality::CardinalitySequence;
use crate::error::{invalid, Result};
use crate::graph::{Geometry, Variant};
use crate::inequality::{canonical_set, ClassSpec, LinearInequality, Sense};
use crate::rational::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

fn member(set: &[usize], v: usize) -> bool {
    set.binary_search(&v).is_ok()
}

fn build(
    geometry: &Geometry,
    class: ClassSpec,
    sense: Sense,
    rhs: Rational,
    coeff: impl Fn(usize, usize) -> Rational,
) -> LinearInequality {
    let coeffs = geometry.coords().iter().map(|&(u, v)| coeff(u, v)).collect();
    LinearInequality {
        space: geometry.space,
        coeffs,
        sense,
        rhs,
        class,
    }
}

fn check_nodes_in_range(geometry: &Geometry, nodes: &[usize]) -> Result<()> {
    let valid = geometry.space.nodes();
    for &v in nodes {
        if !valid.contains(&v) {
            return Err(invalid(format!("node {v} not in {}", geometry.space)));
        }
    }
    Ok(())
}

fn check_bracket(c: &CardinalitySequence, bracket: usize, measure: usize) -> Result<()> {
    if bracket < 1 || bracket >= c.len() {
        return Err(invalid(format!("bracket index {bracket} out of range for c={c}")));
    }
    if !(c.at(bracket) < measure && measure < c.at(bracket + 1)) {
        return Err(invalid(format!(
            "cardinality bracket violated: need c_{bracket}={} < {measure} < c_{}={}",
            c.at(bracket),
            bracket + 1,
            c.at(bracket + 1)
        )));
    }
    Ok(())
}

/// Flow conservation at node `i` (directed variants only). Path spaces
/// get right-hand sides 1 / 0 / -1 at source / internal / sink; cycle
/// spaces get 0 everywhere.
pub fn flow_conservation(geometry: &Geometry, i: usize) -> Result<LinearInequality> {
    let space = geometry.space;
    if !space.variant.is_directed() {
        return Err(invalid("flow conservation is a directed-space constraint"));
    }
    check_nodes_in_range(geometry, &[i])?;
    let rhs = match space.variant {
        Variant::Path if i == 0 => rat(1),
        Variant::Path if i == space.n => rat(-1),
        _ => rat(0),
    };
    Ok(build(
        geometry,
        ClassSpec::Flow { node: i },
        Sense::Eq,
        rhs,
        |u, v| {
            if u == i {
                rat(1)
            } else if v == i {
                rat(-1)
            } else {
                rat(0)
            }
        },
    ))
}

/// Out-degree at most one (directed) or degree at most two (undirected).
/// Path variants restrict to internal nodes.
pub fn degree_constraint(geometry: &Geometry, i: usize) -> Result<LinearInequality> {
    let space = geometry.space;
    check_nodes_in_range(geometry, &[i])?;
    if space.variant.is_path() && (i == 0 || i == space.n) {
        return Err(invalid("degree constraint applies to internal nodes only"));
    }
    let class = ClassSpec::Degree { node: i };
    if space.variant.is_directed() {
        Ok(build(geometry, class, Sense::Le, rat(1), |u, _| {
            if u == i {
                rat(1)
            } else {
                rat(0)
            }
        }))
    } else {
        Ok(build(geometry, class, Sense::Le, rat(2), |u, v| {
            if u == i || v == i {
                rat(1)
            } else {
                rat(0)
            }
        }))
    }
}

/// `x_a >= 0` for a single arc or edge.
pub fn nonnegativity(geometry: &Geometry, u: usize, v: usize) -> Result<LinearInequality> {
    let Some(idx) = geometry.index_of(u, v) else {
        return Err(invalid(format!("({u},{v}) is not a coordinate of {}", geometry.space)));
    };
    let coord = geometry.coords()[idx];
    Ok(build(
        geometry,
        ClassSpec::Nonneg { coord },
        Sense::Ge,
        rat(0),
        move |a, b| if (a, b) == coord { rat(1) } else { rat(0) },
    ))
}

/// The pair `x(A) >= c_1` and `x(A) <= c_m`.
pub fn cardinality_bounds(
    geometry: &Geometry,
    c: &CardinalitySequence,
) -> (LinearInequality, LinearInequality) {
    let lo = build(
        geometry,
        ClassSpec::CardinalityBoundLo,
        Sense::Ge,
        rat(c.first() as i64),
        |_, _| rat(1),
    );
    let hi = build(
        geometry,
        ClassSpec::CardinalityBoundHi,
        Sense::Le,
        rat(c.last() as i64),
        |_, _| rat(1),
    );
    (lo, hi)
}

/// Node-counting cardinality forcing inequality for node set `W` and
/// bracket `p` (1-based): cuts off solutions visiting a forbidden number
/// of nodes strictly between `c_p` and `c_{p+1}`.
///
/// Path spaces require `0, n` in `W` and bracket the node measure
/// `|W| - 1`; cycle spaces bracket `|W|` itself.
pub fn cf_node(
    geometry: &Geometry,
    w: &[usize],
    c: &CardinalitySequence,
    bracket: usize,
) -> Result<LinearInequality> {
    let space = geometry.space;
    let w = canonical_set(w);
    check_nodes_in_range(geometry, &w)?;
    let measure = if space.variant.is_path() {
        if !member(&w, 0) || !member(&w, space.n) {
            return Err(invalid("path cardinality forcing requires 0 and n in W"));
        }
        w.len() - 1
    } else {
        w.len()
    };
    check_bracket(c, bracket, measure)?;
    let a = rat((c.at(bracket + 1) - measure) as i64);
    let b = rat((measure - c.at(bracket)) as i64);
    let base_rhs = rat(c.at(bracket) as i64) * &a;
    let class = ClassSpec::CfNode { w: w.clone(), bracket };
    if space.variant.is_directed() {
        Ok(build(geometry, class, Sense::Le, base_rhs, |u, _| {
            if member(&w, u) {
                a.clone()
            } else {
                -b.clone()
            }
        }))
    } else {
        // Undirected counterpart: per-node degree sums give each edge the
        // sum of its endpoint weights, and the right-hand side doubles.
        let rhs = rat(2) * base_rhs;
        let f = |z: usize| if member(&w, z) { a.clone() } else { -b.clone() };
        Ok(build(geometry, class, Sense::Le, rhs, |u, v| f(u) + f(v)))
    }
}

/// Arc-counting cardinality forcing inequality for arc set `F`; the weak
/// form inherited from the cardinality-homogeneous set system.
pub fn cf_arc(
    geometry: &Geometry,
    arcs: &[(usize, usize)],
    c: &CardinalitySequence,
    bracket: usize,
) -> Result<LinearInequality> {
    let mut f: Vec<usize> = Vec::with_capacity(arcs.len());
    for &(u, v) in arcs {
        let Some(idx) = geometry.index_of(u, v) else {
            return Err(invalid(format!("({u},{v}) is not a coordinate of {}", geometry.space)));
        };
        f.push(idx);
    }
    f.sort_unstable();
    f.dedup();
    check_bracket(c, bracket, f.len())?;
    let a = rat((c.at(bracket + 1) - f.len()) as i64);
    let b = rat((f.len() - c.at(bracket)) as i64);
    let rhs = rat(c.at(bracket) as i64) * &a;
    let coords: Vec<(usize, usize)> = f.iter().map(|&i| geometry.coords()[i]).collect();
    let class = ClassSpec::CfArc { arcs: coords, bracket };
    let mut coeffs = vec![-b; geometry.len()];
    for &i in &f {
        coeffs[i] = a.clone();
    }
    Ok(LinearInequality {
        space: geometry.space,
        coeffs,
        sense: Sense::Le,
        rhs,
        class,
    })
}

/// Cardinality-subgraph inequality for node set `W` and bracket `p`:
/// bounds the number of arcs/edges inside `W`, discounted by crossings.
pub fn cardinality_subgraph(
    geometry: &Geometry,
    w: &[usize],
    c: &CardinalitySequence,
    bracket: usize,
) -> Result<LinearInequality> {
    let space = geometry.space;
    let w = canonical_set(w);
    check_nodes_in_range(geometry, &w)?;
    let measure = if space.variant.is_path() {
        if !member(&w, 0) || !member(&w, space.n) {
            return Err(invalid("path cardinality-subgraph requires 0 and n in W"));
        }
        w.len() - 1
    } else {
        w.len()
    };
    check_bracket(c, bracket, measure)?;
    let cross = rat((measure - c.at(bracket) - 1) as i64);
    let rhs = rat(2 * c.at(bracket) as i64);
    let class = ClassSpec::CardSubgraph { w: w.clone(), bracket };
    Ok(build(geometry, class, Sense::Le, rhs, |u, v| {
        let iu = member(&w, u);
        let iv = member(&w, v);
        if iu && iv {
            rat(2)
        } else if iu || iv {
            -cross.clone()
        } else {
            rat(0)
        }
    }))
}

/// One-sided min-cut inequality: cut crossings out of `S` dominate the
/// flow into a distinguished node `v` outside `S` (directed path spaces
/// count arcs into `v`; cycle spaces count arcs out of `v`; undirected
/// spaces count the full degree).
pub fn one_sided_min_cut(geometry: &Geometry, s: &[usize], v: usize) -> Result<LinearInequality> {
    let space = geometry.space;
    let s = canonical_set(s);
    check_nodes_in_range(geometry, &s)?;
    check_nodes_in_range(geometry, &[v])?;
    if member(&s, v) {
        return Err(invalid("distinguished node must lie outside S"));
    }
    if space.variant.is_path() && (!member(&s, 0) || !member(&s, space.n)) {
        return Err(invalid("path one-sided min-cut requires 0 and n in S"));
    }
    let class = ClassSpec::OneSidedMinCut { s: s.clone(), v };
    let cut = |u: usize, z: usize| member(&s, u) && !member(&s, z);
    match space.variant {
        Variant::Path => Ok(build(geometry, class, Sense::Ge, rat(0), |u, z| {
            rat(cut(u, z) as i64 - (z == v) as i64)
        })),
        Variant::Cycle => Ok(build(geometry, class, Sense::Ge, rat(0), |u, z| {
            rat(cut(u, z) as i64 - (u == v) as i64)
        })),
        Variant::UndirectedPath | Variant::UndirectedCycle => {
            Ok(build(geometry, class, Sense::Ge, rat(0), |u, z| {
                let crossing = member(&s, u) != member(&s, z);
                rat(crossing as i64 - (u == v || z == v) as i64)
            }))
        }
    }
}

/// Min-cut inequality: at least one crossing (directed) or two crossings
/// (undirected) out of `S`.
pub fn min_cut(geometry: &Geometry, s: &[usize]) -> Result<LinearInequality> {
    let space = geometry.space;
    let s = canonical_set(s);
    check_nodes_in_range(geometry, &s)?;
    if s.is_empty() || s.len() == space.node_count() {
        return Err(invalid("S must be a proper nonempty node subset"));
    }
    if space.variant.is_path() && (!member(&s, 0) || !member(&s, space.n)) {
        return Err(invalid("path min-cut requires 0 and n in S"));
    }
    let class = ClassSpec::MinCut { s: s.clone() };
    if space.variant.is_directed() {
        Ok(build(geometry, class, Sense::Ge, rat(1), |u, z| {
            rat((member(&s, u) && !member(&s, z)) as i64)
        }))
    } else {
        Ok(build(geometry, class, Sense::Ge, rat(2), |u, z| {
            rat((member(&s, u) != member(&s, z)) as i64)
        }))
    }
}

/// Multiple cycle exclusion (directed cycles) / two-sided min-cut
/// (undirected cycles): two designated nodes on opposite sides of a cut
/// cannot both be visited without crossing it.
pub fn multiple_cycle_exclusion(
    geometry: &Geometry,
    s: &[usize],
    v: usize,
    w: usize,
) -> Result<LinearInequality> {
    let space = geometry.space;
    if space.variant.is_path() {
        return Err(invalid("multiple cycle exclusion is a cycle-space class"));
    }
    let s = canonical_set(s);
    check_nodes_in_range(geometry, &s)?;
    check_nodes_in_range(geometry, &[v, w])?;
    if !member(&s, v) || member(&s, w) {
        return Err(invalid("need v in S and w outside S"));
    }
    let n = space.node_count();
    if s.len() < 2 || s.len() > n - 2 {
        return Err(invalid("need 2 <= |S| <= n-2"));
    }
    let class = ClassSpec::MultiCycleExcl { s: s.clone(), v, w };
    if space.variant.is_directed() {
        Ok(build(geometry, class, Sense::Le, rat(1), |u, z| {
            rat((u == v) as i64 + (u == w) as i64 - (member(&s, u) && !member(&s, z)) as i64)
        }))
    } else {
        Ok(build(geometry, class, Sense::Le, rat(2), |u, z| {
            let deg = (u == v || z == v) as i64 + (u == w || z == w) as i64;
            rat(deg - (member(&s, u) != member(&s, z)) as i64)
        }))
    }
}

/// Odd/even exclusion constraints for a partition of the node set.
///
/// Odd variants require every allowed cardinality even, even variants
/// require every allowed cardinality odd (with first value at least 3).
/// Directed cycles with odd parity use the asymmetric form with the
/// distinguished top node outside both parts.
pub fn parity_exclusion(
    geometry: &Geometry,
    s: &[usize],
    t: &[usize],
    parity: Parity,
    c: &CardinalitySequence,
) -> Result<LinearInequality> {
    let space = geometry.space;
    let s = canonical_set(s);
    let t = canonical_set(t);
    check_nodes_in_range(geometry, &s)?;
    check_nodes_in_range(geometry, &t)?;
    if s.iter().any(|v| member(&t, *v)) {
        return Err(invalid("S and T must be disjoint"));
    }
    if s.is_empty() || t.is_empty() {
        return Err(invalid("S and T must be nonempty"));
    }
    match parity {
        Parity::Odd => {
            if !c.all_even() {
                return Err(invalid("odd exclusion requires all allowed cardinalities even"));
            }
        }
        Parity::Even => {
            if !c.all_odd() || c.first() < 3 {
                return Err(invalid(
                    "even exclusion requires all allowed cardinalities odd, starting at 3 or more",
                ));
            }
        }
    }
    let covered = s.len() + t.len();
    let node_count = space.node_count();
    let class = match parity {
        Parity::Odd => ClassSpec::OddExcl { s: s.clone(), t: t.clone() },
        Parity::Even => ClassSpec::EvenExcl { s: s.clone(), t: t.clone() },
    };
    let in_s = |z: usize| member(&s, z);
    let in_t = |z: usize| member(&t, z);
    let same_side = |u: usize, z: usize| (in_s(u) && in_s(z)) || (in_t(u) && in_t(z));
    match (space.variant, parity) {
        (Variant::Path, Parity::Odd) | (Variant::UndirectedPath, Parity::Odd) => {
            if !in_s(0) || !in_t(space.n) {
                return Err(invalid("odd path exclusion requires 0 in S and n in T"));
            }
            if covered != node_count {
                return Err(invalid("S and T must partition the node set"));
            }
            Ok(build(geometry, class, Sense::Ge, rat(1), |u, z| {
                rat(same_side(u, z) as i64)
            }))
        }
        (Variant::Path, Parity::Even) | (Variant::UndirectedPath, Parity::Even) => {
            if !in_s(0) || !in_s(space.n) {
                return Err(invalid("even path exclusion requires 0 and n in S"));
            }
            if covered != node_count {
                return Err(invalid("S and T must partition the node set"));
            }
            Ok(build(geometry, class, Sense::Ge, rat(1), |u, z| {
                rat(same_side(u, z) as i64)
            }))
        }
        (Variant::Cycle, Parity::Odd) => {
            let top = space.n;
            if in_s(top) || in_t(top) {
                return Err(invalid("odd cycle exclusion keeps the top node outside S and T"));
            }
            if covered != node_count - 1 {
                return Err(invalid("S and T must partition the node set minus the top node"));
            }
            Ok(build(geometry, class, Sense::Ge, rat(0), |u, z| {
                let mut coeff = same_side(u, z) as i64;
                if in_t(u) && z == top {
                    coeff += 1;
                }
                if u == top && in_t(z) {
                    coeff -= 1;
                }
                rat(coeff)
            }))
        }
        (Variant::Cycle, Parity::Even) | (Variant::UndirectedCycle, Parity::Even) => {
            if covered != node_count {
                return Err(invalid("S and T must partition the node set"));
            }
            Ok(build(geometry, class, Sense::Ge, rat(1), |u, z| {
                rat(same_side(u, z) as i64)
            }))
        }
        (Variant::UndirectedCycle, Parity::Odd) => Err(invalid(
            "odd cycle exclusion has no undirected counterpart",
        )),
    }
}

/// Modified cardinality forcing inequality for a partition P, Q, {r} with
/// a cardinality ladder `c_{p+2} = c_{p+1} + 2 = c_p + 4`. Arcs incident
/// with `r` carry coefficient zero.
pub fn modified_cf(
    geometry: &Geometry,
    p_set: &[usize],
    q_set: &[usize],
    r: usize,
    c: &CardinalitySequence,
    bracket: usize,
) -> Result<LinearInequality> {
    let space = geometry.space;
    if !space.variant.is_directed() {
        return Err(invalid("modified cardinality forcing has no undirected counterpart"));
    }
    let p_set = canonical_set(p_set);
    let q_set = canonical_set(q_set);
    check_nodes_in_range(geometry, &p_set)?;
    check_nodes_in_range(geometry, &q_set)?;
    check_nodes_in_range(geometry, &[r])?;
    if p_set.iter().any(|v| member(&q_set, *v)) || member(&p_set, r) || member(&q_set, r) {
        return Err(invalid("P, Q and {r} must be pairwise disjoint"));
    }
    if p_set.len() + q_set.len() + 1 != space.node_count() {
        return Err(invalid("P, Q and {r} must partition the node set"));
    }
    if space.n < 6 {
        return Err(invalid("modified cardinality forcing requires n >= 6"));
    }
    if bracket < 2 || bracket + 2 > c.len() {
        return Err(invalid("bracket must satisfy 2 <= p <= m-2"));
    }
    let (cp, cp1, cp2) = (c.at(bracket), c.at(bracket + 1), c.at(bracket + 2));
    if cp1 != cp + 2 || cp2 != cp + 4 {
        return Err(invalid("need the cardinality ladder c_{p+2} = c_{p+1}+2 = c_p+4"));
    }
    if c.last() > space.n {
        return Err(invalid("largest cardinality exceeds the node count"));
    }
    let node_measure = if space.variant == Variant::Path {
        if !member(&p_set, 0) || !member(&p_set, space.n) {
            return Err(invalid("path modified cardinality forcing requires 0 and n in P"));
        }
        p_set.len() - 1
    } else {
        p_set.len()
    };
    if node_measure != cp + 1 {
        return Err(invalid(format!(
            "P must cover exactly c_p + 1 = {} visited nodes, got {node_measure}",
            cp + 1
        )));
    }
    let class = ClassSpec::ModifiedCf {
        p: p_set.clone(),
        q: q_set.clone(),
        r,
        bracket,
    };
    Ok(build(geometry, class, Sense::Le, rat(cp as i64), |u, z| {
        if z == r || u == r {
            rat(0)
        } else if member(&p_set, u) {
            rat(1)
        } else if member(&q_set, u) {
            rat(-1)
        } else {
            rat(0)
        }
    }))
}

/// Rebuilds a structured inequality from its class spec; the bit-exact
/// inverse of reading `LinearInequality::class`.
pub fn regenerate(
    geometry: &Geometry,
    class: &ClassSpec,
    c: &CardinalitySequence,
) -> Result<LinearInequality> {
    match class {
        ClassSpec::Flow { node } => flow_conservation(geometry, *node),
        ClassSpec::Degree { node } => degree_constraint(geometry, *node),
        ClassSpec::Nonneg { coord } => nonnegativity(geometry, coord.0, coord.1),
        ClassSpec::CardinalityBoundLo => Ok(cardinality_bounds(geometry, c).0),
        ClassSpec::CardinalityBoundHi => Ok(cardinality_bounds(geometry, c).1),
        ClassSpec::CfNode { w, bracket } => cf_node(geometry, w, c, *bracket),
        ClassSpec::CfArc { arcs, bracket } => cf_arc(geometry, arcs, c, *bracket),
        ClassSpec::CardSubgraph { w, bracket } => cardinality_subgraph(geometry, w, c, *bracket),
        ClassSpec::OneSidedMinCut { s, v } => one_sided_min_cut(geometry, s, *v),
        ClassSpec::MinCut { s } => min_cut(geometry, s),
        ClassSpec::MultiCycleExcl { s, v, w } => multiple_cycle_exclusion(geometry, s, *v, *w),
        ClassSpec::OddExcl { s, t } => parity_exclusion(geometry, s, t, Parity::Odd, c),
        ClassSpec::EvenExcl { s, t } => parity_exclusion(geometry, s, t, Parity::Even, c),
        ClassSpec::ModifiedCf { p, q, r, bracket } => {
            modified_cf(geometry, p, q, *r, c, *bracket)
        }
        ClassSpec::Custom => Err(invalid("custom inequalities cannot be regenerated")),
    }
}
