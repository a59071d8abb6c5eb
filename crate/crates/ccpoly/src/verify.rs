//! Brute-force ground truth: polytope dimension, inequality validity,
//! facet certification, and sweeps that compare the encoded facet
//! classification against reality on every parameter instantiation.
//!
//! Facet certification follows the affine-rank technique: an inequality
//! valid for a polytope of dimension d defines a facet exactly when its
//! tight vertices have affine rank d - 1. All ranks are exact.

use crate::cardinality::CardinalitySequence;
use crate::enumerate::{self, IncidenceVector};
use crate::error::{invalid, Result};
use crate::facet::{facet_predicate, FacetStatus};
use crate::generators::{self, Parity};
use crate::graph::{CompleteDigraph, Space, Variant};
use crate::inequality::LinearInequality;
use crate::linalg::RankAccumulator;
use num_bigint::BigInt;
use serde::Serialize;

/// Enumeration budget for exhaustive operations; override with the
/// `CCPOLY_ENUM_BUDGET` environment variable.
pub fn enum_budget() -> usize {
    std::env::var("CCPOLY_ENUM_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(8)
}

pub fn check_budget(n: usize) -> Result<()> {
    let budget = enum_budget();
    if n > budget {
        return Err(invalid(format!(
            "n = {n} exceeds the enumeration budget {budget} (set CCPOLY_ENUM_BUDGET to raise it)"
        )));
    }
    Ok(())
}

/// Affine rank of a family of 0/1 incidence vectors, with early exit once
/// the rank reaches `cap` (pass the ambient coordinate count when no
/// better bound is known).
pub fn affine_rank_of(vertices: &[&IncidenceVector], cap: usize) -> usize {
    let Some(first) = vertices.first() else {
        return 0;
    };
    let base = first.entries();
    let mut acc = RankAccumulator::new();
    for v in &vertices[1..] {
        let row: Vec<BigInt> = v
            .entries()
            .iter()
            .zip(base)
            .map(|(&b, &a)| BigInt::from(b as i64 - a as i64))
            .collect();
        acc.add_row(row);
        if acc.rank() >= cap {
            break;
        }
    }
    acc.rank()
}

/// Dimension of the polytope spanned by the feasible incidence vectors of
/// `(space, c)`; -1 when the polytope is empty.
pub fn polytope_dimension(space: Space, c: &CardinalitySequence) -> Result<isize> {
    check_budget(space.n)?;
    let vertices = enumerate::enumerate_vertices(space, c)?;
    Ok(dimension_of(&vertices))
}

/// Dimension of the convex hull of an explicit vertex list; -1 if empty.
pub fn dimension_of(vertices: &[IncidenceVector]) -> isize {
    if vertices.is_empty() {
        return -1;
    }
    let refs: Vec<&IncidenceVector> = vertices.iter().collect();
    let cap = vertices[0].entries().len();
    affine_rank_of(&refs, cap) as isize
}

/// Result of a validity check: either every vertex satisfies the
/// inequality or the index of the first violating vertex is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityCheck {
    pub valid: bool,
    pub counterexample: Option<usize>,
}

/// Checks an inequality against every vertex; returns the first
/// counterexample on failure.
pub fn is_valid(ineq: &LinearInequality, vertices: &[IncidenceVector]) -> Result<ValidityCheck> {
    for (i, v) in vertices.iter().enumerate() {
        if !ineq.satisfied_by(v)? {
            return Ok(ValidityCheck {
                valid: false,
                counterexample: Some(i),
            });
        }
    }
    Ok(ValidityCheck {
        valid: true,
        counterexample: None,
    })
}

/// Facet certification by tight-vertex affine rank. The inequality must
/// be valid on `vertices` (error otherwise) and `dim` must be the
/// dimension of their hull.
pub fn is_facet(
    ineq: &LinearInequality,
    vertices: &[IncidenceVector],
    dim: isize,
) -> Result<bool> {
    let check = is_valid(ineq, vertices)?;
    if !check.valid {
        return Err(invalid("inequality is not valid on the vertex set"));
    }
    if dim <= 0 {
        return Ok(false);
    }
    let mut tight: Vec<&IncidenceVector> = Vec::new();
    for v in vertices {
        if ineq.tight_at(v)? {
            tight.push(v);
        }
    }
    if tight.is_empty() {
        return Ok(false);
    }
    // Rank can reach dim only for an implicit equation, which is not a
    // facet; cap the accumulation there.
    let rank = affine_rank_of(&tight, dim as usize);
    Ok(rank == dim as usize - 1)
}

/// Identifier of a sweepable facet-classification claim: one inequality
/// class over one polytope family. The anchored variant pins the vertex
/// set to cycles through node 1 (the cycle-space picture of the path
/// polytope).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepClass {
    pub kind: SweepKind,
    pub variant: Variant,
    pub anchored: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    Nonneg,
    Degree,
    CardBounds,
    CfNode,
    CardSubgraph,
    Osmc,
    MinCut,
    MultiCycleExcl,
    OddExcl,
    EvenExcl,
    ModifiedCf,
}

impl SweepKind {
    fn name(self) -> &'static str {
        match self {
            SweepKind::Nonneg => "nonneg",
            SweepKind::Degree => "degree",
            SweepKind::CardBounds => "card-bounds",
            SweepKind::CfNode => "cf-node",
            SweepKind::CardSubgraph => "card-subgraph",
            SweepKind::Osmc => "osmc",
            SweepKind::MinCut => "min-cut",
            SweepKind::MultiCycleExcl => "multi-cycle-excl",
            SweepKind::OddExcl => "odd-excl",
            SweepKind::EvenExcl => "even-excl",
            SweepKind::ModifiedCf => "modified-cf",
        }
    }
}

fn variant_suffix(variant: Variant) -> &'static str {
    match variant {
        Variant::Path => "path",
        Variant::Cycle => "cycle",
        Variant::UndirectedPath => "upath",
        Variant::UndirectedCycle => "ucycle",
    }
}

impl SweepClass {
    pub fn new(kind: SweepKind, variant: Variant) -> Self {
        SweepClass {
            kind,
            variant,
            anchored: false,
        }
    }

    pub fn id(&self) -> String {
        if self.anchored {
            format!("{}-anchored", self.kind.name())
        } else {
            format!("{}-{}", self.kind.name(), variant_suffix(self.variant))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        catalog()
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| invalid(format!("unknown sweep id '{s}'; see `sweep --list`")))
    }
}

impl std::fmt::Display for SweepClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// Every sweepable claim, in report order.
pub fn catalog() -> Vec<SweepClass> {
    use SweepKind::*;
    use Variant::*;
    let mut out = Vec::new();
    for kind in [
        CfNode,
        CardSubgraph,
        Nonneg,
        Degree,
        Osmc,
        MinCut,
        OddExcl,
        EvenExcl,
        CardBounds,
    ] {
        out.push(SweepClass::new(kind, Path));
    }
    out.push(SweepClass {
        kind: ModifiedCf,
        variant: Cycle,
        anchored: true,
    });
    for kind in [
        Nonneg,
        Degree,
        MultiCycleExcl,
        MinCut,
        Osmc,
        CardBounds,
        CfNode,
        CardSubgraph,
        OddExcl,
        EvenExcl,
        ModifiedCf,
    ] {
        out.push(SweepClass::new(kind, Cycle));
    }
    for kind in [
        Nonneg,
        Degree,
        MultiCycleExcl,
        MinCut,
        Osmc,
        CardBounds,
        CfNode,
        CardSubgraph,
        EvenExcl,
    ] {
        out.push(SweepClass::new(kind, UndirectedCycle));
    }
    for kind in [
        Nonneg,
        Degree,
        MinCut,
        Osmc,
        CardBounds,
        CfNode,
        CardSubgraph,
        OddExcl,
        EvenExcl,
    ] {
        out.push(SweepClass::new(kind, UndirectedPath));
    }
    out
}

/// One parameter instantiation inside a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepOutcome {
    pub params: String,
    pub predicted: String,
    pub valid: bool,
    pub facet: bool,
    /// Some(false) marks a disagreement; None marks an unknown regime that
    /// was resolved empirically.
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub sweep: String,
    pub n: usize,
    pub c: CardinalitySequence,
    pub dimension: isize,
    pub vertex_count: usize,
    pub instances: usize,
    pub disagreements: usize,
    pub unknown_resolved: usize,
    pub outcomes: Vec<SweepOutcome>,
}

impl SweepReport {
    pub fn render(&self) -> String {
        let mut s = format!(
            "sweep {} n={} c={} dim={} vertices={} instances={} disagreements={} unknown-resolved={}\n",
            self.sweep,
            self.n,
            self.c,
            self.dimension,
            self.vertex_count,
            self.instances,
            self.disagreements,
            self.unknown_resolved,
        );
        for o in &self.outcomes {
            let verdict = match o.agrees {
                Some(true) => "ok",
                Some(false) => "MISMATCH",
                None => "resolved",
            };
            s.push_str(&format!(
                "  [{verdict}] {} predicted={} valid={} facet={}\n",
                o.params, o.predicted, o.valid, o.facet
            ));
        }
        s
    }
}

/// All k-subsets of `pool`, lexicographic.
fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > pool.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + pool.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All subsets of `pool` (including empty and full), by size then
/// lexicographic.
fn all_subsets(pool: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=pool.len() {
        out.extend(combinations(pool, k));
    }
    out
}

/// Builds every parameter instantiation of a sweep class on (n, c).
fn instances(class: &SweepClass, space: Space, c: &CardinalitySequence) -> Result<Vec<LinearInequality>> {
    let g = space.geometry();
    let n = space.n;
    let nodes = space.nodes();
    let internal = space.internal_nodes();
    let is_path = space.variant.is_path();
    let mut out = Vec::new();

    // For path spaces, node sets of the classes below always contain the
    // endpoints; the "free" part ranges over internal nodes.
    let with_endpoints = |set: &[usize]| -> Vec<usize> {
        let mut v = set.to_vec();
        v.push(0);
        v.push(n);
        v.sort_unstable();
        v
    };

    match class.kind {
        SweepKind::Nonneg => {
            for &(u, v) in g.coords() {
                out.push(generators::nonnegativity(&g, u, v)?);
            }
        }
        SweepKind::Degree => {
            for &i in &internal {
                out.push(generators::degree_constraint(&g, i)?);
            }
        }
        SweepKind::CardBounds => {
            let (lo, hi) = generators::cardinality_bounds(&g, c);
            out.push(lo);
            out.push(hi);
        }
        SweepKind::CfNode | SweepKind::CardSubgraph => {
            for p in c.gapped_brackets() {
                for w in (c.at(p) + 1)..c.at(p + 1) {
                    let free = if is_path { w.saturating_sub(1) } else { w };
                    let pool: Vec<usize> = if is_path {
                        internal.clone()
                    } else {
                        // Cycle spaces are node-symmetric; canonicalize to
                        // sets containing node 1.
                        nodes.iter().copied().filter(|&v| v != 1).collect()
                    };
                    let take = if is_path { free } else { free - 1 };
                    for sel in combinations(&pool, take) {
                        let wset = if is_path {
                            with_endpoints(&sel)
                        } else {
                            let mut v = sel.clone();
                            v.push(1);
                            v.sort_unstable();
                            v
                        };
                        let ineq = match class.kind {
                            SweepKind::CfNode => generators::cf_node(&g, &wset, c, p)?,
                            _ => generators::cardinality_subgraph(&g, &wset, c, p)?,
                        };
                        out.push(ineq);
                    }
                }
            }
        }
        SweepKind::Osmc => {
            if is_path {
                for sel in all_subsets(&internal) {
                    let s = with_endpoints(&sel);
                    for &v in internal.iter().filter(|v| !sel.contains(v)) {
                        out.push(generators::one_sided_min_cut(&g, &s, v)?);
                    }
                }
            } else {
                for s in all_subsets(&nodes) {
                    if s.is_empty() || s.len() == nodes.len() {
                        continue;
                    }
                    for &v in nodes.iter().filter(|v| !s.contains(v)) {
                        out.push(generators::one_sided_min_cut(&g, &s, v)?);
                    }
                }
            }
        }
        SweepKind::MinCut => {
            if is_path {
                for sel in all_subsets(&internal) {
                    if sel.len() == internal.len() {
                        continue; // S must be a proper subset
                    }
                    out.push(generators::min_cut(&g, &with_endpoints(&sel))?);
                }
            } else if space.variant == Variant::Cycle {
                for s in all_subsets(&nodes) {
                    if s.is_empty() || s.len() == nodes.len() {
                        continue;
                    }
                    out.push(generators::min_cut(&g, &s)?);
                }
            } else {
                // Undirected cuts are symmetric in S and its complement;
                // canonicalize to sets containing node 1.
                for sel in all_subsets(&nodes[1..]) {
                    if sel.len() == nodes.len() - 1 {
                        continue;
                    }
                    let mut s = sel.clone();
                    s.insert(0, 1);
                    out.push(generators::min_cut(&g, &s)?);
                }
            }
        }
        SweepKind::MultiCycleExcl => {
            for s in all_subsets(&nodes) {
                if s.len() < 2 || s.len() > nodes.len() - 2 {
                    continue;
                }
                for &v in &s {
                    for &w in nodes.iter().filter(|w| !s.contains(w)) {
                        out.push(generators::multiple_cycle_exclusion(&g, &s, v, w)?);
                    }
                }
            }
        }
        SweepKind::OddExcl => {
            if is_path {
                // 0 in S, n in T; internal nodes split freely.
                for sel in all_subsets(&internal) {
                    let mut s = sel.clone();
                    s.insert(0, 0);
                    let mut t: Vec<usize> =
                        internal.iter().copied().filter(|v| !sel.contains(v)).collect();
                    t.push(n);
                    out.push(generators::parity_exclusion(&g, &s, &t, Parity::Odd, c)?);
                }
            } else {
                // Partition of the nodes below the top one, both parts
                // nonempty; the two parts play different roles.
                let pool: Vec<usize> = nodes.iter().copied().filter(|&v| v != n).collect();
                for s in all_subsets(&pool) {
                    if s.is_empty() || s.len() == pool.len() {
                        continue;
                    }
                    let t: Vec<usize> = pool.iter().copied().filter(|v| !s.contains(v)).collect();
                    out.push(generators::parity_exclusion(&g, &s, &t, Parity::Odd, c)?);
                }
            }
        }
        SweepKind::EvenExcl => {
            if is_path {
                for sel in all_subsets(&internal) {
                    if sel.len() == internal.len() {
                        continue; // T must be nonempty
                    }
                    let s = with_endpoints(&sel);
                    let t: Vec<usize> =
                        internal.iter().copied().filter(|v| !sel.contains(v)).collect();
                    out.push(generators::parity_exclusion(&g, &s, &t, Parity::Even, c)?);
                }
            } else {
                // Symmetric in S and T; canonicalize node 1 into S.
                for sel in all_subsets(&nodes[1..]) {
                    if sel.len() == nodes.len() - 1 {
                        continue;
                    }
                    let mut s = sel.clone();
                    s.insert(0, 1);
                    let t: Vec<usize> = nodes[1..]
                        .iter()
                        .copied()
                        .filter(|v| !sel.contains(v))
                        .collect();
                    out.push(generators::parity_exclusion(&g, &s, &t, Parity::Even, c)?);
                }
            }
        }
        SweepKind::ModifiedCf => {
            for p in 2..c.len().saturating_sub(1) {
                if c.at(p + 1) != c.at(p) + 2 || c.at(p + 2) != c.at(p) + 4 {
                    continue;
                }
                let size = c.at(p) + 1;
                let pools: Vec<Vec<usize>> = if class.anchored {
                    // The anchored picture fixes node 1 inside P.
                    combinations(&nodes[1..], size - 1)
                        .into_iter()
                        .map(|mut sel| {
                            sel.insert(0, 1);
                            sel
                        })
                        .collect()
                } else {
                    combinations(&nodes, size)
                };
                for pset in pools {
                    for &r in nodes.iter().filter(|v| !pset.contains(v)) {
                        let q: Vec<usize> = nodes
                            .iter()
                            .copied()
                            .filter(|v| !pset.contains(v) && *v != r)
                            .collect();
                        out.push(generators::modified_cf(&g, &pset, &q, r, c, p)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every parameter instantiation a sweep of `class` would test on (n, c),
/// as generated inequalities.
pub fn sweep_instances(
    class: &SweepClass,
    n: usize,
    c: &CardinalitySequence,
) -> Result<Vec<LinearInequality>> {
    let space = Space::new(class.variant, n)?;
    check_compatible(class, space, c)?;
    instances(class, space, c)
}

/// Checks whether (n, c) is compatible with the sweep class (parity
/// requirements, family minimums).
fn check_compatible(class: &SweepClass, space: Space, c: &CardinalitySequence) -> Result<()> {
    if c.first() < space.variant.min_cardinality() {
        return Err(invalid(format!(
            "c={c} starts below the minimum cardinality for {}",
            space.variant
        )));
    }
    if c.last() > space.node_count() - if space.variant.is_path() { 1 } else { 0 } {
        return Err(invalid(format!("c={c} exceeds the node capacity of {space}")));
    }
    match class.kind {
        SweepKind::OddExcl if !c.all_even() => {
            Err(invalid("odd exclusion sweeps need all cardinalities even"))
        }
        SweepKind::EvenExcl if !c.all_odd() => {
            Err(invalid("even exclusion sweeps need all cardinalities odd"))
        }
        _ => Ok(()),
    }
}

/// Runs one sweep: enumerates every parameter instantiation of the class
/// on (n, c), certifies each against the vertex set, and compares with
/// the encoded classification. `limit` stride-samples the instantiation
/// list for spot checks.
pub fn sweep(
    class: &SweepClass,
    n: usize,
    c: &CardinalitySequence,
    limit: Option<usize>,
) -> Result<SweepReport> {
    check_budget(n)?;
    let space = Space::new(class.variant, n)?;
    check_compatible(class, space, c)?;

    let vertices = if class.anchored {
        let d = CompleteDigraph::new(n)?;
        enumerate::enumerate_cycles_through(&d, c, 1)?
    } else {
        enumerate::enumerate_vertices(space, c)?
    };
    let dim = dimension_of(&vertices);

    let mut all = instances(class, space, c)?;
    if let Some(cap) = limit {
        if cap > 0 && all.len() > cap {
            let stride = all.len().div_ceil(cap);
            all = all.into_iter().step_by(stride).collect();
        }
    }

    let mut outcomes = Vec::new();
    let mut disagreements = 0;
    let mut unknown_resolved = 0;
    for ineq in &all {
        let predicted = facet_predicate(ineq, c)?;
        let check = is_valid(ineq, &vertices)?;
        let facet = if check.valid {
            is_facet(ineq, &vertices, dim)?
        } else {
            false
        };
        let empirical = check.valid && facet;
        let agrees = match predicted {
            FacetStatus::Facet => Some(empirical),
            FacetStatus::NotFacet => Some(!empirical),
            FacetStatus::Unknown => None,
        };
        match agrees {
            Some(false) => disagreements += 1,
            None => unknown_resolved += 1,
            _ => {}
        }
        outcomes.push(SweepOutcome {
            params: ineq.class.describe(),
            predicted: predicted.to_string(),
            valid: check.valid,
            facet: empirical,
            agrees,
        });
    }

    Ok(SweepReport {
        sweep: class.id(),
        n,
        c: c.clone(),
        dimension: dim,
        vertex_count: vertices.len(),
        instances: outcomes.len(),
        disagreements,
        unknown_resolved,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinality::cseq;
    use crate::generators;
    use crate::graph::PathDigraph;

    #[test]
    fn dimension_examples() {
        // Small cycle polytopes with published dimensions.
        let d3 = Space::new(Variant::Cycle, 3).unwrap();
        assert_eq!(polytope_dimension(d3, &cseq(&[2, 3])).unwrap(), 4);
        let d4 = Space::new(Variant::Cycle, 4).unwrap();
        assert_eq!(polytope_dimension(d4, &cseq(&[3])).unwrap(), 6);
        // Directed path polytopes have dimension n^2 - 2n.
        for n in [4usize, 5] {
            let sp = Space::new(Variant::Path, n).unwrap();
            assert_eq!(
                polytope_dimension(sp, &cseq(&[2, 4])).unwrap(),
                (n * n - 2 * n) as isize,
                "n={n}"
            );
        }
    }

    #[test]
    fn empty_polytope_dimension() {
        let sp = Space::new(Variant::Cycle, 4).unwrap();
        // No cycles of size exactly 5 or 6 exist on 4 nodes.
        assert_eq!(polytope_dimension(sp, &cseq(&[5, 6])).unwrap(), -1);
    }

    #[test]
    fn validity_with_counterexample() {
        let d5 = PathDigraph::new(5).unwrap();
        let c = cseq(&[3, 5]);
        let vertices = enumerate::enumerate_paths(&d5, &c);
        // |S| = c_1 + 1 = 4 makes the min-cut inequality invalid: a
        // 3-arc path inside S avoids the cut.
        let bad = generators::min_cut(d5.geometry(), &[0, 1, 2, 5]).unwrap();
        let check = is_valid(&bad, &vertices).unwrap();
        assert!(!check.valid);
        let witness = &vertices[check.counterexample.unwrap()];
        assert!(!bad.satisfied_by(witness).unwrap());

        // Degree constraints are valid everywhere.
        let deg = generators::degree_constraint(d5.geometry(), 2).unwrap();
        assert!(is_valid(&deg, &vertices).unwrap().valid);

        // Flow equations hold on all path vertices.
        for i in 0..=5 {
            let flow = generators::flow_conservation(d5.geometry(), i).unwrap();
            assert!(is_valid(&flow, &vertices).unwrap().valid, "node {i}");
        }
    }

    #[test]
    fn degree_is_facet_on_small_cycle_polytope() {
        let space = Space::new(Variant::Cycle, 5).unwrap();
        let c = cseq(&[2, 3]);
        let vertices = enumerate::enumerate_vertices(space, &c).unwrap();
        let dim = dimension_of(&vertices);
        assert_eq!(dim, 16); // (n-1)^2
        let g = space.geometry();
        let deg = generators::degree_constraint(&g, 1).unwrap();
        assert!(is_facet(&deg, &vertices, dim).unwrap());
    }

    #[test]
    fn dominated_cf_is_not_facet() {
        let space = Space::new(Variant::Cycle, 6).unwrap();
        let c = cseq(&[2, 4]);
        let vertices = enumerate::enumerate_vertices(space, &c).unwrap();
        let dim = dimension_of(&vertices);
        let g = space.geometry();
        // |W| + 1 = c_2 < n: dominated by nonnegativity constraints.
        let cf = generators::cf_node(&g, &[1, 2, 3], &c, 1).unwrap();
        assert!(!is_facet(&cf, &vertices, dim).unwrap());
    }

    #[test]
    fn is_facet_rejects_invalid() {
        let d5 = PathDigraph::new(5).unwrap();
        let c = cseq(&[3, 5]);
        let vertices = enumerate::enumerate_paths(&d5, &c);
        let dim = dimension_of(&vertices);
        let bad = generators::min_cut(d5.geometry(), &[0, 1, 2, 5]).unwrap();
        assert!(is_facet(&bad, &vertices, dim).is_err());
    }

    #[test]
    fn sweep_ids_roundtrip() {
        for class in catalog() {
            let parsed = SweepClass::parse(&class.id()).unwrap();
            assert_eq!(parsed, class);
        }
        assert!(SweepClass::parse("nope").is_err());
        assert_eq!(catalog().len(), 39);
    }

    #[test]
    fn small_sweep_agrees() {
        // Degree over the path polytope at n=5, c=(2,4): all facets.
        let class = SweepClass::new(SweepKind::Degree, Variant::Path);
        let report = sweep(&class, 5, &cseq(&[2, 4]), None).unwrap();
        assert_eq!(report.disagreements, 0);
        assert_eq!(report.instances, 4);
        assert!(report.outcomes.iter().all(|o| o.facet));
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(&[1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(&[1, 2], 0), vec![Vec::<usize>::new()]);
        assert_eq!(all_subsets(&[1, 2]).len(), 4);
    }
}
