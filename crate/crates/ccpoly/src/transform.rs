//! Transfers between the polytope families: lifting path facets to cycle
//! facets, and deorienting (pseudo-)symmetric directed inequalities to
//! the undirected families.

use crate::cardinality::CardinalitySequence;
use crate::enumerate;
use crate::equivalence::{is_symmetric, SymmetryMode};
use crate::error::{invalid, Result};
use crate::graph::{PathDigraph, Space, Variant};
use crate::inequality::{ClassSpec, LinearInequality, Sense};
use crate::rational::{rat, Rational};

/// Lifts an inequality over the path digraph on nodes 0..=n to the
/// complete digraph on nodes 1..=n, merging the path endpoints into node
/// n. The lifting constant is the exact maximum of the left-hand side
/// over all cycles of allowed cardinality inside the path digraph,
/// computed by enumeration.
///
/// Facet-defining inputs produce facet-defining outputs; `verify` checks
/// this empirically at desk scale.
pub fn lift_path_to_cycle(
    ineq: &LinearInequality,
    c: &CardinalitySequence,
) -> Result<LinearInequality> {
    if ineq.space.variant != Variant::Path {
        return Err(invalid("lifting expects an inequality over the path digraph"));
    }
    if ineq.sense == Sense::Eq {
        return Err(invalid("lifting applies to inequalities, not equations"));
    }
    if c.len() < 2 || c.first() < 2 {
        return Err(invalid("lifting requires at least two allowed cardinalities, all >= 2"));
    }
    let n = ineq.space.n;
    let le = ineq.as_le();
    let path_digraph = PathDigraph::new(n)?;
    let path_geometry = path_digraph.geometry();

    // gamma = max of the left-hand side over cycles of allowed length in
    // the path digraph. Such cycles avoid both endpoints, so they exist
    // only for cardinalities up to n - 1.
    let cycles = enumerate::enumerate_path_digraph_cycles(&path_digraph, c)?;
    let mut gamma: Option<Rational> = None;
    for cyc in &cycles {
        let value = le.lhs_on(cyc)?;
        if gamma.as_ref().is_none_or(|g| value > *g) {
            gamma = Some(value);
        }
    }
    let Some(gamma) = gamma else {
        return Err(invalid("no cycle of allowed cardinality exists in the path digraph"));
    };

    let cycle_space = Space::new(Variant::Cycle, n)?;
    let cycle_geometry = cycle_space.geometry();
    let shift = &gamma - &le.rhs;
    let coeffs: Vec<Rational> = cycle_geometry
        .coords()
        .iter()
        .map(|&(u, v)| {
            if u == n {
                // Arcs out of the merged node inherit the source
                // coefficients plus the lifting shift.
                let idx = path_geometry.index_of(0, v).expect("source arc");
                le.coeffs[idx].clone() + &shift
            } else {
                let idx = path_geometry.index_of(u, v).expect("inner or sink arc");
                le.coeffs[idx].clone()
            }
        })
        .collect();
    Ok(LinearInequality {
        space: cycle_space,
        coeffs,
        sense: Sense::Le,
        rhs: gamma,
        class: ClassSpec::Custom,
    })
}

/// Maps a symmetric (cycle) or pseudo-symmetric (path) directed
/// inequality to its undirected counterpart via the identification
/// y_{ij} = x_{ij} + x_{ji}; sense and right-hand side are unchanged.
/// Asymmetric inputs are rejected; run `symmetrize` first.
pub fn deorient(ineq: &LinearInequality) -> Result<LinearInequality> {
    let n = ineq.space.n;
    let geometry = ineq.space.geometry();
    match ineq.space.variant {
        Variant::Cycle => {
            if !is_symmetric(ineq, SymmetryMode::Symmetric)? {
                return Err(invalid("inequality is not symmetric; symmetrize it first"));
            }
            let out_space = Space::new(Variant::UndirectedCycle, n)?;
            let coeffs = out_space
                .geometry()
                .coords()
                .iter()
                .map(|&(u, v)| ineq.coeffs[geometry.index_of(u, v).unwrap()].clone())
                .collect();
            Ok(LinearInequality {
                space: out_space,
                coeffs,
                sense: ineq.sense,
                rhs: ineq.rhs.clone(),
                class: ineq.class.clone(),
            })
        }
        Variant::Path => {
            if !is_symmetric(ineq, SymmetryMode::PseudoSymmetric)? {
                return Err(invalid("inequality is not pseudo-symmetric; symmetrize it first"));
            }
            let out_space = Space::new(Variant::UndirectedPath, n)?;
            let coeffs = out_space
                .geometry()
                .coords()
                .iter()
                .map(|&(u, v)| {
                    // The edge {0, n} has no directed counterpart; no
                    // feasible path uses it.
                    match geometry.index_of(u, v) {
                        Some(i) => ineq.coeffs[i].clone(),
                        None => rat(0),
                    }
                })
                .collect();
            Ok(LinearInequality {
                space: out_space,
                coeffs,
                sense: ineq.sense,
                rhs: ineq.rhs.clone(),
                class: ineq.class.clone(),
            })
        }
        _ => Err(invalid("deorientation expects a directed inequality")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinality::cseq;
    use crate::enumerate::{enumerate_cycles, enumerate_vertices};
    use crate::equivalence::symmetrize;
    use crate::generators;
    use crate::graph::CompleteDigraph;
    use crate::verify::{dimension_of, is_facet, is_valid};

    #[test]
    fn lifted_degree_is_cycle_degree() {
        let n = 5;
        let d = PathDigraph::new(n).unwrap();
        let c = cseq(&[2, 4]);
        let deg = generators::degree_constraint(d.geometry(), 2).unwrap();
        let lifted = lift_path_to_cycle(&deg, &c).unwrap();
        // gamma = 1: any allowed cycle through node 2 meets the degree row
        // once.
        assert_eq!(lifted.rhs, rat(1));
        let cyc = CompleteDigraph::new(n).unwrap();
        let expected = generators::degree_constraint(cyc.geometry(), 2).unwrap();
        assert_eq!(lifted.coeffs, expected.coeffs);
    }

    #[test]
    fn lifted_inequality_valid_and_facet() {
        let n = 5;
        let d = PathDigraph::new(n).unwrap();
        let c = cseq(&[2, 4]);
        let osmc = generators::one_sided_min_cut(d.geometry(), &[0, 1, 2, 5], 3).unwrap();
        let lifted = lift_path_to_cycle(&osmc, &c).unwrap();
        let cycle_space = Space::new(Variant::Cycle, n).unwrap();
        let vertices = enumerate_vertices(cycle_space, &c).unwrap();
        assert!(is_valid(&lifted, &vertices).unwrap().valid);
        let dim = dimension_of(&vertices);
        assert!(is_facet(&lifted, &vertices, dim).unwrap());
    }

    #[test]
    fn lift_tight_at_maximizing_cycle() {
        let n = 5;
        let d = PathDigraph::new(n).unwrap();
        let c = cseq(&[2, 4]);
        let ineq = generators::degree_constraint(d.geometry(), 1).unwrap();
        let lifted = lift_path_to_cycle(&ineq, &c).unwrap();
        // A 2-cycle through node 1 avoiding the merged node achieves the
        // maximum, hence is tight for the lift.
        let cyc_space = lifted.space;
        let two_cycle = crate::enumerate::IncidenceVector::from_cycle_nodes(cyc_space, &[1, 2]).unwrap();
        assert!(lifted.tight_at(&two_cycle).unwrap());
    }

    #[test]
    fn lift_rejects_unliftable() {
        let d = PathDigraph::new(5).unwrap();
        let flow = generators::flow_conservation(d.geometry(), 1).unwrap();
        assert!(lift_path_to_cycle(&flow, &cseq(&[2, 4])).is_err());
    }

    #[test]
    fn deorient_degree() {
        let d5 = CompleteDigraph::new(5).unwrap();
        let deg = generators::degree_constraint(d5.geometry(), 2).unwrap();
        let sym = symmetrize(&deg, SymmetryMode::Symmetric).unwrap().unwrap();
        let undirected = deorient(&sym).unwrap();
        // y(delta(2)) <= 2.
        assert_eq!(undirected.rhs, rat(2));
        let g = undirected.space.geometry();
        for (i, &(u, v)) in g.coords().iter().enumerate() {
            let expected = if u == 2 || v == 2 { rat(1) } else { rat(0) };
            assert_eq!(undirected.coeffs[i], expected);
        }
        // Asymmetric input is rejected.
        assert!(deorient(&deg).is_err());
    }

    #[test]
    fn deorient_matches_undirected_generators() {
        use crate::graph::CompleteGraph;
        let n = 6;
        let d = CompleteDigraph::new(n).unwrap();
        let k = CompleteGraph::for_cycles(n).unwrap();
        let c = cseq(&[3, 5]);
        let g = d.geometry();
        let gu = k.geometry();

        let cases: Vec<(LinearInequality, LinearInequality)> = vec![
            (
                generators::degree_constraint(g, 3).unwrap(),
                generators::degree_constraint(gu, 3).unwrap(),
            ),
            (
                generators::min_cut(g, &[1, 2]).unwrap(),
                generators::min_cut(gu, &[1, 2]).unwrap(),
            ),
            (
                generators::one_sided_min_cut(g, &[1, 2, 3, 4], 5).unwrap(),
                generators::one_sided_min_cut(gu, &[1, 2, 3, 4], 5).unwrap(),
            ),
            (
                generators::cf_node(g, &[1, 2, 3, 4], &c, 1).unwrap(),
                generators::cf_node(gu, &[1, 2, 3, 4], &c, 1).unwrap(),
            ),
            (
                generators::cardinality_subgraph(g, &[1, 2, 3, 4], &c, 1).unwrap(),
                generators::cardinality_subgraph(gu, &[1, 2, 3, 4], &c, 1).unwrap(),
            ),
            (
                generators::multiple_cycle_exclusion(g, &[1, 2, 3], 2, 5).unwrap(),
                generators::multiple_cycle_exclusion(gu, &[1, 2, 3], 2, 5).unwrap(),
            ),
            (
                generators::cardinality_bounds(g, &c).0,
                generators::cardinality_bounds(gu, &c).0,
            ),
            (
                generators::parity_exclusion(g, &[1, 2], &[3, 4, 5, 6], generators::Parity::Even, &c)
                    .unwrap(),
                generators::parity_exclusion(gu, &[1, 2], &[3, 4, 5, 6], generators::Parity::Even, &c)
                    .unwrap(),
            ),
        ];
        for (directed, undirected) in cases {
            let sym = symmetrize(&directed, SymmetryMode::Symmetric)
                .unwrap()
                .expect("symmetrizable");
            let out = deorient(&sym).unwrap();
            assert_eq!(out.coeffs, undirected.coeffs, "{}", directed.class.describe());
            assert_eq!(out.rhs, undirected.rhs);
            assert_eq!(out.sense, undirected.sense);
        }
    }

    #[test]
    fn deorient_osmc_small_side_is_parity_constraint() {
        // With exactly two nodes outside S, the undirected one-sided
        // min-cut reduces to the parity form y(delta(k) minus {jk}) >= y_jk.
        let n = 6;
        let d = CompleteDigraph::new(n).unwrap();
        let osmc = generators::one_sided_min_cut(d.geometry(), &[1, 2, 3, 4], 5).unwrap();
        let sym = symmetrize(&osmc, SymmetryMode::Symmetric).unwrap().unwrap();
        let out = deorient(&sym).unwrap();
        let gu = out.space.geometry();
        for (i, &(u, v)) in gu.coords().iter().enumerate() {
            let expected = if (u, v) == (5, 6) {
                rat(-1) // minus y_e for the edge joining j to the other outside node
            } else if v == 6 || u == 6 {
                rat(1) // delta(k) minus the {j,k} edge
            } else {
                rat(0)
            };
            assert_eq!(out.coeffs[i], expected, "edge ({u},{v})");
        }
        assert_eq!(out.rhs, rat(0));
    }

    #[test]
    fn deorient_preserves_validity_on_enumeration() {
        let n = 6;
        let d = CompleteDigraph::new(n).unwrap();
        let c = cseq(&[3, 5]);
        let directed = generators::cf_node(d.geometry(), &[1, 2, 3, 4], &c, 1).unwrap();
        let sym = symmetrize(&directed, SymmetryMode::Symmetric).unwrap().unwrap();
        let out = deorient(&sym).unwrap();
        // Paired evaluation: a directed cycle and its deoriented edge set
        // produce the same left-hand side.
        for cyc in enumerate_cycles(&d, &c).unwrap() {
            let undirected_cycle = crate::enumerate::IncidenceVector::from_cycle_nodes(
                out.space,
                cyc.sequence(),
            )
            .unwrap();
            assert_eq!(sym.lhs_on(&cyc).unwrap(), out.lhs_on(&undirected_cycle).unwrap());
        }
        let vertices = enumerate_vertices(out.space, &c).unwrap();
        assert!(is_valid(&out, &vertices).unwrap().valid);
    }
}
