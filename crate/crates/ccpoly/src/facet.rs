//! Published facet classification per inequality class.
//!
//! For each structured class the literature settles, per parameter
//! choice, whether the inequality defines a facet of its polytope. That
//! classification is encoded here as a three-valued predicate: `Facet`,
//! `NotFacet`, or `Unknown` for parameter regimes the classification
//! leaves open. Unknown regimes are resolved empirically by the sweeps in
//! `verify`, never guessed here.

use crate::cardinality::CardinalitySequence;
use crate::error::{invalid, Result};
use crate::graph::Variant;
use crate::inequality::{ClassSpec, LinearInequality};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetStatus {
    Facet,
    NotFacet,
    /// The classification does not cover this parameter regime; resolve
    /// empirically.
    Unknown,
}

impl std::fmt::Display for FacetStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FacetStatus::Facet => "facet",
            FacetStatus::NotFacet => "not-facet",
            FacetStatus::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

fn status(b: bool) -> FacetStatus {
    if b {
        FacetStatus::Facet
    } else {
        FacetStatus::NotFacet
    }
}

/// True when `c` is exactly the two-element sequence (2, n).
fn is_two_n(c: &CardinalitySequence, n: usize) -> bool {
    c.values() == [2, n]
}

/// True when `c` lies in the domain the path-polytope classification
/// covers: at least two allowed values, smallest at least 2, largest at
/// most n, and not the fully-described sequence (2,3).
fn path_domain(c: &CardinalitySequence, n: usize) -> bool {
    c.len() >= 2 && c.first() >= 2 && c.last() <= n && c.values() != [2, 3]
}

fn cycle_domain(c: &CardinalitySequence, n: usize) -> bool {
    c.len() >= 2 && c.first() >= 2 && c.last() <= n
}

fn ucycle_domain(c: &CardinalitySequence, n: usize) -> bool {
    c.len() >= 2 && c.first() >= 3 && c.last() <= n
}

/// The known validity condition for a generated inequality: `true` means
/// the inequality holds for every feasible incidence vector of its
/// polytope. Classes without a size restriction are valid whenever their
/// generator accepted the parameters.
pub fn validity_predicate(ineq: &LinearInequality, c: &CardinalitySequence) -> bool {
    let n = ineq.space.n;
    let node_count = ineq.space.node_count();
    match (&ineq.class, ineq.space.variant) {
        (ClassSpec::MinCut { s }, Variant::Path | Variant::UndirectedPath) => s.len() <= c.first(),
        (ClassSpec::MinCut { s }, Variant::Cycle | Variant::UndirectedCycle) => {
            s.len() <= c.first() - 1 && node_count - s.len() <= c.first() - 1
        }
        (ClassSpec::OneSidedMinCut { s, .. }, Variant::Cycle | Variant::UndirectedCycle) => {
            node_count - s.len() <= c.first() - 1
        }
        _ => {
            let _ = n;
            true
        }
    }
}

/// The published facet classification for a structured inequality over
/// its polytope, given the cardinality sequence the polytope is built
/// from. Custom inequalities have no class and are rejected.
pub fn facet_predicate(
    ineq: &LinearInequality,
    c: &CardinalitySequence,
) -> Result<FacetStatus> {
    let space = ineq.space;
    let n = space.n;
    let node_count = space.node_count();
    let variant = space.variant;

    // Outside the domain of the classification nothing is published.
    let in_domain = match variant {
        Variant::Path | Variant::UndirectedPath => path_domain(c, n),
        Variant::Cycle => cycle_domain(c, n),
        Variant::UndirectedCycle => ucycle_domain(c, n),
    };
    if !in_domain && !matches!(ineq.class, ClassSpec::Custom) {
        return Ok(FacetStatus::Unknown);
    }

    let two_n = is_two_n(c, n);
    Ok(match (&ineq.class, variant) {
        (ClassSpec::Custom, _) => return Err(invalid("no facet classification for custom inequalities")),
        (ClassSpec::Flow { .. }, _) => FacetStatus::NotFacet, // implicit equation

        (ClassSpec::Nonneg { coord }, Variant::Path) => {
            if !two_n {
                FacetStatus::Facet
            } else {
                let inner = coord.0 >= 1 && coord.1 <= n - 1;
                status(n >= 5 && inner)
            }
        }
        (ClassSpec::Nonneg { .. }, Variant::Cycle) => FacetStatus::Facet,
        (ClassSpec::Nonneg { .. }, Variant::UndirectedCycle) => status(n >= 5),
        (ClassSpec::Nonneg { coord }, Variant::UndirectedPath) => {
            if *coord == (0, n) {
                // y_{0n} = 0 is an implicit equation of the polytope.
                FacetStatus::NotFacet
            } else if !two_n {
                FacetStatus::Facet
            } else {
                let internal = coord.0 >= 1 && coord.1 <= n - 1;
                status(internal)
            }
        }

        (ClassSpec::Degree { .. }, Variant::Path | Variant::UndirectedPath) => {
            if two_n {
                FacetStatus::Unknown
            } else {
                FacetStatus::Facet
            }
        }
        (ClassSpec::Degree { .. }, Variant::Cycle | Variant::UndirectedCycle) => FacetStatus::Facet,

        (ClassSpec::CardinalityBoundLo, v) => card_bound_status(c.first(), n, v),
        (ClassSpec::CardinalityBoundHi, v) => card_bound_status_hi(c.last(), n, v),

        (ClassSpec::CfNode { w, bracket }, Variant::Path | Variant::UndirectedPath) => {
            let cp1 = c.at(bracket + 1);
            let measure = w.len() - 1;
            status((cp1 - measure >= 2 && cp1 < n) || (cp1 == n && measure == n - 1))
        }
        (ClassSpec::CfNode { w, bracket }, Variant::Cycle | Variant::UndirectedCycle) => {
            let cp1 = c.at(bracket + 1);
            status((cp1 - w.len() >= 2 && cp1 < n) || (cp1 == n && w.len() == n - 1))
        }

        (ClassSpec::CfArc { .. }, _) => FacetStatus::Unknown,

        (ClassSpec::CardSubgraph { w, bracket }, Variant::Path | Variant::UndirectedPath) => {
            status(bracket + 1 < c.len() || (c.at(bracket + 1) == n && w.len() == n))
        }
        (ClassSpec::CardSubgraph { w, bracket }, Variant::Cycle | Variant::UndirectedCycle) => {
            status(bracket + 1 < c.len() || (c.at(bracket + 1) == n && w.len() == n - 1))
        }

        (ClassSpec::OneSidedMinCut { s, .. }, Variant::Path) => {
            if s.len() == 2 {
                // S = {0, n}: the cut term is the implicit equation
                // x(delta_out(0)) = 1 and the inequality collapses to the
                // in-degree bound at v, which the classification does not
                // address through this class.
                FacetStatus::Unknown
            } else {
                status(node_count - s.len() >= 2 && s.len() >= c.first() + 1 && !two_n)
            }
        }
        (ClassSpec::OneSidedMinCut { s, .. }, Variant::Cycle | Variant::UndirectedCycle) => {
            let outside = node_count - s.len();
            status(s.len() >= c.first() && 2 <= outside && outside <= c.first() - 1)
        }
        (ClassSpec::OneSidedMinCut { s, .. }, Variant::UndirectedPath) => {
            if two_n {
                // The directed classification excludes (2, n); the
                // undirected transfer inherits that exclusion.
                FacetStatus::Unknown
            } else if s.len() >= c.first() + 1 {
                status(node_count - s.len() >= 2)
            } else {
                FacetStatus::Unknown
            }
        }

        (ClassSpec::MinCut { s }, Variant::Path) => {
            status(3 <= s.len() && s.len() <= c.first() && node_count - s.len() >= 2)
        }
        (ClassSpec::MinCut { s }, Variant::Cycle | Variant::UndirectedCycle) => {
            let outside = node_count - s.len();
            if s.len() <= c.first() - 1 && outside <= c.first() - 1 {
                status(s.len() >= 2 && outside >= 2)
            } else {
                FacetStatus::NotFacet // not even valid
            }
        }
        (ClassSpec::MinCut { s }, Variant::UndirectedPath) => {
            status(s.len() <= c.first() && s.len() >= 3 && node_count - s.len() >= 2)
        }

        (ClassSpec::MultiCycleExcl { s, .. }, Variant::Cycle) => {
            let outside = node_count - s.len();
            status(
                s.len() >= c.first()
                    && outside >= c.first()
                    && c.values() != [2, 3]
                    && !two_n,
            )
        }
        (ClassSpec::MultiCycleExcl { s, .. }, Variant::UndirectedCycle) => {
            if c.first() <= s.len() && s.len() <= n - c.first() {
                FacetStatus::Facet
            } else {
                FacetStatus::Unknown
            }
        }
        (ClassSpec::MultiCycleExcl { .. }, _) => {
            return Err(invalid("multiple cycle exclusion is a cycle-space class"))
        }

        (ClassSpec::OddExcl { s, t }, Variant::Path | Variant::UndirectedPath) => {
            let c2 = c.at(2);
            let (a, b) = (s.len(), t.len());
            if c.first() >= 4 {
                status(2 * a >= c2 && 2 * b >= c2)
            } else if 2 * a >= c2 + 2 && 2 * b >= c2 + 2 {
                FacetStatus::Facet
            } else if c2 == 4 && a >= 2 && b >= 2 {
                // Boundary side of size 2 holds no inner arc, so the
                // classification's domination argument does not apply.
                FacetStatus::Unknown
            } else {
                FacetStatus::NotFacet
            }
        }
        (ClassSpec::OddExcl { s, t }, Variant::Cycle) => {
            let c2 = c.at(2);
            let (a, b) = (s.len(), t.len());
            if c.first() >= 4 {
                status(2 * a + 2 >= c2 && 2 * b + 2 >= c2)
            } else if 2 * a >= c2 && 2 * b >= c2 {
                FacetStatus::Facet
            } else if c2 == 4 {
                // Singleton sides escape the counting argument because of
                // the correction terms at the top node.
                FacetStatus::Unknown
            } else {
                FacetStatus::NotFacet
            }
        }
        (ClassSpec::OddExcl { .. }, Variant::UndirectedCycle) => {
            return Err(invalid("odd cycle exclusion has no undirected counterpart"))
        }

        (ClassSpec::EvenExcl { s, t }, Variant::Path | Variant::UndirectedPath) => {
            let c2 = c.at(2);
            let (a, b) = (s.len(), t.len());
            if c.first() >= 5 {
                status(2 * (a - 1) >= c2 - 1 && 2 * b >= c2 - 1)
            } else if 2 * (a - 1) >= c2 + 1 && 2 * b >= c2 - 1 {
                FacetStatus::Facet
            } else if c2 == 5 && a == 3 && 2 * b >= c2 - 1 {
                // S = {0, s, n} has no inner arc, so the domination
                // argument for the boundary size does not apply.
                FacetStatus::Unknown
            } else {
                FacetStatus::NotFacet
            }
        }
        (ClassSpec::EvenExcl { s, t }, Variant::Cycle | Variant::UndirectedCycle) => {
            let c2 = c.at(2);
            status(2 * s.len() >= c2 - 1 && 2 * t.len() >= c2 - 1)
        }

        (ClassSpec::ModifiedCf { .. }, Variant::Path | Variant::Cycle) => FacetStatus::Facet,
        (ClassSpec::ModifiedCf { .. }, _) => {
            return Err(invalid("modified cardinality forcing has no undirected counterpart"))
        }
    })
}

fn card_bound_status(c1: usize, n: usize, variant: Variant) -> FacetStatus {
    match variant {
        Variant::Path => status(4 <= c1 && c1 <= n - 1),
        Variant::Cycle => status((c1 == 3 && n >= 5) || (4 <= c1 && c1 <= n - 1)),
        Variant::UndirectedCycle => FacetStatus::Facet,
        Variant::UndirectedPath => status(c1 >= 4),
    }
}

fn card_bound_status_hi(cm: usize, n: usize, variant: Variant) -> FacetStatus {
    match variant {
        Variant::Path => status(4 <= cm && cm <= n - 1),
        Variant::Cycle => status((cm == 3 && n >= 5) || (4 <= cm && cm <= n - 1)),
        Variant::UndirectedCycle | Variant::UndirectedPath => status(cm < n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinality::cseq;
    use crate::generators;
    use crate::graph::{CompleteDigraph, PathDigraph};

    #[test]
    fn cf_node_cycle_statuses() {
        let d6 = CompleteDigraph::new(6).unwrap();
        let g = d6.geometry();
        // c_{p+1} = n and |W| = n-1: facet.
        let c = cseq(&[2, 6]);
        let ineq = generators::cf_node(g, &[1, 2, 3, 4, 5], &c, 1).unwrap();
        assert_eq!(facet_predicate(&ineq, &c).unwrap(), FacetStatus::Facet);
        // |W| + 1 = c_{p+1} < n: dominated by nonnegativity.
        let c = cseq(&[2, 4]);
        let ineq = generators::cf_node(g, &[1, 2, 3], &c, 1).unwrap();
        assert_eq!(facet_predicate(&ineq, &c).unwrap(), FacetStatus::NotFacet);
        // Gap of at least 2 below c_{p+1} < n: facet.
        let c = cseq(&[2, 5]);
        let ineq = generators::cf_node(g, &[1, 2, 3], &c, 1).unwrap();
        assert_eq!(facet_predicate(&ineq, &c).unwrap(), FacetStatus::Facet);
    }

    #[test]
    fn degree_two_n_is_open() {
        let d5 = PathDigraph::new(5).unwrap();
        let g = d5.geometry();
        let ineq = generators::degree_constraint(g, 2).unwrap();
        assert_eq!(
            facet_predicate(&ineq, &cseq(&[2, 5])).unwrap(),
            FacetStatus::Unknown
        );
        assert_eq!(
            facet_predicate(&ineq, &cseq(&[2, 4])).unwrap(),
            FacetStatus::Facet
        );
    }

    #[test]
    fn min_cut_validity() {
        let d6 = PathDigraph::new(6).unwrap();
        let g = d6.geometry();
        let c = cseq(&[3, 5]);
        let small = generators::min_cut(g, &[0, 1, 6]).unwrap();
        assert!(validity_predicate(&small, &c));
        let big = generators::min_cut(g, &[0, 1, 2, 3, 6]).unwrap();
        assert!(!validity_predicate(&big, &c)); // |S| = c_1 + 1 = 4
        assert_eq!(facet_predicate(&big, &c).unwrap(), FacetStatus::NotFacet);
    }

    #[test]
    fn osmc_path_example() {
        let d6 = PathDigraph::new(6).unwrap();
        let g = d6.geometry();
        let c = cseq(&[4, 5]);
        let ineq = generators::one_sided_min_cut(g, &[0, 6, 1, 2, 3], 4).unwrap();
        assert_eq!(facet_predicate(&ineq, &c).unwrap(), FacetStatus::Facet);
    }

    #[test]
    fn out_of_domain_is_unknown() {
        let d5 = PathDigraph::new(5).unwrap();
        let g = d5.geometry();
        let ineq = generators::degree_constraint(g, 2).unwrap();
        assert_eq!(
            facet_predicate(&ineq, &cseq(&[2, 3])).unwrap(),
            FacetStatus::Unknown
        );
    }
}
