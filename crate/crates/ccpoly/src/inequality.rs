//! Linear inequalities over a fixed arc/edge space: the common currency of
//! generators, separation oracles, facet checks and the LP solver.

use crate::enumerate::IncidenceVector;
use crate::error::{invalid, Error, Result};
use crate::graph::Space;
use crate::rational::{display, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl std::fmt::Display for Sense {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        };
        write!(f, "{s}")
    }
}

/// Coarse class label; every structured class can be rebuilt bit-exactly
/// from its [`ClassSpec`] together with (space, cardinality sequence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    Flow,
    Degree,
    Nonneg,
    CardinalityBoundLo,
    CardinalityBoundHi,
    CfNode,
    CfArc,
    CardSubgraph,
    OneSidedMinCut,
    MinCut,
    MultiCycleExcl,
    OddExcl,
    EvenExcl,
    ModifiedCf,
    Custom,
}

/// Structured parameters of a generated inequality. Node sets are kept
/// sorted so equal parameter choices compare equal (cut pools dedup on
/// this).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClassSpec {
    Flow { node: usize },
    Degree { node: usize },
    Nonneg { coord: (usize, usize) },
    CardinalityBoundLo,
    CardinalityBoundHi,
    CfNode { w: Vec<usize>, bracket: usize },
    CfArc { arcs: Vec<(usize, usize)>, bracket: usize },
    CardSubgraph { w: Vec<usize>, bracket: usize },
    OneSidedMinCut { s: Vec<usize>, v: usize },
    MinCut { s: Vec<usize> },
    MultiCycleExcl { s: Vec<usize>, v: usize, w: usize },
    OddExcl { s: Vec<usize>, t: Vec<usize> },
    EvenExcl { s: Vec<usize>, t: Vec<usize> },
    ModifiedCf { p: Vec<usize>, q: Vec<usize>, r: usize, bracket: usize },
    Custom,
}

impl ClassSpec {
    pub fn tag(&self) -> ClassTag {
        match self {
            ClassSpec::Flow { .. } => ClassTag::Flow,
            ClassSpec::Degree { .. } => ClassTag::Degree,
            ClassSpec::Nonneg { .. } => ClassTag::Nonneg,
            ClassSpec::CardinalityBoundLo => ClassTag::CardinalityBoundLo,
            ClassSpec::CardinalityBoundHi => ClassTag::CardinalityBoundHi,
            ClassSpec::CfNode { .. } => ClassTag::CfNode,
            ClassSpec::CfArc { .. } => ClassTag::CfArc,
            ClassSpec::CardSubgraph { .. } => ClassTag::CardSubgraph,
            ClassSpec::OneSidedMinCut { .. } => ClassTag::OneSidedMinCut,
            ClassSpec::MinCut { .. } => ClassTag::MinCut,
            ClassSpec::MultiCycleExcl { .. } => ClassTag::MultiCycleExcl,
            ClassSpec::OddExcl { .. } => ClassTag::OddExcl,
            ClassSpec::EvenExcl { .. } => ClassTag::EvenExcl,
            ClassSpec::ModifiedCf { .. } => ClassTag::ModifiedCf,
            ClassSpec::Custom => ClassTag::Custom,
        }
    }

    /// Short human-readable parameter summary for reports.
    pub fn describe(&self) -> String {
        fn set(s: &[usize]) -> String {
            let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        }
        match self {
            ClassSpec::Flow { node } => format!("flow i={node}"),
            ClassSpec::Degree { node } => format!("degree i={node}"),
            ClassSpec::Nonneg { coord } => format!("nonneg ({},{})", coord.0, coord.1),
            ClassSpec::CardinalityBoundLo => "card-bound lo".into(),
            ClassSpec::CardinalityBoundHi => "card-bound hi".into(),
            ClassSpec::CfNode { w, bracket } => format!("cf-node W={} p={bracket}", set(w)),
            ClassSpec::CfArc { arcs, bracket } => {
                format!("cf-arc |F|={} p={bracket}", arcs.len())
            }
            ClassSpec::CardSubgraph { w, bracket } => {
                format!("card-subgraph W={} p={bracket}", set(w))
            }
            ClassSpec::OneSidedMinCut { s, v } => format!("osmc S={} v={v}", set(s)),
            ClassSpec::MinCut { s } => format!("min-cut S={}", set(s)),
            ClassSpec::MultiCycleExcl { s, v, w } => {
                format!("multi-cycle-excl S={} v={v} w={w}", set(s))
            }
            ClassSpec::OddExcl { s, t } => format!("odd-excl S={} T={}", set(s), set(t)),
            ClassSpec::EvenExcl { s, t } => format!("even-excl S={} T={}", set(s), set(t)),
            ClassSpec::ModifiedCf { p, q, r, bracket } => {
                format!("modified-cf P={} Q={} r={r} p={bracket}", set(p), set(q))
            }
            ClassSpec::Custom => "custom".into(),
        }
    }
}

/// A linear inequality (or equation) over the coordinates of `space`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearInequality {
    pub space: Space,
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
    pub class: ClassSpec,
}

impl LinearInequality {
    pub fn custom(space: Space, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) -> Result<Self> {
        let expected = space.geometry().len();
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(LinearInequality {
            space,
            coeffs,
            sense,
            rhs,
            class: ClassSpec::Custom,
        })
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (c, x) in self.coeffs.iter().zip(point) {
            if !c.is_zero() && !x.is_zero() {
                acc += c * x;
            }
        }
        Ok(acc)
    }

    pub fn lhs_on(&self, vertex: &IncidenceVector) -> Result<Rational> {
        if vertex.space() != self.space {
            return Err(invalid(format!(
                "vertex space {} does not match inequality space {}",
                vertex.space(),
                self.space
            )));
        }
        Ok(vertex.dot(&self.coeffs))
    }

    pub fn satisfied_by_value(&self, lhs: &Rational) -> bool {
        match self.sense {
            Sense::Le => lhs <= &self.rhs,
            Sense::Ge => lhs >= &self.rhs,
            Sense::Eq => lhs == &self.rhs,
        }
    }

    pub fn satisfied_by(&self, vertex: &IncidenceVector) -> Result<bool> {
        Ok(self.satisfied_by_value(&self.lhs_on(vertex)?))
    }

    pub fn tight_at(&self, vertex: &IncidenceVector) -> Result<bool> {
        Ok(self.lhs_on(vertex)? == self.rhs)
    }

    /// How much `point` violates this inequality; zero when satisfied.
    pub fn violation(&self, point: &[Rational]) -> Result<Rational> {
        let lhs = self.evaluate(point)?;
        let diff = match self.sense {
            Sense::Le => lhs - &self.rhs,
            Sense::Ge => self.rhs.clone() - lhs,
            Sense::Eq => {
                let d = lhs - &self.rhs;
                if d < Rational::zero() {
                    -d
                } else {
                    d
                }
            }
        };
        Ok(if diff > Rational::zero() { diff } else { Rational::zero() })
    }

    /// The same constraint written with sense `<=` (equations unchanged).
    pub fn as_le(&self) -> LinearInequality {
        match self.sense {
            Sense::Le | Sense::Eq => self.clone(),
            Sense::Ge => LinearInequality {
                space: self.space,
                coeffs: self.coeffs.iter().map(|c| -c).collect(),
                sense: Sense::Le,
                rhs: -self.rhs.clone(),
                class: self.class.clone(),
            },
        }
    }

    /// Renders the inequality with nonzero coefficients only.
    pub fn render(&self) -> String {
        let geometry = self.space.geometry();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (u, v) = geometry.coords()[i];
            let var = if self.space.variant.is_directed() {
                format!("x({u},{v})")
            } else {
                format!("y({u},{v})")
            };
            let cs = display(c);
            match cs.as_str() {
                "1" => terms.push(format!("+ {var}")),
                "-1" => terms.push(format!("- {var}")),
                _ => {
                    if c > &Rational::zero() {
                        terms.push(format!("+ {cs} {var}"));
                    } else {
                        terms.push(format!("- {} {var}", display(&-c)));
                    }
                }
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        format!("{} {} {}", terms.join(" "), self.sense, display(&self.rhs))
    }

    /// Deterministic ordering key used when merging separation output.
    pub fn sort_key(&self) -> (ClassTag, String) {
        (self.class.tag(), self.class.describe())
    }
}

impl PartialOrd for LinearInequality {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.sort_key().cmp(&other.sort_key()))
    }
}

/// Sorted, deduplicated node set; generator inputs are canonicalized with
/// this before use.
pub fn canonical_set(nodes: &[usize]) -> Vec<usize> {
    let mut v = nodes.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Variant;
    use crate::rational::{rat, ratio};

    #[test]
    fn violation_and_sense() {
        let space = Space::new(Variant::Cycle, 3).unwrap();
        let dim = space.geometry().len();
        let mut coeffs = vec![rat(0); dim];
        coeffs[0] = rat(1);
        let ineq = LinearInequality::custom(space, coeffs, Sense::Le, ratio(1, 2)).unwrap();
        let mut point = vec![rat(0); dim];
        point[0] = rat(1);
        assert_eq!(ineq.violation(&point).unwrap(), ratio(1, 2));
        assert!(!ineq.satisfied_by_value(&rat(1)));
        let le = ineq.as_le();
        assert_eq!(le.sense, Sense::Le);

        let ge = LinearInequality::custom(space, vec![rat(1); dim], Sense::Ge, rat(2)).unwrap();
        let flipped = ge.as_le();
        assert_eq!(flipped.rhs, rat(-2));
        assert_eq!(flipped.coeffs[0], rat(-1));
    }

    #[test]
    fn canonical_set_sorts_and_dedups() {
        assert_eq!(canonical_set(&[3, 1, 3, 2]), vec![1, 2, 3]);
    }
}
