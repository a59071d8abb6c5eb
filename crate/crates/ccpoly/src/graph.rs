//! Graph carriers for the four polytope families.
//!
//! Every polytope lives in the coordinate space of a fixed graph whose
//! arcs/edges are frozen in lexicographic order at construction; all
//! vectors in the crate (incidence vectors, inequality coefficient rows,
//! fractional points) are indexed by that order.

use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};

/// Which of the four polytope families a vector space belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Directed (0,n)-paths in the path digraph on nodes 0..=n.
    Path,
    /// Directed cycles in the complete digraph on nodes 1..=n.
    Cycle,
    /// Undirected (0,n)-paths in the complete graph on nodes 0..=n.
    UndirectedPath,
    /// Undirected cycles in the complete graph on nodes 1..=n.
    UndirectedCycle,
}

impl Variant {
    pub fn is_directed(self) -> bool {
        matches!(self, Variant::Path | Variant::Cycle)
    }

    pub fn is_path(self) -> bool {
        matches!(self, Variant::Path | Variant::UndirectedPath)
    }

    /// Smallest admissible first cardinality for this family.
    pub fn min_cardinality(self) -> usize {
        match self {
            Variant::Path | Variant::UndirectedPath | Variant::Cycle => 2,
            Variant::UndirectedCycle => 3,
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Variant::Path => "path",
            Variant::Cycle => "cycle",
            Variant::UndirectedPath => "undirected-path",
            Variant::UndirectedCycle => "undirected-cycle",
        };
        write!(f, "{s}")
    }
}

/// A (variant, n) pair: the compact description of a coordinate space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Space {
    pub variant: Variant,
    pub n: usize,
}

impl Space {
    pub fn new(variant: Variant, n: usize) -> Result<Self> {
        let min_n = match variant {
            Variant::Path => 3,
            Variant::Cycle => 2,
            Variant::UndirectedPath => 3,
            Variant::UndirectedCycle => 3,
        };
        if n < min_n {
            return Err(invalid(format!("{variant} space requires n >= {min_n}, got {n}")));
        }
        Ok(Space { variant, n })
    }

    /// Node labels of the underlying graph, ascending.
    pub fn nodes(&self) -> Vec<usize> {
        match self.variant {
            Variant::Path | Variant::UndirectedPath => (0..=self.n).collect(),
            Variant::Cycle | Variant::UndirectedCycle => (1..=self.n).collect(),
        }
    }

    /// Nodes that may appear in the interior of a path; for cycle spaces,
    /// all nodes.
    pub fn internal_nodes(&self) -> Vec<usize> {
        match self.variant {
            Variant::Path | Variant::UndirectedPath => (1..self.n).collect(),
            Variant::Cycle | Variant::UndirectedCycle => (1..=self.n).collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes().len()
    }

    pub fn geometry(&self) -> Geometry {
        Geometry::new(*self)
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[n={}]", self.variant, self.n)
    }
}

/// Frozen coordinate list for a space: arcs `(tail, head)` for directed
/// variants, edges `(min, max)` for undirected ones, in lexicographic
/// order.
#[derive(Debug, Clone)]
pub struct Geometry {
    pub space: Space,
    coords: Vec<(usize, usize)>,
}

impl Geometry {
    fn new(space: Space) -> Self {
        let n = space.n;
        let mut coords = Vec::new();
        match space.variant {
            Variant::Path => {
                // No arc enters 0, none leaves n, and (0,n) is absent.
                for i in 1..n {
                    coords.push((0, i));
                }
                for i in 1..n {
                    for j in 1..=n {
                        if j != i && j != 0 {
                            coords.push((i, j));
                        }
                    }
                }
            }
            Variant::Cycle => {
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            coords.push((i, j));
                        }
                    }
                }
            }
            Variant::UndirectedPath => {
                for i in 0..n {
                    for j in (i + 1)..=n {
                        coords.push((i, j));
                    }
                }
            }
            Variant::UndirectedCycle => {
                for i in 1..n {
                    for j in (i + 1)..=n {
                        coords.push((i, j));
                    }
                }
            }
        }
        Geometry { space, coords }
    }

    pub fn coords(&self) -> &[(usize, usize)] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Index of an arc (directed) or edge (undirected; order of endpoints
    /// irrelevant). None when the coordinate does not exist in this space.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = if self.space.variant.is_directed() {
            (u, v)
        } else {
            (u.min(v), u.max(v))
        };
        self.coords.binary_search(&key).ok()
    }
}

/// The path digraph on nodes `0..=n`: arcs `(0,i)`, `(i,n)` and all arcs
/// between distinct internal nodes. No arc enters 0, none leaves n, and
/// the direct arc (0,n) is absent.
#[derive(Debug, Clone)]
pub struct PathDigraph {
    geometry: Geometry,
}

impl PathDigraph {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!("path digraph requires n >= 3, got {n}")));
        }
        Ok(PathDigraph {
            geometry: Space::new(Variant::Path, n)?.geometry(),
        })
    }

    pub fn n(&self) -> usize {
        self.geometry.space.n
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn space(&self) -> Space {
        self.geometry.space
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        self.geometry.coords()
    }

    pub fn arc_count(&self) -> usize {
        self.geometry.len()
    }
}

/// The complete loop-free digraph on nodes `1..=n`.
#[derive(Debug, Clone)]
pub struct CompleteDigraph {
    geometry: Geometry,
}

impl CompleteDigraph {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("complete digraph requires n >= 2, got {n}")));
        }
        Ok(CompleteDigraph {
            geometry: Space::new(Variant::Cycle, n)?.geometry(),
        })
    }

    pub fn n(&self) -> usize {
        self.geometry.space.n
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn space(&self) -> Space {
        self.geometry.space
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        self.geometry.coords()
    }

    pub fn arc_count(&self) -> usize {
        self.geometry.len()
    }
}

/// A complete undirected graph; nodes `0..=n` for the path family
/// (including the edge {0,n}, which no feasible path may use) and
/// `1..=n` for the cycle family.
#[derive(Debug, Clone)]
pub struct CompleteGraph {
    geometry: Geometry,
}

impl CompleteGraph {
    pub fn for_paths(n: usize) -> Result<Self> {
        Ok(CompleteGraph {
            geometry: Space::new(Variant::UndirectedPath, n)?.geometry(),
        })
    }

    pub fn for_cycles(n: usize) -> Result<Self> {
        Ok(CompleteGraph {
            geometry: Space::new(Variant::UndirectedCycle, n)?.geometry(),
        })
    }

    pub fn n(&self) -> usize {
        self.geometry.space.n
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn space(&self) -> Space {
        self.geometry.space
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.geometry.coords()
    }

    pub fn edge_count(&self) -> usize {
        self.geometry.len()
    }
}
