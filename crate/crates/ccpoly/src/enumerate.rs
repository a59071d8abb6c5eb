//! Exhaustive enumeration of cardinality-feasible paths and cycles, and
//! the 0/1 incidence vectors the rest of the crate consumes.
//!
//! Enumeration is depth-first with pruning by the largest allowed
//! cardinality and is intended for desk-scale graphs (n <= 10). Output
//! order is deterministic: lexicographic in the node sequence.

use crate::cardinality::CardinalitySequence;
use crate::error::{invalid, Error, Result};
use crate::graph::{CompleteDigraph, CompleteGraph, Geometry, PathDigraph, Space, Variant};
use crate::rational::{rat, Rational};
use num_traits::Zero;

/// 0/1 incidence vector of a simple path or cycle, indexed by the frozen
/// coordinate order of its space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceVector {
    space: Space,
    entries: Vec<bool>,
    cardinality: usize,
    /// Witness node sequence: path node order, or cycle node order in
    /// canonical rotation (smallest node first).
    sequence: Vec<usize>,
}

impl IncidenceVector {
    fn from_sequence(geometry: &Geometry, sequence: Vec<usize>, closes: bool) -> Self {
        let mut entries = vec![false; geometry.len()];
        let mut cardinality = 0;
        for w in sequence.windows(2) {
            let idx = geometry.index_of(w[0], w[1]).expect("coordinate exists");
            entries[idx] = true;
            cardinality += 1;
        }
        if closes {
            let idx = geometry
                .index_of(*sequence.last().unwrap(), sequence[0])
                .expect("closing coordinate exists");
            entries[idx] = true;
            cardinality += 1;
        }
        IncidenceVector {
            space: geometry.space,
            entries,
            cardinality,
            sequence,
        }
    }

    /// Incidence vector of the path visiting `nodes` in order.
    pub fn from_path_nodes(space: Space, nodes: &[usize]) -> Result<Self> {
        if !space.variant.is_path() {
            return Err(invalid("path incidence vector in a cycle space"));
        }
        let geometry = space.geometry();
        if nodes.len() < 2 || nodes.first() != Some(&0) || nodes.last() != Some(&space.n) {
            return Err(invalid("path must run from node 0 to node n"));
        }
        let mut seen = vec![false; space.n + 1];
        for &v in nodes {
            if v > space.n || seen[v] {
                return Err(invalid("path nodes must be distinct and in range"));
            }
            seen[v] = true;
        }
        for w in nodes.windows(2) {
            if geometry.index_of(w[0], w[1]).is_none() {
                return Err(invalid(format!("missing arc ({},{})", w[0], w[1])));
            }
        }
        Ok(Self::from_sequence(&geometry, nodes.to_vec(), false))
    }

    /// Incidence vector of the cycle visiting `nodes` in order and
    /// returning to the first node. The stored sequence is rotated so the
    /// smallest node comes first (undirected cycles additionally orient so
    /// the second node is smaller than the last).
    pub fn from_cycle_nodes(space: Space, nodes: &[usize]) -> Result<Self> {
        if space.variant.is_path() {
            return Err(invalid("cycle incidence vector in a path space"));
        }
        let min_len = space.variant.min_cardinality();
        if nodes.len() < min_len {
            return Err(invalid(format!("cycle needs at least {min_len} nodes")));
        }
        let mut seen = vec![false; space.n + 1];
        for &v in nodes {
            if v == 0 || v > space.n || seen[v] {
                return Err(invalid("cycle nodes must be distinct and in range"));
            }
            seen[v] = true;
        }
        let start = nodes
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        let mut rotated: Vec<usize> = nodes[start..]
            .iter()
            .chain(nodes[..start].iter())
            .copied()
            .collect();
        if !space.variant.is_directed() && rotated.len() > 2 && rotated[1] > rotated[rotated.len() - 1]
        {
            rotated[1..].reverse();
        }
        Ok(Self::from_sequence(&space.geometry(), rotated, true))
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn entries(&self) -> &[bool] {
        &self.entries
    }

    /// Number of arcs/edges used; equals the number of ones.
    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Indices of the coordinates set to one.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    /// Inner product with a coefficient row of matching length.
    pub fn dot(&self, coeffs: &[Rational]) -> Rational {
        debug_assert_eq!(coeffs.len(), self.entries.len());
        let mut acc = Rational::zero();
        for i in self.support() {
            acc += &coeffs[i];
        }
        acc
    }

    /// As a dense rational vector.
    pub fn to_rationals(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|&b| if b { rat(1) } else { rat(0) })
            .collect()
    }

    /// Structural sanity check from the entries alone: 0/1 cardinality
    /// count, flow conservation, and degree bounds for the family.
    pub fn validate(&self) -> Result<()> {
        let geometry = self.space.geometry();
        let ones = self.support().count();
        if ones != self.cardinality {
            return Err(Error::Internal("cardinality does not match support".into()));
        }
        let n = self.space.n;
        let mut out_deg = vec![0usize; n + 1];
        let mut in_deg = vec![0usize; n + 1];
        for i in self.support() {
            let (u, v) = geometry.coords()[i];
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
        match self.space.variant {
            Variant::Path => {
                if out_deg[0] != 1 || in_deg[0] != 0 || in_deg[n] != 1 || out_deg[n] != 0 {
                    return Err(Error::Internal("path endpoint degrees wrong".into()));
                }
                for v in 1..n {
                    if out_deg[v] != in_deg[v] || out_deg[v] > 1 {
                        return Err(Error::Internal("path flow conservation violated".into()));
                    }
                }
            }
            Variant::Cycle => {
                for v in 1..=n {
                    if out_deg[v] != in_deg[v] || out_deg[v] > 1 {
                        return Err(Error::Internal("cycle flow conservation violated".into()));
                    }
                }
            }
            Variant::UndirectedPath | Variant::UndirectedCycle => {
                // Undirected: in/out split is meaningless, count total degree.
                let first = if self.space.variant == Variant::UndirectedPath { 0 } else { 1 };
                for v in first..=n {
                    let deg = out_deg[v] + in_deg[v];
                    let expected = match self.space.variant {
                        Variant::UndirectedPath if v == 0 || v == n => 1,
                        _ => {
                            if deg == 0 {
                                0
                            } else {
                                2
                            }
                        }
                    };
                    if deg != expected {
                        return Err(Error::Internal(format!("node {v} has degree {deg}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// All simple directed (0,n)-paths in the path digraph whose arc count is
/// an allowed cardinality, each exactly once, in lexicographic order of
/// the node sequence.
pub fn enumerate_paths(
    digraph: &PathDigraph,
    c: &CardinalitySequence,
) -> Vec<IncidenceVector> {
    let n = digraph.n();
    let space = digraph.space();
    let geometry = digraph.geometry();
    let max_len = c.last().min(n);
    let mut out = Vec::new();
    let mut visited = vec![false; n + 1];
    let mut stack = vec![0usize];
    visited[0] = true;

    fn dfs(
        n: usize,
        c: &CardinalitySequence,
        max_len: usize,
        geometry: &Geometry,
        visited: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        out: &mut Vec<IncidenceVector>,
    ) {
        let u = *stack.last().unwrap();
        let used = stack.len() - 1;
        // One more arc reaches n at the earliest.
        if used + 1 > max_len {
            return;
        }
        let heads: Vec<usize> = if u == 0 {
            (1..n).collect()
        } else {
            // Internal node: every other internal node, then n, ascending.
            (1..=n).filter(|&j| j != u).collect()
        };
        for j in heads {
            if j == n {
                if c.contains(used + 1) {
                    stack.push(n);
                    out.push(IncidenceVector::from_sequence(geometry, stack.clone(), false));
                    stack.pop();
                }
                continue;
            }
            if visited[j] {
                continue;
            }
            visited[j] = true;
            stack.push(j);
            dfs(n, c, max_len, geometry, visited, stack, out);
            stack.pop();
            visited[j] = false;
        }
    }

    if max_len >= 2 {
        dfs(n, c, max_len, geometry, &mut visited, &mut stack, &mut out);
    }
    let _ = space;
    out
}

/// All simple directed cycles of allowed cardinality in the complete
/// digraph, each exactly once (canonical rotation: smallest node first).
pub fn enumerate_cycles(
    digraph: &CompleteDigraph,
    c: &CardinalitySequence,
) -> Result<Vec<IncidenceVector>> {
    if c.first() < 2 {
        return Err(invalid("cycle cardinalities must start at 2 or more"));
    }
    enumerate_cycles_in(digraph.geometry(), c, digraph.n(), None)
}

/// Directed cycles of allowed cardinality that visit `anchor`; the vertex
/// set of the cycle polytope restricted to the facet x(delta_out(anchor))=1.
pub fn enumerate_cycles_through(
    digraph: &CompleteDigraph,
    c: &CardinalitySequence,
    anchor: usize,
) -> Result<Vec<IncidenceVector>> {
    if c.first() < 2 {
        return Err(invalid("cycle cardinalities must start at 2 or more"));
    }
    if anchor == 0 || anchor > digraph.n() {
        return Err(invalid("anchor node out of range"));
    }
    enumerate_cycles_in(digraph.geometry(), c, digraph.n(), Some(anchor))
}

/// Directed cycles of allowed cardinality inside the path digraph; these
/// use internal nodes only. Incidence vectors live in the path space.
pub fn enumerate_path_digraph_cycles(
    digraph: &PathDigraph,
    c: &CardinalitySequence,
) -> Result<Vec<IncidenceVector>> {
    if c.first() < 2 {
        return Err(invalid("cycle cardinalities must start at 2 or more"));
    }
    // Cycles avoid 0 and n, so they live on the internal complete digraph.
    let geometry = digraph.geometry();
    let mut out = Vec::new();
    let nodes: Vec<usize> = (1..digraph.n()).collect();
    cycles_dfs(geometry, c, &nodes, None, &mut out);
    Ok(out)
}

fn enumerate_cycles_in(
    geometry: &Geometry,
    c: &CardinalitySequence,
    n: usize,
    anchor: Option<usize>,
) -> Result<Vec<IncidenceVector>> {
    let mut out = Vec::new();
    let nodes: Vec<usize> = (1..=n).collect();
    cycles_dfs(geometry, c, &nodes, anchor, &mut out);
    Ok(out)
}

fn cycles_dfs(
    geometry: &Geometry,
    c: &CardinalitySequence,
    nodes: &[usize],
    anchor: Option<usize>,
    out: &mut Vec<IncidenceVector>,
) {
    let max_len = c.last().min(nodes.len());
    if max_len < 2 {
        return;
    }
    let mut visited = vec![false; nodes.last().map_or(0, |&v| v + 1)];

    fn dfs(
        geometry: &Geometry,
        c: &CardinalitySequence,
        nodes: &[usize],
        anchor: Option<usize>,
        max_len: usize,
        start: usize,
        visited: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        out: &mut Vec<IncidenceVector>,
    ) {
        let u = *stack.last().unwrap();
        let len_closed = stack.len(); // arcs if we close now
        if len_closed >= 2
            && c.contains(len_closed)
            && anchor.map_or(true, |a| stack.contains(&a))
        {
            out.push(IncidenceVector::from_sequence(geometry, stack.clone(), true));
        }
        if len_closed + 1 > max_len {
            return;
        }
        let _ = u;
        for &v in nodes.iter().filter(|&&v| v > start) {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            stack.push(v);
            dfs(geometry, c, nodes, anchor, max_len, start, visited, stack, out);
            stack.pop();
            visited[v] = false;
        }
    }

    for &start in nodes {
        if let Some(a) = anchor {
            // Anchored cycles must contain a; once start passes a, the
            // canonical minimum can no longer include it.
            if start > a {
                break;
            }
        }
        visited[start] = true;
        let mut stack = vec![start];
        dfs(
            geometry, c, nodes, anchor, max_len, start, &mut visited, &mut stack, out,
        );
        visited[start] = false;
    }
}

/// All undirected cycles of allowed cardinality in the complete graph,
/// each exactly once (smallest node first, orientation with the smaller
/// second node).
pub fn enumerate_undirected_cycles(
    graph: &CompleteGraph,
    c: &CardinalitySequence,
) -> Result<Vec<IncidenceVector>> {
    if graph.space().variant != Variant::UndirectedCycle {
        return Err(invalid("graph is not an undirected cycle carrier"));
    }
    if c.first() < 3 {
        return Err(invalid("undirected cycle cardinalities must start at 3 or more"));
    }
    let n = graph.n();
    let geometry = graph.geometry();
    let max_len = c.last().min(n);
    let mut out = Vec::new();
    let mut visited = vec![false; n + 1];

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        geometry: &Geometry,
        c: &CardinalitySequence,
        n: usize,
        max_len: usize,
        start: usize,
        visited: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        out: &mut Vec<IncidenceVector>,
    ) {
        let len_closed = stack.len();
        if len_closed >= 3 && c.contains(len_closed) && stack[1] < *stack.last().unwrap() {
            out.push(IncidenceVector::from_sequence(geometry, stack.clone(), true));
        }
        if len_closed + 1 > max_len {
            return;
        }
        for v in (start + 1)..=n {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            stack.push(v);
            dfs(geometry, c, n, max_len, start, visited, stack, out);
            stack.pop();
            visited[v] = false;
        }
    }

    for start in 1..=n {
        visited[start] = true;
        let mut stack = vec![start];
        dfs(geometry, c, n, max_len, start, &mut visited, &mut stack, &mut out);
        visited[start] = false;
    }
    Ok(out)
}

/// All undirected (0,n)-paths of allowed cardinality in the complete
/// graph on nodes 0..=n.
pub fn enumerate_undirected_paths(
    graph: &CompleteGraph,
    c: &CardinalitySequence,
) -> Result<Vec<IncidenceVector>> {
    if graph.space().variant != Variant::UndirectedPath {
        return Err(invalid("graph is not an undirected path carrier"));
    }
    let n = graph.n();
    let geometry = graph.geometry();
    let max_len = c.last().min(n);
    let mut out = Vec::new();
    if max_len < 2 {
        return Ok(out);
    }
    let mut visited = vec![false; n + 1];
    visited[0] = true;
    let mut stack = vec![0usize];

    fn dfs(
        geometry: &Geometry,
        c: &CardinalitySequence,
        n: usize,
        max_len: usize,
        visited: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        out: &mut Vec<IncidenceVector>,
    ) {
        let used = stack.len() - 1;
        if used + 1 > max_len {
            return;
        }
        // Close to n (cardinality >= 2 rules out the direct {0,n} edge).
        if used + 1 >= 2 && c.contains(used + 1) {
            stack.push(n);
            out.push(IncidenceVector::from_sequence(geometry, stack.clone(), false));
            stack.pop();
        }
        for v in 1..n {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            stack.push(v);
            dfs(geometry, c, n, max_len, visited, stack, out);
            stack.pop();
            visited[v] = false;
        }
    }

    dfs(geometry, c, n, max_len, &mut visited, &mut stack, &mut out);
    Ok(out)
}

/// Enumerates the vertex set of any of the four polytope families.
pub fn enumerate_vertices(space: Space, c: &CardinalitySequence) -> Result<Vec<IncidenceVector>> {
    match space.variant {
        Variant::Path => Ok(enumerate_paths(&PathDigraph::new(space.n)?, c)),
        Variant::Cycle => enumerate_cycles(&CompleteDigraph::new(space.n)?, c),
        Variant::UndirectedPath => enumerate_undirected_paths(&CompleteGraph::for_paths(space.n)?, c),
        Variant::UndirectedCycle => {
            enumerate_undirected_cycles(&CompleteGraph::for_cycles(space.n)?, c)
        }
    }
}
