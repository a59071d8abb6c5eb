//! Exact rational max-flow / min-cut on small directed networks.
//!
//! Shortest augmenting paths (BFS) with exact rational residuals; the
//! number of augmentations is bounded combinatorially, so termination
//! does not depend on capacity values.

use crate::error::{invalid, Result};
use crate::rational::Rational;
use num_traits::Zero;

/// Directed flow network on dense node labels `0..node_count`.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    node_count: usize,
    // Forward/backward residual pairs: edge 2k is the k-th arc, 2k+1 its
    // reverse.
    heads: Vec<usize>,
    tails: Vec<usize>,
    residual: Vec<Rational>,
    adjacency: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(node_count: usize) -> Self {
        FlowNetwork {
            node_count,
            heads: Vec::new(),
            tails: Vec::new(),
            residual: Vec::new(),
            adjacency: vec![Vec::new(); node_count],
        }
    }

    pub fn add_arc(&mut self, tail: usize, head: usize, capacity: Rational) {
        debug_assert!(tail < self.node_count && head < self.node_count);
        debug_assert!(capacity >= Rational::zero());
        let e = self.residual.len();
        self.tails.push(tail);
        self.heads.push(head);
        self.residual.push(capacity);
        self.adjacency[tail].push(e);

        self.tails.push(head);
        self.heads.push(tail);
        self.residual.push(Rational::zero());
        self.adjacency[head].push(e + 1);
    }

    /// Exact max-flow value from `s` to `t` together with the source side
    /// of a minimum cut (the nodes reachable from `s` in the final
    /// residual network).
    pub fn max_flow(&mut self, s: usize, t: usize) -> Result<(Rational, Vec<usize>)> {
        if s == t {
            return Err(invalid("source and sink coincide"));
        }
        let mut value = Rational::zero();
        loop {
            // BFS for a shortest augmenting path.
            let mut parent_edge = vec![usize::MAX; self.node_count];
            let mut seen = vec![false; self.node_count];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in &self.adjacency[u] {
                    let v = self.heads[e];
                    if !seen[v] && self.residual[e] > Rational::zero() {
                        seen[v] = true;
                        parent_edge[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                let cut = (0..self.node_count).filter(|&v| seen[v]).collect();
                return Ok((value, cut));
            }
            // Bottleneck along the path.
            let mut bottleneck: Option<Rational> = None;
            let mut v = t;
            while v != s {
                let e = parent_edge[v];
                let r = &self.residual[e];
                if bottleneck.as_ref().is_none_or(|b| r < b) {
                    bottleneck = Some(r.clone());
                }
                v = self.tails[e];
            }
            let aug = bottleneck.expect("path has at least one edge");
            let mut v = t;
            while v != s {
                let e = parent_edge[v];
                self.residual[e] -= &aug;
                self.residual[e ^ 1] += &aug;
                v = self.tails[e];
            }
            value += aug;
        }
    }
}
