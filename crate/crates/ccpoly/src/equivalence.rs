//! Equivalence transformations of directed inequalities.
//!
//! Adding multiples of the flow-conservation equations to an inequality
//! changes its coefficients but not the face it defines. Two operations
//! exploit this: `normalize` prescribes arbitrary coefficients on a
//! spanning tree, and `symmetrize` finds the equivalent (pseudo-)symmetric
//! form when one exists.

use crate::error::{invalid, Result};
use crate::graph::Variant;
use crate::inequality::{ClassSpec, LinearInequality};
use crate::rational::{rat, Rational};
use std::collections::BTreeMap;

/// Solves node potentials over a spanning tree: for each tree arc (u, v)
/// with prescribed difference d(u,v), find t with t_u - t_v = d(u,v).
/// Returns None when the arcs do not form a spanning tree.
fn tree_potentials(
    nodes: &[usize],
    tree: &[(usize, usize)],
    diff: impl Fn(usize, usize) -> Rational,
) -> Option<BTreeMap<usize, Rational>> {
    if tree.len() + 1 != nodes.len() {
        return None;
    }
    let mut adjacency: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for &v in nodes {
        adjacency.insert(v, Vec::new());
    }
    for &(u, v) in tree {
        if !adjacency.contains_key(&u) || !adjacency.contains_key(&v) {
            return None;
        }
        let d = diff(u, v);
        adjacency.get_mut(&u).unwrap().push((v, d.clone()));
        adjacency.get_mut(&v).unwrap().push((u, -d));
    }
    let root = *nodes.first()?;
    let mut t: BTreeMap<usize, Rational> = BTreeMap::new();
    t.insert(root, rat(0));
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        let tu = t[&u].clone();
        for (v, d) in adjacency[&u].clone() {
            // t_u - t_v = d, so t_v = t_u - d.
            let tv = &tu - &d;
            if let Some(prev) = t.get(&v) {
                if *prev != tv {
                    return None; // cycle with inconsistent labels: not a tree
                }
            } else {
                t.insert(v, tv);
                stack.push(v);
            }
        }
    }
    if t.len() != nodes.len() {
        return None; // disconnected
    }
    Some(t)
}

/// Rewrites `ineq` into the equivalent inequality whose coefficients on
/// the given spanning-tree arcs equal the prescribed targets. The face
/// cut out of the polytope is unchanged; on every feasible point the
/// left-hand side minus the right-hand side is numerically identical.
pub fn normalize(
    ineq: &LinearInequality,
    tree: &[(usize, usize)],
    targets: &BTreeMap<(usize, usize), Rational>,
) -> Result<LinearInequality> {
    let space = ineq.space;
    if !space.variant.is_directed() {
        return Err(invalid("normalization uses flow conservation; directed spaces only"));
    }
    let geometry = space.geometry();
    for &(u, v) in tree {
        if geometry.index_of(u, v).is_none() {
            return Err(invalid(format!("tree arc ({u},{v}) is not an arc of {space}")));
        }
        if !targets.contains_key(&(u, v)) {
            return Err(invalid(format!("no target coefficient for tree arc ({u},{v})")));
        }
    }
    if targets.len() != tree.len() {
        return Err(invalid("targets must be defined exactly on the tree arcs"));
    }
    let nodes = space.nodes();
    let potentials = tree_potentials(&nodes, tree, |u, v| {
        let idx = geometry.index_of(u, v).unwrap();
        targets[&(u, v)].clone() - &ineq.coeffs[idx]
    })
    .ok_or_else(|| invalid("arcs do not form a spanning tree"))?;

    let coeffs: Vec<Rational> = geometry
        .coords()
        .iter()
        .zip(&ineq.coeffs)
        .map(|(&(u, v), c)| c + &potentials[&u] - &potentials[&v])
        .collect();
    // Flow right-hand sides: +1 at the source, -1 at the sink, 0 elsewhere
    // (identically 0 for cycle spaces).
    let rhs = match space.variant {
        Variant::Path => ineq.rhs.clone() + &potentials[&0] - &potentials[&space.n],
        _ => ineq.rhs.clone(),
    };
    Ok(LinearInequality {
        space,
        coeffs,
        sense: ineq.sense,
        rhs,
        class: ClassSpec::Custom,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryMode {
    /// Coefficients equal on opposite arcs for every node pair (cycle
    /// space).
    Symmetric,
    /// Coefficients equal on opposite arcs for internal node pairs only
    /// (path space).
    PseudoSymmetric,
}

fn opposite(ineq: &LinearInequality, u: usize, v: usize) -> (Rational, Rational) {
    let geometry = ineq.space.geometry();
    let a = geometry.index_of(u, v).map_or_else(|| rat(0), |i| ineq.coeffs[i].clone());
    let b = geometry.index_of(v, u).map_or_else(|| rat(0), |i| ineq.coeffs[i].clone());
    (a, b)
}

fn pair_pool(ineq: &LinearInequality, mode: SymmetryMode) -> Result<Vec<usize>> {
    match (mode, ineq.space.variant) {
        (SymmetryMode::Symmetric, Variant::Cycle) => Ok(ineq.space.nodes()),
        (SymmetryMode::PseudoSymmetric, Variant::Path) => Ok(ineq.space.internal_nodes()),
        _ => Err(invalid(
            "symmetric mode applies to cycle spaces, pseudo-symmetric to path spaces",
        )),
    }
}

/// True when the coefficients already satisfy the symmetry required by
/// `mode`.
pub fn is_symmetric(ineq: &LinearInequality, mode: SymmetryMode) -> Result<bool> {
    let pool = pair_pool(ineq, mode)?;
    for (i, &u) in pool.iter().enumerate() {
        for &v in &pool[i + 1..] {
            let (a, b) = opposite(ineq, u, v);
            if a != b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Finds the equivalent (pseudo-)symmetric inequality when one exists:
/// the potential system t_u - t_v = c_uv - c_vu over the relevant node
/// pairs must be consistent. Returns None when it is not; already
/// symmetric inputs are returned unchanged. The transformed inequality is
/// scaled by 2 to keep coefficients integral when the input is.
pub fn symmetrize(
    ineq: &LinearInequality,
    mode: SymmetryMode,
) -> Result<Option<LinearInequality>> {
    let pool = pair_pool(ineq, mode)?;
    if is_symmetric(ineq, mode)? {
        return Ok(Some(ineq.clone()));
    }
    // Solve t over the pool from the first node, then verify every pair.
    let root = pool[0];
    let mut t: BTreeMap<usize, Rational> = BTreeMap::new();
    t.insert(root, rat(0));
    for &v in &pool[1..] {
        let (a, b) = opposite(ineq, root, v);
        t.insert(v, b - a); // t_v = t_root - (c_rv - c_vr)
    }
    for (i, &u) in pool.iter().enumerate() {
        for &v in &pool[i + 1..] {
            let (a, b) = opposite(ineq, u, v);
            if &t[&u] - &t[&v] != a - b {
                return Ok(None);
            }
        }
    }
    let tt = |z: usize| t.get(&z).cloned().unwrap_or_else(|| rat(0));
    let geometry = ineq.space.geometry();
    // alpha'' = 2c_uv - t_u + t_v: symmetric on the pool pairs, integral
    // whenever the input is, and equivalent to 2x the original.
    let coeffs: Vec<Rational> = geometry
        .coords()
        .iter()
        .zip(&ineq.coeffs)
        .map(|(&(u, v), c)| rat(2) * c - tt(u) + tt(v))
        .collect();
    let out = LinearInequality {
        space: ineq.space,
        coeffs,
        sense: ineq.sense,
        rhs: rat(2) * &ineq.rhs,
        class: ClassSpec::Custom,
    };
    debug_assert!(is_symmetric(&out, mode)?);
    Ok(Some(out))
}
