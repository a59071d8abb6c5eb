//! Cross-module invariants: enumerated vertices satisfy their defining
//! systems, generator output is valid wherever the classification claims
//! validity, the rank machinery reproduces the hand-built dimension
//! argument, and the oracles agree with brute force beyond the classes
//! the acceptance suite covers.

use ccpoly::cardinality::{cseq, CardinalitySequence};
use ccpoly::enumerate::{
    enumerate_cycles, enumerate_paths, enumerate_vertices, IncidenceVector,
};
use ccpoly::generators;
use ccpoly::graph::{CompleteDigraph, PathDigraph, Space, Variant};
use ccpoly::facet::validity_predicate;
use ccpoly::linalg::{RankAccumulator, RationalMatrix};
use ccpoly::rational::{rat, ratio, Rational};
use ccpoly::separation::{separate_mcf, separate_one_sided_min_cut, FractionalPoint};
use ccpoly::simplex::lp_solve;
use ccpoly::solver::{Instance, Objective};
use ccpoly::transform::lift_path_to_cycle;
use ccpoly::verify::{catalog, is_valid, sweep_instances};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every enumerated path vertex satisfies the full path system: flow
/// conservation, degree bounds, cardinality bounds, one-sided min-cut
/// and node cardinality forcing, for every parameter choice.
#[test]
fn path_vertices_satisfy_their_model() {
    for n in [5usize, 6] {
        let d = PathDigraph::new(n).unwrap();
        let g = d.geometry();
        let c = cseq(&[2, 4]);
        let vertices = enumerate_paths(&d, &c);
        let mut system = Vec::new();
        for i in 0..=n {
            system.push(generators::flow_conservation(&g, i).unwrap());
        }
        for i in 1..n {
            system.push(generators::degree_constraint(&g, i).unwrap());
        }
        let (lo, hi) = generators::cardinality_bounds(&g, &c);
        system.push(lo);
        system.push(hi);
        for ineq in sweep_instances(
            &catalog().into_iter().find(|cl| cl.id() == "osmc-path").unwrap(),
            n,
            &c,
        )
        .unwrap()
        {
            system.push(ineq);
        }
        for ineq in sweep_instances(
            &catalog().into_iter().find(|cl| cl.id() == "cf-node-path").unwrap(),
            n,
            &c,
        )
        .unwrap()
        {
            system.push(ineq);
        }
        for ineq in &system {
            let check = is_valid(ineq, &vertices).unwrap();
            assert!(check.valid, "n={n}: {} violated", ineq.class.describe());
        }
    }
}

/// Every enumerated cycle vertex satisfies the full cycle system,
/// including multiple cycle exclusion.
#[test]
fn cycle_vertices_satisfy_their_model() {
    for n in [5usize, 6] {
        let d = CompleteDigraph::new(n).unwrap();
        let g = d.geometry();
        let c = cseq(&[2, 4]);
        let vertices = enumerate_cycles(&d, &c).unwrap();
        let mut system = Vec::new();
        for i in 1..=n {
            system.push(generators::flow_conservation(&g, i).unwrap());
            system.push(generators::degree_constraint(&g, i).unwrap());
        }
        let (lo, hi) = generators::cardinality_bounds(&g, &c);
        system.push(lo);
        system.push(hi);
        for id in ["multi-cycle-excl-cycle", "cf-node-cycle"] {
            for ineq in sweep_instances(
                &catalog().into_iter().find(|cl| cl.id() == id).unwrap(),
                n,
                &c,
            )
            .unwrap()
            {
                system.push(ineq);
            }
        }
        for ineq in &system {
            let check = is_valid(ineq, &vertices).unwrap();
            assert!(check.valid, "n={n}: {} violated", ineq.class.describe());
        }
    }
}

/// Wherever the encoded validity condition claims an instance valid, the
/// enumeration confirms it; checked for every class over n <= 7.
#[test]
fn generator_validity_matches_enumeration() {
    let schedules: Vec<(Variant, Vec<Vec<usize>>)> = vec![
        (Variant::Path, vec![vec![2, 4], vec![3, 5], vec![2, 4, 6]]),
        (Variant::Cycle, vec![vec![2, 4], vec![3, 5], vec![2, 4, 6]]),
        (Variant::UndirectedPath, vec![vec![2, 4], vec![3, 5]]),
        (Variant::UndirectedCycle, vec![vec![3, 5], vec![3, 4, 6]]),
    ];
    let mut checked = 0usize;
    for class in catalog() {
        let Some((_, c_lists)) = schedules.iter().find(|(v, _)| *v == class.variant) else {
            continue;
        };
        if class.anchored {
            continue; // anchored vertex sets are exercised by the sweeps
        }
        for n in [5usize, 7] {
            for values in c_lists {
                if values.last().copied().unwrap_or(0) > n {
                    continue;
                }
                let c = cseq(values);
                let Ok(instances) = sweep_instances(&class, n, &c) else {
                    continue; // parity or family mismatch
                };
                let space = Space::new(class.variant, n).unwrap();
                let vertices = enumerate_vertices(space, &c).unwrap();
                for ineq in instances {
                    if validity_predicate(&ineq, &c) {
                        let check = is_valid(&ineq, &vertices).unwrap();
                        assert!(
                            check.valid,
                            "{} n={n} c={c}: {} claimed valid but violated",
                            class.id(),
                            ineq.class.describe()
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 2000, "validity coverage too small: {checked}");
}

/// The dimension argument for the two-cardinality polytope with sizes
/// 2 and n builds a block matrix from Hamiltonian-cycle rows padded with
/// zero loop indicators plus selected 2-cycle rows; its rank is
/// n^2 - 2n + 2. Reproduced here for n = 5 with exact arithmetic.
#[test]
fn block_matrix_rank_matches_dimension_argument() {
    let n = 5usize;
    let d = CompleteDigraph::new(n).unwrap();
    let g = d.geometry();
    let arc_count = g.len();

    // Loop indicators: y_i = 1 - (out-degree of i), so Hamiltonian rows
    // carry y = 0.
    let extend = |v: &IncidenceVector| -> Vec<Rational> {
        let mut row = v.to_rationals();
        let mut out_deg = vec![0i64; n + 1];
        for idx in v.support() {
            let (u, _) = g.coords()[idx];
            out_deg[u] += 1;
        }
        for i in 1..=n {
            row.push(rat(1 - out_deg[i]));
        }
        row
    };

    // A maximal linearly independent family of Hamiltonian cycles; the
    // single-cardinality polytope of tours has dimension n^2 - 3n + 1,
    // so exactly n^2 - 3n + 2 = 12 of them are linearly independent.
    let hamiltonians = enumerate_cycles(&d, &cseq(&[n])).unwrap();
    let mut acc = RankAccumulator::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for h in &hamiltonians {
        let row = extend(h);
        if acc.add_rational_row(&row) {
            rows.push(row);
        }
    }
    assert_eq!(rows.len(), n * n - 3 * n + 2);

    // One 2-cycle avoiding node 1, then the star of 2-cycles at node 1.
    let two_cycle = |a: usize, b: usize| {
        extend(&IncidenceVector::from_cycle_nodes(d.space(), &[a, b]).unwrap())
    };
    rows.push(two_cycle(2, 3));
    for i in 2..=n {
        rows.push(two_cycle(1, i));
    }
    assert_eq!(rows.len(), 17);
    assert_eq!(rows[0].len(), arc_count + n);

    let matrix = RationalMatrix::from_rows(rows).unwrap();
    assert_eq!(matrix.rank(), n * n - 2 * n + 2); // 17
}

/// Modified cardinality-forcing separation: the per-excluded-node greedy
/// equals exhaustive enumeration over all partitions.
#[test]
fn mcf_separation_matches_brute_force() {
    let c = cseq(&[2, 3, 5, 7]);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in [7usize, 8] {
        let space = Space::new(Variant::Cycle, n).unwrap();
        let g = space.geometry();
        for _ in 0..25 {
            let entries: Vec<Rational> = (0..g.len())
                .map(|_| {
                    let den = rng.gen_range(1..=5i64);
                    ratio(rng.gen_range(0..=den), den)
                })
                .collect();
            let point = FractionalPoint::new(space, entries).unwrap();
            let oracle = separate_mcf(&point, &c).unwrap();

            // Brute force over every (P, Q, r) with the ladder bracket.
            let mut best: Option<Rational> = None;
            let nodes: Vec<usize> = (1..=n).collect();
            let size = c.at(2) + 1; // the single valid bracket is p = 2
            for mask in 0..(1u64 << n) {
                if (mask.count_ones() as usize) != size {
                    continue;
                }
                let p_set: Vec<usize> = nodes
                    .iter()
                    .filter(|&&v| mask >> (v - 1) & 1 == 1)
                    .copied()
                    .collect();
                for &r in nodes.iter().filter(|&&v| mask >> (v - 1) & 1 == 0) {
                    let q_set: Vec<usize> = nodes
                        .iter()
                        .filter(|&&v| mask >> (v - 1) & 1 == 0 && v != r)
                        .copied()
                        .collect();
                    let ineq = generators::modified_cf(&g, &p_set, &q_set, r, &c, 2).unwrap();
                    let violation = ineq.violation(point.entries()).unwrap();
                    if violation > rat(0) && best.as_ref().is_none_or(|b| violation > *b) {
                        best = Some(violation);
                    }
                }
            }
            match (oracle.best_violation(), &best) {
                (None, None) => {}
                (Some(a), Some(b)) => assert_eq!(a, b, "n={n}"),
                (a, b) => panic!("mcf mismatch n={n}: oracle={a:?} brute={b:?}"),
            }
        }
    }
}

/// A half-unit cycle through a node plus a feasible path avoiding it
/// yields a one-sided min-cut violation of exactly one half.
#[test]
fn osmc_half_violation_construction() {
    let n = 6;
    let space = Space::new(Variant::Path, n).unwrap();
    let g = space.geometry();
    let mut entries = vec![rat(0); g.len()];
    // Unit path 0 -> 1 -> 6 and half of the 3-cycle 3,4,5.
    entries[g.index_of(0, 1).unwrap()] = rat(1);
    entries[g.index_of(1, 6).unwrap()] = rat(1);
    for (u, v) in [(3, 4), (4, 5), (5, 3)] {
        entries[g.index_of(u, v).unwrap()] = ratio(1, 2);
    }
    let point = FractionalPoint::new(space, entries).unwrap();
    let result = separate_one_sided_min_cut(&point, 8).unwrap();
    assert_eq!(*result.best_violation().unwrap(), ratio(1, 2));
    // Exhaustive confirmation: inflow 1/2 at the cycle nodes against a
    // zero cut.
    let s = vec![0, 1, 2, 6];
    let ineq = generators::one_sided_min_cut(&g, &s, 4).unwrap();
    assert_eq!(ineq.violation(point.entries()).unwrap(), ratio(1, 2));
}

/// Lifting a one-sided min-cut facet of the path polytope produces the
/// multiple cycle exclusion form: some instance of that class cuts out
/// exactly the same face of the cycle polytope.
#[test]
fn lifted_osmc_is_a_multiple_cycle_exclusion() {
    let n = 6;
    let c = cseq(&[3, 5]);
    let d = PathDigraph::new(n).unwrap();
    let osmc = generators::one_sided_min_cut(d.geometry(), &[0, 1, 2, 6], 3).unwrap();
    let lifted = lift_path_to_cycle(&osmc, &c).unwrap();

    let cycle_space = Space::new(Variant::Cycle, n).unwrap();
    let vertices = enumerate_vertices(cycle_space, &c).unwrap();
    let lifted_tight: Vec<bool> = vertices
        .iter()
        .map(|v| lifted.tight_at(v).unwrap())
        .collect();

    let mcec_instances = sweep_instances(
        &catalog().into_iter().find(|cl| cl.id() == "multi-cycle-excl-cycle").unwrap(),
        n,
        &c,
    )
    .unwrap();
    let found = mcec_instances.iter().any(|m| {
        vertices
            .iter()
            .zip(&lifted_tight)
            .all(|(v, &t)| m.tight_at(v).unwrap() == t)
    });
    assert!(found, "no multiple cycle exclusion instance shares the lifted face");
}

/// The LP relaxation of the path system lower-bounds the integer
/// optimum.
#[test]
fn lp_relaxation_bounds_integer_optimum() {
    let n = 6;
    let space = Space::new(Variant::Path, n).unwrap();
    let g = space.geometry();
    let c = cseq(&[2, 4]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let weights: Vec<Rational> = (0..g.len())
            .map(|_| ratio(rng.gen_range(0..=30), rng.gen_range(1..=4)))
            .collect();
        let mut rows = Vec::new();
        for i in 0..=n {
            rows.push(generators::flow_conservation(&g, i).unwrap());
        }
        for i in 1..n {
            rows.push(generators::degree_constraint(&g, i).unwrap());
        }
        let (lo, hi) = generators::cardinality_bounds(&g, &c);
        rows.push(lo);
        rows.push(hi);
        let lp = lp_solve(&rows, &weights).unwrap();
        let lp_value = lp.value.unwrap();

        let instance =
            Instance::new(space, c.clone(), weights.clone(), Objective::Minimize).unwrap();
        let integer_optimum = ccpoly::solver::enumeration_optimum(&instance)
            .unwrap()
            .unwrap()
            .0;
        assert!(lp_value <= integer_optimum);
    }
}

/// Anchored vertex sets (cycles through node 1) span a polytope of path
/// dimension.
#[test]
fn anchored_polytope_has_path_dimension() {
    for n in [5usize, 6] {
        let d = CompleteDigraph::new(n).unwrap();
        let c = cseq(&[2, 4]);
        let anchored = ccpoly::enumerate::enumerate_cycles_through(&d, &c, 1).unwrap();
        let dim = ccpoly::verify::dimension_of(&anchored);
        assert_eq!(dim, (n * n - 2 * n) as isize);
    }
}

/// Fractional points must be rejected when negative or misshapen.
#[test]
fn fractional_point_validation() {
    let space = Space::new(Variant::Path, 5).unwrap();
    let d = space.geometry().len();
    assert!(FractionalPoint::new(space, vec![rat(0); d - 1]).is_err());
    let mut negative = vec![rat(0); d];
    negative[0] = rat(-1);
    assert!(FractionalPoint::new(space, negative).is_err());
}

/// Cardinality sequences admit only in-range brackets.
#[test]
fn out_of_range_brackets_rejected() {
    let d = CompleteDigraph::new(6).unwrap();
    let c: CardinalitySequence = cseq(&[2, 4, 6]);
    assert!(generators::cf_node(d.geometry(), &[1, 2, 3], &c, 3).is_err());
    assert!(generators::cf_node(d.geometry(), &[1, 2, 3], &c, 0).is_err());
}
