//! Moves a facet between the four polytope families: a path-polytope
//! inequality is lifted to the cycle polytope, then symmetrized and
//! deoriented to the undirected cycle polytope, with facet certification
//! after each step.

use ccpoly::cardinality::cseq;
use ccpoly::enumerate::enumerate_vertices;
use ccpoly::equivalence::{symmetrize, SymmetryMode};
use ccpoly::generators;
use ccpoly::graph::{PathDigraph, Space, Variant};
use ccpoly::transform::{deorient, lift_path_to_cycle};
use ccpoly::verify::{dimension_of, is_facet, is_valid};

fn certify(label: &str, ineq: &ccpoly::inequality::LinearInequality, c: &ccpoly::CardinalitySequence) {
    let vertices = enumerate_vertices(ineq.space, c).unwrap();
    let dim = dimension_of(&vertices);
    let valid = is_valid(ineq, &vertices).unwrap().valid;
    let facet = valid && is_facet(ineq, &vertices, dim).unwrap();
    println!("{label}");
    println!("  {}", ineq.render());
    println!("  space {} dim {dim}: valid={valid} facet={facet}", ineq.space);
    assert!(valid && facet);
}

fn main() {
    let n = 6;
    let c = cseq(&[3, 5]);
    let d = PathDigraph::new(n).unwrap();

    // A one-sided min-cut facet of the path polytope.
    let osmc = generators::one_sided_min_cut(d.geometry(), &[0, 1, 2, 3, 6], 4).unwrap();
    certify("path polytope inequality", &osmc, &c);

    // Lift to the cycle polytope (the endpoints merge into node n).
    let lifted = lift_path_to_cycle(&osmc, &c).unwrap();
    certify("lifted to the cycle polytope", &lifted, &c);

    // The cycle-space one-sided min-cut is symmetrizable and deorients to
    // the undirected cycle polytope.
    let cycle_space = Space::new(Variant::Cycle, n).unwrap();
    let cycle_osmc =
        generators::one_sided_min_cut(&cycle_space.geometry(), &[1, 2, 3, 4], 5).unwrap();
    certify("cycle polytope inequality", &cycle_osmc, &c);

    let symmetric = symmetrize(&cycle_osmc, SymmetryMode::Symmetric)
        .unwrap()
        .expect("equivalent symmetric form exists");
    let undirected = deorient(&symmetric).unwrap();
    certify("deoriented to the undirected cycle polytope", &undirected, &c);

    // Odd cycle exclusion is the canonical counterexample: no symmetric
    // equivalent exists, so it cannot be deoriented.
    let odd = generators::parity_exclusion(
        &cycle_space.geometry(),
        &[1, 2],
        &[3, 4, 5],
        generators::Parity::Odd,
        &cseq(&[2, 4]),
    )
    .unwrap();
    assert!(symmetrize(&odd, SymmetryMode::Symmetric).unwrap().is_none());
    println!("odd cycle exclusion: no symmetric equivalent (as expected)");
}
