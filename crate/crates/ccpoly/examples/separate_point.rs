//! Builds a fractional point that no single path explains (half a unit of
//! direct flow plus a detached fractional cycle) and runs the separation
//! oracles against it.

use ccpoly::cardinality::cseq;
use ccpoly::graph::{Space, Variant};
use ccpoly::rational::{display, rat, ratio};
use ccpoly::separation::{
    separate_cardinality_subgraph, separate_cf_greedy, separate_one_sided_min_cut,
    FractionalPoint,
};

fn main() {
    let n = 6;
    let space = Space::new(Variant::Path, n).unwrap();
    let g = space.geometry();
    let c = cseq(&[2, 4]);

    // One unit of 0 -> 1 -> 6 flow plus two thirds of the 3-cycle 2,3,4.
    let mut entries = vec![rat(0); g.len()];
    entries[g.index_of(0, 1).unwrap()] = rat(1);
    entries[g.index_of(1, 6).unwrap()] = rat(1);
    for (u, v) in [(2, 3), (3, 4), (4, 2)] {
        entries[g.index_of(u, v).unwrap()] = ratio(2, 3);
    }
    let point = FractionalPoint::new(space, entries).unwrap();

    println!("point entries:");
    for (i, &(u, v)) in g.coords().iter().enumerate() {
        let x = &point.entries()[i];
        if !num_traits::Zero::is_zero(x) {
            println!("  x({u},{v}) = {}", display(x));
        }
    }

    for (name, result) in [
        ("one-sided min-cut", separate_one_sided_min_cut(&point, 8).unwrap()),
        ("cardinality forcing (greedy)", separate_cf_greedy(&point, &c).unwrap()),
        (
            "cardinality subgraph",
            separate_cardinality_subgraph(&point, &c, 8).unwrap(),
        ),
    ] {
        println!(
            "{name}: {} violated ({})",
            result.violated.len(),
            if result.exhausted { "exact search" } else { "heuristic" }
        );
        for cut in &result.violated {
            println!("  violation {}: {}", display(&cut.violation), cut.ineq.render());
        }
    }
}
