//! Runs facet-classification sweeps: for every parameter instantiation of
//! the chosen inequality classes, the encoded classification is compared
//! against brute-force certification on the enumerated vertex set.
//!
//! Usage: facet_sweep [sweep-id] [n] [c1,c2,...]
//! With no arguments, a survey over small sizes is run and any mismatch
//! is reported.

use ccpoly::cardinality::CardinalitySequence;
use ccpoly::verify::{catalog, sweep, SweepClass};

fn parse_c(s: &str) -> CardinalitySequence {
    let values: Vec<usize> = s.split(',').map(|v| v.parse().expect("integer")).collect();
    CardinalitySequence::new(values).expect("valid cardinality sequence")
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() == 3 {
        let class = SweepClass::parse(&args[0]).expect("sweep id");
        let n: usize = args[1].parse().expect("n");
        let c = parse_c(&args[2]);
        let report = sweep(&class, n, &c, None).expect("sweep");
        print!("{}", report.render());
        std::process::exit(if report.disagreements == 0 { 0 } else { 2 });
    }

    // Survey mode: every class at n = 5, a few sequences each. Pass an
    // explicit (id, n, c) for bigger runs.
    let sequences = |n: usize| -> Vec<Vec<usize>> {
        let mut out = vec![
            vec![2, 4],
            vec![2, n],
            vec![3, n],
            vec![2, 3, n],
            vec![3, 4],
            vec![2, 3, 4],
            vec![3, 5],
            vec![4, 5],
            vec![2, 4, 6],
            vec![4, 6],
            vec![2, 3, 5, 7],
        ];
        out.retain(|c| c.last().copied().unwrap_or(0) <= n && c.first().copied().unwrap_or(0) >= 2);
        out.sort();
        out.dedup();
        out
    };

    let mut total_mismatch = 0usize;
    for class in catalog() {
        for n in [5usize] {
            for values in sequences(n) {
                let Ok(c) = CardinalitySequence::new(values.clone()) else {
                    continue;
                };
                match sweep(&class, n, &c, None) {
                    Ok(report) => {
                        let status = if report.disagreements == 0 { "ok" } else { "MISMATCH" };
                        println!(
                            "[{status}] {} n={n} c={c} dim={} instances={} disagreements={} unknown={}",
                            report.sweep,
                            report.dimension,
                            report.instances,
                            report.disagreements,
                            report.unknown_resolved
                        );
                        if report.disagreements > 0 {
                            total_mismatch += report.disagreements;
                            for o in report.outcomes.iter().filter(|o| o.agrees == Some(false)) {
                                println!("    !! {} predicted={} valid={} facet={}", o.params, o.predicted, o.valid, o.facet);
                            }
                        }
                    }
                    Err(_) => {} // class incompatible with (n, c); skip
                }
            }
        }
    }
    println!("total mismatches: {total_mismatch}");
    std::process::exit(if total_mismatch == 0 { 0 } else { 2 });
}
