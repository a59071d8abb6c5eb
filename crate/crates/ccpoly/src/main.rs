//! Command-line surface over the library; every subcommand is a thin
//! wrapper around one library call. Exit codes: 0 success, 1 invalid
//! input, 2 verification mismatch (sweep only).

use ccpoly::error::Result;
use ccpoly::io::{self, InequalityFile, InstanceFile, PointFile};
use ccpoly::rational::display;
use ccpoly::separation;
use ccpoly::solver::{self, SolveConfig, SolveStatus};
use ccpoly::transform;
use ccpoly::verify::{self, SweepClass};
use ccpoly::equivalence::{symmetrize, SymmetryMode};
use ccpoly::graph::Variant;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ccpoly",
    about = "Cardinality-constrained path/cycle polytopes: enumeration, facet checks, separation, exact solving",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the polytope dimension of an instance by enumeration.
    Dim { instance: PathBuf },
    /// Enumerate the feasible paths/cycles of an instance.
    Enumerate {
        instance: PathBuf,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Check an inequality against an instance: validity, tightness and
    /// facet certification, compared with the encoded classification.
    FacetCheck {
        instance: PathBuf,
        inequality: PathBuf,
    },
    /// Sweep a facet-classification claim over all parameter choices.
    Sweep {
        /// Sweep identifier, e.g. cf-node-path; see --list.
        id: String,
        /// Instance supplying n and the cardinality sequence (weights are
        /// ignored).
        instance: Option<PathBuf>,
        /// Stride-sample to at most this many instantiations.
        #[arg(long)]
        limit: Option<usize>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run all separation oracles for an instance against a point file.
    Separate {
        instance: PathBuf,
        point: PathBuf,
    },
    /// Solve an instance with the cutting-plane loop.
    Solve { instance: PathBuf },
    /// Lift a path-space inequality to the cycle polytope.
    Lift { inequality: PathBuf },
    /// Deorient a directed inequality to its undirected counterpart
    /// (symmetrizing it first when needed).
    Deorient { inequality: PathBuf },
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| ccpoly::error::Error::Parse(format!("{}: {e}", path.display())))
}

fn load_instance(path: &PathBuf) -> Result<solver::Instance> {
    let file: InstanceFile = io::parse(&read(path)?)?;
    file.into_instance()
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Dim { instance } => {
            let instance = load_instance(&instance)?;
            let dim = verify::polytope_dimension(instance.space, &instance.c)?;
            println!("space: {}", instance.space);
            println!("c: {}", instance.c);
            println!("dimension: {dim}");
            Ok(0)
        }
        Command::Enumerate { instance, count } => {
            let instance = load_instance(&instance)?;
            verify::check_budget(instance.space.n)?;
            let vertices = ccpoly::enumerate::enumerate_vertices(instance.space, &instance.c)?;
            if !count {
                for v in &vertices {
                    let closing = if instance.space.variant.is_path() { "" } else { " (closed)" };
                    let nodes: Vec<String> = v.sequence().iter().map(|x| x.to_string()).collect();
                    println!(
                        "cardinality {}: {}{closing}  weight {}",
                        v.cardinality(),
                        nodes.join("-"),
                        display(&v.dot(&instance.weights)),
                    );
                }
            }
            println!("count: {}", vertices.len());
            Ok(0)
        }
        Command::FacetCheck { instance, inequality } => {
            let instance = load_instance(&instance)?;
            let file: InequalityFile = io::parse(&read(&inequality)?)?;
            let (ineq, c) = file.into_inequality()?;
            if ineq.space != instance.space || c != instance.c {
                return Err(ccpoly::error::Error::InvalidParameter(
                    "inequality and instance describe different polytopes".into(),
                ));
            }
            verify::check_budget(instance.space.n)?;
            let vertices = ccpoly::enumerate::enumerate_vertices(instance.space, &instance.c)?;
            let dim = verify::dimension_of(&vertices);
            println!("inequality: {}", ineq.render());
            println!("class: {}", ineq.class.describe());
            println!("polytope dimension: {dim}");
            let check = verify::is_valid(&ineq, &vertices)?;
            match check.counterexample {
                None => println!("valid: yes ({} vertices checked)", vertices.len()),
                Some(i) => {
                    let witness = &vertices[i];
                    let nodes: Vec<String> =
                        witness.sequence().iter().map(|x| x.to_string()).collect();
                    println!("valid: no (violated by {})", nodes.join("-"));
                }
            }
            if check.valid {
                let tight = vertices
                    .iter()
                    .filter(|v| ineq.tight_at(v).unwrap_or(false))
                    .count();
                let facet = verify::is_facet(&ineq, &vertices, dim)?;
                println!("tight vertices: {tight}");
                println!("facet: {}", if facet { "yes" } else { "no" });
            } else {
                println!("facet: no");
            }
            if ineq.class != ccpoly::inequality::ClassSpec::Custom {
                let predicted = ccpoly::facet::facet_predicate(&ineq, &c)?;
                println!("classification: {predicted}");
            }
            Ok(0)
        }
        Command::Sweep { id, instance, limit, json } => {
            if id == "--list" || id == "list" {
                for class in verify::catalog() {
                    println!("{}", class.id());
                }
                return Ok(0);
            }
            let class = SweepClass::parse(&id)?;
            let Some(path) = instance else {
                return Err(ccpoly::error::Error::InvalidParameter(
                    "sweep needs an instance file for n and c".into(),
                ));
            };
            let instance = load_instance(&path)?;
            let report = verify::sweep(&class, instance.space.n, &instance.c, limit)?;
            if json {
                print!("{}", io::emit(&report)?);
            } else {
                print!("{}", report.render());
            }
            Ok(if report.disagreements == 0 { 0 } else { 2 })
        }
        Command::Separate { instance, point } => {
            let instance = load_instance(&instance)?;
            let file: PointFile = io::parse(&read(&point)?)?;
            let x = file.into_point(instance.space)?;
            let budget = verify::enum_budget();
            let mut results: Vec<(&str, separation::SeparationResult)> = Vec::new();
            match instance.space.variant {
                Variant::Path => {
                    results.push((
                        "one-sided-min-cut",
                        separation::separate_one_sided_min_cut(&x, budget)?,
                    ));
                }
                Variant::Cycle => {
                    results.push((
                        "multi-cycle-excl",
                        separation::separate_multi_cycle_exclusion(&x)?,
                    ));
                    results.push(("modified-cf", separation::separate_mcf(&x, &instance.c)?));
                }
                _ => {
                    return Err(ccpoly::error::Error::InvalidParameter(
                        "separation oracles run on the directed families".into(),
                    ))
                }
            }
            results.push(("cf-node", separation::separate_cf_greedy(&x, &instance.c)?));
            results.push(("cf-arc", separation::separate_cf_arc_greedy(&x, &instance.c)?));
            if instance.c.all_even() {
                results.push((
                    "odd-excl",
                    separation::separate_parity_exclusion(
                        &x,
                        &instance.c,
                        ccpoly::generators::Parity::Odd,
                        budget,
                    )?,
                ));
            }
            if instance.c.all_odd() && instance.c.first() >= 3 {
                results.push((
                    "even-excl",
                    separation::separate_parity_exclusion(
                        &x,
                        &instance.c,
                        ccpoly::generators::Parity::Even,
                        budget,
                    )?,
                ));
            }
            results.push((
                "card-subgraph",
                separation::separate_cardinality_subgraph(&x, &instance.c, budget)?,
            ));
            let mut any = false;
            for (name, result) in results {
                let mode = if result.exhausted { "exact" } else { "heuristic" };
                for cut in result.violated {
                    any = true;
                    println!(
                        "[{name}/{mode}] violation {}: {}",
                        display(&cut.violation),
                        cut.ineq.render()
                    );
                }
            }
            if !any {
                println!("no violated inequality found");
            }
            Ok(0)
        }
        Command::Solve { instance } => {
            let instance = load_instance(&instance)?;
            let log = solver::solve(&instance, &SolveConfig::default())?;
            for (i, it) in log.iterations.iter().enumerate() {
                let cuts: Vec<String> = it
                    .cuts_added
                    .iter()
                    .map(|(tag, count)| format!("{tag:?} x{count}"))
                    .collect();
                println!(
                    "iteration {i}: lp value {} ({}) cuts [{}]",
                    it.lp_value,
                    if it.integral { "integral" } else { "fractional" },
                    cuts.join(", ")
                );
            }
            match &log.status {
                SolveStatus::Optimal { value, vector } => {
                    let nodes: Vec<String> =
                        vector.sequence().iter().map(|x| x.to_string()).collect();
                    println!("optimal value: {}", display(value));
                    println!("solution ({} arcs): {}", vector.cardinality(), nodes.join("-"));
                }
                SolveStatus::Infeasible => println!("infeasible"),
            }
            println!(
                "certificate: {:?}; lp solves: {}; branch nodes: {}; cross-checked: {}",
                log.certificate,
                log.lp_solves,
                log.branch_nodes,
                match log.cross_checked {
                    Some(true) => "yes",
                    Some(false) => "MISMATCH",
                    None => "skipped",
                }
            );
            Ok(0)
        }
        Command::Lift { inequality } => {
            let file: InequalityFile = io::parse(&read(&inequality)?)?;
            let (ineq, c) = file.into_inequality()?;
            let lifted = transform::lift_path_to_cycle(&ineq, &c)?;
            print!("{}", io::emit(&InequalityFile::from_inequality(&lifted, &c)?)?);
            Ok(0)
        }
        Command::Deorient { inequality } => {
            let file: InequalityFile = io::parse(&read(&inequality)?)?;
            let (ineq, c) = file.into_inequality()?;
            let mode = match ineq.space.variant {
                Variant::Cycle => SymmetryMode::Symmetric,
                Variant::Path => SymmetryMode::PseudoSymmetric,
                _ => {
                    return Err(ccpoly::error::Error::InvalidParameter(
                        "deorientation expects a directed inequality".into(),
                    ))
                }
            };
            let Some(symmetric) = symmetrize(&ineq, mode)? else {
                return Err(ccpoly::error::Error::InvalidParameter(
                    "inequality is not equivalent to a symmetric one".into(),
                ));
            };
            let undirected = transform::deorient(&symmetric)?;
            print!("{}", io::emit(&InequalityFile::from_inequality(&undirected, &c)?)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
