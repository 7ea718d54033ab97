//! Decide colorability with the three divide-and-conquer strategies and compare the
//! modeled query counts.

use exactpart::dnc::{witness, Solver, Strategy};
use exactpart::setsys::{independent_family, Graph, ProblemKind};

fn main() -> exactpart::Result<()> {
    let g = Graph::petersen().disjoint_union(&Graph::cycle(5)?)?;
    let fam = independent_family(&g);
    for strategy in Strategy::all() {
        let mut solver = Solver::new(&fam, ProblemKind::Partition, strategy, 3)?;
        let (two, _) = solver.solve(2)?;
        let (three, cost) = solver.solve(3)?;
        println!(
            "{:<24} alpha {:<9} 2-colorable {two:<5} 3-colorable {three:<5} modeled queries {:.0}",
            strategy.tag.to_string(),
            strategy.alpha.to_string(),
            cost.modeled_quantum_queries
        );
    }
    let classes = witness(&fam, ProblemKind::Partition, 3)?.unwrap();
    for (i, c) in classes.iter().enumerate() {
        println!("class {i}: {:?}", c.to_vec());
    }
    Ok(())
}
