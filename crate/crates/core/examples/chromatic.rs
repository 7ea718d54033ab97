//! Chromatic number with the per-case trace.

use exactpart::chromatic::{chromatic_number_traced, DEFAULT_CAP};
use exactpart::setsys::Graph;

fn main() -> exactpart::Result<()> {
    let graphs = [
        ("Petersen", Graph::petersen()),
        ("C7 + K4", Graph::cycle(7)?.disjoint_union(&Graph::complete(4)?)?),
        ("K3,3", Graph::complete_bipartite(3, 3)?),
    ];
    for (name, g) in graphs {
        let (chi, trace, cost) = chromatic_number_traced(&g, DEFAULT_CAP)?;
        println!("{name}: chi = {chi}, modeled queries {:.0}", cost.modeled_quantum_queries);
        for case in &trace.cases {
            println!("  {:<22} guesses {:>5}  best {:?}", case.case, case.guesses, case.best);
        }
    }
    Ok(())
}
