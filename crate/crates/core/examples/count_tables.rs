//! Inclusion-exclusion counts of covers, partitions and packings by independent sets.

use exactpart::frac::Frac;
use exactpart::ie_counts::count_table;
use exactpart::setsys::{independent_family, Graph, ProblemKind};

fn main() -> exactpart::Result<()> {
    let g = Graph::cycle(5)?;
    let fam = independent_family(&g);
    let full = g.vertices();
    for kind in ProblemKind::ALL {
        let table = count_table(&fam, kind, Frac::ONE, 4)?;
        let counts: Vec<String> = (1..=4).map(|k| table.count(full, k).unwrap().to_string()).collect();
        println!("{kind:<9} k=1..4: {}", counts.join(" "));
        println!("          fewest parts: {:?}", table.min_k(full));
    }
    Ok(())
}
