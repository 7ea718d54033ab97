//! Domatic number and a partition into dominating sets.

use exactpart::dnc::{domatic_number, domatic_partition};
use exactpart::setsys::Graph;

fn main() -> exactpart::Result<()> {
    for (name, g) in [
        ("K4", Graph::complete(4)?),
        ("C6", Graph::cycle(6)?),
        ("Petersen", Graph::petersen()),
    ] {
        let d = domatic_number(&g)?;
        let parts = domatic_partition(&g)?;
        assert!(parts.iter().all(|&p| g.is_dominating(p)));
        let shown: Vec<Vec<usize>> = parts.iter().map(|p| p.to_vec()).collect();
        println!("{name}: {d} {shown:?}");
    }
    Ok(())
}
