//! Maximal independent sets, minimal set covers and minimal dominating sets.

use exactpart::enumerate::{enum_mis, enum_min_dom_in, enum_minimal_covers, MeasureParams};
use exactpart::setsys::{ExplicitSystem, Graph, Subset, Universe};

fn main() -> exactpart::Result<()> {
    let triangles = Graph::disjoint_copies(&Graph::complete(3)?, 4)?;
    let stats = enum_mis(&triangles, triangles.vertices(), |_| {});
    println!("four triangles: {} maximal independent sets", stats.distinct_outputs);

    let sets = vec![
        Subset::from_elements([0, 1, 2]),
        Subset::from_elements([2, 3]),
        Subset::from_elements([3, 4, 5]),
        Subset::from_elements([0, 5]),
        Subset::from_elements([1, 4]),
    ];
    let sys = ExplicitSystem::new(Universe::new(6)?, sets)?;
    let stats = enum_minimal_covers(&sys, |c| println!("cover {c:?}"));
    let p = MeasureParams::for_system(sys.n(), sys.len());
    println!(
        "{} minimal covers, r = {}, epsilon = {:.6}, budget 2^{:.3}",
        stats.distinct_outputs,
        p.r,
        p.epsilon,
        (1.0 - p.epsilon) * sys.len() as f64
    );

    let petersen = Graph::petersen();
    let stats = enum_min_dom_in(&petersen, petersen.vertices(), |_| {});
    println!("Petersen graph: {} minimal dominating sets", stats.distinct_outputs);
    Ok(())
}
