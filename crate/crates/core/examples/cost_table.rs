//! Running-time bases of the three strategies as c varies.

use exactpart::costmodel::{best_base, chromatic_exponent, cost_table, crossovers};

fn main() -> exactpart::Result<()> {
    println!("{:>6} {:>9} {:>9} {:>9} {:>9}  best", "c", "alpha*", "main", "smallc", "smallc2");
    for row in cost_table(1.0, 1.2, 0.02)? {
        let fmt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.6}"));
        println!(
            "{:>6.3} {:>9} {:>9.6} {:>9.6} {:>9}  {:.6} ({})",
            row.c,
            fmt(row.alpha_star),
            row.base_main,
            row.base_smallc,
            fmt(row.base_smallc2),
            row.best,
            row.strategy
        );
    }
    let x = crossovers();
    println!("crossovers: {:.6} {:.6} {:.6}", x.c1, x.c2, x.c3);
    let (tag, b) = best_base(3f64.cbrt())?;
    println!("3-colorable classes (c = 3^(1/3)): {b:.4} via {tag}");
    println!("chromatic number: {:.4}", chromatic_exponent());
    Ok(())
}
