//! Zeta and Möbius transforms restricted to the small subsets of a 10-element universe.

use exactpart::frac::Frac;
use exactpart::setsys::Subset;
use exactpart::transforms::{mobius_small, small_count, zeta_small, SmallTable};

fn main() -> exactpart::Result<()> {
    let n = 10;
    let alpha = Frac::new(3, 10);
    // f(S) = 1 on singletons, so zeta(f)(S) = |S|.
    let f = SmallTable::from_fn(n, alpha, |s| (s.len() == 1) as i64)?;
    let z = zeta_small(&f)?;
    let x = Subset::from_elements([1, 4, 7]);
    println!("domain: {} of {} subsets", small_count(n, alpha), 1u64 << n);
    println!("zeta(f)({:?}) = {}", x.to_vec(), z.get(x).unwrap());

    let back = mobius_small(&z)?;
    assert!(f.iter().all(|(s, v)| back.get(s) == Some(v)));
    println!(
        "roundtrip ok; entries touched {} (bound {})",
        z.touched_counter(),
        (n as u64 + 1) * small_count(n, alpha)
    );
    Ok(())
}
