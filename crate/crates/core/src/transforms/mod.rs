//! Cardinality-restricted zeta, Möbius and odd-negation transforms.
//!
//! Tables live on the α-small subsets only. Each fast transform walks the elements in the
//! outer loop and the small masks in the inner loop, so a single pass touches at most
//! n · s(n, α) entries.

mod ring;
mod table;

pub use ring::{ModP61, Ring, ZPolynomial};
pub use table::{mobius_small, sigma_small, small_count, zeta_small, SmallTable, DENSE_LIMIT};
