//! Exact set partitioning, covering and packing over implicitly defined set families.
//!
//! The building blocks are small-subset zeta/Möbius transforms ([`transforms`]),
//! inclusion-exclusion count tables over the small subsets ([`ie_counts`]) and branching
//! enumerators ([`enumerate`]). [`dnc`] combines them into divide-and-conquer deciders,
//! [`chromatic`] into a chromatic-number pipeline, and [`costmodel`] evaluates the running
//! time exponents of those algorithms.

pub mod chromatic;
pub mod cli;
pub mod cost;
pub mod costmodel;
pub mod dnc;
pub mod enumerate;
pub mod error;
pub mod frac;
pub mod ie_counts;
pub mod setsys;
pub mod transforms;

pub use cost::CostReport;
pub use error::{Error, Result};
pub use frac::Frac;
