//! Universes, subsets, graphs and implicitly defined set families.

mod dimacs;
mod family;
mod graph;
mod subset;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use family::{
    dominating_family, explicit_family, independent_family, neighborhood_system, ExplicitSystem, FamilyKind,
    ImplicitFamily, ProblemKind,
};
pub use graph::Graph;
pub use subset::{Elements, Subset, Subsets, Universe, MAX_UNIVERSE};
