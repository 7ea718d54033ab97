//! Search accounting. Every quantum search loop of the algorithms is run as a plain
//! exhaustive loop; the report records both what was explored and what a quantum search
//! over the same loops would have cost.

use serde::Serialize;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CostReport {
    /// Search nodes explored classically.
    pub classical_nodes: u64,
    /// Modeled quantum queries: a loop whose iterations cost T_1, …, T_m is charged
    /// sqrt(T_1² + … + T_m²), i.e. sqrt(m)·T when the iterations cost the same.
    pub modeled_quantum_queries: f64,
    pub table_lookups: u64,
    pub enumerator_leaves: u64,
    /// Entry updates spent building tables.
    pub arithmetic_ops: u64,
}

impl CostReport {
    pub fn new() -> CostReport {
        CostReport::default()
    }

    /// Adds counters from a nested computation, without touching the modeled cost.
    pub fn absorb_counts(&mut self, other: &CostReport) {
        self.classical_nodes += other.classical_nodes;
        self.table_lookups += other.table_lookups;
        self.enumerator_leaves += other.enumerator_leaves;
        self.arithmetic_ops += other.arithmetic_ops;
    }

    pub fn merge(&mut self, other: &CostReport) {
        self.absorb_counts(other);
        self.modeled_quantum_queries += other.modeled_quantum_queries;
    }
}

/// Accumulates the iterations of one search loop.
#[derive(Clone, Debug, Default)]
pub struct LoopCost {
    sum_sq: f64,
    counts: CostReport,
}

impl LoopCost {
    pub fn new() -> LoopCost {
        LoopCost::default()
    }

    /// Records one iteration whose body cost `body`. The iteration itself counts as a node.
    pub fn iteration(&mut self, body: &CostReport) {
        let t = 1.0 + body.modeled_quantum_queries;
        self.sum_sq += t * t;
        self.counts.absorb_counts(body);
        self.counts.classical_nodes += 1;
    }

    pub fn finish(self) -> CostReport {
        CostReport {
            modeled_quantum_queries: self.sum_sq.sqrt(),
            ..self.counts
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_loop_costs_square_root() {
        let mut l = LoopCost::new();
        for _ in 0..16 {
            l.iteration(&CostReport::new());
        }
        let r = l.finish();
        assert_eq!(r.classical_nodes, 16);
        assert!((r.modeled_quantum_queries - 4.0).abs() < 1e-12);
    }

    #[test]
    fn nested_loops_multiply() {
        let mut outer = LoopCost::new();
        for _ in 0..9 {
            let mut inner = LoopCost::new();
            for _ in 0..4 {
                inner.iteration(&CostReport::new());
            }
            outer.iteration(&inner.finish());
        }
        let r = outer.finish();
        assert_eq!(r.classical_nodes, 9 * 5);
        assert!((r.modeled_quantum_queries - 9.0).abs() < 1e-12);
        assert!(r.modeled_quantum_queries <= r.classical_nodes as f64);
    }
}
