//! Divide-and-conquer deciders for k-cover, k-partition and k-packing.
//!
//! Each solver splits the universe into (L, R) with |L| ≥ n/2 and the budget k into
//! k_L + k_R, splits again at n/4, and finishes a quarter-sized piece by enumerating a
//! candidate first member S₁ with the family's enumerator and looking the rest up in a
//! count table built over the small subsets. The search loops are run exhaustively (with
//! early exit on success); [`CostReport`] records what a quantum search over the same
//! loops would cost.
//!
//! * [`StrategyTag::DivideDivideEnumerate`]: split, split, enumerate, look up (table at 1/4).
//! * [`StrategyTag::EnumerateThenDivide`]: on the L side enumerate S₁ first and split
//!   L ∖ S₁ (table at 1/4).
//! * [`StrategyTag::ThirdLevel`]: as the previous one, but pieces of size ≤ n/4 are
//!   decided by one more split (XL, XR) with |XL| ≥ αn and an enumeration on XL, against
//!   a table at α ∈ [0.1303, 1/4).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::cost::{CostReport, LoopCost};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::ie_counts::{count_table, CountTable};
use crate::setsys::{dominating_family, Graph, ImplicitFamily, ProblemKind, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StrategyTag {
    DivideDivideEnumerate,
    EnumerateThenDivide,
    ThirdLevel,
}

impl StrategyTag {
    pub const ALL: [StrategyTag; 3] = [
        StrategyTag::DivideDivideEnumerate,
        StrategyTag::EnumerateThenDivide,
        StrategyTag::ThirdLevel,
    ];
}

impl fmt::Display for StrategyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyTag::DivideDivideEnumerate => "divide-divide-enumerate",
            StrategyTag::EnumerateThenDivide => "enumerate-then-divide",
            StrategyTag::ThirdLevel => "third-level",
        })
    }
}

impl FromStr for StrategyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<StrategyTag> {
        match s {
            "divide-divide-enumerate" | "dde" | "main" => Ok(StrategyTag::DivideDivideEnumerate),
            "enumerate-then-divide" | "etd" | "smallc" => Ok(StrategyTag::EnumerateThenDivide),
            "third-level" | "third" | "smallc2" => Ok(StrategyTag::ThirdLevel),
            other => Err(Error::Precondition(format!("unknown strategy `{other}`"))),
        }
    }
}

/// Lowest table depth the third-level split supports.
pub const THIRD_LEVEL_MIN_ALPHA: Frac = Frac::new(1303, 10000);

/// A solver layout together with the depth of the table it reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Strategy {
    pub tag: StrategyTag,
    pub alpha: Frac,
}

impl Strategy {
    pub fn new(tag: StrategyTag, alpha: Frac) -> Result<Strategy> {
        let ok = match tag {
            StrategyTag::DivideDivideEnumerate | StrategyTag::EnumerateThenDivide => alpha == Frac::QUARTER,
            StrategyTag::ThirdLevel => THIRD_LEVEL_MIN_ALPHA <= alpha && alpha < Frac::QUARTER,
        };
        if !ok {
            return Err(Error::StrategyMismatch {
                strategy: tag.to_string(),
                alpha: alpha.to_string(),
            });
        }
        Ok(Strategy { tag, alpha })
    }

    pub fn main_cover() -> Strategy {
        Strategy {
            tag: StrategyTag::DivideDivideEnumerate,
            alpha: Frac::QUARTER,
        }
    }

    pub fn small_c() -> Strategy {
        Strategy {
            tag: StrategyTag::EnumerateThenDivide,
            alpha: Frac::QUARTER,
        }
    }

    pub fn third_level(alpha: Frac) -> Result<Strategy> {
        Strategy::new(StrategyTag::ThirdLevel, alpha)
    }

    /// The third-level solver at α = 0.2361 (the cost-model optimum for c = 1).
    pub fn third_level_default() -> Strategy {
        Strategy {
            tag: StrategyTag::ThirdLevel,
            alpha: Frac::new(2361, 10000),
        }
    }

    /// One strategy of each kind.
    pub fn all() -> [Strategy; 3] {
        [Strategy::main_cover(), Strategy::small_c(), Strategy::third_level_default()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Level {
    /// Pieces of size ≥ n/2 split at n/4.
    Half,
    /// Enumerate S₁, reject if more than n/4 remains, finish the rest at `Base`.
    Quarter,
    /// Enumerate S₁, reject if more than n/2 remains, split the rest at `Half`.
    LeftSide,
    /// Pieces of size ≤ n/4: a lookup, or the third-level split.
    Base,
    /// Split (XL, XR) with |XL| ≥ αn.
    Third,
    /// Enumerate S₁ in XL, reject if more than αn remains, look the rest up.
    ThirdEnum,
    Lookup,
}

const MEMO_LEVELS: usize = 5;

impl Level {
    fn memo_slot(self) -> Option<usize> {
        match self {
            Level::Half => Some(0),
            Level::Quarter => Some(1),
            Level::LeftSide => Some(2),
            Level::Third => Some(3),
            Level::ThirdEnum => Some(4),
            Level::Base | Level::Lookup => None,
        }
    }
}

/// Results of finished sub-searches with the cost they took, so a repeated subproblem is
/// charged exactly as if it had been searched again.
enum Memo {
    Dense { stride: usize, slots: Vec<Option<(bool, CostReport)>> },
    Sparse(HashMap<(u32, usize), (bool, CostReport)>),
}

const DENSE_MEMO_LIMIT: usize = 1 << 22;

impl Memo {
    fn new(n: usize, k_max: usize) -> Memo {
        let stride = k_max + 1;
        match (1usize << n).checked_mul(stride) {
            Some(size) if size <= DENSE_MEMO_LIMIT => Memo::Dense {
                stride,
                slots: vec![None; size],
            },
            _ => Memo::Sparse(HashMap::new()),
        }
    }

    fn get(&self, x: Subset, k: usize) -> Option<&(bool, CostReport)> {
        match self {
            Memo::Dense { stride, slots } => {
                if k >= *stride {
                    return None;
                }
                slots[x.index() * stride + k].as_ref()
            }
            Memo::Sparse(m) => m.get(&(x.0, k)),
        }
    }

    fn put(&mut self, x: Subset, k: usize, value: (bool, CostReport)) {
        match self {
            Memo::Dense { stride, slots } => {
                if k < *stride {
                    slots[x.index() * *stride + k] = Some(value);
                }
            }
            Memo::Sparse(m) => {
                m.insert((x.0, k), value);
            }
        }
    }
}

type Candidates = (Arc<[Subset]>, u64);

/// A decider for one family, problem kind and strategy. Holds the count table and the
/// caches of sub-searches and enumerations, which stay valid across calls to
/// [`Solver::solve`].
pub struct Solver<'a> {
    fam: &'a ImplicitFamily,
    kind: ProblemKind,
    strategy: Strategy,
    table: CountTable,
    n: usize,
    quarter_limit: usize,
    memo: Vec<Memo>,
    candidates: HashMap<u32, Candidates>,
}

impl fmt::Debug for Solver<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Solver")
            .field("n", &self.n)
            .field("kind", &self.kind)
            .field("strategy", &self.strategy)
            .field("k_max", &self.table.k_max())
            .finish()
    }
}

impl<'a> Solver<'a> {
    /// Builds the count table at the strategy's depth for all k ≤ `k_max`.
    pub fn new(fam: &'a ImplicitFamily, kind: ProblemKind, strategy: Strategy, k_max: usize) -> Result<Solver<'a>> {
        let table = count_table(fam, kind, strategy.alpha, k_max.max(1))?;
        Solver::with_table(fam, strategy, table)
    }

    /// Uses a prebuilt table, which must match the strategy's depth and the family's size.
    pub fn with_table(fam: &'a ImplicitFamily, strategy: Strategy, table: CountTable) -> Result<Solver<'a>> {
        Strategy::new(strategy.tag, strategy.alpha)?;
        if table.alpha() != strategy.alpha {
            return Err(Error::StrategyMismatch {
                strategy: strategy.tag.to_string(),
                alpha: table.alpha().to_string(),
            });
        }
        if table.n() != fam.n() {
            return Err(Error::Precondition(format!(
                "table over {} elements, family over {}",
                table.n(),
                fam.n()
            )));
        }
        let n = fam.n();
        Ok(Solver {
            fam,
            kind: table.kind(),
            strategy,
            n,
            quarter_limit: Frac::QUARTER.floor_mul(n),
            memo: (0..MEMO_LEVELS).map(|_| Memo::new(n, table.k_max())).collect(),
            table,
            candidates: HashMap::new(),
        })
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn table(&self) -> &CountTable {
        &self.table
    }

    /// Whether the universe has a k-tuple of the solver's kind.
    pub fn solve(&mut self, k: usize) -> Result<(bool, CostReport)> {
        if k < 1 {
            return Err(Error::InvalidK { k, min: 1 });
        }
        if k > self.table.k_max() {
            self.table = count_table(self.fam, self.kind, self.strategy.alpha, k)?;
            self.memo = (0..MEMO_LEVELS).map(|_| Memo::new(self.n, k)).collect();
        }
        let full = self.fam.universe().full();
        let right = match self.strategy.tag {
            StrategyTag::DivideDivideEnumerate => Level::Half,
            _ => Level::LeftSide,
        };
        let (ok, mut report) = self.split(full, k, Frac::HALF, right, Level::Half);
        report.arithmetic_ops += self.table.arithmetic_ops();
        Ok((ok, report))
    }

    fn eval(&mut self, level: Level, x: Subset, k: usize) -> (bool, CostReport) {
        if k == 0 {
            return (self.kind.zero_tuple_ok(x), CostReport::new());
        }
        let slot = level.memo_slot();
        if let Some(hit) = slot.and_then(|s| self.memo[s].get(x, k)) {
            return hit.clone();
        }
        let alpha = self.strategy.alpha;
        let result = match level {
            Level::Lookup => self.lookup(x, k),
            Level::Base => {
                if self.strategy.tag == StrategyTag::ThirdLevel {
                    self.eval(Level::Third, x, k)
                } else {
                    self.lookup(x, k)
                }
            }
            Level::Half | Level::Quarter | Level::LeftSide if x.len() <= self.quarter_limit => {
                self.eval(Level::Base, x, k)
            }
            Level::Half => self.split(x, k, Frac::QUARTER, Level::Quarter, Level::Quarter),
            Level::Quarter => self.enumerate(x, k, Frac::QUARTER, Level::Base),
            Level::LeftSide => self.enumerate(x, k, Frac::HALF, Level::Half),
            Level::Third => {
                if x.len() <= self.table.max_card() {
                    self.lookup(x, k)
                } else {
                    self.split(x, k, alpha, Level::ThirdEnum, Level::Lookup)
                }
            }
            Level::ThirdEnum => self.enumerate(x, k, alpha, Level::Lookup),
        };
        if let Some(s) = slot {
            self.memo[s].put(x, k, result.clone());
        }
        result
    }

    fn lookup(&self, x: Subset, k: usize) -> (bool, CostReport) {
        let ok = self
            .table
            .decide(x, k)
            .unwrap_or_else(|| panic!("lookup of {x:?}, k = {k} outside the table"));
        let report = CostReport {
            table_lookups: 1,
            ..CostReport::new()
        };
        (ok, report)
    }

    /// Search over (L, k_L) with |L| ≥ min_left·n and L ⊆ x.
    fn split(&mut self, x: Subset, k: usize, min_left: Frac, left: Level, right: Level) -> (bool, CostReport) {
        let mut lc = LoopCost::new();
        for l in x.subsets() {
            if !min_left.at_most(self.n, l.len()) {
                continue;
            }
            let r = x.difference(l);
            for kl in 0..=k {
                let (ok_l, mut cost) = self.eval(left, l, kl);
                let mut ok = ok_l;
                if ok_l {
                    let (ok_r, cost_r) = self.eval(right, r, k - kl);
                    cost.merge(&cost_r);
                    ok = ok_r;
                }
                lc.iteration(&cost);
                if ok {
                    return (true, lc.finish());
                }
            }
        }
        (false, lc.finish())
    }

    /// Search over S₁ ∈ e(x) with |x ∖ S₁| ≤ max_rest·n, finishing x ∖ S₁ with k − 1 at `next`.
    fn enumerate(&mut self, x: Subset, k: usize, max_rest: Frac, next: Level) -> (bool, CostReport) {
        let (cands, leaves) = self.candidates(x);
        let mut lc = LoopCost::new();
        let mut found = false;
        for &s in cands.iter() {
            let rest = x.difference(s);
            if !max_rest.admits(self.n, rest.len()) {
                lc.iteration(&CostReport::new());
                continue;
            }
            let (ok, cost) = self.eval(next, rest, k - 1);
            lc.iteration(&cost);
            if ok {
                found = true;
                break;
            }
        }
        let mut report = lc.finish();
        report.enumerator_leaves += leaves;
        (found, report)
    }

    fn candidates(&mut self, x: Subset) -> Candidates {
        if let Some(c) = self.candidates.get(&x.0) {
            return c.clone();
        }
        let mut out = Vec::new();
        let leaves = self.fam.candidates(self.kind, x, &mut |s| out.push(s));
        let entry: Candidates = (out.into(), leaves);
        self.candidates.insert(x.0, entry.clone());
        entry
    }
}

/// One-shot decision: builds a solver with table k_max = k and runs it.
pub fn solve(fam: &ImplicitFamily, kind: ProblemKind, k: usize, strategy: Strategy) -> Result<(bool, CostReport)> {
    if k < 1 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    Solver::new(fam, kind, strategy, k)?.solve(k)
}

/// The split condition on a full-universe table: some 1 ≤ k_L ≤ k − 1 such that L has a
/// k_L-tuple and U ∖ L a (k − k_L)-tuple. Returns the smallest such k_L.
pub fn ksplit_with(table: &CountTable, k: usize, l: Subset) -> Result<Option<usize>> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let full = Subset::full(table.n());
    let r = full.difference(l);
    if !table.is_small(full) {
        return Err(Error::Precondition("the split check needs a table over all subsets".into()));
    }
    if k - 1 > table.k_max() {
        return Err(Error::InvalidK { k, min: 2 });
    }
    Ok((1..k).find(|&kl| table.decide(l, kl) == Some(true) && table.decide(r, k - kl) == Some(true)))
}

/// [`ksplit_with`] on a freshly built full table.
pub fn ksplit_check(fam: &ImplicitFamily, kind: ProblemKind, k: usize, l: Subset) -> Result<Option<usize>> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let table = count_table(fam, kind, Frac::ONE, k - 1)?;
    ksplit_with(&table, k, l)
}

/// Largest universe the witness search builds full tables for.
pub const WITNESS_CAP: usize = 16;

/// An explicit k-tuple of the given kind for the whole universe, or `None` if there is none.
///
/// Peels one member at a time: from the candidates e(X) pick S whose removal leaves a
/// (k−1)-tuple according to a full count table.
pub fn witness(fam: &ImplicitFamily, kind: ProblemKind, k: usize) -> Result<Option<Vec<Subset>>> {
    if k < 1 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    if fam.n() > WITNESS_CAP {
        return Err(Error::CapExceeded {
            n: fam.n(),
            cap: WITNESS_CAP,
        });
    }
    let table = count_table(fam, kind, Frac::ONE, k)?;
    let mut x = fam.universe().full();
    if table.decide(x, k) != Some(true) {
        return Ok(None);
    }
    let mut parts = Vec::with_capacity(k);
    for left in (0..k).rev() {
        let mut cands = Vec::new();
        fam.candidates(kind, x, &mut |s| cands.push(s));
        let good = |s: &Subset| table.decide(x.difference(*s), left) == Some(true);
        let pick = match cands.iter().copied().find(good) {
            Some(s) => s,
            None => x
                .subsets()
                .filter(|&s| fam.member_for(kind, s))
                .find(good)
                .ok_or_else(|| Error::Precondition("count table and family disagree".into()))?,
        };
        parts.push(pick);
        x = x.difference(pick);
    }
    Ok(Some(parts))
}

/// Checks a tuple against the definition of the kind.
pub fn is_valid_tuple(fam: &ImplicitFamily, kind: ProblemKind, x: Subset, parts: &[Subset]) -> bool {
    if !parts.iter().all(|&s| s.is_subset_of(x) && fam.member_for(kind, s)) {
        return false;
    }
    let union = parts.iter().fold(Subset::EMPTY, |acc, &s| acc.union(s));
    let disjoint = parts.iter().map(|s| s.len()).sum::<usize>() == union.len();
    match kind {
        ProblemKind::Cover => union == x,
        ProblemKind::Partition => disjoint && union == x,
        ProblemKind::Packing => disjoint,
    }
}

/// The domatic number, decided with packings of dominating sets (a k-packing of dominating
/// sets becomes a partition by adding the leftover vertices to one class).
pub fn domatic_number(g: &Graph) -> Result<usize> {
    Ok(domatic_number_with(g, Strategy::main_cover())?.0)
}

/// [`domatic_number`] with a chosen strategy, and the cost summed over all decisions.
pub fn domatic_number_with(g: &Graph, strategy: Strategy) -> Result<(usize, CostReport)> {
    if g.n() == 0 {
        return Err(Error::InvalidGraph("the domatic number needs at least one vertex".into()));
    }
    let fam = dominating_family(g);
    let upper = (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0) + 1;
    let mut solver = Solver::new(&fam, ProblemKind::Packing, strategy, upper)?;
    let mut total = CostReport::new();
    let mut best = 0;
    for k in 1..=upper {
        let (ok, cost) = solver.solve(k)?;
        total.merge(&cost);
        if !ok {
            break;
        }
        best = k;
    }
    Ok((best, total))
}

/// A partition of V into domatic-number many dominating sets.
pub fn domatic_partition(g: &Graph) -> Result<Vec<Subset>> {
    let d = domatic_number(g)?;
    let fam = dominating_family(g);
    let mut parts = witness(&fam, ProblemKind::Packing, d)?
        .ok_or_else(|| Error::Precondition("packing witness missing".into()))?;
    let used = parts.iter().fold(Subset::EMPTY, |acc, &s| acc.union(s));
    parts[0] = parts[0].union(g.vertices().difference(used));
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setsys::independent_family;

    fn decide_all(fam: &ImplicitFamily, kind: ProblemKind, k: usize) -> Vec<bool> {
        Strategy::all().iter().map(|&s| solve(fam, kind, k, s).unwrap().0).collect()
    }

    #[test]
    fn petersen_cover() {
        let fam = independent_family(&Graph::petersen());
        assert_eq!(decide_all(&fam, ProblemKind::Cover, 3), vec![true; 3]);
        assert_eq!(decide_all(&fam, ProblemKind::Cover, 2), vec![false; 3]);
    }

    #[test]
    fn four_triangles_partition() {
        let g = Graph::disjoint_copies(&Graph::complete(3).unwrap(), 4).unwrap();
        let fam = independent_family(&g);
        assert_eq!(decide_all(&fam, ProblemKind::Partition, 3), vec![true; 3]);
        assert_eq!(decide_all(&fam, ProblemKind::Partition, 2), vec![false; 3]);
    }

    #[test]
    fn k5_plus_isolated_vertex() {
        let g = Graph::complete(5).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let fam = independent_family(&g);
        assert_eq!(decide_all(&fam, ProblemKind::Partition, 4), vec![false; 3]);
        assert_eq!(decide_all(&fam, ProblemKind::Partition, 5), vec![true; 3]);
    }

    #[test]
    fn bad_arguments() {
        let fam = independent_family(&Graph::complete(3).unwrap());
        assert!(matches!(
            solve(&fam, ProblemKind::Cover, 0, Strategy::main_cover()),
            Err(Error::InvalidK { .. })
        ));
        assert!(Strategy::new(StrategyTag::ThirdLevel, Frac::QUARTER).is_err());
        assert!(Strategy::new(StrategyTag::DivideDivideEnumerate, Frac::HALF).is_err());
        let table = count_table(&fam, ProblemKind::Cover, Frac::HALF, 3).unwrap();
        assert!(matches!(
            Solver::with_table(&fam, Strategy::main_cover(), table),
            Err(Error::StrategyMismatch { .. })
        ));
    }

    #[test]
    fn cost_invariant() {
        let fam = independent_family(&Graph::cycle(7).unwrap());
        for s in Strategy::all() {
            let mut solver = Solver::new(&fam, ProblemKind::Cover, s, 3).unwrap();
            for k in 1..=3 {
                let (_, cost) = solver.solve(k).unwrap();
                assert!(cost.modeled_quantum_queries <= cost.classical_nodes as f64);
            }
        }
    }

    #[test]
    fn memoized_costs_match_a_fresh_solver() {
        let fam = independent_family(&Graph::petersen());
        let mut shared = Solver::new(&fam, ProblemKind::Cover, Strategy::main_cover(), 3).unwrap();
        shared.solve(2).unwrap();
        let again = shared.solve(3).unwrap();
        let fresh = solve(&fam, ProblemKind::Cover, 3, Strategy::main_cover()).unwrap();
        assert_eq!(again.0, fresh.0);
        assert_eq!(again.1.classical_nodes, fresh.1.classical_nodes);
        assert!((again.1.modeled_quantum_queries - fresh.1.modeled_quantum_queries).abs() < 1e-6);
    }

    #[test]
    fn ksplit_examples() {
        let fam = independent_family(&Graph::complete(3).unwrap());
        let l = Subset::from_elements([0, 1]);
        assert_eq!(ksplit_check(&fam, ProblemKind::Partition, 3, l).unwrap(), Some(2));
        assert_eq!(ksplit_check(&fam, ProblemKind::Partition, 2, l).unwrap(), None);
        assert!(ksplit_check(&fam, ProblemKind::Partition, 1, l).is_err());
        // R = ∅ needs a nonempty budget that covers ∅, which the empty set does.
        assert_eq!(ksplit_check(&fam, ProblemKind::Cover, 4, Subset::full(3)).unwrap(), Some(3));
    }

    #[test]
    fn witnesses() {
        let tri = independent_family(&Graph::complete(3).unwrap());
        let w = witness(&tri, ProblemKind::Partition, 3).unwrap().unwrap();
        assert!(is_valid_tuple(&tri, ProblemKind::Partition, Subset::full(3), &w));
        assert!(w.iter().all(|s| s.len() == 1));

        let c5 = independent_family(&Graph::cycle(5).unwrap());
        let w = witness(&c5, ProblemKind::Cover, 3).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        assert!(is_valid_tuple(&c5, ProblemKind::Cover, Subset::full(5), &w));

        let k4 = independent_family(&Graph::complete(4).unwrap());
        assert_eq!(witness(&k4, ProblemKind::Partition, 3).unwrap(), None);
    }

    #[test]
    fn domatic_examples() {
        assert_eq!(domatic_number(&Graph::complete(4).unwrap()).unwrap(), 4);
        assert_eq!(domatic_number(&Graph::cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(domatic_number(&Graph::star(3).unwrap()).unwrap(), 2);
        assert_eq!(domatic_number(&Graph::empty(1).unwrap()).unwrap(), 1);
        let g = Graph::petersen();
        let parts = domatic_partition(&g).unwrap();
        assert_eq!(parts.iter().fold(Subset::EMPTY, |a, &s| a.union(s)), g.vertices());
        assert!(parts.iter().all(|&d| g.is_dominating(d)));
        assert_eq!(parts.iter().map(|s| s.len()).sum::<usize>(), 10);
    }
}
