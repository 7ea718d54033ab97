//! Simple branching enumerators: maximal independent sets of induced subgraphs, minimal
//! set covers under a weighted measure, and minimal dominating sets restricted to a
//! vertex subset.

use std::collections::HashSet;

use serde::Serialize;

use crate::setsys::{neighborhood_system, ExplicitSystem, Graph, Subset};

/// Search-tree bookkeeping shared by the enumerators.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BranchStats {
    pub leaves_visited: u64,
    pub distinct_outputs: u64,
    pub max_depth: usize,
    /// Measure of the root instance (minimal-cover enumeration only).
    pub measure_budget: f64,
    pub large_set_branches: u64,
    pub low_frequency_branches: u64,
    pub fallback_branches: u64,
    /// Children whose measure did not drop by the amount the branching case claims.
    pub measure_violations: u64,
}

/// Enumerates the maximal independent sets of `g[x]`, each exactly once.
///
/// Branches on a vertex `v` of minimum degree in the remaining graph: some vertex of
/// `N[v]` belongs to every maximal independent set, so each child picks one such `w` and
/// deletes `N[w]`. At most 3^{|x|/3} leaves.
pub fn enum_mis(g: &Graph, x: Subset, mut visit: impl FnMut(Subset)) -> BranchStats {
    let mut stats = BranchStats::default();
    let mut seen = HashSet::new();
    mis_rec(g, x, Subset::EMPTY, x, 0, &mut stats, &mut seen, &mut visit);
    stats
}

#[allow(clippy::too_many_arguments)]
fn mis_rec(
    g: &Graph,
    x: Subset,
    chosen: Subset,
    cand: Subset,
    depth: usize,
    stats: &mut BranchStats,
    seen: &mut HashSet<Subset>,
    visit: &mut dyn FnMut(Subset),
) {
    stats.max_depth = stats.max_depth.max(depth);
    if cand.is_empty() {
        stats.leaves_visited += 1;
        let maximal = x
            .difference(chosen)
            .iter()
            .all(|u| !g.neighbors(u).is_disjoint(chosen));
        if maximal && seen.insert(chosen) {
            stats.distinct_outputs += 1;
            visit(chosen);
        }
        return;
    }
    let v = cand
        .iter()
        .min_by_key(|&v| g.neighbors(v).intersection(cand).len())
        .expect("nonempty");
    for w in g.closed_neighbors(v).intersection(cand).iter() {
        mis_rec(
            g,
            x,
            chosen.insert(w),
            cand.difference(g.closed_neighbors(w)),
            depth + 1,
            stats,
            seen,
            visit,
        );
    }
}

/// Weights of the measure μ(U, F) = (1 − (r+1)ε)|F| + ε|U|.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MeasureParams {
    pub r: f64,
    pub epsilon: f64,
    pub set_weight: f64,
    pub elem_weight: f64,
}

impl MeasureParams {
    /// ε = (3(r+1) − log₂(2^{3(r+1)} − 1)) / (3(r+1)²).
    pub fn new(r: f64) -> MeasureParams {
        assert!(r > 0.0, "r must be positive");
        let t = 3.0 * (r + 1.0);
        let epsilon = (t - (t.exp2() - 1.0).log2()) / (3.0 * (r + 1.0) * (r + 1.0));
        MeasureParams {
            r,
            epsilon,
            set_weight: 1.0 - (r + 1.0) * epsilon,
            elem_weight: epsilon,
        }
    }

    /// r = max(1, ⌈|U| / |F|⌉), the smallest integer r ≥ 1 with |U| ≤ r|F|.
    pub fn for_system(universe: usize, sets: usize) -> MeasureParams {
        let r = if sets == 0 { 1 } else { universe.div_ceil(sets).max(1) };
        MeasureParams::new(r as f64)
    }

    pub fn measure(&self, universe: usize, sets: usize) -> f64 {
        self.set_weight * sets as f64 + self.elem_weight * universe as f64
    }

    /// Sets of at least this size trigger the include/exclude branch.
    pub fn large_set_threshold(&self) -> usize {
        (3.0 * (self.r + 1.0)).ceil() as usize
    }
}

/// Low-frequency branching enumerates every nonempty include pattern of the sets
/// containing the chosen element; above this many sets it falls back to a binary branch.
pub const MAX_PATTERN_FANOUT: usize = 12;

struct CoverSearch<'a> {
    sets: &'a [Subset],
    full: Subset,
    params: MeasureParams,
    stats: BranchStats,
    seen: HashSet<Vec<usize>>,
}

/// Enumerates the inclusion-minimal set covers of `sys`, each once, as sorted lists of set
/// indices.
///
/// Branching: a set meeting at least 3(r+1) uncovered elements is included or excluded;
/// otherwise an uncovered element of minimum frequency is picked and every nonempty subset
/// of the sets containing it is included (the rest excluded). Leaves whose chosen sets
/// are not minimal are dropped.
pub fn enum_minimal_covers(sys: &ExplicitSystem, visit: impl FnMut(&[usize])) -> BranchStats {
    let params = MeasureParams::for_system(sys.n(), sys.len());
    enum_minimal_covers_with(sys, params, visit)
}

/// [`enum_minimal_covers`] with explicit measure parameters (they set the large-set threshold).
pub fn enum_minimal_covers_with(
    sys: &ExplicitSystem,
    params: MeasureParams,
    mut visit: impl FnMut(&[usize]),
) -> BranchStats {
    let mut search = CoverSearch {
        sets: sys.sets(),
        full: sys.universe().full(),
        params,
        stats: BranchStats {
            measure_budget: params.measure(sys.n(), sys.len()),
            ..BranchStats::default()
        },
        seen: HashSet::new(),
    };
    let avail: Vec<usize> = (0..sys.len()).collect();
    let mut chosen = Vec::new();
    search.rec(sys.universe().full(), &avail, &mut chosen, 0, &mut visit);
    search.stats
}

impl CoverSearch<'_> {
    fn mu(&self, uncovered: Subset, avail: usize) -> f64 {
        self.params.measure(uncovered.len(), avail)
    }

    fn check_drop(&mut self, parent: f64, child: f64, claimed: f64) {
        if child + claimed > parent + 1e-9 {
            self.stats.measure_violations += 1;
        }
    }

    fn leaf(&mut self, chosen: &[usize], visit: &mut dyn FnMut(&[usize])) {
        self.stats.leaves_visited += 1;
        let minimal = chosen.iter().enumerate().all(|(i, &s)| {
            let others = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Subset::EMPTY, |acc, (_, &t)| acc.union(self.sets[t]));
            !self.sets[s].intersection(self.full).is_subset_of(others)
        });
        if !minimal {
            return;
        }
        let mut key = chosen.to_vec();
        key.sort_unstable();
        if self.seen.insert(key.clone()) {
            self.stats.distinct_outputs += 1;
            visit(&key);
        }
    }

    fn rec(
        &mut self,
        uncovered: Subset,
        avail: &[usize],
        chosen: &mut Vec<usize>,
        depth: usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if uncovered.is_empty() {
            self.leaf(chosen, visit);
            return;
        }
        let mu = self.mu(uncovered, avail.len());
        let sw = self.params.set_weight;

        // large set: include or exclude it
        let threshold = self.params.large_set_threshold();
        let large = avail
            .iter()
            .copied()
            .filter(|&s| self.sets[s].intersection(uncovered).len() >= threshold)
            .max_by_key(|&s| self.sets[s].intersection(uncovered).len());
        if let Some(s) = large {
            self.stats.large_set_branches += 1;
            let rest: Vec<usize> = avail.iter().copied().filter(|&t| t != s).collect();
            let gain = self.sets[s].intersection(uncovered);

            let excl = self.mu(uncovered, rest.len());
            self.check_drop(mu, excl, sw);
            self.rec(uncovered, &rest, chosen, depth + 1, visit);

            let incl = self.mu(uncovered.difference(gain), rest.len());
            self.check_drop(mu, incl, sw + gain.len() as f64 * self.params.elem_weight);
            chosen.push(s);
            self.rec(uncovered.difference(gain), &rest, chosen, depth + 1, visit);
            chosen.pop();
            return;
        }

        // element of minimum frequency
        let (u, containing) = uncovered
            .iter()
            .map(|u| {
                let c: Vec<usize> = avail.iter().copied().filter(|&s| self.sets[s].contains(u)).collect();
                (u, c)
            })
            .min_by_key(|(_, c)| c.len())
            .expect("uncovered is nonempty");
        let _ = u;
        if containing.is_empty() {
            self.stats.leaves_visited += 1;
            return;
        }

        if containing.len() > MAX_PATTERN_FANOUT {
            self.stats.fallback_branches += 1;
            let s = containing[0];
            let rest: Vec<usize> = avail.iter().copied().filter(|&t| t != s).collect();
            let gain = self.sets[s].intersection(uncovered);
            let excl = self.mu(uncovered, rest.len());
            self.check_drop(mu, excl, sw);
            self.rec(uncovered, &rest, chosen, depth + 1, visit);
            let incl = self.mu(uncovered.difference(gain), rest.len());
            self.check_drop(mu, incl, sw);
            chosen.push(s);
            self.rec(uncovered.difference(gain), &rest, chosen, depth + 1, visit);
            chosen.pop();
            return;
        }

        self.stats.low_frequency_branches += 1;
        let rest: Vec<usize> = avail.iter().copied().filter(|t| !containing.contains(t)).collect();
        let claimed = containing.len() as f64 * sw;
        for pattern in 1u32..(1u32 << containing.len()) {
            let mut covered = Subset::EMPTY;
            let before = chosen.len();
            for (i, &s) in containing.iter().enumerate() {
                if pattern >> i & 1 == 1 {
                    chosen.push(s);
                    covered = covered.union(self.sets[s]);
                }
            }
            let next = uncovered.difference(covered);
            let child = self.mu(next, rest.len());
            self.check_drop(mu, child, claimed);
            self.rec(next, &rest, chosen, depth + 1, visit);
            chosen.truncate(before);
        }
    }
}

/// Enumerates the minimal dominating sets of `g` that are subsets of `x`, via minimal
/// covers of the closed neighborhoods `{N[v] : v ∈ x}`.
pub fn enum_min_dom_in(g: &Graph, x: Subset, mut visit: impl FnMut(Subset)) -> BranchStats {
    let sys = neighborhood_system(g, x).expect("x is a vertex subset");
    let labels = x.to_vec();
    enum_minimal_covers(&sys, |idx| visit(idx.iter().map(|&i| labels[i]).collect()))
}

/// Collects [`enum_mis`] output, sorted.
pub fn maximal_independent_sets(g: &Graph, x: Subset) -> Vec<Subset> {
    let mut out = Vec::new();
    enum_mis(g, x, |s| out.push(s));
    out.sort_unstable();
    out
}

/// Collects [`enum_minimal_covers`] output, sorted.
pub fn minimal_covers(sys: &ExplicitSystem) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    enum_minimal_covers(sys, |c| out.push(c.to_vec()));
    out.sort_unstable();
    out
}

/// Collects [`enum_min_dom_in`] output, sorted.
pub fn minimal_dominating_sets_in(g: &Graph, x: Subset) -> Vec<Subset> {
    let mut out = Vec::new();
    enum_min_dom_in(g, x, |s| out.push(s));
    out.sort_unstable();
    out
}
