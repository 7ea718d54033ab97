//! Chromatic number by a case analysis over the large color classes.
//!
//! A table of χ(G[S]) for all S with |S| ≤ ⌊0.27n⌋ is built first. With the classes of an
//! optimal coloring sorted by size, one of four configurations holds, and each has a search
//! that finds an optimal coloring when it holds:
//!
//! 1. at most five classes cover ≥ 0.48n vertices: guess that union S (5-colorable) and
//!    color V ∖ S with [`ChromaticSolver::chr1a`];
//! 2. six classes cover between 0.48n and 0.576n vertices: same with a 6-colorable S;
//! 3. otherwise let T be the longest prefix union with |T| < n/2:
//!    * |T| < 6n/13: guess L with n/2 ≤ |L| < 7n/13, using the 7-coloring test once
//!      |L| ≥ 48n/91;
//!    * 6n/13 ≤ |T| < n/2: guess L = T and split the rest inside the 3/7..4/7 window.
//!
//! Every candidate value is the size of an actual coloring, so the minimum over all cases
//! is exact. Calls to fast quantum k-coloring are replaced by exact backtracking.

use serde::Serialize;

use crate::cost::{CostReport, LoopCost};
use crate::enumerate::enum_mis;
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::ie_counts::chi_table;
use crate::setsys::{Graph, Subset};
use crate::transforms::SmallTable;

/// Default limit on the number of vertices.
pub const DEFAULT_CAP: usize = 20;

pub const TABLE_ALPHA: Frac = Frac::new(27, 100);
const FIVE_COL_MIN: Frac = Frac::new(48, 100);
const SIX_COL_MAX: Frac = Frac::new(576, 1000);
const SPLIT_MIN: Frac = Frac::HALF;
const SPLIT_MAX: Frac = Frac::new(7, 13);
const SEVEN_COL_MIN: Frac = Frac::new(48, 91);
const BIG_T_MIN: Frac = Frac::new(6, 13);

/// The size thresholds of one run, as exact multiples of n.
#[derive(Clone, Debug, Serialize)]
pub struct Thresholds {
    pub n: usize,
    pub table_alpha: Frac,
    pub five_col_min: Frac,
    pub six_col_max: Frac,
    pub split_min: Frac,
    pub split_max: Frac,
    pub seven_col_min: Frac,
    pub big_t_min: Frac,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub case: &'static str,
    /// Whether any guessed S passed the case's gates.
    pub activated: bool,
    /// Fewest colors found by this case.
    pub best: Option<usize>,
    pub guesses: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseTrace {
    pub thresholds: Thresholds,
    pub cases: Vec<CaseOutcome>,
    pub chi: usize,
}

/// Exact k-colorability of G[s] by backtracking with symmetry breaking.
pub fn is_k_colorable(g: &Graph, s: Subset, k: usize) -> bool {
    if s.is_empty() {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut order: Vec<usize> = s.iter().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.neighbors(v).intersection(s).len()));
    let mut color = vec![usize::MAX; g.n()];
    fn go(g: &Graph, order: &[usize], i: usize, used: usize, k: usize, color: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 0..(used + 1).min(k) {
            if g.neighbors(v).iter().all(|u| color[u] != c) {
                color[v] = c;
                if go(g, order, i + 1, used.max(c + 1), k, color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    go(g, &order, 0, 0, k, &mut color)
}

/// Balanced prefix of a size list: `sizes` descending with max ≤ t, p = ⌈total/t⌉, r = total/p
/// and 1 ≤ a ≤ p − 2. Returns the largest k whose prefix sum is at most (a+1)·r; that
/// prefix sum is then at least a·r.
pub fn balanced_prefix(sizes: &[usize], t: Frac, a: usize) -> Result<usize> {
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition("sizes must be in descending order".into()));
    }
    if t == Frac::ZERO || sizes.first().is_some_and(|&m| !t.admits(1, m)) {
        return Err(Error::Precondition("every size must be at most t".into()));
    }
    let total: u64 = sizes.iter().map(|&s| s as u64).sum();
    // p = ⌈total / t⌉
    let p = (total * t.den()).div_ceil(t.num());
    if a < 1 || (a as u64) + 2 > p {
        return Err(Error::Precondition(format!("need 1 ≤ a ≤ p − 2 with p = {p}, got a = {a}")));
    }
    // prefix ≤ (a+1)·total/p  ⇔  prefix·p ≤ (a+1)·total
    let mut prefix = 0u64;
    let mut k = 0;
    for (i, &s) in sizes.iter().enumerate() {
        if (prefix + s as u64) * p > (a as u64 + 1) * total {
            break;
        }
        prefix += s as u64;
        k = i + 1;
    }
    Ok(k)
}

/// Whether a prefix of length k satisfies a·r ≤ prefix ≤ (a+1)·r.
pub fn prefix_in_window(sizes: &[usize], t: Frac, a: usize, k: usize) -> bool {
    let total: u64 = sizes.iter().map(|&s| s as u64).sum();
    let p = (total * t.den()).div_ceil(t.num());
    let prefix: u64 = sizes[..k].iter().map(|&s| s as u64).sum();
    a as u64 * total <= prefix * p && prefix * p <= (a as u64 + 1) * total
}

/// χ(G) with the per-case outcomes and the modeled search cost.
pub fn chromatic_number_traced(g: &Graph, cap: usize) -> Result<(usize, CaseTrace, CostReport)> {
    ChromaticSolver::new(g, cap)?.run()
}

/// χ(G) for graphs up to [`DEFAULT_CAP`] vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(chromatic_number_traced(g, DEFAULT_CAP)?.0)
}

type Entry = Option<(usize, CostReport)>;
type CaseBody<'b, S> = dyn FnMut(&mut S, Subset) -> Option<(usize, CostReport)> + 'b;

/// State of one run: the χ table for the small subsets and caches of the subroutines.
pub struct ChromaticSolver<'g> {
    g: &'g Graph,
    n: usize,
    small: usize,
    chi: SmallTable<i64>,
    table_ops: u64,
    chr2: Vec<Entry>,
    chr1a: Vec<Entry>,
    /// χ(G[S]) when at most 6, else 7.
    low_chi: Vec<Option<u8>>,
}

impl<'g> ChromaticSolver<'g> {
    pub fn new(g: &'g Graph, cap: usize) -> Result<ChromaticSolver<'g>> {
        let n = g.n();
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        if n == 0 {
            return Err(Error::InvalidGraph("the chromatic number needs at least one vertex".into()));
        }
        let small = TABLE_ALPHA.floor_mul(n);
        let chi = if small >= 1 {
            chi_table(g, TABLE_ALPHA)?
        } else {
            SmallTable::from_fn(n, TABLE_ALPHA, |_| 0)?
        };
        let table_ops = chi.domain().len() as u64 * (n as u64 + 1) * small.max(1) as u64;
        Ok(ChromaticSolver {
            g,
            n,
            small,
            chi,
            table_ops,
            chr2: vec![None; 1 << n],
            chr1a: vec![None; 1 << n],
            low_chi: vec![None; 1 << n],
        })
    }

    /// χ of a subset with at most ⌊0.27n⌋ vertices, from the table.
    pub fn table_chi(&self, s: Subset) -> Option<usize> {
        self.chi.get(s).map(|&v| v as usize)
    }

    fn low_chi(&mut self, s: Subset) -> usize {
        if let Some(v) = self.low_chi[s.index()] {
            return v as usize;
        }
        let v = (0..=6).find(|&k| is_k_colorable(self.g, s, k)).unwrap_or(7);
        self.low_chi[s.index()] = Some(v as u8);
        v
    }

    fn col(&mut self, k: usize, s: Subset) -> bool {
        self.low_chi(s) <= k
    }

    /// min over maximal independent T of G[S] with |S ∖ T| ≤ ⌊0.27n⌋ of 1 + χ(S ∖ T);
    /// |S| if there is none.
    pub fn chr2(&mut self, s: Subset) -> usize {
        self.chr2_cost(s).0
    }

    fn chr2_cost(&mut self, s: Subset) -> (usize, CostReport) {
        if let Some(hit) = &self.chr2[s.index()] {
            return hit.clone();
        }
        let mut mis = Vec::new();
        let stats = enum_mis(self.g, s, |t| mis.push(t));
        let mut best = s.len();
        let mut lc = LoopCost::new();
        for t in mis {
            let rest = s.difference(t);
            let mut body = CostReport::new();
            if rest.len() <= self.small {
                body.table_lookups = 1;
                best = best.min(1 + self.table_chi(rest).expect("small subset"));
            }
            lc.iteration(&body);
        }
        let mut cost = lc.finish();
        cost.enumerator_leaves += stats.leaves_visited;
        self.chr2[s.index()] = Some((best, cost.clone()));
        (best, cost)
    }

    fn split_min(&mut self, s: Subset, lo: (u64, u64), hi: Option<(u64, u64)>) -> (usize, CostReport) {
        let size = s.len() as u64;
        let mut best = s.len();
        let mut lc = LoopCost::new();
        for t in s.subsets() {
            let tl = t.len() as u64;
            // lo.0/lo.1 · |S| ≤ |T| (≤ hi.0/hi.1 · |S|)
            if lo.0 * size > lo.1 * tl || hi.is_some_and(|(a, b)| tl * b > a * size) {
                continue;
            }
            let (x, mut cost) = self.chr2_cost(t);
            let (y, cy) = self.chr2_cost(s.difference(t));
            cost.merge(&cy);
            best = best.min(x + y);
            lc.iteration(&cost);
        }
        (best, lc.finish())
    }

    /// min over T ⊆ S with |T| ≥ |S|/2 of chr2(T) + chr2(S ∖ T), at most |S|.
    pub fn chr1a(&mut self, s: Subset) -> usize {
        self.chr1a_cost(s).0
    }

    fn chr1a_cost(&mut self, s: Subset) -> (usize, CostReport) {
        if let Some(hit) = &self.chr1a[s.index()] {
            return hit.clone();
        }
        let r = self.split_min(s, (1, 2), None);
        self.chr1a[s.index()] = Some(r.clone());
        r
    }

    /// As [`chr1a`](Self::chr1a) with 3|S|/7 ≤ |T| ≤ 4|S|/7.
    pub fn chr1b(&mut self, s: Subset) -> usize {
        self.split_min(s, (3, 7), Some((4, 7))).0
    }

    fn seven_col(&mut self, s: Subset) -> (bool, CostReport) {
        let size = s.len();
        let mut lc = LoopCost::new();
        for t in s.subsets() {
            if 3 * size > 7 * t.len() {
                continue;
            }
            let mut cost = CostReport {
                classical_nodes: 1,
                ..CostReport::new()
            };
            let mut ok = self.col(3, t);
            if ok {
                let (c, c2) = self.chr2_cost(s.difference(t));
                cost.merge(&c2);
                ok = c <= 4;
            }
            lc.iteration(&cost);
            if ok {
                return (true, lc.finish());
            }
        }
        (false, lc.finish())
    }

    /// 7-colorability of G[S] through a 3-colorable part of at least 3|S|/7 vertices and a
    /// rest with chr2 ≤ 4. Needs |S| ≤ (7/3)·0.27·n.
    pub fn col7(&mut self, s: Subset) -> Result<bool> {
        let limit = Frac::new(7 * 27, 3 * 100);
        if !limit.admits(self.n, s.len()) {
            return Err(Error::Precondition(format!(
                "7-coloring test needs |S| ≤ 0.63·n, got |S| = {} with n = {}",
                s.len(),
                self.n
            )));
        }
        Ok(self.seven_col(s).0)
    }

    pub fn thresholds(&self) -> Thresholds {
        Thresholds {
            n: self.n,
            table_alpha: TABLE_ALPHA,
            five_col_min: FIVE_COL_MIN,
            six_col_max: SIX_COL_MAX,
            split_min: SPLIT_MIN,
            split_max: SPLIT_MAX,
            seven_col_min: SEVEN_COL_MIN,
            big_t_min: BIG_T_MIN,
        }
    }

    /// Runs the four cases and returns the minimum.
    pub fn run(&mut self) -> Result<(usize, CaseTrace, CostReport)> {
        let n = self.n;
        let full = self.g.vertices();
        let mut total = CostReport {
            arithmetic_ops: self.table_ops,
            ..CostReport::new()
        };
        let mut cases = Vec::with_capacity(4);

        let run_case = |solver: &mut Self,
                            name: &'static str,
                            gate: &dyn Fn(usize) -> bool,
                            body: &mut CaseBody<Self>| {
            let mut lc = LoopCost::new();
            let mut out = CaseOutcome {
                case: name,
                activated: false,
                best: None,
                guesses: 0,
            };
            for s in full.subsets() {
                if !gate(s.len()) {
                    continue;
                }
                out.guesses += 1;
                match body(solver, s) {
                    Some((value, cost)) => {
                        out.activated = true;
                        out.best = Some(out.best.map_or(value, |b: usize| b.min(value)));
                        lc.iteration(&cost);
                    }
                    None => lc.iteration(&CostReport::new()),
                }
            }
            (out, lc.finish())
        };

        let (c1, cost) = run_case(self, "five-colorable-prefix", &|sz| FIVE_COL_MIN.at_most(n, sz), &mut |sv, s| {
            if !sv.col(5, s) {
                return None;
            }
            let k = sv.low_chi(s);
            let (rest, cost) = sv.chr1a_cost(full.difference(s));
            Some((k + rest, cost))
        });
        total.merge(&cost);
        cases.push(c1);

        let (c2, cost) = run_case(
            self,
            "six-colorable-prefix",
            &|sz| FIVE_COL_MIN.at_most(n, sz) && SIX_COL_MAX.exceeds(n, sz),
            &mut |sv, s| {
                if !sv.col(6, s) {
                    return None;
                }
                let (rest, cost) = sv.chr1a_cost(full.difference(s));
                Some((6 + rest, cost))
            },
        );
        total.merge(&cost);
        cases.push(c2);

        let (c3, cost) = run_case(
            self,
            "small-prefix",
            &|sz| SPLIT_MIN.at_most(n, sz) && SPLIT_MAX.exceeds(n, sz),
            &mut |sv, s| {
                let (left, mut cost) = if SEVEN_COL_MIN.exceeds(n, s.len()) {
                    sv.chr1a_cost(s)
                } else {
                    let (ok, cost) = sv.seven_col(s);
                    (if ok { 7 } else { s.len() }, cost)
                };
                let (right, cr) = sv.chr1a_cost(full.difference(s));
                cost.merge(&cr);
                Some((left + right, cost))
            },
        );
        total.merge(&cost);
        cases.push(c3);

        let (c4, cost) = run_case(
            self,
            "large-prefix",
            &|sz| BIG_T_MIN.at_most(n, sz) && SPLIT_MIN.exceeds(n, sz),
            &mut |sv, s| {
                let (left, mut cost) = sv.chr1a_cost(s);
                let (right, cr) = sv.split_min(full.difference(s), (3, 7), Some((4, 7)));
                cost.merge(&cr);
                Some((left + right, cost))
            },
        );
        total.merge(&cost);
        cases.push(c4);

        let chi = cases.iter().filter_map(|c| c.best).fold(n, usize::min);
        let trace = CaseTrace {
            thresholds: self.thresholds(),
            cases,
            chi,
        };
        Ok((chi, trace, total))
    }
}
