//! Brute-force oracles and instance generators shared by the integration tests.
#![allow(dead_code)]

use exactpart::setsys::{ExplicitSystem, Graph, ImplicitFamily, ProblemKind, Subset, Universe};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_system(max_n: usize, max_sets: usize, rng: &mut ChaCha8Rng) -> ExplicitSystem {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_sets);
    let mut sets: Vec<Subset> = (0..m).map(|_| Subset(rng.gen_range(0..1u32 << n))).collect();
    sets.sort();
    sets.dedup();
    ExplicitSystem::new(Universe::new(n).unwrap(), sets).unwrap()
}

/// χ(G[S]) for every S, by the subset recurrence over independent sets containing the
/// lowest vertex.
pub fn chi_all(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut f = vec![0usize; 1 << n];
    for s in 1u32..(1 << n) {
        let set = Subset(s);
        let v = set.first().unwrap();
        let rest = set.remove(v);
        let mut best = usize::MAX;
        for t in rest.subsets() {
            let i = t.insert(v);
            if g.is_independent(i) {
                best = best.min(1 + f[set.difference(i).index()]);
            }
        }
        f[s as usize] = best;
    }
    f
}

pub fn chi(g: &Graph) -> usize {
    chi_all(g)[g.vertices().index()]
}

/// Whether U has a k-tuple of the given kind, by reachability over partial unions.
pub fn tuple_exists(fam: &ImplicitFamily, kind: ProblemKind, k: usize) -> bool {
    let full = fam.universe().full();
    let members: Vec<Subset> = full.subsets().filter(|&s| fam.member_for(kind, s)).collect();
    let mut reach = vec![false; 1 << fam.n()];
    reach[0] = true;
    for _ in 0..k {
        let mut next = vec![false; reach.len()];
        for (s, _) in reach.iter().enumerate().filter(|(_, &r)| r) {
            let s = Subset(s as u32);
            for &t in &members {
                if kind == ProblemKind::Cover || s.is_disjoint(t) {
                    next[s.union(t).index()] = true;
                }
            }
        }
        reach = next;
    }
    match kind {
        ProblemKind::Packing => reach.iter().any(|&r| r),
        _ => reach[full.index()],
    }
}

/// Largest k such that V splits into k dominating sets.
pub fn domatic_brute(g: &Graph) -> usize {
    let n = g.n();
    let full = g.vertices();
    // best[S] = most disjoint dominating sets inside S
    let mut best = vec![0usize; 1 << n];
    for s in 1u32..(1 << n) {
        let set = Subset(s);
        let mut b = 0;
        for d in set.subsets() {
            if !d.is_empty() && g.is_dominating(d) {
                b = b.max(1 + best[set.difference(d).index()]);
            }
        }
        best[s as usize] = b;
    }
    best[full.index()]
}

/// Ordered k-tuples of `members` forming a cover, partition or packing of X.
pub fn tuple_count(members: &[Subset], kind: ProblemKind, x: Subset, k: usize) -> u64 {
    fn go(members: &[Subset], kind: ProblemKind, x: Subset, k: usize, used: Subset) -> u64 {
        if k == 0 {
            return match kind {
                ProblemKind::Cover | ProblemKind::Partition => (used == x) as u64,
                ProblemKind::Packing => 1,
            };
        }
        members
            .iter()
            .filter(|&&s| s.is_subset_of(x))
            .filter(|&&s| kind == ProblemKind::Cover || s.is_disjoint(used))
            .map(|&s| go(members, kind, x, k - 1, used.union(s)))
            .sum()
    }
    go(members, kind, x, k, Subset::EMPTY)
}

/// Maximal independent sets of g, sorted.
pub fn brute_mis(g: &Graph) -> Vec<Subset> {
    let full = g.vertices();
    let mut out: Vec<Subset> = full
        .subsets()
        .filter(|&s| g.is_independent(s) && full.difference(s).iter().all(|v| !g.is_independent(s.insert(v))))
        .collect();
    out.sort();
    out
}

/// Inclusion-minimal index sets whose union is the universe, sorted.
pub fn brute_minimal_covers(sys: &ExplicitSystem) -> Vec<Vec<usize>> {
    let full = sys.universe().full();
    let m = sys.len();
    let covers = |mask: u32| {
        (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .fold(Subset::EMPTY, |acc, i| acc.union(sys.sets()[i]))
            == full
    };
    let mut out: Vec<Vec<usize>> = (0u32..1 << m)
        .filter(|&mask| covers(mask) && (0..m).all(|i| mask >> i & 1 == 0 || !covers(mask & !(1 << i))))
        .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}
