//! Inclusion-exclusion counts of k-covers, k-partitions and k-packings for every small
//! subset X of the universe, and the decision tables derived from them.
//!
//! With a(Y) = |{Z ⊆ Y : Z ∈ F↓}| and P_Y(z) = Σ_{Z ⊆ Y, Z ∈ F} z^{|Z|}:
//!
//! * covers:     c_k(X) = Σ_{Y⊆X} (−1)^{|X∖Y|} a(Y)^k
//! * partitions: d_k(X) = [z^{|X|}] Σ_{Y⊆X} (−1)^{|X∖Y|} P_Y(z)^k
//! * packings:   p_k(X) = [z^{|X|}] Σ_{Y⊆X} (−1)^{|X∖Y|} (1+z)^{|Y|} P_Y(z)^k
//!
//! All counts are of ordered k-tuples, and a tuple slot may hold ∅ whenever ∅ belongs to
//! the family.

use std::collections::HashSet;
use std::io::Write;

use bitvec::vec::BitVec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::setsys::{Graph, ImplicitFamily, ProblemKind, Subset};
use crate::transforms::{zeta_small, Ring, SmallTable, ZPolynomial, DENSE_LIMIT};

/// a(Y) on every α-small Y: the zeta transform of the indicator of F↓.
pub fn a_table(fam: &ImplicitFamily, alpha: Frac) -> Result<SmallTable<BigInt>> {
    let ind = SmallTable::from_fn(fam.n(), alpha, |z| BigInt::from(fam.member_down(z) as u8))?;
    zeta_small(&ind)
}

/// Σ_j a_j(Y) z^j on every α-small Y, truncated at degree ⌊αn⌋.
pub fn aj_polys(fam: &ImplicitFamily, alpha: Frac) -> Result<SmallTable<ZPolynomial>> {
    let cap = alpha.floor_mul(fam.n()).min(fam.n());
    let h = SmallTable::from_fn(fam.n(), alpha, |z| {
        if fam.member(z) {
            ZPolynomial::monomial(BigInt::one(), z.len(), cap)
        } else {
            ZPolynomial::zero(cap)
        }
    })?;
    zeta_small(&h)
}

/// The largest k the preprocessing guarantees to be useful: ⌊αn⌋, at least 1.
pub fn default_k_max(n: usize, alpha: Frac) -> usize {
    alpha.floor_mul(n).max(1)
}

#[derive(Clone, Debug)]
enum Decisions {
    Dense(BitVec),
    Sparse(HashSet<u32>),
}

impl Decisions {
    fn get(&self, x: Subset) -> bool {
        match self {
            Decisions::Dense(b) => b[x.index()],
            Decisions::Sparse(s) => s.contains(&x.0),
        }
    }
}

/// Exact counts and decision bits for all (X, k) with X α-small and 1 ≤ k ≤ k_max.
#[derive(Clone, Debug)]
pub struct CountTable {
    n: usize,
    alpha: Frac,
    kind: ProblemKind,
    k_max: usize,
    counts: Vec<SmallTable<BigInt>>,
    decisions: Vec<Decisions>,
    arithmetic_ops: u64,
}

impl CountTable {
    fn build(n: usize, alpha: Frac, kind: ProblemKind, counts: Vec<SmallTable<BigInt>>, ops: u64) -> CountTable {
        let decisions = counts
            .iter()
            .map(|t| {
                if n <= DENSE_LIMIT {
                    let mut bits = BitVec::repeat(false, 1usize << n);
                    for (x, v) in t.iter() {
                        bits.set(x.index(), v.is_positive());
                    }
                    Decisions::Dense(bits)
                } else {
                    Decisions::Sparse(t.iter().filter(|(_, v)| v.is_positive()).map(|(x, _)| x.0).collect())
                }
            })
            .collect();
        CountTable {
            n,
            alpha,
            kind,
            k_max: counts.len(),
            counts,
            decisions,
            arithmetic_ops: ops,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Frac {
        self.alpha
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// ⌊αn⌋
    pub fn max_card(&self) -> usize {
        self.alpha.floor_mul(self.n).min(self.n)
    }

    pub fn is_small(&self, x: Subset) -> bool {
        x.len() <= self.max_card() && x.is_subset_of(Subset::full(self.n))
    }

    /// The α-small subsets in increasing mask order.
    pub fn domain(&self) -> &[Subset] {
        self.counts[0].domain()
    }

    /// Number of ordered k-tuples of the given kind for X; `None` outside the table.
    pub fn count(&self, x: Subset, k: usize) -> Option<&BigInt> {
        if k == 0 || k > self.k_max {
            return None;
        }
        self.counts[k - 1].get(x)
    }

    /// Whether X has a k-tuple of the table's kind. For k = 0 this is the empty tuple's
    /// answer; `None` for k > k_max or X not α-small.
    pub fn decide(&self, x: Subset, k: usize) -> Option<bool> {
        if !self.is_small(x) || k > self.k_max {
            return None;
        }
        if k == 0 {
            return Some(self.kind.zero_tuple_ok(x));
        }
        Some(self.decisions[k - 1].get(x))
    }

    /// Smallest k ≤ k_max with a k-tuple for X.
    pub fn min_k(&self, x: Subset) -> Option<usize> {
        (0..=self.k_max).find(|&k| self.decide(x, k) == Some(true))
    }

    /// Entry updates spent by the transforms that built the table.
    pub fn arithmetic_ops(&self) -> u64 {
        self.arithmetic_ops
    }

    /// Writes one record per (X, k): mask as u64, k as u16, decision as u8, little-endian.
    pub fn write_dump<W: Write>(&self, mut out: W) -> Result<()> {
        for k in 1..=self.k_max {
            for &x in self.domain() {
                out.write_all(&(x.0 as u64).to_le_bytes())?;
                out.write_all(&(k as u16).to_le_bytes())?;
                out.write_all(&[self.decisions[k - 1].get(x) as u8])?;
            }
        }
        Ok(())
    }
}

fn check_k(k_max: usize) -> Result<()> {
    if k_max < 1 {
        return Err(Error::InvalidK { k: k_max, min: 1 });
    }
    Ok(())
}

/// Successive pointwise powers base^1, …, base^k_max.
fn powers<R: Ring>(base: &SmallTable<R>, k_max: usize, mul: impl Fn(&R, &R) -> R) -> Result<Vec<SmallTable<R>>> {
    let mut out = Vec::with_capacity(k_max);
    out.push(base.clone());
    for _ in 1..k_max {
        let prev = out.last().expect("nonempty");
        let next = prev.map(|y, v| mul(v, base.get(y).expect("same domain")))?;
        out.push(next);
    }
    Ok(out)
}

fn mobius_all<R: Ring>(tables: Vec<SmallTable<R>>) -> Result<(Vec<SmallTable<R>>, u64)> {
    let done: Vec<SmallTable<R>> = tables
        .into_par_iter()
        .map(|mut t| t.mobius_in_place().map(|_| t))
        .collect::<Result<_>>()?;
    let ops = done.iter().map(|t| t.touched_counter()).sum();
    Ok((done, ops))
}

/// Cover counts c_k(X) for the family's downward closure.
pub fn cover_counts(fam: &ImplicitFamily, alpha: Frac, k_max: usize) -> Result<CountTable> {
    check_k(k_max)?;
    let a = a_table(fam, alpha)?;
    cover_counts_from_a(&a, k_max)
}

/// Cover counts from a precomputed a(Y) table.
pub fn cover_counts_from_a(a: &SmallTable<BigInt>, k_max: usize) -> Result<CountTable> {
    check_k(k_max)?;
    let pw = powers(a, k_max, |x, y| x * y)?;
    let (counts, ops) = mobius_all(pw)?;
    Ok(CountTable::build(
        a.n(),
        a.alpha(),
        ProblemKind::Cover,
        counts,
        ops + a.touched_counter(),
    ))
}

fn coefficient_tables(tables: Vec<SmallTable<ZPolynomial>>) -> Result<Vec<SmallTable<BigInt>>> {
    tables.iter().map(|t| t.map(|x, p| p.coeff(x.len()))).collect()
}

/// Partition counts d_k(X).
pub fn partition_counts(fam: &ImplicitFamily, alpha: Frac, k_max: usize) -> Result<CountTable> {
    check_k(k_max)?;
    let p = aj_polys(fam, alpha)?;
    let pw = powers(&p, k_max, ZPolynomial::mul)?;
    let (polys, ops) = mobius_all(pw)?;
    let counts = coefficient_tables(polys)?;
    Ok(CountTable::build(fam.n(), alpha, ProblemKind::Partition, counts, ops + p.touched_counter()))
}

/// Packing counts p_k(X).
pub fn packing_counts(fam: &ImplicitFamily, alpha: Frac, k_max: usize) -> Result<CountTable> {
    check_k(k_max)?;
    let p = aj_polys(fam, alpha)?;
    let cap = p.max_card();
    let pw = powers(&p, k_max, ZPolynomial::mul)?;
    let with_free = pw
        .into_iter()
        .map(|t| t.map(|y, v| v.mul(&ZPolynomial::one_plus_z_pow(y.len(), cap))))
        .collect::<Result<Vec<_>>>()?;
    let (polys, ops) = mobius_all(with_free)?;
    let counts = coefficient_tables(polys)?;
    Ok(CountTable::build(fam.n(), alpha, ProblemKind::Packing, counts, ops + p.touched_counter()))
}

/// Count table of the given kind.
pub fn count_table(fam: &ImplicitFamily, kind: ProblemKind, alpha: Frac, k_max: usize) -> Result<CountTable> {
    match kind {
        ProblemKind::Cover => cover_counts(fam, alpha, k_max),
        ProblemKind::Partition => partition_counts(fam, alpha, k_max),
        ProblemKind::Packing => packing_counts(fam, alpha, k_max),
    }
}

/// Number of nonempty independent sets of g[S] on every α-small S, by the recurrence
/// a[S] = a[S∖{v}] + a[S∖N[v]] + 1 with v the lowest vertex of S.
pub fn independent_set_counts(g: &Graph, alpha: Frac) -> Result<SmallTable<BigInt>> {
    let mut t: SmallTable<BigInt> = SmallTable::new(g.n(), alpha)?;
    let domain = t.domain().to_vec();
    for s in domain {
        let value = match s.first() {
            None => BigInt::zero(),
            Some(v) => {
                let without = t.get(s.remove(v)).expect("smaller mask already set").clone();
                let rest = t.get(s.difference(g.closed_neighbors(v))).expect("smaller mask already set");
                without + rest + 1
            }
        };
        t.set(s, value)?;
    }
    Ok(t)
}

/// χ(G[S]) on every α-small S: the least k with a positive k-cover count by independent
/// sets.
pub fn chi_table(g: &Graph, alpha: Frac) -> Result<SmallTable<i64>> {
    if alpha.floor_mul(g.n()) < 1 {
        return Err(Error::Precondition(format!("alpha·n must be at least 1 (alpha = {alpha}, n = {})", g.n())));
    }
    let rec = independent_set_counts(g, alpha)?;
    let a = rec.map(|_, v| v + 1)?;
    let k_max = a.max_card().max(1);
    let covers = cover_counts_from_a(&a, k_max)?;
    a.map(|x, _| covers.min_k(x).expect("χ(G[S]) ≤ |S|") as i64)
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::setsys::{explicit_family, independent_family, ExplicitSystem, Universe};

    fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
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

    /// Ordered k-tuples over `members` with the kind's relation to X, by direct recursion.
    fn brute(members: &[Subset], kind: ProblemKind, x: Subset, k: usize) -> u64 {
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

    fn check_against_brute(fam: &ImplicitFamily, k_max: usize) {
        let full = fam.universe().full();
        for kind in ProblemKind::ALL {
            let table = count_table(fam, kind, Frac::ONE, k_max).unwrap();
            let members: Vec<Subset> = full.subsets().filter(|&s| fam.member_for(kind, s)).collect();
            for x in full.subsets() {
                for k in 1..=k_max {
                    let expect = brute(&members, kind, x, k);
                    assert_eq!(table.count(x, k).unwrap(), &BigInt::from(expect), "{kind} X={x:?} k={k}");
                    assert_eq!(table.decide(x, k), Some(expect > 0));
                }
            }
        }
    }

    #[test]
    fn a_table_examples() {
        let empty = independent_family(&Graph::empty(3).unwrap());
        assert_eq!(a_table(&empty, Frac::ONE).unwrap().get(Subset::full(3)).unwrap(), &BigInt::from(8));
        let tri = independent_family(&Graph::complete(3).unwrap());
        assert_eq!(a_table(&tri, Frac::ONE).unwrap().get(Subset::full(3)).unwrap(), &BigInt::from(4));
    }

    #[test]
    fn a_table_matches_subset_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_graph(8, 0.4, &mut rng);
        let fam = independent_family(&g);
        let a = a_table(&fam, Frac::HALF).unwrap();
        let p = aj_polys(&fam, Frac::HALF).unwrap();
        for (y, v) in a.iter() {
            assert_eq!(*v, BigInt::from(y.subsets().filter(|&z| g.is_independent(z)).count()));
            for j in 0..=y.len() {
                let direct = y.subsets().filter(|&z| z.len() == j && g.is_independent(z)).count();
                assert_eq!(p.get(y).unwrap().coeff(j), BigInt::from(direct));
            }
        }
    }

    #[test]
    fn triangle_polynomial_and_counts() {
        let fam = independent_family(&Graph::complete(3).unwrap());
        let v = Subset::full(3);
        let p = aj_polys(&fam, Frac::ONE).unwrap();
        assert_eq!(p.get(v).unwrap().coeffs(), &[1.into(), 3.into(), 0.into(), 0.into()]);
        assert_eq!(p.get(Subset::EMPTY).unwrap().coeff(0), BigInt::one());
        assert_eq!(cover_counts(&fam, Frac::ONE, 3).unwrap().count(v, 3).unwrap(), &BigInt::from(6));
        assert_eq!(partition_counts(&fam, Frac::ONE, 3).unwrap().count(v, 3).unwrap(), &BigInt::from(6));
        let pack = packing_counts(&fam, Frac::ONE, 3).unwrap();
        assert_eq!(pack.count(v, 1).unwrap(), &BigInt::from(4));
        assert_eq!(pack.count(Subset::EMPTY, 1).unwrap(), &BigInt::one());
        for kind in ProblemKind::ALL {
            let t = count_table(&fam, kind, Frac::ONE, 4).unwrap();
            assert!((1..=4).all(|k| t.count(Subset::EMPTY, k) == Some(&BigInt::one())));
        }
    }

    #[test]
    fn k_max_must_be_positive() {
        let fam = independent_family(&Graph::complete(3).unwrap());
        assert!(matches!(cover_counts(&fam, Frac::ONE, 0), Err(Error::InvalidK { .. })));
    }

    #[test]
    fn random_graphs_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..6 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(n, rng.gen_range(0.1..0.7), &mut rng);
            check_against_brute(&independent_family(&g), 4);
        }
    }

    #[test]
    fn explicit_systems_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..10 {
            let n = rng.gen_range(1..=6);
            let m = rng.gen_range(0..=6);
            let mut sets: Vec<Subset> = (0..m).map(|_| Subset(rng.gen_range(0..1u32 << n))).collect();
            sets.sort();
            sets.dedup();
            let sys = ExplicitSystem::new(Universe::new(n).unwrap(), sets).unwrap();
            check_against_brute(&explicit_family(&sys), 4);
        }
    }

    #[test]
    fn cover_decisions_are_monotone_and_partitions_are_covers() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_graph(9, 0.4, &mut rng);
        let fam = independent_family(&g);
        let alpha = Frac::new(2, 3);
        let cover = cover_counts(&fam, alpha, 6).unwrap();
        let part = partition_counts(&fam, alpha, 6).unwrap();
        let pack = packing_counts(&fam, alpha, 6).unwrap();
        for &x in cover.domain() {
            for k in 1..6 {
                assert!(!cover.decide(x, k).unwrap() || cover.decide(x, k + 1).unwrap());
            }
            for k in 1..=6 {
                if part.decide(x, k).unwrap() {
                    assert!(cover.decide(x, k).unwrap() && pack.decide(x, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn recurrence_counts_nonempty_independent_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = random_graph(10, 0.3, &mut rng);
        let fam = independent_family(&g);
        let alpha = Frac::new(27, 100);
        let rec = independent_set_counts(&g, alpha).unwrap();
        let a = a_table(&fam, alpha).unwrap();
        for (s, v) in rec.iter() {
            assert_eq!(v + 1, *a.get(s).unwrap());
        }
    }

    fn chi_oracle(g: &Graph, s: Subset) -> i64 {
        (0..=s.len())
            .find(|&k| {
                let members: Vec<Subset> = s.subsets().filter(|&t| !t.is_empty() && g.is_independent(t)).collect();
                brute(&members, ProblemKind::Cover, s, k) > 0
            })
            .unwrap() as i64
    }

    #[test]
    fn chi_table_matches_oracle() {
        let tri = Graph::complete(3).unwrap();
        assert_eq!(*chi_table(&tri, Frac::ONE).unwrap().get(Subset::full(3)).unwrap(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..3 {
            let g = random_graph(10, rng.gen_range(0.2..0.8), &mut rng);
            let chi = chi_table(&g, Frac::HALF).unwrap();
            for (s, &v) in chi.iter().filter(|(s, _)| s.len() <= 4) {
                assert_eq!(v, chi_oracle(&g, s), "S = {s:?}");
            }
        }
        assert!(chi_table(&tri, Frac::new(1, 10)).is_err());
    }

    #[test]
    fn dump_layout() {
        let fam = independent_family(&Graph::path(3).unwrap());
        let t = cover_counts(&fam, Frac::ONE, 2).unwrap();
        let mut buf = Vec::new();
        t.write_dump(&mut buf).unwrap();
        assert_eq!(buf.len(), 2 * 8 * 11);
        let rec = &buf[11 * 7..11 * 8];
        assert_eq!(u64::from_le_bytes(rec[..8].try_into().unwrap()), 7);
        assert_eq!(u16::from_le_bytes(rec[8..10].try_into().unwrap()), 1);
        assert_eq!(rec[10], 0);
        let rec = &buf[11 * 15..];
        assert_eq!(rec[10], 1);
    }
}
