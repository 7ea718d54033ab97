use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::setsys::{Subset, Universe};

use super::ring::Ring;

/// Universes up to this size use a 2^n array; larger ones a hash map.
pub const DENSE_LIMIT: usize = 24;

#[derive(Clone, Debug)]
enum Storage<R> {
    Dense(Vec<Option<R>>),
    Sparse(HashMap<u32, R>),
}

/// Values on the α-small subsets of an n-element universe (|X| ≤ ⌊αn⌋).
#[derive(Clone, Debug)]
pub struct SmallTable<R> {
    n: usize,
    alpha: Frac,
    max_card: usize,
    domain: Arc<Vec<Subset>>,
    store: Storage<R>,
    touched: u64,
}

/// s(n, α): the number of subsets with at most ⌊αn⌋ elements.
pub fn small_count(n: usize, alpha: Frac) -> u64 {
    let d = alpha.floor_mul(n).min(n);
    let mut c = 1u64;
    let mut total = 1u64;
    for i in 1..=d {
        c = c * (n - i + 1) as u64 / i as u64;
        total += c;
    }
    total
}

impl<R: Ring> SmallTable<R> {
    /// An empty table; every α-small entry must be set before transforming.
    pub fn new(n: usize, alpha: Frac) -> Result<SmallTable<R>> {
        let universe = Universe::new(n)?;
        if alpha > Frac::ONE {
            return Err(Error::InvalidAlpha(alpha.to_string()));
        }
        let max_card = alpha.floor_mul(n).min(n);
        let domain = Arc::new(universe.subsets_up_to(max_card));
        let store = if n <= DENSE_LIMIT {
            Storage::Dense(vec![None; 1usize << n])
        } else {
            Storage::Sparse(HashMap::with_capacity(domain.len()))
        };
        Ok(SmallTable {
            n,
            alpha,
            max_card,
            domain,
            store,
            touched: 0,
        })
    }

    /// Table with `f(X)` on every α-small X.
    pub fn from_fn(n: usize, alpha: Frac, mut f: impl FnMut(Subset) -> R) -> Result<SmallTable<R>> {
        let mut t = SmallTable::new(n, alpha)?;
        let domain = Arc::clone(&t.domain);
        for &x in domain.iter() {
            t.put(x, f(x));
        }
        Ok(t)
    }

    /// Same domain as `self`, values `f(X, self[X])`.
    pub fn map<S: Ring>(&self, mut f: impl FnMut(Subset, &R) -> S) -> Result<SmallTable<S>> {
        let store = match &self.store {
            Storage::Dense(v) => {
                let mut out = vec![None; v.len()];
                for &x in self.domain.iter() {
                    let val = v[x.index()].as_ref().ok_or(Error::IncompleteTable(x.0))?;
                    out[x.index()] = Some(f(x, val));
                }
                Storage::Dense(out)
            }
            Storage::Sparse(m) => {
                let mut out = HashMap::with_capacity(m.len());
                for &x in self.domain.iter() {
                    let val = m.get(&x.0).ok_or(Error::IncompleteTable(x.0))?;
                    out.insert(x.0, f(x, val));
                }
                Storage::Sparse(out)
            }
        };
        Ok(SmallTable {
            n: self.n,
            alpha: self.alpha,
            max_card: self.max_card,
            domain: Arc::clone(&self.domain),
            store,
            touched: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Frac {
        self.alpha
    }

    /// ⌊αn⌋
    pub fn max_card(&self) -> usize {
        self.max_card
    }

    /// The α-small subsets in increasing mask order.
    pub fn domain(&self) -> &[Subset] {
        &self.domain
    }

    /// Entry updates performed by the last transform that produced this table.
    pub fn touched_counter(&self) -> u64 {
        self.touched
    }

    #[inline]
    pub fn is_small(&self, x: Subset) -> bool {
        x.len() <= self.max_card && x.is_subset_of(Subset::full(self.n))
    }

    pub fn set(&mut self, x: Subset, value: R) -> Result<()> {
        if !self.is_small(x) {
            return Err(Error::Precondition(format!(
                "{x:?} is not {}-small in a universe of {}",
                self.alpha, self.n
            )));
        }
        self.put(x, value);
        Ok(())
    }

    fn put(&mut self, x: Subset, value: R) {
        match &mut self.store {
            Storage::Dense(v) => v[x.index()] = Some(value),
            Storage::Sparse(m) => {
                m.insert(x.0, value);
            }
        }
    }

    #[inline]
    pub fn get(&self, x: Subset) -> Option<&R> {
        if x.len() > self.max_card {
            return None;
        }
        match &self.store {
            Storage::Dense(v) => v.get(x.index()).and_then(Option::as_ref),
            Storage::Sparse(m) => m.get(&x.0),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &R)> + '_ {
        self.domain.iter().filter_map(move |&x| self.get(x).map(|v| (x, v)))
    }

    fn check_complete(&self) -> Result<()> {
        match self.domain.iter().find(|&&x| self.get(x).is_none()) {
            Some(x) => Err(Error::IncompleteTable(x.0)),
            None => Ok(()),
        }
    }

    /// In-place Yates pass: for each element v (outer), every small X ∋ v gets
    /// `g(X) += g(X \ {v})`. Returns the number of updates.
    fn zeta_pass(&mut self) -> u64 {
        let mut touched = 0u64;
        let domain = Arc::clone(&self.domain);
        for v in 0..self.n {
            let bit = 1u32 << v;
            match &mut self.store {
                Storage::Dense(vals) => {
                    for &x in domain.iter() {
                        if x.0 & bit == 0 {
                            continue;
                        }
                        let (lo, hi) = vals.split_at_mut(x.index());
                        let below = lo[(x.0 ^ bit) as usize].as_ref().expect("complete table");
                        hi[0].as_mut().expect("complete table").add_assign_ref(below);
                        touched += 1;
                    }
                }
                Storage::Sparse(vals) => {
                    for &x in domain.iter() {
                        if x.0 & bit == 0 {
                            continue;
                        }
                        let below = vals[&(x.0 ^ bit)].clone();
                        vals.get_mut(&x.0).expect("complete table").add_assign_ref(&below);
                        touched += 1;
                    }
                }
            }
        }
        touched
    }

    /// Negates entries of odd cardinality. Returns the number of updates.
    fn sigma_pass(&mut self) -> u64 {
        let mut touched = 0u64;
        let domain = Arc::clone(&self.domain);
        for &x in domain.iter().filter(|x| x.len() % 2 == 1) {
            let entry = match &mut self.store {
                Storage::Dense(v) => v[x.index()].as_mut(),
                Storage::Sparse(m) => m.get_mut(&x.0),
            };
            entry.expect("complete table").negate();
            touched += 1;
        }
        touched
    }

    pub fn zeta_in_place(&mut self) -> Result<()> {
        self.check_complete()?;
        self.touched = self.zeta_pass();
        Ok(())
    }

    pub fn sigma_in_place(&mut self) -> Result<()> {
        self.check_complete()?;
        self.touched = self.sigma_pass();
        Ok(())
    }

    /// Möbius as σ∘ζ∘σ.
    pub fn mobius_in_place(&mut self) -> Result<()> {
        self.check_complete()?;
        self.touched = self.sigma_pass() + self.zeta_pass() + self.sigma_pass();
        Ok(())
    }
}

/// α-small zeta transform: `X ↦ Σ_{Y⊆X} f(Y)`.
pub fn zeta_small<R: Ring>(f: &SmallTable<R>) -> Result<SmallTable<R>> {
    let mut g = f.clone();
    g.zeta_in_place()?;
    Ok(g)
}

/// α-small Möbius transform: `X ↦ Σ_{Y⊆X} (−1)^{|X∖Y|} f(Y)`.
pub fn mobius_small<R: Ring>(f: &SmallTable<R>) -> Result<SmallTable<R>> {
    let mut g = f.clone();
    g.mobius_in_place()?;
    Ok(g)
}

/// α-small odd-negation transform: `X ↦ (−1)^{|X|} f(X)`.
pub fn sigma_small<R: Ring>(f: &SmallTable<R>) -> Result<SmallTable<R>> {
    let mut g = f.clone();
    g.sigma_in_place()?;
    Ok(g)
}
