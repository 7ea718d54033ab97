use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest universe a [`Subset`] can address.
pub const MAX_UNIVERSE: usize = 32;

/// A subset of a universe of at most 32 elements, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == MAX_UNIVERSE {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Subset {
        Subset(1u32 << v)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        Subset(elems.into_iter().fold(0u32, |m, v| m | (1u32 << v)))
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(self, v: usize) -> Subset {
        Subset(self.0 | (1u32 << v))
    }

    #[inline]
    pub fn remove(self, v: usize) -> Subset {
        Subset(self.0 & !(1u32 << v))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing mask order, starting at the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            outer: self.0,
            next: Some(0),
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration in increasing order (`next = (cur - outer) & outer`).
pub struct Subsets {
    outer: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Subset;

    #[inline]
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.outer {
            None
        } else {
            Some(cur.wrapping_sub(self.outer) & self.outer)
        };
        Some(Subset(cur))
    }
}

/// The ground set of an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    n: usize,
    labels: Option<Vec<String>>,
}

impl Universe {
    pub fn new(n: usize) -> Result<Universe> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        Ok(Universe { n, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Universe> {
        let mut u = Universe::new(labels.len())?;
        u.labels = Some(labels);
        Ok(u)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    pub fn check(&self, s: Subset) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::OutOfUniverse { mask: s.0, n: self.n })
        }
    }

    /// Every subset with at most `max_card` elements, in increasing mask order.
    pub fn subsets_up_to(&self, max_card: usize) -> Vec<Subset> {
        if max_card >= self.n {
            return self.full().subsets().collect();
        }
        // Gosper's hack per cardinality, then sort to mask order.
        let mut out = Vec::new();
        for c in 0..=max_card {
            if c == 0 {
                out.push(Subset::EMPTY);
                continue;
            }
            let mut m: u64 = (1u64 << c) - 1;
            let limit = 1u64 << self.n;
            while m < limit {
                out.push(Subset(m as u32));
                let t = m | (m - 1);
                m = (t + 1) | (((!t & (t + 1)) - 1) >> (m.trailing_zeros() + 1));
            }
        }
        out.sort_unstable();
        out
    }
}
