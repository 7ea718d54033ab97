use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The additive structure the subset transforms need.
pub trait Ring: Clone + Send + Sync {
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn negate(&mut self);
    fn is_zero_value(&self) -> bool;
}

impl Ring for BigInt {
    #[inline]
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    #[inline]
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    #[inline]
    fn negate(&mut self) {
        *self = -std::mem::take(self);
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for i64 {
    #[inline]
    fn add_assign_ref(&mut self, other: &Self) {
        *self += *other;
    }
    #[inline]
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= *other;
    }
    #[inline]
    fn negate(&mut self) {
        *self = -*self;
    }
    fn is_zero_value(&self) -> bool {
        *self == 0
    }
}

/// Integers modulo the Mersenne prime 2^61 − 1.
///
/// A zero residue does not prove a zero count, so decisions taken in this ring can
/// report "no" for an instance that has solutions (never the converse).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModP61(u64);

impl ModP61 {
    pub const P: u64 = (1u64 << 61) - 1;

    pub fn new(v: u64) -> ModP61 {
        ModP61(v % Self::P)
    }

    pub fn from_bigint(v: &BigInt) -> ModP61 {
        let p = BigInt::from(Self::P);
        let mut r = v % &p;
        if r < BigInt::zero() {
            r += &p;
        }
        ModP61(u64::try_from(r).expect("reduced below p"))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u32) -> ModP61 {
        let mut base = self;
        let mut acc = ModP61(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    #[inline]
    fn reduce(v: u64) -> ModP61 {
        let v = (v & Self::P) + (v >> 61);
        ModP61(if v >= Self::P { v - Self::P } else { v })
    }
}

impl std::ops::Mul for ModP61 {
    type Output = ModP61;

    #[inline]
    fn mul(self, other: ModP61) -> ModP61 {
        let prod = self.0 as u128 * other.0 as u128;
        let lo = (prod as u64) & Self::P;
        let hi = (prod >> 61) as u64;
        ModP61::reduce(lo + hi)
    }
}

impl fmt::Debug for ModP61 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 2^61-1)", self.0)
    }
}

impl Ring for ModP61 {
    #[inline]
    fn add_assign_ref(&mut self, other: &Self) {
        *self = ModP61::reduce(self.0 + other.0);
    }
    #[inline]
    fn sub_assign_ref(&mut self, other: &Self) {
        *self = ModP61::reduce(self.0 + (Self::P - other.0));
    }
    #[inline]
    fn negate(&mut self) {
        *self = ModP61::reduce(Self::P - self.0);
    }
    fn is_zero_value(&self) -> bool {
        self.0 == 0
    }
}

/// Dense polynomial over the integers, truncated at a fixed maximum degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPolynomial {
    coeffs: Vec<BigInt>,
}

impl ZPolynomial {
    pub fn zero(max_degree: usize) -> ZPolynomial {
        ZPolynomial {
            coeffs: vec![BigInt::zero(); max_degree + 1],
        }
    }

    /// `value · z^degree`, or zero if `degree` exceeds the cap.
    pub fn monomial(value: BigInt, degree: usize, max_degree: usize) -> ZPolynomial {
        let mut p = ZPolynomial::zero(max_degree);
        if degree <= max_degree {
            p.coeffs[degree] = value;
        }
        p
    }

    pub fn one(max_degree: usize) -> ZPolynomial {
        ZPolynomial::monomial(BigInt::one(), 0, max_degree)
    }

    /// (1 + z)^m, truncated.
    pub fn one_plus_z_pow(m: usize, max_degree: usize) -> ZPolynomial {
        let mut p = ZPolynomial::zero(max_degree);
        let mut c = BigInt::one();
        for i in 0..=m.min(max_degree) {
            p.coeffs[i] = c.clone();
            c = c * (m - i) / (i + 1);
        }
        p
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>, max_degree: usize) -> ZPolynomial {
        coeffs.resize(max_degree + 1, BigInt::zero());
        ZPolynomial { coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Schoolbook product truncated at this polynomial's cap.
    pub fn mul(&self, other: &ZPolynomial) -> ZPolynomial {
        let cap = self.max_degree();
        let mut out = ZPolynomial::zero(cap);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> ZPolynomial {
        let mut base = self.clone();
        let mut acc = ZPolynomial::one(self.max_degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn align(&mut self, other: &ZPolynomial) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
    }
}

impl Ring for ZPolynomial {
    fn add_assign_ref(&mut self, other: &Self) {
        self.align(other);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        self.align(other);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
    }
    fn negate(&mut self) {
        for a in &mut self.coeffs {
            a.negate();
        }
    }
    fn is_zero_value(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mersenne_arithmetic() {
        let a = ModP61::new(ModP61::P - 1);
        let mut b = a;
        b.add_assign_ref(&ModP61::new(2));
        assert_eq!(b.value(), 1);
        assert_eq!((a * a).value(), 1);
        let mut z = ModP61::new(5);
        z.negate();
        assert_eq!(z.value(), ModP61::P - 5);
        assert_eq!(ModP61::from_bigint(&BigInt::from(-1)).value(), ModP61::P - 1);
        assert_eq!(ModP61::new(3).pow(4).value(), 81);
    }

    #[test]
    fn polynomial_products_truncate() {
        let p = ZPolynomial::from_coeffs(vec![1.into(), 1.into()], 3);
        assert_eq!(p.pow(5), ZPolynomial::one_plus_z_pow(5, 3));
        assert_eq!(p.pow(5).coeffs(), &[1.into(), 5.into(), 10.into(), 10.into()]);
        assert_eq!(ZPolynomial::one_plus_z_pow(2, 4).coeffs(), &[1.into(), 2.into(), 1.into(), 0.into(), 0.into()]);
    }
}
