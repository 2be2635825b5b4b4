//! Exact scalars: rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field element. Constants are produced "like" an existing
/// element so prime-field values can carry their modulus.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, x: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|x| self.mul(&x))
    }
}

pub type Rational = BigRational;

/// Convenience constructor for rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn from_i64_like(&self, x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Sign of a rational: -1, 0 or 1.
pub fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(x: i64, p: u64) -> Fp {
        Fp { v: x.rem_euclid(p as i64) as u64, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Scalar for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
    fn from_i64_like(&self, x: i64) -> Self {
        Fp::new(x, self.p)
    }
    fn vanishes(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp { v: (self.v + o.v) % self.p, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: (self.v + self.p - o.v) % self.p, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: (self.p - self.v) % self.p, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // Fermat: v^(p-2)
        let (mut base, mut e, mut acc) = (*self, self.p - 2, self.one_like());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Some(acc)
    }
}

/// Trial-division primality test, enough for the small moduli used here.
pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        for p in [2u64, 3, 5, 7, 101] {
            for x in 1..p as i64 {
                let a = Fp::new(x, p);
                assert_eq!(a.mul(&a.inv().unwrap()), a.one_like());
            }
        }
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }
}
