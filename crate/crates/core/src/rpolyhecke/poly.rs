//! Univariate polynomials in `q` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent types usable in [`Poly`]: `u32` for ordinary polynomials,
/// `i32` for Laurent polynomials.
pub trait Exponent: Copy + Ord + fmt::Display + Add<Output = Self> + Zero + One + FromStr {}
impl Exponent for u32 {}
impl Exponent for i32 {}

/// A polynomial `Σ c_e q^e`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<E: Exponent> {
    coeffs: BTreeMap<E, BigInt>,
}

/// Polynomial in `q`.
pub type QPoly = Poly<u32>;
/// Laurent polynomial in `q`.
pub type LaurentPoly = Poly<i32>;

impl<E: Exponent> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, E::zero())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, E::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, E::zero())
    }

    pub fn monomial(c: impl Into<BigInt>, e: E) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Poly { coeffs }
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::q() - Self::one()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: E) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &BigInt)> {
        self.coeffs.iter()
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<E> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<E> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.values().next_back().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: E) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    fn add_term(&mut self, e: E, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }
}

impl QPoly {
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, (&e, c)| acc + c * num_traits::pow(q.clone(), e as usize))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        Poly { coeffs: self.coeffs.iter().map(|(&e, c)| (e as i32, c.clone())).collect() }
    }
}

impl LaurentPoly {
    /// `q^{-1}`.
    pub fn q_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// The same polynomial if no exponent is negative.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        if self.min_exponent().is_some_and(|e| e < 0) {
            return None;
        }
        Some(Poly { coeffs: self.coeffs.iter().map(|(&e, c)| (e as u32, c.clone())).collect() })
    }
}

impl<E: Exponent> Add for &Poly<E> {
    type Output = Poly<E>;
    fn add(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<E: Exponent> Sub for &Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<E: Exponent> Mul for &Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = Poly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<E: Exponent> Neg for &Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        Poly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<E: Exponent> $tr for Poly<E> {
            type Output = Poly<E>;
            fn $m(self, rhs: Poly<E>) -> Poly<E> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<E: Exponent> fmt::Display for Poly<E> {
    /// Descending powers with explicit signs, e.g. `q^2 - 2q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e.is_one() {
                write!(f, "q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl<E: Exponent> FromStr for Poly<E> {
    type Err = Error;

    /// Parses sums of terms like `3q^2`, `-q`, `+ 4`, `2*q^-1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot parse polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Poly::zero();
        let chars: Vec<char> = compact.chars().collect();
        let mut k = 0;
        while k < chars.len() {
            let mut sign = 1;
            if chars[k] == '+' || chars[k] == '-' {
                if chars[k] == '-' {
                    sign = -1;
                }
                k += 1;
            }
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            let mut coeff: BigInt = if digits.is_empty() { BigInt::one() } else { digits.parse().map_err(|_| bad())? };
            coeff *= sign;
            let mut e = E::zero();
            if k < chars.len() && chars[k] == 'q' {
                k += 1;
                e = E::one();
                if k < chars.len() && chars[k] == '^' {
                    k += 1;
                    let es = k;
                    if k < chars.len() && chars[k] == '-' {
                        k += 1;
                    }
                    while k < chars.len() && chars[k].is_ascii_digit() {
                        k += 1;
                    }
                    let text: String = chars[es..k].iter().collect();
                    e = text.parse().map_err(|_| bad())?;
                }
            } else if digits.is_empty() {
                return Err(bad());
            }
            out.add_term(e, coeff);
            if k < chars.len() && chars[k] != '+' && chars[k] != '-' {
                return Err(bad());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_printing() {
        let p = QPoly::q_minus_one().pow(2);
        assert_eq!(p.to_string(), "q^2 - 2q + 1");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(4));
        assert_eq!("q^2 - 2q + 1".parse::<QPoly>().unwrap(), p);
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!((-&QPoly::q()).to_string(), "-q");
        let l = LaurentPoly::q_inv() * LaurentPoly::q();
        assert_eq!(l, LaurentPoly::one());
        assert_eq!("2q^-1 - 3".parse::<LaurentPoly>().unwrap().to_string(), "-3 + 2q^-1");
        assert!("q^2 +".parse::<QPoly>().is_err());
        assert!(LaurentPoly::q_inv().to_qpoly().is_none());
    }
}
