//! Polynomials in `x_1..x_n` and `q_1..q_{n-1}` with integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qbgraph::DegreeVec;

/// A monomial `x^x q^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub x: Vec<u32>,
    pub q: DegreeVec,
}

impl Monomial {
    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    /// `deg x_i = 1`, `deg q_i = 2`.
    pub fn graded_degree(&self) -> u32 {
        self.x_degree() + 2 * self.q.total()
    }

    /// Exponents of `(q_1, ..., q_{n-1}, x_1, ..., x_n)`; the revlex-leading
    /// monomial is the lexicographically smallest of these.
    pub fn revlex_key(&self) -> Vec<u32> {
        self.q.0.iter().chain(&self.x).copied().collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &e) in self.x.iter().enumerate() {
            match e {
                0 => continue,
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{e}", i + 1)?,
            }
            any = true;
        }
        if !self.q.is_zero() {
            write!(f, "{}", self.q)?;
            any = true;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial over the integers; no zero terms are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> MultiPoly {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> MultiPoly {
        MultiPoly::monomial(n, vec![0; n], DegreeVec::zero(n), BigInt::one())
    }

    pub fn monomial(n: usize, x: Vec<u32>, q: DegreeVec, c: BigInt) -> MultiPoly {
        assert_eq!(x.len(), n);
        let mut p = MultiPoly::zero(n);
        p.add_term(Monomial { x, q }, c);
        p
    }

    /// `x^ρ` with `ρ = (n-1, ..., 1, 0)`.
    pub fn staircase(n: usize) -> MultiPoly {
        MultiPoly::monomial(n, (0..n as u32).rev().collect(), DegreeVec::zero(n), BigInt::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let x = m1.x.iter().zip(&m2.x).map(|(a, b)| a + b).collect();
                out.add_term(Monomial { x, q: m1.q.add(&m2.q) }, c1 * c2);
            }
        }
        out
    }

    /// The `x`-polynomial multiplying `q^d`.
    pub fn q_coeff(&self, d: &DegreeVec) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            if &m.q == d {
                out.add_term(Monomial { x: m.x.clone(), q: DegreeVec::zero(self.n) }, c.clone());
            }
        }
        out
    }

    /// Every `q`-exponent that occurs.
    pub fn q_support(&self) -> Vec<DegreeVec> {
        let mut qs: Vec<DegreeVec> = self.terms.keys().map(|m| m.q.clone()).collect();
        qs.sort();
        qs.dedup();
        qs
    }

    /// Set every `q_i = 0`.
    pub fn at_q_zero(&self) -> MultiPoly {
        self.q_coeff(&DegreeVec::zero(self.n))
    }

    /// Set every `x_i = 0`; the constant term in `x` (a polynomial in `q`).
    pub fn at_x_zero(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            if m.x_degree() == 0 {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Split into homogeneous pieces by `x`-degree.
    pub fn by_x_degree(&self) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.x_degree()).or_insert_with(|| MultiPoly::zero(self.n)).add_term(m.clone(), c.clone());
        }
        out
    }

    /// The revlex-leading term: smallest exponent vector over `(q, x)`.
    pub fn revlex_leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().min_by_key(|(m, _)| m.revlex_key())
    }

    /// The divided difference `∂_i P = (P - s_i P) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> MultiPoly {
        assert!(i >= 1 && i < self.n, "∂_{i} undefined for n={}", self.n);
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            let (a, b) = (m.x[i - 1], m.x[i]);
            // x_i^a x_{i+1}^b = (x_i x_{i+1})^min · (x_i^{a-b} or x_{i+1}^{b-a})
            let (lo, diff, sign) = if a >= b { (b, a - b, 1) } else { (a, b - a, -1) };
            for t in 0..diff {
                let mut x = m.x.clone();
                x[i - 1] = lo + diff - 1 - t;
                x[i] = lo + t;
                out.add_term(Monomial { x, q: m.q.clone() }, c * BigInt::from(sign));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = m.x_degree() == 0 && m.q.is_zero();
            if abs.is_one() && !unit {
                write!(f, "{m}")?;
            } else if unit {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, e: &[u32]) -> MultiPoly {
        MultiPoly::monomial(n, e.to_vec(), DegreeVec::zero(n), BigInt::one())
    }

    #[test]
    fn divided_differences() {
        // ∂_1 x1^2 = x1 + x2
        assert_eq!(x(3, &[2, 0, 0]).divided_difference(1), x(3, &[1, 0, 0]).add(&x(3, &[0, 1, 0])));
        // ∂_1 x2 = -1
        assert_eq!(x(3, &[0, 1, 0]).divided_difference(1), MultiPoly::one(3).scale(&BigInt::from(-1)));
        // symmetric in x1, x2 ⇒ killed
        assert!(x(3, &[1, 1, 2]).divided_difference(1).is_zero());
        assert_eq!(x(3, &[2, 1, 0]).to_string(), "x1^2x2");
    }
}
