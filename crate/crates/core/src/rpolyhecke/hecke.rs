//! The Hecke algebra of `S_n` over `Z[q, q^{-1}]` in the basis `{T_w}`.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::LaurentPoly;
use crate::permcore::Perm;
use crate::tiltwords::{canonical_reduced_word, Factor, TiltedWord};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElt {
    n: usize,
    terms: BTreeMap<Perm, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero(n: usize) -> HeckeElt {
        HeckeElt { n, terms: BTreeMap::new() }
    }

    /// The basis element `T_w`.
    pub fn basis(w: &Perm) -> HeckeElt {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), LaurentPoly::one());
        HeckeElt { n: w.n(), terms }
    }

    pub fn identity(n: usize) -> HeckeElt {
        HeckeElt::basis(&Perm::identity(n))
    }

    /// `T_i`.
    pub fn gen(n: usize, i: usize) -> HeckeElt {
        HeckeElt::basis(&Perm::simple(n, i))
    }

    /// `T_i^{-1} = q^{-1} T_i - (1 - q^{-1})`.
    pub fn gen_inverse(n: usize, i: usize) -> HeckeElt {
        HeckeElt::identity(n).mul_gen_inverse(i)
    }

    /// `T_{i_1} ... T_{i_k}` for a word given by its generator indices.
    pub fn from_word(n: usize, gens: &[usize]) -> HeckeElt {
        gens.iter().fold(HeckeElt::identity(n), |x, &i| x.mul_gen(i))
    }

    /// The product of `T_i` over the generators of a tilted word; bars are ignored.
    pub fn from_tilted_word(word: &TiltedWord) -> HeckeElt {
        HeckeElt::from_word(word.n(), &generators(word))
    }

    /// `(T_{i_1} ... T_{i_k})^{-1}` for a tilted word, bars ignored.
    pub fn inverse_of_tilted_word(word: &TiltedWord) -> HeckeElt {
        generators(word).iter().rev().fold(HeckeElt::identity(word.n()), |x, &i| x.mul_gen_inverse(i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Perm) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, w: Perm, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt::zero(self.n);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// `self * T_i`, using `T_w T_i = T_{ws_i}` if the length goes up and
    /// `(q-1) T_w + q T_{ws_i}` otherwise.
    pub fn mul_gen(&self, i: usize) -> HeckeElt {
        let q = LaurentPoly::q();
        let qm1 = LaurentPoly::q_minus_one();
        let mut out = HeckeElt::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.mul_simple(i);
            if w.at(i) < w.at(i + 1) {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c * &qm1);
                out.add_term(ws, c * &q);
            }
        }
        out
    }

    /// `self * T_i^{-1}`.
    pub fn mul_gen_inverse(&self, i: usize) -> HeckeElt {
        let qinv = LaurentPoly::q_inv();
        let c0 = &qinv - &LaurentPoly::one();
        self.mul_gen(i).scale(&qinv).add(&self.scale(&c0))
    }

    /// Algebra product, expanding `other` through reduced words.
    pub fn mul(&self, other: &HeckeElt) -> HeckeElt {
        assert_eq!(self.n, other.n, "Hecke product: size mismatch");
        let mut out = HeckeElt::zero(self.n);
        for (w, c) in &other.terms {
            let prod = canonical_reduced_word(w).into_iter().fold(self.clone(), |x, i| x.mul_gen(i));
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// The trace `ε`: the coefficient of `T_id`.
    pub fn trace(&self) -> LaurentPoly {
        self.coeff(&Perm::identity(self.n))
    }
}

fn generators(word: &TiltedWord) -> Vec<usize> {
    word.factors()
        .iter()
        .filter_map(|f| match f {
            Factor::Gen(i) => Some(*i),
            Factor::Bar => None,
        })
        .collect()
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}) T_{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation_and_inverse() {
        for i in 1..3 {
            let t = HeckeElt::gen(3, i);
            let sq = t.mul(&t);
            let expected = t.scale(&LaurentPoly::q_minus_one()).add(&HeckeElt::identity(3).scale(&LaurentPoly::q()));
            assert_eq!(sq, expected);
            assert_eq!(t.mul(&HeckeElt::gen_inverse(3, i)), HeckeElt::identity(3));
            assert_eq!(HeckeElt::gen_inverse(3, i).mul(&t), HeckeElt::identity(3));
        }
    }

    #[test]
    fn trace_of_basis() {
        for w in Perm::all(3) {
            let expected = if w.is_identity() { LaurentPoly::one() } else { LaurentPoly::zero() };
            assert_eq!(HeckeElt::basis(&w).trace(), expected);
        }
    }
}
