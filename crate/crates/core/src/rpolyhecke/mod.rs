//! Classical and tilted R-polynomials.
//!
//! The tilted R-polynomial is computed three ways: a sum over distinguished
//! subwords of a regular tilted reduced word, the descent/flatten recursion,
//! and a trace in the Hecke algebra.

pub mod hecke;
pub mod poly;

use std::collections::HashMap;

use num_bigint::BigInt;

pub use hecke::HeckeElt;
pub use poly::{LaurentPoly, Poly, QPoly};

use crate::error::{domain, Error, Result};
use crate::permcore::{bruhat_leq, Perm};
use crate::qbgraph::{self, ReflectionOrder};
use crate::tiltorder::{a_descent_state, a_descents, a_length, a_lesssim, witness_a, DescentState, SeqA};
use crate::tiltwords::{distinguished_subwords, flatten, jumps, regular_tilted_reduced_word, tilted_reduced_word, TiltedWord};

fn same_n(u: &Perm, v: &Perm) -> Result<()> {
    if u.n() != v.n() {
        return domain(format!("{u} and {v} have different sizes"));
    }
    Ok(())
}

/// Classical R-polynomial `R_{u,v}` by the descent recursion.
pub fn classical_r(u: &Perm, v: &Perm) -> Result<QPoly> {
    same_n(u, v)?;
    fn go(u: &Perm, v: &Perm, memo: &mut HashMap<(Perm, Perm), QPoly>) -> QPoly {
        if u == v {
            return QPoly::one();
        }
        if !bruhat_leq(u, v) {
            return QPoly::zero();
        }
        if let Some(r) = memo.get(&(u.clone(), v.clone())) {
            return r.clone();
        }
        let i = v.descents()[0];
        let (us, vs) = (u.mul_simple(i), v.mul_simple(i));
        let r = if u.at(i) > u.at(i + 1) {
            go(&us, &vs, memo)
        } else {
            &QPoly::q() * &go(&us, &vs, memo) + &QPoly::q_minus_one() * &go(u, &vs, memo)
        };
        memo.insert((u.clone(), v.clone()), r.clone());
        r
    }
    Ok(go(u, v, &mut HashMap::new()))
}

/// `(-q)^{ℓ(v)-ℓ(u)} ε(T_v^{-1} T_u)` from classical reduced words.
pub fn classical_r_hecke(u: &Perm, v: &Perm) -> Result<QPoly> {
    same_n(u, v)?;
    if !bruhat_leq(u, v) {
        return Ok(QPoly::zero());
    }
    let ones = SeqA::ones(u.n());
    hecke_formula(&tilted_reduced_word(&ones, u)?, &tilted_reduced_word(&ones, v)?, v.length() - u.length())
}

/// `(-q)^ℓ ε(T_v^{-1} T_u)`. With the true inverse `T_i^{-1}` the sign
/// `(-1)^ℓ` is needed; it is absorbed if one uses `q^{-1}T_i + 1 - q^{-1}`
/// in place of the inverse, which is not an inverse under `T_i^2 = (q-1)T_i + q`.
fn hecke_formula(word_u: &TiltedWord, word_v: &TiltedWord, ell: usize) -> Result<QPoly> {
    let x = HeckeElt::inverse_of_tilted_word(word_v).mul(&HeckeElt::from_tilted_word(word_u));
    let mut r = x.trace().shift(ell as i32);
    if ell % 2 == 1 {
        r = -&r;
    }
    r.to_qpoly().ok_or_else(|| Error::Inconsistency(format!("Hecke trace {r} is not a polynomial")))
}

/// `Σ (q-1)^{|J°|} q^{|J^-|}` over the distinguished subwords of `word_v` for `u`.
pub fn deodhar_sum(word_v: &TiltedWord, u: &Perm) -> Result<QPoly> {
    let subs = distinguished_subwords(word_v, u)?;
    let qm1 = QPoly::q_minus_one();
    Ok(subs.iter().fold(QPoly::zero(), |acc, s| {
        &acc + &(&qm1.pow(s.jcirc.len() as u32) * &QPoly::monomial(1, s.jminus.len() as u32))
    }))
}

/// Tilted R-polynomial from the distinguished subwords of a regular word for `v`.
pub fn rtilt_deodhar(u: &Perm, v: &Perm) -> Result<QPoly> {
    same_n(u, v)?;
    let a = witness_a(u, v)?;
    deodhar_sum(&regular_tilted_reduced_word(&a, v)?, u)
}

/// Tilted R-polynomial by the descent/flatten recursion from `a = witness_a(u,v)`.
pub fn rtilt_recursive(u: &Perm, v: &Perm) -> Result<QPoly> {
    same_n(u, v)?;
    let a = witness_a(u, v)?;
    rtilt_recursive_with(&a, u, v)
}

/// `R_{u,v,a}` by the recursion, for any `a`.
pub fn rtilt_recursive_with(a: &SeqA, u: &Perm, v: &Perm) -> Result<QPoly> {
    type Memo = HashMap<(Perm, Perm, SeqA), QPoly>;
    fn go(a: &SeqA, u: &Perm, v: &Perm, depth: usize, memo: &mut Memo) -> Result<QPoly> {
        if u == v {
            return Ok(QPoly::one());
        }
        if !a_lesssim(a, u, v) {
            return Ok(QPoly::zero());
        }
        // each step removes a generator or a bar from a tilted reduced word of v
        if depth > v.n() * v.n() + v.n() {
            return Err(Error::Inconsistency(format!("R recursion for ({u},{v},{a}) does not terminate")));
        }
        let key = (u.clone(), v.clone(), a.clone());
        if let Some(r) = memo.get(&key) {
            return Ok(r.clone());
        }
        let r = match a_descents(a, v).first() {
            Some(&i) => {
                let (us, vs) = (u.mul_simple(i), v.mul_simple(i));
                match a_descent_state(a, u, i) {
                    DescentState::Descent => go(a, &us, &vs, depth + 1, memo)?,
                    _ => {
                        &QPoly::q() * &go(a, &us, &vs, depth + 1, memo)?
                            + &QPoly::q_minus_one() * &go(a, u, &vs, depth + 1, memo)?
                    }
                }
            }
            None => {
                if jumps(a).is_empty() {
                    return Err(Error::Inconsistency(format!("no descent and no jump for ({u},{v},{a})")));
                }
                go(&flatten(a)?, u, v, depth + 1, memo)?
            }
        };
        memo.insert(key, r.clone());
        Ok(r)
    }
    if a.n() != u.n() {
        return domain("size mismatch");
    }
    go(a, u, v, 0, &mut HashMap::new())
}

/// Tilted R-polynomial as `(-q)^{ℓ(u,v)} ε(T_v^{-1} T_u)` with tilted reduced words.
pub fn rtilt_hecke(u: &Perm, v: &Perm) -> Result<QPoly> {
    same_n(u, v)?;
    let a = witness_a(u, v)?;
    let ell = a_length(&a, v) - a_length(&a, u);
    hecke_formula(&tilted_reduced_word(&a, u)?, &tilted_reduced_word(&a, v)?, ell)
}

/// All three tilted routes, required to agree.
pub fn rtilt_checked(u: &Perm, v: &Perm) -> Result<QPoly> {
    let d = rtilt_deodhar(u, v)?;
    let r = rtilt_recursive(u, v)?;
    let h = rtilt_hecke(u, v)?;
    if d != r || d != h {
        return Err(Error::Inconsistency(format!("R^tilt({u},{v}): deodhar {d}, recursive {r}, hecke {h}")));
    }
    Ok(d)
}

/// Value at an integer point.
pub fn eval_at(p: &QPoly, q: i64) -> BigInt {
    p.eval(&BigInt::from(q))
}

/// Exploratory: the increasing-path expression
/// `q^{ℓ/2} Σ_P (q^{1/2} - q^{-1/2})^{ℓ(P)}` over label-increasing paths in
/// the interval graph of `[u,v]`, written in `t = q^{1/2}`. Returns the
/// expression and whether it equals `R^tilt_{u,v}(t^2)`.
pub fn increasing_path_expression(u: &Perm, v: &Perm, order: &ReflectionOrder) -> Result<(LaurentPoly, bool)> {
    let iv = qbgraph::tilted_interval(u, v)?;
    let n = u.n();
    // edges w -> w t_ij of the interval graph with w ≺ w t_ij
    let mut adj: HashMap<Perm, Vec<(usize, Perm)>> = HashMap::new();
    for w in iv.members() {
        for i in 1..=n {
            for j in i + 1..=n {
                let x = w.swap_positions(i, j);
                if iv.contains(&x) && iv.leq(w, &x)? {
                    adj.entry(w.clone()).or_default().push((order.position(i, j), x));
                }
            }
        }
    }
    // counts[m] = number of increasing paths with m edges
    let mut counts: HashMap<usize, u64> = HashMap::new();
    fn dfs(x: &Perm, v: &Perm, last: Option<usize>, m: usize, adj: &HashMap<Perm, Vec<(usize, Perm)>>, counts: &mut HashMap<usize, u64>) {
        if x == v {
            *counts.entry(m).or_default() += 1;
        }
        for (p, y) in adj.get(x).into_iter().flatten() {
            if last.is_none_or(|l| *p > l) {
                dfs(y, v, Some(*p), m + 1, adj, counts);
            }
        }
    }
    dfs(u, v, None, 0, &adj, &mut counts);
    let t_minus = LaurentPoly::q() - LaurentPoly::q_inv();
    let mut total = LaurentPoly::zero();
    for (&m, &c) in &counts {
        total = &total + &t_minus.pow(m as u32).scale(&BigInt::from(c));
    }
    let expr = total.shift(iv.ell as i32);
    let r = rtilt_recursive(u, v)?;
    let r_in_t = Poly::<i32>::from_terms(r.terms().map(|(&e, c)| (2 * e as i32, c.clone())));
    let matches = expr == r_in_t;
    Ok((expr, matches))
}

impl Poly<i32> {
    fn from_terms(it: impl Iterator<Item = (i32, BigInt)>) -> Self {
        it.fold(Self::zero(), |acc, (e, c)| &acc + &Self::monomial(c, e))
    }
}
