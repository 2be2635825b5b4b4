//! Deodhar parametrizations and total nonnegativity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use super::field::{sign, Scalar};
use super::matrix::ExactMatrix;
use crate::error::{domain, Error, Result};
use crate::permcore::{shifted_rank, Perm};
use crate::tiltorder::{witness_a, SeqA};
use crate::tiltwords::{distinguished_subwords, regular_tilted_reduced_word, Factor, Subword, TiltedWord};

fn embed<F: Scalar>(n: usize, i: usize, block: [[F; 2]; 2], one: &F) -> ExactMatrix<F> {
    let mut m = ExactMatrix::identity(n, one);
    for (dr, row) in block.into_iter().enumerate() {
        for (dc, x) in row.into_iter().enumerate() {
            m.set(i + dr, i + dc, x);
        }
    }
    m
}

/// `y_i(p)`.
pub fn y_mat<F: Scalar>(n: usize, i: usize, p: &F) -> ExactMatrix<F> {
    let (z, o) = (p.zero_like(), p.one_like());
    embed(n, i, [[o.clone(), z.clone()], [p.clone(), o.clone()]], &o)
}

/// `x_i(m)`.
pub fn x_mat<F: Scalar>(n: usize, i: usize, m: &F) -> ExactMatrix<F> {
    let (z, o) = (m.zero_like(), m.one_like());
    embed(n, i, [[o.clone(), m.clone()], [z, o.clone()]], &o)
}

/// `ṡ_i`, with `-1` above the diagonal.
pub fn s_dot<F: Scalar>(n: usize, i: usize, one: &F) -> ExactMatrix<F> {
    let z = one.zero_like();
    embed(n, i, [[z.clone(), one.neg()], [one.clone(), z]], one)
}

/// `ṡ_i^{-1}`.
pub fn s_dot_inv<F: Scalar>(n: usize, i: usize, one: &F) -> ExactMatrix<F> {
    let z = one.zero_like();
    embed(n, i, [[z.clone(), one.clone()], [one.neg(), z]], one)
}

/// `g_1 ⋯ g_ℓ` with `ṡ` on `J^+`, `y(p)` on `J°`, `x(m) ṡ^{-1}` on `J^-`;
/// bars contribute the identity. `p` and `m` follow the order of
/// `sub.jcirc` and `sub.jminus`. `one` fixes the field.
pub fn deodhar_point_in<F: Scalar>(sub: &Subword, p: &[F], m: &[F], one: &F) -> Result<ExactMatrix<F>> {
    if p.len() != sub.jcirc.len() || m.len() != sub.jminus.len() {
        return domain(format!(
            "expected {} J° and {} J- parameters, got {} and {}",
            sub.jcirc.len(),
            sub.jminus.len(),
            p.len(),
            m.len()
        ));
    }
    if p.iter().any(|x| x.vanishes()) {
        return domain("J° parameters must be nonzero");
    }
    let n = sub.parent.n();
    let mut acc = ExactMatrix::identity(n, one);
    for (j0, f) in sub.parent.factors().iter().enumerate() {
        let j = j0 + 1;
        let Factor::Gen(i) = *f else { continue };
        let g = if let Some(t) = sub.jcirc.iter().position(|&x| x == j) {
            y_mat(n, i, &p[t])
        } else if let Some(t) = sub.jminus.iter().position(|&x| x == j) {
            x_mat(n, i, &m[t]).mul(&s_dot_inv(n, i, one))?
        } else {
            s_dot(n, i, one)
        };
        acc = acc.mul(&g)?;
    }
    Ok(acc)
}

/// [`deodhar_point_in`] over the rationals.
pub fn deodhar_point(sub: &Subword, p: &[BigRational], m: &[BigRational]) -> Result<ExactMatrix<BigRational>> {
    deodhar_point_in(sub, p, m, &BigRational::one())
}

/// Per-`J°` signs and the full sign-vector trace `sign^(0), ..., sign^(ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnnSigns {
    pub signs: Vec<i8>,
    pub trace: Vec<Vec<i8>>,
}

/// Runs the sign-vector construction along a positive distinguished subword.
pub fn tnn_signs(sub: &Subword) -> Result<TnnSigns> {
    if !sub.jminus.is_empty() {
        return domain("tnn_signs needs the positive distinguished subword (J- must be empty)");
    }
    let word = &sub.parent;
    let bars = word.bar_data();
    let mut cur = vec![1i8; word.n()];
    let mut trace = vec![cur.clone()];
    let mut signs = Vec::new();
    for (j0, f) in word.factors().iter().enumerate() {
        let j = j0 + 1;
        match *f {
            Factor::Bar => {
                let &(_, q, p) = bars.iter().find(|b| b.0 == j).expect("bar data covers every bar");
                if p % 2 == 1 {
                    for x in &mut cur[p..q] {
                        *x = -*x;
                    }
                }
            }
            Factor::Gen(i) => {
                if sub.jcirc.contains(&j) {
                    signs.push(cur[i - 1] * cur[i]);
                } else {
                    cur.swap(i - 1, i);
                }
            }
        }
        trace.push(cur.clone());
    }
    Ok(TnnSigns { signs, trace })
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// For every `k`, the Plücker coordinates with rows sorted by `<_{a_k}` are
/// all `≥ 0` or all `≤ 0`.
pub fn is_tnn(m: &ExactMatrix<BigRational>, a: &SeqA) -> bool {
    let n = m.n();
    (1..=n).all(|k| {
        let mut seen = 0;
        for mut rows in k_subsets(n, k) {
            rows.sort_by_key(|&x| shifted_rank(n, a.at(k), x));
            let s = sign(&m.minor(&rows));
            if s != 0 {
                if seen != 0 && s != seen {
                    return false;
                }
                seen = s;
            }
        }
        true
    })
}

/// A random positive rational with numerator at most `3 * bound`.
fn random_nonzero(rng: &mut impl Rng, bound: i64) -> BigRational {
    let num = rng.gen_range(1..=bound * 3);
    let den = rng.gen_range(1..=3);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A random point of `T°_{u,v}`: a random distinguished subword of the
/// regular tilted word of `v`, with random rational parameters.
pub fn sample_deodhar(u: &Perm, v: &Perm, rng: &mut impl Rng) -> Result<(Subword, ExactMatrix<BigRational>)> {
    let a = witness_a(u, v)?;
    let word = regular_tilted_reduced_word(&a, v)?;
    let subs = distinguished_subwords(&word, u)?;
    if subs.is_empty() {
        return Err(Error::Inconsistency(format!("no distinguished subwords for ({u},{v})")));
    }
    let sub = subs[rng.gen_range(0..subs.len())].clone();
    let p: Vec<BigRational> = (0..sub.jcirc.len())
        .map(|_| {
            let x = random_nonzero(rng, 5);
            if rng.gen_bool(0.5) {
                -x
            } else {
                x
            }
        })
        .collect();
    let m: Vec<BigRational> = (0..sub.jminus.len())
        .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-5..=5))))
        .collect();
    let pt = deodhar_point(&sub, &p, &m)?;
    Ok((sub, pt))
}

/// A random totally nonnegative point: positive parameters with the signs
/// from [`tnn_signs`].
pub fn sample_tnn(word: &TiltedWord, sub: &Subword, rng: &mut impl Rng) -> Result<ExactMatrix<BigRational>> {
    let signs = tnn_signs(sub)?.signs;
    let p: Vec<BigRational> = signs
        .iter()
        .map(|&s| {
            let x = random_nonzero(rng, 5);
            if s < 0 {
                -x
            } else {
                x
            }
        })
        .collect();
    if sub.parent != *word {
        return domain("subword does not belong to the given word");
    }
    deodhar_point(sub, &p, &[])
}
