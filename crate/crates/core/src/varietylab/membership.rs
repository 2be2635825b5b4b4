//! Membership in tilted Richardson varieties, by rank conditions and by
//! multi-Plücker vanishing.

use super::field::Scalar;
use super::matrix::ExactMatrix;
use crate::error::{domain, Error, Result};
use crate::permcore::{cyclic_interval, Perm};
use crate::qbgraph::tilted_interval;
use crate::tiltorder::{witness_a, SeqA};

/// Precomputed cyclic-region rank conditions for one pair `(u, v)`.
#[derive(Clone, Debug)]
pub struct RankConditions {
    a: SeqA,
    /// `(rows, k, bound)`: `rank_rows(F_k) ≤ bound`, with equality in the open part.
    conds: Vec<(Vec<usize>, usize, usize)>,
}

impl RankConditions {
    pub fn new(u: &Perm, v: &Perm) -> Result<RankConditions> {
        if u.n() != v.n() {
            return domain("size mismatch");
        }
        let n = u.n();
        let a = witness_a(u, v)?;
        let mut conds = Vec::new();
        for k in 1..n {
            let (uk, vk) = (u.prefix_set(k), v.prefix_set(k));
            let ak = a.at(k);
            for i in 1..=n {
                if i == ak {
                    continue;
                }
                let lo = cyclic_interval(n, ak, i, true, false);
                let hi = cyclic_interval(n, i, ak, true, false);
                let bu = lo.iter().filter(|&&x| uk.contains(x)).count();
                let bv = hi.iter().filter(|&&x| vk.contains(x)).count();
                conds.push((lo, k, bu));
                conds.push((hi, k, bv));
            }
        }
        Ok(RankConditions { a, conds })
    }

    pub fn a(&self) -> &SeqA {
        &self.a
    }

    /// Assumes `m` invertible.
    pub fn holds<F: Scalar>(&self, m: &ExactMatrix<F>, open: bool) -> bool {
        self.conds.iter().all(|(rows, k, bound)| {
            let r = m.rank(rows, *k);
            if open {
                r == *bound
            } else {
                r <= *bound
            }
        })
    }
}

fn check_shape<F: Scalar>(m: &ExactMatrix<F>, u: &Perm, v: &Perm) -> Result<()> {
    if m.n() != u.n() || u.n() != v.n() {
        return domain("matrix and permutations must share n");
    }
    if !m.is_invertible() {
        return domain("matrix is singular; it does not represent a flag");
    }
    Ok(())
}

/// `F ∈ T_{u,v}` (or `T°_{u,v}` when `open`) by the rank conditions, with
/// `a = witness_a(u,v)`.
pub fn in_tilted_richardson<F: Scalar>(m: &ExactMatrix<F>, u: &Perm, v: &Perm, open: bool) -> Result<bool> {
    check_shape(m, u, v)?;
    Ok(RankConditions::new(u, v)?.holds(m, open))
}

/// `Δ_w = Π_k Δ_{w[k]}` for `k < n`.
pub fn multi_plucker<F: Scalar>(m: &ExactMatrix<F>, w: &Perm) -> F {
    let one = m.get(1, 1).one_like();
    (1..m.n()).fold(one, |acc, k| {
        if acc.vanishes() {
            return acc;
        }
        acc.mul(&m.minor(w.prefix_set(k).elems()))
    })
}

/// Precomputed multi-Plücker test for one pair `(u, v)`.
#[derive(Clone, Debug)]
pub struct PluckerConditions {
    u: Perm,
    v: Perm,
    outside: Vec<Perm>,
}

impl PluckerConditions {
    pub fn new(u: &Perm, v: &Perm) -> Result<PluckerConditions> {
        let iv = tilted_interval(u, v)?;
        let outside = Perm::all(u.n()).into_iter().filter(|w| !iv.contains(w)).collect();
        Ok(PluckerConditions { u: u.clone(), v: v.clone(), outside })
    }

    pub fn holds<F: Scalar>(&self, m: &ExactMatrix<F>, open: bool) -> bool {
        if open && (multi_plucker(m, &self.u).vanishes() || multi_plucker(m, &self.v).vanishes()) {
            return false;
        }
        self.outside.iter().all(|w| multi_plucker(m, w).vanishes())
    }
}

/// Membership by vanishing of `Δ_w` for every `w ∉ [u,v]`; the open part
/// also requires `Δ_u Δ_v ≠ 0`.
pub fn in_tilted_richardson_plucker<F: Scalar>(m: &ExactMatrix<F>, u: &Perm, v: &Perm, open: bool) -> Result<bool> {
    check_shape(m, u, v)?;
    Ok(PluckerConditions::new(u, v)?.holds(m, open))
}

/// Both routes; disagreement is an [`Error::Inconsistency`].
pub fn in_tilted_richardson_checked<F: Scalar>(m: &ExactMatrix<F>, u: &Perm, v: &Perm, open: bool) -> Result<bool> {
    let x = in_tilted_richardson(m, u, v, open)?;
    let y = in_tilted_richardson_plucker(m, u, v, open)?;
    if x != y {
        return Err(Error::Inconsistency(format!(
            "membership in T({u},{v}) open={open}: rank route {x}, Plücker route {y}\n{m}"
        )));
    }
    Ok(x)
}
