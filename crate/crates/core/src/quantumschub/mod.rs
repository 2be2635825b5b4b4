//! Schubert and path Schubert polynomials, the quantum Chevalley-Monk rule,
//! minimal-degree Gromov-Witten coefficients and descent cycling.

pub mod multipoly;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_gate, domain, Error, Result};
use crate::permcore::Perm;
use crate::qbgraph::{edge_weight, min_degree, out_edges, DegreeVec};
use crate::tiltorder::interval_s_invariant;

pub use multipoly::{Monomial, MultiPoly};

/// Integer coefficients on Schubert classes `σ_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertExpansion {
    pub n: usize,
    pub coeffs: BTreeMap<Perm, BigInt>,
}

impl SchubertExpansion {
    pub fn coeff(&self, w: &Perm) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// `σ_w ↦ σ_{w_0 w}`.
    pub fn relabel_by_w0(&self) -> SchubertExpansion {
        let w0 = Perm::longest(self.n);
        let coeffs = self.coeffs.iter().map(|(w, c)| (w0.compose(w), c.clone())).collect();
        SchubertExpansion { n: self.n, coeffs }
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, c)| if c.is_one() { format!("σ_{w}") } else { format!("{c}·σ_{w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Terms `q^d σ_w` with integer coefficients.
pub type QuantumExpansion = BTreeMap<(Perm, DegreeVec), BigInt>;

fn schubert_cache() -> &'static Mutex<HashMap<Perm, MultiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Perm, MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Schubert polynomial `𝔖_w`: `𝔖_{w_0} = x^ρ` and `𝔖_w = ∂_i 𝔖_{w s_i}`
/// for any ascent `i` of `w`.
pub fn schubert_poly(w: &Perm) -> MultiPoly {
    if let Some(p) = schubert_cache().lock().unwrap().get(w) {
        return p.clone();
    }
    let n = w.n();
    let p = match (1..n).find(|&i| w.at(i) < w.at(i + 1)) {
        None => MultiPoly::staircase(n),
        Some(i) => schubert_poly(&w.mul_simple(i)).divided_difference(i),
    };
    schubert_cache().lock().unwrap().insert(w.clone(), p.clone());
    p
}

/// Coefficient of `𝔖_w` in `p`, as the constant term of `∂_{i_1} ⋯ ∂_{i_m} p`
/// along a descent chain `w → w s_{i_1} → ⋯ → id`. Valid for any `p` in the
/// span of Schubert polynomials, including those of larger symmetric groups.
pub fn schubert_coeff_by_differences(p: &MultiPoly, w: &Perm) -> MultiPoly {
    let mut cur = w.clone();
    let mut acc = p.clone();
    while let Some(i) = cur.descents().first().copied() {
        acc = acc.divided_difference(i);
        cur = cur.mul_simple(i);
    }
    acc.at_x_zero()
}

/// Solves `Σ_w c_w 𝔖_w = p` over `w ∈ S_n` by exact elimination on the
/// monomial coefficients, one `x`-degree at a time.
pub fn expand_in_schubert_basis(p: &MultiPoly) -> Result<BTreeMap<Perm, BigRational>> {
    let n = p.n();
    if p.terms().any(|(m, _)| !m.q.is_zero()) {
        return domain("expansion needs a q-free polynomial; extract a q-coefficient first");
    }
    let mut out = BTreeMap::new();
    for (deg, piece) in p.by_x_degree() {
        let basis: Vec<Perm> = Perm::all(n).into_iter().filter(|w| w.length() as u32 == deg).collect();
        let polys: Vec<MultiPoly> = basis.iter().map(schubert_poly).collect();
        let mut monos: Vec<Monomial> = polys.iter().flat_map(|q| q.terms().map(|(m, _)| m.clone())).collect();
        monos.extend(piece.terms().map(|(m, _)| m.clone()));
        monos.sort();
        monos.dedup();
        let rows: Vec<Vec<BigRational>> = monos
            .iter()
            .map(|m| {
                polys
                    .iter()
                    .map(|q| BigRational::from_integer(q.coeff(m)))
                    .chain(std::iter::once(BigRational::from_integer(piece.coeff(m))))
                    .collect()
            })
            .collect();
        let sol = solve_augmented(rows, basis.len())
            .ok_or_else(|| Error::Domain(format!("degree-{deg} part is not in the span of Schubert polynomials of S_{n}")))?;
        for (w, c) in basis.into_iter().zip(sol) {
            if !c.is_zero() {
                out.insert(w, c);
            }
        }
    }
    Ok(out)
}

/// Row reduction of an augmented system with `k` unknowns. Returns the
/// unique solution, or `None` if the system is inconsistent or underdetermined.
fn solve_augmented(mut m: Vec<Vec<BigRational>>, k: usize) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let p = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in &mut m[r][c..] {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for cc in c..=k {
                    let t = &m[r][cc] * &f;
                    m[i][cc] -= t;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&i| m[i][k].clone()).collect())
}

/// `σ_{s_k} ⋆ σ_w = Σ q^{wt} σ_{w t_ij}` over edges `w → w t_ij` of `Γ_n`
/// with `i ≤ k < j`.
pub fn quantum_chevalley(k: usize, w: &Perm) -> Result<QuantumExpansion> {
    if k == 0 || k >= w.n() {
        return domain(format!("k={k} outside [1,{}]", w.n() - 1));
    }
    let mut out = QuantumExpansion::new();
    for e in out_edges(w) {
        if e.i <= k && k < e.j {
            *out.entry((e.target, e.weight)).or_default() += 1;
        }
    }
    Ok(out)
}

/// The path Schubert polynomial `𝔖_{u,v}(x, q)`: a sum over paths in `Γ_n`
/// split into segments `P_1 ⋯ P_{n-1}`, segment `k` using edges `t_ab` with
/// nondecreasing `a ≤ k < b` and distinct `b`.
pub fn path_schubert(u: &Perm, v: &Perm) -> Result<MultiPoly> {
    if u.n() != v.n() {
        return domain("size mismatch");
    }
    let n = u.n();
    check_gate("path Schubert polynomial", "PATH", n, 5)?;
    let mut ctx = PathCtx { n, v, beta: vec![0; n], out: MultiPoly::zero(n) };
    ctx.segment(1, u.clone(), DegreeVec::zero(n));
    Ok(ctx.out)
}

struct PathCtx<'a> {
    n: usize,
    v: &'a Perm,
    beta: Vec<u32>,
    out: MultiPoly,
}

impl PathCtx<'_> {
    fn segment(&mut self, k: usize, w: Perm, wt: DegreeVec) {
        if k == self.n {
            if &w == self.v {
                let x = (0..self.n).map(|i| (self.n - 1 - i) as u32 - self.beta[i]).collect();
                self.out.add_term(Monomial { x, q: wt }, BigInt::one());
            }
            return;
        }
        let mut used = vec![false; self.n + 1];
        self.steps(k, 1, &mut used, w, wt);
    }

    fn steps(&mut self, k: usize, min_a: usize, used: &mut [bool], w: Perm, wt: DegreeVec) {
        self.segment(k + 1, w.clone(), wt.clone());
        for a in min_a..=k {
            for b in k + 1..=self.n {
                if used[b] {
                    continue;
                }
                if let Some(e) = edge_weight(&w, a, b) {
                    used[b] = true;
                    self.beta[k - 1] += 1;
                    self.steps(k, a, used, w.swap_positions(a, b), wt.add(&e));
                    self.beta[k - 1] -= 1;
                    used[b] = false;
                }
            }
        }
    }
}

fn to_integer(c: &BigRational, what: impl Fn() -> String) -> Result<BigInt> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::Inconsistency(format!("{}: coefficient {c} is not a nonnegative integer", what())));
    }
    Ok(c.to_integer())
}

/// `{w ↦ c_{u,w}^{v,d_{u,v}}}` where the `q^{d_{u,v}}` part of
/// `𝔖_{u,v}(x,q)` equals `Σ_w c_{u,w}^{v,d} 𝔖_{w_0 w}`. The linear solve
/// is cross-checked against divided-difference extraction.
pub fn gw_min_degree(u: &Perm, v: &Perm) -> Result<SchubertExpansion> {
    let n = u.n();
    check_gate("Gromov-Witten expansion", "GW", n, 4)?;
    let d = min_degree(u, v)?;
    let piece = path_schubert(u, v)?.q_coeff(&d);
    let solved = expand_in_schubert_basis(&piece)?;
    let w0 = Perm::longest(n);
    let mut coeffs = BTreeMap::new();
    for y in Perm::all(n) {
        let by_solve = solved.get(&y).cloned().unwrap_or_else(BigRational::zero);
        let by_dd = schubert_coeff_by_differences(&piece, &y);
        let dd_value = by_dd.terms().next().map(|(_, c)| c.clone()).unwrap_or_default();
        if BigRational::from_integer(dd_value.clone()) != by_solve {
            return Err(Error::Inconsistency(format!(
                "Schubert coefficient of {y} in 𝔖_({u},{v}): solve gives {by_solve}, divided differences give {dd_value}"
            )));
        }
        let c = to_integer(&by_solve, || format!("c_({u},{},{v})", w0.compose(&y)))?;
        if !c.is_zero() {
            coeffs.insert(w0.compose(&y), c);
        }
    }
    Ok(SchubertExpansion { n, coeffs })
}

/// `[T_{u,v}] = Σ_w c_{u,w}^{v,d_{u,v}} σ_{w_0 w}`.
pub fn cohomology_class_t(u: &Perm, v: &Perm) -> Result<SchubertExpansion> {
    Ok(gw_min_degree(u, v)?.relabel_by_w0())
}

/// Coefficient of `𝔖_w` in `𝔖_u 𝔖_v`, for `u, v, w ∈ S_n`.
pub fn lr_coefficient(u: &Perm, v: &Perm, w: &Perm) -> BigInt {
    let prod = schubert_poly(u).mul(&schubert_poly(v));
    schubert_coeff_by_differences(&prod, w).terms().next().map(|(_, c)| c.clone()).unwrap_or_default()
}

/// Outcome of [`check_descent_cycling`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentCyclingReport {
    pub u: Perm,
    pub v: Perm,
    pub i: usize,
    pub d: DegreeVec,
    /// Number of `w` with `w s_i > w` that were checked.
    pub checked: usize,
    /// Number of those `w` meeting the grading constraint `ℓ(w) = ℓ(v) - ℓ(u) + 2|d|`.
    pub graded: usize,
    pub violations: Vec<String>,
}

impl DescentCyclingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_vacuous(&self) -> bool {
        self.graded == 0
    }
}

impl fmt::Display for DescentCyclingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} descent cycling u={} v={} i={} d={}: {} w checked, {} in the graded range",
            self.u, self.v, self.i, self.d, self.checked, self.graded
        )?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

/// For `[u,v] s_i = [u,v]` and every `w` with `w s_i > w`: `c_{u,w}^{v,d} = 0`
/// and `c_{u,w s_i}^{v,d_{u,v}} = c_{u s_i,w}^{v,d_{u s_i,v}} = c_{u,w}^{v s_i,d_{u,v s_i}}`.
pub fn check_descent_cycling(u: &Perm, v: &Perm, i: usize) -> Result<DescentCyclingReport> {
    if !interval_s_invariant(u, v, i)? {
        return domain(format!("[{u},{v}] is not invariant under s{i}"));
    }
    let n = u.n();
    let d = min_degree(u, v)?;
    let base = gw_min_degree(u, v)?;
    let left = gw_min_degree(&u.mul_simple(i), v)?;
    let right = gw_min_degree(u, &v.mul_simple(i))?;
    let target_len = v.length() as i64 - u.length() as i64 + 2 * d.total() as i64;
    let mut report = DescentCyclingReport { u: u.clone(), v: v.clone(), i, d, checked: 0, graded: 0, violations: vec![] };
    for w in Perm::all(n) {
        if w.at(i) > w.at(i + 1) {
            continue;
        }
        report.checked += 1;
        if w.length() as i64 == target_len {
            report.graded += 1;
        }
        let ws = w.mul_simple(i);
        let c0 = base.coeff(&w);
        if !c0.is_zero() {
            report.violations.push(format!("c_(u,{w}) = {c0}, expected 0"));
        }
        let (c1, c2, c3) = (base.coeff(&ws), left.coeff(&w), right.coeff(&w));
        if c1 != c2 || c2 != c3 {
            report.violations.push(format!("w={w}: c_(u,ws)={c1}, c_(us,w)={c2}, c_(w; vs)={c3}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn small_schubert_polynomials() {
        assert_eq!(schubert_poly(&p("12")), MultiPoly::one(2));
        assert_eq!(schubert_poly(&p("21")).to_string(), "x1");
        assert_eq!(schubert_poly(&p("321")).to_string(), "x1^2x2");
        assert_eq!(schubert_poly(&p("132")).to_string(), "x1 + x2");
    }

    #[test]
    fn chevalley_examples() {
        let sq = quantum_chevalley(1, &p("21")).unwrap();
        assert_eq!(sq.len(), 1);
        assert!(sq.contains_key(&(p("12"), DegreeVec(vec![1]))));
        let e = quantum_chevalley(1, &p("231")).unwrap();
        assert_eq!(e.keys().cloned().collect::<Vec<_>>(), vec![(p("321"), DegreeVec(vec![0, 0]))]);
    }
}
