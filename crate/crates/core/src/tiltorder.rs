//! The `a`-tilted Bruhat orders `≤_a`, `∼_a`, `≲_a` and friends.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::permcore::{cyclic_interval_contains, shifted_gale_leq_unchecked, shifted_less, Perm};
use crate::qbgraph::{self, edge_weight, min_set};

/// A sequence `a = (a_1, ..., a_n) ∈ [n]^n`. By convention `a_{n+1} = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqA {
    a: Vec<usize>,
}

impl SeqA {
    pub fn new(a: &[usize]) -> Result<SeqA> {
        let n = a.len();
        if n == 0 || a.iter().any(|&x| x == 0 || x > n) {
            return domain(format!("{a:?} is not a sequence in [{n}]^{n}"));
        }
        Ok(SeqA { a: a.to_vec() })
    }

    pub(crate) fn from_vec_unchecked(a: Vec<usize>) -> SeqA {
        debug_assert!(SeqA::new(&a).is_ok());
        SeqA { a }
    }

    /// The constant sequence `(1, ..., 1)`, which gives the classical orders.
    pub fn ones(n: usize) -> SeqA {
        SeqA { a: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// `a_k` for `k ∈ [n+1]`, with `a_{n+1} = 1`.
    #[inline]
    pub fn at(&self, k: usize) -> usize {
        if k == self.a.len() + 1 {
            1
        } else {
            self.a[k - 1]
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.a
    }

    pub fn is_constant(&self) -> bool {
        self.a.windows(2).all(|p| p[0] == p[1])
    }

    /// Every sequence in `[n]^n`.
    pub fn all(n: usize) -> Vec<SeqA> {
        let total = n.pow(n as u32);
        (0..total)
            .map(|mut idx| {
                let mut a = vec![0; n];
                for slot in a.iter_mut().rev() {
                    *slot = idx % n + 1;
                    idx /= n;
                }
                SeqA { a }
            })
            .collect()
    }
}

impl fmt::Display for SeqA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for SeqA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeqA{self}")
    }
}

impl FromStr for SeqA {
    type Err = Error;

    /// Accepts `"3,3,1,1"`, `"(3,3,1,1)"` or contiguous digits `"3311"`.
    fn from_str(s: &str) -> Result<SeqA> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let vals: Vec<usize> = if t.contains(',') {
            t.split(',').map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad entry {x:?} in {s:?}")))).collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}"))))
                .collect::<Result<_>>()?
        };
        SeqA::new(&vals).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn check_sizes(a: &SeqA, u: &Perm, v: &Perm) -> Result<()> {
    if a.n() != u.n() || u.n() != v.n() {
        return domain(format!("size mismatch among a={a}, u={u}, v={v}"));
    }
    Ok(())
}

fn prefix(w: &Perm, k: usize) -> Vec<usize> {
    (1..=k).map(|i| w.at(i)).collect()
}

/// `u ≤_a v`: `u[k] ≤_{a_k} v[k]` for every `k`.
pub fn a_leq(a: &SeqA, u: &Perm, v: &Perm) -> bool {
    let n = u.n();
    (1..n).all(|k| shifted_gale_leq_unchecked(n, a.at(k), &prefix(u, k), &prefix(v, k)))
}

/// `|S ∩ [a_k, a_{k+1})_c|`.
fn count_in_window(n: usize, a: &SeqA, k: usize, set: &[usize]) -> usize {
    set.iter().filter(|&&x| cyclic_interval_contains(n, a.at(k), a.at(k + 1), x, true, false)).count()
}

/// `u ∼_a v`: `|u[k] ∩ [a_k, a_{k+1})_c| = |v[k] ∩ [a_k, a_{k+1})_c|` for every `k`.
pub fn a_sim(a: &SeqA, u: &Perm, v: &Perm) -> bool {
    let n = u.n();
    (1..=n).all(|k| count_in_window(n, a, k, &prefix(u, k)) == count_in_window(n, a, k, &prefix(v, k)))
}

/// `u ≲_a v`, i.e. `u ≤_a v` and `u ∼_a v`.
pub fn a_lesssim(a: &SeqA, u: &Perm, v: &Perm) -> bool {
    a_leq(a, u, v) && a_sim(a, u, v)
}

/// The equivalent form: `u[k] ≤_{a_k} v[k]` and `u[k] ≤_{a_{k+1}} v[k]` for every `k`.
pub fn a_lesssim_alt(a: &SeqA, u: &Perm, v: &Perm) -> bool {
    let n = u.n();
    (1..n).all(|k| {
        let (pu, pv) = (prefix(u, k), prefix(v, k));
        shifted_gale_leq_unchecked(n, a.at(k), &pu, &pv) && shifted_gale_leq_unchecked(n, a.at(k + 1), &pu, &pv)
    })
}

/// [`a_lesssim`] cross-checked against [`a_lesssim_alt`].
pub fn a_lesssim_checked(a: &SeqA, u: &Perm, v: &Perm) -> Result<bool> {
    check_sizes(a, u, v)?;
    let x = a_lesssim(a, u, v);
    let y = a_lesssim_alt(a, u, v);
    if x != y {
        return Err(Error::Inconsistency(format!("{u} ≲_a {v} for a={a}: definition says {x}, reformulation says {y}")));
    }
    Ok(x)
}

/// A sequence `a` with `u ≲_a v`: `a_k` is the smallest element of
/// `minset(Λ_{k-1}) ∩ minset(Λ_k)` where `Λ_k = Λ(u[k], v[k])`.
pub fn witness_a(u: &Perm, v: &Perm) -> Result<SeqA> {
    if u.n() != v.n() {
        return domain("size mismatch");
    }
    let n = u.n();
    let full: BTreeSet<usize> = (1..=n).collect();
    let mins: Vec<BTreeSet<usize>> = (0..=n)
        .map(|k| {
            if k == 0 || k == n {
                Ok(full.clone())
            } else {
                Ok(min_set(&u.prefix_set(k), &v.prefix_set(k))?.into_iter().collect())
            }
        })
        .collect::<Result<_>>()?;
    let mut a = Vec::with_capacity(n);
    for k in 1..=n {
        let x = mins[k - 1]
            .intersection(&mins[k])
            .next()
            .ok_or_else(|| Error::Inconsistency(format!("no witness for ({u},{v}) at k={k}")))?;
        a.push(*x);
    }
    let a = SeqA { a };
    if !a_lesssim(&a, u, v) {
        return Err(Error::Inconsistency(format!("witness {a} fails {u} ≲_a {v}")));
    }
    Ok(a)
}

/// A sequence with `u ≤_a v` only: `a_k = min minset(Λ_k)`, `a_n = 1`.
pub fn witness_a_leq(u: &Perm, v: &Perm) -> Result<SeqA> {
    if u.n() != v.n() {
        return domain("size mismatch");
    }
    let n = u.n();
    let mut a = Vec::with_capacity(n);
    for k in 1..n {
        a.push(min_set(&u.prefix_set(k), &v.prefix_set(k))?[0]);
    }
    a.push(1);
    Ok(SeqA { a })
}

/// `w ∈ [u,v]` via `u ≲_a w ≲_a v` for `a = witness_a(u,v)`.
pub fn in_tilted_interval(u: &Perm, v: &Perm, w: &Perm) -> Result<bool> {
    let a = witness_a(u, v)?;
    Ok(a_lesssim(&a, u, w) && a_lesssim(&a, w, v))
}

/// [`in_tilted_interval`] cross-checked against BFS distances.
pub fn in_tilted_interval_checked(u: &Perm, v: &Perm, w: &Perm) -> Result<bool> {
    let x = in_tilted_interval(u, v, w)?;
    let y = qbgraph::ell(u, w)? + qbgraph::ell(w, v)? == qbgraph::ell(u, v)?;
    if x != y {
        return Err(Error::Inconsistency(format!("{w} in [{u},{v}]: order criterion {x}, BFS {y}")));
    }
    Ok(x)
}

/// Which of the two tilted orders a covering query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderMode {
    Leq,
    Lesssim,
}

/// How `w` relates to `w t_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `w` is not below `w t_ij`.
    Incomparable,
    /// `w < w t_ij` but not a cover.
    Comparable,
    /// `w t_ij` covers `w`.
    Cover,
}

/// Classifies `w` against `w t_ij` by the covering criteria.
pub fn covers(a: &SeqA, w: &Perm, i: usize, j: usize, mode: OrderMode) -> Relation {
    debug_assert!(i < j && j <= w.n());
    let n = w.n();
    let (wi, wj) = (w.at(i), w.at(j));
    let hi = match mode {
        OrderMode::Leq => j - 1,
        OrderMode::Lesssim => j,
    };
    if (i..=hi).any(|k| cyclic_interval_contains(n, wi, wj, a.at(k), false, true)) {
        return Relation::Incomparable;
    }
    if (i + 1..j).any(|k| cyclic_interval_contains(n, wi, wj, w.at(k), false, false)) {
        Relation::Comparable
    } else {
        Relation::Cover
    }
}

/// `ℓ_a(w) = #{i < j : w_i >_{a_i} w_j}`.
pub fn a_length(a: &SeqA, w: &Perm) -> usize {
    let n = w.n();
    let mut l = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if shifted_less(n, a.at(i), w.at(j), w.at(i)) {
                l += 1;
            }
        }
    }
    l
}

/// Whether `i` is an `a`-descent of `w`. Only meaningful where `a_i = a_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentState {
    Descent,
    Ascent,
    NotApplicable,
}

pub fn a_descent_state(a: &SeqA, w: &Perm, i: usize) -> DescentState {
    if a.at(i) != a.at(i + 1) {
        DescentState::NotApplicable
    } else if shifted_less(w.n(), a.at(i), w.at(i + 1), w.at(i)) {
        DescentState::Descent
    } else {
        DescentState::Ascent
    }
}

pub fn a_descents(a: &SeqA, w: &Perm) -> Vec<usize> {
    (1..w.n()).filter(|&i| a_descent_state(a, w, i) == DescentState::Descent).collect()
}

pub fn a_ascents(a: &SeqA, w: &Perm) -> Vec<usize> {
    (1..w.n()).filter(|&i| a_descent_state(a, w, i) == DescentState::Ascent).collect()
}

/// `[u,v] · s_i = [u,v]` as sets.
pub fn interval_s_invariant(u: &Perm, v: &Perm, i: usize) -> Result<bool> {
    if i == 0 || i >= u.n() {
        return domain(format!("s{i} is not a simple transposition of S_{}", u.n()));
    }
    let iv = qbgraph::tilted_interval(u, v)?;
    let invariant = iv.members().all(|w| iv.contains(&w.mul_simple(i)));
    Ok(invariant)
}

/// Brute-force search for `a` with `u ≲_a v` and `i ∈ Des_a(v) ∩ Asc_a(u)`.
pub fn strong_lifting_witness(u: &Perm, v: &Perm, i: usize) -> Option<SeqA> {
    SeqA::all(u.n()).into_iter().find(|a| {
        a_descent_state(a, v, i) == DescentState::Descent
            && a_descent_state(a, u, i) == DescentState::Ascent
            && a_lesssim(a, u, v)
    })
}

/// `u ≤^k v`: some shortest path from `u` to `v` uses only edges `t_cd` with `c ≤ k < d`.
pub fn k_tilted_leq(u: &Perm, v: &Perm, k: usize) -> Result<bool> {
    let n = u.n();
    if k == 0 || k >= n {
        return domain(format!("k={k} outside [1,{}]", n - 1));
    }
    let target = qbgraph::ell(u, v)?;
    let mut seen = std::collections::HashMap::new();
    seen.insert(u.clone(), 0usize);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(x) = queue.pop_front() {
        let dx = seen[&x];
        if x == *v {
            return Ok(dx == target);
        }
        if dx >= target {
            continue;
        }
        for c in 1..=k {
            for d in k + 1..=n {
                if edge_weight(&x, c, d).is_some() {
                    let y = x.swap_positions(c, d);
                    if !seen.contains_key(&y) {
                        seen.insert(y.clone(), dx + 1);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Exploratory facts about the poset `(S_n, ≤_a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderExploration {
    pub a: SeqA,
    pub comparable_pairs: usize,
    pub covers: usize,
    /// Connected components of the Hasse diagram.
    pub components: usize,
    /// Whether some function drops by exactly one along every cover.
    pub graded: bool,
    /// A cover cycle witnessing non-gradedness, if any.
    pub counterexample: Option<String>,
}

/// Builds the Hasse diagram of `≤_a` on `S_n` and tests connectivity and
/// gradedness. Asserts nothing; the answer is reported.
pub fn explore_leq_a(a: &SeqA) -> Result<OrderExploration> {
    let n = a.n();
    crate::error::check_gate("order exploration", "EXPLORE", n, 5)?;
    let perms = Perm::all(n);
    let m = perms.len();
    let up: Vec<Vec<usize>> = (0..m)
        .map(|x| (0..m).filter(|&y| y != x && a_leq(a, &perms[x], &perms[y])).collect())
        .collect();
    let comparable_pairs = up.iter().map(Vec::len).sum();
    let mut upset = vec![vec![false; m]; m];
    for x in 0..m {
        for &y in &up[x] {
            upset[x][y] = true;
        }
    }
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); m];
    let mut covers = 0;
    for x in 0..m {
        for &y in &up[x] {
            if !up[x].iter().any(|&z| upset[z][y]) {
                covers += 1;
                adj[x].push((y, 1));
                adj[y].push((x, -1));
            }
        }
    }
    let mut rank: Vec<Option<i64>> = vec![None; m];
    let (mut components, mut graded, mut counterexample) = (0, true, None);
    for start in 0..m {
        if rank[start].is_some() {
            continue;
        }
        components += 1;
        rank[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let rx = rank[x].expect("queued vertices are ranked");
            for &(y, step) in &adj[x] {
                match rank[y] {
                    None => {
                        rank[y] = Some(rx + step);
                        queue.push_back(y);
                    }
                    Some(ry) if ry != rx + step && graded => {
                        graded = false;
                        counterexample = Some(format!(
                            "cover {} - {} breaks the rank function ({} vs {})",
                            perms[x],
                            perms[y],
                            rx + step,
                            ry
                        ));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(OrderExploration { a: a.clone(), comparable_pairs, covers, components, graded, counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn a(s: &str) -> SeqA {
        s.parse().unwrap()
    }

    #[test]
    fn orders_examples() {
        assert!(a_leq(&a("222"), &p("231"), &p("123")));
        assert!(a_lesssim_checked(&a("222"), &p("231"), &p("123")).unwrap());
        assert!(a_lesssim_checked(&a("1233"), &p("3412"), &p("3421")).unwrap());
        for u in Perm::all(3) {
            for v in Perm::all(3) {
                assert_eq!(a_leq(&SeqA::ones(3), &u, &v), crate::permcore::bruhat_leq(&u, &v));
            }
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_a(&p("231"), &p("123")).unwrap(), a("222"));
        assert_eq!(witness_a(&p("2413"), &p("2413")).unwrap(), SeqA::ones(4));
        assert_eq!(witness_a_leq(&p("231"), &p("123")).unwrap().as_slice()[..2], [2, 2]);
    }

    #[test]
    fn interval_membership() {
        assert!(in_tilted_interval_checked(&p("231"), &p("123"), &p("321")).unwrap());
        assert!(!in_tilted_interval_checked(&p("231"), &p("123"), &p("312")).unwrap());
    }

    #[test]
    fn covering_example() {
        assert_eq!(covers(&a("1233"), &p("2341"), 2, 3, OrderMode::Lesssim), Relation::Cover);
    }

    #[test]
    fn lengths_and_descents() {
        let aa = a("222");
        assert_eq!(a_length(&aa, &p("123")) - a_length(&aa, &p("231")), 2);
        assert_eq!(a_descent_state(&a("1122"), &p("1234"), 2), DescentState::NotApplicable);
        assert_eq!(a_descents(&SeqA::ones(4), &p("2143")), vec![1, 3]);
        assert_eq!(a_ascents(&SeqA::ones(4), &p("2143")), vec![2]);
    }

    #[test]
    fn s_invariance() {
        assert!(interval_s_invariant(&p("231"), &p("123"), 1).unwrap());
        assert!(!interval_s_invariant(&p("231"), &p("123"), 2).unwrap());
        assert!(!interval_s_invariant(&p("231"), &p("231"), 1).unwrap());
    }

    #[test]
    fn k_tilted() {
        assert!(k_tilted_leq(&p("12"), &p("21"), 1).unwrap());
        assert!(k_tilted_leq(&p("312"), &p("312"), 2).unwrap());
    }

    #[test]
    fn parse_seq() {
        assert_eq!(a("(3,3,1,1,1,6)").to_string(), "(3,3,1,1,1,6)");
        assert!("0,1".parse::<SeqA>().is_err());
        assert_eq!(SeqA::all(3).len(), 27);
    }
}
