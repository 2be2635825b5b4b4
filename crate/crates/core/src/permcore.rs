//! Permutations of `[n]`, cyclic intervals, shifted orders and the classical
//! Bruhat order.
//!
//! Everything is 1-indexed: positions and values both live in `1..=n`.
//! Products act on the right, so `w.swap_positions(i, j)` is `w * t_ij`.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// A permutation stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    w: Vec<u8>,
}

impl Perm {
    /// Builds a permutation from one-line notation, checking it is a bijection.
    pub fn new(oneline: &[usize]) -> Result<Perm> {
        let n = oneline.len();
        if n == 0 || n > 255 {
            return domain(format!("permutation size {n} out of range 1..=255"));
        }
        let mut seen = vec![false; n + 1];
        for &x in oneline {
            if x == 0 || x > n || seen[x] {
                return domain(format!("{oneline:?} is not a permutation of [{n}]"));
            }
            seen[x] = true;
        }
        Ok(Perm { w: oneline.iter().map(|&x| x as u8).collect() })
    }

    pub fn identity(n: usize) -> Perm {
        Perm { w: (1..=n as u8).collect() }
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Perm {
        Perm { w: (1..=n as u8).rev().collect() }
    }

    /// The long cycle `23...n1`.
    pub fn long_cycle(n: usize) -> Perm {
        Perm { w: (1..=n as u8).map(|i| i % n as u8 + 1).collect() }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n);
        Perm::identity(n).swap_positions(i, i + 1)
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    /// `w(i)` for a 1-indexed position.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.w[i - 1] as usize
    }

    pub fn oneline(&self) -> Vec<usize> {
        self.w.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.w.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// `w * t_ij`: swaps the entries in positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Perm {
        let mut w = self.w.clone();
        w.swap(i - 1, j - 1);
        Perm { w }
    }

    /// `w * s_i`.
    pub fn mul_simple(&self, i: usize) -> Perm {
        self.swap_positions(i, i + 1)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.w.iter().enumerate() {
            inv[x as usize - 1] = k as u8 + 1;
        }
        Perm { w: inv }
    }

    /// `(self * x)(i) = self(x(i))`.
    pub fn compose(&self, x: &Perm) -> Perm {
        assert_eq!(self.n(), x.n(), "compose: size mismatch");
        Perm { w: x.w.iter().map(|&i| self.w[i as usize - 1]).collect() }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.w[i] > self.w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `{i : w_i > w_{i+1}}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// The set `w[k] = {w_1, ..., w_k}`, sorted.
    pub fn prefix_set(&self, k: usize) -> Subset {
        Subset::from_iter_unchecked(self.n(), self.w[..k].iter().map(|&x| x as usize))
    }

    /// Lexicographic rank of `w` among all permutations of `[n]` (Lehmer code).
    pub fn index(&self) -> usize {
        let n = self.n();
        let mut idx = 0;
        for i in 0..n {
            let smaller = self.w[i + 1..].iter().filter(|&&x| x < self.w[i]).count();
            idx = idx * (n - i) + smaller;
        }
        idx
    }

    /// Inverse of [`Perm::index`].
    pub fn from_index(n: usize, mut idx: usize) -> Perm {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = idx % base;
            idx /= base;
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let w = digits.iter().map(|&d| pool.remove(d)).collect();
        Perm { w }
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm { w: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &x in &self.w {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.w.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Contiguous digits (`"2314"`) or comma-separated values (`"10,2,..."`).
    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        let vals: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}"))))
                .collect::<Result<_>>()?
        };
        Perm::new(&vals).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A subset of `[n]`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subset {
    n: usize,
    elems: Vec<usize>,
}

impl Subset {
    pub fn new(n: usize, elems: &[usize]) -> Result<Subset> {
        let mut e = elems.to_vec();
        e.sort_unstable();
        if e.windows(2).any(|p| p[0] == p[1]) || e.iter().any(|&x| x == 0 || x > n) {
            return domain(format!("{elems:?} is not a subset of [{n}]"));
        }
        Ok(Subset { n, elems: e })
    }

    pub(crate) fn from_iter_unchecked(n: usize, it: impl IntoIterator<Item = usize>) -> Subset {
        let mut elems: Vec<usize> = it.into_iter().collect();
        elems.sort_unstable();
        Subset { n, elems }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// Elements listed in the shifted order `<_r`.
    pub fn sorted_shifted(&self, r: usize) -> Vec<usize> {
        let mut v = self.elems.clone();
        v.sort_by_key(|&x| shifted_rank(self.n, r, x));
        v
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Membership of `x` in the cyclic interval between `a` and `b`.
///
/// For `a != b` the interval runs from `a` upward through `n` and wraps to 1.
/// For `a == b`: `(a,a)` is `[n] \ {a}`, the half-open forms are empty and
/// `[a,a]` is `{a}`.
pub fn cyclic_interval_contains(n: usize, a: usize, b: usize, x: usize, left_closed: bool, right_closed: bool) -> bool {
    debug_assert!((1..=n).contains(&a) && (1..=n).contains(&b) && (1..=n).contains(&x));
    if a == b {
        return match (left_closed, right_closed) {
            (false, false) => x != a,
            (true, true) => x == a,
            _ => false,
        };
    }
    let off = (x + n - a) % n;
    let d = (b + n - a) % n;
    (off > 0 && off < d) || (left_closed && off == 0) || (right_closed && off == d)
}

/// Checked variant of [`cyclic_interval_contains`].
pub fn cyclic_interval_contains_checked(n: usize, a: usize, b: usize, x: usize, left_closed: bool, right_closed: bool) -> Result<bool> {
    for v in [a, b, x] {
        if v == 0 || v > n {
            return domain(format!("value {v} outside [1,{n}]"));
        }
    }
    Ok(cyclic_interval_contains(n, a, b, x, left_closed, right_closed))
}

/// Elements of a cyclic interval in increasing cyclic order starting at `a`.
pub fn cyclic_interval(n: usize, a: usize, b: usize, left_closed: bool, right_closed: bool) -> Vec<usize> {
    (0..n)
        .map(|k| (a - 1 + k) % n + 1)
        .filter(|&x| cyclic_interval_contains(n, a, b, x, left_closed, right_closed))
        .collect()
}

/// Position of `x` in the order `r <_r r+1 <_r ... <_r n <_r 1 <_r ... <_r r-1`.
#[inline]
pub fn shifted_rank(n: usize, r: usize, x: usize) -> usize {
    (x + n - r) % n
}

/// `x <_r y`.
#[inline]
pub fn shifted_less(n: usize, r: usize, x: usize, y: usize) -> bool {
    shifted_rank(n, r, x) < shifted_rank(n, r, y)
}

/// Shifted Gale order `A <=_r B`.
pub fn shifted_gale_leq(r: usize, a: &Subset, b: &Subset) -> Result<bool> {
    if a.len() != b.len() || a.n != b.n {
        return domain(format!("cannot compare {a} and {b}: size mismatch"));
    }
    Ok(shifted_gale_leq_unchecked(a.n, r, a.elems(), b.elems()))
}

pub(crate) fn shifted_gale_leq_unchecked(n: usize, r: usize, a: &[usize], b: &[usize]) -> bool {
    let mut ra: Vec<usize> = a.iter().map(|&x| shifted_rank(n, r, x)).collect();
    let mut rb: Vec<usize> = b.iter().map(|&x| shifted_rank(n, r, x)).collect();
    ra.sort_unstable();
    rb.sort_unstable();
    ra.iter().zip(&rb).all(|(x, y)| x <= y)
}

/// Bruhat order by the Ehresmann tableau criterion.
pub fn bruhat_leq(u: &Perm, v: &Perm) -> bool {
    assert_eq!(u.n(), v.n(), "bruhat_leq: size mismatch");
    let n = u.n();
    let mut a: Vec<u8> = Vec::with_capacity(n);
    let mut b: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n.saturating_sub(1) {
        a.push(u.w[k]);
        b.push(v.w[k]);
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_examples() {
        assert!(cyclic_interval_contains(4, 2, 4, 3, true, false));
        assert_eq!(cyclic_interval(4, 3, 2, true, false), vec![3, 4, 1]);
        assert!(!cyclic_interval_contains(7, 5, 5, 5, false, false));
        assert_eq!(cyclic_interval(7, 5, 5, false, false).len(), 6);
        assert!(cyclic_interval(5, 2, 2, true, false).is_empty());
        assert_eq!(cyclic_interval(5, 2, 2, true, true), vec![2]);
        for n in 1..6 {
            for a in 1..=n {
                for b in 1..=n {
                    assert_eq!(cyclic_interval(n, a, b, true, false).len(), (b + n - a) % n);
                }
            }
        }
        assert!(cyclic_interval_contains_checked(4, 5, 1, 1, true, true).is_err());
    }

    #[test]
    fn shifted_orders() {
        assert!(shifted_less(3, 2, 3, 1));
        assert!(shifted_less(5, 1, 2, 4));
        for r in 1..=4 {
            for x in 1..=4 {
                assert!(!shifted_less(4, r, x, x));
            }
        }
        let a = Subset::new(7, &[3, 4, 6, 7]).unwrap();
        let b = Subset::new(7, &[1, 2, 3, 5]).unwrap();
        assert!(shifted_gale_leq(3, &a, &b).unwrap());
        assert!(shifted_gale_leq(1, &Subset::new(4, &[1, 3]).unwrap(), &Subset::new(4, &[2, 4]).unwrap()).unwrap());
        assert!(shifted_gale_leq(1, &a, &Subset::new(7, &[1]).unwrap()).is_err());
        assert_eq!(a.to_string(), "{3,4,6,7}");
    }

    #[test]
    fn basic_permutation_ops() {
        assert_eq!(Perm::identity(5).length(), 0);
        assert_eq!(Perm::longest(5).length(), 10);
        assert_eq!(p("2314").length(), 2);
        assert_eq!(p("2314").descents(), vec![2]);
        assert_eq!(p("231").swap_positions(1, 3), p("132"));
        assert_eq!(Perm::long_cycle(4), p("2341"));
        let w = p("31524");
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.inverse().inverse(), w);
        assert_eq!("10,2,3,4,5,6,7,8,9,1".parse::<Perm>().unwrap().to_string(), "10,2,3,4,5,6,7,8,9,1");
        assert!("1123".parse::<Perm>().is_err());
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        for (k, w) in all.iter().enumerate() {
            assert_eq!(w.index(), k);
            assert_eq!(&Perm::from_index(4, k), w);
        }
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&p("2143"), &p("2413")));
        assert!(!bruhat_leq(&p("2143"), &p("3124")));
        for w in Perm::all(4) {
            assert!(bruhat_leq(&Perm::identity(4), &w));
            assert!(bruhat_leq(&w, &w));
        }
    }
}
