//! Square matrices over an exact field.

use std::fmt;

use num_rational::BigRational;

use super::field::{Fp, Scalar};
use crate::error::{domain, Error, Result};
use crate::permcore::Perm;

/// An `n × n` matrix over an exact field; rows and columns are 1-indexed
/// in the public API.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<F: Scalar> {
    n: usize,
    entries: Vec<F>,
}

impl<F: Scalar> ExactMatrix<F> {
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return domain("matrix must be square and non-empty");
        }
        Ok(ExactMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// The zero matrix, with constants taken from `like`.
    pub fn zeros(n: usize, like: &F) -> Self {
        ExactMatrix { n, entries: vec![like.zero_like(); n * n] }
    }

    pub fn identity(n: usize, like: &F) -> Self {
        let mut m = Self::zeros(n, like);
        for i in 1..=n {
            m.set(i, i, like.one_like());
        }
        m
    }

    /// The permutation matrix `e_w`, with a 1 at `(w_k, k)`.
    pub fn permutation(w: &Perm, like: &F) -> Self {
        let mut m = Self::zeros(w.n(), like);
        for k in 1..=w.n() {
            m.set(w.at(k), k, like.one_like());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[(r - 1) * self.n + c - 1]
    }

    pub fn set(&mut self, r: usize, c: usize, x: F) {
        self.entries[(r - 1) * self.n + c - 1] = x;
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return domain("matrix sizes differ");
        }
        let n = self.n;
        let zero = self.entries[0].zero_like();
        let mut out = Vec::with_capacity(n * n);
        for r in 1..=n {
            for c in 1..=n {
                out.push((1..=n).fold(zero.clone(), |acc, k| acc.add(&self.get(r, k).mul(other.get(k, c)))));
            }
        }
        Ok(ExactMatrix { n, entries: out })
    }

    fn sub_rows(&self, rows: &[usize], cols: usize) -> Vec<Vec<F>> {
        rows.iter().map(|&r| (1..=cols).map(|c| self.get(r, c).clone()).collect()).collect()
    }

    /// Determinant of the submatrix on `rows` (in the given order) and
    /// columns `1..=rows.len()`. Fraction-free elimination.
    pub fn minor(&self, rows: &[usize]) -> F {
        let k = rows.len();
        let one = self.entries[0].one_like();
        if k == 0 {
            return one;
        }
        bareiss(self.sub_rows(rows, k), one)
    }

    pub fn det(&self) -> F {
        self.minor(&(1..=self.n).collect::<Vec<_>>())
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().vanishes()
    }

    /// Rank of the submatrix on the given rows and columns `1..=cols`.
    pub fn rank(&self, rows: &[usize], cols: usize) -> usize {
        if rows.is_empty() || cols == 0 {
            return 0;
        }
        row_rank(self.sub_rows(rows, cols))
    }

    /// The Plücker coordinate `Δ_I`: rows `I` in the listed order against the
    /// first `|I|` columns.
    pub fn plucker(&self, rows: &[usize]) -> Result<F> {
        if rows.len() > self.n || rows.iter().any(|&r| r == 0 || r > self.n) {
            return domain(format!("row index list {rows:?} out of range for n={}", self.n));
        }
        Ok(self.minor(rows))
    }

    /// Row-major entries as strings (`"3/2"`, `"-1"`).
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.chunks(self.n).map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }
}

fn bareiss<F: Scalar>(mut m: Vec<Vec<F>>, one: F) -> F {
    let k = m.len();
    let mut prev = one;
    let mut negate = false;
    for p in 0..k {
        if m[p][p].vanishes() {
            match (p + 1..k).find(|&r| !m[r][p].vanishes()) {
                Some(r) => {
                    m.swap(p, r);
                    negate = !negate;
                }
                None => return prev.zero_like(),
            }
        }
        for r in p + 1..k {
            for c in p + 1..k {
                let t = m[p][p].mul(&m[r][c]).sub(&m[r][p].mul(&m[p][c]));
                m[r][c] = t.div(&prev).expect("Bareiss pivot is nonzero");
            }
        }
        prev = m[p][p].clone();
    }
    let d = m[k - 1][k - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

fn row_rank<F: Scalar>(mut m: Vec<Vec<F>>) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].vanishes()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().expect("pivot is nonzero");
        for r in rank + 1..rows {
            if m[r][c].vanishes() {
                continue;
            }
            let f = m[r][c].mul(&inv);
            for cc in c..cols {
                let t = m[r][cc].sub(&f.mul(&m[rank][cc]));
                m[r][cc] = t;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

impl ExactMatrix<BigRational> {
    /// Parses row-major string entries such as `"3/2"`.
    pub fn parse_rational(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.trim().parse::<BigRational>().map_err(|_| Error::Parse(format!("bad rational entry {s:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }
}

impl ExactMatrix<Fp> {
    pub fn from_i64_rows(rows: &[Vec<i64>], p: u64) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Fp::new(x, p)).collect()).collect())
    }
}

impl<F: Scalar> fmt::Display for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            write!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}
