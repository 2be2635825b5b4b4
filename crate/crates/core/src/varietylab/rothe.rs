//! Tilted Rothe diagrams and tilted Schubert cells.

use std::collections::BTreeSet;
use std::fmt;

use super::field::Scalar;
use super::matrix::ExactMatrix;
use super::membership::multi_plucker;
use crate::error::{domain, Result};
use crate::permcore::{shifted_less, Perm};
use crate::tiltorder::SeqA;

/// A set of `(row, column)` cells.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RotheDiagram {
    pub cells: BTreeSet<(usize, usize)>,
}

impl RotheDiagram {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.cells.contains(&(r, c))
    }
}

impl fmt::Display for RotheDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

fn diagram(a: &SeqA, w: &Perm, below: bool) -> RotheDiagram {
    let n = w.n();
    let mut cells = BTreeSet::new();
    for k in 1..=n {
        for i in k + 1..=n {
            if shifted_less(n, a.at(k), w.at(i), w.at(k)) == below {
                cells.insert((w.at(i), k));
            }
        }
    }
    RotheDiagram { cells }
}

/// `D_a(w) = {(w_i, k) : i > k, w_i <_{a_k} w_k}`.
pub fn tilted_rothe(a: &SeqA, w: &Perm) -> RotheDiagram {
    diagram(a, w, true)
}

/// `D_a^op(w) = {(w_i, k) : i > k, w_i >_{a_k} w_k}`.
pub fn tilted_rothe_op(a: &SeqA, w: &Perm) -> RotheDiagram {
    diagram(a, w, false)
}

/// Which tilted Schubert cell: `X°_{w,a}` or the opposite cell `Ω°_{w,a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Cell,
    Opposite,
}

impl CellKind {
    fn free(self, a: &SeqA, w: &Perm) -> RotheDiagram {
        match self {
            CellKind::Cell => tilted_rothe(a, w),
            CellKind::Opposite => tilted_rothe_op(a, w),
        }
    }

    fn vanishing(self, a: &SeqA, w: &Perm) -> RotheDiagram {
        match self {
            CellKind::Cell => tilted_rothe_op(a, w),
            CellKind::Opposite => tilted_rothe(a, w),
        }
    }
}

/// The matrix with 1 at `(w_k, k)`, `params` on the free diagram (cells in
/// increasing `(row, column)` order) and 0 elsewhere.
pub fn canonical_cell_matrix<F: Scalar>(a: &SeqA, w: &Perm, kind: CellKind, params: &[F], like: &F) -> Result<ExactMatrix<F>> {
    if a.n() != w.n() {
        return domain("size mismatch");
    }
    let free = kind.free(a, w);
    if free.len() != params.len() {
        return domain(format!("expected {} parameters, got {}", free.len(), params.len()));
    }
    let mut m = ExactMatrix::permutation(w, like);
    for (&(r, c), x) in free.cells.iter().zip(params) {
        m.set(r, c, x.clone());
    }
    Ok(m)
}

/// Membership in `X°_{w,a}` / `Ω°_{w,a}`: `Δ_w ≠ 0` and
/// `Δ_{w[k-1] ∪ {i}} = 0` for `(i, k)` in the complementary diagram.
pub fn in_tilted_cell<F: Scalar>(m: &ExactMatrix<F>, a: &SeqA, w: &Perm, kind: CellKind) -> bool {
    if multi_plucker(m, w).vanishes() {
        return false;
    }
    kind.vanishing(a, w).cells.iter().all(|&(i, k)| {
        let mut rows: Vec<usize> = (1..k).map(|j| w.at(j)).collect();
        rows.push(i);
        m.minor(&rows).vanishes()
    })
}
