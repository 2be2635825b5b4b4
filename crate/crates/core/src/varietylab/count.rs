//! Brute-force point counts over prime fields.

use rayon::prelude::*;

use super::field::{is_prime, Fp};
use super::matrix::ExactMatrix;
use super::membership::RankConditions;
use super::rothe::{canonical_cell_matrix, CellKind};
use crate::error::{check_gate, domain, Result};
use crate::permcore::Perm;
use crate::tiltorder::SeqA;

/// Calls `f` on the canonical matrix of every flag in the classical
/// Schubert cell of `w` over `F_p`.
fn for_each_in_cell(w: &Perm, p: u64, mut f: impl FnMut(&ExactMatrix<Fp>)) {
    let a = SeqA::ones(w.n());
    let dim = w.length();
    let one = Fp::new(1, p);
    let mut digits = vec![0u64; dim];
    loop {
        let params: Vec<Fp> = digits.iter().map(|&d| Fp::new(d as i64, p)).collect();
        let m = canonical_cell_matrix(&a, w, CellKind::Cell, &params, &one).expect("parameter count is ℓ(w)");
        f(&m);
        let Some(pos) = digits.iter().position(|&d| d + 1 < p) else { return };
        digits[pos] += 1;
        for d in &mut digits[..pos] {
            *d = 0;
        }
    }
}

/// Every flag of `Fl_n(F_p)`, one canonical matrix each.
pub fn all_flags_fq(n: usize, p: u64) -> Result<Vec<ExactMatrix<Fp>>> {
    check_gate("flag enumeration", "COUNT", n, 4)?;
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    let mut out = Vec::new();
    for w in Perm::all(n) {
        for_each_in_cell(&w, p, |m| out.push(m.clone()));
    }
    Ok(out)
}

/// `#T°_{u,v}(F_p)` by enumerating `Fl_n(F_p)` cell by cell.
pub fn count_points_fq(u: &Perm, v: &Perm, p: u64) -> Result<u64> {
    check_gate("point counting", "COUNT", u.n(), 4)?;
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    let conds = RankConditions::new(u, v)?;
    Ok(Perm::all(u.n())
        .par_iter()
        .map(|w| {
            let mut c = 0u64;
            for_each_in_cell(w, p, |m| c += conds.holds(m, true) as u64);
            c
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_totals() {
        assert_eq!(all_flags_fq(3, 2).unwrap().len(), 21);
        assert_eq!(all_flags_fq(3, 3).unwrap().len(), 1 + 2 * 3 + 2 * 9 + 27);
    }

    #[test]
    fn small_counts() {
        let u: Perm = "231".parse().unwrap();
        let v: Perm = "123".parse().unwrap();
        assert_eq!(count_points_fq(&u, &v, 2).unwrap(), 1);
        assert_eq!(count_points_fq(&u, &u, 3).unwrap(), 1);
        assert!(count_points_fq(&u, &v, 4).is_err());
    }
}
