//! Shared fixtures for the criterion benchmarks.

use tiltlab::Perm;

/// Deterministic sample of permutation pairs of `S_n`, every `stride`-th pair.
pub fn pair_sample(n: usize, stride: usize) -> Vec<(Perm, Perm)> {
    let all = Perm::all(n);
    let mut out = Vec::new();
    let mut k = 0usize;
    for u in &all {
        for v in &all {
            if k.is_multiple_of(stride) {
                out.push((u.clone(), v.clone()));
            }
            k += 1;
        }
    }
    out
}
