use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tiltlab::permcore::bruhat_leq;
use tiltlab::qbgraph::{ell, ReflectionOrder};
use tiltlab::rpolyhecke::*;
use tiltlab::tiltorder::witness_a;
use tiltlab::tiltwords::tilted_reduced_word;
use tiltlab::Perm;

#[test]
fn three_routes_agree_on_s3_and_s4() {
    for n in [3, 4] {
        for u in Perm::all(n) {
            for v in Perm::all(n) {
                let r = rtilt_checked(&u, &v).unwrap();
                let l = ell(&u, &v).unwrap();
                assert_eq!(r.degree(), Some(l as u32));
                assert!(r.leading_coeff().is_one());
                let at_one = r.eval(&BigInt::one());
                assert_eq!(at_one.is_zero(), u != v, "R({u},{v})(1)");
                if bruhat_leq(&u, &v) {
                    assert_eq!(r, classical_r(&u, &v).unwrap());
                }
            }
        }
    }
}

#[test]
fn non_regular_words_give_the_same_sum_on_s3() {
    for u in Perm::all(3) {
        for v in Perm::all(3) {
            let a = witness_a(&u, &v).unwrap();
            let word = tilted_reduced_word(&a, &v).unwrap();
            assert_eq!(deodhar_sum(&word, &u).unwrap(), rtilt_deodhar(&u, &v).unwrap());
        }
    }
}

#[test]
fn trace_is_invariant_under_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let all = Perm::all(4);
    for _ in 0..20 {
        let mut x = HeckeElt::zero(4);
        for _ in 0..4 {
            let w = &all[rng.gen_range(0..all.len())];
            let c = LaurentPoly::monomial(rng.gen_range(-3i64..=3), rng.gen_range(-2..=2));
            x = x.add(&HeckeElt::basis(w).scale(&c));
        }
        let i = rng.gen_range(1..4);
        let conj = HeckeElt::gen(4, i).mul(&x).mul(&HeckeElt::gen_inverse(4, i));
        assert_eq!(conj.trace(), x.trace());
    }
}

#[test]
fn hecke_product_is_associative() {
    let all = Perm::all(3);
    for x in &all {
        for y in &all {
            for z in &all {
                let (a, b, c) = (HeckeElt::basis(x), HeckeElt::basis(y), HeckeElt::basis(z));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }
        }
    }
}

#[test]
fn increasing_path_expression_report() {
    // exploratory: count matches on S_3, only require the computation to run
    let order = ReflectionOrder::standard(3);
    let mut matches = 0;
    for u in Perm::all(3) {
        for v in Perm::all(3) {
            if increasing_path_expression(&u, &v, &order).unwrap().1 {
                matches += 1;
            }
        }
    }
    println!("increasing-path expression matched R^tilt on {matches}/36 pairs of S_3");
}
