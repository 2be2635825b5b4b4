use tiltlab::qbgraph::ell;
use tiltlab::tiltorder::{a_lesssim, a_sim, covers, OrderMode, Relation};
use tiltlab::tiltwords::*;
use tiltlab::{Perm, SeqA};

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

fn sample_seqs(n: usize, stride: usize) -> Vec<SeqA> {
    SeqA::all(n).into_iter().step_by(stride).collect()
}

#[test]
fn s6_example_has_four_distinguished_subwords() {
    let a: SeqA = "555111".parse().unwrap();
    let v = TiltedWord::parse(a, "s3s4s5s1s2s3s4s3s2s1|s1s2").unwrap();
    assert_eq!(v.target(), &p("246513"));
    assert!(v.is_regular());
    let subs = distinguished_subwords(&v, &p("512346")).unwrap();
    let mut shape: Vec<(usize, usize)> = subs.iter().map(|s| (s.jcirc.len(), s.jminus.len())).collect();
    shape.sort();
    assert_eq!(shape, vec![(4, 2), (6, 1), (6, 1), (8, 0)]);
    for s in &subs {
        assert!(s.is_subword() && s.is_distinguished() && s.is_regular());
    }
}

#[test]
fn pruning_is_conservative_on_s3() {
    for a in SeqA::all(3) {
        for v in Perm::all(3) {
            let word = regular_tilted_reduced_word(&a, &v).unwrap();
            for u in Perm::all(3).into_iter().filter(|u| a_sim(&a, u, &v)) {
                let pruned = distinguished_subwords_with(&word, &u, true).unwrap();
                let full = distinguished_subwords_with(&word, &u, false).unwrap();
                assert_eq!(pruned, full);
            }
        }
    }
}

#[test]
fn constructions_are_valid_and_agree_in_length() {
    for a in sample_seqs(4, 3) {
        for w in Perm::all(4) {
            let x = tilted_reduced_word(&a, &w).unwrap();
            let y = regular_tilted_reduced_word(&a, &w).unwrap();
            assert!(x.is_valid() && y.is_valid() && y.is_regular());
            assert_eq!(x.len(), y.len(), "a={a} w={w}");
        }
    }
}

#[test]
fn word_length_is_a_rank_function_for_covers() {
    for a in sample_seqs(4, 7) {
        for w in Perm::all(4) {
            for i in 1..=4 {
                for j in i + 1..=4 {
                    if covers(&a, &w, i, j, OrderMode::Lesssim) == Relation::Cover {
                        let l1 = word_length(&a, &w).unwrap();
                        let l2 = word_length(&a, &w.swap_positions(i, j)).unwrap();
                        assert_eq!(l2, l1 + 1, "a={a} w={w} t=({i},{j})");
                    }
                }
            }
        }
    }
}

#[test]
fn subword_property_and_pds_on_s4() {
    for a in sample_seqs(4, 17) {
        for v in Perm::all(4) {
            let word = regular_tilted_reduced_word(&a, &v).unwrap();
            for u in Perm::all(4).into_iter().filter(|u| a_sim(&a, u, &v)) {
                let subs = distinguished_subwords(&word, &u).unwrap();
                let comparable = a_lesssim(&a, &u, &v);
                assert_eq!(!subs.is_empty(), comparable, "a={a} u={u} v={v}");
                if comparable {
                    let l = ell(&u, &v).unwrap();
                    let pds = positive_distinguished_subword_checked(&word, &u).unwrap();
                    assert!(subs.contains(&pds));
                    for s in &subs {
                        assert!(s.is_regular());
                        assert!(s.jcirc.len() + s.jminus.len() <= l);
                        assert_eq!(s.jminus.is_empty(), *s == pds);
                    }
                }
            }
        }
    }
}

#[test]
fn flatten_iterates_to_ones() {
    for a in SeqA::all(4) {
        let mut b = a.clone();
        for _ in 0..jumps(&a).len() {
            let next = flatten(&b).unwrap();
            assert_eq!(jumps(&next).len() + 1, jumps(&b).len());
            b = next;
        }
        assert_eq!(b, SeqA::ones(4));
    }
}

#[test]
fn removing_last_bar_gives_a_flattened_word() {
    for a in sample_seqs(4, 5) {
        if jumps(&a).is_empty() {
            continue;
        }
        for w in Perm::all(4) {
            let word = tilted_reduced_word(&a, &w).unwrap();
            let last = word.factors().iter().rposition(|f| *f == Factor::Bar).unwrap();
            let prefix = TiltedWord::new(flatten(&a).unwrap(), word.factors()[..last].to_vec());
            assert!(prefix.is_ok());
        }
    }
}
