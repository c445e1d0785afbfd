use std::collections::BTreeSet;

use permstat::insertion::{self, InsertionCase};
use permstat::labeling::{self, Scheme};
use permstat::stats;
use permstat::transfer::{self, InsertionCode};
use permstat::verify::{
    all_permutations, factorial, joint_distribution, Enumerator, QPolynomial, StatPair,
};
use permstat::{Error, Permutation};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn is_label_bijection(labels: &[usize]) -> bool {
    let set: BTreeSet<usize> = labels.iter().copied().collect();
    set.len() == labels.len()
        && set.iter().copied().eq(0..labels.len())
        && labels.last() == Some(&0)
}

#[test]
fn every_labeling_is_a_bijection_onto_labels() {
    for m in 1..=6 {
        for pi in all_permutations(m) {
            assert!(is_label_bijection(&labeling::den_labeling(&pi).labels));
            for r in 1..=m {
                let a = labeling::rmaj_labeling(&pi, r).unwrap();
                let b = labeling::rden_labeling(&pi, r).unwrap();
                assert!(is_label_bijection(&a.labels), "{pi} r={r}");
                assert!(is_label_bijection(&b.labels), "{pi} r={r}");
            }
        }
    }
}

#[test]
fn rden_and_den_labels_agree_from_r_on() {
    for m in 1..=6 {
        for pi in all_permutations(m) {
            let den = labeling::den_labeling(&pi);
            for r in 1..=m {
                let rden = labeling::rden_labeling(&pi, r).unwrap();
                for x in r..=m + 1 {
                    assert_eq!(den.label_of_space(x), rden.label_of_space(x), "{pi} r={r}");
                }
            }
            assert_eq!(labeling::rden_labeling(&pi, 1).unwrap().labels, den.labels);
        }
    }
}

#[test]
fn s_set_has_rdes_plus_r_minus_one_letters() {
    for m in 1..=6 {
        for pi in all_permutations(m) {
            for r in 1..=m {
                assert_eq!(labeling::s_set(&pi, r).len(), stats::rdes(&pi, r) + r - 1);
            }
        }
    }
}

#[test]
fn level_one_reduces_to_classical_statistics() {
    for n in 1..=7 {
        for pi in all_permutations(n) {
            assert_eq!(stats::rmaj(&pi, 1), stats::maj(&pi));
            assert_eq!(stats::rdes(&pi, 1), stats::des(&pi));
            assert_eq!(stats::den_r(&pi, 1), stats::den(&pi));
            assert_eq!(stats::exc_r(&pi, 1), stats::exc(&pi));
        }
    }
}

#[test]
fn large_levels_reduce_to_inv() {
    for n in 1..=7 {
        for pi in all_permutations(n) {
            for r in n..=n + 2 {
                assert_eq!(stats::rmaj(&pi, r), stats::inv(&pi));
                assert_eq!(stats::rdes(&pi, r), 0);
                assert_eq!(stats::exc_r(&pi, r), 0);
            }
            assert_eq!(stats::den_r(&pi, n + 1), stats::inv(&pi));
        }
    }
}

#[test]
fn inv_matches_pair_scan() {
    for n in 1..=8 {
        for pi in all_permutations(n) {
            assert_eq!(stats::inv(&pi), stats::inversion_set(&pi).len());
        }
    }
}

#[test]
fn statistic_bounds() {
    for n in 1..=7 {
        for pi in all_permutations(n) {
            for r in 1..=n + 1 {
                let s = stats::StatVector::new(&pi, r);
                assert!(s.rmaj <= n * (n - 1) / 2 && s.denr <= n * (n - 1) / 2);
                assert!(s.rdes < n.max(1) && s.excr < n.max(1));
            }
        }
    }
}

/// Eulerian numbers by their recurrence, independent of any permutation scan.
fn eulerian(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 2..=n {
        let mut next = vec![0u64; m];
        for k in 0..m {
            let stay = if k < row.len() {
                (k as u64 + 1) * row[k]
            } else {
                0
            };
            let up = if k > 0 {
                (m - k) as u64 * row[k - 1]
            } else {
                0
            };
            next[k] = stay + up;
        }
        row = next;
    }
    row
}

#[test]
fn marginals_at_level_one() {
    let e = Enumerator::single_threaded();
    for n in 1..=8 {
        for pair in [StatPair::RdesRmaj, StatPair::ExcrDenr] {
            let d = joint_distribution(&e, n, 1, pair, 10).unwrap();
            assert_eq!(d.total(), factorial(n));
            assert_eq!(d.t_marginal(), eulerian(n), "n={n} {pair:?}");
            assert_eq!(d.q_marginal(), QPolynomial::q_factorial(n));
        }
    }
}

#[test]
fn large_level_distribution_is_mahonian_in_q_only() {
    let e = Enumerator::single_threaded();
    for n in 1..=7 {
        for r in n..=n + 1 {
            let d = joint_distribution(&e, n, r, StatPair::RdesRmaj, 10).unwrap();
            assert!(d.counts.keys().all(|&(a, _)| a == 0));
            assert_eq!(d.q_marginal(), QPolynomial::q_factorial(n));
        }
    }
}

#[test]
fn parallel_and_serial_tables_agree() {
    let one = Enumerator::single_threaded();
    let many = Enumerator::new(3);
    for pair in StatPair::ALL {
        for r in 1..=8 {
            let a = joint_distribution(&one, 7, r, pair, 10).unwrap();
            let b = joint_distribution(&many, 7, r, pair, 10).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn phi_den_round_trips_at_eight() {
    let n = 8;
    for r in 1..n {
        for pi in all_permutations(n - 1) {
            for c in 0..n {
                let (tau, case) = insertion::phi_den(&pi, c, r).unwrap();
                let back = insertion::phi_den_inverse(&tau, r).unwrap();
                assert_eq!((&back.pi, back.c, back.case), (&pi, c, Some(case)));
            }
        }
    }
}

#[test]
fn phi_den_inverse_covers_s_8() {
    let n = 8;
    for r in [1, 3, 5, 7] {
        for tau in all_permutations(n) {
            let back = insertion::phi_den_inverse(&tau, r).unwrap();
            assert_eq!(insertion::phi_den(&back.pi, back.c, r).unwrap().0, tau);
        }
    }
}

#[test]
fn codes_telescope_to_statistics() {
    for n in 1..=7 {
        for pi in all_permutations(n) {
            for r in 1..=n + 1 {
                let code = transfer::encode(&pi, Scheme::Rmaj, r).unwrap();
                assert_eq!(code.predicted_stats(), StatPair::RdesRmaj.eval(&pi, r));
                assert_eq!(transfer::decode(&code).unwrap(), pi);
                let code = transfer::encode(&pi, Scheme::Rden, r).unwrap();
                assert_eq!(code.predicted_stats(), StatPair::ExcrDenr.eval(&pi, r));
                assert_eq!(transfer::decode(&code).unwrap(), pi);
            }
        }
    }
}

#[test]
fn transfer_at_and_beyond_n() {
    for n in 1..=7 {
        let mut image = BTreeSet::new();
        for pi in all_permutations(n) {
            assert_eq!(transfer::transfer_bijection(&pi, n + 1).unwrap(), pi);
            let tau = transfer::transfer_bijection(&pi, n).unwrap();
            assert_eq!(
                StatPair::RdesRmaj.eval(&pi, n),
                StatPair::ExcrDenr.eval(&tau, n)
            );
            assert_eq!(transfer::transfer_inverse(&tau, n).unwrap(), pi);
            image.insert(tau);
        }
        assert_eq!(image.len() as u64, factorial(n));
    }
}

#[test]
fn han_case_reports_target() {
    let (tau, case) = insertion::phi_den(&p("836295417"), 8, 5).unwrap();
    assert_eq!(case, InsertionCase::Han { x: 5, letter: 6 });
    assert_eq!(stats::greatest_grande_fixed_place(&tau), Some(5));
}

#[test]
fn invalid_inputs_are_errors() {
    assert!(matches!(
        "1 1 2".parse::<Permutation>(),
        Err(Error::InvalidWord(_))
    ));
    assert!("1 3".parse::<Permutation>().is_err());
    assert!("0 1".parse::<permstat::Word>().is_err());
    assert!(matches!(
        insertion::phi_den(&p("21"), 3, 1),
        Err(Error::LabelOutOfRange { .. })
    ));
    assert!(matches!(
        insertion::phi_den(&p("21"), 0, 3),
        Err(Error::LevelOutOfRange { .. })
    ));
    assert!(matches!(
        InsertionCode::new(Scheme::Rmaj, 2, vec![1, 3]),
        Err(Error::CodeOutOfBounds { index: 3, .. })
    ));
    assert!(InsertionCode::new(Scheme::Den, 2, vec![]).is_err());
    assert!(
        joint_distribution(&Enumerator::single_threaded(), 11, 1, StatPair::DesMaj, 10).is_err()
    );
}
