use std::collections::BTreeSet;

use itertools::Itertools;
use qcell::ictables::{delta_of, dim, dom_enumerate, ic_table, kp_of_lambda, lambda_of, omega, GLdWeight};
use qcell::rootdata::{enumerate_kp, QWeight};

/// `min { l(w) : w λ weakly increasing }` over the symmetric group.
fn delta_brute(lam: &[i64]) -> u64 {
    let d = lam.len();
    (0..d)
        .permutations(d)
        .filter(|p| p.iter().map(|&i| lam[i]).tuple_windows().all(|(a, b)| a <= b))
        .map(|p| p.iter().tuple_combinations().filter(|(a, b)| a > b).count() as u64)
        .min()
        .unwrap_or(0)
}

#[test]
fn delta_matches_brute_force() {
    for d in 0..=6usize {
        for lam in (0..d).map(|_| -3i64..=3).multi_cartesian_product() {
            if !lam.windows(2).all(|w| w[0] >= w[1]) {
                continue;
            }
            assert_eq!(delta_of(&GLdWeight::new(lam.clone())), delta_brute(&lam), "{:?}", lam);
        }
    }
    assert_eq!(delta_of(&GLdWeight::new(vec![])), 0);
}

#[test]
fn delta_is_the_cross_sum() {
    for n in 1..=3 {
        for d0 in 0..=10 {
            for d1 in 0..=10 - d0 {
                for a in enumerate_kp(n, QWeight::new(d0, d1)) {
                    assert_eq!(delta_of(&lambda_of(&a)) as i64, a.cross_sum());
                }
            }
        }
    }
}

#[test]
fn lambda_is_a_bijection() {
    for n in 1..=3usize {
        for d in 0..=4usize {
            let range = (1 - n as i64)..=(n as i64);
            let targets: BTreeSet<Vec<i64>> = (0..d)
                .map(|_| range.clone())
                .multi_cartesian_product()
                .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
                .collect();
            let mut images = BTreeSet::new();
            // all a with sum d live in weights with d0 - d1 = d
            for d1 in 0..=(2 * n * d) as i64 {
                for a in enumerate_kp(n, QWeight::new(d as i64 + d1, d1)) {
                    let l = lambda_of(&a);
                    assert_eq!(kp_of_lambda(n, &l), Some(a.clone()));
                    assert!(images.insert(l.lam));
                }
            }
            assert_eq!(images, targets, "n={} d={}", n, d);
        }
    }
}

#[test]
fn dimension_formula() {
    for n in 1..=6 {
        for k in 0..=n {
            assert_eq!(dim(&omega(n, k)), (k * (n - k)) as i64);
        }
    }
    for n in 1..=3 {
        for d in 0..=5 {
            let labels = dom_enumerate(n, d, 2);
            assert_eq!(labels, dom_enumerate(n, d, 2));
            assert!(labels.iter().all(|l| l.is_dominant()));
            let parities: BTreeSet<i64> = labels.iter().map(|l| l.dim().rem_euclid(2)).collect();
            assert!(parities.len() <= 1, "n={} d={}", n, d);
        }
    }
}

#[test]
fn tables_are_unitriangular() {
    for n in 1..=3 {
        for d0 in 0..=8 {
            for d1 in 0..=8 - d0 {
                let w = QWeight::new(d0, d1);
                if enumerate_kp(n, w).is_empty() {
                    continue;
                }
                let t = ic_table(n, w).unwrap();
                for r in &t.rows {
                    assert_eq!(r.delta as i64, r.a.cross_sum());
                    for (ap, p) in &r.coeffs {
                        let p: qcell::qring::HalfLaurent = p.parse().unwrap();
                        if *ap == r.a {
                            assert!(p.is_one());
                        } else {
                            assert!(p.max_exp().unwrap() < 0);
                        }
                    }
                }
            }
        }
    }
    let t = ic_table(2, QWeight::new(4, 2)).unwrap();
    assert_eq!(t.rows.len(), 2);
    assert_eq!(t.rows[0].lambda.lam, vec![1, 1]);
    assert_eq!(t.rows[1].lambda.lam, vec![2, 0]);
}
