use qcell::aalg::{self, qcommute_exponent};
use qcell::cluster::{
    check_commutation, explore, initial_seed, mutate, mutate_sequence, realized_exponents, verify_laurent,
    ExchangeData,
};

fn lambda_formula(k: i64, l: i64) -> i64 {
    // 2 ceil(k/2) (floor(k/2) - floor(l/2)) for k < l
    let ceil = (k as f64 / 2.0).ceil() as i64;
    2 * ceil * (k.div_euclid(2) - l.div_euclid(2))
}

#[test]
fn seed_matches_closed_patterns() {
    for n in 1..=4 {
        let e = ExchangeData::initial(n);
        let m = 2 * n;
        for k in 1..=m {
            for l in 1..=m {
                let want = if k < l {
                    lambda_formula(k as i64, l as i64)
                } else if k > l {
                    -lambda_formula(l as i64, k as i64)
                } else {
                    0
                };
                assert_eq!(e.lambda[k - 1][l - 1], want);
            }
        }
        let d = e.compatibility().unwrap();
        assert!(d.iter().all(|&x| x > 0));
    }
    let e = ExchangeData::initial(2);
    assert_eq!(e.btilde, vec![vec![0, -2], vec![2, 0], vec![-1, 2], vec![0, -1]]);
}

#[test]
fn realization_commutes_as_lambda() {
    for n in 1..=3 {
        let s = initial_seed(n).unwrap();
        let ex = realized_exponents(&s).unwrap();
        for k in 0..2 * n {
            for l in 0..2 * n {
                assert_eq!(ex[k][l], Some(s.exchange.lambda[k][l]), "n={} ({},{})", n, k + 1, l + 1);
            }
        }
    }
}

fn sequences(mutable: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..depth {
        let mut next = Vec::new();
        for s in &layer {
            for k in 1..=mutable {
                if s.last() != Some(&k) {
                    let mut t: Vec<usize> = s.clone();
                    t.push(k);
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[test]
fn mutations_stay_in_the_basis() {
    for (n, depth) in [(2, 2), (3, 1)] {
        let seed = initial_seed(n).unwrap();
        let d0 = aalg::frozen_d0(n).unwrap();
        let d1 = aalg::frozen_d1(n).unwrap();
        for seq in sequences(2 * n - 2, depth) {
            let s = mutate_sequence(&seed, &seq).unwrap();
            assert!(s.exchange.compatibility().is_ok());
            assert!(s.exchange.is_skew());
            check_commutation(&s).unwrap();
            assert_eq!(s.realization[2 * n - 2], d0);
            assert_eq!(s.realization[2 * n - 1], d1);
            for x in &s.realization {
                assert_eq!(aalg::iota(x).unwrap(), *x);
                let w = x.weight().unwrap();
                assert!(aalg::dual_canonical(n, w).unwrap().find(x).is_some(), "{:?}", seq);
                assert!(qcommute_exponent(&d0, x).unwrap().is_some());
                assert!(qcommute_exponent(&d1, x).unwrap().is_some());
            }
            if let Some(&k) = seq.last() {
                assert_eq!(mutate(&s, k).unwrap(), mutate_sequence(&seed, &seq[..seq.len() - 1]).unwrap());
            }
        }
    }
}

#[test]
fn laurent_phenomenon() {
    let seed = initial_seed(2).unwrap();
    assert!(verify_laurent(&seed, &[1, 1, 1, 1]).violations.is_empty());
    for seq in sequences(2, 2) {
        let s = mutate_sequence(&seed, &seq).unwrap();
        let r = verify_laurent(&s, &[1, 0, 1, 0]);
        assert!(r.violations.is_empty(), "{:?}: {:?}", seq, r.violations);
    }
}

#[test]
fn bounded_search_reports_minors() {
    let e = explore(2, 2).unwrap();
    assert!(e.records.iter().all(|r| r.iota_fixed && r.label.is_some()));
    assert!(e.minors_unreached.is_empty());
}
