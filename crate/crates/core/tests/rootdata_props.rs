use proptest::prelude::*;
use qcell::rootdata::{beta, enumerate_kp, minor_weight, word_action, KostantPartition, PWeight, QWeight};

#[test]
fn real_roots_have_norm_two() {
    for k in 1..=8 {
        for l in 1..=8 {
            assert_eq!(beta(k).pair(&beta(l)), 2);
        }
    }
}

#[test]
fn minor_weights_are_interval_sums() {
    for n in 1..=4 {
        for b in 1..=2 * n {
            for d in (b..=2 * n).step_by(2) {
                let mut s = QWeight::ZERO;
                let mut j = b;
                while j <= d {
                    s = s + beta(j);
                    j += 2;
                }
                assert_eq!(minor_weight(b, d), s);
                assert_eq!(KostantPartition::interval(n, b, d).weight(), s);
            }
        }
    }
}

#[test]
fn word_prefixes_grow() {
    // w_{<=k} w_0 ... the subtracted positive roots accumulate without cancellation
    for i in 0..2u8 {
        let lam = PWeight::fundamental(i);
        let mut last = 0;
        for k in 1..=8 {
            let diff = lam - word_action(k, lam);
            let q = diff.as_q().expect("difference lies in Q");
            assert!(q.is_nonneg());
            assert!(q.degree() >= last);
            last = q.degree();
        }
    }
}

fn kp_oracle(n: usize, w: QWeight) -> Vec<Vec<u32>> {
    // reverse search order: largest root first
    fn go(k: usize, rest: QWeight, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            if rest == QWeight::ZERO {
                out.push(cur.clone());
            }
            return;
        }
        let b = beta(k);
        let mut m = 0;
        loop {
            let r = rest - b.scale(m);
            if !r.is_nonneg() {
                break;
            }
            cur[k - 1] = m as u32;
            go(k - 1, r, cur, out);
            m += 1;
        }
        cur[k - 1] = 0;
    }
    let mut out = Vec::new();
    go(2 * n, w, &mut vec![0; 2 * n], &mut out);
    out.sort();
    out
}

proptest! {
    #[test]
    fn reflections_are_involutions(p0 in -5i64..5, p1 in -5i64..5, d0 in 0i64..5, d1 in 0i64..5, i in 0u8..2) {
        let x = PWeight::new(p0, p1, QWeight::new(d0, d1));
        prop_assert_eq!(x.reflect(i).reflect(i), x);
    }

    #[test]
    fn kp_enumeration_is_order_independent(n in 1usize..4, d0 in 0i64..9, d1 in 0i64..9) {
        let w = QWeight::new(d0, d1);
        let mut got: Vec<Vec<u32>> = enumerate_kp(n, w).into_iter().map(|a| a.a).collect();
        got.sort();
        prop_assert_eq!(got, kp_oracle(n, w));
    }
}
