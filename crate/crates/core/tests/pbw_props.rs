use qcell::linalg;
use qcell::pbw::{engine, BarRoute};
use qcell::qring::{HalfLaurent, RatFunc};
use qcell::rootdata::{enumerate_kp, KostantPartition, QWeight};

fn weights(n: usize, max_degree: i64) -> Vec<QWeight> {
    let mut out = Vec::new();
    for d0 in 0..=max_degree {
        for d1 in 0..=max_degree - d0 {
            let w = QWeight::new(d0, d1);
            if !enumerate_kp(n, w).is_empty() {
                out.push(w);
            }
        }
    }
    out
}

/// `prod_k prod_{j=1}^{a_k} (1 - q^{-2j})^{-1}`.
fn closed_form(a: &KostantPartition) -> RatFunc {
    let mut den = HalfLaurent::one();
    for &m in &a.a {
        for j in 1..=m as i64 {
            den = &den * &(&HalfLaurent::one() - &HalfLaurent::q_pow(-2 * j));
        }
    }
    RatFunc::new(HalfLaurent::one(), den)
}

#[test]
fn gram_closed_form_up_to_degree_10() {
    for n in 1..=3 {
        let e = engine(n).unwrap();
        for w in weights(n, 10) {
            let keys = e.keys(w);
            for a in &keys {
                for b in &keys {
                    let g = e.gram_free(a, b).unwrap();
                    if a == b {
                        assert_eq!(g, closed_form(a), "n={} a={}", n, a);
                    } else {
                        assert!(g.is_zero(), "n={} a={} b={}", n, a, b);
                    }
                }
            }
        }
    }
}

#[test]
fn levendorskii_soibelman() {
    for n in 1..=3 {
        let e = engine(n).unwrap();
        for k in 1..=2 * n {
            for l in k + 1..=2 * n {
                let (ek, el) = (KostantPartition::unit(n, k), KostantPartition::unit(n, l));
                let x = e.pbw_monomial(&el).unwrap().multiply(&e.pbw_monomial(&ek).unwrap());
                let c = e.expand_pbw(&x).unwrap();
                for (a, v) in &c.coords {
                    if v.is_zero() {
                        continue;
                    }
                    for j in 1..=2 * n {
                        if j < k || j > l {
                            assert_eq!(a.a[j - 1], 0, "support of E(beta_{})E(beta_{})", l, k);
                        }
                    }
                }
                assert_eq!(c.coeff(&ek.add(&el)), RatFunc::q_pow(2));
            }
        }
    }
}

fn in_neg_ring(x: &HalfLaurent) -> bool {
    x.terms().iter().all(|(e, _)| *e < 0 && e % 2 == 0)
}

#[test]
fn canonical_bases_are_bar_invariant_and_unitriangular() {
    for n in 1..=3 {
        let e = engine(n).unwrap();
        for w in weights(n, 10) {
            let c = e.canonical(w).unwrap();
            for (i, row) in c.coeffs.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if i == j {
                        assert!(x.is_one());
                    } else {
                        assert!(in_neg_ring(x), "n={} w={} entry {}", n, w, x);
                    }
                }
            }
            // bar(C) M = C against both routes
            for route in [BarRoute::Free, BarRoute::Straightening] {
                let m = e.bar_matrix_via(w, route).unwrap();
                let cm = c.as_matrix();
                assert_eq!(linalg::mul(&linalg::bar(&cm), &m.entries), cm, "n={} w={}", n, w);
            }
            // unitriangular, hence invertible with Laurent inverse
            let inv = linalg::invert(&c.as_matrix()).unwrap();
            assert!(inv.iter().flatten().all(|x| x.as_laurent().is_some()));
        }
    }
}

#[test]
fn bar_matrices_are_involutions() {
    for n in 1..=3 {
        let e = engine(n).unwrap();
        for w in weights(n, 10) {
            let m = e.bar_matrix(w).unwrap();
            assert!(linalg::is_identity(&linalg::mul(&m.entries, &linalg::bar(&m.entries))));
        }
    }
}
