use proptest::prelude::*;
use qcell::qring::{qbinomial, qfactorial, qint, HalfLaurent, RatFunc};

fn laurent() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec((-8i64..=8, -5i64..=5), 0..5).prop_map(|t| {
        HalfLaurent::from_terms(t.into_iter().map(|(e, c)| (e, c.into())))
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(a, b)| {
        (!b.is_zero()).then(|| RatFunc::new(a, b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bar_is_a_ring_involution(x in ratfunc(), y in ratfunc()) {
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        prop_assert_eq!((&x + &y).bar(), &x.bar() + &y.bar());
        prop_assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn equality_agrees_with_cross_multiplication(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(x == y, x.cross_eq(&y));
        prop_assert_eq!(x == y, y == x);
        if x == y && y == z {
            prop_assert_eq!(&x, &z);
        }
        let scaled = RatFunc::new(
            (x.num() * &HalfLaurent::q_pow(3)) * HalfLaurent::constant(2),
            (x.den() * &HalfLaurent::q_pow(3)) * HalfLaurent::constant(2),
        );
        prop_assert_eq!(&scaled, &x);
    }

    #[test]
    fn ring_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv()).is_one());
        }
    }

    #[test]
    fn rendering_roundtrips(x in laurent(), y in ratfunc()) {
        prop_assert_eq!(x.to_string().parse::<HalfLaurent>().unwrap(), x);
        prop_assert_eq!(y.to_string().parse::<RatFunc>().unwrap(), y);
    }
}

#[test]
fn qfactorials_are_bar_invariant() {
    for l in 0..=8 {
        assert_eq!(qfactorial(l).bar(), qfactorial(l));
        assert_eq!(qint(l).bar(), qint(l));
    }
}

#[test]
fn binomial_symmetry() {
    for m in 0..=7 {
        for k in 0..=m {
            assert_eq!(qbinomial(m, k), qbinomial(m, m - k));
        }
    }
}
