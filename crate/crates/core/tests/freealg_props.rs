use proptest::prelude::*;
use qcell::freealg::{
    coproduct, lusztig_form, lusztig_form_last, lusztig_form_tensor, radical_check, serre_element, FreeElement,
    Word,
};
use qcell::qring::{HalfLaurent, RatFunc};

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max).prop_map(|l| Word::from_letters(&l))
}

/// Random element of a single weight: words with fixed letter counts.
fn homogeneous(c0: usize, c1: usize) -> impl Strategy<Value = FreeElement> {
    let base: Vec<u8> = std::iter::repeat(0).take(c0).chain(std::iter::repeat(1).take(c1)).collect();
    prop::collection::vec((Just(base.clone()).prop_shuffle(), -3i64..=3, -4i64..=4), 1..4).prop_map(|terms| {
        FreeElement::from_terms(
            terms
                .into_iter()
                .map(|(l, c, e)| (Word::from_letters(&l), RatFunc::from(HalfLaurent::constant(c).shift(2 * e)))),
        )
    })
}

fn pair() -> impl Strategy<Value = (FreeElement, FreeElement)> {
    (0usize..=4, 0usize..=4)
        .prop_filter("degree <= 8", |(a, b)| a + b <= 8 && a + b > 0)
        .prop_flat_map(|(a, b)| (homogeneous(a, b), homogeneous(a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn form_is_symmetric((x, y) in pair()) {
        prop_assert_eq!(lusztig_form(&x, &y), lusztig_form(&y, &x));
    }

    #[test]
    fn first_and_last_letter_recursions_agree((x, y) in pair()) {
        prop_assert_eq!(lusztig_form(&x, &y), lusztig_form_last(&x, &y));
    }

    #[test]
    fn hopf_pairing(x in word(5), y in word(3), z in word(3)) {
        let (x, y, z) = (FreeElement::word(x), FreeElement::word(y), FreeElement::word(z));
        prop_assert_eq!(lusztig_form(&x, &y.multiply(&z)), lusztig_form_tensor(&coproduct(&x), &y, &z));
    }

    #[test]
    fn distinct_weights_are_orthogonal(x in word(6), y in word(6)) {
        prop_assume!(x.weight() != y.weight());
        prop_assert!(lusztig_form(&FreeElement::word(x), &FreeElement::word(y)).is_zero());
    }
}

fn words_up_to(d: usize) -> Vec<Word> {
    let mut out = vec![Word::from_letters(&[])];
    let mut layer = out.clone();
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..2u8 {
                next.push(w.concat(&Word::letter(i)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[test]
fn serre_elements_generate_a_two_sided_radical_ideal() {
    for (i, j) in [(0u8, 1u8), (1, 0)] {
        let s = serre_element(i, j);
        assert!(radical_check(&s));
        for w in words_up_to(4) {
            let w = FreeElement::word(w);
            assert!(radical_check(&s.multiply(&w)));
            assert!(radical_check(&w.multiply(&s)));
        }
    }
}
