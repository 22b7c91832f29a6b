//! Lusztig's symmetries on `U^+` computed inside a small piece of the quantum double.
//!
//! For a fixed index `i`, elements are sums `F_i^m K_i^a x` with `x` in the free
//! algebra. The image of `e_i` involves `F_i`, so words are pushed through the
//! commutation rules and the `U^+` part is read off at `(m, a) = (0, 0)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::freealg::{radical_check, FreeElement, Word};
use crate::qring::{HalfLaurent, RatFunc};
use crate::rootdata::QWeight;

/// The four sign/order variants of the rank-one symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidConvention {
    /// `T'_{i,-1}`
    PrimeMinus,
    /// `T'_{i,+1}`
    PrimePlus,
    /// `T''_{i,-1}`
    DoublePrimeMinus,
    /// `T''_{i,+1}`
    DoublePrimePlus,
}

impl BraidConvention {
    pub const ALL: [BraidConvention; 4] = [
        BraidConvention::PrimeMinus,
        BraidConvention::PrimePlus,
        BraidConvention::DoublePrimeMinus,
        BraidConvention::DoublePrimePlus,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            BraidConvention::PrimeMinus => "T'_{i,-1}",
            BraidConvention::PrimePlus => "T'_{i,+1}",
            BraidConvention::DoublePrimeMinus => "T''_{i,-1}",
            BraidConvention::DoublePrimePlus => "T''_{i,+1}",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.tag() == s)
    }

    fn e(&self) -> i64 {
        match self {
            BraidConvention::PrimeMinus | BraidConvention::DoublePrimeMinus => -1,
            _ => 1,
        }
    }

    fn is_prime(&self) -> bool {
        matches!(self, BraidConvention::PrimeMinus | BraidConvention::PrimePlus)
    }
}

impl fmt::Display for BraidConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// `e_i^{(r)} = e_i^r / [r]!`.
fn divided_letter(i: u8, r: u32) -> FreeElement {
    let w = Word::from_letters(&vec![i; r as usize]);
    FreeElement::word(w).scale(&RatFunc::new(HalfLaurent::one(), crate::qring::qfactorial(r)))
}

/// Image of `e_j`, `j != i`, in `U^+`:
/// `T'_{i,e}(e_j) = sum_{r+s=2} (-1)^r q^{er} e_i^{(r)} e_j e_i^{(s)}` and
/// `T''_{i,e}(e_j) = sum_{r+s=2} (-1)^r q^{-er} e_i^{(s)} e_j e_i^{(r)}`.
fn image_of_other(conv: BraidConvention, i: u8, j: u8) -> FreeElement {
    let e = conv.e();
    let mut out = FreeElement::zero();
    for r in 0..=2u32 {
        let s = 2 - r;
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let ej = FreeElement::gen(j);
        let (term, e2) = if conv.is_prime() {
            (divided_letter(i, r).multiply(&ej).multiply(&divided_letter(i, s)), 2 * e * r as i64)
        } else {
            (divided_letter(i, s).multiply(&ej).multiply(&divided_letter(i, r)), -2 * e * r as i64)
        };
        let c = RatFunc::from(HalfLaurent::monomial(BigInt::from(sign), e2));
        out = out.add(&term.scale(&c));
    }
    out
}

/// Image of `e_i` written as `scalar * F_i K_i^c`:
/// `T'_{i,e}(e_i) = -K_i^e F_i = -q^{-2e} F_i K_i^e` and `T''_{i,e}(e_i) = -F_i K_i^e`.
fn image_of_self(conv: BraidConvention) -> (RatFunc, i32) {
    let e = conv.e();
    if conv.is_prime() {
        (-&RatFunc::q_pow(-2 * e), e as i32)
    } else {
        (RatFunc::constant(-1), e as i32)
    }
}

/// `sum F_i^m K_i^a x_{m,a}`.
#[derive(Clone, Debug, Default)]
struct DoubleElem {
    comps: BTreeMap<(u32, i32), FreeElement>,
}

impl DoubleElem {
    fn one() -> Self {
        let mut comps = BTreeMap::new();
        comps.insert((0, 0), FreeElement::one());
        DoubleElem { comps }
    }

    fn add_to(&mut self, key: (u32, i32), x: FreeElement) {
        if x.is_zero() {
            return;
        }
        let slot = self.comps.entry(key).or_insert_with(FreeElement::zero);
        *slot = slot.add(&x);
        if slot.is_zero() {
            self.comps.remove(&key);
        }
    }

    fn add(&mut self, o: &DoubleElem, c: &RatFunc) {
        for (k, x) in &o.comps {
            self.add_to(*k, x.scale(c));
        }
    }

    fn rmul_plus(&self, y: &FreeElement) -> DoubleElem {
        let mut out = DoubleElem::default();
        for (k, x) in &self.comps {
            out.add_to(*k, x.multiply(y));
        }
        out
    }

    /// Right multiplication by `s * F_i K_i^c`.
    fn rmul_f(&self, i: u8, s: &RatFunc, c: i32) -> DoubleElem {
        let ai = QWeight::alpha(i);
        let qmq = RatFunc::from(HalfLaurent::from_terms(vec![
            (2, BigInt::one()),
            (-2, BigInt::from(-1)),
        ]));
        let inv_qmq = qmq.inv();
        let mut out = DoubleElem::default();
        for (&(m, a), x) in &self.comps {
            // F^m K^a F x K^c
            let mut by_weight: BTreeMap<QWeight, Vec<(Word, RatFunc)>> = BTreeMap::new();
            for (w, coef) in x.terms() {
                by_weight.entry(w.weight()).or_default().push((w, coef));
            }
            for (wt, terms) in &by_weight {
                let e2 = -2 * a as i64 - (c as i64) * wt.pair(&ai);
                let part = FreeElement::from_terms(terms.clone());
                out.add_to((m + 1, a + c), part.scale(&(s * &RatFunc::q_pow(e2))));
            }
            // commutator terms
            let mut plus: Vec<(Word, RatFunc)> = Vec::new();
            let mut minus: Vec<(Word, RatFunc)> = Vec::new();
            for (w, coef) in x.terms() {
                let (mut n0, mut n1) = (0i64, 0i64);
                for p in 0..w.len() {
                    let l = w.at(p);
                    if l == i {
                        let u = QWeight::new(n0, n1).pair(&ai);
                        let rest = w.remove(p);
                        let tail = -(c as i64) * rest.weight().pair(&ai);
                        let base = &(&coef * s) * &inv_qmq;
                        plus.push((rest, &base * &RatFunc::q_pow(-u + tail)));
                        minus.push((rest, -&(&base * &RatFunc::q_pow(u + tail))));
                    }
                    if l == 0 {
                        n0 += 1;
                    } else {
                        n1 += 1;
                    }
                }
            }
            out.add_to((m, a + 1 + c), FreeElement::from_terms(plus));
            out.add_to((m, a - 1 + c), FreeElement::from_terms(minus));
        }
        out
    }
}

/// Applies the symmetry `T_i` of the given convention to `x`. The result must lie
/// in `U^+`; components carrying `F_i` or `K_i` are certified to vanish.
pub fn braid_apply(conv: BraidConvention, i: u8, x: &FreeElement) -> Result<FreeElement> {
    let j = 1 - i;
    let other = image_of_other(conv, i, j);
    let (s, c) = image_of_self(conv);
    let mut memo: HashMap<Word, DoubleElem> = HashMap::new();
    memo.insert(Word::EMPTY, DoubleElem::one());
    let mut total = DoubleElem::default();
    for (w, coef) in x.terms() {
        let img = image_of_word(w, i, &other, &s, c, &mut memo);
        total.add(&img, &coef);
    }
    let mut result = FreeElement::zero();
    for (k, comp) in &total.comps {
        if *k == (0, 0) {
            result = comp.clone();
        } else if !radical_check(comp) {
            return Err(Error::ConventionMismatch(format!(
                "{} leaves a nonzero F/K component at {:?}",
                conv.tag(),
                k
            )));
        }
    }
    Ok(result)
}

fn image_of_word(
    w: Word,
    i: u8,
    other: &FreeElement,
    s: &RatFunc,
    c: i32,
    memo: &mut HashMap<Word, DoubleElem>,
) -> DoubleElem {
    if let Some(d) = memo.get(&w) {
        return d.clone();
    }
    let last = w.at(w.len() - 1);
    let prefix = w.remove(w.len() - 1);
    let base = image_of_word(prefix, i, other, s, c, memo);
    let d = if last == i { base.rmul_f(i, s, c) } else { base.rmul_plus(other) };
    memo.insert(w, d.clone());
    d
}

/// Root vectors `E(beta_1), ..., E(beta_m)` via `E(beta_{k+1}) = T_0(sigma(E(beta_k)))`.
pub fn root_vectors(conv: BraidConvention, m: usize) -> Result<Vec<FreeElement>> {
    let mut out = vec![FreeElement::gen(0)];
    while out.len() < m {
        let prev = out.last().unwrap().sigma();
        out.push(braid_apply(conv, 0, &prev)?);
    }
    out.truncate(m);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{generator_norm, lusztig_form};

    #[test]
    fn e_beta2_has_unit_norm() {
        let v = root_vectors(BraidConvention::PrimeMinus, 2).unwrap();
        assert_eq!(v[1].weights(), vec![QWeight::new(2, 1)]);
        assert_eq!(lusztig_form(&v[1], &v[1]), generator_norm());
    }

    #[test]
    fn tags_roundtrip() {
        for c in BraidConvention::ALL {
            assert_eq!(BraidConvention::from_tag(c.tag()), Some(c));
        }
    }
}
