//! Exact coefficients: Laurent polynomials in `v = q^{1/2}` and their fractions.
//!
//! Exponents are stored doubled, so `q^{e/2}` is the key `e`. Fractions are kept
//! reduced with a unit-free gcd, a denominator of lowest `v`-degree zero and a
//! positive leading coefficient, which makes structural equality exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `q^{1/2}` with big-integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurent {
    // (doubled exponent, coefficient), exponents strictly decreasing, no zeros
    terms: Vec<(i64, BigInt)>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// `c * q^{e2/2}`.
    pub fn monomial(c: BigInt, e2: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            HalfLaurent { terms: vec![(e2, c)] }
        }
    }

    /// `q^k` for integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), 2 * k)
    }

    /// `q^{e2/2}`.
    pub fn half_q_pow(e2: i64) -> Self {
        Self::monomial(BigInt::one(), e2)
    }

    /// Builds from arbitrary (doubled exponent, coefficient) pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut v: Vec<(i64, BigInt)> = it.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        HalfLaurent { terms: out }
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Largest doubled exponent.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    /// Smallest doubled exponent.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of `q^{e2/2}`.
    pub fn coeff(&self, e2: i64) -> BigInt {
        self.terms
            .iter()
            .find(|t| t.0 == e2)
            .map(|t| t.1.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// If the polynomial is `c * q^{e2/2}`, returns `(c, e2)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].1.clone(), self.terms[0].0))
        } else {
            None
        }
    }

    /// Multiplies by `q^{e2/2}`.
    pub fn shift(&self, e2: i64) -> Self {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + e2, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HalfLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes `q^{1/2} -> q^{-1/2}`.
    pub fn bar(&self) -> Self {
        HalfLaurent {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// True when every exponent is an integer power of `q`.
    pub fn is_integral_q(&self) -> bool {
        self.terms.iter().all(|t| t.0 % 2 == 0)
    }

    /// Membership in `q^{-1} Z[q^{-1}]`.
    pub fn in_neg_ring(&self) -> bool {
        self.terms.iter().all(|t| t.0 % 2 == 0 && t.0 <= -2)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Ascending coefficient vector in `v` together with the lowest exponent.
    fn to_poly(&self) -> (i64, Vec<BigInt>) {
        let lo = match self.min_exp() {
            Some(e) => e,
            None => return (0, Vec::new()),
        };
        let hi = self.max_exp().unwrap();
        let mut p = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            p[(e - lo) as usize] = c.clone();
        }
        (lo, p)
    }

    fn from_poly(lo: i64, p: &[BigInt]) -> Self {
        let mut terms = Vec::new();
        for (i, c) in p.iter().enumerate().rev() {
            if !c.is_zero() {
                terms.push((lo + i as i64, c.clone()));
            }
        }
        HalfLaurent { terms }
    }

    /// Human-oriented rendering such as `q^2 - 2 + q^(-1/2)`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => String::new(),
                2 => "q".to_string(),
                e if e % 2 == 0 => format!("q^{}", e / 2),
                e => format!("q^({}/2)", e),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}{}", a, mono));
            }
        }
        s
    }
}

impl fmt::Display for HalfLaurent {
    /// Canonical form: `c*q^(e/2)` terms in decreasing exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*q^({}/2)", c, e)?;
        }
        Ok(())
    }
}

impl FromStr for HalfLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for part in s.split(" + ") {
            let bad = || Error::Parse(format!("bad term '{}'", part));
            let (c, rest) = part.split_once("*q^(").ok_or_else(bad)?;
            let e = rest.strip_suffix("/2)").ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let e: i64 = e.parse().map_err(|_| bad())?;
            if c.is_zero() {
                return Err(bad());
            }
            terms.push((e, c));
        }
        let out = HalfLaurent::from_terms(terms.clone());
        if out.terms.len() != terms.len() || out.terms != terms {
            return Err(Error::Parse(format!("non-canonical polynomial '{}'", s)));
        }
        Ok(out)
    }
}

impl<'a> Add<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;

    fn add(self, o: &HalfLaurent) -> HalfLaurent {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        HalfLaurent { terms: out }
    }
}

impl<'a> Neg for &'a HalfLaurent {
    type Output = HalfLaurent;

    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;

    fn sub(self, o: &HalfLaurent) -> HalfLaurent {
        self + &(-o)
    }
}

impl<'a> Mul<&'a HalfLaurent> for &'a HalfLaurent {
    type Output = HalfLaurent;

    fn mul(self, o: &HalfLaurent) -> HalfLaurent {
        if self.is_zero() || o.is_zero() {
            return HalfLaurent::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return HalfLaurent {
                terms: o.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
        }
        if o.terms.len() == 1 {
            return o * self;
        }
        let lo = self.min_exp().unwrap() + o.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + o.max_exp().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            for (f, d) in &o.terms {
                acc[(e + f - lo) as usize] += c * d;
            }
        }
        HalfLaurent::from_poly(lo, &acc)
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, o: HalfLaurent) -> HalfLaurent {
        &self + &o
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, o: HalfLaurent) -> HalfLaurent {
        &self * &o
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, o: HalfLaurent) -> HalfLaurent {
        &self - &o
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

// ---- dense integer polynomials in v, ascending coefficients ----

fn trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by nonzero `b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        trim(&mut r);
    }
    r
}

/// Gcd over `Z[v]`, leading coefficient positive.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return normalize_sign(b);
    }
    if b.is_empty() {
        return normalize_sign(a);
    }
    let c = content(&a).gcd(&content(&b));
    let mut a = primitive(&a);
    let mut b = primitive(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            a = vec![BigInt::one()];
            break;
        }
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    let g: Vec<BigInt> = primitive(&a).iter().map(|x| x * &c).collect();
    normalize_sign(g)
}

fn normalize_sign(mut p: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut p);
    if p.last().map_or(false, |c| c.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

/// Exact division over `Z[v]`; `None` if a remainder or fraction appears.
fn poly_divexact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    let db = b.len() - 1;
    if r.len() - 1 < db {
        return None;
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &qc * c;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

fn is_unit(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].abs().is_one()
}

/// Gcd of Laurent polynomials up to units `+-v^k`; normalized with lowest exponent 0.
pub fn laurent_gcd(a: &HalfLaurent, b: &HalfLaurent) -> HalfLaurent {
    let (_, pa) = a.to_poly();
    let (_, pb) = b.to_poly();
    HalfLaurent::from_poly(0, &poly_gcd(&pa, &pb))
}

/// Exact quotient `a / b` in `Z[q^{+-1/2}]`, if it exists.
pub fn laurent_div(a: &HalfLaurent, b: &HalfLaurent) -> Option<HalfLaurent> {
    if b.is_zero() {
        return None;
    }
    let (la, pa) = a.to_poly();
    let (lb, pb) = b.to_poly();
    poly_divexact(&pa, &pb).map(|q| HalfLaurent::from_poly(la - lb, &q))
}

/// Element of `Q(q^{1/2})` stored as a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: HalfLaurent,
    den: HalfLaurent,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: HalfLaurent::zero(), den: HalfLaurent::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: HalfLaurent::one(), den: HalfLaurent::one() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from(HalfLaurent::constant(c))
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from(HalfLaurent::q_pow(k))
    }

    pub fn half_q_pow(e2: i64) -> Self {
        Self::from(HalfLaurent::half_q_pow(e2))
    }

    /// Reduced fraction `num / den`; panics on a zero denominator.
    pub fn new(num: HalfLaurent, den: HalfLaurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (ln, pn) = num.to_poly();
        let (ld, pd) = den.to_poly();
        let g = poly_gcd(&pn, &pd);
        let (mut pn, mut pd) = if is_unit(&g) {
            (pn, pd)
        } else {
            (
                poly_divexact(&pn, &g).expect("gcd divides numerator"),
                poly_divexact(&pd, &g).expect("gcd divides denominator"),
            )
        };
        if pd.last().unwrap().is_negative() {
            pn.iter_mut().for_each(|c| *c = -&*c);
            pd.iter_mut().for_each(|c| *c = -&*c);
        }
        RatFunc {
            num: HalfLaurent::from_poly(ln - ld, &pn),
            den: HalfLaurent::from_poly(0, &pd),
        }
    }

    pub fn num(&self) -> &HalfLaurent {
        &self.num
    }

    pub fn den(&self) -> &HalfLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial equal to `self`, if any.
    pub fn as_laurent(&self) -> Option<&HalfLaurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn bar(&self) -> Self {
        RatFunc::new(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Self {
        self * &o.inv()
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        RatFunc {
            num: base.num.pow(k.unsigned_abs() as u32),
            den: base.den.pow(k.unsigned_abs() as u32),
        }
    }

    /// Multiplies by `q^{e2/2}` without a gcd pass.
    pub fn shift(&self, e2: i64) -> Self {
        RatFunc { num: self.num.shift(e2), den: self.den.clone() }
    }

    /// Cross-multiplication equality test.
    pub fn cross_eq(&self, o: &RatFunc) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }

    pub fn pretty(&self) -> String {
        if self.den.is_one() {
            self.num.pretty()
        } else {
            format!("({})/({})", self.num.pretty(), self.den.pretty())
        }
    }
}

impl From<HalfLaurent> for RatFunc {
    fn from(x: HalfLaurent) -> Self {
        RatFunc { num: x, den: HalfLaurent::one() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('(') {
            let (n, d) = body
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("bad fraction '{}'", s)))?;
            let d = d
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("bad fraction '{}'", s)))?;
            let n: HalfLaurent = n.parse()?;
            let d: HalfLaurent = d.parse()?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let r = RatFunc::new(n.clone(), d.clone());
            if r.num != n || r.den != d {
                return Err(Error::Parse(format!("non-reduced fraction '{}'", s)));
            }
            Ok(r)
        } else {
            Ok(RatFunc::from(s.parse::<HalfLaurent>()?))
        }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from(&self.num + &o.num);
            }
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<'a> Neg for &'a RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from(&self.num * &o.num);
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        &self + &o
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        &self - &o
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        &self * &o
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

/// Bar involution `q^{1/2} -> q^{-1/2}`.
pub fn bar(x: &RatFunc) -> RatFunc {
    x.bar()
}

/// Quantum integer `[i]_q = q^{i-1} + q^{i-3} + ... + q^{1-i}`.
pub fn qint(i: u32) -> HalfLaurent {
    HalfLaurent::from_terms(
        (0..i).map(|j| (2 * (i as i64 - 1 - 2 * j as i64), BigInt::one())),
    )
}

/// `[l]_q! = [1]_q [2]_q ... [l]_q`.
pub fn qfactorial(l: u32) -> HalfLaurent {
    (1..=l).fold(HalfLaurent::one(), |acc, i| &acc * &qint(i))
}

/// Gaussian binomial `[m choose k]_q`.
pub fn qbinomial(m: u32, k: u32) -> HalfLaurent {
    if k > m {
        return HalfLaurent::zero();
    }
    laurent_div(&qfactorial(m), &(&qfactorial(k) * &qfactorial(m - k)))
        .expect("q-binomials are Laurent")
}

/// The Laurent polynomial equal to `x`.
pub fn laurent_of(x: &RatFunc) -> Result<HalfLaurent> {
    x.as_laurent()
        .cloned()
        .ok_or_else(|| Error::NotLaurent(x.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> HalfLaurent {
        HalfLaurent::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn bar_of_q() {
        assert_eq!(bar(&RatFunc::q_pow(1)), RatFunc::q_pow(-1));
        assert_eq!(bar(&RatFunc::constant(3)), RatFunc::constant(3));
    }

    #[test]
    fn bar_of_norm() {
        // 1/(1-q^{-2}) -> 1/(1-q^2) = -q^{-2}/(1-q^{-2})
        let x = RatFunc::new(HalfLaurent::one(), lp(&[(0, 1), (-4, -1)]));
        let expect = RatFunc::new(lp(&[(-4, -1)]), lp(&[(0, 1), (-4, -1)]));
        assert_eq!(bar(&x), expect);
        assert!(bar(&x).cross_eq(&expect));
    }

    #[test]
    fn qint_small() {
        assert_eq!(qint(1), HalfLaurent::one());
        assert_eq!(qint(2), lp(&[(2, 1), (-2, 1)]));
        let expect = &lp(&[(2, 1), (-2, 1)]) * &lp(&[(4, 1), (0, 1), (-4, 1)]);
        assert_eq!(qfactorial(3), expect);
        assert_eq!(qfactorial(0), HalfLaurent::one());
    }

    #[test]
    fn laurent_of_examples() {
        // (q^2-1)/(q-1) * q^{-1/2}
        let x = RatFunc::new(lp(&[(3, 1), (-1, -1)]), lp(&[(2, 1), (0, -1)]));
        assert_eq!(laurent_of(&x).unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(laurent_of(&RatFunc::constant(5)).unwrap(), HalfLaurent::constant(5));
        let y = RatFunc::new(HalfLaurent::one(), lp(&[(0, 1), (-4, -1)]));
        assert!(matches!(laurent_of(&y), Err(Error::NotLaurent(_))));
    }

    #[test]
    fn render_roundtrip() {
        let x = lp(&[(3, -2), (0, 7), (-5, 1)]);
        let s = x.to_string();
        assert_eq!(s, "-2*q^(3/2) + 7*q^(0/2) + 1*q^(-5/2)");
        assert_eq!(s.parse::<HalfLaurent>().unwrap(), x);
        let r = RatFunc::new(x.clone(), lp(&[(2, 1), (0, 1)]));
        assert_eq!(r.to_string().parse::<RatFunc>().unwrap(), r);
        assert_eq!("0".parse::<RatFunc>().unwrap(), RatFunc::zero());
    }

    #[test]
    fn content_is_reduced() {
        let r = RatFunc::new(HalfLaurent::constant(4), HalfLaurent::constant(6));
        assert_eq!(r.num(), &HalfLaurent::constant(2));
        assert_eq!(r.den(), &HalfLaurent::constant(3));
        let s = RatFunc::new(HalfLaurent::constant(-1), lp(&[(2, -1)]));
        assert_eq!(s, RatFunc::q_pow(-1));
    }

    #[test]
    fn qbinomial_small() {
        assert_eq!(qbinomial(2, 1), qint(2));
        assert_eq!(qbinomial(4, 0), HalfLaurent::one());
    }
}
