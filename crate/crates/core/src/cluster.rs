//! Quantum cluster seeds for `A_n`: exchange data, Berenstein-Zelevinsky
//! mutation in the quantum torus and inside `A_n`, and a bounded search for
//! quantum minors among cluster variables.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::aalg::{self, DualCoords};
use crate::error::{Error, Result};
use crate::qring::RatFunc;
use crate::rootdata::KostantPartition;

pub const MUTATION_CONVENTION: &str = "BZ mutation, E_+ column split";

/// Exchange matrix (`2n x (2n-2)`) and skew form (`2n x 2n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeData {
    pub n: usize,
    pub btilde: Vec<Vec<i64>>,
    pub lambda: Vec<Vec<i64>>,
}

fn btilde_entry(k: i64, l: i64) -> i64 {
    match l - k {
        2 => 1,
        1 => -2,
        -1 => 2,
        -2 => -1,
        _ => 0,
    }
}

/// `2 ceil(k/2) (floor(k/2) - floor(l/2))` for `k < l`, 1-based.
pub fn lambda_entry(k: i64, l: i64) -> i64 {
    if k == l {
        0
    } else if k < l {
        2 * ((k + 1) / 2) * (k / 2 - l / 2)
    } else {
        -lambda_entry(l, k)
    }
}

impl ExchangeData {
    pub fn initial(n: usize) -> Self {
        let m = 2 * n as i64;
        let btilde = (1..=m)
            .map(|k| (1..=m - 2).map(|l| btilde_entry(k, l)).collect())
            .collect();
        let lambda = (1..=m)
            .map(|k| (1..=m).map(|l| lambda_entry(k, l)).collect())
            .collect();
        ExchangeData { n, btilde, lambda }
    }

    pub fn rows(&self) -> usize {
        2 * self.n
    }

    pub fn mutable(&self) -> usize {
        2 * self.n - 2
    }

    /// `transpose(btilde) lambda`.
    pub fn compatibility_product(&self) -> Vec<Vec<i64>> {
        let m = self.rows();
        (0..self.mutable())
            .map(|j| {
                (0..m)
                    .map(|c| (0..m).map(|i| self.btilde[i][j] * self.lambda[i][c]).sum())
                    .collect()
            })
            .collect()
    }

    /// Checks `transpose(btilde) lambda = (D | 0)` with `D` positive diagonal; returns `D`.
    pub fn compatibility(&self) -> Result<Vec<i64>> {
        let p = self.compatibility_product();
        let mut d = Vec::new();
        for (j, row) in p.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let ok = if c == j { v > 0 } else { v == 0 };
                if !ok {
                    return Err(Error::SeedIncompatible(format!(
                        "transpose(B)Λ has entry {} at ({}, {})",
                        v,
                        j + 1,
                        c + 1
                    )));
                }
            }
            d.push(row[j]);
        }
        Ok(d)
    }

    pub fn is_skew(&self) -> bool {
        let m = self.rows();
        (0..m).all(|i| (0..m).all(|j| self.lambda[i][j] == -self.lambda[j][i]))
    }

    /// `E_eps` for mutation at `k` (0-based).
    fn e_matrix(&self, k: usize, eps: i64) -> Vec<Vec<i64>> {
        let m = self.rows();
        let mut e = vec![vec![0; m]; m];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1;
        }
        for i in 0..m {
            e[i][k] = if i == k { -1 } else { (-eps * self.btilde[i][k]).max(0) };
        }
        e
    }

    /// Mutation at `k` (1-based) with the column split `eps`.
    pub fn mutate_with(&self, k: usize, eps: i64) -> Result<ExchangeData> {
        if k < 1 || k > self.mutable() {
            return Err(Error::InvalidInput(format!("{} is not a mutable index for n = {}", k, self.n)));
        }
        let k = k - 1;
        let m = self.rows();
        let b = &self.btilde;
        let btilde = (0..m)
            .map(|i| {
                (0..self.mutable())
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0)
                        }
                    })
                    .collect()
            })
            .collect();
        let e = self.e_matrix(k, eps);
        let lambda = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut s = 0;
                        for a in 0..m {
                            for c in 0..m {
                                s += e[a][i] * self.lambda[a][c] * e[c][j];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Ok(ExchangeData { n: self.n, btilde, lambda })
    }

    pub fn mutate(&self, k: usize) -> Result<ExchangeData> {
        self.mutate_with(k, 1)
    }

    /// Exponent vectors `(b_+, b_-)` of column `k` (1-based).
    pub fn exchange_monomials(&self, k: usize) -> (Vec<i64>, Vec<i64>) {
        let col: Vec<i64> = self.btilde.iter().map(|r| r[k - 1]).collect();
        (
            col.iter().map(|&v| v.max(0)).collect(),
            col.iter().map(|&v| (-v).max(0)).collect(),
        )
    }

    fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let m = self.rows();
        let mut s = 0;
        for i in 0..m {
            for j in 0..m {
                s += a[i] * self.lambda[i][j] * b[j];
            }
        }
        s
    }
}

/// Element of the based quantum torus of the initial seed, `sum_v c_v M(v)`
/// with `M(a) M(b) = q^{Λ(a,b)/2} M(a+b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    pub terms: BTreeMap<Vec<i64>, RatFunc>,
}

impl TorusElement {
    pub fn monomial(v: Vec<i64>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(v, RatFunc::one());
        TorusElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, v: Vec<i64>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(v.clone()).or_insert_with(RatFunc::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn add(&self, o: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (v, c) in &o.terms {
            out.push(v.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> TorusElement {
        let mut out = TorusElement { terms: BTreeMap::new() };
        for (v, d) in &self.terms {
            out.push(v.clone(), d * c);
        }
        out
    }

    pub fn mul(&self, o: &TorusElement, frame: &ExchangeData) -> TorusElement {
        let mut out = TorusElement { terms: BTreeMap::new() };
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let s = RatFunc::half_q_pow(frame.form(a, b));
                out.push(v, &(c * d) * &s);
            }
        }
        out
    }

    /// `c` with `c * b = self`, if it is a Laurent polynomial.
    pub fn right_divide(&self, b: &TorusElement, frame: &ExchangeData) -> Option<TorusElement> {
        let (lb, cb) = b.terms.iter().next_back()?;
        let low_a = self.terms.keys().next()?.clone();
        let low_b = b.terms.keys().next()?;
        let floor: Vec<i64> = low_a.iter().zip(low_b).map(|(x, y)| x - y).collect();
        let mut rem = self.clone();
        let mut quot = TorusElement { terms: BTreeMap::new() };
        while let Some((la, ca)) = rem.terms.iter().next_back() {
            let u: Vec<i64> = la.iter().zip(lb).map(|(x, y)| x - y).collect();
            if u < floor {
                return None;
            }
            // M(u) M(lb) = q^{Λ(u,lb)/2} M(la)
            let s = RatFunc::half_q_pow(-frame.form(&u, lb));
            let c = &ca.div(cb) * &s;
            let t = TorusElement { terms: BTreeMap::from([(u, c)]) };
            rem = rem.add(&t.mul(b, frame).scale(&RatFunc::constant(-1)));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// All coefficients lie in `Z[q^{±1/2}]`.
    pub fn is_laurent(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.as_laurent().is_some())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(v, c)| json!({"exp": v, "c": c.to_string()}))
                .collect(),
        )
    }
}

/// A quantum seed with its torus expressions and its realization in `A_n`.
#[derive(Clone, Debug)]
pub struct QuantumSeed {
    pub exchange: ExchangeData,
    pub torus_vars: Vec<TorusElement>,
    pub realization: Vec<DualCoords>,
    pub history: Vec<usize>,
}

impl PartialEq for QuantumSeed {
    fn eq(&self, o: &Self) -> bool {
        self.exchange == o.exchange && self.realization == o.realization && self.torus_vars == o.torus_vars
    }
}

/// `X_k = D̃[1,k]` for odd `k`, `D̃[2,k]` for even `k`.
pub fn initial_variable(n: usize, k: usize) -> Result<DualCoords> {
    if k % 2 == 1 {
        aalg::quantum_minor(n, 1, k)
    } else {
        aalg::quantum_minor(n, 2, k)
    }
}

/// The initial seed; its realization is certified against `Λ`.
pub fn initial_seed(n: usize) -> Result<QuantumSeed> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be at least 1".to_string()));
    }
    let exchange = ExchangeData::initial(n);
    exchange.compatibility()?;
    let m = 2 * n;
    let realization = (1..=m).map(|k| initial_variable(n, k)).collect::<Result<Vec<_>>>()?;
    let torus_vars = (0..m)
        .map(|i| {
            let mut v = vec![0; m];
            v[i] = 1;
            TorusElement::monomial(v)
        })
        .collect();
    let seed = QuantumSeed { exchange, torus_vars, realization, history: Vec::new() };
    check_commutation(&seed)?;
    Ok(seed)
}

/// Realized q-commutation exponents of all pairs, `None` where not q-commuting.
pub fn realized_exponents(seed: &QuantumSeed) -> Result<Vec<Vec<Option<i64>>>> {
    let m = seed.realization.len();
    let mut out = vec![vec![Some(0); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let e = aalg::qcommute_exponent(&seed.realization[i], &seed.realization[j])?;
            out[i][j] = e;
            out[j][i] = e.map(|x| -x);
        }
    }
    Ok(out)
}

/// `X_k X_l = q^{Λ_kl} X_l X_k` in the realization.
pub fn check_commutation(seed: &QuantumSeed) -> Result<()> {
    let ex = realized_exponents(seed)?;
    let m = ex.len();
    for i in 0..m {
        for j in 0..m {
            if ex[i][j] != Some(seed.exchange.lambda[i][j]) {
                return Err(Error::SeedIncompatible(format!(
                    "X_{} X_{} commutation exponent {:?}, Λ gives {}",
                    i + 1,
                    j + 1,
                    ex[i][j],
                    seed.exchange.lambda[i][j]
                )));
            }
        }
    }
    Ok(())
}

/// `M(c) = q^{-1/2 sum_{i<j} c_i c_j Λ_ij} X_1^{c_1} ... X_m^{c_m}` for `c >= 0`, in `A_n`.
fn realized_monomial(seed: &QuantumSeed, c: &[i64]) -> Result<DualCoords> {
    let n = seed.exchange.n;
    let mut out = DualCoords::one(n);
    let mut tw = 0;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            tw += c[i] * c[j] * seed.exchange.lambda[i][j];
        }
        if c[i] > 0 {
            out = aalg::dual_product(&out, &aalg::dual_pow(&seed.realization[i], c[i] as u32)?)?;
        }
    }
    Ok(out.scale(&RatFunc::half_q_pow(-tw)))
}

/// The same monomial in the initial torus.
fn torus_monomial(seed: &QuantumSeed, c: &[i64], frame: &ExchangeData) -> TorusElement {
    let m = c.len();
    let mut out = TorusElement::monomial(vec![0; m]);
    let mut tw = 0;
    for i in 0..m {
        for j in i + 1..m {
            tw += c[i] * c[j] * seed.exchange.lambda[i][j];
        }
        for _ in 0..c[i] {
            out = out.mul(&seed.torus_vars[i], frame);
        }
    }
    out.scale(&RatFunc::half_q_pow(-tw))
}

/// Mutation at `k` (1-based): BZ matrix mutation and the exchange relation
/// `X'_k X_k = q^{Λ(b+,e_k)/2} M(b+) + q^{Λ(b-,e_k)/2} M(b-)`.
pub fn mutate(seed: &QuantumSeed, k: usize) -> Result<QuantumSeed> {
    let exchange = seed.exchange.mutate(k)?;
    let m = seed.exchange.rows();
    let frame = ExchangeData::initial(seed.exchange.n);
    let (bp, bm) = seed.exchange.exchange_monomials(k);
    let mut ek = vec![0; m];
    ek[k - 1] = 1;
    let sp = RatFunc::half_q_pow(seed.exchange.form(&bp, &ek));
    let sm = RatFunc::half_q_pow(seed.exchange.form(&bm, &ek));

    let rhs = realized_monomial(seed, &bp)?
        .scale(&sp)
        .add(&realized_monomial(seed, &bm)?.scale(&sm));
    if rhs.weight().is_none() {
        return Err(Error::DivisionFailed(format!("exchange relation at {} is not homogeneous", k)));
    }
    let xk = &seed.realization[k - 1];
    let new = aalg::right_divide(&rhs, xk)?.ok_or_else(|| {
        Error::DivisionFailed(format!("X_{} does not divide the exchange binomial", k))
    })?;
    if new.terms().iter().any(|(_, c)| c.as_laurent().is_none()) {
        return Err(Error::NonLaurent(format!("mutated X_{} has non-Laurent coordinates", k)));
    }

    let trhs = torus_monomial(seed, &bp, &frame)
        .scale(&sp)
        .add(&torus_monomial(seed, &bm, &frame).scale(&sm));
    let tnew = trhs.right_divide(&seed.torus_vars[k - 1], &frame).ok_or_else(|| {
        Error::NonLaurent(format!("mutated X_{} is not a Laurent polynomial in the initial cluster", k))
    })?;

    let mut realization = seed.realization.clone();
    realization[k - 1] = new;
    let mut torus_vars = seed.torus_vars.clone();
    torus_vars[k - 1] = tnew;
    let mut history = seed.history.clone();
    history.push(k);
    Ok(QuantumSeed { exchange, torus_vars, realization, history })
}

pub fn mutate_sequence(seed: &QuantumSeed, seq: &[usize]) -> Result<QuantumSeed> {
    let mut s = seed.clone();
    for &k in seq {
        s = mutate(&s, k)?;
    }
    Ok(s)
}

#[derive(Clone, Debug)]
pub struct LaurentReport {
    /// `(index, torus expression, coefficients in Z[q^{±1/2}])` per cluster variable.
    pub variables: Vec<(usize, TorusElement, bool)>,
    pub monomial: TorusElement,
    pub violations: Vec<String>,
}

/// Expresses the cluster variables of `seed` and the cluster monomial `M(exps)`
/// in the initial torus and checks Laurent-ness.
pub fn verify_laurent(seed: &QuantumSeed, exps: &[i64]) -> LaurentReport {
    let frame = ExchangeData::initial(seed.exchange.n);
    let mut violations = Vec::new();
    let variables: Vec<_> = seed
        .torus_vars
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let ok = t.is_laurent();
            if !ok {
                violations.push(format!("X_{} after {:?}", i + 1, seed.history));
            }
            (i + 1, t.clone(), ok)
        })
        .collect();
    let c: Vec<i64> = exps.iter().map(|&e| e.max(0)).collect();
    let monomial = torus_monomial(seed, &c, &frame);
    if exps.iter().any(|&e| e < 0) {
        violations.push("negative exponents are not cluster monomials".to_string());
    } else if !monomial.is_laurent() {
        violations.push(format!("M({:?}) after {:?}", exps, seed.history));
    }
    LaurentReport { variables, monomial, violations }
}

/// A cluster variable met during the bounded search.
#[derive(Clone, Debug)]
pub struct VariableRecord {
    pub sequence: Vec<usize>,
    pub index: usize,
    pub label: Option<KostantPartition>,
    pub iota_fixed: bool,
}

#[derive(Clone, Debug)]
pub struct Exploration {
    pub records: Vec<VariableRecord>,
    pub minors_reached: Vec<(usize, usize)>,
    pub minors_unreached: Vec<(usize, usize)>,
}

fn record(seq: &[usize], index: usize, x: &DualCoords) -> Result<VariableRecord> {
    let n = x.n;
    let beta = x.weight().ok_or_else(|| Error::SeedIncompatible("inhomogeneous cluster variable".to_string()))?;
    let d = aalg::dual_canonical(n, beta)?;
    Ok(VariableRecord {
        sequence: seq.to_vec(),
        index,
        label: d.find(x),
        iota_fixed: aalg::iota(x)? == *x,
    })
}

/// All cluster variables reached by mutation sequences of length `<= depth`
/// without immediate repetition, each matched against the dual canonical basis.
pub fn explore(n: usize, depth: usize) -> Result<Exploration> {
    let seed = initial_seed(n)?;
    let mut records: Vec<VariableRecord> = Vec::new();
    let mut seen: Vec<DualCoords> = Vec::new();
    for (i, x) in seed.realization.iter().enumerate() {
        records.push(record(&[], i + 1, x)?);
        seen.push(x.clone());
    }
    let mut frontier = vec![seed];
    for _ in 0..depth {
        let mut next = Vec::new();
        for s in &frontier {
            for k in 1..=s.exchange.mutable() {
                if s.history.last() == Some(&k) {
                    continue;
                }
                let t = mutate(s, k)?;
                let x = &t.realization[k - 1];
                if !seen.contains(x) {
                    records.push(record(&t.history, k, x)?);
                    seen.push(x.clone());
                }
                next.push(t);
            }
        }
        frontier = next;
    }
    let mut reached = Vec::new();
    let mut unreached = Vec::new();
    for b in 1..=2 * n {
        for d in (b..=2 * n).step_by(2) {
            let a = KostantPartition::interval(n, b, d);
            if records.iter().any(|r| r.label.as_ref() == Some(&a)) {
                reached.push((b, d));
            } else {
                unreached.push((b, d));
            }
        }
    }
    Ok(Exploration { records, minors_reached: reached, minors_unreached: unreached })
}

impl QuantumSeed {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.exchange.n,
            "mutations": self.history,
            "mutation_convention": MUTATION_CONVENTION,
            "btilde": self.exchange.btilde,
            "lambda": self.exchange.lambda,
            "variables": self.realization.iter().zip(&self.torus_vars).enumerate().map(|(i, (x, t))| json!({
                "k": i + 1,
                "realization": x.to_json(),
                "initial_frame": t.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_patterns() {
        let e = ExchangeData::initial(2);
        assert_eq!(e.btilde[0], vec![0, -2]);
        assert_eq!(e.btilde[2], vec![-1, 2]);
        assert_eq!(lambda_entry(1, 2), -2);
        assert_eq!(lambda_entry(2, 3), 0);
        assert_eq!(lambda_entry(3, 4), -4);
        for n in 1..=4 {
            assert!(ExchangeData::initial(n).compatibility().is_ok());
        }
    }

    #[test]
    fn matrix_mutation_is_involutive_and_split_free() {
        let e = ExchangeData::initial(3);
        for k in 1..=4 {
            let f = e.mutate(k).unwrap();
            assert_eq!(f, e.mutate_with(k, -1).unwrap());
            assert_eq!(f.mutate(k).unwrap(), e);
            assert!(f.is_skew());
            assert!(f.compatibility().is_ok());
        }
    }

    #[test]
    fn torus_division_inverts_product() {
        let f = ExchangeData::initial(2);
        let a = TorusElement::monomial(vec![1, 0, 2, 0]).add(&TorusElement::monomial(vec![0, 1, 0, 0]));
        let b = TorusElement::monomial(vec![0, 0, 1, 1]).add(&TorusElement::monomial(vec![1, 0, 0, 0]));
        let p = a.mul(&b, &f);
        assert_eq!(p.right_divide(&b, &f).unwrap(), a);
    }

    #[test]
    fn seed_n1() {
        let s = initial_seed(1).unwrap();
        assert_eq!(s.exchange.mutable(), 0);
    }
}
