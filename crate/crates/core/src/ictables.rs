//! Label layer: dominant pairs for `GL_n`, weights `λ_a` of `GL_d`, and the
//! tables expanding each `B̃(a)` in the rescaled dual PBW basis.

use serde_json::{json, Value};

use crate::aalg::{self, parts};
use crate::error::{Error, Result};
use crate::pbw::engine;
use crate::rootdata::{KostantPartition, QWeight};

/// Weakly decreasing integer vector, a dominant weight of `GL_d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GLdWeight {
    pub lam: Vec<i64>,
}

impl GLdWeight {
    pub fn new(mut lam: Vec<i64>) -> Self {
        lam.sort_unstable_by(|a, b| b.cmp(a));
        GLdWeight { lam }
    }

    pub fn d(&self) -> usize {
        self.lam.len()
    }
}

/// Dominant pair `(ν, μ)` of `GL_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IcLabel {
    pub nu: Vec<i64>,
    pub mu: Vec<i64>,
}

impl IcLabel {
    pub fn is_dominant(&self) -> bool {
        self.nu.len() == self.mu.len()
            && self.nu.windows(2).all(|w| w[0] >= w[1])
            && (0..self.nu.len().saturating_sub(1))
                .all(|k| self.nu[k] != self.nu[k + 1] || self.mu[k] >= self.mu[k + 1])
    }

    pub fn dim(&self) -> i64 {
        dim(&self.nu)
    }
}

/// `dim Gr^ν = sum_k (n+1-2k) ν_k`.
pub fn dim(nu: &[i64]) -> i64 {
    let n = nu.len() as i64;
    nu.iter().enumerate().map(|(i, &v)| (n - 1 - 2 * i as i64) * v).sum()
}

/// `ω_k = (1^k, 0^{n-k})`.
pub fn omega(n: usize, k: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(i < k)).collect()
}

/// `λ_a` contains `n+1-k` with multiplicity `a_k`.
pub fn lambda_of(a: &KostantPartition) -> GLdWeight {
    let n = a.n() as i64;
    let mut lam = Vec::new();
    for (k, &m) in a.a.iter().enumerate() {
        lam.extend(std::iter::repeat(n - k as i64).take(m as usize));
    }
    GLdWeight::new(lam)
}

/// Inverse of `lambda_of`, if every entry lies in `[1-n, n]`.
pub fn kp_of_lambda(n: usize, lam: &GLdWeight) -> Option<KostantPartition> {
    let mut a = vec![0u32; 2 * n];
    for &v in &lam.lam {
        let k = n as i64 + 1 - v;
        if k < 1 || k > 2 * n as i64 {
            return None;
        }
        a[(k - 1) as usize] += 1;
    }
    Some(KostantPartition::new(a))
}

/// `δ_λ = (d(d-1) - sum_k m_k(m_k-1)) / 2`.
pub fn delta_of(lam: &GLdWeight) -> u64 {
    let d = lam.d() as u64;
    let mut total = d * d.saturating_sub(1);
    let mut i = 0;
    while i < lam.lam.len() {
        let j = lam.lam[i..].iter().take_while(|&&v| v == lam.lam[i]).count() as u64;
        total -= j * (j - 1);
        i += j as usize;
    }
    total / 2
}

/// `(k, ℓ)` with `Φ(D̃[b,d]) = [P_{k,ℓ}]`.
pub fn minor_to_ic(n: usize, b: usize, d: usize) -> Result<(i64, i64)> {
    if b < 1 || b > d || d > 2 * n || (d - b) % 2 != 0 {
        return Err(Error::InvalidInput(format!("invalid minor interval [{}, {}] for n = {}", b, d, n)));
    }
    let (b, d) = (b as i64, d as i64);
    Ok((1 + (d - b) / 2, n as i64 + 1 - (b + d) / 2))
}

/// `(ν, μ)` of `P_{k,ℓ} = P_{ω_k, ℓ ω_k}`.
pub fn ic_label_of(n: usize, k: i64, l: i64) -> IcLabel {
    let w = omega(n, k as usize);
    IcLabel { mu: w.iter().map(|x| l * x).collect(), nu: w }
}

/// Partitions of `d` with at most `n` parts, padded with zeros, decreasing lexicographically.
pub fn partitions(n: usize, d: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, d: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            if d == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=max.min(d)).rev() {
            cur.push(v);
            go(n, d - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, d, &mut Vec::new(), &mut out);
    out
}

/// All `(ν, μ)` in `Dom_{n,d}` with `μ_k` in `[-mu_bound, mu_bound]`.
pub fn dom_enumerate(n: usize, d: i64, mu_bound: i64) -> Vec<IcLabel> {
    let mut out = Vec::new();
    for nu in partitions(n, d) {
        let mut mu = vec![-mu_bound; n];
        loop {
            let l = IcLabel { nu: nu.clone(), mu: mu.clone() };
            if l.is_dominant() {
                out.push(l);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if mu[i] < mu_bound {
                    mu[i] += 1;
                    break;
                }
                mu[i] = -mu_bound;
            }
            if mu.iter().all(|&x| x == -mu_bound) {
                break;
            }
        }
    }
    out
}

/// The interval `(b, d)` with `a = a[b,d]`, if any.
pub fn interval_of(a: &KostantPartition) -> Option<(usize, usize)> {
    let n = a.n();
    let support: Vec<usize> = (1..=2 * n).filter(|&k| a.a[k - 1] > 0).collect();
    let (&b, &d) = (support.first()?, support.last()?);
    if (d - b) % 2 != 0 {
        return None;
    }
    (KostantPartition::interval(n, b, d) == *a).then_some((b, d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcRow {
    pub a: KostantPartition,
    pub lambda: GLdWeight,
    pub delta: u64,
    /// `(a', p_{a,a'})` over the nonzero coefficients, in key order.
    pub coeffs: Vec<(KostantPartition, String)>,
    /// The label is an interval partition `a[b,d]` with `b < d`, read as `D̃[b,d]`.
    pub minor_hypothesis_used: bool,
    pub minor: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct IcTable {
    pub n: usize,
    pub beta: QWeight,
    pub braid_convention: String,
    pub rows: Vec<IcRow>,
}

/// `B̃(a) = sum_{a'} p_{a,a'} Ẽ(a')` for every `a` in `KP_n(beta)`, lexicographic in `a`.
pub fn ic_table(n: usize, beta: QWeight) -> Result<IcTable> {
    let e = engine(n)?;
    let dc = aalg::dual_canonical(n, beta)?;
    let mut rows = Vec::with_capacity(dc.keys.len());
    for (i, a) in dc.keys.iter().enumerate() {
        let lambda = lambda_of(a);
        let coeffs = dc
            .keys
            .iter()
            .zip(&dc.coeffs[i])
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.clone(), c.to_string()))
            .collect();
        let minor = interval_of(a);
        rows.push(IcRow {
            a: a.clone(),
            delta: delta_of(&lambda),
            lambda,
            coeffs,
            minor_hypothesis_used: matches!(minor, Some((b, d)) if b < d),
            minor,
        });
    }
    debug_assert!(rows.iter().all(|r| r.lambda.d() as i64 == parts(beta)));
    Ok(IcTable { n, beta, braid_convention: e.convention().tag().to_string(), rows })
}

impl IcRow {
    pub fn to_json(&self, n: usize, braid: &str) -> Value {
        let mut v = json!({
            "a": self.a.a,
            "lambda": self.lambda.lam,
            "delta": self.delta,
            "coeffs": self.coeffs.iter().map(|(ap, p)| json!({"ap": ap.a, "p": p})).collect::<Vec<_>>(),
            "minor_hypothesis_used": self.minor_hypothesis_used,
            "braid_convention": braid,
        });
        if let Some((b, d)) = self.minor {
            let (k, l) = minor_to_ic(n, b, d).expect("interval is valid");
            v["minor"] = json!([b, d]);
            v["ic_minor"] = json!([k, l]);
        }
        v
    }
}

impl IcTable {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "beta": [self.beta.d0, self.beta.d1],
            "braid_convention": self.braid_convention,
            "rows": self.rows.iter().map(|r| r.to_json(self.n, &self.braid_convention)).collect::<Vec<_>>(),
        })
    }
}
