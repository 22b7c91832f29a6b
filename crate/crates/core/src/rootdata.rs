//! Root and weight combinatorics of type A_1^(1) along the word `(s_0 s_1)^n`.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// Element `d0*alpha_0 + d1*alpha_1` of the root lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct QWeight {
    pub d0: i64,
    pub d1: i64,
}

impl QWeight {
    pub const ZERO: QWeight = QWeight { d0: 0, d1: 0 };

    pub fn new(d0: i64, d1: i64) -> Self {
        QWeight { d0, d1 }
    }

    pub fn alpha(i: u8) -> Self {
        if i == 0 {
            QWeight::new(1, 0)
        } else {
            QWeight::new(0, 1)
        }
    }

    pub fn coeff(&self, i: u8) -> i64 {
        if i == 0 {
            self.d0
        } else {
            self.d1
        }
    }

    /// The symmetric form with Cartan matrix [[2,-2],[-2,2]].
    pub fn pair(&self, o: &QWeight) -> i64 {
        2 * (self.d0 - self.d1) * (o.d0 - o.d1)
    }

    /// Total degree `d0 + d1`.
    pub fn degree(&self) -> i64 {
        self.d0 + self.d1
    }

    pub fn is_nonneg(&self) -> bool {
        self.d0 >= 0 && self.d1 >= 0
    }

    pub fn scale(&self, k: i64) -> Self {
        QWeight::new(self.d0 * k, self.d1 * k)
    }
}

impl Add for QWeight {
    type Output = QWeight;
    fn add(self, o: QWeight) -> QWeight {
        QWeight::new(self.d0 + o.d0, self.d1 + o.d1)
    }
}

impl Sub for QWeight {
    type Output = QWeight;
    fn sub(self, o: QWeight) -> QWeight {
        QWeight::new(self.d0 - o.d0, self.d1 - o.d1)
    }
}

impl fmt::Display for QWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}a0+{}a1", self.d0, self.d1)
    }
}

/// Weight `p0*w0 + p1*w1 + qpart`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct PWeight {
    pub p0: i64,
    pub p1: i64,
    pub qpart: QWeight,
}

impl PWeight {
    pub fn new(p0: i64, p1: i64, qpart: QWeight) -> Self {
        PWeight { p0, p1, qpart }
    }

    /// Fundamental weight `varpi_i`.
    pub fn fundamental(i: u8) -> Self {
        if i == 0 {
            PWeight::new(1, 0, QWeight::ZERO)
        } else {
            PWeight::new(0, 1, QWeight::ZERO)
        }
    }

    pub fn from_q(q: QWeight) -> Self {
        PWeight::new(0, 0, q)
    }

    /// Pairing with the root lattice, `(varpi_i, alpha_j) = delta_ij`.
    pub fn pair_q(&self, b: &QWeight) -> i64 {
        self.p0 * b.d0 + self.p1 * b.d1 + self.qpart.pair(b)
    }

    /// `<x, alpha_i^vee>`.
    pub fn coroot(&self, i: u8) -> i64 {
        self.pair_q(&QWeight::alpha(i))
    }

    pub fn reflect(&self, i: u8) -> Self {
        let c = self.coroot(i);
        PWeight::new(self.p0, self.p1, self.qpart - QWeight::alpha(i).scale(c))
    }

    /// The root-lattice part if the fundamental coefficients vanish.
    pub fn as_q(&self) -> Option<QWeight> {
        if self.p0 == 0 && self.p1 == 0 {
            Some(self.qpart)
        } else {
            None
        }
    }
}

impl Add for PWeight {
    type Output = PWeight;
    fn add(self, o: PWeight) -> PWeight {
        PWeight::new(self.p0 + o.p0, self.p1 + o.p1, self.qpart + o.qpart)
    }
}

impl Sub for PWeight {
    type Output = PWeight;
    fn sub(self, o: PWeight) -> PWeight {
        PWeight::new(self.p0 - o.p0, self.p1 - o.p1, self.qpart - o.qpart)
    }
}

/// Letter `i_j` of the word `(s_0 s_1)^n`, 1-based.
pub fn word_letter(j: usize) -> u8 {
    if j % 2 == 1 {
        0
    } else {
        1
    }
}

/// `beta_k = k*alpha_0 + (k-1)*alpha_1`.
pub fn beta(k: usize) -> QWeight {
    assert!(k >= 1, "root index starts at 1");
    QWeight::new(k as i64, k as i64 - 1)
}

/// Applies `s_{i_1} ... s_{i_len}` to `x`.
pub fn word_action(prefix_len: usize, x: PWeight) -> PWeight {
    (1..=prefix_len).rev().fold(x, |acc, j| acc.reflect(word_letter(j)))
}

/// Weight of the minor `D[b,d]`, i.e. `w_{<b} varpi_{i_b} - w_{<=d} varpi_{i_d}`.
pub fn minor_weight(b: usize, d: usize) -> QWeight {
    assert!(b >= 1 && b <= d && (d - b) % 2 == 0, "invalid minor interval");
    let i = word_letter(b);
    let w = PWeight::fundamental(i);
    let diff = word_action(b - 1, w) - word_action(d, w);
    diff.as_q().expect("difference of weights in one orbit lies in Q")
}

/// `(a_1, ..., a_{2n})` with `sum a_k beta_k = beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KostantPartition {
    pub a: Vec<u32>,
}

impl KostantPartition {
    pub fn new(a: Vec<u32>) -> Self {
        KostantPartition { a }
    }

    pub fn zero(n: usize) -> Self {
        KostantPartition { a: vec![0; 2 * n] }
    }

    /// Unit vector at root `k` (1-based).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut a = vec![0; 2 * n];
        a[k - 1] = 1;
        KostantPartition { a }
    }

    pub fn n(&self) -> usize {
        self.a.len() / 2
    }

    pub fn weight(&self) -> QWeight {
        self.a
            .iter()
            .enumerate()
            .fold(QWeight::ZERO, |acc, (i, &c)| acc + beta(i + 1).scale(c as i64))
    }

    /// `sum a_k`, which equals `d0 - d1` of the weight.
    pub fn total(&self) -> u32 {
        self.a.iter().sum()
    }

    /// `sum_{k<l} a_k a_l`.
    pub fn cross_sum(&self) -> i64 {
        let mut s = 0i64;
        let mut seen = 0i64;
        for &c in &self.a {
            s += seen * c as i64;
            seen += c as i64;
        }
        s
    }

    /// `sum_k a_k (a_k - 1) / 2`.
    pub fn self_sum(&self) -> i64 {
        self.a.iter().map(|&c| (c as i64) * (c as i64 - 1) / 2).sum()
    }

    /// Interval partition with ones at `j in [b,d]`, `j = b mod 2`.
    pub fn interval(n: usize, b: usize, d: usize) -> Self {
        let mut a = vec![0; 2 * n];
        let mut j = b;
        while j <= d {
            a[j - 1] = 1;
            j += 2;
        }
        KostantPartition { a }
    }

    pub fn add(&self, o: &KostantPartition) -> KostantPartition {
        KostantPartition {
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }
}

impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All Kostant partitions of `beta` in lexicographic order.
pub fn enumerate_kp(n: usize, beta_w: QWeight) -> Vec<KostantPartition> {
    let mut out = Vec::new();
    if !beta_w.is_nonneg() || n == 0 {
        return out;
    }
    let mut a = vec![0u32; 2 * n];
    fill(1, beta_w, &mut a, &mut out);
    out.sort();
    out
}

fn fill(k: usize, rest: QWeight, a: &mut Vec<u32>, out: &mut Vec<KostantPartition>) {
    if k > a.len() {
        if rest == QWeight::ZERO {
            out.push(KostantPartition::new(a.clone()));
        }
        return;
    }
    let b = beta(k);
    let bound = rest.d0 / k as i64;
    for c in 0..=bound.max(0) {
        let r = rest - b.scale(c);
        if !r.is_nonneg() {
            break;
        }
        a[k - 1] = c as u32;
        fill(k + 1, r, a, out);
    }
    a[k - 1] = 0;
}
