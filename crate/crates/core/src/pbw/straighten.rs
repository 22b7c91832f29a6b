//! Multiplication in the divided PBW basis of `U_n^+` by straightening.
//!
//! The only input is the expansion of `E(beta_m) E(beta_1)` for `2 <= m <= 2n`.
//! Since `T_{i_1} ... T_{i_{k-1}}` maps the root vectors of the shifted word onto
//! `E(beta_{j+k-1})`, the relation for `E(beta_l) E(beta_k)` is the same expansion
//! with every index shifted by `k - 1`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::qring::{qbinomial, qfactorial, qint, HalfLaurent, RatFunc};

/// Coordinates in the divided PBW basis, keyed by Kostant vectors.
pub type Coords = BTreeMap<Vec<u32>, RatFunc>;

fn add_into(acc: &mut Coords, k: Vec<u32>, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, c);
        }
    }
}

pub struct Straightener {
    n: usize,
    /// `ls[m]`: pairs `(j, c)` with `E_m E_1 = sum_j c E(e_j + e_{m+1-j})`.
    ls: Vec<Vec<(usize, RatFunc)>>,
    mul_memo: RwLock<HashMap<(Vec<u32>, Vec<u32>), Coords>>,
    pair_memo: RwLock<HashMap<(usize, u32, usize, u32), Coords>>,
}

impl Straightener {
    pub fn new(n: usize, ls: Vec<Vec<(usize, RatFunc)>>) -> Self {
        Straightener {
            n,
            ls,
            mul_memo: RwLock::new(HashMap::new()),
            pair_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients of `E_m E_1`.
    pub fn relation(&self, m: usize) -> &[(usize, RatFunc)] {
        &self.ls[m]
    }

    fn unit(&self, k: usize, p: u32) -> Vec<u32> {
        let mut a = vec![0; 2 * self.n];
        a[k - 1] = p;
        a
    }

    /// `E(a) E(b)` in the divided basis.
    pub fn mul_basis(&self, a: &[u32], b: &[u32]) -> Coords {
        let key = (a.to_vec(), b.to_vec());
        if let Some(c) = self.mul_memo.read().unwrap().get(&key) {
            return c.clone();
        }
        let out = self.mul_basis_raw(a, b);
        self.mul_memo.write().unwrap().insert(key, out.clone());
        out
    }

    fn mul_basis_raw(&self, a: &[u32], b: &[u32]) -> Coords {
        let mut out = Coords::new();
        let l = a.iter().rposition(|&c| c > 0);
        let k = b.iter().position(|&c| c > 0);
        let (l, k) = match (l, k) {
            (None, _) => {
                out.insert(b.to_vec(), RatFunc::one());
                return out;
            }
            (_, None) => {
                out.insert(a.to_vec(), RatFunc::one());
                return out;
            }
            (Some(l), Some(k)) => (l + 1, k + 1),
        };
        let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        if l < k {
            out.insert(sum, RatFunc::one());
            return out;
        }
        if l == k {
            let (p, r) = (a[l - 1], b[k - 1]);
            out.insert(sum, RatFunc::from(qbinomial(p + r, p)));
            return out;
        }
        let (p, r) = (a[l - 1], b[k - 1]);
        let mut a1 = a.to_vec();
        a1[l - 1] = 0;
        let mut b1 = b.to_vec();
        b1[k - 1] = 0;
        let mid = self.pair(l, p, k, r);
        for (c, x) in &mid {
            let left = self.mul_basis(&a1, c);
            for (d, y) in &left {
                let xy = x * y;
                for (e, z) in self.mul_basis(d, &b1) {
                    add_into(&mut out, e, &xy * &z);
                }
            }
        }
        out
    }

    /// `E_l^{(p)} E_k^{(r)}` for `l > k`.
    fn pair(&self, l: usize, p: u32, k: usize, r: u32) -> Coords {
        let key = (l, p, k, r);
        if let Some(c) = self.pair_memo.read().unwrap().get(&key) {
            return c.clone();
        }
        let mut out = Coords::new();
        if p == 1 && r == 1 {
            let m = l - k + 1;
            for (j, c) in &self.ls[m] {
                let mut v = vec![0u32; 2 * self.n];
                v[k - 1 + j - 1] += 1;
                v[l + 1 - j - 1] += 1;
                add_into(&mut out, v, c.clone());
            }
        } else if p > 1 {
            // E_l^{(p)} = E_l^{(p-1)} E_l / [p]
            let inv = RatFunc::new(HalfLaurent::one(), qint(p));
            let head = self.unit(l, p - 1);
            for (c, x) in self.pair(l, 1, k, r) {
                for (d, y) in self.mul_basis(&head, &c) {
                    add_into(&mut out, d, &(&x * &y) * &inv);
                }
            }
        } else {
            // E_k^{(r)} = E_k E_k^{(r-1)} / [r]
            let inv = RatFunc::new(HalfLaurent::one(), qint(r));
            let tail = self.unit(k, r - 1);
            for (c, x) in self.pair(l, 1, k, 1) {
                for (d, y) in self.mul_basis(&c, &tail) {
                    add_into(&mut out, d, &(&x * &y) * &inv);
                }
            }
        }
        self.pair_memo.write().unwrap().insert(key, out.clone());
        out
    }

    /// Product of two coordinate vectors.
    pub fn mul(&self, x: &Coords, y: &Coords) -> Coords {
        let mut out = Coords::new();
        for (a, c) in x {
            for (b, d) in y {
                let cd = c * d;
                for (e, z) in self.mul_basis(a, b) {
                    add_into(&mut out, e, &cd * &z);
                }
            }
        }
        out
    }

    /// `E_{2n}^{a_{2n}} ... E_1^{a_1}` (undivided powers, decreasing order).
    pub fn reversed_monomial(&self, a: &[u32]) -> Coords {
        let mut acc = Coords::new();
        acc.insert(vec![0; 2 * self.n], RatFunc::one());
        for k in (1..=2 * self.n).rev() {
            let p = a[k - 1];
            if p == 0 {
                continue;
            }
            let mut f = Coords::new();
            f.insert(self.unit(k, p), RatFunc::from(qfactorial(p)));
            acc = self.mul(&acc, &f);
        }
        acc
    }
}
