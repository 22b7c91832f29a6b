//! Unitriangular solver for bar-invariant bases.
//!
//! Given `T` with `T[a][a] = 1`, finds the unique `X` with `X = bar(X) T`,
//! `X[a][a] = 1` and `X[a][c]` in `q^{-1} Z[q^{-1}]` for `c != a`.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qring::{HalfLaurent, RatFunc};

/// Linear extension of the support of `t`, lowest first: if `t[a][c] != 0` with
/// `a != c` then `c` precedes `a`. Ties go to the smallest index.
pub fn triangular_order(t: &[Vec<RatFunc>]) -> Result<Vec<usize>> {
    let n = t.len();
    for (a, row) in t.iter().enumerate() {
        if !row[a].is_one() {
            return Err(Error::NotTriangular(format!("diagonal entry {} is {}", a, row[a])));
        }
    }
    let mut pending: Vec<usize> = (0..n)
        .map(|a| (0..n).filter(|&c| c != a && !t[a][c].is_zero()).count())
        .collect();
    let mut ready: BTreeSet<usize> = (0..n).filter(|&a| pending[a] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&c) = ready.iter().next() {
        ready.remove(&c);
        order.push(c);
        for a in 0..n {
            if a != c && !t[a][c].is_zero() {
                pending[a] -= 1;
                if pending[a] == 0 {
                    ready.insert(a);
                }
            }
        }
    }
    if order.len() < n {
        return Err(Error::NotTriangular(
            "support of the bar matrix contains a cycle".to_string(),
        ));
    }
    Ok(order)
}

pub struct Solution {
    /// Solver order, lowest first.
    pub order: Vec<usize>,
    /// `coeffs[a][c]`.
    pub coeffs: Vec<Vec<HalfLaurent>>,
}

/// Splits an antisymmetric Laurent polynomial into its negative part.
fn negative_part(r: &HalfLaurent) -> Result<HalfLaurent> {
    if r.bar() != -r {
        return Err(Error::NoSolution(format!("right side {} is not antisymmetric", r)));
    }
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for (e, c) in r.terms() {
        if e % 2 != 0 {
            return Err(Error::NoSolution(format!("half-integer exponent in {}", r)));
        }
        if *e < 0 {
            terms.push((*e, c.clone()));
        }
    }
    Ok(HalfLaurent::from_terms(terms))
}

pub fn solve(t: &[Vec<RatFunc>]) -> Result<Solution> {
    let n = t.len();
    let order = triangular_order(t)?;
    let mut pos = vec![0; n];
    for (p, &a) in order.iter().enumerate() {
        pos[a] = p;
    }
    let mut coeffs = vec![vec![HalfLaurent::zero(); n]; n];
    for pa in 0..n {
        let a = order[pa];
        coeffs[a][a] = HalfLaurent::one();
        for pc in (0..pa).rev() {
            let c = order[pc];
            let mut r = RatFunc::zero();
            for &b in &order[pc + 1..=pa] {
                if !coeffs[a][b].is_zero() && !t[b][c].is_zero() {
                    r = &r + &(&RatFunc::from(coeffs[a][b].bar()) * &t[b][c]);
                }
            }
            let r = r
                .as_laurent()
                .cloned()
                .ok_or_else(|| Error::NoSolution(format!("right side {} is not Laurent", r)))?;
            coeffs[a][c] = negative_part(&r)?;
        }
    }
    Ok(Solution { order, coeffs })
}

/// Checks `X = bar(X) T`, `X[a][a] = 1` and the off-diagonal ring condition.
pub fn certify(t: &[Vec<RatFunc>], x: &[Vec<HalfLaurent>]) -> bool {
    let n = t.len();
    for a in 0..n {
        for c in 0..n {
            let xc = &x[a][c];
            if a == c {
                if !xc.is_one() {
                    return false;
                }
            } else if !xc.is_zero() && !(xc.is_integral_q() && xc.max_exp().unwrap() < 0) {
                return false;
            }
            let mut s = RatFunc::zero();
            for b in 0..n {
                if !x[a][b].is_zero() && !t[b][c].is_zero() {
                    s = &s + &(&RatFunc::from(x[a][b].bar()) * &t[b][c]);
                }
            }
            if s != RatFunc::from(xc.clone()) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> RatFunc {
        RatFunc::q_pow(k)
    }

    #[test]
    fn two_by_two() {
        // T = [[1, 0], [q - q^{-1}, 1]] gives X[1][0] = -q^{-1}.
        let t = vec![
            vec![RatFunc::one(), RatFunc::zero()],
            vec![&q(1) - &q(-1), RatFunc::one()],
        ];
        let s = solve(&t).unwrap();
        assert_eq!(s.order, vec![0, 1]);
        assert_eq!(s.coeffs[1][0], -&HalfLaurent::q_pow(-1));
        assert!(certify(&t, &s.coeffs));
    }

    #[test]
    fn cycle_is_rejected() {
        let t = vec![vec![RatFunc::one(), q(1)], vec![q(1), RatFunc::one()]];
        assert!(matches!(triangular_order(&t), Err(Error::NotTriangular(_))));
    }

    #[test]
    fn non_antisymmetric_side_fails() {
        let t = vec![vec![RatFunc::one(), RatFunc::zero()], vec![q(1), RatFunc::one()]];
        assert!(matches!(solve(&t), Err(Error::NoSolution(_))));
    }
}
