//! The quantum unipotent subgroup `A_n` in rescaled dual PBW coordinates.
//!
//! `Ẽ(a) = q^{N^2/2} E*(a)` where `N = sum a_k` and `E*(a)` is dual to `E(a)`.
//! Products are pulled back to `U_n^+`:
//! `Ẽ(a) Ẽ(b) = q^{-N_a N_b} sum_c s_c g(c) / (g(a) g(b)) Ẽ(c)` with
//! `E(a) E(b) = sum_c s_c E(c)` and `g` the Gram closed form.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::pbw::{engine, gram_closed, solver, BarRoute, Engine};
use crate::qring::{laurent_of, HalfLaurent, RatFunc};
use crate::rootdata::{minor_weight, word_action, KostantPartition, PWeight, QWeight};

pub type Component = BTreeMap<KostantPartition, RatFunc>;

fn add_term(comp: &mut Component, a: KostantPartition, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match comp.get_mut(&a) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                comp.remove(&a);
            }
        }
        None => {
            comp.insert(a, c);
        }
    }
}

/// `N = d0 - d1`, the number of root vectors in any Kostant partition of `beta`.
pub fn parts(beta: QWeight) -> i64 {
    beta.d0 - beta.d1
}

/// Element of `A_n` in the basis `{Ẽ(a)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCoords {
    pub n: usize,
    pub comps: BTreeMap<QWeight, Component>,
}

impl DualCoords {
    pub fn zero(n: usize) -> Self {
        DualCoords { n, comps: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(&KostantPartition::zero(n))
    }

    /// `Ẽ(a)`.
    pub fn basis(a: &KostantPartition) -> Self {
        let mut comp = Component::new();
        comp.insert(a.clone(), RatFunc::one());
        let mut comps = BTreeMap::new();
        comps.insert(a.weight(), comp);
        DualCoords { n: a.n(), comps }
    }

    pub fn from_terms<I: IntoIterator<Item = (KostantPartition, RatFunc)>>(n: usize, it: I) -> Self {
        let mut x = DualCoords::zero(n);
        for (a, c) in it {
            let comp = x.comps.entry(a.weight()).or_default();
            add_term(comp, a, c);
        }
        x.comps.retain(|_, c| !c.is_empty());
        x
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn weights(&self) -> Vec<QWeight> {
        self.comps.keys().copied().collect()
    }

    /// The weight if the element is homogeneous and nonzero.
    pub fn weight(&self) -> Option<QWeight> {
        if self.comps.len() == 1 {
            self.comps.keys().next().copied()
        } else {
            None
        }
    }

    pub fn component(&self, beta: QWeight) -> DualCoords {
        let mut comps = BTreeMap::new();
        if let Some(c) = self.comps.get(&beta) {
            comps.insert(beta, c.clone());
        }
        DualCoords { n: self.n, comps }
    }

    pub fn coeff(&self, a: &KostantPartition) -> RatFunc {
        self.comps
            .get(&a.weight())
            .and_then(|c| c.get(a))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> Vec<(KostantPartition, RatFunc)> {
        self.comps
            .values()
            .flat_map(|c| c.iter().map(|(a, v)| (a.clone(), v.clone())))
            .collect()
    }

    pub fn add(&self, o: &DualCoords) -> DualCoords {
        DualCoords::from_terms(self.n, self.terms().into_iter().chain(o.terms()))
    }

    pub fn sub(&self, o: &DualCoords) -> DualCoords {
        self.add(&o.scale(&RatFunc::constant(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> DualCoords {
        DualCoords::from_terms(self.n, self.terms().into_iter().map(|(a, v)| (a, &v * c)))
    }

    /// Scales each component of weight `beta` by `q^{f(beta)/2}`.
    pub fn scale_by_weight<F: Fn(QWeight) -> i64>(&self, f: F) -> DualCoords {
        DualCoords::from_terms(
            self.n,
            self.terms()
                .into_iter()
                .map(|(a, v)| {
                    let s = RatFunc::half_q_pow(f(a.weight()));
                    (a, &v * &s)
                }),
        )
    }

    /// Coordinates in the unscaled dual PBW basis `{E*(a)}`.
    pub fn to_dual_pbw(&self) -> BTreeMap<KostantPartition, RatFunc> {
        self.terms()
            .into_iter()
            .map(|(a, v)| {
                let nn = a.total() as i64;
                (a, &v * &RatFunc::half_q_pow(nn * nn))
            })
            .collect()
    }

    pub fn from_dual_pbw(n: usize, m: &BTreeMap<KostantPartition, RatFunc>) -> DualCoords {
        DualCoords::from_terms(
            n,
            m.iter().map(|(a, v)| {
                let nn = a.total() as i64;
                (a.clone(), v * &RatFunc::half_q_pow(-nn * nn))
            }),
        )
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .comps
            .iter()
            .map(|(w, c)| {
                json!({
                    "weight": [w.d0, w.d1],
                    "coords": c.iter().map(|(a, v)| json!({"a": a.a, "c": v.to_string()})).collect::<Vec<_>>(),
                })
            })
            .collect();
        if comps.len() == 1 {
            comps.into_iter().next().unwrap()
        } else {
            Value::Array(comps)
        }
    }
}

/// Default route for products landing in weight `beta`.
pub fn route_for(beta: QWeight) -> BarRoute {
    Engine::route_for(beta)
}

/// `Ẽ(a) Ẽ(b)` in `{Ẽ(c)}`.
pub fn tilde_mul_basis(
    e: &Engine,
    a: &KostantPartition,
    b: &KostantPartition,
    route: BarRoute,
) -> Result<Component> {
    let s = match route {
        BarRoute::Free => e.mul_basis_free(a, b)?,
        BarRoute::Straightening => e.mul_basis(a, b),
    };
    let scal = RatFunc::q_pow(-(a.total() as i64) * b.total() as i64)
        .div(&(&gram_closed(&a.a) * &gram_closed(&b.a)));
    let mut out = Component::new();
    for (c, v) in s {
        let g = gram_closed(&c);
        add_term(&mut out, KostantPartition::new(c), &(&v * &g) * &scal);
    }
    Ok(out)
}

fn check_same_n(x: &DualCoords, y: &DualCoords) -> Result<()> {
    if x.n != y.n {
        return Err(Error::InvalidInput(format!("mixing n = {} and n = {}", x.n, y.n)));
    }
    Ok(())
}

/// Product in `A_n`; routes by degree.
pub fn dual_product(x: &DualCoords, y: &DualCoords) -> Result<DualCoords> {
    dual_product_with(x, y, None)
}

/// Product in `A_n` through the given route for every pair of basis elements.
pub fn dual_product_via(x: &DualCoords, y: &DualCoords, route: BarRoute) -> Result<DualCoords> {
    dual_product_with(x, y, Some(route))
}

fn dual_product_with(x: &DualCoords, y: &DualCoords, route: Option<BarRoute>) -> Result<DualCoords> {
    check_same_n(x, y)?;
    let e = engine(x.n)?;
    let mut terms = Vec::new();
    for (a, u) in x.terms() {
        for (b, v) in y.terms() {
            let r = route.unwrap_or_else(|| route_for(a.weight() + b.weight()));
            let uv = &u * &v;
            for (c, w) in tilde_mul_basis(&e, &a, &b, r)? {
                terms.push((c, &w * &uv));
            }
        }
    }
    Ok(DualCoords::from_terms(x.n, terms))
}

pub fn dual_pow(x: &DualCoords, k: u32) -> Result<DualCoords> {
    let mut out = DualCoords::one(x.n);
    for _ in 0..k {
        out = dual_product(&out, x)?;
    }
    Ok(out)
}

/// Matrix of `iota` on `{Ẽ(a)}` at `beta`: `iota(Ẽ(a)) = sum_c N[a][c] Ẽ(c)`.
fn iota_matrix(e: &Engine, beta: QWeight, route: BarRoute) -> Result<(Vec<KostantPartition>, Matrix)> {
    let m = e.bar_matrix_via(beta, route)?;
    Ok((m.keys.clone(), m.dual_entries()))
}

/// `iota(x_beta) = q^{(beta,beta)/2} b*(x_beta)` with the default route.
pub fn iota(x: &DualCoords) -> Result<DualCoords> {
    iota_with(x, None)
}

pub fn iota_via(x: &DualCoords, route: BarRoute) -> Result<DualCoords> {
    iota_with(x, Some(route))
}

fn iota_with(x: &DualCoords, route: Option<BarRoute>) -> Result<DualCoords> {
    let e = engine(x.n)?;
    let mut terms = Vec::new();
    for (beta, comp) in &x.comps {
        let r = route.unwrap_or_else(|| route_for(*beta));
        let (keys, nmat) = iota_matrix(&e, *beta, r)?;
        for (a, v) in comp {
            let i = keys.binary_search(a).expect("key of this weight");
            let vb = v.bar();
            for (j, c) in keys.iter().enumerate() {
                if !nmat[i][j].is_zero() {
                    terms.push((c.clone(), &vb * &nmat[i][j]));
                }
            }
        }
    }
    Ok(DualCoords::from_terms(x.n, terms))
}

/// The dual bar involution, `b*(x_beta) = q^{-(beta,beta)/2} iota(x_beta)`.
pub fn bar_star(x: &DualCoords) -> Result<DualCoords> {
    Ok(iota(x)?.scale_by_weight(|b| -2 * parts(b) * parts(b)))
}

pub fn bar_star_via(x: &DualCoords, route: BarRoute) -> Result<DualCoords> {
    Ok(iota_via(x, route)?.scale_by_weight(|b| -2 * parts(b) * parts(b)))
}

/// The integer `m` with `x y = q^m y x`, if any.
pub fn qcommute_exponent(x: &DualCoords, y: &DualCoords) -> Result<Option<i64>> {
    let xy = dual_product(x, y)?;
    let yx = dual_product(y, x)?;
    Ok(ratio_exponent(&xy, &yx))
}

/// The integer `m` with `u = q^m v`, if any. `Some(0)` when both vanish.
pub fn ratio_exponent(u: &DualCoords, v: &DualCoords) -> Option<i64> {
    if u.is_zero() && v.is_zero() {
        return Some(0);
    }
    let tu = u.terms();
    if tu.len() != v.terms().len() {
        return None;
    }
    let mut m: Option<i64> = None;
    for (a, c) in tu {
        let d = v.coeff(&a);
        if d.is_zero() {
            return None;
        }
        let r = c.div(&d);
        let (coef, e2) = r.as_laurent()?.as_monomial()?;
        if coef != 1.into() || e2 % 2 != 0 {
            return None;
        }
        match m {
            None => m = Some(e2 / 2),
            Some(k) if k == e2 / 2 => {}
            _ => return None,
        }
    }
    m
}

/// `x ⊙ y = q^{-m/2} x y` for `x y = q^m y x`.
pub fn odot(x: &DualCoords, y: &DualCoords) -> Result<DualCoords> {
    let m = qcommute_exponent(x, y)?
        .ok_or_else(|| Error::NotQCommuting("factors do not q-commute".to_string()))?;
    Ok(dual_product(x, y)?.scale(&RatFunc::half_q_pow(-m)))
}

/// Dual canonical basis at `beta`: `coeffs[a][c]` is the `Ẽ(c)`-coordinate of `B̃(a)`,
/// equal to the `E*(c)`-coordinate of `B*(a)`.
#[derive(Clone, Debug)]
pub struct DualCanonical {
    pub n: usize,
    pub beta: QWeight,
    pub keys: Vec<KostantPartition>,
    pub order: Vec<KostantPartition>,
    pub coeffs: Vec<Vec<HalfLaurent>>,
}

impl DualCanonical {
    pub fn index(&self, a: &KostantPartition) -> Option<usize> {
        self.keys.binary_search(a).ok()
    }

    /// `B̃(keys[i])`.
    pub fn element(&self, i: usize) -> DualCoords {
        DualCoords::from_terms(
            self.n,
            self.keys
                .iter()
                .zip(&self.coeffs[i])
                .map(|(k, c)| (k.clone(), RatFunc::from(c.clone()))),
        )
    }

    pub fn elements(&self) -> BTreeMap<KostantPartition, DualCoords> {
        (0..self.keys.len()).map(|i| (self.keys[i].clone(), self.element(i))).collect()
    }

    /// The label `a` with `x = B̃(a)`, if `x` is a basis element.
    pub fn find(&self, x: &DualCoords) -> Option<KostantPartition> {
        (0..self.keys.len()).find(|&i| self.element(i) == *x).map(|i| self.keys[i].clone())
    }
}

fn dual_store() -> &'static Mutex<HashMap<(usize, QWeight), Arc<DualCanonical>>> {
    static S: OnceLock<Mutex<HashMap<(usize, QWeight), Arc<DualCanonical>>>> = OnceLock::new();
    S.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `B̃(a)` for all `a` in `KP_n(beta)`: transpose-inverse of the canonical-basis
/// matrix, cross-checked against a direct solve with the dual bar matrix.
pub fn dual_canonical(n: usize, beta: QWeight) -> Result<Arc<DualCanonical>> {
    if let Some(d) = dual_store().lock().unwrap().get(&(n, beta)) {
        return Ok(d.clone());
    }
    let e = engine(n)?;
    let c = e.canonical(beta)?;
    let inv = linalg::invert(&c.as_matrix())
        .ok_or_else(|| Error::NoSolution("canonical matrix is singular".to_string()))?;
    let p = linalg::transpose(&inv);
    let mut coeffs = Vec::with_capacity(p.len());
    for row in &p {
        coeffs.push(row.iter().map(laurent_of).collect::<Result<Vec<_>>>()?);
    }
    let m = e.bar_matrix(beta)?;
    let direct = solver::solve(&m.dual_entries())?;
    if direct.coeffs != coeffs {
        return Err(Error::NoSolution(format!(
            "dual canonical basis at {} disagrees between the primal and dual solves",
            beta
        )));
    }
    let d = Arc::new(DualCanonical {
        n,
        beta,
        keys: c.keys.clone(),
        order: direct.order.iter().map(|&i| c.keys[i].clone()).collect(),
        coeffs,
    });
    dual_store().lock().unwrap().insert((n, beta), d.clone());
    Ok(d)
}

/// `B̃(a)`.
pub fn dual_canonical_element(a: &KostantPartition) -> Result<DualCoords> {
    let d = dual_canonical(a.n(), a.weight())?;
    let i = d.index(a).expect("a lies in KP(weight(a))");
    Ok(d.element(i))
}

/// Re-checks `iota(B̃(a)) = B̃(a)` with the given bar route, plus unitriangularity
/// and the `q^{-1} Z[q^{-1}]` condition, for every `a` at `beta`.
pub fn certify_dual_canonical(n: usize, beta: QWeight, route: BarRoute) -> Result<bool> {
    let d = dual_canonical(n, beta)?;
    for i in 0..d.keys.len() {
        let x = d.element(i);
        if iota_via(&x, route)? != x {
            return Ok(false);
        }
        for (j, c) in d.coeffs[i].iter().enumerate() {
            let ok = if i == j {
                c.is_one()
            } else {
                c.is_zero() || (c.is_integral_q() && c.max_exp().unwrap() < 0)
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Candidate `D̃[b,d] := B̃(a[b,d])` for the interval partition `a[b,d]`,
/// certified by its weight and, for `b = d`, by `D̃[k,k] = Ẽ(beta_k)`.
pub fn quantum_minor(n: usize, b: usize, d: usize) -> Result<DualCoords> {
    if b < 1 || b > d || d > 2 * n || (d - b) % 2 != 0 {
        return Err(Error::InvalidInput(format!("invalid minor interval [{}, {}] for n = {}", b, d, n)));
    }
    let a = KostantPartition::interval(n, b, d);
    if a.weight() != minor_weight(b, d) {
        return Err(Error::HypothesisFailed(format!(
            "interval partition {} has weight {} but D[{},{}] has weight {}",
            a,
            a.weight(),
            b,
            d,
            minor_weight(b, d)
        )));
    }
    let x = dual_canonical_element(&a)?;
    if b == d && x != DualCoords::basis(&a) {
        return Err(Error::HypothesisFailed(format!("D[{},{}] differs from the root vector", b, d)));
    }
    Ok(x)
}

/// `lambda + w_n lambda`.
pub fn frozen_weight_sum(n: usize, l0: i64, l1: i64) -> PWeight {
    let lam = PWeight::new(l0, l1, QWeight::ZERO);
    lam + word_action(2 * n, lam)
}

/// `c` with `D_lambda x = q^c x D_lambda` for homogeneous `x` of weight `beta`,
/// `lambda = l0 w_0 + l1 w_1`: `c = -(lambda + w_n lambda, beta)`.
pub fn frozen_exponent(n: usize, l0: i64, l1: i64, beta: QWeight) -> i64 {
    -frozen_weight_sum(n, l0, l1).pair_q(&beta)
}

/// `D_0 = D̃[1, 2n-1]`.
pub fn frozen_d0(n: usize) -> Result<DualCoords> {
    quantum_minor(n, 1, 2 * n - 1)
}

/// `D_1 = D̃[2, 2n]`.
pub fn frozen_d1(n: usize) -> Result<DualCoords> {
    quantum_minor(n, 2, 2 * n)
}

/// `D̃_lambda = D_0^{⊙ l0} ⊙ D_1^{⊙ l1}`.
pub fn frozen_power(n: usize, l0: u32, l1: u32) -> Result<DualCoords> {
    let d0 = dual_pow(&frozen_d0(n)?, l0)?;
    let d1 = dual_pow(&frozen_d1(n)?, l1)?;
    if l0 == 0 || l1 == 0 {
        return dual_product(&d0, &d1);
    }
    odot(&d0, &d1)
}

/// `numerator ⊙ D_0^{⊙(-ell0)} ⊙ D_1^{⊙(-ell1)}`.
#[derive(Clone, Debug)]
pub struct LocalizedElement {
    pub numerator: DualCoords,
    pub ell0: u32,
    pub ell1: u32,
}

fn frozen_qpart(n: usize, l0: u32, l1: u32) -> QWeight {
    minor_weight(1, 2 * n - 1).scale(l0 as i64) + minor_weight(2, 2 * n).scale(l1 as i64)
}

/// For `F = D̃_lambda`, `x ⊙ F^{-1} = q^{-c/2} x F^{-1}` with `c` the frozen exponent.
fn odot_to_plain(x: &DualCoords, l0: u32, l1: u32) -> DualCoords {
    let n = x.n;
    x.scale_by_weight(|b| -frozen_exponent(n, l0 as i64, l1 as i64, b))
}

fn plain_to_odot(x: &DualCoords, l0: u32, l1: u32) -> DualCoords {
    let n = x.n;
    x.scale_by_weight(|b| frozen_exponent(n, l0 as i64, l1 as i64, b))
}

impl LocalizedElement {
    /// The plain numerator `y` with value `y F^{-1}`.
    fn plain(&self) -> DualCoords {
        odot_to_plain(&self.numerator, self.ell0, self.ell1)
    }

    fn from_plain(y: DualCoords, ell0: u32, ell1: u32) -> Self {
        LocalizedElement { numerator: plain_to_odot(&y, ell0, ell1), ell0, ell1 }
    }

    pub fn to_json(&self) -> Value {
        let mut v = match self.numerator.to_json() {
            Value::Object(m) => Value::Object(m),
            other => json!({"components": other}),
        };
        v["ell0"] = json!(self.ell0);
        v["ell1"] = json!(self.ell1);
        v
    }
}

/// `x ⊙ D_0^{⊙(-ell0)} ⊙ D_1^{⊙(-ell1)}`, reduced to minimal exponents.
pub fn localize(x: &DualCoords, ell0: u32, ell1: u32) -> Result<LocalizedElement> {
    let n = x.n;
    for (i, l, d) in [(0, ell0, frozen_d0(n)?), (1, ell1, frozen_d1(n)?)] {
        if l == 0 {
            continue;
        }
        for beta in x.weights() {
            let want = if i == 0 { frozen_exponent(n, 1, 0, beta) } else { frozen_exponent(n, 0, 1, beta) };
            if qcommute_exponent(&d, &x.component(beta))? != Some(want) {
                return Err(Error::NotQCommuting(format!(
                    "D_{} does not commute with the weight {} part as q^{}",
                    i, beta, want
                )));
            }
        }
    }
    reduce(LocalizedElement { numerator: x.clone(), ell0, ell1 })
}

/// Right division `y = z D_i` in `A_n`, if possible.
pub fn right_divide(y: &DualCoords, d: &DualCoords) -> Result<Option<DualCoords>> {
    let dw = d.weight().expect("frozen minors are homogeneous");
    let mut out = DualCoords::zero(y.n);
    let e = engine(y.n)?;
    for (beta, comp) in &y.comps {
        let src = *beta - dw;
        if !src.is_nonneg() {
            return Ok(None);
        }
        let unknowns = e.keys(src);
        if unknowns.is_empty() {
            return Ok(None);
        }
        let targets = e.keys(*beta);
        let mut a: Matrix = vec![vec![RatFunc::zero(); unknowns.len()]; targets.len()];
        for (j, u) in unknowns.iter().enumerate() {
            let p = dual_product(&DualCoords::basis(u), d)?;
            for (c, v) in p.terms() {
                let i = targets.binary_search(&c).expect("product stays in weight");
                a[i][j] = v;
            }
        }
        let rhs: Vec<RatFunc> = targets
            .iter()
            .map(|t| comp.get(t).cloned().unwrap_or_else(RatFunc::zero))
            .collect();
        match linalg::solve(&a, &rhs) {
            Some(z) => {
                out = out.add(&DualCoords::from_terms(y.n, unknowns.into_iter().zip(z)));
            }
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Plain product rule `F_l F_l' = q^{m/2} F_{l+l'}` with `m = c_{F_l}(wt F_l')`.
fn frozen_mult_exponent(n: usize, l: (u32, u32), lp: (u32, u32)) -> i64 {
    frozen_exponent(n, l.0 as i64, l.1 as i64, frozen_qpart(n, lp.0, lp.1))
}

fn reduce(x: LocalizedElement) -> Result<LocalizedElement> {
    let n = x.numerator.n;
    let mut cur = x;
    loop {
        let mut changed = false;
        for (i, d) in [(0, frozen_d0(n)?), (1, frozen_d1(n)?)] {
            let (l0, l1) = (cur.ell0, cur.ell1);
            if (i == 0 && l0 == 0) || (i == 1 && l1 == 0) || cur.numerator.is_zero() {
                continue;
            }
            // y F_l^{-1} with y = z D_i: F_l = q^{-m/2} F_{l-e_i} D_i
            let y = cur.plain();
            let Some(z) = right_divide(&y, &d)? else { continue };
            let rest = if i == 0 { (l0 - 1, l1) } else { (l0, l1 - 1) };
            let unit = if i == 0 { (1, 0) } else { (0, 1) };
            let m = frozen_mult_exponent(n, rest, unit);
            // y F_l^{-1} = z D_i (q^{-m/2} F_rest D_i)^{-1} = q^{m/2} z F_rest^{-1}
            let z = z.scale(&RatFunc::half_q_pow(m));
            cur = LocalizedElement::from_plain(z, rest.0, rest.1);
            changed = true;
        }
        if !changed {
            return Ok(cur);
        }
    }
}

/// Product of localized elements.
pub fn loc_product(x: &LocalizedElement, y: &LocalizedElement) -> Result<LocalizedElement> {
    let n = x.numerator.n;
    let (l, lp) = ((x.ell0, x.ell1), (y.ell0, y.ell1));
    // x F^{-1} y G^{-1} = x (F^{-1} y F) F^{-1} G^{-1}, and F^{-1} y_b F = q^{-c_F(b)} y_b
    let yp = y
        .plain()
        .scale_by_weight(|b| -2 * frozen_exponent(n, l.0 as i64, l.1 as i64, b));
    let num = dual_product(&x.plain(), &yp)?;
    // F^{-1} G^{-1} = (G F)^{-1}, G F = q^{m'/2} F_{l+l'} with m' = c_G(wt F)
    let mp = frozen_mult_exponent(n, lp, l);
    let num = num.scale(&RatFunc::half_q_pow(-mp));
    reduce(LocalizedElement::from_plain(num, l.0 + lp.0, l.1 + lp.1))
}

/// `iota` on the localization; fixes every `D_i^{⊙(-1)}`.
pub fn loc_iota(x: &LocalizedElement) -> Result<LocalizedElement> {
    let n = x.numerator.n;
    let (l0, l1) = (x.ell0, x.ell1);
    // iota(y F^{-1}) = F^{-1} iota(y) = sum_b q^{-c_F(b)} iota(y)_b F^{-1}
    let y = iota(&x.plain())?;
    let y = y.scale_by_weight(|b| -2 * frozen_exponent(n, l0 as i64, l1 as i64, b));
    reduce(LocalizedElement::from_plain(y, l0, l1))
}

/// Equality by cross-multiplication: `x F_l^{-1} = y F_{l'}^{-1}` iff
/// `x F_{l'} q^{-m(l,l')/2} = y F_l q^{-m(l',l)/2}`.
pub fn loc_eq(x: &LocalizedElement, y: &LocalizedElement) -> Result<bool> {
    let n = x.numerator.n;
    let (l, lp) = ((x.ell0, x.ell1), (y.ell0, y.ell1));
    let fl = plain_frozen(n, l)?;
    let flp = plain_frozen(n, lp)?;
    let lhs = dual_product(&x.plain(), &flp)?
        .scale(&RatFunc::half_q_pow(-frozen_mult_exponent(n, l, lp)));
    let rhs = dual_product(&y.plain(), &fl)?
        .scale(&RatFunc::half_q_pow(-frozen_mult_exponent(n, lp, l)));
    Ok(lhs == rhs)
}

fn plain_frozen(n: usize, l: (u32, u32)) -> Result<DualCoords> {
    frozen_power(n, l.0, l.1)
}
