//! Root vectors, PBW monomials, expansion into PBW coordinates, bar matrices and
//! the canonical basis of `U_n^+`.

pub mod braid;
pub mod solver;
pub mod straighten;

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

pub use braid::BraidConvention;
use braid::braid_apply;
pub use straighten::{Coords, Straightener};

use crate::error::{Error, Result};
use crate::freealg::{
    bar_free, coefficient_dot, dual_functional, generator_norm, lusztig_form, radical_check,
    FreeElement,
};
use crate::linalg::{self, Matrix};
use crate::qring::{qfactorial, HalfLaurent, RatFunc};
use crate::rootdata::{beta, enumerate_kp, KostantPartition, QWeight};

/// Environment variable naming an optional on-disk cache for root vectors.
pub const CACHE_ENV: &str = "QCELL_CACHE_DIR";

/// Weight spaces up to this degree use the free-algebra route for the bar matrix.
pub const FREE_DEGREE_LIMIT: i64 = 10;

/// `1 - q^{-2}`.
pub fn one_minus_q_minus2() -> HalfLaurent {
    HalfLaurent::from_terms(vec![(0, BigInt::one()), (-4, BigInt::from(-1))])
}

/// `prod_k prod_{j <= a_k} (1 - q^{-2j})^{-1}`.
pub fn gram_closed(a: &[u32]) -> RatFunc {
    let mut den = HalfLaurent::one();
    for &c in a {
        for j in 1..=c as i64 {
            den = &den
                * &HalfLaurent::from_terms(vec![(0, BigInt::one()), (-4 * j, BigInt::from(-1))]);
        }
    }
    RatFunc::new(HalfLaurent::one(), den)
}

fn rootvec_store() -> &'static Mutex<HashMap<BraidConvention, Vec<FreeElement>>> {
    static S: OnceLock<Mutex<HashMap<BraidConvention, Vec<FreeElement>>>> = OnceLock::new();
    S.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_file(conv: BraidConvention, k: usize) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let slug = match conv {
        BraidConvention::PrimeMinus => "p-m",
        BraidConvention::PrimePlus => "p-p",
        BraidConvention::DoublePrimeMinus => "pp-m",
        BraidConvention::DoublePrimePlus => "pp-p",
    };
    Some(PathBuf::from(dir).join(format!("rootvec-{}-{}.txt", slug, k)))
}

fn load_cached(conv: BraidConvention, k: usize) -> Option<FreeElement> {
    let text = std::fs::read_to_string(cache_file(conv, k)?).ok()?;
    text.trim().parse().ok()
}

fn store_cached(conv: BraidConvention, k: usize, x: &FreeElement) {
    if let Some(p) = cache_file(conv, k) {
        if let Some(d) = p.parent() {
            let _ = std::fs::create_dir_all(d);
        }
        let _ = std::fs::write(p, x.to_string());
    }
}

/// `E(beta_1), ..., E(beta_m)` for the convention, shared across calls.
pub fn root_vector_prefix(conv: BraidConvention, m: usize) -> Result<Vec<FreeElement>> {
    let mut store = rootvec_store().lock().unwrap();
    let list = store.entry(conv).or_insert_with(|| vec![FreeElement::gen(0)]);
    while list.len() < m {
        let k = list.len() + 1;
        let next = match load_cached(conv, k) {
            Some(x) if x.weights() == vec![beta(k)] => x,
            _ => {
                let x = braid_apply(conv, 0, &list.last().unwrap().sigma())?;
                store_cached(conv, k, &x);
                x
            }
        };
        list.push(next);
    }
    Ok(list[..m].to_vec())
}

/// Divided PBW monomial built from a list of root vectors.
fn monomial_from(roots: &[FreeElement], a: &[u32]) -> FreeElement {
    let mut out = FreeElement::one();
    for (k, &c) in a.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let p = roots[k]
            .pow(c)
            .scale(&RatFunc::new(HalfLaurent::one(), qfactorial(c)));
        out = out.multiply(&p);
    }
    out
}

/// Coordinates of `x` against the monomials of `keys`, by orthogonality.
fn project_onto(roots: &[FreeElement], x: &FreeElement, keys: &[Vec<u32>]) -> Vec<RatFunc> {
    let phi = dual_functional(x);
    keys.iter()
        .map(|a| {
            let e = monomial_from(roots, a);
            let v = coefficient_dot(&phi, &e);
            if v.is_zero() {
                v
            } else {
                v.div(&gram_closed(a))
            }
        })
        .collect()
}

/// Two-root relation `E_m E_1` for one convention, checked along the way.
fn ls_relation(conv: BraidConvention, roots: &[FreeElement], m: usize) -> std::result::Result<Vec<(usize, RatFunc)>, String> {
    let wt = beta(m) + beta(1);
    let keys: Vec<Vec<u32>> = (1..=(m + 1) / 2)
        .map(|j| {
            let mut a = vec![0u32; m];
            a[j - 1] += 1;
            a[m - j] += 1;
            a
        })
        .collect();
    for a in &keys {
        for b in &keys {
            let g = lusztig_form(&monomial_from(roots, a), &monomial_from(roots, b));
            let expect = if a == b { gram_closed(a) } else { RatFunc::zero() };
            if g != expect {
                return Err(format!("{}: gram mismatch at weight {}", conv.tag(), wt));
            }
        }
    }
    let x = roots[m - 1].multiply(&roots[0]);
    let coords = project_onto(roots, &x, &keys);
    let mut residual = x;
    for (a, c) in keys.iter().zip(&coords) {
        residual = residual.sub(&monomial_from(roots, a).scale(c));
    }
    if !radical_check(&residual) {
        return Err(format!("{}: E_{} E_1 leaves U_n^+", conv.tag(), m));
    }
    let outer = keys.iter().position(|a| a[0] == 1 && a[m - 1] == 1).unwrap();
    if coords[outer] != RatFunc::q_pow(2) {
        return Err(format!(
            "{}: E_{} E_1 has leading coefficient {} instead of q^2",
            conv.tag(),
            m,
            coords[outer]
        ));
    }
    Ok(keys.iter().zip(coords).map(|(a, c)| (a.iter().position(|&x| x > 0).unwrap() + 1, c)).collect())
}

/// Validates a convention on `E_1, ..., E_m`: weights, norms, Gram form and the
/// two-root relations. Returns the relations on success.
fn validate(conv: BraidConvention, m: usize) -> std::result::Result<Vec<Vec<(usize, RatFunc)>>, String> {
    let mut roots = Vec::new();
    for k in 1..=m {
        let v = root_vector_prefix(conv, k).map_err(|e| e.to_string())?;
        let e = v.last().unwrap();
        if e.weights() != vec![beta(k)] {
            return Err(format!("{}: E_{} has weights {:?}", conv.tag(), k, e.weights()));
        }
        if lusztig_form(e, e) != generator_norm() {
            return Err(format!("{}: E_{} has the wrong norm", conv.tag(), k));
        }
        roots = v;
    }
    let mut ls = vec![Vec::new(); m + 1];
    for (j, slot) in ls.iter_mut().enumerate().skip(2) {
        *slot = ls_relation(conv, &roots, j)?;
    }
    Ok(ls)
}

/// Outcome of validating every convention on `E_1, ..., E_m`.
#[derive(Clone, Debug)]
pub struct Selection {
    pub convention: BraidConvention,
    ls: Vec<Vec<(usize, RatFunc)>>,
    pub rejected: Vec<(BraidConvention, String)>,
}

fn selection_store() -> &'static Mutex<HashMap<usize, Arc<Selection>>> {
    static S: OnceLock<Mutex<HashMap<usize, Arc<Selection>>>> = OnceLock::new();
    S.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Validates all conventions on `E_1..E_m` and keeps the unique survivor.
pub fn select_convention(m: usize) -> Result<Arc<Selection>> {
    let mut store = selection_store().lock().unwrap();
    if let Some(s) = store.get(&m) {
        return Ok(s.clone());
    }
    let mut passed = Vec::new();
    let mut rejected = Vec::new();
    for conv in BraidConvention::ALL {
        match validate(conv, m) {
            Ok(ls) => passed.push((conv, ls)),
            Err(msg) => rejected.push((conv, msg)),
        }
    }
    if passed.len() != 1 {
        let mut msgs: Vec<String> = rejected.into_iter().map(|(_, m)| m).collect();
        if passed.len() > 1 {
            let tags: Vec<&str> = passed.iter().map(|(c, _)| c.tag()).collect();
            msgs.push(format!("several conventions pass: {}", tags.join(", ")));
        }
        return Err(Error::ConventionMismatch(msgs.join("; ")));
    }
    let (convention, ls) = passed.pop().unwrap();
    let s = Arc::new(Selection { convention, ls, rejected });
    store.insert(m, s.clone());
    Ok(s)
}

/// `E(beta_1) ... E(beta_{2n})`.
#[derive(Clone, Debug)]
pub struct RootVectorTable {
    pub n: usize,
    pub convention: BraidConvention,
    pub vectors: Vec<FreeElement>,
}

/// `sum_a coords[a] E(a)` in a single weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwCoords {
    pub n: usize,
    pub beta: QWeight,
    pub coords: BTreeMap<KostantPartition, RatFunc>,
}

impl PbwCoords {
    pub fn coeff(&self, a: &KostantPartition) -> RatFunc {
        self.coords.get(a).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weight": [self.beta.d0, self.beta.d1],
            "coords": self.coords.iter().map(|(a, c)| json!({"a": a.a, "c": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BarRoute {
    Free,
    Straightening,
}

impl BarRoute {
    pub fn name(&self) -> &'static str {
        match self {
            BarRoute::Free => "free",
            BarRoute::Straightening => "straightening",
        }
    }

    pub fn other(&self) -> BarRoute {
        match self {
            BarRoute::Free => BarRoute::Straightening,
            BarRoute::Straightening => BarRoute::Free,
        }
    }
}

/// Bar matrix on `(U_n^+)_beta`: `entries[a][b]` is the `E(b)`-coordinate of the
/// orthogonal projection of `b(E(a))` onto `U_n^+`.
#[derive(Clone, Debug)]
pub struct BarMatrix {
    pub n: usize,
    pub beta: QWeight,
    pub route: BarRoute,
    pub keys: Vec<KostantPartition>,
    pub entries: Matrix,
    /// Solver order, lowest first.
    pub order: Vec<KostantPartition>,
}

impl BarMatrix {
    pub fn index(&self, a: &KostantPartition) -> Option<usize> {
        self.keys.binary_search(a).ok()
    }

    /// `N[a][c] = bar(M[c][a])`: the action of `b*` on dual PBW coordinates.
    pub fn dual_entries(&self) -> Matrix {
        linalg::bar(&linalg::transpose(&self.entries))
    }

    pub fn involution_holds(&self) -> bool {
        linalg::is_identity(&linalg::mul(&self.entries, &linalg::bar(&self.entries)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weight": [self.beta.d0, self.beta.d1],
            "route": self.route.name(),
            "keys": self.keys.iter().map(|k| k.a.clone()).collect::<Vec<_>>(),
            "order": self.order.iter().map(|k| k.a.clone()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Canonical basis of `(U_n^+)_beta`: `coeffs[a][b]` is the `E(b)`-coordinate of `C(a)`.
#[derive(Clone, Debug)]
pub struct CanonicalTable {
    pub n: usize,
    pub beta: QWeight,
    pub keys: Vec<KostantPartition>,
    pub order: Vec<KostantPartition>,
    pub coeffs: Vec<Vec<HalfLaurent>>,
}

impl CanonicalTable {
    pub fn row(&self, i: usize) -> PbwCoords {
        let coords = self.keys
            .iter()
            .zip(&self.coeffs[i])
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.clone(), RatFunc::from(c.clone())))
            .collect();
        PbwCoords { n: self.n, beta: self.beta, coords }
    }

    pub fn as_matrix(&self) -> Matrix {
        self.coeffs
            .iter()
            .map(|r| r.iter().map(|c| RatFunc::from(c.clone())).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weight": [self.beta.d0, self.beta.d1],
            "order": self.order.iter().map(|k| k.a.clone()).collect::<Vec<_>>(),
            "rows": self.keys.iter().enumerate().map(|(i, k)| json!({
                "a": k.a,
                "coords": self.row(i).coords.iter().map(|(b, c)| json!({"a": b.a, "c": c.to_string()})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Per-`n` computational state, shared read-only once built.
pub struct Engine {
    n: usize,
    roots: RootVectorTable,
    rejected: Vec<(BraidConvention, String)>,
    straight: Straightener,
    monomials: RwLock<HashMap<Vec<u32>, Arc<FreeElement>>>,
    bars: RwLock<HashMap<(QWeight, BarRoute), Arc<BarMatrix>>>,
    canon: RwLock<HashMap<QWeight, Arc<CanonicalTable>>>,
}

fn engine_store() -> &'static Mutex<HashMap<usize, Arc<Engine>>> {
    static S: OnceLock<Mutex<HashMap<usize, Arc<Engine>>>> = OnceLock::new();
    S.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The shared engine for `n`.
pub fn engine(n: usize) -> Result<Arc<Engine>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".to_string()));
    }
    let mut store = engine_store().lock().unwrap();
    if let Some(e) = store.get(&n) {
        return Ok(e.clone());
    }
    let e = Arc::new(Engine::build(n)?);
    store.insert(n, e.clone());
    Ok(e)
}

impl Engine {
    fn build(n: usize) -> Result<Engine> {
        let sel = select_convention((2 * n).max(4))?;
        let (conv, ls, rejected) = (sel.convention, sel.ls.clone(), sel.rejected.clone());
        let vectors = root_vector_prefix(conv, 2 * n)?;
        let mut ls = ls;
        ls.truncate(2 * n + 1);
        Ok(Engine {
            n,
            roots: RootVectorTable { n, convention: conv, vectors },
            rejected,
            straight: Straightener::new(n, ls),
            monomials: RwLock::new(HashMap::new()),
            bars: RwLock::new(HashMap::new()),
            canon: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> BraidConvention {
        self.roots.convention
    }

    /// Conventions rejected during selection, with the reason.
    pub fn rejected_conventions(&self) -> &[(BraidConvention, String)] {
        &self.rejected
    }

    pub fn root_vectors(&self) -> &RootVectorTable {
        &self.roots
    }

    pub fn straightener(&self) -> &Straightener {
        &self.straight
    }

    pub fn keys(&self, beta_w: QWeight) -> Vec<KostantPartition> {
        enumerate_kp(self.n, beta_w)
    }

    fn check_kp(&self, a: &KostantPartition) -> Result<()> {
        if a.a.len() != 2 * self.n {
            return Err(Error::InvalidInput(format!("{} is not a Kostant vector for n = {}", a, self.n)));
        }
        Ok(())
    }

    /// `E(a) = prod_k E(beta_k)^{(a_k)}`.
    pub fn pbw_monomial(&self, a: &KostantPartition) -> Result<Arc<FreeElement>> {
        self.check_kp(a)?;
        Ok(self.monomial(&a.a))
    }

    fn monomial(&self, a: &[u32]) -> Arc<FreeElement> {
        if let Some(x) = self.monomials.read().unwrap().get(a) {
            return x.clone();
        }
        let x = match a.iter().rposition(|&c| c > 0) {
            None => FreeElement::one(),
            Some(k) => {
                let mut head = a.to_vec();
                head[k] = 0;
                let c = a[k];
                let p = self.roots.vectors[k]
                    .pow(c)
                    .scale(&RatFunc::new(HalfLaurent::one(), qfactorial(c)));
                self.monomial(&head).multiply(&p)
            }
        };
        let x = Arc::new(x);
        self.monomials.write().unwrap().insert(a.to_vec(), x.clone());
        x
    }

    /// `(E(a), E(b))_L` computed from the free algebra.
    pub fn gram_free(&self, a: &KostantPartition, b: &KostantPartition) -> Result<RatFunc> {
        Ok(lusztig_form(&*self.pbw_monomial(a)?, &*self.pbw_monomial(b)?))
    }

    /// `(E(a), E(b))_L`, certified against the closed form.
    pub fn gram(&self, a: &KostantPartition, b: &KostantPartition) -> Result<RatFunc> {
        let v = self.gram_free(a, b)?;
        let expect = if a == b { gram_closed(&a.a) } else { RatFunc::zero() };
        if v != expect {
            return Err(Error::GramMismatch(format!(
                "({}, {}) computed {} but closed form gives {}",
                a, b, v, expect
            )));
        }
        Ok(v)
    }

    fn weight_of(x: &FreeElement, beta_w: Option<QWeight>) -> Result<QWeight> {
        let ws = x.weights();
        match (ws.as_slice(), beta_w) {
            ([], Some(b)) => Ok(b),
            ([], None) => Ok(QWeight::ZERO),
            ([w], Some(b)) if *w == b => Ok(b),
            ([w], None) => Ok(*w),
            _ => Err(Error::InvalidInput(format!("element is not homogeneous of the given weight: {:?}", ws))),
        }
    }

    /// Orthogonal projection of a homogeneous `x` onto `U_n^+`.
    pub fn project_pbw(&self, x: &FreeElement) -> Result<PbwCoords> {
        let wt = Self::weight_of(x, None)?;
        let keys = self.keys(wt);
        let phi = dual_functional(x);
        let mut coords = BTreeMap::new();
        for a in keys {
            let v = coefficient_dot(&phi, &self.monomial(&a.a));
            if !v.is_zero() {
                coords.insert(a.clone(), v.div(&gram_closed(&a.a)));
            }
        }
        Ok(PbwCoords { n: self.n, beta: wt, coords })
    }

    /// PBW coordinates of `x`, certifying `x` lies in `U_n^+`.
    pub fn expand_pbw(&self, x: &FreeElement) -> Result<PbwCoords> {
        let c = self.project_pbw(x)?;
        let residual = x.sub(&self.realize(&c)?);
        if !radical_check(&residual) {
            return Err(Error::NotInSubalgebra(format!(
                "element of weight {} is not in U_{}^+",
                c.beta, self.n
            )));
        }
        Ok(c)
    }

    pub fn realize(&self, c: &PbwCoords) -> Result<FreeElement> {
        let mut out = FreeElement::zero();
        for (a, v) in &c.coords {
            out = out.add(&self.pbw_monomial(a)?.scale(v));
        }
        Ok(out)
    }

    /// Product in the divided PBW basis by straightening.
    pub fn mul_coords(&self, x: &Coords, y: &Coords) -> Coords {
        self.straight.mul(x, y)
    }

    /// `E(a) E(b)` by straightening.
    pub fn mul_basis(&self, a: &KostantPartition, b: &KostantPartition) -> Coords {
        self.straight.mul_basis(&a.a, &b.a)
    }

    /// `E(a) E(b)` through the free algebra, certified to stay in `U_n^+`.
    pub fn mul_basis_free(&self, a: &KostantPartition, b: &KostantPartition) -> Result<Coords> {
        let x = self.pbw_monomial(a)?.multiply(&*self.pbw_monomial(b)?);
        let c = self.expand_pbw(&x)?;
        Ok(c.coords.into_iter().map(|(k, v)| (k.a, v)).collect())
    }

    /// Default route for a weight.
    pub fn route_for(beta_w: QWeight) -> BarRoute {
        if beta_w.degree() <= FREE_DEGREE_LIMIT {
            BarRoute::Free
        } else {
            BarRoute::Straightening
        }
    }

    pub fn bar_matrix(&self, beta_w: QWeight) -> Result<Arc<BarMatrix>> {
        self.bar_matrix_via(beta_w, Self::route_for(beta_w))
    }

    pub fn bar_matrix_via(&self, beta_w: QWeight, route: BarRoute) -> Result<Arc<BarMatrix>> {
        if !beta_w.is_nonneg() {
            return Err(Error::InvalidInput(format!("weight {} is not in Q^+", beta_w)));
        }
        if let Some(m) = self.bars.read().unwrap().get(&(beta_w, route)) {
            return Ok(m.clone());
        }
        let keys = self.keys(beta_w);
        let entries = match route {
            BarRoute::Free => self.bar_entries_free(&keys),
            BarRoute::Straightening => self.bar_entries_straight(&keys),
        };
        let mut m = BarMatrix { n: self.n, beta: beta_w, route, keys, entries, order: Vec::new() };
        if !m.involution_holds() {
            return Err(Error::ConventionMismatch(format!(
                "bar matrix at {} ({} route) is not an involution",
                beta_w,
                route.name()
            )));
        }
        let order = solver::triangular_order(&m.entries)?;
        m.order = order.iter().map(|&i| m.keys[i].clone()).collect();
        let m = Arc::new(m);
        self.bars.write().unwrap().insert((beta_w, route), m.clone());
        Ok(m)
    }

    fn bar_entries_free(&self, keys: &[KostantPartition]) -> Matrix {
        keys.iter()
            .map(|c| {
                let phi = dual_functional(&bar_free(&self.monomial(&c.a)));
                keys.iter()
                    .map(|a| {
                        let v = coefficient_dot(&phi, &self.monomial(&a.a));
                        if v.is_zero() {
                            v
                        } else {
                            v.div(&gram_closed(&a.a))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `b*(E*(a)) = q^{sum a_k(a_k-1)/2 - N(N-1)} E*(beta_{2n})^{a_{2n}} ... E*(beta_1)^{a_1}`
    /// with `E*(beta_k) = (1 - q^{-2}) psi(E(beta_k))`.
    fn bar_entries_straight(&self, keys: &[KostantPartition]) -> Matrix {
        let d = keys.len();
        let mut dual = vec![vec![RatFunc::zero(); d]; d];
        for (i, a) in keys.iter().enumerate() {
            let nn = a.total() as i64;
            let scal = &RatFunc::q_pow(a.self_sum() - nn * (nn - 1))
                * &RatFunc::from(one_minus_q_minus2().pow(nn as u32));
            let s = self.straight.reversed_monomial(&a.a);
            for (j, c) in keys.iter().enumerate() {
                if let Some(v) = s.get(&c.a) {
                    dual[i][j] = &(&scal * v) * &gram_closed(&c.a);
                }
            }
        }
        linalg::bar(&linalg::transpose(&dual))
    }

    /// Canonical basis on `(U_n^+)_beta`: `C(a) = bar(C(a)) M`, unitriangular with
    /// off-diagonal entries in `q^{-1} Z[q^{-1}]`.
    pub fn canonical(&self, beta_w: QWeight) -> Result<Arc<CanonicalTable>> {
        if let Some(c) = self.canon.read().unwrap().get(&beta_w) {
            return Ok(c.clone());
        }
        let m = self.bar_matrix(beta_w)?;
        let sol = solver::solve(&m.entries)?;
        let t = CanonicalTable {
            n: self.n,
            beta: beta_w,
            keys: m.keys.clone(),
            order: sol.order.iter().map(|&i| m.keys[i].clone()).collect(),
            coeffs: sol.coeffs,
        };
        let t = Arc::new(t);
        self.canon.write().unwrap().insert(beta_w, t.clone());
        Ok(t)
    }

    /// Re-checks `C = bar(C) M` with the bar matrix of the given route.
    pub fn certify_canonical(&self, beta_w: QWeight, route: BarRoute) -> Result<bool> {
        let c = self.canonical(beta_w)?;
        let m = self.bar_matrix_via(beta_w, route)?;
        Ok(solver::certify(&m.entries, &c.coeffs))
    }
}

/// The symmetry `T_i` under the selected convention.
pub fn braid_apply_selected(i: u8, x: &FreeElement) -> Result<FreeElement> {
    let e = engine(1)?;
    braid_apply(e.convention(), i, x)
}

pub fn pbw_monomial(n: usize, a: &KostantPartition) -> Result<FreeElement> {
    Ok((*engine(n)?.pbw_monomial(a)?).clone())
}

pub fn gram(n: usize, a: &KostantPartition, b: &KostantPartition) -> Result<RatFunc> {
    engine(n)?.gram(a, b)
}

pub fn expand_pbw(x: &FreeElement, n: usize) -> Result<PbwCoords> {
    engine(n)?.expand_pbw(x)
}

pub fn bar_matrix(n: usize, beta_w: QWeight) -> Result<Arc<BarMatrix>> {
    engine(n)?.bar_matrix(beta_w)
}

pub fn canonical_coords(n: usize, beta_w: QWeight) -> Result<BTreeMap<KostantPartition, PbwCoords>> {
    let t = engine(n)?.canonical(beta_w)?;
    Ok(t.keys.iter().enumerate().map(|(i, k)| (k.clone(), t.row(i))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kp(v: &[u32]) -> KostantPartition {
        KostantPartition::new(v.to_vec())
    }

    #[test]
    fn selected_convention_is_prime_minus() {
        let e = engine(2).unwrap();
        assert_eq!(e.convention(), BraidConvention::PrimeMinus);
        assert_eq!(e.rejected_conventions().len(), 3);
    }

    #[test]
    fn gram_examples() {
        let e = engine(2).unwrap();
        let a = kp(&[0, 2, 0, 0]);
        let b = kp(&[1, 0, 1, 0]);
        assert!(e.gram(&a, &b).unwrap().is_zero());
        assert_eq!(e.gram(&kp(&[2, 0, 0, 0]), &kp(&[2, 0, 0, 0])).unwrap(), gram_closed(&[2]));
        assert_eq!(e.gram(&b, &b).unwrap(), gram_closed(&[1, 1]));
    }

    #[test]
    fn expand_examples() {
        let e = engine(2).unwrap();
        let x = e.pbw_monomial(&kp(&[0, 1, 0, 0])).unwrap().multiply(&e.pbw_monomial(&kp(&[1, 0, 0, 0])).unwrap());
        let c = e.expand_pbw(&x).unwrap();
        assert_eq!(c.coords.len(), 1);
        assert_eq!(c.coeff(&kp(&[1, 1, 0, 0])), RatFunc::q_pow(2));
        assert!(matches!(e.expand_pbw(&FreeElement::gen(1)), Err(Error::NotInSubalgebra(_))));
    }

    #[test]
    fn straightening_matches_free_products() {
        let e = engine(2).unwrap();
        for wa in [QWeight::new(2, 1), QWeight::new(3, 1), QWeight::new(4, 3)] {
            for wb in [QWeight::new(1, 0), QWeight::new(3, 2), QWeight::new(2, 1)] {
                for a in e.keys(wa) {
                    for b in e.keys(wb) {
                        assert_eq!(e.mul_basis(&a, &b), e.mul_basis_free(&a, &b).unwrap(), "{} {}", a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn bar_matrix_small_weight() {
        let e = engine(2).unwrap();
        let m = e.bar_matrix(QWeight::new(4, 2)).unwrap();
        assert_eq!(m.keys.len(), 2);
        assert!(m.involution_holds());
        let s = e.bar_matrix_via(QWeight::new(4, 2), BarRoute::Straightening).unwrap();
        assert_eq!(m.entries, s.entries);
    }

    #[test]
    fn canonical_small_weight() {
        let e = engine(2).unwrap();
        let c = e.canonical(QWeight::new(4, 2)).unwrap();
        assert!(e.certify_canonical(QWeight::new(4, 2), BarRoute::Straightening).unwrap());
        for (i, row) in c.coeffs.iter().enumerate() {
            assert!(row[i].is_one());
        }
    }
}
