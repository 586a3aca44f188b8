//! Classical modular polynomials and bounds on their coefficients.
//!
//! `Phi_m(X, j(tau))` is built as the product of `X - j((a tau + b)/d)` over
//! the cyclic sublattice representatives, expanded as a series in
//! `w = q^(1/m)` with big-float complex coefficients. Each coefficient is
//! rounded to an integer only when a majorant-based error bound certifies the
//! rounding, then rewritten as a polynomial in `j` with exact arithmetic.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use thiserror::Error;

use crate::analytic::{j_at_bits, reduce_tau, QExpansion};
use crate::numerics::{
    bits_for_digits, certified, pi, Agreement, HighPrecComplex, NumericsError, MAX_DOUBLINGS,
};

/// Default cap on the level accepted by [`modular_polynomial`].
pub const DEFAULT_MAX_LEVEL: u64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModpolyError {
    #[error("level must be positive")]
    InvalidLevel,
    #[error("level {m} exceeds the configured limit {limit}")]
    LevelTooLarge { m: u64, limit: u64 },
    #[error("could not certify integer rounding for level {m}")]
    RoundingUncertified { m: u64 },
    #[error("modular polynomial check failed: {0}")]
    CheckFailed(String),
    #[error("the zero polynomial has no height")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument outside the domain: {0}")]
    DomainError(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModpolyConfig {
    pub max_level: u64,
}

impl Default for ModpolyConfig {
    fn default() -> Self {
        ModpolyConfig {
            max_level: DEFAULT_MAX_LEVEL,
        }
    }
}

/// A polynomial in `X, Y` with integer coefficients, keyed by `(deg X, deg Y)`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(u32, u32), Integer>,
}

impl BivariatePolynomial {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), Integer)>) -> Self {
        let mut coeffs: BTreeMap<(u32, u32), Integer> = BTreeMap::new();
        for (key, c) in terms {
            *coeffs.entry(key).or_default() += c;
        }
        coeffs.retain(|_, c| *c != 0);
        BivariatePolynomial { coeffs }
    }

    pub fn coeff(&self, s: u32, k: u32) -> Integer {
        self.coeffs.get(&(s, k)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Integer)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.coeffs.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.coeffs.keys().map(|k| k.1).max()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(s, k), c)| self.coeffs.get(&(k, s)) == Some(c))
    }

    /// Largest absolute value of a coefficient (zero for the zero polynomial).
    pub fn max_abs_coeff(&self) -> Integer {
        self.coeffs
            .values()
            .map(|c| Integer::from(c.abs_ref()))
            .max()
            .unwrap_or_default()
    }

    pub fn eval_rational(&self, x: &Rational, y: &Rational) -> Rational {
        let xs = powers(x, self.degree_x().unwrap_or(0));
        let ys = powers(y, self.degree_y().unwrap_or(0));
        let mut acc = Rational::new();
        for (&(s, k), c) in &self.coeffs {
            acc += Rational::from(&xs[s as usize] * &ys[k as usize]) * c;
        }
        acc
    }

    pub fn eval_complex(&self, x: &HighPrecComplex, y: &HighPrecComplex) -> HighPrecComplex {
        let bits = x.prec().max(y.prec());
        let xs = complex_powers(x, self.degree_x().unwrap_or(0));
        let ys = complex_powers(y, self.degree_y().unwrap_or(0));
        let mut acc = HighPrecComplex::zero(bits);
        for (&(s, k), c) in &self.coeffs {
            let t = &xs[s as usize] * &ys[k as usize];
            acc = &acc + &t.scale(&Float::with_val(bits, c));
        }
        acc
    }
}

fn powers(x: &Rational, n: u32) -> Vec<Rational> {
    let mut out = vec![Rational::from(1)];
    for i in 0..n as usize {
        out.push(Rational::from(&out[i] * x));
    }
    out
}

fn complex_powers(x: &HighPrecComplex, n: u32) -> Vec<HighPrecComplex> {
    let mut out = vec![HighPrecComplex::one(x.prec())];
    for i in 0..n as usize {
        out.push(&out[i] * x);
    }
    out
}

/// `Phi_m(X, Y)`, monic of degree `psi(m)` in each variable, with
/// `Phi_m(j(m tau), j(tau)) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularPolynomial {
    level: u64,
    psi: u64,
    poly: BivariatePolynomial,
}

impl ModularPolynomial {
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn degree(&self) -> u64 {
        self.psi
    }

    pub fn poly(&self) -> &BivariatePolynomial {
        &self.poly
    }

    pub fn coeff(&self, s: u32, k: u32) -> Integer {
        self.poly.coeff(s, k)
    }

    pub fn eval_rational(&self, x: &Rational, y: &Rational) -> Rational {
        self.poly.eval_rational(x, y)
    }

    /// `{"m": m, "coeffs": [[s, k, "c"], ...]}` with `s >= k` only; the
    /// other half follows from `Phi_m(X, Y) = Phi_m(Y, X)` (`-Phi_1(Y, X)`
    /// for `m = 1`).
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .poly
            .terms()
            .filter(|(&(s, k), _)| s >= k)
            .map(|(&(s, k), c)| serde_json::json!([s, k, c.to_string()]))
            .collect();
        serde_json::json!({ "m": self.level, "coeffs": coeffs })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, ModpolyError> {
        let bad = |s: &str| ModpolyError::Json(s.to_string());
        let m = v
            .get("m")
            .and_then(|m| m.as_u64())
            .ok_or_else(|| bad("missing m"))?;
        if m == 0 {
            return Err(ModpolyError::InvalidLevel);
        }
        let list = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| bad("missing coeffs"))?;
        let mut terms = Vec::new();
        for entry in list {
            let e = entry
                .as_array()
                .filter(|e| e.len() == 3)
                .ok_or_else(|| bad("entry"))?;
            let s = e[0].as_u64().ok_or_else(|| bad("degree"))? as u32;
            let k = e[1].as_u64().ok_or_else(|| bad("degree"))? as u32;
            let c: Integer = e[2]
                .as_str()
                .and_then(|c| c.parse().ok())
                .ok_or_else(|| bad("coefficient"))?;
            if s < k {
                return Err(bad("entries must have s >= k"));
            }
            if s != k {
                // Phi_1 = X - Y is the one antisymmetric case
                let mirrored = if m == 1 {
                    Integer::from(-&c)
                } else {
                    c.clone()
                };
                terms.push(((k, s), mirrored));
            }
            terms.push(((s, k), c));
        }
        Ok(ModularPolynomial {
            level: m,
            psi: psi(m),
            poly: BivariatePolynomial::new(terms),
        })
    }
}

/// `psi(m) = m prod_{p | m} (1 + 1/p)`.
pub fn psi(m: u64) -> u64 {
    assert!(m >= 1, "psi is defined for positive integers");
    let mut n = m;
    let mut out = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out = out / p * (p + 1);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out = out / n * (n + 1);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The matrices `(a b; 0 d)` with `ad = m`, `0 <= b < d`, `gcd(a, b, d) = 1`.
pub fn cyclic_representatives(m: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for a in (1..=m).rev() {
        if m % a != 0 {
            continue;
        }
        let d = m / a;
        for b in 0..d {
            if gcd(gcd(a, b), d) == 1 {
                out.push((a, b, d));
            }
        }
    }
    out
}

static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ModularPolynomial>>>> = OnceLock::new();

/// `Phi_m`, computed once per process and shared afterwards.
pub fn modular_polynomial(
    m: u64,
    config: &ModpolyConfig,
) -> Result<Arc<ModularPolynomial>, ModpolyError> {
    if m == 0 {
        return Err(ModpolyError::InvalidLevel);
    }
    if m > config.max_level {
        return Err(ModpolyError::LevelTooLarge {
            m,
            limit: config.max_level,
        });
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache poisoned").get(&m) {
        return Ok(Arc::clone(p));
    }
    let computed = Arc::new(compute(m)?);
    // first writer wins; later results are identical anyway
    let mut guard = cache.lock().expect("cache poisoned");
    Ok(Arc::clone(guard.entry(m).or_insert(computed)))
}

/// A truncated Laurent series in `w` starting at `w^val`.
#[derive(Clone)]
struct WSeries<T> {
    val: i64,
    c: Vec<T>,
}

/// `c_n zeta^(b n) w^(a^2 n)` for the factor `j((a tau + b)/d)`, up to `w^top`.
fn factor_series(
    j: &QExpansion,
    (a, b, d): (u64, u64, u64),
    top: i64,
    roots: &[HighPrecComplex],
    bits: u32,
) -> WSeries<HighPrecComplex> {
    let step = (a * a) as i64;
    let val = -step;
    let len = ((top - val) / step + 1) as usize;
    let mut c = vec![HighPrecComplex::zero(bits); ((len - 1) as i64 * step + 1) as usize];
    for i in 0..len {
        let n = i as i64 - 1;
        let coeff = Float::with_val(bits, &j.coeff(n));
        let r = ((b as i64 * n).rem_euclid(d as i64)) as usize;
        let zeta = &roots[(r * (roots.len() / d as usize)) % roots.len()];
        c[i * step as usize] = zeta.scale(&coeff);
    }
    WSeries { val, c }
}

/// Same shape as [`factor_series`] with `|c_n|` and no roots of unity.
fn factor_majorant(j: &QExpansion, a: u64, top: i64) -> WSeries<Float> {
    let step = (a * a) as i64;
    let val = -step;
    let len = ((top - val) / step + 1) as usize;
    let mut c = vec![Float::new(64); ((len - 1) as i64 * step + 1) as usize];
    for i in 0..len {
        let n = i as i64 - 1;
        c[i * step as usize] = Float::with_val(64, j.coeff(n).abs());
    }
    WSeries { val, c }
}

trait Coeff: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    /// `self += sign * a * b`
    fn fma(&mut self, a: &Self, b: &Self, negate: bool);
    fn add(&mut self, a: &Self);
}

impl Coeff for HighPrecComplex {
    fn zero_like(&self) -> Self {
        HighPrecComplex::zero(self.prec())
    }
    fn fma(&mut self, a: &Self, b: &Self, negate: bool) {
        if negate {
            self.add_mul_assign(&-a.clone(), b);
        } else {
            self.add_mul_assign(a, b);
        }
    }
    fn add(&mut self, a: &Self) {
        *self = &*self + a;
    }
}

/// Majorants only ever accumulate absolute values.
impl Coeff for Float {
    fn zero_like(&self) -> Self {
        Float::new(self.prec())
    }
    fn fma(&mut self, a: &Self, b: &Self, _negate: bool) {
        *self += Float::with_val(self.prec(), a * b);
    }
    fn add(&mut self, a: &Self) {
        *self += a;
    }
}

/// Coefficients (in `X`) of `prod (X - f_i)`, each series truncated at
/// `w^0` once all factors are in.
fn symmetric_product<T: Coeff>(factors: &[WSeries<T>], zero: &T, one: &T) -> Vec<WSeries<T>> {
    let mut poles: Vec<i64> = factors.iter().map(|f| -f.val).collect();
    // remaining pole after factor i
    let mut rest = vec![0i64; factors.len()];
    for i in (0..factors.len()).rev() {
        rest[i] = if i + 1 < factors.len() {
            rest[i + 1] + poles[i + 1]
        } else {
            0
        };
    }
    poles.clear();
    let mut p: Vec<WSeries<T>> = vec![WSeries {
        val: 0,
        c: vec![one.clone()],
    }];
    for (i, f) in factors.iter().enumerate() {
        let top = rest[i];
        let deg = p.len();
        let next: Vec<WSeries<T>> = (0..=deg)
            .into_par_iter()
            .map(|k| {
                // new[k] = old[k - 1] - f old[k]
                let lo_prod = if k < deg { p[k].val + f.val } else { i64::MAX };
                let lo_shift = if k > 0 { p[k - 1].val } else { i64::MAX };
                let val = lo_prod.min(lo_shift);
                let len = (top - val + 1).max(0) as usize;
                let mut c = vec![zero.zero_like(); len];
                if k > 0 {
                    let src = &p[k - 1];
                    for (idx, x) in src.c.iter().enumerate() {
                        let e = src.val + idx as i64;
                        if e > top {
                            break;
                        }
                        c[(e - val) as usize].add(x);
                    }
                }
                if k < deg {
                    let src = &p[k];
                    for (ia, x) in src.c.iter().enumerate() {
                        let ea = src.val + ia as i64;
                        if ea + f.val > top {
                            break;
                        }
                        for (ib, y) in f.c.iter().enumerate() {
                            let e = ea + f.val + ib as i64;
                            if e > top {
                                break;
                            }
                            c[(e - val) as usize].fma(x, y, true);
                        }
                    }
                }
                WSeries { val, c }
            })
            .collect();
        p = next;
    }
    p
}

fn compute(m: u64) -> Result<ModularPolynomial, ModpolyError> {
    let reps = cyclic_representatives(m);
    let n = psi(m);
    debug_assert_eq!(reps.len() as u64, n);
    let total_pole: i64 = reps.iter().map(|&(a, _, _)| (a * a) as i64).sum();
    debug_assert_eq!(total_pole, (m * n) as i64);
    let j = QExpansion::j(total_pole as usize + 2);

    let maj_factors: Vec<WSeries<Float>> = reps
        .iter()
        .map(|&(a, _, _)| factor_majorant(&j, a, total_pole))
        .collect();
    let majorant = symmetric_product(&maj_factors, &Float::new(64), &Float::with_val(64, 1));
    let max_maj =
        majorant
            .iter()
            .flat_map(|s| s.c.iter())
            .fold(Float::with_val(64, 1), |acc, x| {
                if *x > acc {
                    x.clone()
                } else {
                    acc
                }
            });
    // every coefficient passes through at most n stages of at most L products
    let ops = (n as f64) * (2 * total_pole + 8) as f64;
    let slack_bits = ops.log2().ceil() as u32 + 6;
    let mut bits = max_maj.get_exp().unwrap_or(0).max(0) as u32 + slack_bits + 24;
    bits = bits.max(bits_for_digits(15));

    for _ in 0..=MAX_DOUBLINGS {
        if let Some(series) = rounded_series(m, &reps, &j, &majorant, bits, slack_bits) {
            let poly = to_polynomial(m, n, &series)?;
            let out = ModularPolynomial {
                level: m,
                psi: n,
                poly,
            };
            check(&out)?;
            return Ok(out);
        }
        bits *= 2;
    }
    Err(ModpolyError::RoundingUncertified { m })
}

/// Integer coefficients of each `X^k` coefficient as a series in `q`, from
/// `q^-psi` to `q^0`; `None` when some rounding is not certified.
fn rounded_series(
    m: u64,
    reps: &[(u64, u64, u64)],
    j: &QExpansion,
    majorant: &[WSeries<Float>],
    bits: u32,
    slack_bits: u32,
) -> Option<Vec<BTreeMap<i64, Integer>>> {
    let total_pole: i64 = reps.iter().map(|&(a, _, _)| (a * a) as i64).sum();
    let two_pi_i = HighPrecComplex::new(Float::new(bits), pi(bits) * 2u32);
    let roots: Vec<HighPrecComplex> = (0..m)
        .map(|k| {
            if k == 0 {
                HighPrecComplex::one(bits)
            } else {
                two_pi_i
                    .scale(&Float::with_val(bits, Rational::from((k, m))))
                    .exp()
            }
        })
        .collect();
    let factors: Vec<WSeries<HighPrecComplex>> = reps
        .iter()
        .map(|&r| factor_series(j, r, total_pole, &roots, bits))
        .collect();
    let product = symmetric_product(
        &factors,
        &HighPrecComplex::zero(bits),
        &HighPrecComplex::one(bits),
    );

    let quarter = Float::with_val(bits, 0.25);
    let mut out = Vec::with_capacity(product.len());
    for (series, maj) in product.iter().zip(majorant) {
        let mut coeffs = BTreeMap::new();
        for (idx, v) in series.c.iter().enumerate() {
            let e = series.val + idx as i64;
            if e > 0 {
                break;
            }
            let mi = (e - maj.val) as usize;
            let bound = maj.c.get(mi).cloned().unwrap_or_else(|| Float::new(64));
            let err = Float::with_val(bits, bound) >> (bits - slack_bits);
            if e % m as i64 != 0 {
                if Float::with_val(bits, v.abs() + &err) >= quarter {
                    return None;
                }
                continue;
            }
            let r = v.re.to_integer()?;
            let dist = Float::with_val(bits, &v.re - &r).abs()
                + Float::with_val(bits, v.im.abs_ref())
                + &err;
            if dist >= quarter {
                return None;
            }
            if r != 0 {
                coeffs.insert(e / m as i64, r);
            }
        }
        out.push(coeffs);
    }
    Some(out)
}

/// Rewrites each `q`-series as a polynomial in `j` by peeling leading terms.
fn to_polynomial(
    m: u64,
    n: u64,
    series: &[BTreeMap<i64, Integer>],
) -> Result<BivariatePolynomial, ModpolyError> {
    let len = n as usize + 1;
    let j = QExpansion::j(len);
    let mut jpow = vec![QExpansion {
        valuation: 0,
        coeffs: {
            let mut c = vec![Integer::new(); len];
            c[0] = Integer::from(1);
            c
        },
    }];
    for i in 0..n as usize {
        jpow.push(jpow[i].mul(&j));
    }
    let mut terms = Vec::new();
    for (x_deg, s) in series.iter().enumerate() {
        let mut s = s.clone();
        for y_deg in (0..=n as i64).rev() {
            let c = s.get(&-y_deg).cloned().unwrap_or_default();
            if c == 0 {
                continue;
            }
            let p = &jpow[y_deg as usize];
            for e in -y_deg..=0 {
                let t = Integer::from(&c * &p.coeff(e));
                if t != 0 {
                    *s.entry(e).or_default() -= t;
                }
            }
            terms.push(((x_deg as u32, y_deg as u32), c));
        }
        if let Some((e, _)) = s.iter().find(|(_, c)| **c != 0) {
            return Err(ModpolyError::CheckFailed(format!(
                "level {m}: X^{x_deg} coefficient leaves q^{e} after expansion in j"
            )));
        }
    }
    Ok(BivariatePolynomial::new(terms))
}

fn check(p: &ModularPolynomial) -> Result<(), ModpolyError> {
    let m = p.level;
    let n = p.psi as u32;
    let fail = |s: String| Err(ModpolyError::CheckFailed(format!("level {m}: {s}")));
    let symmetric = if m == 1 {
        p.poly
            .terms()
            .all(|(&(s, k), c)| p.poly.coeff(k, s) == Integer::from(-c))
    } else {
        p.poly.is_symmetric()
    };
    if !symmetric {
        return fail("not symmetric".into());
    }
    if p.poly.degree_x() != Some(n) || p.poly.degree_y() != Some(n) {
        return fail(format!("degree is not {n}"));
    }
    if p.poly.coeff(n, 0) != 1 {
        return fail("not monic".into());
    }
    let gap = numeric_residual(p)?;
    if gap >= 1e-10 {
        return fail(format!("|Phi(j(m tau0), j(tau0))| = {}", gap.to_f64()));
    }
    Ok(())
}

/// `|Phi_m(j(m tau0), j(tau0))|` at a fixed generic point, evaluated at a
/// precision that covers the size of the individual terms.
fn numeric_residual(p: &ModularPolynomial) -> Result<Float, ModpolyError> {
    let t0 =
        |bits| HighPrecComplex::new(Float::with_val(bits, 0.2137), Float::with_val(bits, 1.0931));
    let eval = |bits: u32| -> Result<(HighPrecComplex, HighPrecComplex), ModpolyError> {
        let tau = t0(bits);
        let mtau = HighPrecComplex::new(
            Float::with_val(bits, &tau.re * p.level),
            Float::with_val(bits, &tau.im * p.level),
        );
        let y = j_at_bits(
            &reduce_tau(&tau)
                .map_err(|e| ModpolyError::CheckFailed(e.to_string()))?
                .tau,
            bits,
        );
        let x = j_at_bits(
            &reduce_tau(&mtau)
                .map_err(|e| ModpolyError::CheckFailed(e.to_string()))?
                .tau,
            bits,
        );
        Ok((x, y))
    };
    let (x, y) = eval(128)?;
    let (ax, ay) = (x.abs(), y.abs());
    let mut size = Float::new(128);
    for (&(s, k), c) in p.poly.terms() {
        let t = Float::with_val(128, c).abs()
            * Float::with_val(128, (&ax).pow(s))
            * Float::with_val(128, (&ay).pow(k));
        size += t;
    }
    let bits = size.get_exp().unwrap_or(0).max(0) as u32 + 120;
    let (x, y) = eval(bits)?;
    Ok(p.poly.eval_complex(&x, &y).abs())
}

/// `log max |c|` over the coefficients.
pub fn poly_height(p: &BivariatePolynomial, digits: u32) -> Result<Float, ModpolyError> {
    coefficient_height(p.terms().map(|(_, c)| c), digits)
}

/// `log max |c|` for any finite list of integers, not all zero.
pub fn coefficient_height<'a>(
    coeffs: impl IntoIterator<Item = &'a Integer>,
    digits: u32,
) -> Result<Float, ModpolyError> {
    let max = coeffs
        .into_iter()
        .map(|c| Integer::from(c.abs_ref()))
        .max()
        .filter(|c| *c != 0)
        .ok_or(ModpolyError::ZeroPolynomial)?;
    Ok(certified(digits, Agreement::Mixed, |bits| {
        Ok(Float::with_val(bits, &max).ln())
    })?)
}

/// `psi(m) (6 log m + log psi(m) + 6 log(12 log m + 2 log psi(m) + 25.2) + 15.7)`.
#[allow(non_snake_case)]
pub fn height_bound_M(m: u64) -> f64 {
    let lm = (m as f64).ln();
    let p = psi(m) as f64;
    let lp = p.ln();
    p * (6.0 * lm + lp + 6.0 * (12.0 * lm + 2.0 * lp + 25.2).ln() + 15.7)
}

/// `6 l log l + 16 l + 14 sqrt(l) log l` for prime `l`.
pub fn prime_height_bound(l: u64) -> Result<f64, ModpolyError> {
    if !is_prime(l) {
        return Err(ModpolyError::NotPrime(l));
    }
    let lf = l as f64;
    let ll = lf.ln();
    Ok(6.0 * lf * ll + 16.0 * lf + 14.0 * lf.sqrt() * ll)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

/// `B + ((1 + log L)/L + 3 log 2) n`: the coefficient height of a bivariate
/// polynomial of degree at most `n` in each variable, given the height `B`
/// of its specialisations at `Y = L (1 + k/n)`, `k = 0..=n`.
pub fn lagrange_bound(b: f64, l: f64, n: u64) -> Result<f64, ModpolyError> {
    if !(b > 0.0) || !(l > 1.0) || n < 1 {
        return Err(ModpolyError::DomainError(format!(
            "B = {b}, L = {l}, n = {n}"
        )));
    }
    Ok(b + ((1.0 + l.ln()) / l + 3.0 * 2f64.ln()) * n as f64)
}

/// `b + 6 log(1 + 2b)`: if `a >= 47` and `a <= b + 6 log(1 + a)` then `a` is
/// at most this value.
pub fn bootstrap_bound(b: f64) -> Result<f64, ModpolyError> {
    if !(b > 0.0) {
        return Err(ModpolyError::DomainError(format!("b = {b}")));
    }
    Ok(b + 6.0 * (1.0 + 2.0 * b).ln())
}
