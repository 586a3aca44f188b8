//! Fundamental domain reduction and the classical q-series.
//!
//! `Delta` is normalized as `q * prod (1 - q^n)^24`, without the `(2 pi)^12`
//! factor; `j = E4^3 / Delta` with `E4 = 1 + 240 sum sigma_3(n) q^n`.

use std::fmt;

use rug::ops::{Pow, PowAssign};
use rug::{Float, Integer, Rational};
use thiserror::Error;

use crate::numerics::{
    certified, hyp2f1_at_bits, pi, Agreement, HighPrecComplex, NumericsError, GUARD_BITS,
};

/// Additive constant in the lower bound `|j(tau)| >= e^{2 pi Im tau} - 970.8`.
pub const J_GAP_CONSTANT: f64 = 970.8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticError {
    #[error("tau must lie in the upper half plane")]
    NotUpperHalfPlane,
    #[error("no sign change found for the alpha equation in (0, 1/2)")]
    BracketFailure,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Integer matrix `[[a, b], [c, d]]` of determinant one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sl2Matrix {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub d: Integer,
}

impl Sl2Matrix {
    pub fn identity() -> Self {
        Self::from_i64s(1, 0, 0, 1)
    }

    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64) -> Self {
        Sl2Matrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn det(&self) -> Integer {
        Integer::from(&self.a * &self.d) - Integer::from(&self.b * &self.c)
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        let e = |x: &Integer, y: &Integer, z: &Integer, w: &Integer| {
            Integer::from(x * y) + Integer::from(z * w)
        };
        Sl2Matrix {
            a: e(&self.a, &other.a, &self.b, &other.c),
            b: e(&self.a, &other.b, &self.b, &other.d),
            c: e(&self.c, &other.a, &self.d, &other.c),
            d: e(&self.c, &other.b, &self.d, &other.d),
        }
    }

    /// Moebius action `(a z + b) / (c z + d)` at the precision of `z`.
    pub fn apply(&self, z: &HighPrecComplex) -> HighPrecComplex {
        let bits = z.prec();
        let lift = |n: &Integer| HighPrecComplex::from_real(Float::with_val(bits, n));
        let num = &(&lift(&self.a) * z) + &lift(&self.b);
        let den = &(&lift(&self.c) * z) + &lift(&self.d);
        &num / &den
    }
}

impl fmt::Display for Sl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A point of the closed fundamental domain together with the matrix that
/// carries the original input to it.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedTau {
    pub tau: HighPrecComplex,
    pub matrix: Sl2Matrix,
}

/// Moves `z` into `|Re tau| <= 1/2`, `|tau| >= 1`. On the boundary the
/// representative with the smaller real part is kept: `Re = 1/2` is moved to
/// `-1/2`, and points of the unit circle with positive real part are
/// inverted.
pub fn reduce_tau(z: &HighPrecComplex) -> Result<ReducedTau, AnalyticError> {
    if !z.is_finite() || z.im <= 0 {
        return Err(AnalyticError::NotUpperHalfPlane);
    }
    let bits = z.prec();
    let mut eps = Float::with_val(bits, 2);
    eps.pow_assign(-((bits - GUARD_BITS.min(bits / 4)) as i32));
    let half = Float::with_val(bits, 0.5);
    let one = Float::with_val(bits, 1);

    let mut tau = z.clone();
    let mut m = Sl2Matrix::identity();
    let translate = |tau: &mut HighPrecComplex, m: &mut Sl2Matrix, n: &Integer| {
        tau.re -= n;
        *m = Sl2Matrix {
            a: Integer::from(&m.a - Integer::from(n * &m.c)),
            b: Integer::from(&m.b - Integer::from(n * &m.d)),
            c: m.c.clone(),
            d: m.d.clone(),
        };
    };
    let invert = |tau: &mut HighPrecComplex, m: &mut Sl2Matrix| {
        *tau = -tau.recip();
        *m = Sl2Matrix {
            a: Integer::from(-&m.c),
            b: Integer::from(-&m.d),
            c: m.a.clone(),
            d: m.b.clone(),
        };
    };

    loop {
        let n = tau.re.to_integer().unwrap_or_default();
        if n != 0 {
            translate(&mut tau, &mut m, &n);
        }
        if tau.norm() < Float::with_val(bits, &one - &eps) {
            invert(&mut tau, &mut m);
        } else {
            break;
        }
    }
    if Float::with_val(bits, &tau.re - &half).abs() <= eps {
        translate(&mut tau, &mut m, &Integer::from(1));
    }
    if Float::with_val(bits, tau.norm() - &one).abs() <= eps && tau.re > eps {
        invert(&mut tau, &mut m);
    }
    Ok(ReducedTau { tau, matrix: m })
}

/// `q = exp(2 pi i tau)` with `bits` of precision.
pub fn nome(tau: &HighPrecComplex, bits: u32) -> HighPrecComplex {
    let two_pi = pi(bits) * 2u32;
    let t = tau.with_prec(bits);
    HighPrecComplex::new(
        -Float::with_val(bits, &t.im * &two_pi),
        Float::with_val(bits, &t.re * &two_pi),
    )
    .exp()
}

/// Terms needed so that a tail bounded by `c * n^3 * |q|^n` with ratio below
/// one drops under `2^-bits`.
fn terms_for(im_tau: f64, bits: u32) -> usize {
    let per_term = 2.0 * std::f64::consts::PI * im_tau.max(0.5);
    let need = (f64::from(bits) + 24.0) * std::f64::consts::LN_2;
    let mut n = (need / per_term).ceil().max(1.0) as usize;
    // absorb the polynomial factor n^3
    while 3.0 * (n as f64).ln() + need > per_term * n as f64 {
        n += 1;
    }
    n + 1
}

pub(crate) fn delta_at_bits(tau: &HighPrecComplex, bits: u32) -> HighPrecComplex {
    let q = nome(tau, bits);
    let n = terms_for(tau.im.to_f64(), bits);
    let one = HighPrecComplex::one(bits);
    let mut prod = one.clone();
    let mut qn = q.clone();
    for _ in 0..n {
        prod = &prod * &(&one - &qn);
        qn = &qn * &q;
    }
    &q * &prod.powu(24)
}

pub(crate) fn jdelta_at_bits(tau: &HighPrecComplex, bits: u32) -> HighPrecComplex {
    let q = nome(tau, bits);
    let n = terms_for(tau.im.to_f64(), bits);
    let one = HighPrecComplex::one(bits);
    let mut sum = HighPrecComplex::zero(bits);
    let mut qn = q.clone();
    for k in 1..=n as u64 {
        let k3 = (k * k * k) as i64;
        let term = &qn.scale_i64(k3) / &(&one - &qn);
        sum = &sum + &term;
        qn = &qn * &q;
    }
    (&one + &sum.scale_i64(240)).powu(3)
}

/// `Delta(tau)`, certified relative to its size.
pub fn delta_eval(t: &ReducedTau, digits: u32) -> Result<HighPrecComplex, AnalyticError> {
    Ok(certified(digits, Agreement::Relative, |bits| {
        Ok(delta_at_bits(&t.tau, bits))
    })?)
}

/// `j(tau) Delta(tau) = E4(tau)^3`.
pub fn jdelta_eval(t: &ReducedTau, digits: u32) -> Result<HighPrecComplex, AnalyticError> {
    Ok(certified(digits, Agreement::Mixed, |bits| {
        Ok(jdelta_at_bits(&t.tau, bits))
    })?)
}

/// `j(tau)` through `E4^3 / Delta`.
pub fn j_eval(t: &ReducedTau, digits: u32) -> Result<HighPrecComplex, AnalyticError> {
    Ok(certified(digits, Agreement::Mixed, |bits| {
        Ok(j_at_bits(&t.tau, bits))
    })?)
}

pub(crate) fn j_at_bits(tau: &HighPrecComplex, bits: u32) -> HighPrecComplex {
    &jdelta_at_bits(tau, bits) / &delta_at_bits(tau, bits)
}

/// `|j(tau)| - (e^{2 pi Im tau} - 970.8)`.
pub fn j_lower_gap(t: &ReducedTau, digits: u32) -> Result<Float, AnalyticError> {
    let c = Rational::from((9708, 10));
    Ok(certified(digits, Agreement::Mixed, |bits| {
        let j = j_at_bits(&t.tau, bits).abs();
        let growth = (Float::with_val(bits, &t.tau.im) * pi(bits) * 2u32).exp();
        Ok(j - growth + &c)
    })?)
}

/// Right-hand side of the equation for `alpha`:
/// `2 exp(2 pi y) - 27 (1 + 8a)^3 / (a (1 - a)^3)` with
/// `y = 2F1(1/3, 2/3; 1; 1 - a) / (sqrt 3 * 2F1(1/3, 2/3; 1; a))`.
fn alpha_equation(alpha: &Float, bits: u32) -> Result<(Float, Float), NumericsError> {
    let third = Rational::from((1, 3));
    let two_thirds = Rational::from((2, 3));
    let one_q = Rational::from(1);
    let a = Float::with_val(bits, alpha);
    let ca = Float::with_val(bits, 1 - &a);
    let f_a = hyp2f1_at_bits(&third, &two_thirds, &one_q, &a, bits)?;
    let f_ca = hyp2f1_at_bits(&third, &two_thirds, &one_q, &ca, bits)?;
    let sqrt3 = Float::with_val(bits, 3).sqrt();
    let y = f_ca / f_a / &sqrt3;
    let lhs = (Float::with_val(bits, &y * pi(bits)) * 2u32).exp() * 2u32;
    let num = Float::with_val(bits, Float::with_val(bits, &a * 8u32) + 1u32).square()
        * (Float::with_val(bits, &a * 8u32) + 1u32)
        * 27u32;
    let den = Float::with_val(bits, &a * Float::with_val(bits, ca.square_ref()) * &ca);
    Ok((lhs - num / den, y))
}

fn solve_alpha_at_bits(bits: u32) -> Result<(Float, Float), NumericsError> {
    // Scan alpha = 1/2, 1/4, ... for the first positive value.
    let mut hi = Float::with_val(bits, 0.5);
    let (mut f_hi, _) = alpha_equation(&hi, bits)?;
    if f_hi >= 0 {
        return Err(NumericsError::DomainError("no bracket".into()));
    }
    let mut lo = Float::with_val(bits, 0.25);
    let mut f_lo;
    let mut k = 0;
    loop {
        f_lo = alpha_equation(&lo, bits)?.0;
        if f_lo > 0 {
            break;
        }
        k += 1;
        if k > 12 {
            return Err(NumericsError::DomainError("no bracket".into()));
        }
        hi = lo.clone();
        f_hi = f_lo;
        lo /= 2u32;
    }

    // Illinois variant of regula falsi on [lo, hi], f(lo) > 0 > f(hi).
    let mut tol = Float::with_val(bits, 2);
    tol.pow_assign(-((bits - 8) as i32));
    let mut side = 0i8;
    for _ in 0..(4 * bits) {
        let width = Float::with_val(bits, &hi - &lo);
        if width <= tol {
            break;
        }
        let mut x = Float::with_val(
            bits,
            &lo - Float::with_val(bits, &f_lo * &width) / Float::with_val(bits, &f_hi - &f_lo),
        );
        if !(x > lo && x < hi) {
            x = Float::with_val(bits, &lo + &hi) / 2u32;
        }
        let (fx, _) = alpha_equation(&x, bits)?;
        if fx.is_zero() {
            lo = x.clone();
            hi = x;
            break;
        }
        if fx > 0 {
            lo = x;
            f_lo = fx;
            if side == 1 {
                f_hi /= 2u32;
            }
            side = 1;
        } else {
            hi = x;
            f_hi = fx;
            if side == -1 {
                f_lo /= 2u32;
            }
            side = -1;
        }
    }
    let root = Float::with_val(bits, &lo + &hi) / 2u32;
    let (_, y) = alpha_equation(&root, bits)?;
    Ok((root, y))
}

/// Root `alpha_0` of the alpha equation in `(0, 1/2)` and the matching
/// `y_0`, for which `j(i y_0) = 2 e^{2 pi y_0}`.
pub fn solve_alpha0(digits: u32) -> Result<(Float, Float), AnalyticError> {
    certified(digits, Agreement::Mixed, solve_alpha_at_bits).map_err(|e| match e {
        NumericsError::DomainError(_) => AnalyticError::BracketFailure,
        e => e.into(),
    })
}

/// `24 sum_{n >= 1} -log(1 - e^{-pi sqrt(3) n})`.
pub fn tail_constant(digits: u32) -> Float {
    certified(digits, Agreement::Mixed, |bits| {
        let x = (-(Float::with_val(bits, 3).sqrt() * pi(bits))).exp();
        let mut eps = Float::with_val(bits, 2);
        eps.pow_assign(-(bits as i32));
        let mut sum = Float::with_val(bits, 0);
        let mut xn = x.clone();
        // -log(1 - t) <= t / (1 - t), and the tail is geometric in x.
        while xn > eps {
            sum -= Float::with_val(bits, 1 - &xn).ln();
            xn *= &x;
        }
        Ok(sum * 24u32)
    })
    .expect("alternating-free convergent sum")
}

/// A truncated Laurent series in `q` with integer coefficients:
/// `sum_k coeffs[k] q^(valuation + k) + O(q^(valuation + len))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    pub valuation: i64,
    pub coeffs: Vec<Integer>,
}

impl QExpansion {
    /// Number of retained powers of `q`.
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `q^e` (zero outside the stored window).
    pub fn coeff(&self, e: i64) -> Integer {
        let k = e - self.valuation;
        if k < 0 {
            return Integer::new();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// `E4 = 1 + 240 sum sigma_3(n) q^n`, `len` terms.
    pub fn e4(len: usize) -> Self {
        let mut coeffs = vec![Integer::new(); len];
        if len > 0 {
            coeffs[0] = Integer::from(1);
        }
        for d in 1..len {
            let d3 = Integer::from(d as u64).pow(3) * 240u32;
            for m in (d..len).step_by(d) {
                coeffs[m] += &d3;
            }
        }
        QExpansion {
            valuation: 0,
            coeffs,
        }
    }

    /// `Delta = q prod (1 - q^n)^24`, `len` terms starting at `q^1`.
    pub fn delta(len: usize) -> Self {
        let mut euler = vec![Integer::new(); len];
        if len > 0 {
            euler[0] = Integer::from(1);
        }
        for n in 1..len {
            for k in (n..len).rev() {
                let t = euler[k - n].clone();
                euler[k] -= t;
            }
        }
        let p = QExpansion {
            valuation: 0,
            coeffs: euler,
        }
        .pow(24);
        QExpansion {
            valuation: 1,
            coeffs: p.coeffs,
        }
    }

    /// `j = E4^3 / Delta`, `len` terms starting at `q^-1`.
    pub fn j(len: usize) -> Self {
        let e4_cubed = Self::e4(len).pow(3);
        let inv = QExpansion {
            valuation: 0,
            coeffs: Self::delta(len).coeffs,
        }
        .inverse();
        let prod = e4_cubed.mul(&inv);
        QExpansion {
            valuation: -1,
            coeffs: prod.coeffs,
        }
    }

    /// Truncated product; the result keeps the shorter of the two windows.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![Integer::new(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if *a == 0 {
                continue;
            }
            for (k, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + k] += Integer::from(a * b);
            }
        }
        QExpansion {
            valuation: self.valuation + other.valuation,
            coeffs: out,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QExpansion {
            valuation: 0,
            coeffs: {
                let mut c = vec![Integer::new(); self.coeffs.len()];
                if !c.is_empty() {
                    c[0] = Integer::from(1);
                }
                c
            },
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse of a series with valuation 0 and constant
    /// term 1.
    fn inverse(&self) -> Self {
        assert!(self.valuation == 0 && self.coeffs.first().map_or(false, |c| *c == 1));
        let len = self.coeffs.len();
        let mut out = vec![Integer::new(); len];
        out[0] = Integer::from(1);
        for n in 1..len {
            let mut s = Integer::new();
            for k in 1..=n {
                s += Integer::from(&self.coeffs[k] * &out[n - k]);
            }
            out[n] = -s;
        }
        QExpansion {
            valuation: 0,
            coeffs: out,
        }
    }

    /// Truncated sum at `q` (no tail estimate).
    pub fn eval(&self, q: &HighPrecComplex) -> HighPrecComplex {
        let bits = q.prec();
        let mut acc = HighPrecComplex::zero(bits);
        for c in self.coeffs.iter().rev() {
            acc = &acc * q;
            acc.re += c;
        }
        let lead = if self.valuation >= 0 {
            q.powu(self.valuation as u32)
        } else {
            q.powu((-self.valuation) as u32).recip()
        };
        &acc * &lead
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::bits_for_digits;

    fn c(re: f64, im: f64) -> HighPrecComplex {
        HighPrecComplex::from_f64(bits_for_digits(40), re, im)
    }

    fn reduced(re: f64, im: f64) -> ReducedTau {
        reduce_tau(&c(re, im)).unwrap()
    }

    fn rho() -> HighPrecComplex {
        let bits = bits_for_digits(40);
        HighPrecComplex::new(
            Float::with_val(bits, -0.5),
            Float::with_val(bits, 3).sqrt() / 2u32,
        )
    }

    #[test]
    fn reduction_examples() {
        let r = reduced(0.0, 1.0);
        assert_eq!(r.matrix, Sl2Matrix::identity());
        assert_eq!(r.tau, c(0.0, 1.0));

        let r = reduced(0.5, 0.5);
        assert!((&r.tau - &c(0.0, 1.0)).abs() < 1e-40);
        assert_eq!(r.matrix.det(), 1);

        let r = reduced(0.5, 2.0);
        assert_eq!(r.tau, c(-0.5, 2.0));
        assert_eq!(r.matrix, Sl2Matrix::from_i64s(1, -1, 0, 1));

        // unit circle, positive real part: inverted to the left half
        let bits = bits_for_digits(40);
        let z = HighPrecComplex::from_rational(
            bits,
            &Rational::from((7, 25)),
            &Rational::from((24, 25)),
        );
        let r = reduce_tau(&z).unwrap();
        let expect = HighPrecComplex::from_rational(
            bits,
            &Rational::from((-7, 25)),
            &Rational::from((24, 25)),
        );
        assert!((&r.tau - &expect).abs() < 1e-40);
    }

    #[test]
    fn matrix_reproduces_reduced_point() {
        let z = c(3.217, 0.0123);
        let r = reduce_tau(&z).unwrap();
        assert_eq!(r.matrix.det(), 1);
        assert!((&r.matrix.apply(&z) - &r.tau).abs() < 1e-30);
        assert!(r.tau.re.clone().abs() <= 0.5 && r.tau.norm() >= 1);
    }

    #[test]
    fn lower_half_plane_rejected() {
        assert_eq!(
            reduce_tau(&c(0.0, 0.0)),
            Err(AnalyticError::NotUpperHalfPlane)
        );
        assert_eq!(
            reduce_tau(&c(1.0, -2.0)),
            Err(AnalyticError::NotUpperHalfPlane)
        );
    }

    #[test]
    fn classical_coefficients_of_j() {
        let j = QExpansion::j(4);
        assert_eq!(j.coeff(-1), 1);
        assert_eq!(j.coeff(0), 744);
        assert_eq!(j.coeff(1), 196884);
        assert_eq!(j.coeff(2), 21493760);
        let d = QExpansion::delta(4);
        // Ramanujan tau: 1, -24, 252, -1472
        let taus: Vec<i64> = (1..=4).map(|e| d.coeff(e).to_i64().unwrap()).collect();
        assert_eq!(taus, vec![1, -24, 252, -1472]);
    }

    #[test]
    fn j_at_i_and_rho() {
        let j = j_eval(&reduced(0.0, 1.0), 40).unwrap();
        assert!((&j - &c(1728.0, 0.0)).abs() < 1e-35);
        let r = reduce_tau(&rho()).unwrap();
        assert!(j_eval(&r, 40).unwrap().abs() < 1e-35);
    }

    #[test]
    fn delta_is_positive_at_i_and_periodic() {
        let d = delta_eval(&reduced(0.0, 1.0), 40).unwrap();
        assert!(d.re > 0 && d.im.clone().abs() < 1e-50);
        // golden value: 50 factors of the product at 60 digits
        let bits = bits_for_digits(60);
        let q = (-(pi(bits) * 2u32)).exp();
        let mut p = Float::with_val(bits, 1);
        let mut qn = q.clone();
        for _ in 0..50 {
            p *= Float::with_val(bits, 1 - &qn);
            qn *= &q;
        }
        let golden = q * p.pow(24u32);
        assert!((d.re.clone() / golden - 1u32).abs() < 1e-38);

        let a = delta_eval(
            &ReducedTau {
                tau: c(0.25, 1.3),
                matrix: Sl2Matrix::identity(),
            },
            30,
        )
        .unwrap();
        let b = delta_eval(
            &ReducedTau {
                tau: c(1.25, 1.3),
                matrix: Sl2Matrix::identity(),
            },
            30,
        )
        .unwrap();
        assert!((&a - &b).abs() < Float::with_val(64, a.abs() * 1e-28));
    }

    #[test]
    fn j_times_q_tends_to_one() {
        let t = reduced(0.1, 10.0);
        let j = j_eval(&t, 40).unwrap();
        let q = nome(&t.tau, bits_for_digits(40));
        assert!((&(&j * &q) - &HighPrecComplex::one(64)).abs() < 1e-20);
        let jd = jdelta_eval(&t, 40).unwrap();
        let x = 240e3 * (-20.0 * std::f64::consts::PI).exp() * 2.0;
        let bound = x * (3.0 + 3.0 * x + x * x);
        assert!((&jd - &HighPrecComplex::one(64)).abs() <= bound);
    }

    #[test]
    fn jdelta_is_product() {
        let t = reduced(0.0, 1.0);
        let prod = &j_eval(&t, 40).unwrap() * &delta_eval(&t, 40).unwrap();
        assert!((&jdelta_eval(&t, 40).unwrap() - &prod).abs() < 1e-35);
    }

    #[test]
    fn series_matches_product_formula() {
        let t = reduced(0.31, 1.7);
        let bits = bits_for_digits(30);
        let q = nome(&t.tau, bits);
        let series = QExpansion::j(40).eval(&q);
        assert!((&series - &j_eval(&t, 30).unwrap()).abs() < 1e-20);
    }

    #[test]
    fn gap_examples() {
        let g = j_lower_gap(&reduced(0.0, 1.0), 30).unwrap();
        assert!((g.to_f64() - 2163.3).abs() < 0.1);
        // 970.8 - e^{pi sqrt 3}, with e^{pi sqrt 3} = 230.7645883...
        let g = j_lower_gap(&reduce_tau(&rho()).unwrap(), 30).unwrap();
        assert!((g.to_f64() - 740.0354).abs() < 1e-3);
    }

    #[test]
    fn alpha_root() {
        let (alpha, y) = solve_alpha0(20).unwrap();
        assert!(alpha > 0.027 && alpha < 0.028);
        let growth = (Float::with_val(128, &y) * pi(128) * 2u32).exp();
        assert!(growth <= 970.8);
        let bits = bits_for_digits(30);
        let t = reduce_tau(&HighPrecComplex::new(
            Float::with_val(bits, 0),
            Float::with_val(bits, &y),
        ))
        .unwrap();
        let j = j_eval(&t, 30).unwrap();
        assert!((j.re - growth * 2u32).abs() < 1e-6);
    }

    #[test]
    fn tail_constant_bounds() {
        let t = tail_constant(30);
        assert!(t > 0 && t <= Float::with_val(64, 1) / 9u32);
        let first = -24.0 * (1.0 - (-std::f64::consts::PI * 3f64.sqrt()).exp()).ln();
        assert!((first - 0.104228).abs() < 1e-6);
        assert!(t > first);
    }
}
