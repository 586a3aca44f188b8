//! Period lattices, Faltings height and the modified height.

use rug::ops::PowAssign;
use rug::{Float, Integer, Rational};

use super::{minimal_discriminant, CurveError, WeierstrassCurveQ};
use crate::analytic::{delta_at_bits, j_at_bits, j_eval, reduce_tau, ReducedTau};
use crate::numerics::{
    bits_for_digits, certified, pi, roots_at_bits, ten_pow_neg, Agreement, HighPrecComplex,
    IntPolynomial, NumericsError,
};

const AGM_MAX_STEPS: usize = 400;

/// `4x^3 + b2 x^2 + 2 b4 x + b6` with denominators cleared; its roots are
/// the x-coordinates of the 2-torsion points.
fn two_division_polynomial(curve: &WeierstrassCurveQ) -> IntPolynomial {
    let coeffs = [
        curve.b6().clone(),
        Rational::from(curve.b4() * 2u32),
        curve.b2().clone(),
        Rational::from(4),
    ];
    let mut l = Integer::from(1);
    for c in &coeffs {
        l.lcm_mut(c.denom());
    }
    IntPolynomial::new(
        coeffs
            .iter()
            .map(|c| Integer::from(c.numer() * Integer::from(&l / c.denom())))
            .collect(),
    )
}

/// Arithmetic-geometric mean with the optimal sign choice at every step.
/// Stops at relative agreement `2^-(bits-16)`, or once the gap has stopped
/// shrinking below `2^-(bits/2)` (rounding noise).
fn agm(a: &HighPrecComplex, b: &HighPrecComplex, bits: u32) -> Option<HighPrecComplex> {
    let tol = two_pow(bits, -((bits - 16) as i32));
    let coarse = two_pow(bits, -((bits / 2) as i32));
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut last_gap: Option<Float> = None;
    for _ in 0..AGM_MAX_STEPS {
        if a.is_zero() || !a.is_finite() {
            return None;
        }
        let gap = (&a - &b).abs() / a.abs();
        if gap <= tol {
            return Some(a);
        }
        if let Some(prev) = &last_gap {
            if gap <= coarse && gap >= *prev {
                return Some(a);
            }
        }
        last_gap = Some(gap);
        let mean = (&a + &b).scale(&Float::with_val(bits, 0.5));
        let mut geo = (&a * &b).sqrt();
        if (&mean - &geo).abs() > (&mean + &geo).abs() {
            geo = -geo;
        }
        a = mean;
        b = geo;
    }
    None
}

fn two_pow(bits: u32, e: i32) -> Float {
    let mut t = Float::with_val(bits, 2);
    t.pow_assign(e);
    t
}

/// Reduced tau at a fixed precision. Root orderings and square-root signs
/// are tried in a fixed order until the lattice reproduces `j`.
fn tau_at_bits(curve: &WeierstrassCurveQ, bits: u32) -> Result<HighPrecComplex, NumericsError> {
    let roots = roots_at_bits(&two_division_polynomial(curve), bits)?;
    let target = HighPrecComplex::from_rational(bits, curve.j_invariant(), &Rational::new());
    let mut tol = two_pow(bits, -((bits / 2) as i32));
    tol *= target.abs().max(&Float::with_val(bits, 1));
    let pi_c = HighPrecComplex::from_real(pi(bits));
    let i_pi = HighPrecComplex::new(Float::new(bits), pi(bits));
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for [i1, i2, i3] in PERMS {
        let (e1, e2, e3) = (&roots[i1], &roots[i2], &roots[i3]);
        let a = (e1 - e3).sqrt();
        let b = (e1 - e2).sqrt();
        let c = (e2 - e3).sqrt();
        for (sb, sc) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let (Some(m1), Some(m2)) = (
                agm(&a, &b.scale_i64(sb), bits),
                agm(&a, &c.scale_i64(sc), bits),
            ) else {
                continue;
            };
            for numerator in [&i_pi, &pi_c] {
                let w1 = &pi_c / &m1;
                let w2 = numerator / &m2;
                let mut tau = &w2 / &w1;
                if !tau.is_finite() || Float::with_val(bits, tau.im.abs_ref()) < tol {
                    continue;
                }
                if tau.im < 0 {
                    tau = -tau;
                }
                let Ok(r) = reduce_tau(&tau) else { continue };
                if (&j_at_bits(&r.tau, bits) - &target).abs() <= tol {
                    return Ok(r.tau);
                }
            }
        }
    }
    Err(NumericsError::PrecisionUnreachable {
        digits: crate::numerics::digits_for_bits(bits),
    })
}

/// Reduced period ratio of the curve's lattice, checked against the
/// algebraic j-invariant: `|j(tau) - j| <= 10^(-digits+10) max(1, |j|)`.
pub fn curve_tau(curve: &WeierstrassCurveQ, digits: u32) -> Result<ReducedTau, CurveError> {
    let tau = certified(digits, Agreement::Mixed, |bits| tau_at_bits(curve, bits))
        .map_err(|_| CurveError::TauMismatch(curve.j_invariant().to_string()))?;
    let reduced = reduce_tau(&tau)?;
    let bits = bits_for_digits(digits);
    let j = j_eval(&reduced, digits)?;
    let target = HighPrecComplex::from_rational(bits, curve.j_invariant(), &Rational::new());
    let scale = target.abs().max(&Float::with_val(bits, 1));
    let tol = ten_pow_neg(digits.saturating_sub(10), bits) * scale;
    if (&j - &target).abs() > tol {
        return Err(CurveError::TauMismatch(curve.j_invariant().to_string()));
    }
    Ok(reduced)
}

/// Everything needed for the height comparisons of one curve.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightReport {
    pub tau: ReducedTau,
    pub minimal_discriminant: Integer,
    /// `(1/12) log|D_min| - log 2pi - (1/12) log|Delta(tau)| - (1/2) log Im tau`.
    pub faltings: Float,
    /// `h_F + (1/2) log Im tau + log 2pi`.
    pub h_nu: Float,
}

impl HeightReport {
    pub fn new(curve: &WeierstrassCurveQ, digits: u32) -> Result<Self, CurveError> {
        let tau = curve_tau(curve, digits + 10)?;
        let dmin = minimal_discriminant(curve);
        let (faltings, h_nu) = certified(digits, Agreement::Mixed, |bits| {
            let log_d = Float::with_val(bits, &dmin).abs().ln() / 12u32;
            let log_delta = delta_at_bits(&tau.tau, bits).abs().ln() / 12u32;
            let log_2pi = (pi(bits) * 2u32).ln();
            let half_log_im = Float::with_val(bits, &tau.tau.im).ln() / 2u32;
            let h_nu = Float::with_val(bits, &log_d - &log_delta);
            let h_f = Float::with_val(bits, &h_nu - &log_2pi) - half_log_im;
            Ok((h_f, h_nu))
        })?;
        Ok(HeightReport {
            tau,
            minimal_discriminant: dmin,
            faltings,
            h_nu,
        })
    }
}

/// Faltings height of the curve via its minimal discriminant and period
/// lattice. For curves with additive reduction this is the value for the
/// given model over the rationals, not the stable height.
pub fn faltings_height(curve: &WeierstrassCurveQ, digits: u32) -> Result<Float, CurveError> {
    Ok(HeightReport::new(curve, digits)?.faltings)
}

pub fn h_nu(curve: &WeierstrassCurveQ, digits: u32) -> Result<Float, CurveError> {
    Ok(HeightReport::new(curve, digits)?.h_nu)
}

/// `(1/2) log(Im tau_1 / Im tau_2)`.
pub fn alpha_pair(
    e1: &WeierstrassCurveQ,
    e2: &WeierstrassCurveQ,
    digits: u32,
) -> Result<Float, CurveError> {
    let t1 = curve_tau(e1, digits + 10)?;
    let t2 = curve_tau(e2, digits + 10)?;
    Ok(certified(digits, Agreement::Mixed, |bits| {
        let r = Float::with_val(bits, &t1.tau.im) / Float::with_val(bits, &t2.tau.im);
        Ok(r.ln() / 2u32)
    })?)
}
