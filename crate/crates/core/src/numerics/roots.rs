//! Simultaneous root extraction (Aberth–Ehrlich iteration).

use std::cmp::Ordering;

use rug::ops::PowAssign;
use rug::Float;

use super::{certified, Agreement, HighPrecComplex, IntPolynomial, NumericsError, GUARD_BITS};

/// Precision of the first, cheap, Aberth pass.
const COARSE_BITS: u32 = 96;
const MAX_ITERATIONS: usize = 600;

/// All complex roots of a squarefree polynomial, certified to `digits`
/// decimal digits and sorted by real part, then imaginary part.
pub fn complex_roots(
    p: &IntPolynomial,
    digits: u32,
) -> Result<Vec<HighPrecComplex>, NumericsError> {
    check_input(p)?;
    certified(digits, Agreement::Mixed, |bits| roots_at_bits(p, bits))
}

fn check_input(p: &IntPolynomial) -> Result<(), NumericsError> {
    if p.is_zero() {
        return Err(NumericsError::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(NumericsError::RepeatedRoots);
    }
    Ok(())
}

/// Uncertified roots at a fixed working precision. The caller is
/// responsible for squarefreeness; a nonconvergent run reports
/// `PrecisionUnreachable` so that [`certified`] can retry.
pub fn roots_at_bits(p: &IntPolynomial, bits: u32) -> Result<Vec<HighPrecComplex>, NumericsError> {
    check_input(p)?;
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    let unreachable = || NumericsError::PrecisionUnreachable {
        digits: super::digits_for_bits(bits),
    };
    if n == 1 {
        let c = p.coeffs();
        let r = -Float::with_val(bits, &c[0]) / &c[1];
        return Ok(vec![HighPrecComplex::from_real(r)]);
    }

    let mut z = initial_points(p, COARSE_BITS.min(bits));
    aberth(p, &mut z, COARSE_BITS.min(bits));
    let mut z: Vec<HighPrecComplex> = z.iter().map(|r| r.with_prec(bits)).collect();
    if !aberth(p, &mut z, bits) {
        return Err(unreachable());
    }

    // A-posteriori residual: Newton step below half the working resolution.
    // Callers certify accuracy by comparing two precisions.
    let tol = {
        let mut t = Float::with_val(bits, 2);
        t.pow_assign(-((bits / 2) as i32));
        t
    };
    for r in &z {
        let (v, d) = p.eval_with_derivative(r);
        if d.is_zero() {
            return Err(unreachable());
        }
        let step = (&v / &d).abs();
        let mut scale = r.abs();
        if scale < 1 {
            scale = Float::with_val(bits, 1);
        }
        if !step.is_finite() || step > Float::with_val(bits, &tol * &scale) * (n as u32) {
            return Err(unreachable());
        }
    }
    sort_roots(&mut z, bits);
    Ok(z)
}

/// Equally spaced points on the circle whose radius is the geometric mean of
/// the root moduli, rotated off the real axis.
fn initial_points(p: &IntPolynomial, bits: u32) -> Vec<HighPrecComplex> {
    let c = p.coeffs();
    let n = c.len() - 1;
    let a0 = Float::with_val(bits, &c[0]).abs();
    let an = Float::with_val(bits, &c[n]).abs();
    let radius = if a0.is_zero() {
        Float::with_val(bits, 1)
    } else {
        ((a0 / an).ln() / (n as u32)).exp()
    };
    let tau = super::pi(bits) * 2u32;
    (0..n)
        .map(|k| {
            let angle = Float::with_val(bits, &tau * (k as u32)) / (n as u32) + 0.4f64;
            let (s, co) = angle.sin_cos(Float::new(bits));
            HighPrecComplex::new(
                Float::with_val(bits, &radius * &co),
                Float::with_val(bits, &radius * &s),
            )
        })
        .collect()
}

/// Gauss–Seidel Aberth iteration; true on convergence.
fn aberth(p: &IntPolynomial, z: &mut [HighPrecComplex], bits: u32) -> bool {
    let n = z.len();
    let mut tol = Float::with_val(bits, 2);
    tol.pow_assign(-((bits - GUARD_BITS / 2) as i32));
    // Below this, a step that fails to halve is rounding noise amplified by
    // the conditioning of clustered roots.
    let mut floor = Float::with_val(bits, 2);
    floor.pow_assign(-((bits / 2) as i32));
    let one = HighPrecComplex::one(bits);
    let mut last = Float::with_val(bits, f64::INFINITY);
    for _ in 0..MAX_ITERATIONS {
        let mut worst = Float::with_val(bits, 0);
        for k in 0..n {
            let (v, d) = p.eval_with_derivative(&z[k]);
            if v.is_zero() {
                continue;
            }
            let w = &v / &d;
            let mut s = HighPrecComplex::zero(bits);
            for j in 0..n {
                if j != k {
                    s = &s + &(&z[k] - &z[j]).recip();
                }
            }
            let denom = &one - &(&w * &s);
            let step = &w / &denom;
            if !step.is_finite() {
                // Perturb a colliding pair off each other deterministically.
                let nudge = HighPrecComplex::from_f64(bits, 1e-3 * (k as f64 + 1.0), 1e-3);
                z[k] = &z[k] + &nudge;
                worst = Float::with_val(bits, f64::INFINITY);
                continue;
            }
            let mut scale = z[k].abs();
            if scale < 1 {
                scale = Float::with_val(bits, 1);
            }
            let rel = step.abs() / scale;
            if rel > worst {
                worst = rel;
            }
            z[k] = &z[k] - &step;
        }
        if worst <= tol || (worst <= floor && worst > Float::with_val(bits, &last / 2u32)) {
            return true;
        }
        last = worst;
    }
    false
}

/// Deterministic ordering: real parts compared at a resolution well above
/// rounding noise (so conjugate pairs tie), then imaginary parts.
fn sort_roots(z: &mut [HighPrecComplex], bits: u32) {
    let mut eps = Float::with_val(bits, 2);
    eps.pow_assign(-((bits / 2) as i32));
    z.sort_by(|a, b| {
        let diff = Float::with_val(bits, &a.re - &b.re);
        let mut scale =
            Float::with_val(bits, a.re.abs_ref()).max(&Float::with_val(bits, b.re.abs_ref()));
        if scale < 1 {
            scale = Float::with_val(bits, 1);
        }
        if Float::with_val(bits, diff.abs_ref()) <= Float::with_val(bits, &eps * &scale) {
            a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal)
        } else {
            diff.partial_cmp(&Float::new(bits))
                .unwrap_or(Ordering::Equal)
        }
    });
}
