//! Gauss hypergeometric series on `[0, 1)`.

use rug::ops::PowAssign;
use rug::{Float, Rational};

use super::{certified, Agreement, NumericsError};

/// Hard cap on the number of series terms before giving up.
const MAX_TERMS: u64 = 2_000_000;

/// `2F1(a, b; c; x)` for `0 <= x < 1`, certified to `digits` digits.
pub fn hyp2f1(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    x: &Float,
    digits: u32,
) -> Result<Float, NumericsError> {
    check_domain(c, x)?;
    certified(digits, Agreement::Mixed, |bits| {
        hyp2f1_at_bits(a, b, c, x, bits)
    })
}

fn check_domain(c: &Rational, x: &Float) -> Result<(), NumericsError> {
    if *c.denom() == 1 && *c <= 0 {
        return Err(NumericsError::DomainError(format!(
            "c = {c} is a nonpositive integer"
        )));
    }
    if !x.is_finite() || *x < 0 || *x >= 1 {
        return Err(NumericsError::DomainError(format!(
            "x = {x} is outside [0, 1)"
        )));
    }
    Ok(())
}

/// Partial sums with a geometric tail bound: once `c + n > 0`, every later
/// term ratio is at most
/// `rho = x * max(1, (|a|+n)/(c+n)) * max(1, (|b|+n)/(n+1))`, so the
/// remainder after `n` terms is at most `|t_n| / (1 - rho)`.
pub fn hyp2f1_at_bits(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    x: &Float,
    bits: u32,
) -> Result<Float, NumericsError> {
    check_domain(c, x)?;
    let x = Float::with_val(bits, x);
    let fa = Float::with_val(bits, a);
    let fb = Float::with_val(bits, b);
    let fc = Float::with_val(bits, c);
    let abs_a = Float::with_val(bits, fa.abs_ref());
    let abs_b = Float::with_val(bits, fb.abs_ref());

    let mut eps = Float::with_val(bits, 2);
    eps.pow_assign(-(bits as i32));

    let mut sum = Float::with_val(bits, 0);
    let mut term = Float::with_val(bits, 1);
    let mut n: u64 = 0;
    while n < MAX_TERMS {
        if term.is_zero() {
            return Ok(sum);
        }
        sum += &term;
        // next term t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1)) x
        let an = Float::with_val(bits, &fa + n);
        let bn = Float::with_val(bits, &fb + n);
        let cn = Float::with_val(bits, &fc + n);
        term *= an;
        term *= bn;
        term /= cn;
        term /= n + 1;
        term *= &x;
        n += 1;

        let cn = Float::with_val(bits, &fc + n);
        if cn > 0 {
            let ra = Float::with_val(bits, &abs_a + n) / &cn;
            let rb = Float::with_val(bits, &abs_b + n) / (n + 1);
            let one = Float::with_val(bits, 1);
            let rho = Float::with_val(bits, &x * ra.max(&one)) * rb.max(&one);
            if rho < 1 {
                let tail = Float::with_val(bits, term.abs_ref()) / (1 - rho);
                let scale = Float::with_val(bits, sum.abs_ref()).max(&one);
                if tail <= Float::with_val(bits, &eps * &scale) {
                    return Ok(sum);
                }
            }
        }
    }
    Err(NumericsError::Divergence(format!(
        "no certified tail after {MAX_TERMS} terms at x = {}",
        x.to_f64()
    )))
}
