//! Arbitrary-precision arithmetic shared by every other module.
//!
//! Rationals and integers are GMP values re-exported from [`rug`]; reals are
//! MPFR floats. Every exported analytic value goes through [`certified`]:
//! the computation is run at `p` and `2p` bits and the two results must agree
//! to the requested number of decimal digits before the value is returned.

mod complex;
mod hyper;
mod poly;
mod roots;

use rug::float::Round;
use rug::ops::PowAssign;
use rug::Float;
use thiserror::Error;

pub use complex::HighPrecComplex;
pub use hyper::{hyp2f1, hyp2f1_at_bits};
pub use poly::IntPolynomial;
pub use roots::{complex_roots, roots_at_bits};

/// Exact rational numbers (always in lowest terms with positive denominator).
pub type BigRational = rug::Rational;
/// Arbitrary-precision integers.
pub type BigInt = rug::Integer;

/// Smallest working precision, in decimal digits, that any operation accepts.
pub const MIN_DIGITS: u32 = 15;
/// Extra bits carried on top of the requested decimal precision.
pub const GUARD_BITS: u32 = 32;
/// How many times [`certified`] doubles the precision before giving up.
pub const MAX_DOUBLINGS: u32 = 4;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericsError {
    #[error("the zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("polynomial has repeated roots (gcd(p, p') is nontrivial)")]
    RepeatedRoots,
    #[error("could not reach {digits} correct digits")]
    PrecisionUnreachable { digits: u32 },
    #[error("argument outside the domain: {0}")]
    DomainError(String),
    #[error("series tail could not be certified: {0}")]
    Divergence(String),
}

/// Working precision in bits for `digits` correct decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    let digits = digits.max(MIN_DIGITS);
    (f64::from(digits) * LOG2_10).ceil() as u32 + GUARD_BITS
}

/// Number of decimal digits that `bits` of mantissa carry once the guard is
/// removed.
pub fn digits_for_bits(bits: u32) -> u32 {
    (f64::from(bits.saturating_sub(GUARD_BITS)) / LOG2_10).floor() as u32
}

/// `10^(-digits)` as a float with `bits` of precision.
pub fn ten_pow_neg(digits: u32, bits: u32) -> Float {
    let mut t = Float::with_val(bits, 10);
    t.pow_assign(-(digits as i32));
    t
}

/// How two runs of a computation are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    /// `|lo - hi| <= 10^-digits * |hi|`; for quantities that can be tiny
    /// (such as the discriminant function far up the half plane).
    Relative,
    /// `|lo - hi| <= 10^-digits * max(1, |hi|)`; for quantities that can
    /// vanish (such as `j` at the cube root of unity).
    Mixed,
}

/// Values that can be compared across two precisions.
pub trait Certifiable: Sized {
    /// True when `self` (low precision run) agrees with `hi` to `digits`.
    fn agrees_with(&self, hi: &Self, digits: u32, mode: Agreement) -> bool;
    /// Round to `bits` of precision.
    fn rounded(self, bits: u32) -> Self;
}

pub(crate) fn close(lo: &Float, hi: &Float, digits: u32, mode: Agreement) -> bool {
    if !lo.is_finite() || !hi.is_finite() {
        return false;
    }
    let bits = hi.prec().max(lo.prec());
    let diff = Float::with_val(bits, lo - hi).abs();
    let mut scale = Float::with_val(bits, hi.abs_ref());
    if mode == Agreement::Mixed && scale < 1 {
        scale = Float::with_val(bits, 1);
    }
    diff <= scale * ten_pow_neg(digits, bits)
}

impl Certifiable for Float {
    fn agrees_with(&self, hi: &Self, digits: u32, mode: Agreement) -> bool {
        close(self, hi, digits, mode)
    }
    fn rounded(self, bits: u32) -> Self {
        Float::with_val_round(bits, &self, Round::Nearest).0
    }
}

impl Certifiable for HighPrecComplex {
    fn agrees_with(&self, hi: &Self, digits: u32, mode: Agreement) -> bool {
        let bits = hi.prec().max(self.prec());
        let diff = (self - hi).abs();
        let mut scale = hi.abs();
        if !diff.is_finite() || !scale.is_finite() {
            return false;
        }
        if mode == Agreement::Mixed && scale < 1 {
            scale = Float::with_val(bits, 1);
        }
        diff <= scale * ten_pow_neg(digits, bits)
    }
    fn rounded(self, bits: u32) -> Self {
        self.with_prec(bits)
    }
}

impl<A: Certifiable, B: Certifiable> Certifiable for (A, B) {
    fn agrees_with(&self, hi: &Self, digits: u32, mode: Agreement) -> bool {
        self.0.agrees_with(&hi.0, digits, mode) && self.1.agrees_with(&hi.1, digits, mode)
    }
    fn rounded(self, bits: u32) -> Self {
        (self.0.rounded(bits), self.1.rounded(bits))
    }
}

impl<T: Certifiable> Certifiable for Vec<T> {
    fn agrees_with(&self, hi: &Self, digits: u32, mode: Agreement) -> bool {
        self.len() == hi.len()
            && self
                .iter()
                .zip(hi)
                .all(|(a, b)| a.agrees_with(b, digits, mode))
    }
    fn rounded(self, bits: u32) -> Self {
        self.into_iter().map(|v| v.rounded(bits)).collect()
    }
}

/// Runs `eval` at `p` and `2p` bits (with `p = bits_for_digits(digits)`) and
/// returns the high-precision result rounded to `p` bits once both agree to
/// `digits` decimal digits. Disagreement, or a `PrecisionUnreachable` error
/// from `eval`, doubles `p`, at most [`MAX_DOUBLINGS`] times.
pub fn certified<T, F>(digits: u32, mode: Agreement, mut eval: F) -> Result<T, NumericsError>
where
    T: Certifiable,
    F: FnMut(u32) -> Result<T, NumericsError>,
{
    let digits = digits.max(MIN_DIGITS);
    let out_bits = bits_for_digits(digits);
    let mut bits = out_bits;
    for _ in 0..=MAX_DOUBLINGS {
        let attempt = eval(bits).and_then(|lo| eval(2 * bits).map(|hi| (lo, hi)));
        match attempt {
            Ok((lo, hi)) if lo.agrees_with(&hi, digits, mode) => return Ok(hi.rounded(out_bits)),
            Ok(_) | Err(NumericsError::PrecisionUnreachable { .. }) => bits *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(NumericsError::PrecisionUnreachable { digits })
}

/// `pi` with `bits` of precision.
pub fn pi(bits: u32) -> Float {
    Float::with_val(bits, rug::float::Constant::Pi)
}

/// Natural logarithm of a positive integer.
pub fn ln_integer(n: &BigInt, bits: u32) -> Float {
    Float::with_val(bits, n).ln()
}

/// Decimal rendering with `digits` significant digits, without exponent
/// notation when the value is of moderate size.
pub fn format_float(x: &Float, digits: u32) -> String {
    let digits = digits.max(1) as usize;
    if x.is_zero() {
        return "0".to_string();
    }
    let s = x.to_string_radix(10, Some(digits));
    // MPFR prints "d.ddde+N"; expand the exponent when it is small.
    let (mantissa, exp) = match s.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => return trim_zeros(&s),
    };
    if !(-30..=60).contains(&exp) {
        return s;
    }
    let negative = mantissa.starts_with('-');
    let body: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let int_len = mantissa
        .trim_start_matches('-')
        .find('.')
        .unwrap_or(body.len()) as i64
        + exp;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if int_len <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat('0').take((-int_len) as usize));
        out.push_str(&body);
    } else if int_len as usize >= body.len() {
        out.push_str(&body);
        out.extend(std::iter::repeat('0').take(int_len as usize - body.len()));
    } else {
        out.push_str(&body[..int_len as usize]);
        out.push('.');
        out.push_str(&body[int_len as usize..]);
    }
    trim_zeros(&out)
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_grow_with_digits() {
        assert_eq!(bits_for_digits(1), bits_for_digits(MIN_DIGITS));
        assert!(bits_for_digits(40) >= 133 + GUARD_BITS);
        assert!(digits_for_bits(bits_for_digits(40)) >= 40);
    }

    #[test]
    fn certified_returns_agreeing_value() {
        let v = certified(30, Agreement::Mixed, |bits| {
            Ok(Float::with_val(bits, 2).sqrt())
        })
        .unwrap();
        let expect = Float::with_val(300, 2).sqrt();
        assert!(close(&v, &expect, 30, Agreement::Relative));
    }

    #[test]
    fn certified_rejects_unstable_values() {
        // Depends on the precision itself, so never agrees across runs.
        let r = certified(20, Agreement::Mixed, |bits| Ok(Float::with_val(bits, bits)));
        assert_eq!(r, Err(NumericsError::PrecisionUnreachable { digits: 20 }));
    }

    #[test]
    fn formatting() {
        let x = Float::with_val(128, 2).ln();
        assert_eq!(format_float(&x, 12), "0.69314718056");
        assert_eq!(format_float(&Float::with_val(64, 1728), 10), "1728");
        assert_eq!(format_float(&Float::with_val(64, -0.125), 10), "-0.125");
        assert_eq!(format_float(&Float::with_val(64, 0), 10), "0");
    }
}
