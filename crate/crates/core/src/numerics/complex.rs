use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::{Assign, Float, Rational};

use super::{digits_for_bits, format_float, MIN_DIGITS};

/// A complex number with MPFR real and imaginary parts.
///
/// Binary operations work at the larger of the two operand precisions, so
/// precision is never silently dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct HighPrecComplex {
    pub re: Float,
    pub im: Float,
}

fn min_bits() -> u32 {
    super::bits_for_digits(MIN_DIGITS)
}

impl HighPrecComplex {
    pub fn new(re: Float, im: Float) -> Self {
        let bits = re.prec().max(im.prec()).max(min_bits());
        HighPrecComplex {
            re: Float::with_val(bits, re),
            im: Float::with_val(bits, im),
        }
    }

    pub fn from_f64(bits: u32, re: f64, im: f64) -> Self {
        let bits = bits.max(min_bits());
        HighPrecComplex {
            re: Float::with_val(bits, re),
            im: Float::with_val(bits, im),
        }
    }

    pub fn from_rational(bits: u32, re: &Rational, im: &Rational) -> Self {
        let bits = bits.max(min_bits());
        HighPrecComplex {
            re: Float::with_val(bits, re),
            im: Float::with_val(bits, im),
        }
    }

    pub fn from_real(x: Float) -> Self {
        let bits = x.prec().max(min_bits());
        HighPrecComplex {
            re: Float::with_val(bits, x),
            im: Float::new(bits),
        }
    }

    pub fn zero(bits: u32) -> Self {
        Self::from_f64(bits, 0.0, 0.0)
    }

    pub fn one(bits: u32) -> Self {
        Self::from_f64(bits, 1.0, 0.0)
    }

    pub fn i(bits: u32) -> Self {
        Self::from_f64(bits, 0.0, 1.0)
    }

    /// Working precision in bits.
    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Decimal digits carried beyond the guard bits.
    pub fn digits(&self) -> u32 {
        digits_for_bits(self.prec())
    }

    pub fn with_prec(&self, bits: u32) -> Self {
        let bits = bits.max(min_bits());
        HighPrecComplex {
            re: Float::with_val(bits, &self.re),
            im: Float::with_val(bits, &self.im),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        HighPrecComplex {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    /// Squared modulus.
    pub fn norm(&self) -> Float {
        let bits = self.prec();
        Float::with_val(bits, self.re.square_ref()) + Float::with_val(bits, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn scale(&self, k: &Float) -> Self {
        let bits = self.prec().max(k.prec());
        HighPrecComplex {
            re: Float::with_val(bits, &self.re * k),
            im: Float::with_val(bits, &self.im * k),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let bits = self.prec();
        HighPrecComplex {
            re: Float::with_val(bits, &self.re * k),
            im: Float::with_val(bits, &self.im * k),
        }
    }

    pub fn recip(&self) -> Self {
        let bits = self.prec();
        let n = self.norm();
        HighPrecComplex {
            re: Float::with_val(bits, &self.re / &n),
            im: Float::with_val(bits, -Float::with_val(bits, &self.im / &n)),
        }
    }

    pub fn exp(&self) -> Self {
        let bits = self.prec();
        let r = Float::with_val(bits, self.re.exp_ref());
        let (s, c) = self.im.clone().sin_cos(Float::new(bits));
        HighPrecComplex {
            re: Float::with_val(bits, &r * &c),
            im: Float::with_val(bits, &r * &s),
        }
    }

    /// Principal square root (branch cut on the negative real axis).
    pub fn sqrt(&self) -> Self {
        let bits = self.prec();
        if self.is_zero() {
            return Self::zero(bits);
        }
        let r = self.abs();
        if self.re >= 0 {
            let t = (Float::with_val(bits, &r + &self.re) / 2u32).sqrt();
            let im = Float::with_val(bits, &self.im / &t) / 2u32;
            HighPrecComplex { re: t, im }
        } else {
            let t = (Float::with_val(bits, &r - &self.re) / 2u32).sqrt();
            let re = Float::with_val(bits, self.im.abs_ref()) / &t / 2u32;
            let im = if self.im.is_sign_negative() { -t } else { t };
            HighPrecComplex { re, im }
        }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let bits = self.prec();
        HighPrecComplex {
            re: self.abs().ln(),
            im: Float::with_val(bits, self.im.atan2_ref(&self.re)),
        }
    }

    pub fn powu(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prec());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `acc += a * b` without intermediate allocations beyond two temporaries.
    pub fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let bits = self.prec();
        let mut t = Float::with_val(bits, &a.re * &b.re);
        t -= Float::with_val(bits, &a.im * &b.im);
        self.re += &t;
        t.assign(&a.re * &b.im);
        t += Float::with_val(bits, &a.im * &b.re);
        self.im += &t;
    }

    pub fn format(&self, digits: u32) -> String {
        let re = format_float(&self.re, digits);
        let im = format_float(&self.im, digits);
        if im.starts_with('-') {
            format!("{re} - {}i", &im[1..])
        } else {
            format!("{re} + {im}i")
        }
    }
}

impl fmt::Display for HighPrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(self.digits().max(1)))
    }
}

impl<'a> Add<&'a HighPrecComplex> for &'a HighPrecComplex {
    type Output = HighPrecComplex;
    fn add(self, rhs: &HighPrecComplex) -> HighPrecComplex {
        let bits = self.prec().max(rhs.prec());
        HighPrecComplex {
            re: Float::with_val(bits, &self.re + &rhs.re),
            im: Float::with_val(bits, &self.im + &rhs.im),
        }
    }
}

impl<'a> Sub<&'a HighPrecComplex> for &'a HighPrecComplex {
    type Output = HighPrecComplex;
    fn sub(self, rhs: &HighPrecComplex) -> HighPrecComplex {
        let bits = self.prec().max(rhs.prec());
        HighPrecComplex {
            re: Float::with_val(bits, &self.re - &rhs.re),
            im: Float::with_val(bits, &self.im - &rhs.im),
        }
    }
}

impl<'a> Mul<&'a HighPrecComplex> for &'a HighPrecComplex {
    type Output = HighPrecComplex;
    fn mul(self, rhs: &HighPrecComplex) -> HighPrecComplex {
        let mut out = HighPrecComplex::zero(self.prec().max(rhs.prec()));
        out.add_mul_assign(self, rhs);
        out
    }
}

impl<'a> Div<&'a HighPrecComplex> for &'a HighPrecComplex {
    type Output = HighPrecComplex;
    fn div(self, rhs: &HighPrecComplex) -> HighPrecComplex {
        let bits = self.prec().max(rhs.prec());
        let n = rhs.with_prec(bits).norm();
        let re =
            Float::with_val(bits, &self.re * &rhs.re) + Float::with_val(bits, &self.im * &rhs.im);
        let im =
            Float::with_val(bits, &self.im * &rhs.re) - Float::with_val(bits, &self.re * &rhs.im);
        HighPrecComplex {
            re: re / &n,
            im: im / &n,
        }
    }
}

impl Neg for &HighPrecComplex {
    type Output = HighPrecComplex;
    fn neg(self) -> HighPrecComplex {
        HighPrecComplex {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<HighPrecComplex> for HighPrecComplex {
            type Output = HighPrecComplex;
            fn $m(self, rhs: HighPrecComplex) -> HighPrecComplex { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a HighPrecComplex> for HighPrecComplex {
            type Output = HighPrecComplex;
            fn $m(self, rhs: &HighPrecComplex) -> HighPrecComplex { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for HighPrecComplex {
    type Output = HighPrecComplex;
    fn neg(self) -> HighPrecComplex {
        -&self
    }
}
