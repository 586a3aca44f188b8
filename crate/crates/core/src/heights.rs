//! Absolute logarithmic Weil height of rational and algebraic numbers.
//!
//! For an algebraic number with primitive minimal polynomial
//! `a_d x^d + ... + a_0` and conjugates `alpha_1, ..., alpha_d` the height is
//! `(log a_d + sum_i log max(1, |alpha_i|)) / d`, which equals the average of
//! `log max(1, |alpha|_v)` over all places.

use rug::{Float, Integer, Rational};
use thiserror::Error;

use crate::numerics::{
    bits_for_digits, certified, complex_roots, roots_at_bits, Agreement, HighPrecComplex,
    IntPolynomial, NumericsError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightError {
    #[error("minimal polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("root index {index} out of range for degree {degree}")]
    RootIndex { index: usize, degree: usize },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// An algebraic number given by its minimal polynomial and a choice of
/// complex root.
///
/// The polynomial is normalized on construction (content removed, positive
/// leading coefficient) and must be squarefree. Irreducibility is the
/// caller's responsibility; the height depends only on the polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicNumber {
    minpoly: IntPolynomial,
    root_index: usize,
    approx: HighPrecComplex,
}

impl AlgebraicNumber {
    /// `root_index` refers to the ordering of [`complex_roots`] (by real
    /// part, then imaginary part).
    pub fn new(
        minpoly: IntPolynomial,
        root_index: usize,
        digits: u32,
    ) -> Result<Self, HeightError> {
        let minpoly = minpoly.primitive_part();
        let degree = match minpoly.degree() {
            None => return Err(NumericsError::ZeroPolynomial.into()),
            Some(0) => return Err(HeightError::ConstantPolynomial),
            Some(d) => d,
        };
        if root_index >= degree {
            return Err(HeightError::RootIndex {
                index: root_index,
                degree,
            });
        }
        let roots = complex_roots(&minpoly, digits)?;
        Ok(AlgebraicNumber {
            approx: roots[root_index].clone(),
            minpoly,
            root_index,
        })
    }

    pub fn from_rational(r: &Rational) -> Self {
        let minpoly = IntPolynomial::new(vec![Integer::from(-r.numer()), r.denom().clone()]);
        let bits = bits_for_digits(0);
        AlgebraicNumber {
            minpoly,
            root_index: 0,
            approx: HighPrecComplex::from_rational(bits, r, &Rational::new()),
        }
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn approx(&self) -> &HighPrecComplex {
        &self.approx
    }

    /// The number itself when it is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.degree() != 1 {
            return None;
        }
        let c = self.minpoly.coeffs();
        Some(Rational::from((Integer::from(-&c[0]), c[1].clone())))
    }
}

/// `max(|numerator|, denominator)`; the height is its logarithm.
pub fn height_rational_arg(r: &Rational) -> Integer {
    let num = Integer::from(r.numer().abs_ref());
    num.max(r.denom().clone())
}

/// `h(p/q) = log max(|p|, q)`.
pub fn height_rational(r: &Rational, digits: u32) -> Float {
    let bits = bits_for_digits(digits);
    Float::with_val(bits, &height_rational_arg(r)).ln()
}

/// Weil height of an algebraic number, certified to `digits` digits.
pub fn height_algebraic(alpha: &AlgebraicNumber, digits: u32) -> Result<Float, HeightError> {
    if let Some(r) = alpha.as_rational() {
        return Ok(height_rational(&r, digits));
    }
    Ok(certified(digits, Agreement::Mixed, |bits| {
        mahler_height_at_bits(&alpha.minpoly, bits)
    })?)
}

fn mahler_height_at_bits(p: &IntPolynomial, bits: u32) -> Result<Float, NumericsError> {
    let roots = roots_at_bits(p, bits)?;
    let d = roots.len() as u32;
    let lead = p.leading().ok_or(NumericsError::ZeroPolynomial)?;
    let mut log_mahler = Float::with_val(bits, lead).ln();
    for r in &roots {
        let m = r.abs();
        if m > 1 {
            log_mahler += m.ln();
        }
    }
    Ok(log_mahler / d)
}
