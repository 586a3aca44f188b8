use std::fmt;

use rug::{Integer, Rational};

use super::HighPrecComplex;

/// Univariate polynomial with integer coefficients, constant term first.
///
/// Trailing zero coefficients are always stripped, so the last stored
/// coefficient is the leading one and the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().map_or(false, |c| *c == 0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The linear polynomial `x - root`.
    pub fn linear(root: &Integer) -> Self {
        Self::new(vec![Integer::from(-root), Integer::from(1)])
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Integer {
        self.coeffs.iter().fold(Integer::new(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().map_or(false, |l| *l < 0) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| Integer::from(c / &g)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Integer::from(c * i as u64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Integer::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Pseudo-remainder of `self` by `divisor` (`divisor` nonzero).
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lead;
            }
            let shift = top - dd;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[shift + k] -= Integer::from(&t * dc);
            }
            while r.last().map_or(false, |c| *c == 0) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Primitive gcd over `Z[x]` (positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// True when the polynomial has no repeated complex root.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Horner evaluation at the precision of `z`.
    pub fn eval_complex(&self, z: &HighPrecComplex) -> HighPrecComplex {
        let bits = z.prec();
        let mut acc = HighPrecComplex::zero(bits);
        for c in self.coeffs.iter().rev() {
            acc = &acc * z;
            acc.re += c;
        }
        acc
    }

    /// Value and derivative at `z` in one Horner pass.
    pub fn eval_with_derivative(&self, z: &HighPrecComplex) -> (HighPrecComplex, HighPrecComplex) {
        let bits = z.prec();
        let mut p = HighPrecComplex::zero(bits);
        let mut dp = HighPrecComplex::zero(bits);
        for c in self.coeffs.iter().rev() {
            dp = &(&dp * z) + &p;
            p = &p * z;
            p.re += c;
        }
        (p, dp)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let mag = Integer::from(c.abs_ref());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag == 1) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}
