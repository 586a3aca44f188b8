//! Weierstrass curves over the rationals.
//!
//! Curves are given in the general form
//! `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.

mod corpus;
mod group;
mod minimal;
mod period;

use std::fmt;

use rug::{Integer, Rational};
use thiserror::Error;

use crate::analytic::AnalyticError;
use crate::numerics::NumericsError;

pub use corpus::{corpus, CorpusCurve};
pub use group::{cyclic_subgroup, group_law, CurvePoint, SubgroupData};
pub use minimal::{minimal_discriminant, minimal_model, MinimalModel};
pub use period::{alpha_pair, curve_tau, faltings_height, h_nu, HeightReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("singular curve (discriminant is zero)")]
    SingularCurve,
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("point does not have exact order {expected}")]
    WrongOrder { expected: u64 },
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("could not parse rational {0:?}")]
    Parse(String),
    #[error("no period lattice basis reproduces j = {0}")]
    TauMismatch(String),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// A Weierstrass curve with its standard invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurveQ {
    a: [Rational; 5],
    b2: Rational,
    b4: Rational,
    b6: Rational,
    b8: Rational,
    c4: Rational,
    c6: Rational,
    disc: Rational,
    j: Rational,
}

/// Builds the curve `[a1, a2, a3, a4, a6]`.
pub fn curve_invariants(a: [Rational; 5]) -> Result<WeierstrassCurveQ, CurveError> {
    WeierstrassCurveQ::new(a)
}

impl WeierstrassCurveQ {
    pub fn new(a: [Rational; 5]) -> Result<Self, CurveError> {
        let [a1, a2, a3, a4, a6] = &a;
        let b2 = Rational::from(a1 * a1) + Rational::from(a2 * 4u32);
        let b4 = Rational::from(a1 * a3) + Rational::from(a4 * 2u32);
        let b6 = Rational::from(a3 * a3) + Rational::from(a6 * 4u32);
        let b8 = Rational::from(a1 * a1) * a6 + Rational::from(a2 * 4u32) * a6
            - Rational::from(a1 * a3) * a4
            + Rational::from(a3 * a3) * a2
            - Rational::from(a4 * a4);
        let c4 = Rational::from(&b2 * &b2) - Rational::from(&b4 * 24u32);
        let c6 = -Rational::from(&b2 * &b2) * &b2 + Rational::from(&b2 * &b4) * 36u32
            - Rational::from(&b6 * 216u32);
        let disc = -Rational::from(&b2 * &b2) * &b8
            - Rational::from(&b4 * &b4) * &b4 * 8u32
            - Rational::from(&b6 * &b6) * 27u32
            + Rational::from(&b2 * &b4) * &b6 * 9u32;
        if disc == 0 {
            return Err(CurveError::SingularCurve);
        }
        let j = Rational::from(&c4 * &c4) * &c4 / &disc;
        Ok(WeierstrassCurveQ {
            a,
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
            j,
        })
    }

    pub fn from_i64s(a: [i64; 5]) -> Result<Self, CurveError> {
        Self::new(a.map(Rational::from))
    }

    /// Parses five strings of the form `"p/q"` or `"p"`.
    pub fn from_strs<S: AsRef<str>>(a: &[S]) -> Result<Self, CurveError> {
        if a.len() != 5 {
            return Err(CurveError::Parse(format!(
                "expected 5 coefficients, got {}",
                a.len()
            )));
        }
        let mut out: [Rational; 5] = Default::default();
        for (slot, s) in out.iter_mut().zip(a) {
            *slot = parse_rational(s.as_ref())?;
        }
        Self::new(out)
    }

    /// Coefficients as `"p/q"` strings (integers without a denominator).
    pub fn to_strings(&self) -> [String; 5] {
        self.a.clone().map(|r| r.to_string())
    }

    pub fn a_invariants(&self) -> &[Rational; 5] {
        &self.a
    }
    pub fn a1(&self) -> &Rational {
        &self.a[0]
    }
    pub fn a2(&self) -> &Rational {
        &self.a[1]
    }
    pub fn a3(&self) -> &Rational {
        &self.a[2]
    }
    pub fn a4(&self) -> &Rational {
        &self.a[3]
    }
    pub fn a6(&self) -> &Rational {
        &self.a[4]
    }
    pub fn b2(&self) -> &Rational {
        &self.b2
    }
    pub fn b4(&self) -> &Rational {
        &self.b4
    }
    pub fn b6(&self) -> &Rational {
        &self.b6
    }
    pub fn b8(&self) -> &Rational {
        &self.b8
    }
    pub fn c4(&self) -> &Rational {
        &self.c4
    }
    pub fn c6(&self) -> &Rational {
        &self.c6
    }
    pub fn discriminant(&self) -> &Rational {
        &self.disc
    }
    pub fn j_invariant(&self) -> &Rational {
        &self.j
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| *c.denom() == 1)
    }

    /// The curve obtained by `x = u^2 x'`, `y = u^3 y'`, i.e. `a_i / u^i`.
    pub fn scale(&self, u: &Rational) -> Self {
        let mut out = self.a.clone();
        for (c, e) in out.iter_mut().zip([1u32, 2, 3, 4, 6]) {
            for _ in 0..e {
                *c /= u;
            }
        }
        Self::new(out).expect("scaling preserves nonsingularity")
    }
}

impl fmt::Display for WeierstrassCurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        write!(f, "[{a1}, {a2}, {a3}, {a4}, {a6}]")
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CurveError> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: Integer = n
            .trim()
            .parse()
            .map_err(|_| CurveError::Parse(s.to_string()))?;
        let d: Integer = d
            .trim()
            .parse()
            .map_err(|_| CurveError::Parse(s.to_string()))?;
        if d == 0 {
            return Err(CurveError::Parse(s.to_string()));
        }
        return Ok(Rational::from((n, d)));
    }
    t.parse::<Integer>()
        .map(Rational::from)
        .map_err(|_| CurveError::Parse(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_of_small_curves() {
        let e = WeierstrassCurveQ::from_i64s([0, 0, 0, 1, 0]).unwrap();
        assert_eq!(*e.discriminant(), -64);
        assert_eq!(*e.j_invariant(), 1728);
        let e = WeierstrassCurveQ::from_i64s([0, -1, 1, 0, 0]).unwrap();
        assert_eq!(*e.discriminant(), -11);
        assert_eq!(*e.j_invariant(), Rational::from((-4096, 11)));
        assert_eq!(
            WeierstrassCurveQ::from_i64s([0; 5]),
            Err(CurveError::SingularCurve)
        );
    }

    #[test]
    fn short_form_discriminant() {
        // y^2 = x^3 + A x + B has D = -16 (4A^3 + 27B^2), j = -1728 (4A)^3 / D
        for (a, b) in [(1i64, 0i64), (-7, 6), (3, -5), (0, 1)] {
            let e = WeierstrassCurveQ::from_i64s([0, 0, 0, a, b]).unwrap();
            let d = -16 * (4 * a * a * a + 27 * b * b);
            assert_eq!(*e.discriminant(), d);
            assert_eq!(
                *e.j_invariant(),
                Rational::from((-1728 * (4 * a).pow(3), d))
            );
        }
    }

    #[test]
    fn c4_c6_identity() {
        let e = WeierstrassCurveQ::from_i64s([1, -1, 1, -1, -14]).unwrap();
        let lhs = Rational::from(e.c4() * e.c4()) * e.c4() - Rational::from(e.c6() * e.c6());
        assert_eq!(lhs, Rational::from(e.discriminant() * 1728u32));
    }

    #[test]
    fn scaling_and_parsing() {
        let e = WeierstrassCurveQ::from_i64s([0, -1, 1, 0, 0]).unwrap();
        let s = e.scale(&Rational::from((1, 2)));
        assert_eq!(s, WeierstrassCurveQ::from_i64s([0, -4, 8, 0, 0]).unwrap());
        assert_eq!(s.j_invariant(), e.j_invariant());
        let p = WeierstrassCurveQ::from_strs(&["0", "-1", "1", "3/6", "-2/1"]).unwrap();
        assert_eq!(*p.a4(), Rational::from((1, 2)));
        assert_eq!(p.to_strings()[3], "1/2");
        assert!(matches!(parse_rational("1/0"), Err(CurveError::Parse(_))));
        assert!(matches!(parse_rational("x"), Err(CurveError::Parse(_))));
    }
}
