//! Explicit height inequalities for isogenous curves and the isogeny
//! exclusion test built on them.
//!
//! The formulas carry constants with three or four significant digits, so
//! they are evaluated in `f64`; the heights fed into them are certified MPFR
//! values.

use std::fmt;
use std::str::FromStr;

use rug::Float;
use thiserror::Error;

use crate::heights::{height_algebraic, AlgebraicNumber, HeightError};
use crate::numerics::format_float;

/// Total rounding budget a strict inequality must clear before it counts.
pub const ROUNDING_BUDGET: f64 = 1e-6;

/// `#GL_2(Z/12Z)`: a degree over which every curve over the rationals
/// acquires semistable reduction.
pub const SEMISTABLE_DEGREE_PRESET: u64 = 4608;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("unknown case {0:?} (expected generic-semistable, cm or real-embedding-no-cm)")]
    UnknownCase(String),
    #[error("argument outside the domain: {0}")]
    DomainError(String),
    #[error(transparent)]
    Height(#[from] HeightError),
}

/// Which of the three minimal-degree estimates applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundCase {
    GenericSemistable,
    Cm,
    RealEmbeddingNoCm,
}

impl BoundCase {
    pub const ALL: [BoundCase; 3] = [
        BoundCase::GenericSemistable,
        BoundCase::Cm,
        BoundCase::RealEmbeddingNoCm,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundCase::GenericSemistable => "generic-semistable",
            BoundCase::Cm => "cm",
            BoundCase::RealEmbeddingNoCm => "real-embedding-no-cm",
        }
    }
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundCase {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generic-semistable" | "generic" => Ok(BoundCase::GenericSemistable),
            "cm" | "CM" => Ok(BoundCase::Cm),
            "real-embedding-no-cm" | "real-no-cm" => Ok(BoundCase::RealEmbeddingNoCm),
            _ => Err(BoundError::UnknownCase(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    PossiblyIsogenous,
    NotIsogenous,
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::PossiblyIsogenous => "PossiblyIsogenous",
            Verdict::NotIsogenous => "NotIsogenous",
            Verdict::Pass => "Pass",
            Verdict::Fail => "Fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `9.204 + 12 log deg`.
pub fn thm_bound_uniform(deg: u64) -> f64 {
    9.204 + 12.0 * (deg as f64).ln()
}

/// `10.68 + 6 log deg + 6 log(1 + h(j1))`, an upper bound for
/// `h(j1) - h(j2)` in terms of the source curve only.
pub fn thm_bound_refined(deg: u64, h_j1: f64) -> f64 {
    10.68 + 6.0 * (deg as f64).ln() + 6.0 * (1.0 + h_j1).ln()
}

/// Upper bound for the least degree of an isogeny between curves over a
/// field of degree `d`, given the Faltings height `h_f` of either curve.
pub fn gr_min_degree_bound(d: u64, h_f: f64, case: BoundCase) -> f64 {
    let df = d as f64;
    let ld = df.ln();
    match case {
        BoundCase::GenericSemistable => 1e7 * df * df * (h_f.max(985.0) + 4.0 * ld).powi(2),
        BoundCase::Cm => 34000.0 * df * df * (h_f + 0.5 * ld).max(1.0).powi(2),
        BoundCase::RealEmbeddingNoCm => 3583.0 * df * df * h_f.max(ld).max(1.0).powi(2),
    }
}

/// Bound on `|h(j1) - h(j2)|` for isogenous curves over a field of degree `d`
/// with `big_m = max(h(j1), h(j2))` and `small_m = min(h(j1), h(j2))`.
pub fn corollary_gap_bound(d: u64, big_m: f64, small_m: f64, case: BoundCase) -> f64 {
    let df = d as f64;
    let ld = df.ln();
    let head = 6.0 * (1.0 + big_m).ln();
    match case {
        BoundCase::GenericSemistable => {
            77.6 + head + 12.0 * (df * (small_m - 14.16).max(11820.0) + 48.0 * df * ld).ln()
        }
        BoundCase::Cm => 43.5 + head + 12.0 * (df * (small_m - 14.16 + 6.0 * ld).max(12.0)).ln(),
        BoundCase::RealEmbeddingNoCm => {
            30.0 + head + 12.0 * (df * (small_m - 14.16).max(12.0 * ld).max(12.0)).ln()
        }
    }
}

/// `(1.18, 2.08 + log(1 + h(j)) / 2)`: the window for `h(j)/12 - h_F(E)`.
pub fn silverman_window(h_j: f64) -> (f64, f64) {
    (1.18, 2.08 + 0.5 * (1.0 + h_j).ln())
}

/// `(-0.583, 0.184)`: the window for `h(j)/12 - h_nu(E)`.
pub fn h_nu_window() -> (f64, f64) {
    (-0.583, 0.184)
}

/// Window for `(1/2) log Im tau` of a reduced period ratio:
/// `((1/2) log(sqrt 3 / 2), (1/2) log(1 + h(j)) + 0.97 - (1/2) log 2 pi)`.
pub fn im_tau_window(h_j: f64) -> (f64, f64) {
    let tau = std::f64::consts::TAU;
    (
        0.5 * (3f64.sqrt() / 2.0).ln(),
        0.5 * (1.0 + h_j).ln() + 0.97 - 0.5 * tau.ln(),
    )
}

/// `(1/2) log deg`: the largest change of Faltings height along an isogeny.
pub fn raynaud_bound(deg: u64) -> f64 {
    0.5 * (deg as f64).ln()
}

/// `log deg`: the largest value of `|log(Im tau1 / Im tau2)|` along an
/// isogeny.
pub fn period_ratio_bound(deg: u64) -> f64 {
    (deg as f64).ln()
}

/// One inequality with its inputs, bound, observation and verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub label: String,
    /// `(name, value)` pairs echoed as decimal strings.
    pub inputs: Vec<(String, String)>,
    pub bound: f64,
    pub observed: Option<Float>,
    /// Positive when the verdict is robust: `bound - observed` for an upper
    /// bound, `observed - bound` for a lower bound or an exclusion.
    pub margin: Option<f64>,
    pub verdict: Verdict,
}

impl BoundReport {
    /// `observed <= bound`, passing only with a margin above the rounding
    /// budget.
    pub fn upper(label: &str, observed: &Float, bound: f64) -> Self {
        let margin = bound - observed.to_f64();
        Self::checked(label, observed, bound, margin)
    }

    /// `observed >= bound`, same margin rule as [`BoundReport::upper`].
    pub fn lower(label: &str, observed: &Float, bound: f64) -> Self {
        let margin = observed.to_f64() - bound;
        Self::checked(label, observed, bound, margin)
    }

    fn checked(label: &str, observed: &Float, bound: f64, margin: f64) -> Self {
        BoundReport {
            label: label.to_string(),
            inputs: Vec::new(),
            bound,
            observed: Some(observed.clone()),
            margin: Some(margin),
            verdict: if margin > ROUNDING_BUDGET {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        }
    }

    pub fn with_input(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.inputs.push((name.to_string(), value.to_string()));
        self
    }

    /// `{"inputs": {...}, "bound": "...", "observed": "...", "verdict": "...",
    /// "margin": "..."}`.
    pub fn to_json(&self, digits: u32) -> serde_json::Value {
        let inputs: serde_json::Map<String, serde_json::Value> = self
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let mut out = serde_json::json!({
            "label": self.label,
            "inputs": inputs,
            "bound": format_f64(self.bound),
            "verdict": self.verdict.as_str(),
        });
        if let Some(o) = &self.observed {
            out["observed"] = format_float(o, digits).into();
        }
        if let Some(m) = self.margin {
            out["margin"] = format_f64(m).into();
        }
        out
    }
}

/// Shortest round-trip decimal form of an `f64`.
pub fn format_f64(x: f64) -> String {
    format!("{x:?}")
}

/// Applies the height-gap bound to `j1, j2` over a field of degree `d`.
///
/// The verdict is `NotIsogenous` only when `|h(j1) - h(j2)|` exceeds the
/// bound by more than [`ROUNDING_BUDGET`]; the margin reported is
/// `observed - bound`.
pub fn isogeny_feasibility(
    j1: &AlgebraicNumber,
    j2: &AlgebraicNumber,
    d: u64,
    case: BoundCase,
    digits: u32,
) -> Result<BoundReport, BoundError> {
    if d == 0 {
        return Err(BoundError::DomainError(
            "field degree must be at least 1".into(),
        ));
    }
    let h1 = height_algebraic(j1, digits)?;
    let h2 = height_algebraic(j2, digits)?;
    let bits = h1.prec().max(h2.prec());
    let observed = Float::with_val(bits, &h1 - &h2).abs();
    let big_m = if h1 >= h2 { h1.clone() } else { h2.clone() };
    let small_m = if h1 >= h2 { h2.clone() } else { h1.clone() };
    let bound = corollary_gap_bound(d, big_m.to_f64(), small_m.to_f64(), case);
    let margin = observed.to_f64() - bound;
    let verdict = if margin > ROUNDING_BUDGET {
        Verdict::NotIsogenous
    } else {
        Verdict::PossiblyIsogenous
    };
    Ok(BoundReport {
        label: "isogeny-feasibility".into(),
        inputs: vec![
            ("h_j1".into(), format_float(&h1, digits)),
            ("h_j2".into(), format_float(&h2, digits)),
            ("M".into(), format_float(&big_m, digits)),
            ("m".into(), format_float(&small_m, digits)),
            ("d".into(), d.to_string()),
            ("case".into(), case.to_string()),
        ],
        bound,
        observed: Some(observed),
        margin: Some(margin),
        verdict,
    })
}
