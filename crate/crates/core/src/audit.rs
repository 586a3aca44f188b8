//! Runs the built-in corpus through every height inequality.

use rug::Float;
use thiserror::Error;

use crate::bounds::{
    h_nu_window, im_tau_window, period_ratio_bound, raynaud_bound, silverman_window,
    thm_bound_refined, thm_bound_uniform, BoundReport, Verdict,
};
use crate::curves::{
    corpus, cyclic_subgroup, CurveError, HeightReport, SubgroupData, WeierstrassCurveQ,
};
use crate::heights::height_rational;
use crate::velu::{velu_height_check, velu_quotient, VeluError};

/// Prime isogeny degrees taken from the rational torsion of corpus curves.
pub const AUDIT_DEGREES: [u64; 3] = [2, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("{label}: {source}")]
    Curve { label: String, source: CurveError },
    #[error("{label}: {source}")]
    Velu { label: String, source: VeluError },
}

/// A source curve, its quotient by a rational cyclic subgroup and the degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeluPair {
    pub label: String,
    pub source: WeierstrassCurveQ,
    pub subgroup: SubgroupData,
    pub target: WeierstrassCurveQ,
    pub degree: u64,
}

/// Quotients of corpus curves by their rational subgroups of order 2, 3, 5.
pub fn corpus_velu_pairs() -> Result<Vec<VeluPair>, AuditError> {
    let mut out = Vec::new();
    for e in corpus() {
        let Some((p, n)) = e.generator() else {
            continue;
        };
        let curve = e.curve();
        for l in AUDIT_DEGREES {
            if n % l != 0 {
                continue;
            }
            let wrap = |source| AuditError::Curve {
                label: e.label.to_string(),
                source,
            };
            let q = curve.mul((n / l) as i64, &p);
            let g = cyclic_subgroup(&curve, &q, l).map_err(wrap)?;
            let (target, _) = velu_quotient(&curve, &g).map_err(|source| AuditError::Velu {
                label: e.label.to_string(),
                source,
            })?;
            out.push(VeluPair {
                label: format!("{}/C{l}", e.label),
                source: curve.clone(),
                subgroup: g,
                target,
                degree: l,
            });
        }
    }
    Ok(out)
}

/// One report per inequality and curve (or pair), with the pass rule of
/// [`BoundReport::upper`].
pub fn corpus_audit(digits: u32) -> Result<Vec<BoundReport>, AuditError> {
    let mut out = Vec::new();
    for e in corpus() {
        let curve = e.curve();
        let r = HeightReport::new(&curve, digits).map_err(|source| AuditError::Curve {
            label: e.label.to_string(),
            source,
        })?;
        let h_j = height_rational(curve.j_invariant(), digits);
        let bits = h_j.prec();
        let twelfth = Float::with_val(bits, &h_j / 12u32);
        let key = Float::with_val(bits, &twelfth - &r.h_nu);
        let sil = Float::with_val(bits, &twelfth - &r.faltings);
        let half_log_im = Float::with_val(bits, &r.tau.tau.im).ln() / 2u32;
        let hj = h_j.to_f64();
        let (klo, khi) = h_nu_window();
        let (slo, shi) = silverman_window(hj);
        let (tlo, thi) = im_tau_window(hj);
        let name = |s: &str| format!("{} {s}", e.label);
        out.push(BoundReport::lower(&name("h_nu window lower"), &key, klo));
        out.push(BoundReport::upper(&name("h_nu window upper"), &key, khi));
        out.push(BoundReport::lower(
            &name("faltings window lower"),
            &sil,
            slo,
        ));
        out.push(BoundReport::upper(
            &name("faltings window upper"),
            &sil,
            shi,
        ));
        out.push(BoundReport::lower(
            &name("im tau window lower"),
            &half_log_im,
            tlo,
        ));
        out.push(BoundReport::upper(
            &name("im tau window upper"),
            &half_log_im,
            thi,
        ));
    }
    for pair in corpus_velu_pairs()? {
        out.extend(pair_reports(&pair, digits)?);
    }
    Ok(out)
}

fn pair_reports(pair: &VeluPair, digits: u32) -> Result<Vec<BoundReport>, AuditError> {
    let curve_err = |source| AuditError::Curve {
        label: pair.label.clone(),
        source,
    };
    let r1 = HeightReport::new(&pair.source, digits).map_err(curve_err)?;
    let r2 = HeightReport::new(&pair.target, digits).map_err(curve_err)?;
    let h1 = height_rational(pair.source.j_invariant(), digits);
    let h2 = height_rational(pair.target.j_invariant(), digits);
    let bits = h1.prec();
    let l = pair.degree;
    let name = |s: &str| format!("{} {s}", pair.label);
    let mut out = Vec::new();

    let dh_f = Float::with_val(bits, &r1.faltings - &r2.faltings).abs();
    out.push(BoundReport::upper(
        &name("raynaud"),
        &dh_f,
        raynaud_bound(l),
    ));

    let dh = Float::with_val(bits, &h1 - &h2);
    let dh_abs = Float::with_val(bits, dh.abs_ref());
    out.push(BoundReport::upper(
        &name("j gap uniform"),
        &dh_abs,
        thm_bound_uniform(l),
    ));
    // the refined bound in both directions (the dual isogeny has the same degree)
    out.push(BoundReport::upper(
        &name("j gap refined"),
        &dh,
        thm_bound_refined(l, h1.to_f64()),
    ));
    let back = Float::with_val(bits, -&dh);
    out.push(BoundReport::upper(
        &name("j gap refined dual"),
        &back,
        thm_bound_refined(l, h2.to_f64()),
    ));

    let ratio = Float::with_val(bits, &r1.tau.tau.im) / Float::with_val(bits, &r2.tau.tau.im);
    let log_ratio = ratio.ln().abs();
    out.push(BoundReport::upper(
        &name("period ratio"),
        &log_ratio,
        period_ratio_bound(l),
    ));

    let v = velu_height_check(&pair.source, &pair.subgroup, digits).map_err(|source| {
        AuditError::Velu {
            label: pair.label.clone(),
            source,
        }
    })?;
    let observed = Float::with_val(bits, &v.h_j - &v.h_j_quotient).abs();
    out.push(BoundReport::upper(
        &name("velu j gap"),
        &observed,
        v.bound.to_f64(),
    ));
    for r in &mut out {
        r.inputs.push(("degree".into(), l.to_string()));
    }
    Ok(out)
}

/// Number of reports with verdict [`Verdict::Pass`].
pub fn passed(reports: &[BoundReport]) -> usize {
    reports
        .iter()
        .filter(|r| r.verdict == Verdict::Pass)
        .count()
}
