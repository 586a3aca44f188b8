//! Quotient isogenies `E -> E/G` for finite rational subgroups.
//!
//! With `S = R + F2` and, for `Q = (x_Q, y_Q)` in `S`,
//!
//! ```text
//! gx_Q = 3 x_Q^2 + 2 a2 x_Q + a4 - a1 y_Q
//! gy_Q = -2 y_Q - a1 x_Q - a3
//! u_Q  = gy_Q^2 = 4 x_Q^3 + b2 x_Q^2 + 2 b4 x_Q + b6
//! t_Q  = gx_Q                 (Q of order 2)
//!      = 6 x_Q^2 + b2 x_Q + b4 (otherwise)
//! ```
//!
//! the quotient is `[a1, a2, a3, a4 - 5t, a6 - b2 t - 7w]` with `t = sum t_Q`
//! and `w = sum (u_Q + x_Q t_Q)`.

use rug::{Float, Rational};
use thiserror::Error;

use crate::curves::{CurveError, CurvePoint, SubgroupData, WeierstrassCurveQ};
use crate::heights::height_rational;

/// Constant term of the bound `|h(j_E) - h(j_{E/G})| <= 9.204 + 12 log #G`.
pub const J_HEIGHT_CONSTANT: f64 = 9.204;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VeluError {
    #[error("point lies in the kernel and maps to O")]
    KernelPoint,
    #[error("quotient model is singular")]
    SingularQuotient,
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Intermediate quantities for one point of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeluTerm {
    pub point: CurvePoint,
    pub gx: Rational,
    pub gy: Rational,
    pub u: Rational,
    pub t: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeluPointData {
    pub terms: Vec<VeluTerm>,
    pub t: Rational,
    pub w: Rational,
}

fn check_subgroup(curve: &WeierstrassCurveQ, g: &SubgroupData) -> Result<(), CurveError> {
    let elems = g.elements(curve);
    if elems.len() as u64 != g.order {
        return Err(CurveError::InvalidSubgroup(
            "order does not match the listed points".into(),
        ));
    }
    for p in &elems {
        if !curve.contains(p) {
            return Err(CurveError::PointNotOnCurve(p.to_string()));
        }
    }
    for q in &g.f2 {
        if curve.negate(q) != *q {
            return Err(CurveError::InvalidSubgroup(format!(
                "{q} is not of order 2"
            )));
        }
    }
    for p in &elems {
        for q in &elems {
            if !g.contains(curve, &curve.add(p, q)) {
                return Err(CurveError::InvalidSubgroup(format!("{p} + {q} is missing")));
            }
        }
    }
    Ok(())
}

fn terms(curve: &WeierstrassCurveQ, g: &SubgroupData) -> VeluPointData {
    let [a1, a2, a3, a4, _] = curve.a_invariants();
    let (b2, b4, b6) = (curve.b2(), curve.b4(), curve.b6());
    let mut out = Vec::new();
    let mut t = Rational::new();
    let mut w = Rational::new();
    let order_two = |q: &CurvePoint| g.f2.contains(q);
    for q in g.s() {
        let CurvePoint::Affine(x, y) = q else {
            continue;
        };
        let x2 = Rational::from(x * x);
        let gx = Rational::from(&x2 * 3u32) + Rational::from(a2 * x) * 2u32 + a4
            - Rational::from(a1 * y);
        let gy = -Rational::from(y * 2u32) - Rational::from(a1 * x) - a3;
        let u = Rational::from(&x2 * x) * 4u32
            + Rational::from(b2 * &x2)
            + Rational::from(b4 * x) * 2u32
            + b6;
        let tq = if order_two(q) {
            gx.clone()
        } else {
            Rational::from(&x2 * 6u32) + Rational::from(b2 * x) + b4
        };
        t += &tq;
        w += Rational::from(&u + Rational::from(x * &tq));
        out.push(VeluTerm {
            point: q.clone(),
            gx,
            gy,
            u,
            t: tq,
        });
    }
    VeluPointData { terms: out, t, w }
}

/// The quotient curve `E/G` and the per-point data used to build it.
pub fn velu_quotient(
    curve: &WeierstrassCurveQ,
    g: &SubgroupData,
) -> Result<(WeierstrassCurveQ, VeluPointData), VeluError> {
    check_subgroup(curve, g)?;
    let data = terms(curve, g);
    let [a1, a2, a3, a4, a6] = curve.a_invariants().clone();
    let new_a4 = a4 - Rational::from(&data.t * 5u32);
    let new_a6 = a6 - Rational::from(curve.b2() * &data.t) - Rational::from(&data.w * 7u32);
    let quotient = WeierstrassCurveQ::new([a1, a2, a3, new_a4, new_a6]).map_err(|e| match e {
        CurveError::SingularCurve => VeluError::SingularQuotient,
        e => e.into(),
    })?;
    Ok((quotient, data))
}

/// Image of `p` under the quotient map, as a point of the curve returned by
/// [`velu_quotient`].
pub fn velu_image(
    curve: &WeierstrassCurveQ,
    g: &SubgroupData,
    p: &CurvePoint,
) -> Result<CurvePoint, VeluError> {
    if !curve.contains(p) {
        return Err(CurveError::PointNotOnCurve(p.to_string()).into());
    }
    check_subgroup(curve, g)?;
    if g.contains(curve, p) {
        return Err(VeluError::KernelPoint);
    }
    let CurvePoint::Affine(x, y) = p else {
        unreachable!("O lies in every subgroup")
    };
    let [a1, _, a3, _, _] = curve.a_invariants();
    let data = terms(curve, g);
    let mut big_x = x.clone();
    let mut big_y = y.clone();
    let lift = Rational::from(y * 2u32) + Rational::from(a1 * x) + a3;
    for term in &data.terms {
        let CurvePoint::Affine(xq, yq) = &term.point else {
            continue;
        };
        let d = Rational::from(x - xq);
        let d2 = Rational::from(&d * &d);
        let d3 = Rational::from(&d2 * &d);
        big_x += Rational::from(&term.t / &d) + Rational::from(&term.u / &d2);
        let v = Rational::from(&term.u * &lift) / &d3
            + Rational::from(&term.t * (Rational::from(a1 * &d) + y - yq)) / &d2
            + (Rational::from(a1 * &term.u) - Rational::from(&term.gx * &term.gy)) / &d2;
        big_y -= v;
    }
    Ok(CurvePoint::Affine(big_x, big_y))
}

#[derive(Debug, Clone, PartialEq)]
pub struct VeluHeightReport {
    pub h_j: Float,
    pub h_j_quotient: Float,
    pub bound: Float,
    pub pass: bool,
}

impl VeluHeightReport {
    /// `bound - |h(j_E) - h(j_{E/G})|`.
    pub fn margin(&self) -> Float {
        let diff = Float::with_val(self.bound.prec(), &self.h_j - &self.h_j_quotient).abs();
        Float::with_val(self.bound.prec(), &self.bound - diff)
    }
}

/// Compares `|h(j_E) - h(j_{E/G})|` with `9.204 + 12 log #G`.
pub fn velu_height_check(
    curve: &WeierstrassCurveQ,
    g: &SubgroupData,
    digits: u32,
) -> Result<VeluHeightReport, VeluError> {
    let (quotient, _) = velu_quotient(curve, g)?;
    let h_j = height_rational(curve.j_invariant(), digits);
    let h_j_quotient = height_rational(quotient.j_invariant(), digits);
    let bits = h_j.prec();
    let bound = Float::with_val(bits, g.order).ln() * 12u32
        + Float::with_val(bits, Rational::from((9204, 1000)));
    let diff = Float::with_val(bits, &h_j - &h_j_quotient).abs();
    let pass = diff <= bound;
    Ok(VeluHeightReport {
        h_j,
        h_j_quotient,
        bound,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::cyclic_subgroup;

    fn curve(a: [i64; 5]) -> WeierstrassCurveQ {
        WeierstrassCurveQ::from_i64s(a).unwrap()
    }

    #[test]
    fn trivial_subgroup_is_identity() {
        let e = curve([0, -1, 1, 0, 0]);
        let g = cyclic_subgroup(&e, &CurvePoint::Infinity, 1).unwrap();
        let (q, data) = velu_quotient(&e, &g).unwrap();
        assert_eq!(q, e);
        assert_eq!(data.t, 0);
        let r = velu_height_check(&e, &g, 30).unwrap();
        assert!(r.pass && r.h_j == r.h_j_quotient);
    }

    #[test]
    fn two_isogeny_of_y2_x3_plus_x() {
        let e = curve([0, 0, 0, 1, 0]);
        let g = cyclic_subgroup(&e, &CurvePoint::affine(0, 0), 2).unwrap();
        let (q, data) = velu_quotient(&e, &g).unwrap();
        assert_eq!(q, curve([0, 0, 0, -4, 0]));
        assert_eq!(
            (data.t.clone(), data.w.clone()),
            (Rational::from(1), Rational::new())
        );
        assert_eq!(*q.j_invariant(), 1728);
        let r = velu_height_check(&e, &g, 30).unwrap();
        assert!(r.pass && r.h_j == r.h_j_quotient);
    }

    #[test]
    fn five_isogeny_of_11a3() {
        let e = curve([0, -1, 1, 0, 0]);
        let g = cyclic_subgroup(&e, &CurvePoint::affine(0, 0), 5).unwrap();
        let (q, data) = velu_quotient(&e, &g).unwrap();
        assert_eq!(
            (data.t.clone(), data.w.clone()),
            (Rational::from(2), Rational::from(4))
        );
        assert_eq!(q, curve([0, -1, 1, -10, -20]));
        assert_eq!(*q.j_invariant(), Rational::from((-122023936, 161051)));
        let r = velu_height_check(&e, &g, 30).unwrap();
        let diff = Float::with_val(128, &r.h_j_quotient - &r.h_j);
        assert!((diff - Float::with_val(128, 29791).ln()).abs() < 1e-28);
        assert!((r.bound.to_f64() - 28.517).abs() < 1e-3);
        assert!(r.pass);
    }

    #[test]
    fn order_two_branch_uses_full_tangent_slope() {
        // y^2 = x^3 - x with kernel (1, 0): t_Q = 3 - 1 = 2, quotient
        // y^2 = x^3 - 11x - 14 with j = 66^3. Dropping the factor 3 in t_Q
        // would return the curve itself.
        let e = curve([0, 0, 0, -1, 0]);
        let g = cyclic_subgroup(&e, &CurvePoint::affine(1, 0), 2).unwrap();
        let (q, _) = velu_quotient(&e, &g).unwrap();
        assert_eq!(q, curve([0, 0, 0, -11, -14]));
        assert_eq!(*q.j_invariant(), 287496);
    }

    #[test]
    fn images_land_on_quotient() {
        let e = curve([0, 0, 0, -1, 0]);
        let g = cyclic_subgroup(&e, &CurvePoint::affine(0, 0), 2).unwrap();
        let (q, _) = velu_quotient(&e, &g).unwrap();
        let img = velu_image(&e, &g, &CurvePoint::affine(1, 0)).unwrap();
        assert!(q.contains(&img));
        assert_eq!(q.order_up_to(&img, 4), Some(2));
        assert_eq!(
            velu_image(&e, &g, &CurvePoint::affine(0, 0)),
            Err(VeluError::KernelPoint)
        );
        assert_eq!(
            velu_image(&e, &g, &CurvePoint::Infinity),
            Err(VeluError::KernelPoint)
        );
    }

    #[test]
    fn quotient_map_is_a_homomorphism() {
        // 123a1 has a rational 5-torsion point and a point of infinite order.
        let e = curve([0, 1, 1, -10, 10]);
        let g = cyclic_subgroup(&e, &CurvePoint::affine(2, 1), 5).unwrap();
        let (q, _) = velu_quotient(&e, &g).unwrap();
        let p = CurvePoint::affine(1, 1);
        let pts: Vec<CurvePoint> = (1..4).map(|k| e.mul(k, &p)).collect();
        for a in &pts {
            for b in &pts {
                let lhs = velu_image(&e, &g, &e.add(a, b)).unwrap();
                let rhs = q.add(
                    &velu_image(&e, &g, a).unwrap(),
                    &velu_image(&e, &g, b).unwrap(),
                );
                assert_eq!(lhs, rhs);
                assert!(q.contains(&lhs));
            }
        }
        // translating by the kernel does not move the image
        let shifted = e.add(&p, &CurvePoint::affine(2, 1));
        assert_eq!(
            velu_image(&e, &g, &shifted).unwrap(),
            velu_image(&e, &g, &p).unwrap()
        );
    }

    #[test]
    fn two_to_one_on_rational_points() {
        // y^2 = x^3 - x: the full 2-torsion maps onto {O, image of (1,0)}
        let e = curve([0, 0, 0, -1, 0]);
        let g = cyclic_subgroup(&e, &CurvePoint::affine(0, 0), 2).unwrap();
        let a = velu_image(&e, &g, &CurvePoint::affine(1, 0)).unwrap();
        let b = velu_image(&e, &g, &CurvePoint::affine(-1, 0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_subgroups_rejected() {
        let e = curve([0, -1, 1, 0, 0]);
        let bad = SubgroupData {
            order: 3,
            f2: Vec::new(),
            r: vec![CurvePoint::affine(0, 0)],
            generator: CurvePoint::affine(0, 0),
        };
        assert!(matches!(
            velu_quotient(&e, &bad),
            Err(VeluError::Curve(CurveError::InvalidSubgroup(_)))
        ));
    }
}
