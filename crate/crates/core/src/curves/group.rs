use std::fmt;

use rug::Rational;

use super::{CurveError, WeierstrassCurveQ};

/// A rational point, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(Rational, Rational),
}

impl CurvePoint {
    pub fn affine(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        CurvePoint::Affine(x.into(), y.into())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Affine(x, _) => Some(x),
            CurvePoint::Infinity => None,
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("O"),
            CurvePoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl WeierstrassCurveQ {
    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                let [a1, a2, a3, a4, a6] = self.a_invariants();
                let lhs =
                    Rational::from(y * y) + Rational::from(a1 * x) * y + Rational::from(a3 * y);
                let rhs = Rational::from(x * x) * x
                    + Rational::from(a2 * x) * x
                    + Rational::from(a4 * x)
                    + a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<(), CurveError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CurveError::PointNotOnCurve(p.to_string()))
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let ny = -Rational::from(y + Rational::from(self.a1() * x)) - self.a3();
                CurvePoint::Affine(x.clone(), ny)
            }
        }
    }

    /// Chord and tangent addition; points are assumed to be on the curve.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, _] = self.a_invariants();
        let lambda = if x1 == x2 {
            let s = Rational::from(y1 + y2) + Rational::from(a1 * x2) + a3;
            if s == 0 {
                return CurvePoint::Infinity;
            }
            let num = Rational::from(x1 * x1) * 3u32 + Rational::from(a2 * x1) * 2u32 + a4
                - Rational::from(a1 * y1);
            let den = Rational::from(y1 * 2u32) + Rational::from(a1 * x1) + a3;
            num / den
        } else {
            Rational::from(y2 - y1) / Rational::from(x2 - x1)
        };
        let nu = Rational::from(y1 - Rational::from(&lambda * x1));
        let x3 = Rational::from(&lambda * &lambda) + Rational::from(a1 * &lambda) - a2 - x1 - x2;
        let y3 = -Rational::from(&lambda + a1) * &x3 - nu - a3;
        CurvePoint::Affine(x3, y3)
    }

    /// `k P` by double-and-add; negative `k` uses `-P`.
    pub fn mul(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if k < 0 { self.negate(p) } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    /// Exact order of `p` if it is at most `bound`.
    pub fn order_up_to(&self, p: &CurvePoint, bound: u64) -> Option<u64> {
        let mut q = p.clone();
        for n in 1..=bound {
            if q.is_infinity() {
                return Some(n);
            }
            q = self.add(&q, p);
        }
        None
    }
}

/// `P + Q` after checking that both points lie on the curve.
pub fn group_law(
    curve: &WeierstrassCurveQ,
    p: &CurvePoint,
    q: &CurvePoint,
) -> Result<CurvePoint, CurveError> {
    curve.check(p)?;
    curve.check(q)?;
    Ok(curve.add(p, q))
}

/// A finite rational subgroup `G`, split as `G = {O} + F2 + R + (-R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupData {
    pub order: u64,
    /// Points of order two.
    pub f2: Vec<CurvePoint>,
    /// One representative of each pair `{Q, -Q}` with `Q != -Q`.
    pub r: Vec<CurvePoint>,
    /// A generator for cyclic groups; `O` for the trivial group or when the
    /// group was supplied by its elements and is not cyclic.
    pub generator: CurvePoint,
}

impl SubgroupData {
    /// The subgroup generated by `p`, which must have exact order `n`.
    /// `R` holds `kP` for `1 <= k <= (n - 1) / 2`.
    pub fn cyclic(curve: &WeierstrassCurveQ, p: &CurvePoint, n: u64) -> Result<Self, CurveError> {
        curve.check(p)?;
        if n == 0 {
            return Err(CurveError::WrongOrder { expected: n });
        }
        let mut multiples = vec![CurvePoint::Infinity];
        let mut q = p.clone();
        for _ in 1..n {
            if q.is_infinity() {
                return Err(CurveError::WrongOrder { expected: n });
            }
            multiples.push(q.clone());
            q = curve.add(&q, p);
        }
        if !q.is_infinity() {
            return Err(CurveError::WrongOrder { expected: n });
        }
        let r = multiples[1..=((n as usize - 1) / 2)].to_vec();
        let f2 = if n % 2 == 0 {
            vec![multiples[n as usize / 2].clone()]
        } else {
            Vec::new()
        };
        Ok(SubgroupData {
            order: n,
            f2,
            r,
            generator: if n == 1 {
                CurvePoint::Infinity
            } else {
                p.clone()
            },
        })
    }

    /// Any finite subgroup given by its elements (with or without `O`).
    /// Closure under addition is verified; `R` keeps the first member of each
    /// `{Q, -Q}` pair in input order.
    pub fn from_elements(
        curve: &WeierstrassCurveQ,
        elements: &[CurvePoint],
    ) -> Result<Self, CurveError> {
        let mut pts: Vec<CurvePoint> = Vec::new();
        for p in elements {
            curve.check(p)?;
            if !p.is_infinity() && !pts.contains(p) {
                pts.push(p.clone());
            }
        }
        let member = |q: &CurvePoint| q.is_infinity() || pts.contains(q);
        for p in &pts {
            for q in &pts {
                if !member(&curve.add(p, q)) {
                    return Err(CurveError::InvalidSubgroup(format!("{p} + {q} is missing")));
                }
            }
        }
        let mut f2 = Vec::new();
        let mut r: Vec<CurvePoint> = Vec::new();
        for p in &pts {
            let neg = curve.negate(p);
            if neg == *p {
                f2.push(p.clone());
            } else if !r.contains(&neg) {
                r.push(p.clone());
            }
        }
        let order = pts.len() as u64 + 1;
        let generator = pts
            .iter()
            .find(|p| curve.order_up_to(p, order) == Some(order))
            .cloned()
            .unwrap_or(CurvePoint::Infinity);
        Ok(SubgroupData {
            order,
            f2,
            r,
            generator,
        })
    }

    /// The points of `S = R + F2`.
    pub fn s(&self) -> impl Iterator<Item = &CurvePoint> {
        self.r.iter().chain(self.f2.iter())
    }

    /// Every element, starting with `O`.
    pub fn elements(&self, curve: &WeierstrassCurveQ) -> Vec<CurvePoint> {
        let mut out = vec![CurvePoint::Infinity];
        out.extend(self.f2.iter().cloned());
        for q in &self.r {
            out.push(q.clone());
            out.push(curve.negate(q));
        }
        out
    }

    pub fn contains(&self, curve: &WeierstrassCurveQ, p: &CurvePoint) -> bool {
        p.is_infinity()
            || self.f2.contains(p)
            || self.r.iter().any(|q| q == p || curve.negate(q) == *p)
    }
}

/// Convenience wrapper for [`SubgroupData::cyclic`].
pub fn cyclic_subgroup(
    curve: &WeierstrassCurveQ,
    p: &CurvePoint,
    n: u64,
) -> Result<SubgroupData, CurveError> {
    SubgroupData::cyclic(curve, p, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e11() -> WeierstrassCurveQ {
        WeierstrassCurveQ::from_i64s([0, -1, 1, 0, 0]).unwrap()
    }

    #[test]
    fn five_torsion_on_11a3() {
        let e = e11();
        let p = CurvePoint::affine(0, 0);
        assert_eq!(group_law(&e, &p, &CurvePoint::Infinity).unwrap(), p);
        assert_eq!(e.mul(2, &p), CurvePoint::affine(1, -1));
        assert_eq!(e.mul(5, &p), CurvePoint::Infinity);
        assert_eq!(e.order_up_to(&p, 10), Some(5));
        // oracle: repeated addition agrees with double-and-add
        let mut q = CurvePoint::Infinity;
        for k in 0..7 {
            assert_eq!(q, e.mul(k, &p));
            q = e.add(&q, &p);
        }
        assert_eq!(e.mul(-2, &p), e.negate(&CurvePoint::affine(1, -1)));
    }

    #[test]
    fn off_curve_points_rejected() {
        let e = e11();
        assert!(matches!(
            group_law(&e, &CurvePoint::affine(2, 2), &CurvePoint::Infinity),
            Err(CurveError::PointNotOnCurve(_))
        ));
    }

    #[test]
    fn cyclic_partitions() {
        let e = e11();
        let g = cyclic_subgroup(&e, &CurvePoint::affine(0, 0), 5).unwrap();
        assert!(g.f2.is_empty());
        assert_eq!(
            g.r,
            vec![CurvePoint::affine(0, 0), CurvePoint::affine(1, -1)]
        );
        assert_eq!(g.elements(&e).len(), 5);

        let e2 = WeierstrassCurveQ::from_i64s([0, 0, 0, 1, 0]).unwrap();
        let g = cyclic_subgroup(&e2, &CurvePoint::affine(0, 0), 2).unwrap();
        assert_eq!(g.f2, vec![CurvePoint::affine(0, 0)]);
        assert!(g.r.is_empty());

        let g = cyclic_subgroup(&e, &CurvePoint::Infinity, 1).unwrap();
        assert!(g.f2.is_empty() && g.r.is_empty() && g.order == 1);

        assert_eq!(
            cyclic_subgroup(&e, &CurvePoint::affine(0, 0), 4),
            Err(CurveError::WrongOrder { expected: 4 })
        );
        assert_eq!(
            cyclic_subgroup(&e, &CurvePoint::affine(0, 0), 10),
            Err(CurveError::WrongOrder { expected: 10 })
        );
    }

    #[test]
    fn non_cyclic_subgroup_from_elements() {
        // 15a1 has torsion Z/2 x Z/4.
        let e = WeierstrassCurveQ::from_i64s([1, 1, 1, -10, -10]).unwrap();
        let p = CurvePoint::affine(-2, 3);
        let t = CurvePoint::affine(-1, 0);
        let mut pts = Vec::new();
        for i in 0..4 {
            for k in 0..2 {
                pts.push(e.add(&e.mul(i, &p), &e.mul(k, &t)));
            }
        }
        let g = SubgroupData::from_elements(&e, &pts).unwrap();
        assert_eq!(g.order, 8);
        assert_eq!(g.f2.len(), 3);
        assert_eq!(g.r.len(), 2);
        assert!(g.generator.is_infinity());
        let missing = &pts[..3];
        assert!(matches!(
            SubgroupData::from_elements(&e, missing),
            Err(CurveError::InvalidSubgroup(_))
        ));
    }
}
