//! Global minimal models over the rationals (Laska–Kraus–Connell).

use rug::integer::IsPrime;
use rug::ops::Pow;
use rug::{Integer, Rational};

use super::WeierstrassCurveQ;

/// A global minimal model in reduced form (`a1, a3` in `{0, 1}`,
/// `a2` in `{-1, 0, 1}`) and its discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalModel {
    pub curve: WeierstrassCurveQ,
    pub discriminant: Integer,
    /// Scaling `u` with `a_i(min) = a_i / u^i`.
    pub u: Rational,
}

pub fn minimal_discriminant(curve: &WeierstrassCurveQ) -> Integer {
    minimal_model(curve).discriminant
}

pub fn minimal_model(curve: &WeierstrassCurveQ) -> MinimalModel {
    // Make the model integral first: a_i u^i is integral for u the lcm of
    // the denominators.
    let mut u0 = Integer::from(1);
    for c in curve.a_invariants() {
        u0.lcm_mut(c.denom());
    }
    let integral = curve.scale(&Rational::from((1, u0.clone())));
    let c4 = integral.c4().numer().clone();
    let c6 = integral.c6().numer().clone();
    let disc = integral.discriminant().numer().clone();

    let g = Integer::from(c4.gcd_ref(&c6));
    let mut u = Integer::from(1);
    let (mut c4m, mut c6m) = (c4.clone(), c6.clone());
    for (p, _) in factor(&g) {
        let d = max_local_scaling(&p, &c4, &c6, &disc);
        if d > 0 {
            let pd = ipow(&p, d);
            c4m /= ipow(&pd, 4);
            c6m /= ipow(&pd, 6);
            u *= pd;
        }
    }
    let reduced = model_from_c4_c6(&c4m, &c6m);
    let discriminant = reduced.discriminant().numer().clone();
    MinimalModel {
        curve: reduced,
        discriminant,
        u: Rational::from((u * u0, 1)),
    }
}

/// Largest `d` such that `(c4 / p^4d, c6 / p^6d)` still comes from an
/// integral model (Kraus's conditions at 2 and 3).
fn max_local_scaling(p: &Integer, c4: &Integer, c6: &Integer, disc: &Integer) -> u32 {
    let val = |n: &Integer| valuation(n, p);
    let mut d = (val(c4) / 4).min(val(c6) / 6).min(val(disc) / 12);
    while d > 0 {
        let pd = ipow(&p, d);
        let c4s = Integer::from(c4 / ipow(&pd, 4));
        let c6s = Integer::from(c6 / ipow(&pd, 6));
        if kraus_local(p, &c4s, &c6s) {
            return d;
        }
        d -= 1;
    }
    0
}

/// `p`-adic valuation, with `u32::MAX` standing in for the valuation of 0.
fn valuation(n: &Integer, p: &Integer) -> u32 {
    if *n == 0 {
        u32::MAX
    } else {
        n.clone().remove_factor_mut(p)
    }
}

fn ipow(base: &Integer, e: u32) -> Integer {
    Integer::from(base.pow(e))
}

fn kraus_local(p: &Integer, c4: &Integer, c6: &Integer) -> bool {
    if *p == 3 {
        let v = valuation(c6, p);
        v != 2
    } else if *p == 2 {
        if Integer::from(c6.mod_u(4)) == 3 {
            return true;
        }
        let v4 = valuation(c4, p);
        let r = c6.mod_u(32);
        v4 >= 4 && (r == 0 || r == 8)
    } else {
        true
    }
}

/// The reduced integral model with invariants `c4, c6` (assumed to satisfy
/// Kraus's conditions).
fn model_from_c4_c6(c4: &Integer, c6: &Integer) -> WeierstrassCurveQ {
    let mut b2 = Integer::from(-c6).div_rem_euc(Integer::from(12)).1;
    if b2 > 6 {
        b2 -= 12;
    }
    let b4 = (Integer::from(&b2 * &b2) - c4) / 24;
    let b6: Integer = (-ipow(&b2, 3) + Integer::from(&b2 * &b4) * 36 - c6) / 216;
    let a1 = Integer::from(b2.mod_u(2));
    let a3 = Integer::from(b6.mod_u(2));
    let a2 = (Integer::from(&b2 - &a1)) / 4;
    let a4 = (b4 - Integer::from(&a1 * &a3)) / 2;
    let a6 = (b6 - &a3) / 4;
    let model =
        WeierstrassCurveQ::new([a1, a2, a3, a4, a6].map(Rational::from)).expect("nonsingular");
    debug_assert_eq!(model.c4(), &Rational::from(c4));
    debug_assert_eq!(model.c6(), &Rational::from(c6));
    model
}

/// Prime factorization by trial division and Pollard–Brent rho, sorted by
/// prime.
pub(crate) fn factor(n: &Integer) -> Vec<(Integer, u32)> {
    let mut n = Integer::from(n.abs_ref());
    let mut out: Vec<(Integer, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    for p in 2u32..1000 {
        if n.is_divisible_u(p) {
            let e = n.remove_factor_mut(&Integer::from(p));
            out.push((Integer::from(p), e));
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if m.is_probably_prime(40) != IsPrime::No {
            match out.iter_mut().find(|(p, _)| *p == m) {
                Some(entry) => entry.1 += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        let f = rho(&m);
        let other = Integer::from(&m / &f);
        stack.push(f);
        stack.push(other);
    }
    out.sort();
    out
}

fn rho(n: &Integer) -> Integer {
    if n.is_perfect_square() {
        return n.clone().sqrt();
    }
    let mut c = Integer::from(1);
    loop {
        let f = |x: &Integer| Integer::from(x * x + &c).div_rem_euc(n.clone()).1;
        let mut x = Integer::from(2);
        let mut y = Integer::from(2);
        let mut d = Integer::from(1);
        while d == 1 {
            x = f(&x);
            y = f(&f(&y));
            d = Integer::from(&x - &y).abs().gcd(n);
        }
        if d != *n {
            return d;
        }
        c += 1;
    }
}
