//! Rational functions in the symbolic parameters `a_0..a_7`.

use super::field::{Field, Rational};
use super::poly::{Monomial, Poly};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of symbolic parameters available.
pub const PARAMS: usize = 8;

type P = Poly<Rational>;

/// Reduced fraction `num/den` with `den` normalized to leading coefficient one.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: P,
    den: P,
}

impl RatFunc {
    pub fn param(i: usize) -> Self {
        assert!(i < PARAMS, "parameter index out of range");
        RatFunc {
            num: P::var(PARAMS, i),
            den: P::one(PARAMS),
        }
    }

    pub fn from_poly(num: P) -> Self {
        RatFunc {
            num,
            den: P::one(PARAMS),
        }
    }

    pub fn new(num: P, den: P) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading().unwrap().1.clone();
        let inv = Rational::one() / lc;
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// Normalizes a fraction already free of common factors.
    fn reduced(num: P, den: P) -> Self {
        let lc = den.leading().expect("nonzero denominator").1.clone();
        let inv = Rational::one() / lc;
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn numer(&self) -> &P {
        &self.num
    }

    pub fn denom(&self) -> &P {
        &self.den
    }

    /// Value at a numeric parameter point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut pt = point.to_vec();
        pt.resize(PARAMS, Rational::zero());
        self.num.eval(&pt) / self.den.eval(&pt)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: P::zero(PARAMS),
            den: P::one(PARAMS),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            num: P::one(PARAMS),
            den: P::one(PARAMS),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den);
        }
        let g = gcd(&self.den, &rhs.den);
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = gcd(&num, &g);
        let num = num.exact_div(&h).expect("gcd divides");
        let g = g.exact_div(&h).expect("gcd divides");
        RatFunc::reduced(num, &(&b * &d) * &g)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        cross_multiply(&self.num, &self.den, &rhs.num, &rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        if self.is_zero() {
            return self;
        }
        cross_multiply(&self.num, &self.den, &rhs.den, &rhs.num)
    }
}

/// `(a/b)(c/d)` for reduced inputs, cancelling only across the two fractions.
fn cross_multiply(a: &P, b: &P, c: &P, d: &P) -> RatFunc {
    let g1 = gcd(a, d);
    let g2 = gcd(c, b);
    let q = |x: &P, g: &P| x.exact_div(g).expect("gcd divides");
    RatFunc::reduced(&q(a, &g1) * &q(c, &g2), &q(b, &g2) * &q(d, &g1))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |i: usize| format!("a{}", i);
        let n = self.num.fmt_with(&names);
        if self.den.is_one_poly() {
            write!(f, "{}", n)
        } else {
            let d = self.den.fmt_with(&names);
            let n = if self.num.len() > 1 { format!("({})", n) } else { n };
            let d = if self.den.len() > 1 || d.contains('*') || !self.den.leading().unwrap().1.is_one() {
                format!("({})", d)
            } else {
                d
            };
            write!(f, "{}/{}", n, d)
        }
    }
}

impl Field for RatFunc {
    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_poly(P::constant(PARAMS, r.clone()))
    }

    fn as_rational(&self) -> Option<Rational> {
        match (self.num.constant_value(), self.den.constant_value()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    fn prints_negative(&self) -> bool {
        self.num.len() == 1 && self.num.leading().map_or(false, |(_, c)| num_traits::Signed::is_negative(c))
    }

    fn needs_parens(&self) -> bool {
        self.num.len() > 1
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for P {
    fn is_one_poly(&self) -> bool {
        self.constant_value().map_or(false, |c| c.is_one())
    }
}

fn monic(p: &P) -> P {
    match p.leading() {
        None => p.clone(),
        Some((_, c)) => p.scale(&(Rational::one() / c.clone())),
    }
}

fn deg_in(p: &P, v: usize) -> u32 {
    p.terms().map(|(m, _)| m.0[v]).max().unwrap_or(0)
}

/// Coefficients of `p` viewed as a polynomial in `x_v`.
fn coeffs_in(p: &P, v: usize) -> Vec<P> {
    let d = deg_in(p, v) as usize;
    let n = p.nvars();
    let mut out = vec![P::zero(n); d + 1];
    for (m, c) in p.terms() {
        let mut m2 = m.clone();
        let e = m2.0[v] as usize;
        m2.0[v] = 0;
        out[e].add_term(m2, c.clone());
    }
    out
}

fn shift(p: &P, v: usize, k: u32) -> P {
    let n = p.nvars();
    let mut m = Monomial::one(n);
    m.0[v] = k;
    p.mul_monomial(&m, &Rational::one())
}

fn content_in(p: &P, v: usize) -> P {
    coeffs_in(p, v)
        .iter()
        .filter(|c| !c.is_zero())
        .fold(P::zero(p.nvars()), |g, c| gcd(&g, c))
}

fn primitive_in(p: &P, v: usize) -> P {
    if p.is_zero() {
        return p.clone();
    }
    p.exact_div(&content_in(p, v)).expect("content divides")
}

fn prem(f: &P, g: &P, v: usize) -> P {
    let dg = deg_in(g, v);
    let lcg = coeffs_in(g, v).pop().unwrap();
    let mut r = f.clone();
    while !r.is_zero() && deg_in(&r, v) >= dg {
        let dr = deg_in(&r, v);
        let lcr = coeffs_in(&r, v).pop().unwrap();
        r = &(&lcg * &r) - &(&lcr * &shift(g, v, dr - dg));
    }
    r
}

fn uni_eval(p: &P, v: usize, point: &[Rational]) -> Vec<Rational> {
    let mut pt = point.to_vec();
    coeffs_in(p, v)
        .iter()
        .map(|c| {
            pt[v] = Rational::zero();
            c.eval(&pt)
        })
        .collect()
}

fn uni_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn uni_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let lb = b.last().unwrap().clone();
    while a.len() >= b.len() {
        let f = a.last().unwrap().clone() / lb.clone();
        let off = a.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            a[off + i] = a[off + i].clone() - f.clone() * c.clone();
        }
        a.pop();
        a = uni_trim(a);
    }
    a
}

fn uni_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    while !b.is_empty() {
        let r = uni_rem(a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// True when specializing all other variables shows the gcd has degree zero in every variable.
///
/// A specialization that keeps both leading coefficients nonzero can only raise the gcd degree,
/// so a constant specialized gcd is conclusive.
fn surely_coprime(a: &P, b: &P) -> bool {
    const PRIMES: [i64; 8] = [3, 7, 13, 19, 29, 37, 43, 53];
    let n = a.nvars();
    'vars: for v in 0..n {
        let (da, db) = (deg_in(a, v), deg_in(b, v));
        if da == 0 || db == 0 {
            continue;
        }
        for shift in 0..3i64 {
            let point: Vec<Rational> = (0..n)
                .map(|i| Rational::from_integer((PRIMES[i % 8] + 11 * shift + i as i64).into()))
                .collect();
            let ua = uni_eval(a, v, &point);
            let ub = uni_eval(b, v, &point);
            if ua.last().map_or(true, |c| c.is_zero()) || ub.last().map_or(true, |c| c.is_zero()) {
                continue;
            }
            if uni_gcd_degree(ua, ub) == 0 {
                continue 'vars;
            }
            return false;
        }
        return false;
    }
    true
}

/// Monic greatest common divisor of multivariate polynomials over the rationals.
pub fn gcd(a: &P, b: &P) -> P {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return P::one(a.nvars());
    }
    if surely_coprime(a, b) {
        return P::one(a.nvars());
    }
    if a.len() >= b.len() && a.exact_div(b).is_ok() {
        return monic(b);
    }
    if b.len() > a.len() && b.exact_div(a).is_ok() {
        return monic(a);
    }
    let n = a.nvars();
    let v = (0..n)
        .find(|&i| deg_in(a, i) > 0 || deg_in(b, i) > 0)
        .unwrap();
    if deg_in(a, v) == 0 {
        return gcd(a, &content_in(b, v));
    }
    if deg_in(b, v) == 0 {
        return gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut f = a.exact_div(&ca).unwrap();
    let mut g = b.exact_div(&cb).unwrap();
    if deg_in(&f, v) < deg_in(&g, v) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = prem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        f = g;
        g = primitive_in(&r, v);
        if deg_in(&g, v) == 0 {
            return monic(&c);
        }
    }
    monic(&(&c * &primitive_in(&g, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::rat;

    fn a(i: usize) -> RatFunc {
        RatFunc::param(i)
    }

    #[test]
    fn cancels_common_factors() {
        let x = (a(0) - a(1)) * (a(0) + a(2));
        let y = (a(0) - a(1)) * a(3);
        let q = x / y;
        assert_eq!(q, (a(0) + a(2)) / a(3));
    }

    #[test]
    fn sums_normalize() {
        let s = a(1) / a(0) + (a(0) - a(1)) / a(0);
        assert!(s.is_one());
        let t = a(1) / a(2) - a(1) / a(2);
        assert!(t.is_zero());
    }

    #[test]
    fn gcd_of_products() {
        let p = |r: RatFunc| r.numer().clone();
        let f = p((a(0) + a(1)) * (a(0) + a(1)) * (a(2) - a(3)));
        let g = p((a(0) + a(1)) * (a(2) - a(3)) * (a(4) + RatFunc::from_rational(&rat(2))));
        assert_eq!(gcd(&f, &g), monic(&p((a(0) + a(1)) * (a(2) - a(3)))));
    }

    #[test]
    fn display_and_eval() {
        let r = (a(3) - a(2)) / a(2);
        assert_eq!(r.eval(&[rat(1), rat(1), rat(2), rat(6)]), rat(2));
        assert!(r.to_string().contains("a3"));
    }
}
