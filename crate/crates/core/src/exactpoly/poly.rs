use super::field::{Field, Rational};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector ordered graded-lexicographically, `x_0` largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x_0..x_{n-1}` with coefficients in `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), F::one());
        p
    }

    /// The linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[F]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn linear_int(coeffs: &[i64]) -> Self {
        Self::linear(&coeffs.iter().map(|&c| F::from_i64(c)).collect::<Vec<_>>())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.0.len(), nvars, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one(self.nvars)))
        } else {
            None
        }
    }

    /// Coefficients of a polynomial of degree at most one, ignoring the constant term.
    pub fn linear_coeffs(&self) -> Option<Vec<F>> {
        if self.degree().unwrap_or(0) > 1 {
            return None;
        }
        Some(
            (0..self.nvars)
                .map(|i| self.coeff(&Monomial::var(self.nvars, i)))
                .collect(),
        )
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, v) in &self.terms {
            out.add_term(k.mul(m), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn map_coeffs<G: Field, T: Fn(&F) -> G>(&self, f: T) -> Poly<G> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Exact quotient `self / d`, failing when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        self.check_dims(d)?;
        let (lm, lc) = match d.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return Err(Error::InexactDivision);
            }
            let qm = m.div(&lm);
            let qc = c.clone() / lc.clone();
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Exact quotient by the linear form with coefficient vector `l`.
    pub fn exact_divide_linear(&self, l: &[F]) -> Result<Self> {
        if l.iter().all(|c| c.is_zero()) {
            return Err(Error::DivisionByZero);
        }
        if l.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: l.len(),
            });
        }
        self.exact_div(&Poly::linear(l))
    }

    /// Ring homomorphism sending `x_i` to the linear form `images[i]`.
    pub fn substitute_linear(&self, images: &[Vec<F>]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let out_vars = images.first().map_or(self.nvars, Vec::len);
        let lin: Vec<Poly<F>> = images.iter().map(|v| Poly::linear(v)).collect();
        self.substitute(&lin, out_vars)
    }

    /// Ring homomorphism sending `x_i` to `images[i]`.
    pub fn substitute(&self, images: &[Poly<F>], out_vars: usize) -> Self {
        let mut powers: Vec<Vec<Poly<F>>> = images
            .iter()
            .map(|p| vec![Poly::one(out_vars), p.clone()])
            .collect();
        let mut out = Poly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Divided difference `(r_α p − p)/α` for the reflection `μ ↦ μ − (μ·α^∨)α`.
    pub fn divided_difference(&self, root: &[i64], coroot: &[i64]) -> Result<Self> {
        let n = self.nvars;
        if root.len() != n || coroot.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: root.len(),
            });
        }
        let images: Vec<Vec<F>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let delta = if i == j { 1 } else { 0 };
                        F::from_i64(delta - coroot[i] * root[j])
                    })
                    .collect()
            })
            .collect();
        let reflected = self.substitute_linear(&images);
        let alpha: Vec<F> = root.iter().map(|&c| F::from_i64(c)).collect();
        (&reflected - self).exact_divide_linear(&alpha)
    }

    pub fn eval(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn fmt_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.prints_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names(i)
                    } else {
                        format!("{}^{}", names(i), e)
                    }
                })
                .collect();
            let cstr = if abs.needs_parens() {
                format!("({})", abs)
            } else {
                abs.to_string()
            };
            if mono.is_empty() {
                s.push_str(&cstr);
            } else if abs.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{}*{}", cstr, mono.join("*")));
            }
        }
        s
    }
}

impl Poly<Rational> {
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| *c >= Rational::from_integer(0.into()))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&|i| format!("x{}", i)))
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "dimension mismatch");
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

/// Product of linear forms given by coefficient vectors.
pub fn product_of_linear<F: Field>(nvars: usize, forms: &[Vec<F>]) -> Poly<F> {
    forms
        .iter()
        .fold(Poly::one(nvars), |acc, l| &acc * &Poly::linear(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::{rat, ratio};

    type P = Poly<Rational>;

    fn x(i: usize) -> P {
        P::var(3, i)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        assert_eq!(p, &x(1).pow(2) - &x(2).pow(2));
        let q = p.exact_div(&(&x(1) - &x(2))).unwrap();
        assert_eq!(q, &x(1) + &x(2));
    }

    #[test]
    fn euler_value_divides_by_x1() {
        let p = (&(&x(1) + &x(2)) * &(&x(1) * &x(2))).scale(&rat(-4));
        let q = p.exact_divide_linear(&[rat(0), rat(1), rat(0)]).unwrap();
        assert_eq!(q, (&(&x(1) + &x(2)) * &x(2)).scale(&rat(-4)));
    }

    #[test]
    fn inexact_division_fails() {
        let p = &x(1).pow(2) + &x(2).pow(2);
        assert!(matches!(
            p.exact_divide_linear(&[rat(0), rat(1), rat(0)]),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn graded_lex_leading_term() {
        let p = &(&x(2).pow(2) + &x(0)) + &(&x(0) * &x(1));
        assert_eq!(p.leading().unwrap().0, &Monomial(vec![1, 1, 0]));
    }

    #[test]
    fn substitution_identity_and_bar() {
        let p = &x(1).pow(3) - &x(0).scale(&ratio(1, 2));
        let id: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| rat((i == j) as i64)).collect())
            .collect();
        assert_eq!(p.substitute_linear(&id), p);
    }

    #[test]
    fn divided_difference_of_symmetric_is_zero() {
        let root = [0, 1, -1];
        let p = &x(1) * &x(2);
        assert!(p.divided_difference(&root, &root).unwrap().is_zero());
        let d = x(1).divided_difference(&root, &root).unwrap();
        assert_eq!(d, P::constant(3, rat(-1)));
    }

    #[test]
    fn dimension_mismatch() {
        let p = P::var(2, 0);
        assert!(p.try_add(&x(0)).is_err());
    }

    #[test]
    fn display() {
        let p = &x(1).pow(2).scale(&ratio(3, 2)) - &x(0);
        assert_eq!(p.to_string(), "3/2*x1^2 - x0");
    }
}
