//! The weighted configuration `(λ, χ, P)` and its gcd and weighted-root arithmetic.

use crate::error::{Error, Result};
use crate::exactpoly::field::{gcd_all, gcd_big, rat, to_integer, Field, Rational};
use crate::exactpoly::linalg::{dot, invert, rank, solve_in_span};
use crate::exactpoly::ratfunc::{RatFunc, PARAMS};
use crate::rootdata::datum::dot_i;
use crate::rootdata::{ParabolicCosets, RootDatum, WeylGroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use crate::schubert::RestrictionTable;
use std::sync::{Arc, OnceLock};

/// Group, parabolic and dominant weight: the part of a configuration independent of `χ`.
#[derive(Debug)]
pub struct Flag {
    pub group: WeylGroup,
    pub cosets: ParabolicCosets,
    pub lambda: Vec<i64>,
    w_lambda: Vec<Vec<i64>>,
    restrictions: OnceLock<RestrictionTable>,
}

impl Flag {
    /// `parabolic = None` takes the simple roots whose coroots are orthogonal to `λ`.
    pub fn new(datum: &RootDatum, lambda: &[i64], parabolic: Option<&[usize]>) -> Result<Arc<Flag>> {
        let group = WeylGroup::new(datum)?;
        Self::from_group(group, lambda, parabolic)
    }

    pub fn from_group(
        group: WeylGroup,
        lambda: &[i64],
        parabolic: Option<&[usize]>,
    ) -> Result<Arc<Flag>> {
        let d = &group.datum;
        if lambda.len() != d.rank {
            return Err(Error::DimensionMismatch {
                expected: d.rank,
                found: lambda.len(),
            });
        }
        if lambda.iter().all(|&x| x == 0) {
            return Err(Error::InvalidConfig("λ is zero".into()));
        }
        let orth: Vec<usize> = (0..d.semisimple_rank())
            .filter(|&i| dot_i(lambda, &d.simple_coroots[i]) == 0)
            .collect();
        let j = match parabolic {
            None => orth,
            Some(j) => {
                if let Some(&i) = j.iter().find(|&&i| i >= d.semisimple_rank() || !orth.contains(&i)) {
                    return Err(Error::InvalidConfig(format!(
                        "λ is not orthogonal to the coroot of simple root {}",
                        i + 1
                    )));
                }
                j.to_vec()
            }
        };
        let cosets = ParabolicCosets::new(&group, &j)?;
        let w_lambda = (0..group.len()).map(|w| group.act_int(w, lambda)).collect();
        Ok(Arc::new(Flag {
            group,
            cosets,
            lambda: lambda.to_vec(),
            w_lambda,
            restrictions: OnceLock::new(),
        }))
    }

    pub fn datum(&self) -> &RootDatum {
        &self.group.datum
    }

    /// Non-weighted fixed-point restrictions, computed on first use.
    pub fn restrictions(&self) -> &RestrictionTable {
        self.restrictions
            .get_or_init(|| RestrictionTable::new(&self.group, &self.cosets))
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// `wλ` for a Weyl group element.
    pub fn w_lambda(&self, w: usize) -> &[i64] {
        &self.w_lambda[w]
    }

    /// `xλ` for the representative at position `p`.
    pub fn rep_lambda(&self, p: usize) -> &[i64] {
        &self.w_lambda[self.cosets.element(p)]
    }

    pub fn positive_root(&self, k: usize) -> &[i64] {
        &self.datum().positive_roots[k].0
    }

    pub fn positive_coroot(&self, k: usize) -> &[i64] {
        &self.datum().positive_roots[k].1
    }

    /// `λ·γ^∨` for the positive root with index `k`.
    pub fn lambda_pairing(&self, k: usize) -> i64 {
        dot_i(&self.lambda, self.positive_coroot(k))
    }

    pub fn lambda_dominant(&self) -> bool {
        self.datum()
            .simple_coroots
            .iter()
            .all(|c| dot_i(&self.lambda, c) >= 0)
    }

    pub fn is_minuscule(&self) -> bool {
        self.datum()
            .positive_roots
            .iter()
            .all(|(_, c)| dot_i(&self.lambda, c).abs() <= 1)
    }

    pub fn lambda_off_root_span(&self) -> bool {
        self.datum().root_coeffs_int(&self.lambda).is_none()
    }

    /// Primitive central cocharacter: the component of `λ` orthogonal to all roots.
    pub fn chi0(&self) -> Vec<i64> {
        let d = self.datum();
        let lam: Vec<Rational> = self.lambda.iter().map(|&x| rat(x)).collect();
        let roots: Vec<Vec<Rational>> = d
            .simple_roots
            .iter()
            .map(|v| v.iter().map(|&x| rat(x)).collect())
            .collect();
        let mut proj = lam.clone();
        if !roots.is_empty() {
            let gram: Vec<Vec<Rational>> = roots
                .iter()
                .map(|a| roots.iter().map(|b| dot(a, b)).collect())
                .collect();
            let rhs: Vec<Rational> = roots.iter().map(|a| dot(a, &lam)).collect();
            let ginv = invert(&gram).expect("simple roots are independent");
            let coeffs: Vec<Rational> = ginv.iter().map(|row| dot(row, &rhs)).collect();
            for (c, a) in coeffs.iter().zip(&roots) {
                for (p, x) in proj.iter_mut().zip(a) {
                    *p = &*p - c * x;
                }
            }
        }
        let lcm = proj
            .iter()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = proj.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = gcd_all(ints.iter());
        ints.iter()
            .map(|x| {
                let v: BigInt = x / &g;
                i64::try_from(v).expect("small cocharacter")
            })
            .collect()
    }
}

/// Diagnostics for a weighted configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    pub lambda_dominant: bool,
    /// `None` when `χ` is symbolic.
    pub chi_antidominant: Option<bool>,
    pub a_positive: Option<bool>,
    pub lambda_off_root_span: bool,
    pub basis_independent: bool,
    pub messages: Vec<String>,
}

impl Diagnostics {
    pub fn is_valid(&self) -> bool {
        self.lambda_dominant
            && self.chi_antidominant != Some(false)
            && self.a_positive != Some(false)
            && self.lambda_off_root_span
            && self.basis_independent
    }
}

/// A flag together with a cocharacter `χ`, normalized by `gcd(χ)` when numeric.
#[derive(Clone, Debug)]
pub struct WeightedConfig<F: Field> {
    pub flag: Arc<Flag>,
    chi: Vec<F>,
    chi_raw: Option<Vec<i64>>,
    gcd_chi: Option<BigInt>,
    a_elem: Vec<F>,
    q: Option<Vec<Rational>>,
    stab: Option<Vec<BigInt>>,
}

pub type NumericConfig = WeightedConfig<Rational>;
pub type SymbolicConfig = WeightedConfig<RatFunc>;

impl<F: Field> WeightedConfig<F> {
    fn assemble(flag: Arc<Flag>, chi: Vec<F>) -> Result<Self> {
        let a_elem: Vec<F> = (0..flag.group.len())
            .map(|w| {
                let wl: Vec<F> = flag.w_lambda(w).iter().map(|&x| F::from_i64(x)).collect();
                dot(&wl, &chi)
            })
            .collect();
        for p in 0..flag.cosets.len() {
            if a_elem[flag.cosets.element(p)].is_zero() {
                return Err(Error::InvalidConfig(format!(
                    "a_w vanishes at {}",
                    flag.group.format_word(flag.cosets.element(p))
                )));
            }
        }
        Ok(WeightedConfig {
            flag,
            chi,
            chi_raw: None,
            gcd_chi: None,
            a_elem,
            q: None,
            stab: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.flag.rank()
    }

    pub fn group(&self) -> &WeylGroup {
        &self.flag.group
    }

    pub fn cosets(&self) -> &ParabolicCosets {
        &self.flag.cosets
    }

    pub fn datum(&self) -> &RootDatum {
        self.flag.datum()
    }

    /// Normalized cocharacter `χ/gcd(χ)`.
    pub fn chi(&self) -> &[F] {
        &self.chi
    }

    pub fn is_symbolic(&self) -> bool {
        self.q.is_none()
    }

    pub fn lift(&self, v: &[i64]) -> Vec<F> {
        v.iter().map(|&x| F::from_i64(x)).collect()
    }

    /// `a_μ = μ·χ / gcd(χ)`.
    pub fn a_of(&self, mu: &[F]) -> F {
        dot(mu, &self.chi)
    }

    pub fn a_of_int(&self, mu: &[i64]) -> F {
        self.a_of(&self.lift(mu))
    }

    /// `a_w` for a Weyl group element.
    pub fn a_elem(&self, w: usize) -> &F {
        &self.a_elem[w]
    }

    /// `a_x` for the representative at position `p`.
    pub fn a_rep(&self, p: usize) -> &F {
        &self.a_elem[self.cosets().element(p)]
    }

    /// `μ̄(x) = μ − (a_μ/a_x)·xλ`.
    pub fn bar(&self, mu: &[F], p: usize) -> Vec<F> {
        let f = self.a_of(mu) / self.a_rep(p).clone();
        mu.iter()
            .zip(self.flag.rep_lambda(p))
            .map(|(m, &l)| m.clone() - f.clone() * F::from_i64(l))
            .collect()
    }

    pub fn bar_int(&self, mu: &[i64], p: usize) -> Vec<F> {
        self.bar(&self.lift(mu), p)
    }

    /// Images `x_i ↦ x̄_i(x)` defining the ring map `σ_x`.
    pub fn bar_images(&self, p: usize) -> Vec<Vec<F>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                self.bar_int(&e, p)
            })
            .collect()
    }

    /// `{β̄_i(x)}` for the negative simple roots.
    pub fn negative_simple_bars(&self, p: usize) -> Vec<Vec<F>> {
        self.datum()
            .negative_simple_roots()
            .iter()
            .map(|b| self.bar_int(b, p))
            .collect()
    }

    pub fn basis_independent(&self) -> bool {
        let n = self.datum().semisimple_rank();
        n == 0 || rank(&self.negative_simple_bars(self.cosets().top())) == n
    }

    /// Coefficients of `β̄(v)` over `{β̄_i(w)}` for a root `β`: `f_i + (a_β/a_v)e_i`, where
    /// `β = Σ f_iβ_i` and `wλ − vλ = Σ e_iβ_i` in negative simple roots.
    pub fn rebase(&self, beta: &[i64], v: usize, w: usize) -> Result<Vec<F>> {
        let f = self.negroot_coeffs(beta)?;
        let diff: Vec<i64> = self
            .flag
            .rep_lambda(w)
            .iter()
            .zip(self.flag.rep_lambda(v))
            .map(|(a, b)| a - b)
            .collect();
        let e = self.negroot_coeffs(&diff)?;
        let s = self.a_of_int(beta) / self.a_rep(v).clone();
        Ok(f.iter()
            .zip(&e)
            .map(|(fi, ei)| F::from_rational(fi) + s.clone() * F::from_rational(ei))
            .collect())
    }

    /// Coordinates of an integral weight in the negative simple roots `β_i = −α_i`.
    pub fn negroot_coeffs(&self, mu: &[i64]) -> Result<Vec<Rational>> {
        self.datum()
            .root_coeffs_int(mu)
            .ok_or_else(|| Error::OutsideSpan(format!("{:?} is not in the root span", mu)))
    }

    pub fn validate(&self) -> Diagnostics {
        let flag = &self.flag;
        let mut messages = Vec::new();
        let lambda_dominant = flag.lambda_dominant();
        if !lambda_dominant {
            messages.push("λ is not dominant".to_string());
        }
        let (chi_antidominant, a_positive) = match &self.chi_raw {
            None => (None, None),
            Some(_) => {
                let zero = F::zero();
                let anti = self.datum().positive_roots.iter().all(|(r, _)| {
                    let a = self.a_of_int(r);
                    a == zero || a.is_negative_constant()
                });
                if !anti {
                    messages.push("χ is not antidominant".to_string());
                }
                let pos = self
                    .a_elem
                    .iter()
                    .all(|a| !a.is_zero() && !a.is_negative_constant());
                if !pos {
                    messages.push("a_w ≤ 0 for some w ∈ W".to_string());
                }
                (Some(anti), Some(pos))
            }
        };
        let off = flag.lambda_off_root_span();
        if !off {
            messages.push("λ lies in the root span, so some a_w ≤ 0".to_string());
        }
        let basis_independent = self.basis_independent();
        if !basis_independent {
            messages.push("bar(β_i, w₀) are dependent".to_string());
        }
        Diagnostics {
            lambda_dominant,
            chi_antidominant,
            a_positive,
            lambda_off_root_span: off,
            basis_independent,
            messages,
        }
    }

    /// `q_x`, or an error for symbolic `χ`.
    pub fn q(&self, p: usize) -> Result<F> {
        match &self.q {
            Some(q) => Ok(F::from_rational(&q[p])),
            None => Err(Error::Symbolic("q_w needs integer χ".into())),
        }
    }
}

impl WeightedConfig<Rational> {
    pub fn numeric(flag: Arc<Flag>, chi: &[i64]) -> Result<Self> {
        if chi.len() != flag.rank() {
            return Err(Error::DimensionMismatch {
                expected: flag.rank(),
                found: chi.len(),
            });
        }
        let raw: Vec<BigInt> = chi.iter().map(|&x| BigInt::from(x)).collect();
        let g = gcd_all(raw.iter());
        if g.is_zero() {
            return Err(Error::InvalidConfig("χ is zero".into()));
        }
        let chi_n: Vec<Rational> = raw
            .iter()
            .map(|x| Rational::from_integer(x / &g))
            .collect();
        let mut cfg = Self::assemble(flag, chi_n)?;
        cfg.chi_raw = Some(chi.to_vec());
        cfg.gcd_chi = Some(g);
        let stab: Vec<BigInt> = (0..cfg.cosets().len())
            .map(|p| cfg.stabilizer_order(p))
            .collect();
        let top = stab[cfg.cosets().top()].clone();
        cfg.q = Some(
            stab.iter()
                .map(|s| Rational::new(s.clone(), top.clone()))
                .collect(),
        );
        cfg.stab = Some(stab);
        Ok(cfg)
    }

    /// The non-weighted specialization `χ = χ₀`.
    pub fn nonweighted(flag: Arc<Flag>) -> Result<Self> {
        let chi0 = flag.chi0();
        Self::numeric(flag, &chi0)
    }

    pub fn chi_raw(&self) -> &[i64] {
        self.chi_raw.as_deref().unwrap()
    }

    pub fn gcd_chi(&self) -> &BigInt {
        self.gcd_chi.as_ref().unwrap()
    }

    pub fn a_int(&self, mu: &[i64]) -> BigInt {
        to_integer(&self.a_of_int(mu)).expect("integral pairing")
    }

    pub fn a_rep_int(&self, p: usize) -> BigInt {
        to_integer(self.a_rep(p)).unwrap()
    }

    /// `gcd(a_x, a_β : β ∈ Φ_x^P)`.
    pub fn stabilizer_order(&self, p: usize) -> BigInt {
        if let Some(s) = &self.stab {
            return s[p].clone();
        }
        let mut g = self.a_rep_int(p).abs();
        for &k in self.cosets().inversion_set(p) {
            g = gcd_big(&g, &self.a_int(self.flag.positive_root(k)));
        }
        g
    }

    pub fn q_value(&self, p: usize) -> Rational {
        self.q.as_ref().unwrap()[p].clone()
    }

    /// `(gcd(a_x, a_{Φ_x^P}), gcd(a_y : y ≤ x), lhs == rhs)`; the lhs divides the rhs.
    pub fn stab_divisibility(&self, p: usize) -> (BigInt, BigInt, bool) {
        let lhs = self.stabilizer_order(p);
        let c = self.cosets();
        let below: Vec<BigInt> = (0..c.len())
            .filter(|&y| c.leq(y, p))
            .map(|y| self.a_rep_int(y))
            .collect();
        let rhs = gcd_all(below.iter());
        let eq = lhs == rhs;
        (lhs, rhs, eq)
    }

    /// `β(x) = (a_x β − a_β xλ)/gcd(a_x, a_β)`.
    pub fn weighted_root(&self, beta: &[i64], p: usize) -> Vec<Rational> {
        let ax = self.a_rep_int(p);
        let ab = self.a_int(beta);
        let g = gcd_big(&ax, &ab);
        beta.iter()
            .zip(self.flag.rep_lambda(p))
            .map(|(&b, &l)| Rational::new(&ax * BigInt::from(b) - &ab * BigInt::from(l), g.clone()))
            .collect()
    }

    /// Positive scalar `gcd(a_x, a_β)/a_x` with `β̄(x) = s·β(x)`.
    pub fn bar_to_weighted_scale(&self, beta: &[i64], p: usize) -> Rational {
        let ax = self.a_rep_int(p);
        let ab = self.a_int(beta);
        Rational::new(gcd_big(&ax, &ab), ax)
    }

    /// `γ = (a_β α − a_α β)/gcd(a_α, a_β)`, negated when `a_β < 0`.
    pub fn quotient_weight(&self, alpha: &[i64], beta: &[i64]) -> Result<Vec<Rational>> {
        let aa = self.a_int(alpha);
        let ab = self.a_int(beta);
        if aa.is_zero() || ab.is_zero() {
            return Err(Error::InvalidInput("zero pairing with χ".into()));
        }
        let g = gcd_big(&aa, &ab);
        let sign = if ab.is_negative() { -BigInt::one() } else { BigInt::one() };
        Ok(alpha
            .iter()
            .zip(beta)
            .map(|(&a, &b)| {
                Rational::new(
                    &sign * (&ab * BigInt::from(a) - &aa * BigInt::from(b)),
                    g.clone(),
                )
            })
            .collect())
    }
}

impl WeightedConfig<RatFunc> {
    /// `χ = (a_0, …, a_m)` with the `a_i` indeterminates.
    pub fn symbolic(flag: Arc<Flag>) -> Result<Self> {
        if flag.rank() > PARAMS {
            return Err(Error::SizeLimit(format!(
                "symbolic mode supports rank ≤ {}",
                PARAMS
            )));
        }
        let chi = (0..flag.rank()).map(RatFunc::param).collect();
        Self::assemble(flag, chi)
    }
}

/// Solves `μ = Σ c_i v_i` exactly.
pub fn coordinates<F: Field>(basis: &[Vec<F>], mu: &[F]) -> Option<Vec<F>> {
    solve_in_span(basis, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::ratio;

    fn flag(name: &str, lambda: &[i64], j: Option<&[usize]>) -> Arc<Flag> {
        Flag::new(&RootDatum::preset(name).unwrap(), lambda, j).unwrap()
    }

    #[test]
    fn gl2_valid() {
        let c = NumericConfig::numeric(flag("gl(2)", &[1, 0], None), &[1, 1]).unwrap();
        assert!(c.validate().is_valid());
        assert_eq!(c.a_rep(0), &rat(1));
        assert_eq!(c.a_rep(1), &rat(1));
    }

    #[test]
    fn semisimple_is_diagnosed() {
        let d = RootDatum::from_simple("sl2", vec![vec![2]], vec![vec![1]]).unwrap();
        let f = Flag::new(&d, &[1], None).unwrap();
        let c = NumericConfig::numeric(f, &[1]).unwrap();
        let r = c.validate();
        assert_eq!(r.a_positive, Some(false));
        assert!(!r.lambda_off_root_span);
        assert!(!r.is_valid());
    }

    #[test]
    fn bar_in_weighted_p1() {
        let c = NumericConfig::numeric(flag("gl(2)", &[1, 0], None), &[2, 3]).unwrap();
        let v0 = c.cosets().bottom();
        assert_eq!(c.bar_int(&[-1, 1], v0), vec![ratio(-3, 2), rat(1)]);
        assert!(c.bar_int(c.flag.rep_lambda(v0), v0).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn lagrangian_q_table() {
        let f = flag("cstar_sp4", &[1, 1, 1], None);
        for (chi, q) in [
            ([8, -1, -1], [1, 1, 1, 3]),
            ([3, -1, 0], [1, 1, 2, 2]),
            ([11, -4, -3], [1, 1, 2, 4]),
            ([11, -4, 3], [1, 1, 2, 10]),
        ] {
            let c = NumericConfig::numeric(f.clone(), &chi).unwrap();
            let got: Vec<Rational> = (0..4).map(|p| c.q_value(p)).collect();
            assert_eq!(got, q.iter().map(|&x| rat(x)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn strict_stabilizer_divisibility() {
        let f = flag("gl(2)", &[2, 0], None);
        let c = NumericConfig::numeric(f, &[2, 3]).unwrap();
        let (l, r, eq) = c.stab_divisibility(c.cosets().top());
        assert_eq!((l, r, eq), (BigInt::from(1), BigInt::from(2), false));
    }

    #[test]
    fn chi0_presets() {
        assert_eq!(flag("gl(3)", &[2, 1, 0], None).chi0(), vec![1, 1, 1]);
        assert_eq!(flag("cstar_sp4", &[1, 1, 1], None).chi0(), vec![1, 0, 0]);
        let g = flag("cstar_gl(4)", &[1, 1, 1, 0, 0], None);
        let c = NumericConfig::nonweighted(g).unwrap();
        for (r, _) in &c.datum().positive_roots {
            assert!(c.a_of_int(r).is_zero());
        }
    }

    #[test]
    fn rebase_on_lagrangian() {
        let cfg = NumericConfig::numeric(flag("cstar_sp4", &[1, 1, 1], Some(&[0])), &[11, -4, -3]).unwrap();
        let dl: Vec<i64> = cfg.flag.rep_lambda(0).iter().zip(cfg.flag.rep_lambda(1)).map(|(a, b)| a - b).collect();
        assert_eq!(cfg.negroot_coeffs(&dl).unwrap(), vec![rat(0), rat(1)]);
        for beta in [[0, -1, 1], [0, 0, -2], [0, -1, -1], [0, -2, 0]] {
            for v in 0..4 {
                for w in 0..=v {
                    let c = cfg.rebase(&beta, v, w).unwrap();
                    let bars = cfg.negative_simple_bars(w);
                    let mut sum = vec![rat(0); 3];
                    for (ci, b) in c.iter().zip(&bars) {
                        for (s, x) in sum.iter_mut().zip(b) {
                            *s = &*s + ci * x;
                        }
                    }
                    assert_eq!(sum, cfg.bar_int(&beta, v));
                    assert!(c.iter().all(|x| !x.is_negative()), "{:?} {} {}", beta, v, w);
                }
            }
        }
    }

    #[test]
    fn quotient_weight_at_fixed_point() {
        let c = NumericConfig::numeric(flag("cstar_gl(4)", &[1, 1, 1, 0, 0], None), &[7, 1, 2, 3, 5])
            .unwrap();
        for p in 0..c.cosets().len() {
            let wl = c.flag.rep_lambda(p).to_vec();
            for (r, _) in &c.datum().positive_roots {
                if c.a_of_int(r).is_zero() {
                    continue;
                }
                assert_eq!(c.quotient_weight(r, &wl).unwrap(), c.weighted_root(r, p));
            }
        }
    }
}
