//! Positivity certificates for structure constants.
//!
//! A certificate writes a coefficient as a nonnegative combination of products
//! `ν₁(x₁)⋯ν_k(x_k)` of weighted roots with distinct `ν_i`. The pipeline takes
//! the non-weighted constants (the same engine at `χ₀`), decomposes them into
//! square-free root monomials, and peels one root at a time.

use crate::error::{Error, Result};
use crate::exactpoly::field::{Field, Rational};
use crate::exactpoly::linalg::{invert, rank};
use crate::exactpoly::poly::{product_of_linear, Monomial, Poly};
use crate::exactpoly::simplex::{solve_nonneg_linear_with_limit, Feasibility, DEFAULT_MAX_COLUMNS};
use crate::schubert::{Basis, Calculus};
use crate::weighted::NumericConfig;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Which sign of roots a certificate uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Negative roots, `χ` antidominant.
    Negative,
    /// Positive roots, `χ` dominant.
    Positive,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Negative => "negative",
            Mode::Positive => "positive",
        }
    }

    fn sign(self) -> i64 {
        match self {
            Mode::Negative => -1,
            Mode::Positive => 1,
        }
    }
}

/// A root evaluated at a fixed point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub root: Vec<i64>,
    pub basepoint: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertTerm {
    pub coeff: Rational,
    pub factors: Vec<Factor>,
}

/// `Σ coeff·∏ ν(x)` over weighted roots `ν(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub mode: Mode,
    /// Fixed points allowed as basepoints.
    pub allowed: Vec<usize>,
    pub terms: Vec<CertTerm>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition {
    pub target: Poly<Rational>,
    pub terms: Vec<(Rational, Vec<Vec<i64>>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    PolynomialMismatch,
    NegativeCoefficient(usize),
    RepeatedRoot(usize),
    WrongSign(usize),
    BasepointOutside { term: usize, basepoint: usize },
}

/// Coordinates of a polynomial in the forms `β̄_i(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NegrootExpansion<F: Field> {
    /// Variable `i` stands for `β̄_i(x)`.
    pub poly: Poly<F>,
}

impl NegrootExpansion<Rational> {
    pub fn is_nonneg(&self) -> bool {
        self.poly.is_nonneg()
    }
}

/// Writes `c` as a polynomial in `{β̄_i(x)}`, completing the forms to a basis.
pub fn negroot_expand_at<F: Field>(calc: &Calculus<F>, c: &Poly<F>, x: usize) -> Result<NegrootExpansion<F>> {
    let forms = calc.cfg.negative_simple_bars(x);
    let n = calc.nvars();
    let k = forms.len();
    if rank(&forms) < k {
        return Err(Error::OutsideSpan("the forms β̄_i(x) are dependent".into()));
    }
    let mut basis = forms.clone();
    for j in 0..n {
        if basis.len() == n {
            break;
        }
        let mut e = vec![F::zero(); n];
        e[j] = F::one();
        basis.push(e);
        if rank(&basis) < basis.len() {
            basis.pop();
        }
    }
    let inv = invert(&basis).expect("completed basis is invertible");
    let images: Vec<Vec<F>> = (0..n).map(|i| inv[i].clone()).collect();
    let t = c.substitute_linear(&images);
    let mut out = Poly::zero(k);
    for (m, coef) in t.terms() {
        if m.0[k..].iter().any(|&e| e > 0) {
            return Err(Error::OutsideSpan(format!(
                "coefficient is not a polynomial in the β̄_i at position {}",
                x
            )));
        }
        out.add_term(Monomial(m.0[..k].to_vec()), coef.clone());
    }
    Ok(NegrootExpansion { poly: out })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

pub fn squarefree_decompose(target: &Poly<Rational>, roots: &[Vec<i64>]) -> Result<Option<SquarefreeDecomposition>> {
    squarefree_decompose_with_limit(target, roots, DEFAULT_MAX_COLUMNS)
}

/// Nonnegative combination of products of `d` distinct roots equal to `target`,
/// or `None` when no such combination exists.
pub fn squarefree_decompose_with_limit(
    target: &Poly<Rational>,
    roots: &[Vec<i64>],
    max_columns: usize,
) -> Result<Option<SquarefreeDecomposition>> {
    if target.is_zero() {
        return Ok(Some(SquarefreeDecomposition {
            target: target.clone(),
            terms: vec![],
        }));
    }
    if !target.is_homogeneous() {
        return Err(Error::InvalidInput("target is not homogeneous".into()));
    }
    let d = target.degree().unwrap() as usize;
    if d > roots.len() {
        return Ok(None);
    }
    if binomial(roots.len(), d) > max_columns as u128 {
        return Err(Error::SizeLimit(format!(
            "{} choose {} root subsets exceeds {}",
            roots.len(),
            d,
            max_columns
        )));
    }
    let nv = target.nvars();
    let subsets = combinations(roots.len(), d);
    let columns: Vec<Poly<Rational>> = subsets
        .iter()
        .map(|s| {
            let forms: Vec<Vec<Rational>> = s
                .iter()
                .map(|&i| roots[i].iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect();
            product_of_linear(nv, &forms)
        })
        .collect();
    let mut monos: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in columns.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let next = monos.len();
            monos.entry(m.clone()).or_insert(next);
        }
    }
    let rows = monos.len();
    let mut a = vec![vec![Rational::zero(); columns.len()]; rows];
    for (j, p) in columns.iter().enumerate() {
        for (m, c) in p.terms() {
            a[monos[m]][j] = c.clone();
        }
    }
    let mut b = vec![Rational::zero(); rows];
    for (m, c) in target.terms() {
        b[monos[m]] = c.clone();
    }
    match solve_nonneg_linear_with_limit(&a, &b, max_columns)? {
        Feasibility::Infeasible(_) => Ok(None),
        Feasibility::Feasible(x) => Ok(Some(SquarefreeDecomposition {
            target: target.clone(),
            terms: x
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (c.clone(), subsets[j].iter().map(|&i| roots[i].clone()).collect()))
                .collect(),
        })),
    }
}

impl SquarefreeDecomposition {
    pub fn evaluate(&self) -> Poly<Rational> {
        let nv = self.target.nvars();
        self.terms.iter().fold(Poly::zero(nv), |acc, (c, roots)| {
            let forms: Vec<Vec<Rational>> = roots
                .iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect();
            &acc + &product_of_linear(nv, &forms).scale(c)
        })
    }
}

/// Terms with factors `β̄(x)`, keyed by the sorted factor list.
type BarTerms = BTreeMap<Vec<Factor>, Rational>;

fn check_mode(cfg: &NumericConfig, mode: Mode) -> Result<()> {
    let s = mode.sign();
    for (r, _) in &cfg.datum().positive_roots {
        let a = cfg.a_of_int(r);
        if a.is_positive() && s < 0 || a.is_negative() && s > 0 {
            return Err(Error::InvalidInput(format!(
                "{} mode requires χ {}",
                mode.name(),
                if s < 0 { "antidominant" } else { "dominant" }
            )));
        }
    }
    Ok(())
}

/// `β_I δ_{Z_w} = Σ_y f_{y,I} δ_{Z_y}` by peeling one root at a time:
/// `f_{y,I} = β̄(y) f_{y,I'} + Σ_{z ⋗ y} (a_β/a_z)(λ·γ^∨) f_{z,I'}`.
fn peel(calc: &Calculus<Rational>, w: usize, roots: &[Vec<i64>]) -> Vec<BarTerms> {
    let cfg = &calc.cfg;
    let cos = cfg.cosets();
    let n = calc.len();
    let mut f: Vec<BarTerms> = vec![BTreeMap::new(); n];
    f[w].insert(vec![], Rational::one());
    for beta in roots {
        let ab = cfg.a_of_int(beta);
        let mut next: Vec<BarTerms> = vec![BTreeMap::new(); n];
        for y in 0..n {
            for (fac, c) in &f[y] {
                let mut g = fac.clone();
                g.push(Factor {
                    root: beta.clone(),
                    basepoint: y,
                });
                g.sort();
                *next[y].entry(g).or_insert_with(Rational::zero) += c;
            }
            if ab.is_zero() {
                continue;
            }
            for cov in cos.covers_above(y) {
                let z = cov.upper;
                let k = &ab / cfg.a_rep(z) * Rational::from_integer(calc.cfg.flag.lambda_pairing(cov.root).into());
                for (fac, c) in &f[z] {
                    *next[y].entry(fac.clone()).or_insert_with(Rational::zero) += &k * c;
                }
            }
        }
        for t in next.iter_mut() {
            t.retain(|_, c| !c.is_zero());
        }
        f = next;
    }
    f
}

/// Re-expands `Σ_I b_I β_I δ_{Z_w}` in the plain basis, returning per-`y` terms in `β̄(x)` form.
fn reexpand_bar(
    calc: &Calculus<Rational>,
    w: usize,
    dec: &SquarefreeDecomposition,
    mode: Mode,
) -> Result<Vec<BarTerms>> {
    check_mode(&calc.cfg, mode)?;
    let n = calc.len();
    let mut acc: Vec<BarTerms> = vec![BTreeMap::new(); n];
    for (b, roots) in &dec.terms {
        for r in roots {
            if !calc.cfg.datum().is_root(r) || (mode.sign() < 0) == calc.cfg.datum().is_positive_root(r) {
                return Err(Error::InvalidInput(format!("{:?} is not a {} root", r, mode.name())));
            }
        }
        for (y, terms) in peel(calc, w, roots).into_iter().enumerate() {
            for (fac, c) in terms {
                *acc[y].entry(fac).or_insert_with(Rational::zero) += b * &c;
            }
        }
    }
    for t in acc.iter_mut() {
        t.retain(|_, c| !c.is_zero());
    }
    Ok(acc)
}

fn to_certificate(calc: &Calculus<Rational>, terms: &BarTerms, scale: &Rational, mode: Mode, allowed: Vec<usize>) -> Certificate {
    let cfg = &calc.cfg;
    let terms = terms
        .iter()
        .map(|(fac, c)| {
            let s = fac
                .iter()
                .fold(c * scale, |acc, f| acc * cfg.bar_to_weighted_scale(&f.root, f.basepoint));
            CertTerm {
                coeff: s,
                factors: fac.clone(),
            }
        })
        .collect();
    Certificate { mode, allowed, terms }
}

/// Certificates for `α_I δ_{X_w}`-type expansions: per `y`, the weighted-basis coefficient.
pub fn reexpand_weighted(
    calc: &Calculus<Rational>,
    w: usize,
    dec: &SquarefreeDecomposition,
    mode: Mode,
) -> Result<Vec<Certificate>> {
    let bars = reexpand_bar(calc, w, dec, mode)?;
    let cos = calc.cfg.cosets();
    (0..calc.len())
        .map(|y| {
            let scale = calc.cfg.q_value(w) / calc.cfg.q_value(y);
            let allowed = (0..calc.len()).filter(|&x| cos.leq(y, x) && cos.leq(x, w)).collect();
            Ok(to_certificate(calc, &bars[y], &scale, mode, allowed))
        })
        .collect()
}

impl Certificate {
    pub fn evaluate(&self, cfg: &NumericConfig) -> Poly<Rational> {
        let nv = cfg.rank();
        self.terms.iter().fold(Poly::zero(nv), |acc, t| {
            let forms: Vec<Vec<Rational>> = t
                .factors
                .iter()
                .map(|f| cfg.weighted_root(&f.root, f.basepoint))
                .collect();
            &acc + &product_of_linear(nv, &forms).scale(&t.coeff)
        })
    }

    pub fn to_json(&self, cfg: &NumericConfig) -> Value {
        let g = cfg.group();
        let c = cfg.cosets();
        json!({
            "mode": self.mode.name(),
            "terms": self.terms.iter().map(|t| json!({
                "coeff": t.coeff.to_string(),
                "factors": t.factors.iter().map(|f| json!({
                    "root": f.root,
                    "basepoint": g.format_word(c.element(f.basepoint)),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Checks the polynomial identity, signs, distinctness and basepoint membership.
pub fn verify_certificate(cfg: &NumericConfig, cert: &Certificate, claimed: &Poly<Rational>) -> Vec<Violation> {
    let mut out = Vec::new();
    if cert.evaluate(cfg) != *claimed {
        out.push(Violation::PolynomialMismatch);
    }
    let d = cfg.datum();
    for (i, t) in cert.terms.iter().enumerate() {
        if !t.coeff.is_positive() {
            out.push(Violation::NegativeCoefficient(i));
        }
        let mut roots: Vec<&Vec<i64>> = t.factors.iter().map(|f| &f.root).collect();
        roots.sort();
        if roots.windows(2).any(|p| p[0] == p[1]) {
            out.push(Violation::RepeatedRoot(i));
        }
        let want_positive = cert.mode == Mode::Positive;
        if t.factors.iter().any(|f| d.is_positive_root(&f.root) != want_positive || !d.is_root(&f.root)) {
            out.push(Violation::WrongSign(i));
        }
        if let Some(f) = t.factors.iter().find(|f| !cert.allowed.contains(&f.basepoint)) {
            out.push(Violation::BasepointOutside {
                term: i,
                basepoint: f.basepoint,
            });
        }
    }
    out
}

/// Negative roots of the datum.
pub fn negative_roots(cfg: &NumericConfig) -> Vec<Vec<i64>> {
    cfg.datum()
        .positive_roots
        .iter()
        .map(|(r, _)| r.iter().map(|x| -x).collect())
        .collect()
}

/// Certificates for every `c_{uv}^w`, from the non-weighted constants at `χ₀`.
#[derive(Clone, Debug)]
pub struct ProductCertificates {
    pub u: usize,
    pub v: usize,
    /// Weighted-basis structure constants.
    pub constants: Vec<Poly<Rational>>,
    /// Non-weighted decompositions, indexed by base class.
    pub decompositions: Vec<Option<SquarefreeDecomposition>>,
    pub certificates: Vec<Certificate>,
}

pub fn certify_product(
    calc: &Calculus<Rational>,
    nonweighted: &Calculus<Rational>,
    u: usize,
    v: usize,
) -> Result<ProductCertificates> {
    let cfg = &calc.cfg;
    let cos = cfg.cosets();
    let n = calc.len();
    let b = nonweighted.structure_constants(u, v, Basis::Plain)?;
    let roots = negative_roots(cfg);
    let mut acc: Vec<BarTerms> = vec![BTreeMap::new(); n];
    let mut decompositions = vec![None; n];
    for w in b.support() {
        let dec = squarefree_decompose(&b.coeffs[w], &roots)?.ok_or_else(|| {
            Error::Infeasible(format!(
                "no square-free nonnegative decomposition of the non-weighted constant at position {}",
                w
            ))
        })?;
        for (y, terms) in reexpand_bar(calc, w, &dec, Mode::Negative)?.into_iter().enumerate() {
            for (fac, c) in terms {
                *acc[y].entry(fac).or_insert_with(Rational::zero) += c;
            }
        }
        decompositions[w] = Some(dec);
    }
    let c = calc.structure_constants(u, v, Basis::Weighted)?;
    let certificates = (0..n)
        .map(|y| {
            acc[y].retain(|_, c| !c.is_zero());
            let scale = cfg.q_value(u) * cfg.q_value(v) / cfg.q_value(y);
            to_certificate(calc, &acc[y], &scale, Mode::Negative, cos.interval_intersection(u, v, y))
        })
        .collect();
    Ok(ProductCertificates {
        u,
        v,
        constants: c.coeffs,
        decompositions,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::rat;
    use crate::rootdata::RootDatum;
    use crate::weighted::Flag;

    fn a4_negative(v: &[i64]) -> Vec<i64> {
        v.iter().map(|x| -x).collect()
    }

    #[test]
    fn squarefree_example() {
        let b2 = a4_negative(&[0, 0, 1, -1, 0]);
        let b3 = a4_negative(&[0, 0, 0, 1, -1]);
        let b23: Vec<i64> = b2.iter().zip(&b3).map(|(a, b)| a + b).collect();
        let l = |v: &[i64]| Poly::linear_int(v);
        let target = &(&l(&b2) * &l(&b2)) + &(&l(&b2) * &l(&b3));
        let d = RootDatum::preset("gl(5)").unwrap();
        let roots: Vec<Vec<i64>> = d.positive_roots.iter().map(|(r, _)| a4_negative(r)).collect();
        let dec = squarefree_decompose(&target, &roots).unwrap().unwrap();
        assert_eq!(dec.evaluate(), target);
        let mut want = vec![b2, b23];
        want.sort();
        let mut got = dec.terms[0].1.clone();
        got.sort();
        assert_eq!(dec.terms.len(), 1);
        assert_eq!((dec.terms[0].0.clone(), got), (rat(1), want));
    }

    #[test]
    fn infeasible_and_trivial() {
        let roots = vec![vec![-1, 1]];
        let t = Poly::linear_int(&[1, -1]);
        assert!(squarefree_decompose(&t, &roots).unwrap().is_none());
        let dec = squarefree_decompose(&t.scale(&rat(-1)), &roots).unwrap().unwrap();
        assert_eq!(dec.terms, vec![(rat(1), vec![vec![-1, 1]])]);
    }

    #[test]
    fn lagrangian_certificates() {
        let f = Flag::new(&RootDatum::preset("cstar_sp4").unwrap(), &[1, 1, 1], None).unwrap();
        let calc = Calculus::new(NumericConfig::numeric(f.clone(), &[11, -4, -3]).unwrap());
        let nw = Calculus::new(NumericConfig::nonweighted(f).unwrap());
        for u in 0..4 {
            for v in 0..4 {
                let pc = certify_product(&calc, &nw, u, v).unwrap();
                for y in 0..4 {
                    let bad = verify_certificate(&calc.cfg, &pc.certificates[y], &pc.constants[y]);
                    assert!(bad.is_empty(), "{:?}", bad);
                }
            }
        }
    }

    #[test]
    fn violations_are_reported() {
        let f = Flag::new(&RootDatum::preset("cstar_sp4").unwrap(), &[1, 1, 1], None).unwrap();
        let calc = Calculus::new(NumericConfig::numeric(f.clone(), &[11, -4, -3]).unwrap());
        let nw = Calculus::new(NumericConfig::nonweighted(f).unwrap());
        let pc = certify_product(&calc, &nw, 2, 2).unwrap();
        let y = 3;
        let mut cert = pc.certificates[y].clone();
        assert!(!cert.terms.is_empty());
        cert.allowed.clear();
        assert!(verify_certificate(&calc.cfg, &cert, &pc.constants[y])
            .iter()
            .any(|v| matches!(v, Violation::BasepointOutside { .. })));
        let mut cert = pc.certificates[y].clone();
        let f0 = cert.terms[0].factors[0].clone();
        cert.terms[0].factors.push(f0);
        assert!(verify_certificate(&calc.cfg, &cert, &pc.constants[y]).contains(&Violation::RepeatedRoot(0)));
    }
}
