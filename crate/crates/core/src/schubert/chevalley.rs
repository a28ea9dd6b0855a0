use super::calculus::{Basis, Calculus, GkmClass, SchubertExpansion};
use crate::error::{Error, Result};
use crate::exactpoly::field::{Field, Rational};
use crate::exactpoly::linalg::{dot, invert};
use crate::exactpoly::poly::Poly;
use crate::rootdata::datum::dot_i;

/// Closed forms for `δ_{u_α}·δ_v`, each already checked against the GKM product.
#[derive(Clone, Debug)]
pub struct DivisorProduct<F: Field> {
    /// Position of `u_α = w₀ r_α`.
    pub u: usize,
    pub omega: Vec<F>,
    pub general: SchubertExpansion<F>,
    /// Present when `λ` itself satisfies the defining pairings of `ω_α`.
    pub cominuscule: Option<SchubertExpansion<F>>,
    pub rebased: Option<SchubertExpansion<F>>,
}

fn pair<F: Field>(mu: &[F], coroot: &[i64]) -> F {
    mu.iter()
        .zip(coroot)
        .fold(F::zero(), |s, (m, &c)| s + m.clone() * F::from_i64(c))
}

impl<F: Field> Calculus<F> {
    fn verify(&self, what: &str, formula: &SchubertExpansion<F>, gkm: &SchubertExpansion<F>) -> Result<()> {
        if formula == gkm {
            return Ok(());
        }
        let p = (0..self.len())
            .find(|&p| formula.coeffs[p] != gkm.coeffs[p])
            .unwrap_or(0);
        Err(Error::VerificationMismatch(format!(
            "{} at position {}: closed form {} but GKM gives {}",
            what, p, formula.coeffs[p], gkm.coeffs[p]
        )))
    }

    fn constant(&self, c: F) -> Poly<F> {
        Poly::constant(self.nvars(), c)
    }

    fn q_ratio(&self, basis: Basis, num: &[usize], den: usize) -> Result<F> {
        let mut r = F::one();
        for &p in num {
            r = r * self.basis_factor(basis, p)?;
        }
        Ok(r / self.basis_factor(basis, den)?)
    }

    /// `(vλ)δ^H_{Z_v} = Σ_{w ⋖ v} (λ·γ^∨) δ^H_{Z_w}`.
    pub fn lambda_multiply(&self, v: usize) -> Result<SchubertExpansion<F>> {
        let mut out = SchubertExpansion::zero(Basis::Plain, self.len(), self.nvars());
        for c in self.cfg.cosets().covers_below(v) {
            out.add_to(c.lower, &self.constant(F::from_i64(self.lambda_pairing(c.root))));
        }
        let vl = self.cfg.lift(self.cfg.flag.rep_lambda(v));
        let gkm = self.expand(
            &self.multiply(&self.scalar(&vl), &self.class(v, Basis::Plain)?),
            Basis::Plain,
        )?;
        self.verify("lambda_multiply", &out, &gkm)?;
        Ok(out)
    }

    /// `μ·δ_v = μ̄(v)δ_v + (a_μ/a_v) Σ_{w ⋖ v} (q_v/q_w)(λ·γ^∨) δ_w`.
    pub fn chevalley_mu(&self, mu: &[F], v: usize, basis: Basis) -> Result<SchubertExpansion<F>> {
        let mut out = SchubertExpansion::zero(basis, self.len(), self.nvars());
        out.coeffs[v] = Poly::linear(&self.cfg.bar(mu, v));
        let s = self.cfg.a_of(mu) / self.cfg.a_rep(v).clone();
        for c in self.cfg.cosets().covers_below(v) {
            let k = s.clone() * self.q_ratio(basis, &[v], c.lower)? * F::from_i64(self.lambda_pairing(c.root));
            out.add_to(c.lower, &self.constant(k));
        }
        let gkm = self.expand(&self.multiply(&self.scalar(mu), &self.class(v, basis)?), basis)?;
        self.verify("chevalley_mu", &out, &gkm)?;
        Ok(out)
    }

    /// `(1⊗μ̃)δ_v = bar(vμ, v)δ_v + Σ_{w ⋖ v} (q_v/q_w)((a_{vμ}/a_v)λ − μ)·γ^∨ δ_w`.
    pub fn chevalley_line(&self, mu: &[F], v: usize, basis: Basis) -> Result<SchubertExpansion<F>> {
        self.check_levi_invariant(mu)?;
        let g = self.cfg.group();
        let vmu = g.act(self.cfg.cosets().element(v), mu)?;
        let mut out = SchubertExpansion::zero(basis, self.len(), self.nvars());
        out.coeffs[v] = Poly::linear(&self.cfg.bar(&vmu, v));
        let s = self.cfg.a_of(&vmu) / self.cfg.a_rep(v).clone();
        for c in self.cfg.cosets().covers_below(v) {
            let coroot = self.cfg.flag.positive_coroot(c.root);
            let pairing = s.clone() * F::from_i64(self.lambda_pairing(c.root)) - pair(mu, coroot);
            let k = self.q_ratio(basis, &[v], c.lower)? * pairing;
            out.add_to(c.lower, &self.constant(k));
        }
        let gkm = self.expand(
            &self.multiply(&self.line_bundle_class(mu)?, &self.class(v, basis)?),
            basis,
        )?;
        self.verify("chevalley_line", &out, &gkm)?;
        Ok(out)
    }

    /// Minimal-norm `ω` in the coroot span with `ω·β_j^∨ = δ_{ij}`.
    pub fn fundamental_weight(&self, i: usize) -> Result<Vec<F>> {
        let d = self.cfg.datum();
        let s = d.semisimple_rank();
        if i >= s {
            return Err(Error::InvalidInput(format!("no simple root α{}", i + 1)));
        }
        let cor: Vec<Vec<Rational>> = d
            .simple_coroots
            .iter()
            .map(|c| c.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        let gram: Vec<Vec<Rational>> = cor
            .iter()
            .map(|a| cor.iter().map(|b| dot(a, b)).collect())
            .collect();
        let inv = invert(&gram).ok_or_else(|| Error::InvalidCartan("dependent coroots".into()))?;
        let mut omega = vec![Rational::from_integer(0.into()); d.rank];
        for (k, c) in cor.iter().enumerate() {
            for (o, x) in omega.iter_mut().zip(c) {
                *o = &*o + &inv[k][i] * x;
            }
        }
        Ok(omega.iter().map(F::from_rational).collect())
    }

    /// Position of `u_α = w₀ r_α` for a simple root outside the parabolic.
    pub fn divisor_position(&self, i: usize) -> Result<usize> {
        let cos = self.cfg.cosets();
        if cos.parabolic.contains(&i) {
            return Err(Error::InvalidInput(format!("α{} lies in the parabolic subset", i + 1)));
        }
        let g = self.cfg.group();
        if i >= g.datum.semisimple_rank() {
            return Err(Error::InvalidInput(format!("no simple root α{}", i + 1)));
        }
        let u = g.mul(g.longest(), g.simple_reflection(i));
        cos.position(u)
            .ok_or_else(|| Error::NotRepresentative(g.format_word(u)))
    }

    /// `bar(w₀ω − xω, x)` at each `x`: the plain divisor class `(w₀ω ⊗ 1) − (1 ⊗ ω̃)`.
    pub fn divisor_class(&self, omega: &[F]) -> Result<GkmClass<F>> {
        let g = self.cfg.group();
        let w0w = g.act(g.longest(), omega)?;
        let values = (0..self.len())
            .map(|x| {
                let xw = g.act(self.cfg.cosets().element(x), omega)?;
                let diff: Vec<F> = w0w.iter().zip(&xw).map(|(a, b)| a.clone() - b.clone()).collect();
                Ok(Poly::linear(&self.cfg.bar(&diff, x)))
            })
            .collect::<Result<_>>()?;
        Ok(GkmClass { values })
    }

    fn lambda_is_fundamental(&self, i: usize) -> bool {
        let d = self.cfg.datum();
        d.simple_coroots
            .iter()
            .enumerate()
            .all(|(j, c)| dot_i(&self.cfg.flag.lambda, c) == (i == j) as i64)
    }

    /// `δ_{u_α}δ_v = q_u bar(w₀ω − vω, v)δ_v
    ///   + Σ_{w ⋖ v} (q_u q_v/q_w)((a_{w₀ω−vω}/a_v)λ + ω)·γ^∨ δ_w`,
    /// with the cominuscule and `w₀`-rebased forms when `λ = ω_α`.
    pub fn chevalley_divisor(&self, i: usize, v: usize, basis: Basis) -> Result<DivisorProduct<F>> {
        let u = self.divisor_position(i)?;
        let omega = self.fundamental_weight(i)?;
        let g = self.cfg.group();
        let cos = self.cfg.cosets();
        let n = self.len();
        let lam = self.cfg.lift(&self.cfg.flag.lambda);
        let w0w = g.act(g.longest(), &omega)?;
        let vw = g.act(cos.element(v), &omega)?;
        let diff: Vec<F> = w0w.iter().zip(&vw).map(|(a, b)| a.clone() - b.clone()).collect();
        let qu = self.basis_factor(basis, u)?;
        let av = self.cfg.a_rep(v).clone();

        let mut general = SchubertExpansion::zero(basis, n, self.nvars());
        general.coeffs[v] = Poly::linear(&self.cfg.bar(&diff, v)).scale(&qu);
        let s = self.cfg.a_of(&diff) / av.clone();
        for c in cos.covers_below(v) {
            let coroot = self.cfg.flag.positive_coroot(c.root);
            let mixed: Vec<F> = lam
                .iter()
                .zip(&omega)
                .map(|(l, o)| s.clone() * l.clone() + o.clone())
                .collect();
            let k = self.q_ratio(basis, &[u, v], c.lower)? * pair(&mixed, coroot);
            general.add_to(c.lower, &self.constant(k));
        }
        let gkm = self.structure_constants(u, v, basis)?;
        self.verify("chevalley_divisor", &general, &gkm)?;

        let (cominuscule, rebased) = if self.lambda_is_fundamental(i) {
            let top = cos.top();
            let ratio = self.cfg.a_rep(top).clone() / av;
            let w0l = self.cfg.lift(self.cfg.flag.rep_lambda(top));
            let mut com = SchubertExpansion::zero(basis, n, self.nvars());
            com.coeffs[v] = Poly::linear(&self.cfg.bar(&w0l, v)).scale(&qu);
            let mut reb = SchubertExpansion::zero(basis, n, self.nvars());
            let dl: Vec<i64> = self
                .cfg
                .flag
                .rep_lambda(top)
                .iter()
                .zip(self.cfg.flag.rep_lambda(v))
                .map(|(a, b)| a - b)
                .collect();
            let e = self
                .cfg
                .datum()
                .root_coeffs_int(&dl)
                .ok_or_else(|| Error::OutsideSpan("w₀λ − vλ".into()))?;
            let bars = self.cfg.negative_simple_bars(top);
            let mut form = vec![F::zero(); self.nvars()];
            for (ei, b) in e.iter().zip(&bars) {
                for (f, x) in form.iter_mut().zip(b) {
                    *f = f.clone() + F::from_rational(ei) * x.clone();
                }
            }
            let outer = qu.clone() * ratio.clone();
            reb.coeffs[v] = Poly::linear(&form).scale(&outer);
            for c in cos.covers_below(v) {
                let lp = F::from_i64(self.lambda_pairing(c.root));
                let k = self.q_ratio(basis, &[u, v], c.lower)? * ratio.clone() * lp.clone();
                com.add_to(c.lower, &self.constant(k));
                let k2 = outer.clone() * self.q_ratio(basis, &[v], c.lower)? * lp;
                reb.add_to(c.lower, &self.constant(k2));
            }
            self.verify("cominuscule Chevalley", &com, &gkm)?;
            self.verify("w₀-rebased Chevalley", &reb, &gkm)?;
            (Some(com), Some(reb))
        } else {
            (None, None)
        };
        Ok(DivisorProduct {
            u,
            omega,
            general,
            cominuscule,
            rebased,
        })
    }
}
