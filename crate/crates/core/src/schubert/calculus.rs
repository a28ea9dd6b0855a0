use crate::error::{Error, Result};
use crate::exactpoly::field::Field;
use crate::exactpoly::poly::Poly;
use crate::rootdata::datum::dot_i;
use crate::weighted::WeightedConfig;
use std::fmt;

/// Which normalization of Schubert classes an expansion refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `δ^T_{X_w} = q_w δ^H_{Z_w}`.
    Weighted,
    /// `δ^H_{Z_w}`.
    Plain,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Weighted => "weighted",
            Basis::Plain => "plain",
        })
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weighted" => Ok(Basis::Weighted),
            "plain" => Ok(Basis::Plain),
            _ => Err(Error::InvalidInput(format!("unknown basis `{}`", s))),
        }
    }
}

/// A tuple of canonical `S(𝕋*)` values, one per fixed point in `W^P` order.
#[derive(Clone, Debug, PartialEq)]
pub struct GkmClass<F: Field> {
    pub values: Vec<Poly<F>>,
}

impl<F: Field> GkmClass<F> {
    /// Common degree of the nonzero values, `None` for the zero class.
    pub fn degree(&self) -> Option<u32> {
        self.values.iter().find_map(|p| p.degree())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        GkmClass {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Poly<F>) -> Self {
        GkmClass {
            values: self.values.iter().map(|a| a * c).collect(),
        }
    }
}

/// An edge `x`–`y` of the moment graph along which a tuple fails divisibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmViolation {
    pub x: usize,
    pub y: usize,
    pub root: Vec<i64>,
}

/// Coefficients in `S(𝕋*)` of a class in the Schubert basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SchubertExpansion<F: Field> {
    pub basis: Basis,
    pub coeffs: Vec<Poly<F>>,
}

impl<F: Field> SchubertExpansion<F> {
    pub fn zero(basis: Basis, n: usize, nvars: usize) -> Self {
        SchubertExpansion {
            basis,
            coeffs: vec![Poly::zero(nvars); n],
        }
    }

    pub fn coeff(&self, p: usize) -> &Poly<F> {
        &self.coeffs[p]
    }

    /// Positions with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&p| !self.coeffs[p].is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add_to(&mut self, p: usize, c: &Poly<F>) {
        self.coeffs[p] = &self.coeffs[p] + c;
    }
}

/// Schubert calculus for one weighted configuration.
#[derive(Clone, Debug)]
pub struct Calculus<F: Field> {
    pub cfg: WeightedConfig<F>,
    /// `plain[w][x]`: canonical restriction of `δ^H_{Z_w}` at `x`.
    plain: Vec<Vec<Poly<F>>>,
    /// Canonical Euler factors at each fixed point.
    diag: Vec<Vec<Vec<F>>>,
}

impl<F: Field> Calculus<F> {
    pub fn new(cfg: WeightedConfig<F>) -> Self {
        let table = cfg.flag.restrictions();
        let n = cfg.cosets().len();
        let images: Vec<Vec<Vec<F>>> = (0..n).map(|x| cfg.bar_images(x)).collect();
        let plain = (0..n)
            .map(|w| {
                (0..n)
                    .map(|x| {
                        let r = table.value(w, x);
                        if r.is_zero() {
                            Poly::zero(cfg.rank())
                        } else {
                            r.map_coeffs(F::from_rational).substitute_linear(&images[x])
                        }
                    })
                    .collect()
            })
            .collect();
        let diag = (0..n)
            .map(|x| {
                table
                    .diagonal_roots(x)
                    .iter()
                    .map(|r| cfg.bar_int(r, x))
                    .collect()
            })
            .collect();
        Calculus { cfg, plain, diag }
    }

    pub fn len(&self) -> usize {
        self.plain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plain.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.cfg.rank()
    }

    /// `q_w` in the weighted basis and `1` in the plain one.
    pub fn basis_factor(&self, basis: Basis, p: usize) -> Result<F> {
        match basis {
            Basis::Weighted => self.cfg.q(p),
            Basis::Plain => Ok(F::one()),
        }
    }

    /// `σ_x`: the canonical `S(𝕋*)` lift of `f` modulo `xλ`.
    pub fn canonicalize(&self, f: &Poly<F>, x: usize) -> Poly<F> {
        f.substitute_linear(&self.cfg.bar_images(x))
    }

    /// Non-weighted restriction `i_x^* δ^{T₀}_{Y_w}` in `𝕙*` coordinates.
    pub fn restrict_nonweighted(&self, w: usize, x: usize) -> Poly<F> {
        self.cfg
            .flag
            .restrictions()
            .value(w, x)
            .map_coeffs(F::from_rational)
    }

    /// Canonical restriction of the basis class `w` at `x`.
    pub fn weighted_restrict(&self, w: usize, x: usize, basis: Basis) -> Result<Poly<F>> {
        let v = &self.plain[w][x];
        match basis {
            Basis::Plain => Ok(v.clone()),
            Basis::Weighted => Ok(v.scale(&self.cfg.q(w)?)),
        }
    }

    /// Canonical Euler factors `bar(ρ, x)` whose product is the plain diagonal value.
    pub fn diagonal_factors(&self, x: usize) -> &[Vec<F>] {
        &self.diag[x]
    }

    pub fn class(&self, w: usize, basis: Basis) -> Result<GkmClass<F>> {
        let values = (0..self.len())
            .map(|x| self.weighted_restrict(w, x, basis))
            .collect::<Result<_>>()?;
        Ok(GkmClass { values })
    }

    pub fn one(&self) -> GkmClass<F> {
        GkmClass {
            values: vec![Poly::one(self.nvars()); self.len()],
        }
    }

    /// The action of `μ ∈ 𝕙*` through `H_H^*`: value `μ̄(x)` at `x`.
    pub fn scalar(&self, mu: &[F]) -> GkmClass<F> {
        GkmClass {
            values: (0..self.len())
                .map(|x| Poly::linear(&self.cfg.bar(mu, x)))
                .collect(),
        }
    }

    /// `c₁` of the line bundle `1 ⊗ μ̃`: value `bar(xμ, x)` at `x`.
    pub fn line_bundle_class(&self, mu: &[F]) -> Result<GkmClass<F>> {
        self.check_levi_invariant(mu)?;
        let g = self.cfg.group();
        let values = (0..self.len())
            .map(|x| {
                let xmu = g.act(self.cfg.cosets().element(x), mu)?;
                Ok(Poly::linear(&self.cfg.bar(&xmu, x)))
            })
            .collect::<Result<_>>()?;
        Ok(GkmClass { values })
    }

    pub(crate) fn check_levi_invariant(&self, mu: &[F]) -> Result<()> {
        let d = self.cfg.datum();
        for &j in &self.cfg.cosets().parabolic {
            let c = self.cfg.lift(&d.simple_coroots[j]);
            if !crate::exactpoly::linalg::dot(mu, &c).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "μ is not invariant under the reflection s{}",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Fixed-point value of `f ⊗ g` where `f` uses variables `0..n` and `g` variables `n..2n`.
    pub fn borel_restrict(&self, f: &Poly<F>, x: usize) -> Result<Poly<F>> {
        let n = self.nvars();
        if f.nvars() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: f.nvars(),
            });
        }
        let g = self.cfg.group();
        let w = self.cfg.cosets().element(x);
        let mut images: Vec<Poly<F>> = (0..n).map(|i| Poly::var(n, i)).collect();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            images.push(Poly::linear(&self.cfg.lift(&g.act_int(w, &e))));
        }
        Ok(self.canonicalize(&f.substitute(&images, n), x))
    }

    /// Pointwise product.
    pub fn multiply(&self, a: &GkmClass<F>, b: &GkmClass<F>) -> GkmClass<F> {
        GkmClass {
            values: a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect(),
        }
    }

    /// Moment graph edges `(x, y, α)` with `α ∈ xΦ(𝔲⁻)` and `y` the coset of `r_α x`.
    pub fn edges(&self) -> Vec<(usize, usize, Vec<i64>)> {
        let c = self.cfg.cosets();
        let g = self.cfg.group();
        let npos = self.cfg.datum().positive_roots.len();
        let mut out = Vec::new();
        for x in 0..self.len() {
            let w = c.element(x);
            for k in 0..npos {
                if c.in_levi(k) {
                    continue;
                }
                let neg: Vec<i64> = self.cfg.flag.positive_root(k).iter().map(|v| -v).collect();
                let alpha = g.act_int(w, &neg);
                let y = c.coset_of(g.mul(w, g.reflection(k)));
                out.push((x, y, alpha));
            }
        }
        out
    }

    /// Divisibility of `f_x − f_y` by `bar(α, x)` on every moment graph edge.
    pub fn gkm_check(&self, c: &GkmClass<F>) -> std::result::Result<(), GkmViolation> {
        for (x, y, alpha) in self.edges() {
            let diff = &c.values[x] - &c.values[y];
            if diff.is_zero() {
                continue;
            }
            if diff.exact_divide_linear(&self.cfg.bar_int(&alpha, x)).is_err() {
                return Err(GkmViolation { x, y, root: alpha });
            }
        }
        Ok(())
    }

    /// Triangular expansion, sweeping `W^P` from the top down.
    pub fn expand(&self, c: &GkmClass<F>, basis: Basis) -> Result<SchubertExpansion<F>> {
        let n = self.len();
        let cos = self.cfg.cosets();
        let mut residual = c.values.clone();
        let mut out = SchubertExpansion::zero(basis, n, self.nvars());
        for x in 0..n {
            if residual[x].is_zero() {
                continue;
            }
            let mut coeff = residual[x].clone();
            for l in &self.diag[x] {
                coeff = coeff.exact_divide_linear(l)?;
            }
            let q = self.basis_factor(basis, x)?;
            coeff = coeff.scale(&(F::one() / q));
            for y in x..n {
                if cos.leq(y, x) && !self.plain[x][y].is_zero() {
                    let sub = &coeff * &self.weighted_restrict(x, y, basis)?;
                    residual[y] = &residual[y] - &sub;
                }
            }
            out.coeffs[x] = coeff;
        }
        if let Some(p) = residual.iter().position(|r| !r.is_zero()) {
            return Err(Error::OutsideSpan(format!(
                "nonzero residual at position {} after expansion",
                p
            )));
        }
        Ok(out)
    }

    /// Rebuilds `Σ c_w δ_w` as a tuple.
    pub fn assemble(&self, e: &SchubertExpansion<F>) -> Result<GkmClass<F>> {
        let mut values = vec![Poly::zero(self.nvars()); self.len()];
        for w in e.support() {
            for (x, v) in values.iter_mut().enumerate() {
                if !self.plain[w][x].is_zero() {
                    *v = &*v + &(&e.coeffs[w] * &self.weighted_restrict(w, x, e.basis)?);
                }
            }
        }
        Ok(GkmClass { values })
    }

    /// `c_{uv}^w` (weighted) or `d_{uv}^w` (plain) for all `w`.
    pub fn structure_constants(&self, u: usize, v: usize, basis: Basis) -> Result<SchubertExpansion<F>> {
        let p = self.multiply(&self.class(u, basis)?, &self.class(v, basis)?);
        self.expand(&p, basis)
    }

    /// `λ·γ^∨` for a cover witnessed by the positive root with index `k`.
    pub(crate) fn lambda_pairing(&self, k: usize) -> i64 {
        dot_i(&self.cfg.flag.lambda, self.cfg.flag.positive_coroot(k))
    }
}
