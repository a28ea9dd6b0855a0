use crate::exactpoly::field::Rational;
use crate::exactpoly::poly::Poly;
use crate::rootdata::{ParabolicCosets, WeylGroup};
use std::collections::BTreeMap;

/// Non-weighted fixed-point restrictions of all Schubert classes, independent of `χ`.
#[derive(Clone, Debug)]
pub struct RestrictionTable {
    /// `values[w][x] = i_x^* δ_{Y_w}` as a polynomial in the coordinates of `𝕙*`.
    values: Vec<Vec<Poly<Rational>>>,
    /// Roots whose product is the diagonal restriction at `w`.
    diagonal: Vec<Vec<Vec<i64>>>,
}

impl RestrictionTable {
    pub fn new(g: &WeylGroup, cosets: &ParabolicCosets) -> Self {
        let n = cosets.len();
        let rank = g.rank();
        let w0 = g.longest();
        let mut values = vec![vec![Poly::zero(rank); n]; n];
        let mut diagonal = vec![vec![]; n];
        for x in 0..n {
            let v = g.mul(w0, cosets.element(x));
            let (sums, roots) = subword_sums(g, v);
            for w in 0..n {
                let u = g.mul(w0, cosets.element(w));
                if let Some(p) = sums.get(&u) {
                    values[w][x] = p.clone();
                }
            }
            diagonal[x] = roots;
        }
        RestrictionTable { values, diagonal }
    }

    pub fn value(&self, w: usize, x: usize) -> &Poly<Rational> {
        &self.values[w][x]
    }

    pub fn diagonal_roots(&self, w: usize) -> &[Vec<i64>] {
        &self.diagonal[w]
    }

    /// The diagonal restriction at `w` as a constant times primitive linear forms,
    /// each with positive leading coordinate.
    pub fn euler_factors(&self, w: usize) -> (Rational, Vec<Vec<i64>>) {
        let mut c = Rational::from_integer(1.into());
        let mut factors = Vec::new();
        for r in &self.diagonal[w] {
            let g = r.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
            let s = r.iter().find(|&&x| x != 0).map_or(1, |&x| x.signum());
            factors.push(r.iter().map(|&x| x / (g * s)).collect());
            c *= Rational::from_integer((g * s).into());
        }
        factors.sort();
        (c, factors)
    }
}

/// For `v` with canonical word `s_{i_1}⋯s_{i_L}`, sums over reduced subwords of
/// `∏_j w₀ s_{i_1}⋯s_{i_{j-1}}(α_{i_j})`, keyed by the element the subword spells.
/// Also returns the `L` twisted roots.
fn subword_sums(g: &WeylGroup, v: usize) -> (BTreeMap<usize, Poly<Rational>>, Vec<Vec<i64>>) {
    let rank = g.rank();
    let w0 = g.longest();
    let word = g.word(v).to_vec();
    let mut prefix = 0;
    let mut roots = Vec::with_capacity(word.len());
    for &i in &word {
        let twist = g.mul(w0, prefix);
        roots.push(g.act_int(twist, &g.datum.simple_roots[i]));
        prefix = g.right_mul_simple(prefix, i);
    }
    let mut dp: BTreeMap<usize, Poly<Rational>> = BTreeMap::new();
    dp.insert(0, Poly::one(rank));
    for (t, &i) in word.iter().enumerate() {
        let factor = Poly::linear_int(&roots[t]);
        let mut next = dp.clone();
        for (&y, p) in &dp {
            let y2 = g.right_mul_simple(y, i);
            if g.length(y2) == g.length(y) + 1 {
                let term = p * &factor;
                let e = next.entry(y2).or_insert_with(|| Poly::zero(rank));
                *e = &*e + &term;
            }
        }
        dp = next;
    }
    dp.retain(|_, p| !p.is_zero());
    (dp, roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::rat;
    use crate::rootdata::RootDatum;

    #[test]
    fn lagrangian_point_class_is_euler_value() {
        let g = WeylGroup::new(&RootDatum::preset("cstar_sp4").unwrap()).unwrap();
        let c = ParabolicCosets::new(&g, &[0]).unwrap();
        let t = RestrictionTable::new(&g, &c);
        let pt = c.bottom();
        let x = |i| Poly::<Rational>::var(3, i);
        let expect = (&(&x(1) + &x(2)) * &(&x(1) * &x(2))).scale(&rat(-4));
        assert_eq!(t.value(pt, pt), &expect);
        assert_eq!(t.value(c.top(), pt), &Poly::one(3));
        let (k, f) = t.euler_factors(pt);
        assert_eq!(k, rat(-4));
        assert_eq!(f, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
        assert!(t.euler_factors(c.top()).1.is_empty());
        for w in 0..4 {
            for y in 0..4 {
                assert_eq!(t.value(w, y).is_zero(), !c.leq(y, w));
            }
        }
    }
}
