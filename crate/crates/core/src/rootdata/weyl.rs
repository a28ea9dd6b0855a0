use super::datum::{dot_i, RootDatum};
use crate::error::{Error, Result};
use crate::exactpoly::field::Field;
use std::collections::HashMap;

pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// A Weyl group element: integer matrix on weights, length, lex-minimal reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<i64>,
    pub length: usize,
    pub word: Vec<usize>,
}

/// Fixed-size bitset used for order relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet(Vec<u64>);

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet(vec![0; (n + 63) / 64])
    }
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

/// The Weyl group with multiplication tables, reflections and Bruhat order.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub datum: RootDatum,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    right_mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    /// Element index of the reflection in each positive root.
    reflections: Vec<usize>,
    below: Vec<BitSet>,
    covers: Vec<(usize, usize, usize)>,
}

fn matmul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

/// Matrix of `μ ↦ μ − (μ·α^∨)α`.
pub fn reflection_matrix(root: &[i64], coroot: &[i64]) -> Vec<i64> {
    let n = root.len();
    let mut m = vec![0; n * n];
    for r in 0..n {
        for c in 0..n {
            m[r * n + c] = (r == c) as i64 - root[r] * coroot[c];
        }
    }
    m
}

impl WeylGroup {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        Self::with_limit(datum, DEFAULT_MAX_ORDER)
    }

    pub fn with_limit(datum: &RootDatum, max_order: usize) -> Result<Self> {
        let n = datum.rank;
        let s = datum.semisimple_rank();
        let gens: Vec<Vec<i64>> = (0..s)
            .map(|i| reflection_matrix(&datum.simple_roots[i], &datum.simple_coroots[i]))
            .collect();
        let mut id = vec![0; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        let mut elements = vec![WeylElement {
            matrix: id.clone(),
            length: 0,
            word: vec![],
        }];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut right_mul: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(s);
            for (i, g) in gens.iter().enumerate() {
                let m = matmul(&elements[head].matrix, g, n);
                let k = match index.get(&m) {
                    Some(&k) => k,
                    None => {
                        if elements.len() >= max_order {
                            return Err(Error::SizeLimit(format!(
                                "Weyl group exceeds {} elements",
                                max_order
                            )));
                        }
                        let mut word = elements[head].word.clone();
                        word.push(i);
                        let k = elements.len();
                        elements.push(WeylElement {
                            matrix: m.clone(),
                            length: elements[head].length + 1,
                            word,
                        });
                        index.insert(m, k);
                        k
                    }
                };
                row.push(k);
            }
            right_mul.push(row);
            head += 1;
        }
        let mut g = WeylGroup {
            datum: datum.clone(),
            elements,
            index,
            right_mul,
            inverse: vec![],
            reflections: vec![],
            below: vec![],
            covers: vec![],
        };
        g.inverse = (0..g.len())
            .map(|w| {
                let word: Vec<usize> = g.elements[w].word.iter().rev().cloned().collect();
                g.from_word(&word).unwrap()
            })
            .collect();
        g.reflections = datum
            .positive_roots
            .iter()
            .map(|(r, c)| g.index[&reflection_matrix(r, c)])
            .collect();
        g.build_bruhat();
        Ok(g)
    }

    fn build_bruhat(&mut self) {
        let n = self.len();
        let mut covers = Vec::new();
        for u in 0..n {
            for (k, &r) in self.reflections.iter().enumerate() {
                let v = self.mul(u, r);
                if self.elements[v].length == self.elements[u].length + 1 {
                    covers.push((u, v, k));
                }
            }
        }
        let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        let mut lower: Vec<Vec<usize>> = vec![vec![]; n];
        for &(u, v, _) in &covers {
            lower[v].push(u);
        }
        for v in 0..n {
            below[v].set(v);
            for &u in &lower[v] {
                let b = below[u].clone();
                below[v].union_with(&b);
            }
        }
        self.below = below;
        self.covers = covers;
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.len() - 1
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    pub fn word(&self, w: usize) -> &[usize] {
        &self.elements[w].word
    }

    pub fn lookup(&self, matrix: &[i64]) -> Option<usize> {
        self.index.get(matrix).copied()
    }

    pub fn simple_reflection(&self, i: usize) -> usize {
        self.right_mul[0][i]
    }

    pub fn right_mul_simple(&self, w: usize, i: usize) -> usize {
        self.right_mul[w][i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.elements[b]
            .word
            .iter()
            .fold(a, |acc, &i| self.right_mul[acc][i])
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let s = self.datum.semisimple_rank();
        word.iter().try_fold(0, |acc, &i| {
            if i >= s {
                Err(Error::InvalidInput(format!("no simple reflection s{}", i + 1)))
            } else {
                Ok(self.right_mul[acc][i])
            }
        })
    }

    /// Reflection in the positive root with index `k`.
    pub fn reflection(&self, k: usize) -> usize {
        self.reflections[k]
    }

    pub fn act_int(&self, w: usize, mu: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let m = &self.elements[w].matrix;
        (0..n).map(|r| dot_i(&m[r * n..(r + 1) * n], mu)).collect()
    }

    pub fn act<F: Field>(&self, w: usize, mu: &[F]) -> Result<Vec<F>> {
        let n = self.rank();
        if mu.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: mu.len(),
            });
        }
        let m = &self.elements[w].matrix;
        Ok((0..n)
            .map(|r| {
                (0..n).fold(F::zero(), |s, c| {
                    let e = m[r * n + c];
                    if e == 0 {
                        s
                    } else {
                        s + F::from_i64(e) * mu[c].clone()
                    }
                })
            })
            .collect())
    }

    /// Action on a root: returns the positive root index and sign of `w(±α_k)`.
    pub fn act_root(&self, w: usize, k: usize, sign: i64) -> (usize, i64) {
        let v: Vec<i64> = self
            .act_int(w, &self.datum.positive_roots[k].0)
            .iter()
            .map(|x| sign * x)
            .collect();
        self.datum.root_lookup(&v).expect("Weyl group permutes roots")
    }

    pub fn bruhat_leq(&self, u: usize, v: usize) -> bool {
        self.below[v].get(u)
    }

    /// Bruhat covers `(u, v, k)` with `v = u·r_k` and `ℓ(v) = ℓ(u)+1`.
    pub fn covers(&self) -> &[(usize, usize, usize)] {
        &self.covers
    }

    pub fn format_word(&self, w: usize) -> String {
        format_word(self.word(w))
    }
}

/// `s1.s3.s2` with one-based indices, `e` for the identity.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(".")
    }
}

pub fn parse_word(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Some(vec![]);
    }
    s.split('.')
        .map(|t| {
            t.trim()
                .strip_prefix('s')?
                .parse::<usize>()
                .ok()
                .filter(|&i| i >= 1)
                .map(|i| i - 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(&RootDatum::preset(name).unwrap()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(group("cstar_sp4").len(), 8);
        assert_eq!(group("gl(2)").len(), 2);
        let g = group("cstar_gl(4)");
        assert_eq!(g.len(), 24);
        assert_eq!(g.length(g.longest()), 6);
    }

    #[test]
    fn sp4_longest_acts_by_minus_one() {
        let g = group("cstar_sp4");
        assert_eq!(g.act_int(g.longest(), &[1, 1, 1]), vec![1, -1, -1]);
        assert_eq!(g.act_int(0, &[1, 1, 1]), vec![1, 1, 1]);
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        let g = group("gl(4)");
        for w in 1..g.len() {
            let a = g.element(w - 1);
            let b = g.element(w);
            assert!((a.length, &a.word) < (b.length, &b.word));
        }
    }

    #[test]
    fn limit() {
        let d = RootDatum::preset("gl(4)").unwrap();
        assert!(WeylGroup::with_limit(&d, 10).is_err());
    }

    #[test]
    fn words_round_trip() {
        assert_eq!(parse_word("s1.s3.s2"), Some(vec![0, 2, 1]));
        assert_eq!(format_word(&[0, 2, 1]), "s1.s3.s2");
        assert_eq!(parse_word("e"), Some(vec![]));
        assert_eq!(parse_word("s0"), None);
    }
}
