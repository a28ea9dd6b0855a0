use crate::error::{Error, Result};
use crate::exactpoly::field::{rat, Rational};
use crate::exactpoly::linalg::solve_in_span;
use std::collections::{BTreeSet, HashMap};

const MAX_ROOTS: usize = 2000;

/// Description of a root datum: a preset name or explicit simple roots and coroots.
#[derive(Clone, Debug, PartialEq)]
pub enum DatumSpec {
    Preset(String),
    Explicit {
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    },
}

/// Integer root datum of rank `m+1` with positive roots enumerated.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    pub name: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    /// Positive roots with their coroots, ordered by height then coordinates.
    pub positive_roots: Vec<(Vec<i64>, Vec<i64>)>,
    pub cartan: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
}

pub fn dot_i(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(v: &[i64], root: &[i64], coroot: &[i64]) -> Vec<i64> {
    let p = dot_i(v, coroot);
    v.iter().zip(root).map(|(x, r)| x - p * r).collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn parse_arg(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .strip_suffix(')')?
        .trim()
        .parse()
        .ok()
}

impl RootDatum {
    pub fn build(spec: &DatumSpec) -> Result<Self> {
        match spec {
            DatumSpec::Preset(name) => Self::preset(name),
            DatumSpec::Explicit {
                simple_roots,
                simple_coroots,
            } => Self::from_simple("explicit", simple_roots.clone(), simple_coroots.clone()),
        }
    }

    /// `gl(k)`, `cstar_gl(k)` or `cstar_sp4`.
    pub fn preset(name: &str) -> Result<Self> {
        let name = name.trim();
        if let Some(k) = parse_arg(name, "gl(") {
            if k < 1 {
                return Err(Error::InvalidInput("gl(k) needs k ≥ 1".into()));
            }
            let roots: Vec<Vec<i64>> = (0..k - 1)
                .map(|i| {
                    let mut v = unit(k, i);
                    v[i + 1] = -1;
                    v
                })
                .collect();
            return Self::with_rank(name, k, roots.clone(), roots);
        }
        if let Some(k) = parse_arg(name, "cstar_gl(") {
            if k < 1 {
                return Err(Error::InvalidInput("cstar_gl(k) needs k ≥ 1".into()));
            }
            let roots: Vec<Vec<i64>> = (1..k)
                .map(|i| {
                    let mut v = unit(k + 1, i);
                    v[i + 1] = -1;
                    v
                })
                .collect();
            return Self::with_rank(name, k + 1, roots.clone(), roots);
        }
        if name == "cstar_sp4" {
            return Self::from_simple(
                name,
                vec![vec![0, 1, -1], vec![0, 0, 2]],
                vec![vec![0, 1, -1], vec![0, 0, 1]],
            );
        }
        Err(Error::InvalidInput(format!("unknown preset {:?}", name)))
    }

    pub fn from_simple(
        name: &str,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let rank = match simple_roots.first().or(simple_coroots.first()) {
            Some(v) => v.len(),
            None => {
                return Err(Error::InvalidInput(
                    "explicit datum needs a rank; use a preset for a torus".into(),
                ))
            }
        };
        Self::with_rank(name, rank, simple_roots, simple_coroots)
    }

    pub fn with_rank(
        name: &str,
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let n = simple_roots.len();
        if simple_coroots.len() != n {
            return Err(Error::InvalidCartan("root and coroot counts differ".into()));
        }
        if simple_roots.iter().chain(&simple_coroots).any(|v| v.len() != rank) {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: 0,
            });
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| dot_i(&simple_roots[i], &simple_coroots[j])).collect())
            .collect();
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {} is not 2", i)));
            }
            for j in 0..n {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidCartan(format!("entry ({}, {})", i, j)));
                }
            }
        }
        let simple_q: Vec<Vec<Rational>> = simple_roots
            .iter()
            .map(|v| v.iter().map(|&x| rat(x)).collect())
            .collect();
        if n > 0 && crate::exactpoly::linalg::rank(&simple_q) < n {
            return Err(Error::InvalidCartan("simple roots are dependent".into()));
        }

        let mut seen: BTreeSet<(Vec<i64>, Vec<i64>)> = BTreeSet::new();
        let mut queue: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for i in 0..n {
            let p = (simple_roots[i].clone(), simple_coroots[i].clone());
            if seen.insert(p.clone()) {
                queue.push(p);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let (r, c) = queue[head].clone();
            head += 1;
            for i in 0..n {
                let r2 = reflect(&r, &simple_roots[i], &simple_coroots[i]);
                let c2 = reflect(&c, &simple_coroots[i], &simple_roots[i]);
                let p = (r2, c2);
                if seen.insert(p.clone()) {
                    queue.push(p);
                    if queue.len() > MAX_ROOTS {
                        return Err(Error::SizeLimit("root system is not finite".into()));
                    }
                }
            }
        }
        let mut positive: Vec<(Vec<i64>, Vec<i64>, Vec<Rational>)> = Vec::new();
        for (r, c) in queue {
            let target: Vec<Rational> = r.iter().map(|&x| rat(x)).collect();
            let coords = solve_in_span(&simple_q, &target)
                .ok_or_else(|| Error::InvalidCartan("root outside simple span".into()))?;
            let zero = rat(0);
            if coords.iter().all(|x| *x >= zero) {
                positive.push((r, c, coords));
            } else if !coords.iter().all(|x| *x <= zero) {
                return Err(Error::InvalidCartan("root of mixed sign".into()));
            }
        }
        positive.sort_by(|a, b| {
            let ha: Rational = a.2.iter().sum();
            let hb: Rational = b.2.iter().sum();
            ha.cmp(&hb).then_with(|| b.2.cmp(&a.2))
        });
        let positive_roots: Vec<(Vec<i64>, Vec<i64>)> =
            positive.into_iter().map(|(r, c, _)| (r, c)).collect();
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, (r, _))| (r.clone(), k))
            .collect();
        Ok(RootDatum {
            name: name.to_string(),
            rank,
            simple_roots,
            simple_coroots,
            positive_roots,
            cartan,
            root_index,
        })
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Index of a positive root and the sign of `v` relative to it.
    pub fn root_lookup(&self, v: &[i64]) -> Option<(usize, i64)> {
        if let Some(&k) = self.root_index.get(v) {
            return Some((k, 1));
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.root_index.get(&neg).map(|&k| (k, -1))
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_lookup(v).is_some()
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.root_index.contains_key(v)
    }

    pub fn coroot_of(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.root_lookup(v).map(|(k, s)| {
            self.positive_roots[k].1.iter().map(|x| s * x).collect()
        })
    }

    /// Negative simple roots `β_i = −α_i`.
    pub fn negative_simple_roots(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|v| v.iter().map(|x| -x).collect())
            .collect()
    }

    /// Coefficients of `μ` over the negative simple roots, or `None` off the root span.
    pub fn root_coeffs(&self, mu: &[Rational]) -> Option<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self
            .negative_simple_roots()
            .iter()
            .map(|v| v.iter().map(|&x| rat(x)).collect())
            .collect();
        if cols.is_empty() {
            return if mu.iter().all(|x| *x == rat(0)) {
                Some(vec![])
            } else {
                None
            };
        }
        solve_in_span(&cols, mu)
    }

    pub fn root_coeffs_int(&self, mu: &[i64]) -> Option<Vec<Rational>> {
        self.root_coeffs(&mu.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    /// Simple-root coordinates of a positive root.
    pub fn simple_coords(&self, k: usize) -> Vec<i64> {
        self.root_coeffs_int(&self.positive_roots[k].0)
            .unwrap()
            .iter()
            .map(|x| -crate::exactpoly::field::to_i64(x).unwrap())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp4_preset() {
        let d = RootDatum::preset("cstar_sp4").unwrap();
        assert_eq!(d.simple_roots, vec![vec![0, 1, -1], vec![0, 0, 2]]);
        assert_eq!(d.simple_coroots, vec![vec![0, 1, -1], vec![0, 0, 1]]);
        assert_eq!(d.positive_roots.len(), 4);
        assert_eq!(d.cartan, vec![vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn gl2_preset() {
        let d = RootDatum::preset("gl(2)").unwrap();
        assert_eq!(d.simple_roots, vec![vec![1, -1]]);
        assert_eq!(d.simple_coroots, vec![vec![1, -1]]);
    }

    #[test]
    fn cstar_gl4_positive_roots() {
        let d = RootDatum::preset("cstar_gl(4)").unwrap();
        assert_eq!(d.positive_roots.len(), 6);
        for i in 1..=4 {
            for j in i + 1..=4 {
                let mut v = vec![0; 5];
                v[i] = 1;
                v[j] = -1;
                assert!(d.is_positive_root(&v));
            }
        }
    }

    #[test]
    fn bad_cartan() {
        let r = RootDatum::from_simple("x", vec![vec![1, 0]], vec![vec![1, 0]]);
        assert!(matches!(r, Err(Error::InvalidCartan(_))));
    }

    #[test]
    fn root_coeffs_examples() {
        let d = RootDatum::preset("cstar_sp4").unwrap();
        assert_eq!(d.root_coeffs_int(&[0, 0, -2]), Some(vec![rat(0), rat(1)]));
        assert_eq!(d.root_coeffs_int(&[0, 0, 0]), Some(vec![rat(0), rat(0)]));
        assert_eq!(d.root_coeffs_int(&[1, 1, 1]), None);
    }
}
