use super::weyl::{BitSet, WeylGroup};
use crate::error::{Error, Result};
use std::cmp::Reverse;
use std::collections::HashMap;

/// A cover `lower ⋖_P upper` with `lower = upper·r_γ`, `γ` the positive root with index `root`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub root: usize,
}

/// Maximal-length coset representatives `W^P`, indexed by position in canonical order
/// (length descending, then lexicographic reduced word).
#[derive(Clone, Debug)]
pub struct ParabolicCosets {
    pub parabolic: Vec<usize>,
    reps: Vec<usize>,
    pos: HashMap<usize, usize>,
    coset_of: Vec<usize>,
    below: Vec<BitSet>,
    covers: Vec<Cover>,
    covers_below: Vec<Vec<Cover>>,
    covers_above: Vec<Vec<Cover>>,
    in_levi: Vec<bool>,
    inversion: Vec<Vec<usize>>,
}

impl ParabolicCosets {
    pub fn new(g: &WeylGroup, parabolic: &[usize]) -> Result<Self> {
        let s = g.datum.semisimple_rank();
        let mut j: Vec<usize> = parabolic.to_vec();
        j.sort_unstable();
        j.dedup();
        if let Some(&bad) = j.iter().find(|&&i| i >= s) {
            return Err(Error::InvalidInput(format!("no simple root with index {}", bad + 1)));
        }
        let npos = g.datum.positive_roots.len();
        let in_levi: Vec<bool> = (0..npos)
            .map(|k| {
                g.datum
                    .simple_coords(k)
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || j.contains(&i))
            })
            .collect();
        let simple_index: Vec<usize> = (0..s)
            .map(|i| {
                g.datum
                    .root_lookup(&g.datum.simple_roots[i])
                    .expect("simple root is a root")
                    .0
            })
            .collect();
        let mut reps: Vec<usize> = (0..g.len())
            .filter(|&w| j.iter().all(|&i| g.act_root(w, simple_index[i], 1).1 < 0))
            .collect();
        reps.sort_by_key(|&w| (Reverse(g.length(w)), g.word(w).to_vec()));
        let pos: HashMap<usize, usize> = reps.iter().enumerate().map(|(p, &w)| (w, p)).collect();

        let levi: Vec<usize> = (0..g.len())
            .filter(|&w| g.word(w).iter().all(|i| j.contains(i)))
            .collect();
        let mut coset_of = vec![usize::MAX; g.len()];
        for (p, &r) in reps.iter().enumerate() {
            for &l in &levi {
                coset_of[g.mul(r, l)] = p;
            }
        }
        debug_assert!(coset_of.iter().all(|&c| c != usize::MAX));

        let n = reps.len();
        let below: Vec<BitSet> = (0..n)
            .map(|v| {
                let mut b = BitSet::new(n);
                for u in 0..n {
                    if g.bruhat_leq(reps[u], reps[v]) {
                        b.set(u);
                    }
                }
                b
            })
            .collect();

        let mut covers = Vec::new();
        for (pv, &v) in reps.iter().enumerate() {
            for k in 0..npos {
                let w = g.mul(v, g.reflection(k));
                if let Some(&pw) = pos.get(&w) {
                    if g.length(w) + 1 == g.length(v) {
                        covers.push(Cover {
                            lower: pw,
                            upper: pv,
                            root: k,
                        });
                    }
                }
            }
        }
        let mut covers_below = vec![vec![]; n];
        let mut covers_above = vec![vec![]; n];
        for c in &covers {
            covers_below[c.upper].push(*c);
            covers_above[c.lower].push(*c);
        }
        for l in covers_above.iter_mut() {
            l.sort_by_key(|c| c.upper);
        }

        let inversion: Vec<Vec<usize>> = reps
            .iter()
            .map(|&w| {
                let winv = g.inverse(w);
                (0..npos)
                    .filter(|&k| {
                        let (k2, sgn) = g.act_root(winv, k, 1);
                        sgn < 0 && !in_levi[k2]
                    })
                    .collect()
            })
            .collect();

        Ok(ParabolicCosets {
            parabolic: j,
            reps,
            pos,
            coset_of,
            below,
            covers,
            covers_below,
            covers_above,
            in_levi,
            inversion,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Weyl group element of the representative at position `p`.
    pub fn element(&self, p: usize) -> usize {
        self.reps[p]
    }

    pub fn elements(&self) -> &[usize] {
        &self.reps
    }

    pub fn position(&self, w: usize) -> Option<usize> {
        self.pos.get(&w).copied()
    }

    /// Position of the representative of the coset `wW_P`.
    pub fn coset_of(&self, w: usize) -> usize {
        self.coset_of[w]
    }

    /// Position of `w_0`.
    pub fn top(&self) -> usize {
        0
    }

    /// Position of the minimal representative `w_0^P`.
    pub fn bottom(&self) -> usize {
        self.reps.len() - 1
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.below[v].get(u)
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    /// Covers `w ⋖_P v` for fixed upper element `v`.
    pub fn covers_below(&self, v: usize) -> &[Cover] {
        &self.covers_below[v]
    }

    /// Covers `y ⋖_P z` for fixed lower element `y`.
    pub fn covers_above(&self, y: usize) -> &[Cover] {
        &self.covers_above[y]
    }

    /// Whether the positive root with index `k` lies in the Levi subsystem.
    pub fn in_levi(&self, k: usize) -> bool {
        self.in_levi[k]
    }

    /// `Φ_w^P`: positive root indices `α` with `w⁻¹α ∈ Φ(𝔲⁻)`.
    pub fn inversion_set(&self, p: usize) -> &[usize] {
        &self.inversion[p]
    }

    pub fn inversion_set_of(&self, w: usize) -> Result<&[usize]> {
        let p = self
            .position(w)
            .ok_or_else(|| Error::NotRepresentative(format!("element {}", w)))?;
        Ok(self.inversion_set(p))
    }

    /// `S(u,v;w) = [w,u] ∩ [w,v]` as positions.
    pub fn interval_intersection(&self, u: usize, v: usize, w: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.leq(w, x) && self.leq(x, u) && self.leq(x, v))
            .collect()
    }
}
