use super::field::Field;

/// Row-reduces `m` in place and returns the pivot columns.
pub fn row_reduce<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let p = match (r..rows).find(|&i| !m[i][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v = v.clone() - f.clone() * pv.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(vectors: &[Vec<F>]) -> usize {
    let mut m = vectors.to_vec();
    row_reduce(&mut m).len()
}

/// Coefficients `c` with `Σ c_j cols[j] = target`, assuming independent columns.
pub fn solve_in_span<F: Field>(cols: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let n = cols.len();
    let dim = target.len();
    let mut m: Vec<Vec<F>> = (0..dim)
        .map(|i| {
            let mut row: Vec<F> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.contains(&n) || pivots.len() < n {
        return None;
    }
    Some((0..n).map(|j| m[j][n].clone()).collect())
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert<F: Field>(a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let mut m: Vec<Vec<F>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(F::zero(), |s, (x, y)| s + x.clone() * y.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::{rat, Rational};

    #[test]
    fn solve_and_invert() {
        let cols = vec![vec![rat(0), rat(1), rat(-1)], vec![rat(0), rat(0), rat(2)]];
        let c = solve_in_span(&cols, &[rat(0), rat(2), rat(0)]).unwrap();
        assert_eq!(c, vec![rat(2), rat(1)]);
        assert!(solve_in_span(&cols, &[rat(1), rat(0), rat(0)]).is_none());
        let a: Vec<Vec<Rational>> = vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv, vec![vec![rat(1), rat(-1)], vec![rat(-1), rat(2)]]);
    }
}
