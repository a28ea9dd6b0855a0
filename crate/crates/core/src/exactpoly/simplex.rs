use super::field::Rational;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};

pub const DEFAULT_MAX_COLUMNS: usize = 200;

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    /// `x ≥ 0` with `Ax = b`.
    Feasible(Vec<Rational>),
    /// Farkas witness `y` with `yᵀA ≥ 0` and `yᵀb < 0`.
    Infeasible(Vec<Rational>),
}

pub fn solve_nonneg_linear(a: &[Vec<Rational>], b: &[Rational]) -> Result<Feasibility> {
    solve_nonneg_linear_with_limit(a, b, DEFAULT_MAX_COLUMNS)
}

/// Phase-one simplex with Bland's rule in exact arithmetic.
pub fn solve_nonneg_linear_with_limit(
    a: &[Vec<Rational>],
    b: &[Rational],
    max_columns: usize,
) -> Result<Feasibility> {
    let m = b.len();
    if a.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: a.len(),
        });
    }
    let n = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("ragged constraint matrix".into()));
    }
    if n > max_columns {
        return Err(Error::SizeLimit(format!(
            "{} columns exceeds limit {}",
            n, max_columns
        )));
    }
    let width = n + m + 1;
    let rhs = n + m;
    let signs: Vec<Rational> = b
        .iter()
        .map(|v| if v.is_negative() { -Rational::one() } else { Rational::one() })
        .collect();
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); width];
            for j in 0..n {
                row[j] = &a[i][j] * &signs[i];
            }
            row[n + i] = Rational::one();
            row[rhs] = &b[i] * &signs[i];
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut cost = vec![Rational::zero(); width];
    for j in 0..n {
        cost[j] = -t.iter().map(|r| r[j].clone()).sum::<Rational>();
    }
    cost[rhs] = -t.iter().map(|r| r[rhs].clone()).sum::<Rational>();

    loop {
        let enter = match (0..n + m).find(|&j| cost[j].is_negative()) {
            Some(j) => j,
            None => break,
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let r = &t[i][rhs] / &t[i][enter];
            leave = match leave {
                None => Some(i),
                Some(k) => {
                    let rk = &t[k][rhs] / &t[k][enter];
                    if r < rk || (r == rk && basis[i] < basis[k]) {
                        Some(i)
                    } else {
                        Some(k)
                    }
                }
            };
        }
        let p = leave.expect("phase-one objective is bounded below");
        let piv = t[p][enter].clone();
        for v in t[p].iter_mut() {
            *v = &*v / &piv;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v = &*v - &f * pv;
                }
            }
        }
        let f = cost[enter].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            *v = &*v - &f * pv;
        }
        basis[p] = enter;
    }

    let objective = -cost[rhs].clone();
    if objective.is_positive() {
        let y: Vec<Rational> = (0..m)
            .map(|i| -(Rational::one() - &cost[n + i]) * &signs[i])
            .collect();
        return Ok(Feasibility::Infeasible(y));
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][rhs].clone();
        }
    }
    Ok(Feasibility::Feasible(x))
}

/// Checks a claimed solution or Farkas witness against the system.
pub fn check_feasibility(a: &[Vec<Rational>], b: &[Rational], f: &Feasibility) -> bool {
    let n = a.first().map_or(0, Vec::len);
    match f {
        Feasibility::Feasible(x) => {
            x.iter().all(|v| !v.is_negative())
                && a.iter().zip(b).all(|(row, bi)| {
                    row.iter().zip(x).map(|(r, v)| r * v).sum::<Rational>() == *bi
                })
        }
        Feasibility::Infeasible(y) => {
            (0..n).all(|j| {
                !a.iter()
                    .zip(y)
                    .map(|(row, yi)| &row[j] * yi)
                    .sum::<Rational>()
                    .is_negative()
            }) && b.iter().zip(y).map(|(bi, yi)| bi * yi).sum::<Rational>().is_negative()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::field::rat;

    #[test]
    fn single_variable() {
        let a = vec![vec![rat(1)]];
        assert_eq!(
            solve_nonneg_linear(&a, &[rat(3)]).unwrap(),
            Feasibility::Feasible(vec![rat(3)])
        );
        let f = solve_nonneg_linear(&a, &[rat(-1)]).unwrap();
        assert!(matches!(f, Feasibility::Infeasible(_)));
        assert!(check_feasibility(&a, &[rat(-1)], &f));
    }

    #[test]
    fn degenerate_system() {
        let a = vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(1), rat(2), rat(1)],
        ];
        let b = vec![rat(2), rat(2), rat(4)];
        let f = solve_nonneg_linear(&a, &b).unwrap();
        assert!(matches!(f, Feasibility::Feasible(_)));
        assert!(check_feasibility(&a, &b, &f));
    }

    #[test]
    fn column_limit() {
        let a = vec![vec![rat(1); 5]];
        assert!(solve_nonneg_linear_with_limit(&a, &[rat(1)], 4).is_err());
    }
}
