//! Exact polynomial arithmetic, divided differences and rational feasibility.

use wschub::exactpoly::{rat, solve_nonneg_linear, Feasibility, Poly, RatFunc, Rational};

pub fn run_example() -> wschub::Result<()> {
    let x = |i| Poly::<Rational>::var(3, i);
    let f = &(&x(0) - &x(1)) * &(&x(0) + &x(2));
    let q = f.exact_divide_linear(&[rat(1), rat(-1), rat(0)])?;
    println!("f = {}, f/(x0 - x1) = {}", f, q);

    let d = f.divided_difference(&[1, -1, 0], &[1, -1, 0])?;
    println!("divided difference of f along x0 - x1: {}", d);

    let a = |i| RatFunc::param(i);
    let c = (a(0) - a(1)) / (a(0) * a(0) - a(1) * a(1));
    println!("(a0 - a1)/(a0² - a1²) = {}", c);

    let m = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
    match solve_nonneg_linear(&m, &[rat(3), rat(1)])? {
        Feasibility::Feasible(v) => println!("nonnegative solution {:?}", v.iter().map(|r| r.to_string()).collect::<Vec<_>>()),
        Feasibility::Infeasible(y) => println!("Farkas witness {:?}", y),
    }
    match solve_nonneg_linear(&m, &[rat(-1), rat(0)])? {
        Feasibility::Feasible(v) => println!("unexpected solution {:?}", v),
        Feasibility::Infeasible(y) => println!("Farkas witness {:?}", y.iter().map(|r| r.to_string()).collect::<Vec<_>>()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("polynomial example");
}
