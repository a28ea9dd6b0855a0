//! Exact arithmetic: rationals, sparse polynomials, rational functions in
//! symbolic parameters, and a nonnegative feasibility solver.

pub mod field;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod serial;
pub mod simplex;

pub use field::{rat, ratio, Field, Rational};
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use simplex::{solve_nonneg_linear, Feasibility};
