use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rational = BigRational;

/// Coefficient field for polynomials: exact rationals, or rational functions
/// in symbolic parameters.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: &Rational) -> Self;

    /// The value as a rational number, if it is a constant.
    fn as_rational(&self) -> Option<Rational>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&rat(n))
    }

    /// True when the value is a rational constant that is negative.
    fn is_negative_constant(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_negative())
    }

    /// Whether the value prints with a leading minus sign.
    fn prints_negative(&self) -> bool {
        self.is_negative_constant()
    }

    /// Whether to wrap the value in parentheses inside a product.
    fn needs_parens(&self) -> bool {
        false
    }
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse::<Rational>().ok()
}

/// Integer value of an integral rational.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    to_integer(r).and_then(|n| n.to_i64())
}

/// Nonnegative gcd with gcd(a, 0) = |a|.
pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |g, x| gcd_big(&g, x))
}

pub fn is_one<F: Field>(f: &F) -> bool {
    f.is_one()
}

pub fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn one_rat() -> Rational {
    Rational::one()
}
