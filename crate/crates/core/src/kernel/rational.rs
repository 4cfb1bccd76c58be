//! Scalar helpers on top of `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `p/q` or a plain integer. Returns `None` on malformed input or a
/// zero denominator.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    (0..exp).fold(Rational::one(), |acc, _| acc * base)
}

/// `(n+1)^n / n!`, the conjectured maximal volume.
pub fn ehrhart_bound(n: usize) -> Rational {
    Rational::new(BigInt::from(n + 1).pow(n as u32), factorial(n))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// Zero vectors are returned unchanged.
pub fn primitive_direction(values: &[Rational]) -> Vec<Rational> {
    primitive_integers(values)
        .into_iter()
        .map(from_bigint)
        .collect()
}

/// [`primitive_direction`] as integers.
pub fn primitive_integers(values: &[Rational]) -> Vec<BigInt> {
    let lcm = common_denominator(values);
    make_primitive(values.iter().map(|v| (v * &lcm).to_integer()).collect())
}

/// Divides an integer vector by the gcd of its entries (zero stays zero).
pub fn make_primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in ints.iter_mut() {
            *v /= &g;
        }
    }
    ints
}

pub fn sign(value: &Rational) -> i8 {
    if value.is_positive() {
        1
    } else if value.is_negative() {
        -1
    } else {
        0
    }
}
