//! Exact rational scalars used throughout the crate.
//!
//! Everything downstream (root coordinates, structure constants, Pfaffian
//! coefficients) is built on arbitrary-precision rationals; no floating
//! point enters any structural computation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics on `q == 0`.
pub fn ratq(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses "p", "-p" or "p/q" into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

/// Renders a rational as "p" or "p/q".
pub fn format_rat(x: &Rat) -> String {
    let mut out = String::new();
    if x.denom().is_one() {
        let _ = write!(out, "{}", x.numer());
    } else {
        let _ = write!(out, "{}/{}", x.numer(), x.denom());
    }
    out
}

/// True when `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Absolute value.
pub fn abs(x: &Rat) -> Rat {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

/// Lexicographic comparison of rational vectors.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> core::cmp::Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            core::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    core::cmp::Ordering::Equal
}

/// True when the first nonzero coordinate is positive.
pub fn lex_positive(v: &[Rat]) -> bool {
    for x in v {
        if x.is_positive() {
            return true;
        }
        if x.is_negative() {
            return false;
        }
    }
    false
}

/// Componentwise sum.
pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

/// Componentwise difference.
pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

/// Scales a vector.
pub fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

/// Euclidean dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x * y;
    }
    acc
}

/// True when every coordinate is zero.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-7/2").unwrap(), ratq(-7, 2));
        assert_eq!(parse_rat(" 5 / 10 ").unwrap(), ratq(1, 2));
        assert!(parse_rat("1/0").is_none());
        assert_eq!(format_rat(&ratq(-7, 2)), "-7/2");
        assert_eq!(format_rat(&rat(4)), "4");
    }

    #[test]
    fn lex_order() {
        let a = [rat(0), rat(1)];
        let b = [rat(1), rat(-5)];
        assert!(lex_positive(&a));
        assert!(lex_positive(&b));
        assert!(!lex_positive(&[rat(0), rat(-1)]));
        assert_eq!(lex_cmp(&a, &b), core::cmp::Ordering::Less);
    }
}
