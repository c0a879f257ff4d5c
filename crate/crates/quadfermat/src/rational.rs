//! Arbitrary-precision rationals and exact p-th roots.
//!
//! The scalar type is `num_rational::BigRational`, which already maintains the
//! canonical form this crate relies on: always reduced, denominator positive,
//! zero stored as 0/1. Equality is therefore structural.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

/// Convenience constructor from machine integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for integral rationals.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact p-th root of a rational for odd prime `p`.
///
/// Returns `Some(r)` with `r^p = q` when such a rational exists, `None`
/// otherwise. Odd `p` makes the root unique, and negatives are fine.
pub fn rational_pth_root(q: &BigRational, p: u32) -> Option<BigRational> {
    debug_assert!(p % 2 == 1 && p > 1);
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let num = exact_int_root(&q.numer().abs(), p)?;
    let den = exact_int_root(q.denom(), p)?;
    let root = BigRational::new(num, den);
    Some(if q.is_negative() { -root } else { root })
}

/// Exact p-th root of a non-negative integer, if it is a perfect p-th power.
fn exact_int_root(n: &BigInt, p: u32) -> Option<BigInt> {
    debug_assert!(!n.is_negative());
    if n.is_zero() || n.is_one() {
        return Some(n.clone());
    }
    let r = n.nth_root(p);
    if r.pow(p) == *n {
        Some(r)
    } else {
        None
    }
}

/// Renders a rational as `n` or `n/m` with the reduced, positive-denominator
/// form the type already guarantees.
pub fn render(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/m` (whitespace-insensitive).
pub fn parse(s: &str) -> crate::Result<BigRational> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mk_err = || crate::Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| mk_err())?;
            let d: BigInt = d.parse().map_err(|_| mk_err())?;
            if d.is_zero() {
                return Err(crate::Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(BigRational::from_integer(n))
        }
    }
}
