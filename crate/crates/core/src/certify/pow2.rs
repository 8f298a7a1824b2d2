//! Exact comparison of numbers of the form `c · 2^e`, `c, e ∈ Q`.
//!
//! `a·2^e` vs `b·2^f` (both positive) reduces to `a/b` vs `2^(f-e)`. Writing
//! `a/b = n/d` and `f - e = p/s` with `s > 0`, raise both sides to the `s`-th
//! power: `n^s · 2^max(-p,0)` vs `d^s · 2^max(p,0)`, an integer comparison.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::Signed;

use crate::Rational;

fn pow_big(base: &BigInt, e: &BigInt) -> BigInt {
    let e: u32 = e.try_into().expect("exponent denominator fits in u32");
    num_traits::pow(base.clone(), e as usize)
}

fn shift(x: BigInt, p: &BigInt) -> BigInt {
    let p: u64 = p.try_into().expect("binary exponent fits in u64");
    x << p
}

fn compare_positive(a: &Rational, e: &Rational, b: &Rational, f: &Rational) -> Ordering {
    let ratio = a / b;
    let t = f - e;
    let (n, d) = (ratio.numer(), ratio.denom());
    let (p, s) = (t.numer(), t.denom());
    let lhs = pow_big(n, s);
    let rhs = pow_big(d, s);
    if p.is_negative() {
        shift(lhs, &-p).cmp(&rhs)
    } else {
        lhs.cmp(&shift(rhs, p))
    }
}

/// Exact ordering of `a·2^e` against `b·2^f`.
pub fn compare(a: &Rational, e: &Rational, b: &Rational, f: &Rational) -> Ordering {
    let sa = a.numer().sign();
    let sb = b.numer().sign();
    match (sa, sb) {
        (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
        (Sign::NoSign, Sign::Plus) | (Sign::Minus, Sign::NoSign) | (Sign::Minus, Sign::Plus) => Ordering::Less,
        (Sign::NoSign, Sign::Minus) | (Sign::Plus, Sign::NoSign) | (Sign::Plus, Sign::Minus) => Ordering::Greater,
        (Sign::Plus, Sign::Plus) => compare_positive(a, e, b, f),
        (Sign::Minus, Sign::Minus) => compare_positive(&-a, e, &-b, f).reverse(),
    }
}
