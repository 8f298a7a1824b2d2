//! Elementary number theory on machine integers: factorisation by trial
//! division, divisor functions and multiplicative orders.

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factorisation `n = Π p^e`, primes ascending. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize(0)");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let len = ds.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

/// `d(n)`, the number of divisors.
pub fn divisor_count(n: u64) -> u64 {
    factorize(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

/// `ω(n)`, the number of distinct prime divisors.
pub fn omega(n: u64) -> u64 {
    factorize(n).len() as u64
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// The multiplicative order of 2 modulo an odd `d`; by convention 1 for `d = 1`.
pub fn order_of_two(d: u64) -> u64 {
    assert!(d % 2 == 1, "order of 2 needs an odd modulus");
    if d == 1 {
        return 1;
    }
    let mut r = 1u64;
    let mut acc = 2 % d;
    while acc != 1 {
        acc = acc * 2 % d;
        r += 1;
    }
    r
}

/// Degree `m_d` of the smallest subfield of `GF(2^m)` whose multiplicative
/// group contains an element of order `d`, i.e. the least `r` with
/// `d | 2^r - 1`. Requires `d | 2^m - 1`.
pub fn subfield_degree(d: u64, m: u32) -> Result<u64> {
    let q1 = (1u64 << m) - 1;
    if d == 0 || !q1.is_multiple_of(d) {
        return Err(Error::NotDivisor(d, q1));
    }
    Ok(order_of_two(d))
}

/// `r_n`, the product of the first `n` primes.
pub fn primorial(n: usize) -> u64 {
    primes(n).iter().product()
}

/// The first `n` primes.
pub fn primes(n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut k = 2u64;
    while out.len() < n {
        if is_prime(k) {
            out.push(k);
        }
        k += 1;
    }
    out
}

/// `d(k)` for every `k <= limit` by a divisor sieve; index 0 is unused.
pub fn divisor_count_sieve(limit: usize) -> Vec<u32> {
    let mut d = vec![0u32; limit + 1];
    for i in 1..=limit {
        let mut j = i;
        while j <= limit {
            d[j] += 1;
            j += i;
        }
    }
    d
}
