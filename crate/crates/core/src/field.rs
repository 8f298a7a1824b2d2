//! Arithmetic in `GF(2^m)` for odd `m`.
//!
//! Elements are little-endian coefficient masks: bit `i` is the coefficient
//! of `x^i`. Addition is XOR; multiplication is a carry-less product reduced
//! by a fixed irreducible modulus, so every run is bit-reproducible.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::Serialize;

use crate::certify::{Certificate, Quantity, Relation};
use crate::numtheory::{factorize, gcd};
use crate::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: u32 = 31;
/// Largest degree for which `x ↦ x^(1+θ)` is checked to be bijective by exhaustion.
pub const EXHAUSTIVE_DEGREE: u32 = 11;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// characteristic 2: addition is XOR
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}

/// A concrete model of `F_q`, `q = 2^m`, together with `θ = 2^((m+1)/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldParams {
    m: u32,
    modulus: u64,
    theta_exponent: u64,
}

fn fixed_modulus(m: u32) -> Option<u64> {
    match m {
        3 => Some(0b1011),
        5 => Some((1 << 5) | (1 << 2) | 1),
        7 => Some((1 << 7) | (1 << 1) | 1),
        9 => Some((1 << 9) | (1 << 4) | 1),
        11 => Some((1 << 11) | (1 << 2) | 1),
        _ => None,
    }
}

// --- GF(2)[x] on u64 masks (degree <= 62) ---

fn poly_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut r = 0u64;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    r
}

fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Rabin-style irreducibility test: `f` of degree `d` is irreducible iff
/// `gcd(x^(2^k) - x mod f, f) = 1` for every `1 <= k <= d/2`.
pub fn is_irreducible(f: u64) -> bool {
    let d = poly_degree(f);
    if !(1..=31).contains(&d) {
        return false;
    }
    let mut xp = 0b10u64; // x^(2^k) mod f
    for _ in 1..=(d / 2) {
        xp = poly_rem(clmul(xp, xp), f);
        if poly_gcd(f, xp ^ 0b10) != 1 {
            return false;
        }
    }
    true
}

fn least_irreducible(m: u32) -> u64 {
    let mut f = (1u64 << m) | 1;
    loop {
        if is_irreducible(f) {
            return f;
        }
        f += 2;
    }
}

impl FieldParams {
    pub fn new(m: u32) -> Result<Self> {
        if m.is_multiple_of(2) || !(3..=MAX_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        let modulus = fixed_modulus(m).unwrap_or_else(|| least_irreducible(m));
        if !is_irreducible(modulus) {
            return Err(Error::Internal(format!("modulus {modulus:#b} is reducible")));
        }
        Ok(FieldParams { m, modulus, theta_exponent: 1u64 << m.div_ceil(2) })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `n` with `m = 2n + 1`.
    pub fn half(&self) -> u32 {
        (self.m - 1) / 2
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn theta_exponent(&self) -> u64 {
        self.theta_exponent
    }

    /// `q = 2^m`.
    pub fn order(&self) -> u64 {
        1u64 << self.m
    }

    pub fn element(&self, bits: u32) -> FieldElement {
        debug_assert!((bits as u64) < self.order());
        FieldElement(bits)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order() as u32).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.order() as u32).map(FieldElement)
    }

    /// The `F_2`-basis `1, x, ..., x^(m-1)`.
    pub fn basis(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.m).map(|i| FieldElement(1 << i))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(poly_rem(clmul(a.0 as u64, b.0 as u64), self.modulus) as u32)
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            k >>= 1;
        }
        acc
    }

    /// `a^θ` by `(m+1)/2` squarings.
    pub fn theta(&self, a: FieldElement) -> FieldElement {
        (0..self.m.div_ceil(2)).fold(a, |x, _| self.square(x))
    }

    /// `a^(1+θ)`.
    pub fn norm_like(&self, a: FieldElement) -> FieldElement {
        self.mul(a, self.theta(a))
    }

    pub fn inverse(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// Absolute trace to `F_2`: the sum of the `m` Frobenius conjugates.
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        let mut t = FieldElement::ZERO;
        let mut x = a;
        for _ in 0..self.m {
            t += x;
            x = self.square(x);
        }
        t
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut ord = self.order() - 1;
        for (p, _) in factorize(ord) {
            while ord.is_multiple_of(p) && self.pow(a, ord / p) == FieldElement::ONE {
                ord /= p;
            }
        }
        Ok(ord)
    }

    /// Least-mask generator of `F_q^×`.
    pub fn primitive_element(&self) -> FieldElement {
        let n = self.order() - 1;
        let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
        self.nonzero_elements()
            .find(|&g| primes.iter().all(|&p| self.pow(g, n / p) != FieldElement::ONE))
            .expect("a finite field has a primitive element")
    }
}

/// Certificate that `gcd(2^m - 1, 1 + 2^((m+1)/2)) = 1`, with the bijectivity
/// of `x ↦ x^(1+θ)` checked by exhaustion for `m <= 11`.
pub fn verify_gcd_identity(m: u32) -> Result<Certificate> {
    let p = FieldParams::new(m)?;
    let q1 = p.order() - 1;
    let g = gcd(q1, 1 + p.theta_exponent());
    let mut cert = Certificate::compare(
        "gcd_identity",
        Quantity::from(g),
        Relation::Eq,
        Quantity::from(1u64),
    )
    .with_param("m", m)
    .with_param("q_minus_1", q1)
    .with_param("one_plus_theta", 1 + p.theta_exponent());
    if m <= EXHAUSTIVE_DEGREE {
        let mut seen = vec![false; p.order() as usize];
        for x in p.elements() {
            seen[p.norm_like(x).0 as usize] = true;
        }
        let image = seen.iter().filter(|&&s| s).count() as u64;
        cert.push_step(Certificate::compare(
            "norm_like_map_bijective",
            Quantity::from(image),
            Relation::Eq,
            Quantity::from(p.order()),
        ));
    }
    if !cert.holds {
        return Err(Error::Internal(format!("gcd identity fails at m = {m}")));
    }
    Ok(cert)
}
