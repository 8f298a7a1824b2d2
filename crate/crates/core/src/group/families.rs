//! Standard small groups with canonical indexing.

use super::GroupTable;
use crate::numtheory::{gcd, primes, primorial};
use crate::{Error, Result};

/// `C_n`, element `i` is the residue `i`.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    GroupTable::from_fn(n, |a, b| (a + b) % n)
}

/// Dihedral group of the given (even) order `2k`: `r^i s^j` has index
/// `i + k·j`, with `s r s = r⁻¹`.
pub fn dihedral(order: usize) -> Result<GroupTable> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("dihedral order {order} must be even and positive")));
    }
    let k = order / 2;
    GroupTable::from_fn(order, |a, b| {
        let (i, j) = (a % k, a / k);
        let (p, q) = (b % k, b / k);
        let i2 = if j == 0 { (i + p) % k } else { (i + k - p) % k };
        i2 + k * ((j + q) % 2)
    })
}

/// `Q8 = ⟨a, b | a⁴, b² = a², b⁻¹ab = a⁻¹⟩`, `a^i b^j` at index `i + 4j`.
pub fn quaternion8() -> GroupTable {
    GroupTable::from_fn(8, |x, y| {
        let (i, j) = (x % 4, x / 4);
        let (k, l) = (y % 4, y / 4);
        let mut e = if j == 0 { i + k } else { i + 4 - k };
        let mut f = j + l;
        if f == 2 {
            e += 2;
            f = 0;
        }
        e % 4 + 4 * f
    })
    .expect("Q8 table is valid")
}

/// `G₁ × G₂` with `(a, b)` at index `a + |G₁|·b`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable) -> Result<GroupTable> {
    use super::FiniteGroup;
    let n1 = g1.order();
    GroupTable::from_fn(n1 * g2.order(), |x, y| g1.mul(x % n1, y % n1) + n1 * g2.mul(x / n1, y / n1))
}

/// `C_n ⋊ C_k` where the generator `b` of `C_k` acts by `b a b⁻¹ = a^r`;
/// `a^i b^j` at index `i + n·j`.
pub fn semidirect_cyclic(n: usize, k: usize, r: usize) -> Result<GroupTable> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("factor orders must be positive".into()));
    }
    let r = r % n.max(1);
    let mut pow = vec![1 % n; k];
    for j in 1..k {
        pow[j] = pow[j - 1] * r % n;
    }
    if n > 1 && (gcd(r as u64, n as u64) != 1 || pow[k - 1] * r % n != 1) {
        return Err(Error::InvalidArgument(format!("x -> x^{r} is not an automorphism of C_{n} of order dividing {k}")));
    }
    GroupTable::from_fn(n * k, |x, y| {
        let (i, j) = (x % n, x / n);
        let (p, q) = (y % n, y / n);
        (i + pow[j] * p) % n + n * ((j + q) % k)
    })
}

/// Named families indexed by `n`:
///
/// * `dihedral`: `D_{2^n}`
/// * `cq8`: `C_{2^(n−3)} × Q8`
/// * `modular-s3`: `C_{r_n/6} × S3`, `r_n` the product of the first `n` primes
/// * `modular-d`: `C_{r_n/(2p_n)} × D_{2p_n}`
pub fn family(name: &str, n: u32) -> Result<GroupTable> {
    match name {
        "dihedral" => {
            if !(2..=12).contains(&n) {
                return Err(Error::InvalidArgument(format!("dihedral family needs 2 <= n <= 12, got {n}")));
            }
            dihedral(1 << n)
        }
        "cq8" => {
            if !(3..=12).contains(&n) {
                return Err(Error::InvalidArgument(format!("cq8 family needs 3 <= n <= 12, got {n}")));
            }
            direct_product(&cyclic(1 << (n - 3))?, &quaternion8())
        }
        "modular-s3" | "modular-d" => {
            if !(2..=8).contains(&n) {
                return Err(Error::InvalidArgument(format!("{name} family needs 2 <= n <= 8, got {n}")));
            }
            let r = primorial(n as usize) as usize;
            if r > super::DENSE_ORDER_CAP {
                return Err(Error::OrderCap { order: r, cap: super::DENSE_ORDER_CAP });
            }
            if name == "modular-s3" {
                direct_product(&cyclic(r / 6)?, &dihedral(6)?)
            } else {
                let p = *primes(n as usize).last().expect("n >= 2") as usize;
                direct_product(&cyclic(r / (2 * p))?, &dihedral(2 * p)?)
            }
        }
        _ => Err(Error::InvalidArgument(format!("unknown family {name:?}"))),
    }
}

pub const FAMILIES: [&str; 4] = ["dihedral", "cq8", "modular-s3", "modular-d"];
