//! Gaussian binomial coefficients `[m, k]_q`, generic over the integer type.

use num_traits::Num;

use crate::{Error, Result};

/// `[m, k]_q = Π_{i<k} (q^(m-i) - 1) / (q^(i+1) - 1)`.
///
/// Factors are accumulated in the order that keeps every partial product
/// equal to `[m, j]_q`, so each division is exact.
pub fn qbinom<T: Num + Clone>(m: u32, k: u32, q: T) -> Result<T> {
    if k > m {
        return Err(Error::InvalidArgument(format!("q-binomial [{m}, {k}] has k > m")));
    }
    let one = T::one();
    let mut acc = T::one();
    for j in 0..k {
        let num = num_traits::pow(q.clone(), (m - j) as usize) - one.clone();
        let den = num_traits::pow(q.clone(), (j + 1) as usize) - one.clone();
        acc = acc * num / den;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    /// Independent oracle: `q`-Pascal recurrence `[m,k] = [m-1,k-1] + q^k [m-1,k]`.
    fn pascal(m: u32, k: u32, q: u64) -> BigUint {
        let mut row = vec![BigUint::from(1u32)];
        for n in 1..=m {
            let mut next = vec![BigUint::from(1u32); n as usize + 1];
            for j in 1..n as usize {
                next[j] = &row[j - 1] + BigUint::from(q).pow(j as u32) * &row[j];
            }
            row = next;
        }
        row[k as usize].clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(qbinom(2, 1, 2u64).unwrap(), 3);
        assert_eq!(qbinom(4, 2, 2u64).unwrap(), 35);
        assert_eq!(qbinom(7, 0, 5u64).unwrap(), 1);
        assert_eq!(qbinom(3, 3, 2u64).unwrap(), 1);
        let row: Vec<u64> = (0..=3).map(|k| qbinom(3, k, 2u64).unwrap()).collect();
        assert_eq!(row, vec![1, 7, 7, 1]);
        assert!(qbinom(3, 4, 2u64).is_err());
    }

    #[test]
    fn both_recurrences_hold() {
        for q in [2u64, 4, 8] {
            for m in 1..=20u32 {
                for k in 1..m {
                    let big = |a, b| qbinom(a, b, BigUint::from(q)).unwrap();
                    let qk = BigUint::from(q).pow(k);
                    let qmk = BigUint::from(q).pow(m - k);
                    assert_eq!(big(m, k), big(m - 1, k - 1) + &qk * big(m - 1, k));
                    assert_eq!(big(m, k), &qmk * big(m - 1, k - 1) + big(m - 1, k));
                }
            }
        }
    }

    #[test]
    fn generic_scalars_agree() {
        for m in 0..=12u32 {
            for k in 0..=m {
                let a = qbinom(m, k, 2u64).unwrap();
                let b = qbinom(m, k, 2u128).unwrap();
                let c = qbinom(m, k, BigUint::from(2u32)).unwrap();
                assert_eq!(a as u128, b);
                assert_eq!(BigUint::from(b), c);
                assert_eq!(c, pascal(m, k, 2));
            }
        }
    }
}
