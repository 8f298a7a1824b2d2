use crate::field::{FieldElement, FieldParams};
use crate::{Error, Result};

/// A 4×4 matrix over `GF(2^m)`, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Matrix4 {
    pub entries: [[FieldElement; 4]; 4],
}

pub type Vector4 = [FieldElement; 4];

impl Matrix4 {
    pub fn identity() -> Self {
        let mut e = [[FieldElement::ZERO; 4]; 4];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = FieldElement::ONE;
        }
        Matrix4 { entries: e }
    }

    /// `S(a, b)`.
    pub fn s(f: &FieldParams, a: FieldElement, b: FieldElement) -> Self {
        let (z, o) = (FieldElement::ZERO, FieldElement::ONE);
        let at = f.theta(a);
        let corner = f.mul(f.square(a), at) + f.mul(a, b) + f.theta(b);
        Matrix4 { entries: [[o, z, z, z], [a, o, z, z], [b, at, o, z], [corner, f.norm_like(a) + b, a, o]] }
    }

    /// `C(λ) = diag(λ^(1+θ/2), λ^(θ/2), λ^(−θ/2), λ^(−1−θ/2))`.
    pub fn c(f: &FieldParams, lambda: FieldElement) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let half = f.theta_exponent() / 2;
        let l1 = f.pow(lambda, half);
        let l0 = f.mul(lambda, l1);
        let mut e = [[FieldElement::ZERO; 4]; 4];
        e[0][0] = l0;
        e[1][1] = l1;
        e[2][2] = f.inverse(l1)?;
        e[3][3] = f.inverse(l0)?;
        Ok(Matrix4 { entries: e })
    }

    /// The anti-diagonal permutation matrix `T`.
    pub fn t() -> Self {
        let mut e = [[FieldElement::ZERO; 4]; 4];
        for (i, row) in e.iter_mut().enumerate() {
            row[3 - i] = FieldElement::ONE;
        }
        Matrix4 { entries: e }
    }

    pub fn mul(&self, f: &FieldParams, other: &Matrix4) -> Matrix4 {
        let mut e = [[FieldElement::ZERO; 4]; 4];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = FieldElement::ZERO;
                for k in 0..4 {
                    acc += f.mul(self.entries[i][k], other.entries[k][j]);
                }
                *cell = acc;
            }
        }
        Matrix4 { entries: e }
    }

    pub fn apply(&self, f: &FieldParams, v: &Vector4) -> Vector4 {
        let mut out = [FieldElement::ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            for (k, &x) in v.iter().enumerate() {
                *o += f.mul(self.entries[i][k], x);
            }
        }
        out
    }

    /// Rank by Gaussian elimination; group elements have rank 4.
    pub fn rank(&self, f: &FieldParams) -> usize {
        let mut a = self.entries;
        let mut rank = 0;
        for col in 0..4 {
            let Some(p) = (rank..4).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = f.inverse(a[rank][col]).expect("nonzero pivot");
            for r in 0..4 {
                if r != rank && !a[r][col].is_zero() {
                    let factor = f.mul(a[r][col], inv);
                    for c in 0..4 {
                        let sub = f.mul(factor, a[rank][c]);
                        a[r][c] += sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Entries packed `m` bits apiece, row-major from the low end.
    pub fn key(&self, m: u32) -> u128 {
        let mut k = 0u128;
        for (n, &e) in self.entries.iter().flatten().enumerate() {
            k |= (e.0 as u128) << (n as u32 * m);
        }
        k
    }
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn normalize_projective(f: &FieldParams, v: &Vector4) -> Vector4 {
    let lead = v.iter().copied().find(|x| !x.is_zero()).expect("nonzero vector");
    let inv = f.inverse(lead).expect("nonzero");
    v.map(|x| f.mul(x, inv))
}
