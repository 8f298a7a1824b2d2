use crate::{Error, Result};

/// Largest ambient dimension for exhaustive subspace enumeration.
pub const MAX_ENUM_DIM: u32 = 11;

/// A subspace of `F_2^m`, vectors as `m`-bit masks, stored as a reduced
/// echelon basis: each row's highest set bit is its pivot, pivots strictly
/// decrease down the rows, and no row has a bit in another row's pivot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient_dim: u32,
    basis: Vec<u32>,
}

impl Subspace {
    pub fn zero(m: u32) -> Self {
        Subspace { ambient_dim: m, basis: Vec::new() }
    }

    pub fn full(m: u32) -> Self {
        Subspace { ambient_dim: m, basis: (0..m).rev().map(|i| 1 << i).collect() }
    }

    /// The span of `vectors`, reduced to canonical form.
    pub fn span(m: u32, vectors: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Subspace::zero(m);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    fn reduce(&self, mut v: u32) -> u32 {
        for &r in &self.basis {
            let p = 31 - r.leading_zeros();
            if v >> p & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: u32) -> bool {
        debug_assert!(self.ambient_dim == 32 || v >> self.ambient_dim == 0);
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let p = 31 - v.leading_zeros();
        for r in &mut self.basis {
            if *r >> p & 1 == 1 {
                *r ^= v;
            }
        }
        let at = self.basis.iter().position(|&r| r < v).unwrap_or(self.basis.len());
        self.basis.insert(at, v);
        true
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    /// All `2^dim` vectors.
    pub fn vectors(&self) -> impl Iterator<Item = u32> + '_ {
        (0u32..1 << self.dim()).map(|c| {
            self.basis.iter().enumerate().filter(|(i, _)| c >> i & 1 == 1).fold(0, |acc, (_, &r)| acc ^ r)
        })
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&v| other.contains(v))
    }

    /// Pivot columns, descending.
    pub fn pivots(&self) -> Vec<u32> {
        self.basis.iter().map(|r| 31 - r.leading_zeros()).collect()
    }
}

/// Every subspace of `F_2^m` exactly once: by dimension, then pivot set in
/// ascending lexicographic order, then free entries counting up.
pub fn enumerate_subspaces(m: u32) -> Result<impl Iterator<Item = Subspace>> {
    if m > MAX_ENUM_DIM {
        return Err(Error::InvalidArgument(format!("subspace enumeration is capped at dimension {MAX_ENUM_DIM}, got {m}")));
    }
    Ok((0..=m).flat_map(move |k| subspaces_of_dim(m, k)))
}

/// Subspaces of dimension `k` in `F_2^m`.
pub fn subspaces_of_dim(m: u32, k: u32) -> impl Iterator<Item = Subspace> {
    combinations(m, k).into_iter().flat_map(move |pivots| {
        // Free positions of the row with pivot p: non-pivot columns below p.
        let pivot_mask: u32 = pivots.iter().map(|&p| 1u32 << p).sum();
        let free: Vec<Vec<u32>> =
            pivots.iter().map(|&p| (0..p).filter(|&c| pivot_mask >> c & 1 == 0).collect()).collect();
        let total_free: u32 = free.iter().map(|f| f.len() as u32).sum();
        let pivots = pivots.clone();
        (0u64..1 << total_free).map(move |mut fill| {
            let mut rows: Vec<u32> = pivots
                .iter()
                .zip(&free)
                .map(|(&p, cols)| {
                    let mut r = 1u32 << p;
                    for &c in cols {
                        if fill & 1 == 1 {
                            r |= 1 << c;
                        }
                        fill >>= 1;
                    }
                    r
                })
                .collect();
            rows.sort_unstable_by(|a, b| b.cmp(a));
            Subspace { ambient_dim: m, basis: rows }
        })
    })
}

/// `k`-subsets of `0..m`, ascending lexicographic.
fn combinations(m: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    fn rec(start: u32, m: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == k {
            out.push(cur.clone());
            return;
        }
        for c in start..m {
            cur.push(c);
            rec(c + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}
