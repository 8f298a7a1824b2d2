//! Counting subgroups of `P` through the quotient `V = P/Z ≅ F_q` and the
//! centre `Z ≅ F_q`, both viewed as `F_2`-spaces of dimension `m = log₂ q`.
//!
//! For a subspace `X ⊆ V` with full preimage `K`, `V(X) = Z/Φ(K)`; the
//! classes of complements over each `Y ⊆ V(X)` are counted by
//! `|Hom(X, V(X)/Y)| = 2^(dim X · (dim V(X) − dim Y))`.

mod census;
mod subspace;

pub use census::{
    b_invariant_check, complement_census, frattini_pattern, frattini_witness, oracle_counts, ComplementCensus,
    ComplementRow, FrattiniPatternRow, OracleCounts,
};
pub use subspace::{enumerate_subspaces, subspaces_of_dim, Subspace, MAX_ENUM_DIM};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{qbinom, serialize_biguint};
use crate::field::{FieldElement, FieldParams};
use crate::numtheory::{divisors, subfield_degree};
use crate::{Error, Result};

/// Largest `m` for the exact double sums.
pub const MAX_SUM_DEGREE: u32 = 7;

/// `Φ(K)` inside `Z`, for `K` the preimage of `X`: the span of the squares
/// `(0, x^(1+θ))` and commutators `(0, xy^θ + yx^θ)` of elements of `K`.
pub fn frattini_of_x(f: &FieldParams, x: &Subspace) -> Subspace {
    let m = f.m();
    let squares = x.vectors().map(|v| f.norm_like(FieldElement(v)).0);
    let basis = x.basis();
    let commutators = basis.iter().enumerate().flat_map(|(i, &a)| {
        basis[i + 1..].iter().map(move |&b| {
            let (a, b) = (FieldElement(a), FieldElement(b));
            (f.mul(a, f.theta(b)) + f.mul(b, f.theta(a))).0
        })
    });
    Subspace::span(m, squares.chain(commutators))
}

fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// Per-`X` data for the double sums: `(dim X, dim V(X))`.
fn x_profile(f: &FieldParams) -> Result<Vec<(u32, u32)>> {
    let m = f.m();
    let xs: Vec<Subspace> = enumerate_subspaces(m)?.collect();
    Ok(xs.par_iter().map(|x| (x.dim(), m - frattini_of_x(f, x).dim())).collect())
}

/// `Σ_{Y ⊆ V(X)} 2^(dim X · (dim V(X) − dim Y))` for one `X`.
fn inner_sum(dim_x: u32, dim_v: u32) -> BigUint {
    (0..=dim_v)
        .map(|k| qbinom(dim_v, k, BigUint::from(2u32)).expect("k <= dim") * pow2(dim_x as u64 * (dim_v - k) as u64))
        .sum()
}

/// Outputs of the double sums at one `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCountResult {
    pub m: u32,
    #[serde(serialize_with = "serialize_biguint")]
    pub exact_class_count: BigUint,
    #[serde(serialize_with = "serialize_biguint")]
    pub subgroup_count_upper: BigUint,
    #[serde(rename = "boundP", serialize_with = "serialize_biguint")]
    pub bound_p: BigUint,
    #[serde(rename = "boundGamma", serialize_with = "serialize_biguint")]
    pub bound_gamma: BigUint,
}

/// The double sum over `X ⊆ V`, `Y ⊆ V(X)` of `|L(X, Y′)|`.
pub fn exact_class_count(f: &FieldParams) -> Result<BigUint> {
    check_sum_degree(f.m())?;
    Ok(x_profile(f)?.into_iter().map(|(dx, dv)| inner_sum(dx, dv)).sum())
}

/// The same double sum weighted by `|X′| = 2^(m − dim X)`.
pub fn subgroup_count_upper(f: &FieldParams) -> Result<BigUint> {
    check_sum_degree(f.m())?;
    let m = f.m();
    Ok(x_profile(f)?.into_iter().map(|(dx, dv)| inner_sum(dx, dv) * pow2((m - dx) as u64)).sum())
}

fn check_sum_degree(m: u32) -> Result<()> {
    if m > MAX_SUM_DEGREE {
        return Err(Error::FieldDegree(m));
    }
    Ok(())
}

pub fn class_count_result(m: u32) -> Result<ClassCountResult> {
    let f = FieldParams::new(m)?;
    check_sum_degree(m)?;
    let profile = x_profile(&f)?;
    let exact = profile.iter().map(|&(dx, dv)| inner_sum(dx, dv)).sum();
    let upper = profile.iter().map(|&(dx, dv)| inner_sum(dx, dv) * pow2((m - dx) as u64)).sum();
    Ok(ClassCountResult {
        m,
        exact_class_count: exact,
        subgroup_count_upper: upper,
        bound_p: bound_p_closed_form(m)?,
        bound_gamma: bound_gamma_closed_form(m)?,
    })
}

/// `Σ_i [M,i]_Q Σ_j [M−i,j]_Q 2^(m + i(m − s(i+j+1)))` with `Q = 2^s`,
/// `M = m/s`.
fn triple_term(m: u32, s: u32) -> BigUint {
    let big_m = m / s;
    let base = BigUint::one() << s;
    let mut total = BigUint::zero();
    for i in 0..=big_m {
        let outer = qbinom(big_m, i, base.clone()).expect("i <= M");
        for j in 0..=big_m - i {
            let inner = qbinom(big_m - i, j, base.clone()).expect("j <= M - i");
            let exp = m as i64 + i as i64 * (m as i64 - (s * (i + j + 1)) as i64);
            debug_assert!(exp >= 0);
            total += &outer * inner * pow2(exp as u64);
        }
    }
    total
}

/// `Σ_{i=0}^{m} [m,i]₂ Σ_{j=0}^{m−i} [m−i,j]₂ 2^(m + i(m − (i+j+1)))`.
pub fn bound_p_closed_form(m: u32) -> Result<BigUint> {
    FieldParams::new(m)?;
    Ok(triple_term(m, 1))
}

/// `m_b`: the least `r` with `d | 2^r − 1`; `m_1 = 1`.
pub fn m_of_divisor(d: u64, m: u32) -> Result<u64> {
    subfield_degree(d, m)
}

/// Sum over the divisors `b` of `q − 1` of the subfield version of the
/// `boundP` sum over `F_{2^(m_b)}`; the `b = 1` term is `boundP` itself.
pub fn bound_gamma_closed_form(m: u32) -> Result<BigUint> {
    Ok(bound_gamma_terms(m)?.into_iter().map(|(_, _, t)| t).sum())
}

/// `(b, m_b, term)` for each divisor `b` of `q − 1`, ascending.
pub fn bound_gamma_terms(m: u32) -> Result<Vec<(u64, u64, BigUint)>> {
    let f = FieldParams::new(m)?;
    divisors(f.order() - 1)
        .into_iter()
        .map(|b| {
            let mb = m_of_divisor(b, m)?;
            Ok((b, mb, triple_term(m, mb as u32)))
        })
        .collect()
}
