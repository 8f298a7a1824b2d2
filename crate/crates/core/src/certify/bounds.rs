//! Certificates for the counting inequalities: Gaussian-binomial bounds,
//! `d(k) ≤ 2√k`, the maximisation of the quadratic exponent form, the chain
//! bounding `|s(Γ)| − |s(P)|`, bounds on `|s(P)|`, and the induction constants.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::quadratic::ExponentForm;
use super::{qbinom, Certificate, Quantity, Relation};
use crate::classcount::{bound_gamma_terms, m_of_divisor};
use crate::field::FieldParams;
use crate::numtheory::{divisor_count_sieve, divisors};
use crate::{Error, Rational, Result};

pub use crate::numtheory::{divisor_count, omega};

/// Largest `m` for which `d(2^m − 1)` is computed (the `I(P)` chain).
pub const MAX_IP_DEGREE: u32 = 31;

/// `|Sz(8)|`'s subgroup count as stated for the induction base case.
pub const SZ8_SUBGROUP_COUNT: u64 = 17295;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn big_pow(q: u64, e: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), e as usize)
}

/// `q^(k(m−k)) ≤ [m, k]_q ≤ q^(k(m−k+1))`.
pub fn dbound_certificate(m: u32, k: u32, q: u64) -> Result<Certificate> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("q-binomial base must be at least 2, got {q}")));
    }
    let g = qbinom(m, k, BigUint::from(q))?;
    let (m64, k64) = (m as u64, k as u64);
    let lower = big_pow(q, k64 * (m64 - k64));
    let upper = big_pow(q, k64 * (m64 - k64 + 1));
    Ok(Certificate::chain(
        "dbound",
        vec![
            Certificate::compare("lower", lower.into(), Relation::Le, g.clone().into()),
            Certificate::compare("upper", g.into(), Relation::Le, upper.into()),
        ],
    )
    .with_param("m", m)
    .with_param("k", k)
    .with_param("q", q))
}

/// Every `dbound` instance with `m ≤ m_max`, `k ≤ m`, for one base `q`.
pub fn dbound_sweep(m_max: u32, q: u64) -> Result<Certificate> {
    let mut steps = Vec::new();
    for m in 0..=m_max {
        for k in 0..=m {
            steps.push(dbound_certificate(m, k, q)?);
        }
    }
    Ok(Certificate::all_of("dbound_sweep", steps).with_param("m_max", m_max).with_param("q", q))
}

/// `d(k)² ≤ 4k`.
pub fn dsqrt_certificate(k: u64) -> Certificate {
    let dk = divisor_count(k);
    Certificate::compare("dsqrt", Quantity::from(dk * dk), Relation::Le, Quantity::from(4 * k)).with_param("k", k)
}

/// `d(k)² ≤ 4k` for all `1 ≤ k ≤ limit`, summarised as a failure count.
pub fn dsqrt_sweep(limit: usize) -> Certificate {
    let sieve = divisor_count_sieve(limit);
    let failures = (1..=limit).filter(|&k| (sieve[k] as u64).pow(2) > 4 * k as u64).count();
    Certificate::compare("dsqrt_sweep_failures", Quantity::from(failures), Relation::Eq, Quantity::from(0u64))
        .with_param("limit", limit)
}

/// `f(i, j, m_b, m) = m(i + j + 1) − m_b(i² + j² − j)`.
pub fn f_value(i: i64, j: i64, mb: i64, m: i64) -> i64 {
    m * (i + j + 1) - mb * (i * i + j * j - j)
}

/// Maximum of `f(i, j, 3, m)` over integer points with `i, j ≥ 0`,
/// `i + j ≤ ⌊m/3⌋`.
pub fn lattice_max(m: u32) -> i64 {
    let np = (m / 3) as i64;
    (0..=np).flat_map(|i| (0..=np - i).map(move |j| f_value(i, j, 3, m as i64))).max().expect("nonempty")
}

/// Lattice maximum of `f(·,·,3,m)` against `m²/6 + 2m + 3/8`, through the
/// maximum of the real extension over the triangle: no interior critical
/// point, and on each edge a downward parabola peaking inside the edge.
///
/// Below `m = 9` only the lattice comparison is made.
pub fn f_max_certificate(m: u32) -> Result<Certificate> {
    if m.is_multiple_of(2) {
        return Err(Error::FieldDegree(m));
    }
    let form = ExponentForm::<Rational>::new(m);
    let np = (m / 3) as i64;
    let lmax = lattice_max(m);
    let cap = form.upper_cap();
    let in_range = m >= 9;
    let mut steps = Vec::new();
    if !in_range {
        steps.push(Certificate::compare("lattice_max_le_cap", int(lmax).into(), Relation::Le, cap.into()));
        return Ok(Certificate::all_of("f_max", steps)
            .with_param("m", m)
            .with_param("n_prime", np)
            .with_param("lattice_max", lmax)
            .with_param("closed_form_range", false));
    }
    let eq = |name: &str, a: Rational, b: Rational| Certificate::compare(name, a.into(), Relation::Eq, b.into());
    let le = |name: &str, a: Rational, b: Rational| Certificate::compare(name, a.into(), Relation::Le, b.into());
    let npr = int(np);

    let (cx, cy) = form.critical_point();
    steps.push(Certificate::compare("critical_point_outside", npr.clone().into(), Relation::Lt, (cx + cy).into()));

    let (yx, yy) = form.y_edge_peak();
    steps.push(eq("y_edge_peak_value", form.value(yx.clone(), yy.clone()), form.y_edge_max()));
    steps.push(le("y_edge_peak_inside", yy.clone(), npr.clone()));
    let (xx, xy) = form.x_edge_peak();
    steps.push(eq("x_edge_peak_value", form.value(xx.clone(), xy.clone()), form.x_edge_max()));
    steps.push(le("x_edge_peak_inside", xx.clone(), npr.clone()));
    let (hx, hy) = form.hypotenuse_peak(np);
    steps.push(eq("hypotenuse_peak_on_edge", hx.clone() + hy.clone(), npr.clone()));
    steps.push(eq("hypotenuse_peak_value", form.value(hx.clone(), hy.clone()), form.hypotenuse_max(np)));
    steps.push(le("hypotenuse_peak_inside_lo", Rational::zero(), hx.clone()));
    steps.push(le("hypotenuse_peak_inside_hi", hx, npr));
    let hyp = form.hypotenuse_max(np);
    steps.push(le("hypotenuse_floor", form.hypotenuse_floor(), hyp.clone()));
    steps.push(le("hypotenuse_cap", hyp.clone(), cap.clone()));

    let continuous = [form.y_edge_max(), form.x_edge_max(), hyp].into_iter().max().expect("three values");
    steps.push(le("lattice_max_le_continuous_max", int(lmax), continuous.clone()));
    steps.push(le("continuous_max_le_cap", continuous, cap));
    Ok(Certificate::all_of("f_max", steps)
        .with_param("m", m)
        .with_param("n_prime", np)
        .with_param("lattice_max", lmax)
        .with_param("closed_form_range", true))
}

/// The three sums bounding `|s(Γ)| − |s(P)|` from above:
///
/// * `t1`: the `b > 1` part of the `boundGamma` sum;
/// * `t2`: `Σ_{b>1} Σ_{i ≤ M} Σ_{j ≤ M−i} 2^f(i,j,m_b,m)`, `M = m/m_b`;
/// * `t3`: `(d(q−1) − 1) Σ_{i+j ≤ ⌊m/3⌋} 2^f(i,j,3,m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IpSums {
    pub t1: BigUint,
    pub t2: BigUint,
    pub t3: BigUint,
}

pub fn ip_sums(m: u32) -> Result<IpSums> {
    if m > MAX_IP_DEGREE {
        return Err(Error::FieldDegree(m));
    }
    let f = FieldParams::new(m)?;
    let t1 = bound_gamma_terms(m)?.into_iter().filter(|(b, _, _)| *b > 1).map(|(_, _, t)| t).sum();
    let mut t2 = BigUint::zero();
    let divs: Vec<u64> = divisors(f.order() - 1).into_iter().filter(|&b| b > 1).collect();
    for &b in &divs {
        let mb = m_of_divisor(b, m)? as i64;
        let big_m = m as i64 / mb;
        for i in 0..=big_m {
            for j in 0..=big_m - i {
                t2 += BigUint::one() << f_value(i, j, mb, m as i64) as u64;
            }
        }
    }
    let np = (m / 3) as i64;
    let inner: BigUint = (0..=np)
        .flat_map(|i| (0..=np - i).map(move |j| (i, j)))
        .map(|(i, j)| BigUint::one() << f_value(i, j, 3, m as i64) as u64)
        .sum();
    let t3 = inner * BigUint::from(divs.len());
    Ok(IpSums { t1, t2, t3 })
}

/// `m²/6 + 4m + 1/2`.
fn ip_exponent(m: u32) -> Rational {
    let m = int(m);
    &m * &m / int(6) + int(4) * m + rat(1, 2)
}

/// The chain bounding `I(P) = |s(Γ)| − |s(P)|`:
///
/// `t3 ≤ (d(q−1) − 1)(m/3 + 1)² 2^c < 2^m m² 2^c < 2^(m²/6 + 4m + 1/2)`,
/// `c = m²/6 + 2m + 3/8`, for `9 ≤ m ≤ 31`. Below 9 the sum `t3` is compared
/// with the final bound directly. The sum links `t1 ≤ t2 ≤ t3` are checked by
/// evaluation. `brute_force_ip`, when given, is compared with the final bound.
pub fn ip_bound_certificate(m: u32, brute_force_ip: Option<u64>) -> Result<Certificate> {
    let sums = ip_sums(m)?;
    let f = FieldParams::new(m)?;
    let dq = divisor_count(f.order() - 1);
    let form = ExponentForm::<Rational>::new(m);
    let c = form.upper_cap();
    let mr = int(m);
    let final_bound = Quantity::pow2(ip_exponent(m));
    let mut steps = vec![
        Certificate::compare("t1_le_t2", sums.t1.clone().into(), Relation::Le, sums.t2.clone().into()),
        Certificate::compare("t2_le_t3", sums.t2.clone().into(), Relation::Le, sums.t3.clone().into()),
    ];
    if m >= 9 {
        let third = &mr / int(3) + int(1);
        let a = Quantity::new(int(dq - 1) * &third * &third, c.clone());
        let b = Quantity::new(&mr * &mr, &mr + &c);
        steps.push(Certificate::compare("t3_le_lattice_bound", sums.t3.clone().into(), Relation::Le, a.clone()));
        steps.push(Certificate::compare(
            "divisor_term",
            Quantity::from(dq - 1),
            Relation::Lt,
            Quantity::pow2(mr.clone()),
        ));
        steps.push(Certificate::compare(
            "square_term",
            Quantity::rational(&third * &third),
            Relation::Lt,
            Quantity::rational(&mr * &mr),
        ));
        steps.push(Certificate::compare("lattice_bound_lt_power_bound", a, Relation::Lt, b.clone()));
        steps.push(Certificate::compare("power_bound_lt_final", b, Relation::Lt, final_bound.clone()));
    } else {
        steps.push(Certificate::compare("t3_lt_final", sums.t3.clone().into(), Relation::Lt, final_bound.clone()));
    }
    if let Some(ip) = brute_force_ip {
        steps.push(Certificate::compare("brute_force_ip_le_final", Quantity::from(ip), Relation::Le, final_bound));
    }
    let mut cert = Certificate::chain("ip_bound", steps)
        .with_param("m", m)
        .with_param("d_q_minus_1", dq)
        .with_param("t1", sums.t1.to_string())
        .with_param("t2", sums.t2.to_string())
        .with_param("t3", sums.t3.to_string());
    if let Some(ip) = brute_force_ip {
        cert = cert.with_param("brute_force_ip", ip);
    }
    Ok(cert)
}

/// `2^((m²−1)/4) ≤ [m, (m−1)/2]₂ ≤ 2^((m²+2m−3)/4)`; with a brute-force
/// `|s(P)|`, also `[m, (m−1)/2]₂ < |s(P)| < 2^((m+1)²/2)`.
pub fn sp_bounds_certificate(m: u32, brute_force_sp: Option<u64>) -> Result<Certificate> {
    if m.is_multiple_of(2) || m < 3 {
        return Err(Error::FieldDegree(m));
    }
    let g = qbinom(m, (m - 1) / 2, BigUint::from(2u32))?;
    let mi = m as i64;
    let mut steps = vec![
        Certificate::compare("central_lower", Quantity::pow2(rat(mi * mi - 1, 4)), Relation::Le, g.clone().into()),
        Certificate::compare("central_upper", g.clone().into(), Relation::Le, Quantity::pow2(rat(mi * mi + 2 * mi - 3, 4))),
    ];
    if let Some(sp) = brute_force_sp {
        steps.push(Certificate::compare("central_lt_sp", g.into(), Relation::Lt, Quantity::from(sp)));
        steps.push(Certificate::compare(
            "sp_lt_boundforp",
            Quantity::from(sp),
            Relation::Lt,
            Quantity::pow2(rat((mi + 1) * (mi + 1), 2)),
        ));
    }
    let mut cert = Certificate::chain("sp_bounds", steps).with_param("m", m);
    if let Some(sp) = brute_force_sp {
        cert = cert.with_param("brute_force_sp", sp);
    }
    Ok(cert)
}

/// The numeric facts behind `|s(Sz(q))| < 2^((11/5) m²)`:
///
/// * base case `17295 < 2^15 < 2^(99/5)`;
/// * `(11/5) m² > (2/3) m² + 7m + 3/2 + log₂3` for `5 ≤ m ≤ 199`, as
///   `2^((11/5) m²) > 3 · 2^((2/3) m² + 7m + 3/2)`;
/// * at `q = 8` there are no subfield subgroups, so the index bound is vacuous.
pub fn induction_certificate() -> Certificate {
    let base = Quantity::from(SZ8_SUBGROUP_COUNT);
    let mut steps = vec![
        Certificate::compare("base_case_2_15", base.clone(), Relation::Lt, Quantity::pow2(int(15))),
        Certificate::compare("base_case_2_99_5", base, Relation::Lt, Quantity::pow2(rat(99, 5))),
    ];
    let mut constants = Vec::new();
    for m in 5i64..=199 {
        let lhs = Quantity::pow2(rat(11 * m * m, 5));
        let rhs = Quantity::new(int(3), rat(2 * m * m, 3) + int(7 * m) + rat(3, 2));
        constants.push(Certificate::compare("constant", rhs, Relation::Lt, lhs).with_param("m", m));
    }
    steps.push(Certificate::all_of("constant_sweep", constants).with_param("m_range", [5, 199]));
    steps.push(
        Certificate::assertion("no_subfield_subgroup_at_q8", true)
            .with_param("note", "q = 2^3 has no proper subfield F_{2^r} with r odd and r > 1"),
    );
    Certificate::all_of("induction", steps)
}

/// The surveyed subgroup count against the induction base case.
pub fn induction_base_case(surveyed_total: u64) -> Certificate {
    Certificate::compare(
        "induction_base_case_matches_survey",
        Quantity::from(surveyed_total),
        Relation::Eq,
        Quantity::from(SZ8_SUBGROUP_COUNT),
    )
}

/// `1 − (E/S)² + 1/n_syl`.
pub fn comeback_bound(e: u64, s: u64, nsyl: u64) -> Result<Rational> {
    if s == 0 || nsyl == 0 {
        return Err(Error::InvalidArgument("subgroup and Sylow counts must be positive".into()));
    }
    if e > s {
        return Err(Error::InvalidArgument(format!("|E| = {e} exceeds |s(G)| = {s}")));
    }
    let ratio = rat(e as i64, s as i64);
    Ok(Rational::one() - &ratio * &ratio + rat(1, nsyl as i64))
}

/// Every certificate of this module with parameters up to `m_max`. Brute-force
/// values at `m = 3` are supplied by the caller.
pub fn all_certificates(m_max: u32, sp_at_3: Option<u64>, ip_at_3: Option<u64>) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for q in [2, 4, 8] {
        out.push(dbound_sweep(20, q)?);
    }
    out.push(dsqrt_sweep(1_000_000));
    for m in (3..=m_max.min(MAX_IP_DEGREE)).step_by(2) {
        out.push(ip_bound_certificate(m, if m == 3 { ip_at_3 } else { None })?);
    }
    for m in (3..=m_max).step_by(2) {
        out.push(sp_bounds_certificate(m, if m == 3 { sp_at_3 } else { None })?);
    }
    for m in (9..=m_max).step_by(2) {
        out.push(f_max_certificate(m)?);
    }
    out.push(induction_certificate());
    Ok(out)
}
