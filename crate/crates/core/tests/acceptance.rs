//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion to
//! stderr (uncaptured) and fails if any criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use szlab::certify::{all_certificates, Certificate};
use szlab::classcount::{
    bound_gamma_closed_form, bound_p_closed_form, complement_census, exact_class_count, oracle_counts,
    subgroup_count_upper,
};
use szlab::field::FieldParams;
use szlab::group::{cyclic, dihedral, direct_product, family, permutability_degree, quaternion8, FiniteGroup};
use szlab::suzuki::{verify_special_structure, SzGroup};
use szlab::szlattice::{degree_sz8_extended, survey, ti_bound_report, DegreeOutcome};
use szlab::Rational;

struct Outcome {
    pass: bool,
    detail: String,
}

fn line(n: u32, title: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = run();
    let elapsed = t.elapsed();
    let in_time = elapsed <= limit;
    let pass = o.pass && in_time;
    let mut err = std::io::stderr().lock();
    writeln!(
        err,
        "[{}] criterion {n}: {title} — {}; {:.1} s (limit {} s)",
        if pass { "PASS" } else { "FAIL" },
        o.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    )
    .unwrap();
    pass
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Peak resident set size in MiB, where the platform reports it.
fn peak_rss_mib() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb / 1024)
}

fn all_hold(certs: &[Certificate]) -> (bool, Vec<String>) {
    let failures: Vec<String> = certs.iter().flat_map(|c| c.failures()).collect();
    (failures.is_empty(), failures)
}

#[test]
fn acceptance() {
    writeln!(std::io::stderr().lock()).unwrap();
    let mut results = Vec::new();
    let mut group = None;

    results.push(line(1, "Sz(8) construction", Duration::from_secs(60), || {
        let g = SzGroup::build(3).unwrap();
        let q = 8usize;
        let expected = q * q * (q * q + 1) * (q - 1);
        let sylows = g.sylow_subgroups();
        let distinct: std::collections::HashSet<_> = sylows.iter().collect();
        let mut trivial = true;
        for (i, a) in sylows.iter().enumerate() {
            for b in &sylows[i + 1..] {
                trivial &= a.intersection_size(b) == 1;
            }
        }
        let orders_ok = sylows.iter().all(|s| s.size() == q * q && s.is_subgroup(&g));
        let pass = g.order() == expected && distinct.len() == q * q + 1 && orders_ok && trivial;
        let detail = format!(
            "order {} (expected {expected}), {} distinct Sylow 2-subgroups, pairwise trivial: {trivial}",
            g.order(),
            distinct.len()
        );
        group = Some(g);
        Outcome { pass, detail }
    }));
    let g = group.expect("criterion 1 builds the group");

    let mut surveyed = None;
    results.push(line(2, "Sz(8) lattice survey", Duration::from_secs(600), || {
        let s = survey(&g).unwrap();
        let rss = peak_rss_mib();
        let mem_ok = rss.is_none_or(|r| r <= 512);
        let pass = s.total_subgroups() == 17295 && mem_ok;
        let detail = format!(
            "total {} (expected 17295), {} classes, peak RSS {}",
            s.total_subgroups(),
            s.classes.len(),
            rss.map_or("unavailable".to_string(), |r| format!("{r} MiB (limit 512)"))
        );
        surveyed = Some(s);
        Outcome { pass, detail }
    }));
    let s = surveyed.expect("criterion 2 runs the survey");

    results.push(line(3, "structure of P at m = 3, 5, 7", Duration::from_secs(10), || {
        let mut detail = Vec::new();
        let mut pass = true;
        for m in [3, 5, 7] {
            let c = verify_special_structure(m).unwrap();
            pass &= c.holds;
            detail.push(format!("m={m}: {} checks {}", c.steps.len(), if c.holds { "hold" } else { "FAIL" }));
        }
        Outcome { pass, detail: detail.join(", ") }
    }));

    let oracle = oracle_counts(3).unwrap();
    results.push(line(4, "class-count oracle equivalence at m = 3", Duration::from_secs(300), || {
        let f = FieldParams::new(3).unwrap();
        let exact = exact_class_count(&f).unwrap();
        let upper = subgroup_count_upper(&f).unwrap();
        let bp = bound_p_closed_form(3).unwrap();
        let bg = bound_gamma_closed_form(3).unwrap();
        let sp = BigUint::from(oracle.p_subgroups);
        let sg = BigUint::from(oracle.gamma_subgroups);
        let classes_eq = exact == BigUint::from(oracle.p_classes);
        let chain = sp <= upper && upper <= bp;
        let gamma = sg <= bg;
        Outcome {
            pass: classes_eq && chain && gamma,
            detail: format!(
                "exact_class_count {exact} vs brute-force classes {} ({}); |s(P)| {sp} <= {upper} <= {bp}: {chain}; \
                 |s(Γ)| {sg} <= {bg}: {gamma}",
                oracle.p_classes,
                if classes_eq { "equal" } else { "differ" }
            ),
        }
    }));

    results.push(line(5, "complement-counting oracle at m = 3", Duration::from_secs(600), || {
        let c = complement_census(3).unwrap();
        let class_rows = c.rows.iter().filter(|r| r.classes as u64 == r.expected).count();
        let compl_rows = c.rows.iter().filter(|r| r.complements as u64 == r.expected).count();
        Outcome {
            pass: c.classes_match && c.existence_consistent,
            detail: format!(
                "{} (X, H) pairs: P-classes of complements equal 2^(dim X·dim(Z/H)) in {class_rows}; \
                 complements (= K/H-classes, K/H elementary abelian) equal it in {compl_rows}; existence iff Φ(K) ≤ H: {}",
                c.rows.len(),
                c.existence_consistent
            ),
        }
    }));

    results.push(line(6, "certificate sweep", Duration::from_secs(60), || {
        let ip = (oracle.gamma_subgroups - oracle.p_subgroups) as u64;
        let certs = all_certificates(99, Some(oracle.p_subgroups as u64), Some(ip)).unwrap();
        let (ok, failures) = all_hold(&certs);
        let names = ["dbound_sweep", "f_max", "induction", "sp_bounds", "ip_bound"];
        let present = names.iter().all(|n| certs.iter().any(|c| c.name == *n));
        let leaves: usize = certs.iter().map(count_leaves).sum();
        Outcome {
            pass: ok && present,
            detail: format!("{} certificates, {leaves} exact comparisons, failures {:?}", certs.len(), failures),
        }
    }));

    results.push(line(7, "permutability degrees", Duration::from_secs(300), || {
        let p = |g: &dyn Fn() -> szlab::group::GroupTable| permutability_degree(&g()).unwrap().degree;
        let one = Rational::one();
        let abelian = p(&|| direct_product(&cyclic(4).unwrap(), &cyclic(6).unwrap()).unwrap()) == one
            && p(&|| cyclic(16).unwrap()) == one;
        let q8 = p(&quaternion8) == one;
        let s3 = p(&|| dihedral(6).unwrap());
        let ds: Vec<Rational> = (4..=7).map(|n| p(&|| family("dihedral", n).unwrap())).collect();
        let decreasing = ds.windows(2).all(|w| w[1] < w[0]);
        let cq = p(&|| family("cq8", 7).unwrap());
        let pass = abelian && q8 && s3 == rat(5, 6) && decreasing && cq > rat(9, 10);
        let ds: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
        Outcome {
            pass,
            detail: format!(
                "abelian=1: {abelian}, p(Q8)=1: {q8}, p(S3)={s3}, p(D_2^n) n=4..7: {}, p(C16×Q8)={cq}",
                ds.join(" > ")
            ),
        }
    }));

    results.push(line(8, "TI bound data point", Duration::from_secs(600), || {
        let ti = ti_bound_report(&s).unwrap();
        let e = s.two_subgroup_count() as i64;
        let n = s.total_subgroups() as i64;
        // independent evaluation of 1 − (E/S)² + 1/|Syl|
        let expected = Rational::one() - rat(e * e, n * n) + rat(1, s.sylow_count as i64);
        let degree = match degree_sz8_extended(&g, &s, &[], None).unwrap() {
            DegreeOutcome::Complete(r) => r.degree,
            DegreeOutcome::Partial { .. } => unreachable!("no deadline"),
        };
        let pass = ti.bound == expected && degree <= ti.bound && s.sylow_count == 65;
        Outcome {
            pass,
            detail: format!("|E| = {e}, bound {} ≈ {:.5}, exact p(Sz(8)) = {degree}", ti.bound, approx(&ti.bound)),
        }
    }));

    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, &p)| !p).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

fn count_leaves(c: &Certificate) -> usize {
    if c.steps.is_empty() {
        1
    } else {
        c.steps.iter().map(count_leaves).sum()
    }
}

fn approx(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
