use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use szlab::certify::{self, serialize_rational, Certificate};
use szlab::classcount;
use szlab::group::{family, permutability_degree, ClassPer, FiniteGroup, GroupTable, PermutabilityReport};
use szlab::suzuki::{verify_special_structure, SzGroup};
use szlab::szlattice::{self, cache, DegreeOutcome, LatticeSurvey};
use szlab::{field, Rational};

use crate::{Command, FieldCommand, Output, SzCommand};

pub const SCHEMA: u32 = 1;
const CACHE_ENV: &str = "SZLAB_CACHE_DIR";
const CACHE_FILE: &str = "sz8-lattice.szlat";

/// A usage problem detected after argument parsing.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

pub fn exit_code_for(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match e.downcast_ref::<szlab::Error>() {
        Some(szlab::Error::FieldDegree(_)) | Some(szlab::Error::InvalidArgument(_)) => 2,
        _ => 1,
    }
}

fn emit(output: &Output, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_text(output.out.as_deref(), &text)
}

fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(SCHEMA));
    }
    v
}

fn rational(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

fn status(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

pub fn dispatch(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Field(FieldCommand::Verify { m, output }) => field_verify(m, &output),
        Command::Sz(SzCommand::Build { m, out }) => sz_build(m, &out),
        Command::Sz(SzCommand::VerifyStructure { m, output }) => sz_verify_structure(m, &output),
        Command::Classes { m, oracle, output } => classes(m, oracle, &output),
        Command::Certify { all, m_max, m, output } => certify_cmd(all, m_max, m, &output),
        Command::Degree { family, n, cayley, csv, output } => degree(family, n, cayley, csv, &output),
        Command::Lattice { m, degree, budget_mins, cache, checkpoint, output } => {
            lattice(m, degree, budget_mins, cache, checkpoint, &output)
        }
    }
}

fn field_verify(m: u32, output: &Output) -> Result<u8> {
    let f = field::FieldParams::new(m)?;
    let cert = field::verify_gcd_identity(m)?;
    let ok = cert.holds;
    emit(
        output,
        &with_schema(json!({
            "m": m,
            "order": f.order(),
            "modulus": f.modulus(),
            "theta_exponent": f.theta_exponent(),
            "primitive_element": f.primitive_element().0,
            "certificate": cert,
        })),
    )?;
    Ok(status(ok))
}

fn sz_build(m: u32, out: &Path) -> Result<u8> {
    let g = SzGroup::build(m)?;
    let sets = [g.sylow(), g.torus(), g.build_normalizer()];
    cache::save(out, g.order(), &sets)?;
    let v = with_schema(json!({
        "m": m,
        "order": g.order(),
        "points": g.point_count(),
        "generators": g.generators().len(),
        "cache": out.display().to_string(),
        "cached_subgroups": {
            "sylow": sets[0].size(),
            "torus": sets[1].size(),
            "normalizer": sets[2].size(),
        },
    }));
    emit(&Output { out: None }, &v)?;
    Ok(0)
}

fn sz_verify_structure(m: u32, output: &Output) -> Result<u8> {
    let cert = verify_special_structure(m)?;
    let ok = cert.holds;
    emit(output, &with_schema(json!({ "m": m, "certificate": cert })))?;
    Ok(status(ok))
}

fn classes(m: u32, oracle: bool, output: &Output) -> Result<u8> {
    if oracle && m != 3 {
        return usage("--oracle is only available at --m 3");
    }
    let res = classcount::class_count_result(m)?;
    let mut v = with_schema(serde_json::to_value(&res)?);
    let mut ok = true;
    if oracle {
        let o = classcount::oracle_counts(m)?;
        let sp = num_bigint::BigUint::from(o.p_subgroups);
        let sg = num_bigint::BigUint::from(o.gamma_subgroups);
        let checks = json!({
            "class_count_matches": res.exact_class_count == num_bigint::BigUint::from(o.p_classes),
            "subgroups_le_upper": sp <= res.subgroup_count_upper,
            "upper_le_boundP": res.subgroup_count_upper <= res.bound_p,
            "gamma_le_boundGamma": sg <= res.bound_gamma,
        });
        ok = checks.as_object().expect("object").values().all(|b| b == &json!(true));
        let map = v.as_object_mut().expect("object");
        map.insert("oracle_class_count".into(), json!(o.p_classes));
        map.insert("oracle_subgroup_count".into(), json!(o.p_subgroups));
        map.insert("oracle_gamma_subgroup_count".into(), json!(o.gamma_subgroups));
        map.insert("checks".into(), checks);
    }
    emit(output, &v)?;
    Ok(status(ok))
}

fn certify_cmd(all: bool, m_max: Option<u32>, m: Option<u32>, output: &Output) -> Result<u8> {
    let oracle = classcount::oracle_counts(3)?;
    let sp3 = oracle.p_subgroups as u64;
    let ip3 = (oracle.gamma_subgroups - oracle.p_subgroups) as u64;
    let at3 = |m: u32, v: u64| if m == 3 { Some(v) } else { None };
    let certs: Vec<Certificate> = if all {
        let m_max = m_max.expect("clap enforces --m-max with --all");
        if m_max < 3 {
            return usage("--m-max must be at least 3");
        }
        certify::all_certificates(m_max, Some(sp3), Some(ip3))?
    } else {
        let m = m.expect("clap enforces --m without --all");
        if m.is_multiple_of(2) || m < 3 {
            return usage(format!("--m must be odd and at least 3, got {m}"));
        }
        let mut v = Vec::new();
        for q in [2, 4, 8] {
            v.push(certify::dbound_sweep(m, q)?);
        }
        if m <= certify::MAX_IP_DEGREE {
            v.push(certify::ip_bound_certificate(m, at3(m, ip3))?);
        }
        v.push(certify::sp_bounds_certificate(m, at3(m, sp3))?);
        v.push(certify::f_max_certificate(m)?);
        v
    };
    let ok = certs.iter().all(|c| c.holds);
    for c in certs.iter().filter(|c| !c.holds) {
        for f in c.failures() {
            eprintln!("failed: {f}");
        }
    }
    let arr = certs
        .iter()
        .map(|c| Ok(with_schema(serde_json::to_value(c)?)))
        .collect::<Result<Vec<Value>>>()?;
    emit(output, &Value::Array(arr))?;
    Ok(status(ok))
}

fn parse_range(s: &str) -> Result<Vec<u32>> {
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| Usage(format!("--n: cannot parse {t:?}")));
    let (a, b) = if let Some((a, b)) = s.split_once("..=") {
        (parse(a)?, parse(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (parse(a)?, parse(b)?)
    } else {
        let a = parse(s)?;
        (a, a)
    };
    if a > b {
        return usage(format!("--n: empty range {s}"));
    }
    Ok((a..=b).collect())
}

#[derive(Serialize)]
struct DegreeRow {
    family: String,
    n: Option<u32>,
    order: usize,
    subgroup_count: usize,
    class_count: usize,
    degree_num: String,
    degree_den: String,
    runtime_ms: u128,
}

impl DegreeRow {
    fn new(family: &str, n: Option<u32>, r: &PermutabilityReport, elapsed: Duration) -> Self {
        DegreeRow {
            family: family.to_string(),
            n,
            order: r.order,
            subgroup_count: r.subgroup_count,
            class_count: r.class_count(),
            degree_num: r.degree.numer().to_string(),
            degree_den: r.degree.denom().to_string(),
            runtime_ms: elapsed.as_millis(),
        }
    }

    fn json(&self, r: &PermutabilityReport) -> Result<Value> {
        let mut v = serde_json::to_value(self)?;
        let map = v.as_object_mut().expect("object");
        map.insert("degree".into(), rational(&r.degree));
        if self.n.is_none() {
            map.remove("n");
        }
        Ok(v)
    }
}

fn degree(
    fam: Option<String>,
    n: Option<String>,
    cayley: Option<PathBuf>,
    csv: bool,
    output: &Output,
) -> Result<u8> {
    let mut rows: Vec<(DegreeRow, PermutabilityReport)> = Vec::new();
    let single;
    if let Some(path) = cayley {
        let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let g = GroupTable::parse_cayley(&text).map_err(|e| Usage(format!("--cayley: {e}")))?;
        let t = Instant::now();
        let r = permutability_degree(&g)?;
        rows.push((DegreeRow::new("cayley", None, &r, t.elapsed()), r));
        single = true;
    } else {
        let name = fam.expect("clap enforces --family or --cayley");
        if !szlab::group::FAMILIES.contains(&name.as_str()) {
            return usage(format!("--family: unknown family {name:?}; expected one of {:?}", szlab::group::FAMILIES));
        }
        let ns = parse_range(n.as_deref().expect("clap enforces --n"))?;
        single = ns.len() == 1;
        for k in ns {
            let g = family(&name, k)?;
            let t = Instant::now();
            let r = permutability_degree(&g)?;
            rows.push((DegreeRow::new(&name, Some(k), &r, t.elapsed()), r));
        }
    }
    if csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        for (row, _) in &rows {
            w.serialize(row)?;
        }
        let text = String::from_utf8(w.into_inner().map_err(|e| anyhow::anyhow!("{e}"))?)?;
        write_text(output.out.as_deref(), &text)?;
        return Ok(0);
    }
    let values = rows.iter().map(|(row, r)| row.json(r)).collect::<Result<Vec<_>>>()?;
    let v = if single {
        with_schema(values.into_iter().next().expect("one row"))
    } else {
        with_schema(json!({ "family": rows[0].0.family, "results": values }))
    };
    emit(output, &v)?;
    Ok(0)
}

fn default_cache() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()).map(|d| PathBuf::from(d).join(CACHE_FILE))
}

fn load_or_survey(g: &SzGroup, cache_path: Option<&Path>) -> Result<LatticeSurvey> {
    if let Some(p) = cache_path {
        if p.exists() {
            let (order, subs) = cache::load(p).with_context(|| format!("reading cache {}", p.display()))?;
            if order != g.order() {
                bail!("cache {} holds subgroups of a group of order {order}", p.display());
            }
            eprintln!("loaded {} subgroups from {}", subs.len(), p.display());
            return Ok(szlattice::survey_from_subgroups(g, subs)?);
        }
    }
    let s = szlattice::survey(g)?;
    if let Some(p) = cache_path {
        if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        cache::save(p, g.order(), &s.subgroups)?;
        eprintln!("wrote {} subgroups to {}", s.subgroups.len(), p.display());
    }
    Ok(s)
}

#[derive(Serialize)]
struct Checkpoint {
    schema: u32,
    classes: Vec<ClassPer>,
}

#[derive(serde::Deserialize)]
struct CheckpointIn {
    schema: u32,
    classes: Vec<ClassPer>,
}

#[derive(Serialize)]
struct DegreeSummary {
    #[serde(serialize_with = "serialize_rational")]
    degree: Rational,
    class_per: Vec<ClassPer>,
    within_ti_bound: bool,
}

fn lattice(
    m: u32,
    with_degree: bool,
    budget_mins: Option<f64>,
    cache_path: Option<PathBuf>,
    checkpoint: Option<PathBuf>,
    output: &Output,
) -> Result<u8> {
    if m != 3 {
        return usage(format!("the lattice survey is only available at --m 3, got {m}"));
    }
    if budget_mins.is_some_and(|b| b.is_nan() || b < 0.0 || !b.is_finite()) {
        return usage("--budget-mins must be a non-negative number");
    }
    let cache_path = cache_path.or_else(default_cache);
    let g = SzGroup::build(m)?;
    let s = load_or_survey(&g, cache_path.as_deref())?;
    let ti = szlattice::ti_bound_report(&s)?;
    let base = certify::induction_base_case(s.total_subgroups() as u64);
    let (with_trivial, without_trivial) = s.two_subgroup_census();
    let mut ok = s.sylow_count == 65 && s.ti_verified && base.holds;
    let mut v = with_schema(json!({
        "m": m,
        "group_order": s.group_order,
        "total_subgroups": s.total_subgroups(),
        "class_count": s.classes.len(),
        "class_reps": s.class_reps(),
        "order_profile": s.order_profile().iter()
            .map(|&(o, n, c)| json!({"order": o, "subgroups": n, "classes": c}))
            .collect::<Vec<_>>(),
        "maximal": s.maximal,
        "sylow_count": s.sylow_count,
        "ti_verified": s.ti_verified,
        "two_subgroup_count": without_trivial,
        "two_subgroups_with_trivial": with_trivial,
        "two_subgroups_without_trivial": without_trivial,
        "ti_bound": ti,
        "induction_base_case": base,
    }));
    if with_degree {
        let resume = match &checkpoint {
            Some(p) if p.exists() => {
                let c: CheckpointIn = serde_json::from_str(&fs::read_to_string(p)?)
                    .with_context(|| format!("parsing checkpoint {}", p.display()))?;
                if c.schema != SCHEMA {
                    bail!("checkpoint schema {} is not {SCHEMA}", c.schema);
                }
                c.classes
            }
            _ => Vec::new(),
        };
        let deadline = budget_mins.map(|b| Instant::now() + Duration::from_secs_f64(b * 60.0));
        let map = v.as_object_mut().expect("object");
        match szlattice::degree_sz8_extended(&g, &s, &resume, deadline)? {
            DegreeOutcome::Complete(r) => {
                let within = r.degree <= ti.bound;
                ok &= within && szlattice::degree_sanity(&r);
                let d = DegreeSummary { degree: r.degree.clone(), class_per: r.per_sizes, within_ti_bound: within };
                map.insert("degree".into(), serde_json::to_value(d)?);
            }
            DegreeOutcome::Partial { done, total_classes } => {
                ok = false;
                eprintln!("budget exhausted after {} of {total_classes} classes", done.len());
                if let Some(p) = &checkpoint {
                    let c = Checkpoint { schema: SCHEMA, classes: done.clone() };
                    fs::write(p, serde_json::to_string_pretty(&c)? + "\n")?;
                }
                map.insert(
                    "degree".into(),
                    json!({ "complete": false, "classes_done": done.len(), "total_classes": total_classes }),
                );
            }
        }
    }
    emit(output, &v)?;
    Ok(status(ok))
}
