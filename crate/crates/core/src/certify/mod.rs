//! Exact-arithmetic certificates.
//!
//! A [`Certificate`] records one evaluated inequality between two
//! [`Quantity`] values. Quantities are of the form `c · 2^e` with rational
//! `c` and `e`; comparisons clear denominators and compare integers, so no
//! floating point is involved anywhere in a verdict.

pub mod bounds;
pub mod pow2;
pub mod qbinom;
pub mod quadratic;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::Rational;

pub use bounds::*;
pub use qbinom::qbinom;

/// An exact value `coeff · 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantity {
    pub coeff: Rational,
    pub exp: Rational,
}

impl Quantity {
    pub fn new(coeff: Rational, exp: Rational) -> Self {
        Quantity { coeff, exp }
    }

    /// `2^exp`.
    pub fn pow2(exp: Rational) -> Self {
        Quantity { coeff: Rational::one(), exp }
    }

    pub fn rational(r: Rational) -> Self {
        Quantity { coeff: r, exp: Rational::zero() }
    }

    pub fn int(n: impl Into<BigInt>) -> Self {
        Quantity::rational(Rational::from_integer(n.into()))
    }

    pub fn is_plain(&self) -> bool {
        self.exp.is_zero()
    }

    pub fn mul(&self, other: &Quantity) -> Quantity {
        Quantity { coeff: &self.coeff * &other.coeff, exp: &self.exp + &other.exp }
    }

    /// Exact total order.
    pub fn cmp_exact(&self, other: &Quantity) -> Ordering {
        pow2::compare(&self.coeff, &self.exp, &other.coeff, &other.exp)
    }

    /// Double-precision approximation, for display only.
    pub fn approx_log2(&self) -> f64 {
        use num_traits::ToPrimitive;
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        c.abs().log2() + self.exp.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<u64> for Quantity {
    fn from(n: u64) -> Self {
        Quantity::int(n)
    }
}

impl From<usize> for Quantity {
    fn from(n: usize) -> Self {
        Quantity::int(n as u64)
    }
}

impl From<BigUint> for Quantity {
    fn from(n: BigUint) -> Self {
        Quantity::int(BigInt::from(n))
    }
}

impl From<Rational> for Quantity {
    fn from(r: Rational) -> Self {
        Quantity::rational(r)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp.is_zero() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "2^({})", self.exp)
        } else {
            write!(f, "{}·2^({})", self.coeff, self.exp)
        }
    }
}

/// Serialises a rational as `{"num": "...", "den": "..."}` with decimal strings.
pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(2))?;
    map.serialize_entry("num", &r.numer().to_string())?;
    map.serialize_entry("den", &r.denom().to_string())?;
    map.end()
}

/// Serialises a big integer as a decimal string.
pub fn serialize_biguint<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

struct RationalRef<'a>(&'a Rational);

impl Serialize for RationalRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_rational(self.0, s)
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.exp.is_zero() {
            serialize_rational(&self.coeff, s)
        } else {
            let mut map = s.serialize_map(Some(2))?;
            map.serialize_entry("coeff", &RationalRef(&self.coeff))?;
            map.serialize_entry("pow2", &RationalRef(&self.exp))?;
            map.end()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn evaluate(self, ord: Ordering) -> bool {
        match self {
            Relation::Le => ord != Ordering::Greater,
            Relation::Lt => ord == Ordering::Less,
            Relation::Eq => ord == Ordering::Equal,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
        })
    }
}

/// One verified relation `lhs ⋈ rhs`, optionally backed by sub-steps.
///
/// `holds` is the evaluated truth of the headline relation conjoined with
/// every step.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub name: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub lhs: Quantity,
    pub relation: Relation,
    pub rhs: Quantity,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<Certificate>,
}

impl Certificate {
    pub fn compare(name: impl Into<String>, lhs: Quantity, relation: Relation, rhs: Quantity) -> Self {
        let holds = relation.evaluate(lhs.cmp_exact(&rhs));
        Certificate { name: name.into(), params: BTreeMap::new(), lhs, relation, rhs, holds, steps: Vec::new() }
    }

    /// A yes/no structural fact recorded as `observed = 1`.
    pub fn assertion(name: impl Into<String>, fact: bool) -> Self {
        Certificate::compare(name, Quantity::from(fact as u64), Relation::Eq, Quantity::from(1u64))
    }

    /// A conjunction of steps; the headline is the first step's left side
    /// against the last step's right side.
    pub fn chain(name: impl Into<String>, steps: Vec<Certificate>) -> Self {
        assert!(!steps.is_empty(), "empty certificate chain");
        let relation = if steps.iter().any(|s| s.relation == Relation::Lt) {
            Relation::Lt
        } else if steps.iter().any(|s| s.relation == Relation::Le) {
            Relation::Le
        } else {
            Relation::Eq
        };
        let lhs = steps[0].lhs.clone();
        let rhs = steps[steps.len() - 1].rhs.clone();
        let holds = steps.iter().all(|s| s.holds);
        Certificate { name: name.into(), params: BTreeMap::new(), lhs, relation, rhs, holds, steps }
    }

    /// A conjunction of independent checks; the headline reads
    /// `holding steps = total steps`.
    pub fn all_of(name: impl Into<String>, steps: Vec<Certificate>) -> Self {
        let holding = steps.iter().filter(|s| s.holds).count();
        let mut c = Certificate::compare(name, Quantity::from(holding), Relation::Eq, Quantity::from(steps.len()));
        c.steps = steps;
        c
    }

    pub fn with_param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("serialisable parameter"));
        self
    }

    pub fn push_step(&mut self, step: Certificate) {
        self.holds &= step.holds;
        self.steps.push(step);
    }

    /// Names of every failing leaf, depth first.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_failures(&mut out);
        out
    }

    fn collect_failures(&self, out: &mut Vec<String>) {
        let before = out.len();
        for s in &self.steps {
            s.collect_failures(out);
        }
        if !self.holds && out.len() == before {
            out.push(format!("{}: {} {} {}", self.name, self.lhs, self.relation, self.rhs));
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} {} {}",
            if self.holds { "ok" } else { "FAIL" },
            self.name,
            self.lhs,
            self.relation,
            self.rhs
        )
    }
}
