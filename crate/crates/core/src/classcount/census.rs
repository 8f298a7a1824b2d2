//! Brute-force oracles on the 64-element `P` (and the 448-element `Γ`) at
//! `m = 3`, plus scans of the Frattini dimensions.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{enumerate_subspaces, frattini_of_x, Subspace};
use crate::certify::{Certificate, Quantity, Relation};
use crate::field::{FieldElement, FieldParams};
use crate::group::{all_subgroups, conjugate_subgroup, subgroup_classes, FiniteGroup, SubgroupSet};
use crate::numtheory::divisors;
use crate::suzuki::{c_act, GammaPair, SylowPair};
use crate::{Error, Result};

fn require_m3(m: u32) -> Result<()> {
    if m != 3 {
        return Err(Error::InvalidArgument(format!("brute-force oracles run at m = 3 only, got m = {m}")));
    }
    Ok(())
}

/// Lattice data computed directly by the group engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCounts {
    pub p_subgroups: usize,
    pub p_classes: usize,
    pub gamma_subgroups: usize,
}

pub fn oracle_counts(m: u32) -> Result<OracleCounts> {
    require_m3(m)?;
    let p = SylowPair::new(m)?;
    let subs = all_subgroups(&p)?;
    let classes = subgroup_classes(&p, &subs)?;
    let gamma = GammaPair::new(m)?;
    Ok(OracleCounts { p_subgroups: subs.len(), p_classes: classes.len(), gamma_subgroups: all_subgroups(&gamma)?.len() })
}

/// Subgroup of `P` with first coordinates in `x` and second in `h`.
fn preimage(p: &SylowPair, x: &Subspace, h: &Subspace) -> SubgroupSet {
    let n = p.order();
    SubgroupSet::from_indices(
        n,
        x.vectors().flat_map(|a| h.vectors().map(move |b| (a, b))).map(|(a, b)| {
            p.index(crate::suzuki::PPair::new(FieldElement(a), FieldElement(b)))
        }),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementRow {
    pub x_basis: Vec<u32>,
    pub h_basis: Vec<u32>,
    pub x_dim: u32,
    pub phi_dim: u32,
    pub h_dim: u32,
    /// `2^(dim X · dim(Z/H))`.
    pub expected: u64,
    pub complements: usize,
    pub classes: usize,
}

/// Complements to `Z/H` in `K/H` for every `X ⊆ V` and every `Φ(K) ≤ H ≤ Z`,
/// together with a check over all `H ≤ Z` that a complement exists exactly
/// when `Φ(K) ≤ H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementCensus {
    pub rows: Vec<ComplementRow>,
    pub complements_match: bool,
    pub classes_match: bool,
    pub existence_consistent: bool,
}

pub fn complement_census(m: u32) -> Result<ComplementCensus> {
    require_m3(m)?;
    let f = FieldParams::new(m)?;
    let p = SylowPair::new(m)?;
    let subs = all_subgroups(&p)?;
    let z = Subspace::full(m);
    let xs: Vec<Subspace> = enumerate_subspaces(m)?.collect();
    let hs = xs.clone();
    let mut rows = Vec::new();
    let mut existence_consistent = true;
    for x in &xs {
        let phi = frattini_of_x(&f, x);
        let k = preimage(&p, x, &z);
        for h in &hs {
            let hset = preimage(&p, &Subspace::zero(m), h);
            let zset = preimage(&p, &Subspace::zero(m), &z);
            let target = hset.size() << x.dim();
            let comps: Vec<&SubgroupSet> = subs
                .iter()
                .filter(|u| u.size() == target && u.is_subset(&k) && hset.is_subset(u) && u.intersection(&zset) == hset)
                .collect();
            let admissible = phi.is_subspace_of(h);
            existence_consistent &= admissible == !comps.is_empty();
            if !admissible {
                continue;
            }
            let mut orbits: HashSet<SubgroupSet> = HashSet::new();
            for u in &comps {
                let canon = (0..p.order()).map(|g| conjugate_subgroup(&p, u, g)).min().expect("nonempty");
                orbits.insert(canon);
            }
            rows.push(ComplementRow {
                x_basis: x.basis().to_vec(),
                h_basis: h.basis().to_vec(),
                x_dim: x.dim(),
                phi_dim: phi.dim(),
                h_dim: h.dim(),
                expected: 1 << (x.dim() * (m - h.dim())),
                complements: comps.len(),
                classes: orbits.len(),
            });
        }
    }
    let complements_match = rows.iter().all(|r| r.complements as u64 == r.expected);
    let classes_match = rows.iter().all(|r| r.classes as u64 == r.expected);
    Ok(ComplementCensus { rows, complements_match, classes_match, existence_consistent })
}

fn is_invariant(p: &SylowPair, u: &SubgroupSet, lambda: FieldElement) -> bool {
    let f = p.field();
    u.iter().all(|x| u.contains(p.index(c_act(f, lambda, p.pair(x)).expect("nonzero"))))
}

/// For every `B ≤ C`: at most one `B`-invariant subgroup per `P`-class of
/// subgroups of `P`. Also cross-checks
/// `|s(Γ)| − |s(P)| = Σ_{1 < B ≤ C} Σ_{U B-invariant} |P : U|`, which holds
/// because `C` acts fixed-point-freely on `P`.
pub fn b_invariant_check(m: u32) -> Result<Certificate> {
    require_m3(m)?;
    let p = SylowPair::new(m)?;
    let f = p.field().clone();
    let subs = all_subgroups(&p)?;
    let classes = subgroup_classes(&p, &subs)?;
    let w = f.primitive_element();
    let n = f.order() - 1;
    let mut steps = Vec::new();
    let mut predicted = 0usize;
    let mut invariant_counts = BTreeMap::new();
    for d in divisors(n) {
        let lambda = f.pow(w, n / d);
        let inv: Vec<bool> = subs.iter().map(|u| is_invariant(&p, u, lambda)).collect();
        let worst = classes.iter().map(|c| c.members.iter().filter(|&&i| inv[i]).count()).max().unwrap_or(0);
        let count = inv.iter().filter(|&&b| b).count();
        invariant_counts.insert(d, count);
        if d == 1 {
            steps.push(Certificate::compare(
                "trivial_b_fixes_everything",
                Quantity::from(count),
                Relation::Eq,
                Quantity::from(subs.len()),
            ));
            continue;
        }
        steps.push(
            Certificate::compare(
                "invariant_members_per_class",
                Quantity::from(worst),
                Relation::Le,
                Quantity::from(1u64),
            )
            .with_param("b_order", d),
        );
        predicted += subs.iter().zip(&inv).filter(|(_, &i)| i).map(|(u, _)| p.order() / u.size()).sum::<usize>();
    }
    let z = SubgroupSet::from_indices(p.order(), p.center_indices());
    steps.push(Certificate::assertion("center_is_c_invariant", is_invariant(&p, &z, w)));
    let gamma = GammaPair::new(m)?;
    let gamma_count = all_subgroups(&gamma)?.len();
    steps.push(Certificate::compare(
        "gamma_minus_p_from_invariant_subgroups",
        Quantity::from(gamma_count - subs.len()),
        Relation::Eq,
        Quantity::from(predicted),
    ));
    Ok(Certificate::all_of("b_invariant_check", steps)
        .with_param("m", m)
        .with_param("invariant_subgroups_by_b_order", invariant_counts)
        .with_param("gamma_subgroups", gamma_count)
        .with_param("p_subgroups", subs.len()))
}

/// How `dim Φ(K)` compares with `dim X` across all `X` of each dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrattiniPatternRow {
    pub x_dim: u32,
    pub subspaces: usize,
    /// Subspaces with `dim Φ(K) = dim X`.
    pub tight: usize,
    pub min_phi_dim: u32,
    pub max_phi_dim: u32,
}

pub fn frattini_pattern(m: u32) -> Result<Vec<FrattiniPatternRow>> {
    if m > super::MAX_SUM_DEGREE {
        return Err(Error::FieldDegree(m));
    }
    let f = FieldParams::new(m)?;
    let mut rows: Vec<FrattiniPatternRow> = (0..=m)
        .map(|k| FrattiniPatternRow { x_dim: k, subspaces: 0, tight: 0, min_phi_dim: u32::MAX, max_phi_dim: 0 })
        .collect();
    for x in enumerate_subspaces(m)? {
        let d = frattini_of_x(&f, &x).dim();
        let r = &mut rows[x.dim() as usize];
        r.subspaces += 1;
        r.tight += (d == x.dim()) as usize;
        r.min_phi_dim = r.min_phi_dim.min(d);
        r.max_phi_dim = r.max_phi_dim.max(d);
    }
    Ok(rows)
}

/// Two subspaces of the same dimension whose preimages have Frattini
/// subgroups of different orders, if any.
pub fn frattini_witness(m: u32) -> Result<Option<(Subspace, Subspace)>> {
    if m > super::MAX_SUM_DEGREE {
        return Err(Error::FieldDegree(m));
    }
    let f = FieldParams::new(m)?;
    let mut first: BTreeMap<(u32, u32), Subspace> = BTreeMap::new();
    for x in enumerate_subspaces(m)? {
        let d = frattini_of_x(&f, &x).dim();
        if let Some((_, other)) = first.iter().find(|((dx, dp), _)| *dx == x.dim() && *dp != d) {
            return Ok(Some((other.clone(), x)));
        }
        first.entry((x.dim(), d)).or_insert(x);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_values() {
        let o = oracle_counts(3).unwrap();
        assert_eq!(o.p_subgroups, 101);
        assert_eq!(o.p_classes, 59);
        assert_eq!(o.gamma_subgroups, 174);
        assert!(oracle_counts(5).is_err());
    }

    #[test]
    fn complements() {
        let c = complement_census(3).unwrap();
        assert!(c.existence_consistent);
        assert!(c.complements_match);
        // P-conjugation fuses complements whenever X and Z/H are both nontrivial.
        assert!(!c.classes_match);
        for r in &c.rows {
            assert!(r.classes <= r.complements);
            if r.x_dim == 0 || r.h_dim == 3 {
                assert_eq!(r.classes, r.complements);
            }
        }
    }

    #[test]
    fn invariance() {
        let c = b_invariant_check(3).unwrap();
        assert!(c.holds, "{:?}", c.failures());
        assert_eq!(c.params["invariant_subgroups_by_b_order"]["7"], 3);
    }

    #[test]
    fn frattini_scans() {
        let p3 = frattini_pattern(3).unwrap();
        assert_eq!(p3.iter().map(|r| r.subspaces).collect::<Vec<_>>(), vec![1, 7, 7, 1]);
        assert_eq!(p3[1].tight, 7);
        assert_eq!(p3[3].tight, 1);
        let p5 = frattini_pattern(5).unwrap();
        let tight: Vec<u32> = p5.iter().filter(|r| r.tight > 0).map(|r| r.x_dim).collect();
        assert_eq!(tight, vec![0, 1, 5]);
        assert!(p5.iter().all(|r| r.tight == 0 || r.tight == r.subspaces));
        // Frattini order is determined by dim X below m = 7.
        assert!(frattini_witness(3).unwrap().is_none());
        assert!(frattini_witness(5).unwrap().is_none());
        let (a, b) = frattini_witness(7).unwrap().expect("witness at m = 7");
        let f = FieldParams::new(7).unwrap();
        assert_eq!(a.dim(), b.dim());
        assert_ne!(frattini_of_x(&f, &a).dim(), frattini_of_x(&f, &b).dim());
    }
}
