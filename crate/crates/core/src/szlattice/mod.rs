//! The subgroup lattice of `Sz(8)`, assembled from its maximal subgroups.
//!
//! Every proper subgroup lies in a maximal one, and `Sz(8)` has four classes
//! of maximal subgroups: `Γ = P ⋊ C` (order 448), `D₁₄`, `C₁₃ ⋊ C₄` and
//! `C₅ ⋊ C₄`. Enumerating `s(M)` for one representative of each class with
//! the dense machinery and spreading the result over a transversal of
//! `M\G` by conjugation gives every proper subgroup, which is then
//! deduplicated exactly.

pub mod cache;

use std::collections::HashSet;
use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{comeback_bound, serialize_rational};
use crate::group::{
    all_subgroups, conjugate_subgroup, generating_set, normalizer, permutes_by_join, subgroup_classes, ClassPer,
    FiniteGroup, GroupTable, PermutabilityReport, SubgroupClass, SubgroupSet,
};
use crate::suzuki::{SzGroup, SZ8_ORDER};
use crate::{Error, Rational, Result};

/// Default ceiling on the number of distinct subgroups held in memory
/// (about 360 MB of bit vectors for `Sz(8)`).
pub const DEFAULT_SUBGROUP_BUDGET: usize = 100_000;

/// Transversal blocks handed to the thread pool at a time; bounds the
/// number of undeduplicated conjugates alive at once.
const BLOCK: usize = 128;

#[derive(Clone, Debug)]
pub struct MaximalRep {
    pub label: &'static str,
    pub subgroup: SubgroupSet,
}

impl MaximalRep {
    pub fn order(&self) -> usize {
        self.subgroup.size()
    }
}

fn first_of_order(g: &SzGroup, n: usize) -> Result<usize> {
    (0..g.order())
        .find(|&x| g.element_order(x) == n)
        .ok_or_else(|| Error::Internal(format!("no element of order {n}")))
}

/// One representative of each class of maximal subgroups, each checked to be
/// proper and self-normalising. Elements of orders 7, 13, 5 are the first of
/// that order in index order.
pub fn maximal_reps(g: &SzGroup) -> Result<Vec<MaximalRep>> {
    if g.field().m() != 3 || g.order() != SZ8_ORDER {
        return Err(Error::InvalidArgument("the maximal-subgroup survey is only available for Sz(8)".into()));
    }
    let gamma = g.build_normalizer();
    if normalizer(g, &g.sylow()) != gamma {
        return Err(Error::Internal("N(P) differs from P∘C".into()));
    }
    let mut reps = vec![MaximalRep { label: "P⋊C", subgroup: gamma }];
    for (label, n, expected) in [("D14", 7, 14), ("C13⋊C4", 13, 52), ("C5⋊C4", 5, 20)] {
        let x = first_of_order(g, n)?;
        let cyc = crate::group::closure(g, [x]);
        let m = normalizer(g, &cyc);
        if m.size() != expected {
            return Err(Error::Internal(format!("N(<x>) for |x| = {n} has order {}, expected {expected}", m.size())));
        }
        reps.push(MaximalRep { label, subgroup: m });
    }
    for r in &reps {
        if r.order() == g.order() || normalizer(g, &r.subgroup) != r.subgroup {
            return Err(Error::Internal(format!("{} is not a proper self-normalising subgroup", r.label)));
        }
    }
    Ok(reps)
}

/// Representatives `g` of the right cosets `Mg`.
pub fn right_transversal<G: FiniteGroup + ?Sized>(g: &G, m: &SubgroupSet) -> Vec<usize> {
    let mv = m.to_vec();
    let mut covered = SubgroupSet::empty(g.order());
    let mut reps = Vec::with_capacity(g.order() / mv.len());
    for x in 0..g.order() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for &y in &mv {
            covered.insert(g.mul(y, x));
        }
    }
    reps
}

/// `s(M)` in the indexing of `g`, via a dense table of `M`.
pub fn local_subgroups<G: FiniteGroup + ?Sized>(g: &G, m: &SubgroupSet) -> Result<Vec<SubgroupSet>> {
    let elems = m.to_vec();
    let table = GroupTable::from_subgroup(g, &elems)?;
    Ok(all_subgroups(&table)?
        .into_iter()
        .map(|h| SubgroupSet::from_indices(g.order(), h.iter().map(|i| elems[i])))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximalSummary {
    pub label: String,
    pub order: usize,
    pub index: usize,
    pub local_subgroups: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRep {
    #[serde(skip)]
    pub representative: SubgroupSet,
    pub order: usize,
    pub class_size: usize,
}

/// Result of the survey. `subgroups` is sorted (by order, then bit vector)
/// and `classes` refers into it.
#[derive(Clone, Debug)]
pub struct LatticeSurvey {
    pub group_order: usize,
    pub subgroups: Vec<SubgroupSet>,
    pub classes: Vec<SubgroupClass>,
    pub maximal: Vec<MaximalSummary>,
    pub sylow_count: usize,
    pub ti_verified: bool,
}

impl LatticeSurvey {
    pub fn total_subgroups(&self) -> usize {
        self.subgroups.len()
    }

    pub fn class_reps(&self) -> Vec<ClassRep> {
        self.classes
            .iter()
            .map(|c| ClassRep { representative: c.representative.clone(), order: c.representative.size(), class_size: c.size })
            .collect()
    }

    /// Subgroups of 2-power order, counted `(with, without)` the trivial one.
    pub fn two_subgroup_census(&self) -> (usize, usize) {
        let with = self.subgroups.iter().filter(|h| h.size().is_power_of_two()).count();
        (with, with - 1)
    }

    /// `|E|` in the primary convention: nontrivial 2-subgroups.
    pub fn two_subgroup_count(&self) -> usize {
        self.two_subgroup_census().1
    }

    /// `(order, number of subgroups, number of classes)`, ascending by order.
    pub fn order_profile(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for c in &self.classes {
            let o = c.representative.size();
            match out.iter_mut().find(|r| r.0 == o) {
                Some(r) => {
                    r.1 += c.size;
                    r.2 += 1;
                }
                None => out.push((o, c.size, 1)),
            }
        }
        out.sort_unstable();
        out
    }
}

/// Full survey with the default memory budget.
pub fn survey(g: &SzGroup) -> Result<LatticeSurvey> {
    survey_with(g, &[0, 1, 2, 3], DEFAULT_SUBGROUP_BUDGET)
}

/// Survey processing the maximal classes in `order` (a permutation of
/// `0..4`), failing once more than `budget` distinct subgroups are held.
pub fn survey_with(g: &SzGroup, order: &[usize], budget: usize) -> Result<LatticeSurvey> {
    let reps = maximal_reps(g)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..reps.len()).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument("work order must be a permutation of the maximal classes".into()));
    }
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    let mut maximal = vec![None; reps.len()];
    for &ri in order {
        let rep = &reps[ri];
        let local = local_subgroups(g, &rep.subgroup)?;
        let transversal = right_transversal(g, &rep.subgroup);
        maximal[ri] = Some(MaximalSummary {
            label: rep.label.to_string(),
            order: rep.order(),
            index: transversal.len(),
            local_subgroups: local.len(),
        });
        for block in transversal.chunks(BLOCK) {
            let fresh: Vec<SubgroupSet> = block
                .par_iter()
                .flat_map_iter(|&x| local.iter().map(move |h| conjugate_subgroup(g, h, x)))
                .filter(|c| !seen.contains(c))
                .collect();
            seen.extend(fresh);
            if seen.len() > budget {
                return Err(Error::SubgroupBudget(seen.len()));
            }
        }
    }
    seen.insert(SubgroupSet::full(g.order()));
    let mut subgroups: Vec<SubgroupSet> = seen.into_iter().collect();
    subgroups.par_sort_unstable();
    finish(g, subgroups, maximal.into_iter().map(|m| m.expect("every class processed")).collect())
}

/// Rebuilds a survey from a cached subgroup list, re-deriving the classes.
pub fn survey_from_subgroups(g: &SzGroup, mut subgroups: Vec<SubgroupSet>) -> Result<LatticeSurvey> {
    if subgroups.iter().any(|h| h.universe() != g.order()) {
        return Err(Error::Cache("cached subgroups belong to a group of another order".into()));
    }
    subgroups.par_sort_unstable();
    subgroups.dedup();
    if subgroups.par_iter().any(|h| !h.is_subgroup(g)) {
        return Err(Error::Cache("cached entry is not a subgroup".into()));
    }
    let reps = maximal_reps(g)?;
    let maximal = reps
        .iter()
        .map(|r| {
            Ok(MaximalSummary {
                label: r.label.to_string(),
                order: r.order(),
                index: g.order() / r.order(),
                local_subgroups: subgroups.iter().filter(|h| h.is_subset(&r.subgroup)).count(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    finish(g, subgroups, maximal)
}

fn finish(g: &SzGroup, subgroups: Vec<SubgroupSet>, maximal: Vec<MaximalSummary>) -> Result<LatticeSurvey> {
    if let Some(h) = subgroups.iter().find(|h| !g.order().is_multiple_of(h.size())) {
        return Err(Error::Internal(format!("subgroup of order {} does not divide |G|", h.size())));
    }
    let classes = subgroup_classes(g, &subgroups)?;
    let q2 = {
        let q = g.field().order() as usize;
        q * q
    };
    let sylows: Vec<&SubgroupSet> = subgroups.iter().filter(|h| h.size() == q2).collect();
    let ti_verified = sylows
        .par_iter()
        .enumerate()
        .all(|(i, a)| sylows[i + 1..].iter().all(|b| a.intersection_size(b) == 1));
    Ok(LatticeSurvey { group_order: g.order(), sylow_count: sylows.len(), ti_verified, subgroups, classes, maximal })
}

/// Inputs and output of the comeback bound on `p(Sz(8))`.
#[derive(Clone, Debug, Serialize)]
pub struct TiReport {
    pub two_subgroups: usize,
    pub total_subgroups: usize,
    pub sylow_count: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub bound: Rational,
}

pub fn ti_bound_report(s: &LatticeSurvey) -> Result<TiReport> {
    let e = s.two_subgroup_count();
    let total = s.total_subgroups();
    let bound = comeback_bound(e as u64, total as u64, s.sylow_count as u64)?;
    Ok(TiReport {
        two_subgroups: e,
        total_subgroups: total,
        sylow_count: s.sylow_count,
        ratio: Rational::new((e as i64).into(), (total as i64).into()),
        bound,
    })
}

/// Outcome of the budgeted degree computation.
#[derive(Clone, Debug)]
pub enum DegreeOutcome {
    Complete(PermutabilityReport),
    /// Per-class counts for the first `done.len()` classes, usable as a
    /// checkpoint to resume from.
    Partial { done: Vec<ClassPer>, total_classes: usize },
}

/// Exact `p(Sz(8))` from the survey, class by class, stopping before
/// `deadline`. `resume` is a prefix of per-class results from an earlier run.
pub fn degree_sz8_extended(
    g: &SzGroup,
    s: &LatticeSurvey,
    resume: &[ClassPer],
    deadline: Option<Instant>,
) -> Result<DegreeOutcome> {
    let total_classes = s.classes.len();
    if resume.len() > total_classes {
        return Err(Error::InvalidArgument("checkpoint has more classes than the survey".into()));
    }
    for (c, r) in s.classes.iter().zip(resume) {
        if c.representative.size() != r.order || c.size != r.class_size {
            return Err(Error::InvalidArgument("checkpoint does not match the survey's classes".into()));
        }
    }
    let gens: Vec<Vec<usize>> = s.subgroups.par_iter().map(|k| generating_set(g, k)).collect();
    let mut done = resume.to_vec();
    for c in &s.classes[resume.len()..] {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Ok(DegreeOutcome::Partial { done, total_classes });
        }
        let hi = c.members[0];
        let h = &s.subgroups[hi];
        let hg = &gens[hi];
        let per = s
            .subgroups
            .par_iter()
            .zip(gens.par_iter())
            .filter(|(k, kg)| permutes_by_join(g, h, hg, kg, k))
            .count();
        done.push(ClassPer { order: c.representative.size(), class_size: c.size, per });
    }
    Ok(DegreeOutcome::Complete(PermutabilityReport::from_classes(g.order(), s.total_subgroups(), done)))
}

/// `p(G) ≤ 1`, and the whole group permutes with everything.
pub fn degree_sanity(report: &PermutabilityReport) -> bool {
    report.degree <= Rational::one()
        && report.per_sizes.last().is_some_and(|c| c.order == report.order && c.per == report.subgroup_count)
}
