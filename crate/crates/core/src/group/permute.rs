use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{all_subgroups, extend_capped, subgroup_classes, FiniteGroup, SubgroupClass, SubgroupSet};
use crate::Result;

/// Cheap cases shared by both permutability tests. Returns the size `|HK|`
/// must have when the answer is still open.
fn permute_prefilter<G: FiniteGroup + ?Sized>(g: &G, h: &SubgroupSet, k: &SubgroupSet) -> std::result::Result<bool, usize> {
    if h.is_subset(k) || k.is_subset(h) {
        return Ok(true);
    }
    let hk = h.size() * k.size() / h.intersection_size(k);
    if !g.order().is_multiple_of(hk) {
        return Ok(false);
    }
    Err(hk)
}

/// `HK = KH`, by scattering the product set `HK` and checking `KH ⊆ HK`.
pub fn permutes<G: FiniteGroup + ?Sized>(g: &G, h: &SubgroupSet, k: &SubgroupSet) -> bool {
    if let Ok(ans) = permute_prefilter(g, h, k) {
        return ans;
    }
    let (small, large) = if h.size() <= k.size() { (h, k) } else { (k, h) };
    let sv = small.to_vec();
    let lv = large.to_vec();
    let mut prod = SubgroupSet::empty(g.order());
    for &a in &sv {
        for &b in &lv {
            prod.insert(g.mul(a, b));
        }
    }
    lv.iter().all(|&b| sv.iter().all(|&a| prod.contains(g.mul(b, a))))
}

/// `HK = KH` via `|⟨H, K⟩| = |H||K|/|H∩K|`, growing the join from `H` with
/// the generators of `K` and abandoning it as soon as it is too large.
pub fn permutes_by_join<G: FiniteGroup + ?Sized>(
    g: &G,
    h: &SubgroupSet,
    h_gens: &[usize],
    k_gens: &[usize],
    k: &SubgroupSet,
) -> bool {
    let target = match permute_prefilter(g, h, k) {
        Ok(ans) => return ans,
        Err(t) => t,
    };
    let mut set = h.clone();
    let mut gens = h_gens.to_vec();
    for &x in k_gens {
        if set.contains(x) {
            continue;
        }
        match extend_capped(g, &set, &gens, x, target) {
            Some(s) => set = s,
            None => return false,
        }
        gens.push(x);
    }
    set.size() == target
}

/// `|Per(H)|`: members of `subs` permuting with `h`.
pub fn per_count<G: FiniteGroup + ?Sized>(g: &G, h: &SubgroupSet, subs: &[SubgroupSet]) -> usize {
    subs.par_iter().filter(|k| permutes(g, h, k)).count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPer {
    pub order: usize,
    pub class_size: usize,
    pub per: usize,
}

/// Permutability degree `p(G)` with its class decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutabilityReport {
    pub order: usize,
    pub subgroup_count: usize,
    pub per_sizes: Vec<ClassPer>,
    pub degree: BigRational,
}

impl PermutabilityReport {
    pub fn class_count(&self) -> usize {
        self.per_sizes.len()
    }

    /// Assembles the report from per-class counts.
    pub fn from_classes(order: usize, subgroup_count: usize, per_sizes: Vec<ClassPer>) -> Self {
        let num: BigUint = per_sizes.iter().map(|c| BigUint::from(c.class_size) * BigUint::from(c.per)).sum();
        let n = BigUint::from(subgroup_count);
        let degree = BigRational::new(num.into(), (&n * &n).into());
        PermutabilityReport { order, subgroup_count, per_sizes, degree }
    }
}

/// `p(G) = Σ_H |Per(H)| / |s(G)|²`, summed over conjugacy classes since
/// `|Per|` is a class function.
pub fn permutability_degree<G: FiniteGroup + ?Sized>(g: &G) -> Result<PermutabilityReport> {
    let subs = all_subgroups(g)?;
    let classes = subgroup_classes(g, &subs)?;
    Ok(degree_from_classes(g, &subs, &classes))
}

pub(crate) fn degree_from_classes<G: FiniteGroup + ?Sized>(
    g: &G,
    subs: &[SubgroupSet],
    classes: &[SubgroupClass],
) -> PermutabilityReport {
    let per_sizes = classes
        .iter()
        .map(|c| ClassPer {
            order: c.representative.size(),
            class_size: c.size,
            per: per_count(g, &c.representative, subs),
        })
        .collect();
    PermutabilityReport::from_classes(g.order(), subs.len(), per_sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure, cyclic, generating_set, dihedral, direct_product, quaternion8, semidirect_cyclic, GroupTable};
    use num_traits::One;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    /// Direct O(|s(G)|²) count with the product-set definition.
    fn naive_degree(g: &GroupTable) -> BigRational {
        let subs = all_subgroups(g).unwrap();
        let mut count = 0i64;
        for h in &subs {
            for k in &subs {
                let hk: std::collections::BTreeSet<usize> =
                    h.iter().flat_map(|a| k.iter().map(move |b| g.mul(a, b))).collect();
                let kh: std::collections::BTreeSet<usize> =
                    k.iter().flat_map(|b| h.iter().map(move |a| g.mul(b, a))).collect();
                count += (hk == kh) as i64;
            }
        }
        let n = subs.len() as i64;
        rat(count, n * n)
    }

    #[test]
    fn s3_examples() {
        let s3 = dihedral(6).unwrap();
        let subs = all_subgroups(&s3).unwrap();
        let a = closure(&s3, [3]);
        let b = closure(&s3, [4]);
        assert!(!permutes(&s3, &a, &b));
        assert!(permutes(&s3, &a, &a));
        assert!(permutes(&s3, &SubgroupSet::trivial(6), &a));
        assert!(permutes(&s3, &SubgroupSet::full(6), &a));
        assert_eq!(per_count(&s3, &a, &subs), 4);
        assert_eq!(per_count(&s3, &SubgroupSet::full(6), &subs), 6);
        assert_eq!(permutability_degree(&s3).unwrap().degree, rat(5, 6));
    }

    #[test]
    fn quasi_dedekind_examples() {
        assert!(permutability_degree(&quaternion8()).unwrap().degree.is_one());
        assert!(permutability_degree(&cyclic(12).unwrap()).unwrap().degree.is_one());
        let ab = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert!(permutability_degree(&ab).unwrap().degree.is_one());
    }

    #[test]
    fn degree_matches_naive_definition() {
        for g in [dihedral(8).unwrap(), dihedral(12).unwrap(), semidirect_cyclic(5, 4, 2).unwrap(), semidirect_cyclic(7, 3, 2).unwrap()] {
            let r = permutability_degree(&g).unwrap();
            assert_eq!(r.degree, naive_degree(&g));
            assert_eq!(r.per_sizes.iter().map(|c| c.class_size).sum::<usize>(), r.subgroup_count);
        }
    }

    #[test]
    fn both_tests_agree_and_are_symmetric() {
        let g = semidirect_cyclic(7, 3, 2).unwrap();
        let subs = all_subgroups(&g).unwrap();
        let gens: Vec<Vec<usize>> = subs.iter().map(|h| generating_set(&g, h)).collect();
        for (i, h) in subs.iter().enumerate() {
            for (j, k) in subs.iter().enumerate() {
                let p = permutes(&g, h, k);
                assert_eq!(p, permutes(&g, k, h));
                assert_eq!(p, permutes_by_join(&g, h, &gens[i], &gens[j], k));
                let join = closure(&g, h.iter().chain(k.iter()));
                assert_eq!(p, join.size() * h.intersection_size(k) == h.size() * k.size());
            }
        }
    }
}
