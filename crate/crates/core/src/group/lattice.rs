use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{FiniteGroup, SubgroupSet};
use crate::{Error, Result};

/// Largest order accepted by [`all_subgroups`].
pub const LATTICE_ORDER_CAP: usize = 5000;

/// Extends the subgroup `h` (with generators `h_gens`) by `x`, adding right
/// cosets `H·r` until the union is closed under right multiplication by every
/// generator. Returns `None` once the size would exceed `cap`.
pub fn extend_capped<G: FiniteGroup + ?Sized>(
    g: &G,
    h: &SubgroupSet,
    h_gens: &[usize],
    x: usize,
    cap: usize,
) -> Option<SubgroupSet> {
    if h.contains(x) {
        return Some(h.clone());
    }
    let base = h.to_vec();
    let mut gens = h_gens.to_vec();
    gens.push(x);
    let mut set = h.clone();
    let mut reps = vec![0usize];
    let add_coset = |set: &mut SubgroupSet, r: usize| -> bool {
        if set.size() + base.len() > cap {
            return false;
        }
        for &b in &base {
            set.insert(g.mul(b, r));
        }
        true
    };
    if !add_coset(&mut set, x) {
        return None;
    }
    reps.push(x);
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i];
        for &s in &gens {
            let y = g.mul(r, s);
            if !set.contains(y) {
                if !add_coset(&mut set, y) {
                    return None;
                }
                reps.push(y);
            }
        }
        i += 1;
    }
    Some(set)
}

/// `⟨seed⟩`.
pub fn closure<G: FiniteGroup + ?Sized>(g: &G, seed: impl IntoIterator<Item = usize>) -> SubgroupSet {
    let mut set = SubgroupSet::trivial(g.order());
    let mut gens = Vec::new();
    for x in seed {
        if !set.contains(x) {
            set = extend_capped(g, &set, &gens, x, usize::MAX).expect("uncapped");
            gens.push(x);
        }
    }
    set
}

/// Walks `candidates` in order, keeping each element not already in the
/// closure of those kept so far.
pub fn greedy_generators<G: FiniteGroup + ?Sized>(g: &G, candidates: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut set = SubgroupSet::trivial(g.order());
    let mut gens = Vec::new();
    for x in candidates {
        if set.size() == g.order() {
            break;
        }
        if !set.contains(x) {
            set = extend_capped(g, &set, &gens, x, usize::MAX).expect("uncapped");
            gens.push(x);
        }
    }
    gens
}

/// A generating set of the subgroup `h`.
pub fn generating_set<G: FiniteGroup + ?Sized>(g: &G, h: &SubgroupSet) -> Vec<usize> {
    let mut set = SubgroupSet::trivial(g.order());
    let mut gens = Vec::new();
    for x in h.iter() {
        if set.size() == h.size() {
            break;
        }
        if !set.contains(x) {
            set = extend_capped(g, &set, &gens, x, usize::MAX).expect("uncapped");
            gens.push(x);
        }
    }
    gens
}

/// `H^x = x⁻¹ H x`.
pub fn conjugate_subgroup<G: FiniteGroup + ?Sized>(g: &G, h: &SubgroupSet, x: usize) -> SubgroupSet {
    let xi = g.inv(x);
    SubgroupSet::from_indices(g.order(), h.iter().map(|y| g.mul(g.mul(xi, y), x)))
}

pub fn normalizer<G: FiniteGroup + ?Sized>(g: &G, h: &SubgroupSet) -> SubgroupSet {
    let gens = generating_set(g, h);
    let members: Vec<usize> =
        (0..g.order()).into_par_iter().filter(|&x| gens.iter().all(|&y| h.contains(g.conj(y, x)))).collect();
    SubgroupSet::from_indices(g.order(), members)
}

pub fn is_normal<G: FiniteGroup + ?Sized>(g: &G, h: &SubgroupSet) -> bool {
    let hg = generating_set(g, h);
    g.generators().iter().all(|&x| hg.iter().all(|&y| h.contains(g.conj(y, x))))
}

/// One generator per cyclic subgroup of prime-power order.
fn zuppo_generators<G: FiniteGroup + ?Sized>(g: &G) -> Vec<usize> {
    let mut seen = SubgroupSet::empty(g.order());
    let mut out = Vec::new();
    for x in 1..g.order() {
        if seen.contains(x) {
            continue;
        }
        let n = g.element_order(x);
        if crate::numtheory::omega(n as u64) != 1 {
            continue;
        }
        // Mark every generator of ⟨x⟩.
        let mut y = x;
        for k in 1..n {
            if crate::numtheory::gcd(k as u64, n as u64) == 1 {
                seen.insert(y);
            }
            y = g.mul(y, x);
        }
        out.push(x);
    }
    out
}

/// Every subgroup of `g`, sorted by (size, bit vector).
///
/// Each subgroup is generated by its cyclic subgroups of prime-power order,
/// so extending known subgroups by one such generator at a time reaches a
/// fixpoint containing the whole lattice. Generations are processed in
/// parallel; the output order does not depend on scheduling.
pub fn all_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Result<Vec<SubgroupSet>> {
    let n = g.order();
    if n > LATTICE_ORDER_CAP {
        return Err(Error::OrderCap { order: n, cap: LATTICE_ORDER_CAP });
    }
    let zuppos = zuppo_generators(g);
    let trivial = SubgroupSet::trivial(n);
    let mut known: HashSet<SubgroupSet> = HashSet::new();
    known.insert(trivial.clone());
    let mut frontier: Vec<(SubgroupSet, Vec<usize>)> = vec![(trivial, Vec::new())];
    while !frontier.is_empty() {
        let found: Vec<(SubgroupSet, Vec<usize>)> = frontier
            .par_iter()
            .flat_map_iter(|(h, gens)| {
                let mut local: HashMap<SubgroupSet, Vec<usize>> = HashMap::new();
                for &z in &zuppos {
                    if h.contains(z) {
                        continue;
                    }
                    let k = extend_capped(g, h, gens, z, usize::MAX).expect("uncapped");
                    local.entry(k).or_insert_with(|| {
                        let mut kg = gens.clone();
                        kg.push(z);
                        kg
                    });
                }
                local.into_iter()
            })
            .collect();
        let mut next = Vec::new();
        for (k, gens) in found {
            if !known.contains(&k) {
                known.insert(k.clone());
                next.push((k, gens));
            }
        }
        frontier = next;
    }
    let mut out: Vec<SubgroupSet> = known.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// A conjugacy class of subgroups: least member, size, and member indices
/// into the list it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: SubgroupSet,
    pub size: usize,
    pub members: Vec<usize>,
}

/// Partitions `subs` (closed under conjugation) into conjugacy classes,
/// sorted by representative.
pub fn subgroup_classes<G: FiniteGroup + ?Sized>(g: &G, subs: &[SubgroupSet]) -> Result<Vec<SubgroupClass>> {
    let index: HashMap<&SubgroupSet, usize> = subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let gens = g.generators();
    let images: Vec<Vec<usize>> = subs
        .par_iter()
        .map(|h| {
            gens.iter()
                .map(|&x| {
                    let c = conjugate_subgroup(g, h, x);
                    index
                        .get(&c)
                        .copied()
                        .ok_or_else(|| Error::InvalidArgument("subgroup list is not closed under conjugation".into()))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    let mut parent: Vec<usize> = (0..subs.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, imgs) in images.iter().enumerate() {
        for &j in imgs {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..subs.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut classes: Vec<SubgroupClass> = groups
        .into_values()
        .map(|members| {
            let rep = members.iter().map(|&i| &subs[i]).min().expect("nonempty").clone();
            SubgroupClass { representative: rep, size: members.len(), members }
        })
        .collect();
    classes.sort_unstable_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, quaternion8, semidirect_cyclic, GroupTable};

    /// Every subset containing the identity that is closed under products.
    fn brute_force_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
        let n = g.order();
        assert!(n <= 20);
        let mut out = Vec::new();
        for mask in 0u32..(1 << (n - 1)) {
            let s = SubgroupSet::from_indices(n, std::iter::once(0).chain((1..n).filter(|&i| mask >> (i - 1) & 1 == 1)));
            if s.is_subgroup(g) {
                out.push(s);
            }
        }
        out.sort_unstable();
        out
    }

    fn corpus() -> Vec<(&'static str, GroupTable)> {
        vec![
            ("C1", cyclic(1).unwrap()),
            ("C7", cyclic(7).unwrap()),
            ("C12", cyclic(12).unwrap()),
            ("S3", dihedral(6).unwrap()),
            ("D8", dihedral(8).unwrap()),
            ("D10", dihedral(10).unwrap()),
            ("D14", dihedral(14).unwrap()),
            ("Q8", quaternion8()),
            ("C2xC2xC2", direct_product(&direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap(), &cyclic(2).unwrap()).unwrap()),
            ("C4xC4", direct_product(&cyclic(4).unwrap(), &cyclic(4).unwrap()).unwrap()),
            ("C5:C4", semidirect_cyclic(5, 4, 2).unwrap()),
            ("C3:C4", semidirect_cyclic(3, 4, 2).unwrap()),
            ("C7:C3", semidirect_cyclic(7, 3, 2).unwrap()),
            ("D18", dihedral(18).unwrap()),
        ]
    }

    #[test]
    fn closure_examples() {
        let s3 = dihedral(6).unwrap();
        assert_eq!(closure(&s3, [0]).size(), 1);
        assert_eq!(closure(&s3, 0..6).size(), 6);
        // Rotations r, r² have indices 1, 2.
        let c3 = closure(&s3, [1]);
        assert_eq!(c3.size(), 3);
        assert!(c3.is_subgroup(&s3));
    }

    #[test]
    fn capped_extension_aborts() {
        let d = dihedral(16).unwrap();
        let t = SubgroupSet::trivial(16);
        assert!(extend_capped(&d, &t, &[], 1, 4).is_none());
        assert_eq!(extend_capped(&d, &t, &[], 1, 8).unwrap().size(), 8);
    }

    #[test]
    fn lattice_matches_subset_brute_force() {
        for (name, g) in corpus() {
            if g.order() > 20 {
                continue;
            }
            assert_eq!(all_subgroups(&g).unwrap(), brute_force_subgroups(&g), "{name}");
        }
    }

    #[test]
    fn lattice_counts() {
        let counts = |g: &GroupTable| all_subgroups(g).unwrap().len();
        assert_eq!(counts(&cyclic(7).unwrap()), 2);
        assert_eq!(counts(&dihedral(6).unwrap()), 6);
        assert_eq!(counts(&dihedral(14).unwrap()), 10);
        assert_eq!(counts(&quaternion8()), 6);
        assert_eq!(counts(&direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap()), 5);
        // D_{2n} has d(n) + σ(n) subgroups.
        assert_eq!(counts(&dihedral(24).unwrap()), 6 + 28);
        assert_eq!(counts(&dihedral(64).unwrap()), 6 + 63);
    }

    #[test]
    fn every_subgroup_is_closed() {
        for (name, g) in corpus() {
            for h in all_subgroups(&g).unwrap() {
                assert!(h.is_subgroup(&g), "{name}");
            }
        }
    }

    #[test]
    fn classes() {
        let s3 = dihedral(6).unwrap();
        let subs = all_subgroups(&s3).unwrap();
        let cls = subgroup_classes(&s3, &subs).unwrap();
        let mut sizes: Vec<(usize, usize)> = cls.iter().map(|c| (c.representative.size(), c.size)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![(1, 1), (2, 3), (3, 1), (6, 1)]);
        for (name, g) in corpus() {
            let subs = all_subgroups(&g).unwrap();
            let cls = subgroup_classes(&g, &subs).unwrap();
            assert_eq!(cls.iter().map(|c| c.size).sum::<usize>(), subs.len(), "{name}");
            for c in &cls {
                assert_eq!(g.order() % c.size, 0, "{name}");
                assert!(c.members.iter().all(|&i| subs[i] >= c.representative));
            }
        }
        let c12 = cyclic(12).unwrap();
        let subs = all_subgroups(&c12).unwrap();
        assert!(subgroup_classes(&c12, &subs).unwrap().iter().all(|c| c.size == 1));
    }

    #[test]
    fn normalizers() {
        let s3 = dihedral(6).unwrap();
        let c2 = closure(&s3, [3]);
        assert_eq!(normalizer(&s3, &c2), c2);
        let c3 = closure(&s3, [1]);
        assert_eq!(normalizer(&s3, &c3).size(), 6);
        assert!(is_normal(&s3, &c3));
        assert!(!is_normal(&s3, &c2));
    }
}
