use num_bigint::BigUint;

use super::{all_subgroups, conjugate_subgroup, is_normal, FiniteGroup, GroupTable, SubgroupSet};
use crate::numtheory::gcd;
use crate::{Error, Result};

/// `H = (H ∩ A)(H ∩ B^g)` for a subgroup `H` of `G = A ⋊ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub normal_part: SubgroupSet,
    pub witness: usize,
    pub complement_part: SubgroupSet,
}

/// Finds `g ∈ A` with `|H ∩ A|·|H ∩ B^g| = |H|`, which exists whenever
/// `A ⊴ G` has a complement `B` of coprime order.
pub fn schur_zassenhaus_decompose<G: FiniteGroup + ?Sized>(
    g: &G,
    a: &SubgroupSet,
    b: &SubgroupSet,
    h: &SubgroupSet,
) -> Result<Decomposition> {
    if !a.is_subgroup(g) || !b.is_subgroup(g) || !h.is_subgroup(g) {
        return Err(Error::InvalidArgument("arguments must be subgroups".into()));
    }
    if a.size() * b.size() != g.order() || a.intersection_size(b) != 1 {
        return Err(Error::InvalidArgument("B is not a complement to A".into()));
    }
    if gcd(a.size() as u64, b.size() as u64) != 1 {
        return Err(Error::InvalidArgument("|A| and |B| are not coprime".into()));
    }
    if !is_normal(g, a) {
        return Err(Error::InvalidArgument("A is not normal".into()));
    }
    let ha = h.intersection(a);
    for x in a.iter() {
        let hb = h.intersection(&conjugate_subgroup(g, b, x));
        if ha.size() * hb.size() == h.size() {
            return Ok(Decomposition { normal_part: ha, witness: x, complement_part: hb });
        }
    }
    Err(Error::Internal("no conjugate of the complement meets H in a complement".into()))
}

/// `|A|·|s(A)|·|s(B)|`, an upper bound for `|s(A ⋊ B)|` when the orders are coprime.
pub fn coprime_count_bound(a: &GroupTable, b: &GroupTable) -> Result<BigUint> {
    if gcd(a.order() as u64, b.order() as u64) != 1 {
        return Err(Error::InvalidArgument("factor orders are not coprime".into()));
    }
    let sa = all_subgroups(a)?.len();
    let sb = all_subgroups(b)?.len();
    Ok(BigUint::from(a.order()) * BigUint::from(sa) * BigUint::from(sb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure, cyclic, dihedral};

    #[test]
    fn dihedral_decompositions() {
        for order in [6, 14] {
            let g = dihedral(order).unwrap();
            let a = closure(&g, [1]);
            let b = closure(&g, [order / 2]);
            for h in all_subgroups(&g).unwrap() {
                let d = schur_zassenhaus_decompose(&g, &a, &b, &h).unwrap();
                assert!(a.contains(d.witness));
                assert_eq!(d.normal_part.size() * d.complement_part.size(), h.size());
                let rebuilt = closure(&g, d.normal_part.iter().chain(d.complement_part.iter()));
                assert_eq!(rebuilt, h);
            }
            let whole = SubgroupSet::full(order);
            let d = schur_zassenhaus_decompose(&g, &a, &b, &whole).unwrap();
            assert_eq!((d.normal_part, d.witness, d.complement_part), (a.clone(), 0, b.clone()));
        }
    }

    #[test]
    fn s3_involution_is_a_conjugate_complement() {
        let g = dihedral(6).unwrap();
        let a = closure(&g, [1]);
        let b = closure(&g, [3]);
        let h = closure(&g, [4]);
        let d = schur_zassenhaus_decompose(&g, &a, &b, &h).unwrap();
        assert_eq!(d.normal_part.size(), 1);
        assert_eq!(d.complement_part, h);
        assert_eq!(conjugate_subgroup(&g, &b, d.witness), h);
    }

    #[test]
    fn rejects_bad_input() {
        let g = dihedral(6).unwrap();
        let b = closure(&g, [3]);
        assert!(schur_zassenhaus_decompose(&g, &b, &closure(&g, [1]), &b).is_err());
    }

    #[test]
    fn bounds() {
        let b = coprime_count_bound(&cyclic(7).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert_eq!(b, BigUint::from(28u32));
        assert_eq!(coprime_count_bound(&cyclic(13).unwrap(), &cyclic(4).unwrap()).unwrap(), BigUint::from(78u32));
        assert_eq!(coprime_count_bound(&cyclic(9).unwrap(), &cyclic(1).unwrap()).unwrap(), BigUint::from(27u32));
        assert!(coprime_count_bound(&cyclic(4).unwrap(), &cyclic(2).unwrap()).is_err());
        assert!(all_subgroups(&dihedral(14).unwrap()).unwrap().len() <= 28);
    }
}
