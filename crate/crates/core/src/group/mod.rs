//! Generic finite-group machinery over indexed elements.
//!
//! Groups are addressed through the [`FiniteGroup`] oracle; element `0` is
//! always the identity. Subgroups are bit vectors over element indices
//! ([`SubgroupSet`]).

mod coprime;
mod families;
mod lattice;
mod permute;
mod subgroup;
mod table;

pub use coprime::{coprime_count_bound, schur_zassenhaus_decompose, Decomposition};
pub use families::*;
pub use lattice::{
    all_subgroups, closure, conjugate_subgroup, extend_capped, generating_set, greedy_generators, is_normal,
    normalizer, subgroup_classes, SubgroupClass, LATTICE_ORDER_CAP,
};
pub use permute::{per_count, permutability_degree, permutes, permutes_by_join, ClassPer, PermutabilityReport};
pub use subgroup::SubgroupSet;
pub use table::{GroupTable, DENSE_ORDER_CAP};

/// Multiplication and inversion oracle on `0..order()`, identity at index 0.
pub trait FiniteGroup: Sync {
    fn order(&self) -> usize;

    fn mul(&self, a: usize, b: usize) -> usize;

    fn inv(&self, a: usize) -> usize;

    /// `g⁻¹ x g`.
    fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Some generating set of the whole group.
    fn generators(&self) -> Vec<usize> {
        greedy_generators(self, 0..self.order())
    }

    fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
}
