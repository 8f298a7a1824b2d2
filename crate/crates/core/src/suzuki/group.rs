use std::collections::{HashMap, VecDeque};

use super::matrix::{normalize_projective, Matrix4, Vector4};
use super::pair::SylowPair;
use crate::field::{FieldElement, FieldParams};
use crate::group::{conjugate_subgroup, FiniteGroup, SubgroupSet};
use crate::{Error, Result};

/// `|Sz(8)| = 8²(8² + 1)(8 − 1)`.
pub const SZ8_ORDER: usize = 29120;

/// `Sz(q)` built by generator closure, with multiplication through its
/// doubly transitive action on `q² + 1` projective points.
///
/// The group law is `x ∘ y = M_y · M_x` on the printed matrices, so that
/// `S(a, b) ↦ (a, b)` is an isomorphism onto the pair group (the printed
/// matrices themselves compose in the opposite order). Points are acted on
/// from the right: `pt · g = M_g pt`.
///
/// Only the identity fixes three points, so the images of points 0, 1, 2
/// identify an element; a lookup table on those triples gives `O(1)`
/// multiplication.
pub struct SzGroup {
    field: FieldParams,
    matrices: Vec<Matrix4>,
    index: HashMap<u128, u32>,
    points: Vec<Vector4>,
    /// `perms[g·npts + i]` is the index of `pt_i · g`.
    perms: Vec<u16>,
    lookup: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
}

impl SzGroup {
    /// `Sz(8)`; larger fields are out of reach for a full table.
    pub fn build(m: u32) -> Result<Self> {
        if m != 3 {
            return Err(Error::InvalidArgument(format!("the full group is only built at m = 3, got m = {m}")));
        }
        Self::build_capped(m, SZ8_ORDER)
    }

    /// Closure with an explicit element budget; exceeding it is an error.
    pub fn build_capped(m: u32, cap: usize) -> Result<Self> {
        let f = FieldParams::new(m)?;
        let q = f.order() as usize;
        let expected = q * q * (q * q + 1) * (q - 1);
        let gen_mats = Self::generator_matrices(&f)?;

        let mut matrices = vec![Matrix4::identity()];
        let mut index = HashMap::new();
        index.insert(Matrix4::identity().key(m), 0u32);
        let mut i = 0;
        while i < matrices.len() {
            let x = matrices[i];
            for s in &gen_mats {
                let y = s.mul(&f, &x);
                let k = y.key(m);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    if matrices.len() >= cap {
                        return Err(Error::ClosureOverflow(cap));
                    }
                    e.insert(matrices.len() as u32);
                    matrices.push(y);
                }
            }
            i += 1;
        }
        if matrices.len() != expected {
            return Err(Error::Internal(format!("closure has {} elements, expected {expected}", matrices.len())));
        }

        let mut points: Vec<Vector4> = vec![[FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE]];
        let mut point_index: HashMap<Vector4, u16> = HashMap::new();
        point_index.insert(points[0], 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(p) = queue.pop_front() {
            for s in &gen_mats {
                let v = normalize_projective(&f, &s.apply(&f, &points[p]));
                if let std::collections::hash_map::Entry::Vacant(e) = point_index.entry(v) {
                    e.insert(points.len() as u16);
                    queue.push_back(points.len());
                    points.push(v);
                }
            }
        }
        let npts = points.len();
        if npts != q * q + 1 {
            return Err(Error::Internal(format!("point orbit has size {npts}, expected {}", q * q + 1)));
        }

        let mut perms = Vec::with_capacity(matrices.len() * npts);
        for g in &matrices {
            for p in &points {
                perms.push(point_index[&normalize_projective(&f, &g.apply(&f, p))]);
            }
        }
        let mut lookup = vec![u32::MAX; npts * npts * npts];
        for g in 0..matrices.len() {
            let p = &perms[g * npts..(g + 1) * npts];
            let slot = &mut lookup[(p[0] as usize * npts + p[1] as usize) * npts + p[2] as usize];
            if *slot != u32::MAX {
                return Err(Error::Internal("two elements agree on three points".into()));
            }
            *slot = g as u32;
        }
        let mut group = SzGroup {
            field: f,
            matrices,
            index,
            points,
            perms,
            lookup,
            inverse: Vec::new(),
            generators: Vec::new(),
        };
        group.inverse = (0..group.matrices.len())
            .map(|g| {
                let p = group.perm(g);
                let pre = |t: usize| p.iter().position(|&x| x as usize == t).expect("permutation");
                group.element_at_triple(pre(0), pre(1), pre(2)) as u32
            })
            .collect();
        group.generators = gen_mats
            .iter()
            .map(|s| group.element_of(s).expect("generator in closure"))
            .filter(|&g| g != 0)
            .collect();
        group.generators.dedup();
        Ok(group)
    }

    /// `S(e_i, 0)`, `S(0, e_i)` over the polynomial basis, `C(ω)` for the least
    /// primitive `ω`, and `T`, in that order.
    pub fn generator_matrices(f: &FieldParams) -> Result<Vec<Matrix4>> {
        let z = FieldElement::ZERO;
        let mut gens: Vec<Matrix4> = f.basis().map(|e| Matrix4::s(f, e, z)).collect();
        gens.extend(f.basis().map(|e| Matrix4::s(f, z, e)));
        gens.push(Matrix4::c(f, f.primitive_element())?);
        gens.push(Matrix4::t());
        Ok(gens)
    }

    pub fn field(&self) -> &FieldParams {
        &self.field
    }

    pub fn matrix(&self, g: usize) -> &Matrix4 {
        &self.matrices[g]
    }

    pub fn element_of(&self, m: &Matrix4) -> Option<usize> {
        self.index.get(&m.key(self.field.m())).map(|&i| i as usize)
    }

    pub fn points(&self) -> &[Vector4] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// Images of all points under `g`.
    pub fn perm(&self, g: usize) -> &[u16] {
        let n = self.points.len();
        &self.perms[g * n..(g + 1) * n]
    }

    fn element_at_triple(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.points.len();
        self.lookup[(a * n + b) * n + c] as usize
    }

    /// Index of `S(a, b)` for the pair with index `pidx` in [`SylowPair`].
    pub fn sylow_element(&self, pairs: &SylowPair, pidx: usize) -> usize {
        let x = pairs.pair(pidx);
        self.element_of(&Matrix4::s(&self.field, x.a, x.b)).expect("S(a,b) lies in the group")
    }

    /// `P = {S(a, b)}`.
    pub fn sylow(&self) -> SubgroupSet {
        let f = &self.field;
        SubgroupSet::from_indices(
            self.order(),
            f.elements().flat_map(|a| f.elements().map(move |b| (a, b))).map(|(a, b)| {
                self.element_of(&Matrix4::s(f, a, b)).expect("S(a,b) lies in the group")
            }),
        )
    }

    /// `C = {C(λ)}`.
    pub fn torus(&self) -> SubgroupSet {
        SubgroupSet::from_indices(
            self.order(),
            self.field
                .nonzero_elements()
                .map(|l| self.element_of(&Matrix4::c(&self.field, l).expect("nonzero")).expect("C(λ) lies in the group")),
        )
    }

    /// `Γ = P ∘ C` as a set.
    pub fn build_normalizer(&self) -> SubgroupSet {
        let c = self.torus().to_vec();
        SubgroupSet::from_indices(self.order(), self.sylow().iter().flat_map(|x| c.iter().map(move |&y| self.mul(x, y))))
    }

    /// The Sylow 2-subgroups, one per point: `P^g` for the first `g` (in
    /// index order) carrying point 0 to point `i`, which stabilises point `i`.
    pub fn sylow_subgroups(&self) -> Vec<SubgroupSet> {
        let p = self.sylow();
        let n = self.points.len();
        let mut carrier = vec![usize::MAX; n];
        let mut found = 0;
        for g in 0..self.order() {
            let t = self.perm(g)[0] as usize;
            if carrier[t] == usize::MAX {
                carrier[t] = g;
                found += 1;
                if found == n {
                    break;
                }
            }
        }
        carrier.iter().map(|&g| conjugate_subgroup(self, &p, g)).collect()
    }
}

impl FiniteGroup for SzGroup {
    fn order(&self) -> usize {
        self.matrices.len()
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.points.len();
        let pa = &self.perms[a * n..a * n + 3];
        let pb = &self.perms[b * n..(b + 1) * n];
        self.element_at_triple(pb[pa[0] as usize] as usize, pb[pa[1] as usize] as usize, pb[pa[2] as usize] as usize)
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    fn generators(&self) -> Vec<usize> {
        self.generators.clone()
    }
}
