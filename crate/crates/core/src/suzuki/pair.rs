use crate::field::{FieldElement, FieldParams};
use crate::group::FiniteGroup;
use crate::{Error, Result};

/// An element `(a, b)` of `P ≅ (F_q², ∗)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PPair {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl PPair {
    pub const IDENTITY: PPair = PPair { a: FieldElement::ZERO, b: FieldElement::ZERO };

    pub fn new(a: FieldElement, b: FieldElement) -> Self {
        PPair { a, b }
    }

    pub fn is_central(self) -> bool {
        self.a.is_zero()
    }
}

/// `(a₁, b₁) ∗ (a₂, b₂) = (a₁ + a₂, b₁ + b₂ + a₁a₂^θ)`.
pub fn p_mul(f: &FieldParams, x: PPair, y: PPair) -> PPair {
    PPair { a: x.a + y.a, b: x.b + y.b + f.mul(x.a, f.theta(y.a)) }
}

/// `(a, b)⁻¹ = (a, b + a^(1+θ))`.
pub fn p_inv(f: &FieldParams, x: PPair) -> PPair {
    PPair { a: x.a, b: x.b + f.norm_like(x.a) }
}

/// `x y x⁻¹ y⁻¹`, which lies in the centre: `(0, a₁a₂^θ + a₂a₁^θ)`.
pub fn p_commutator(f: &FieldParams, x: PPair, y: PPair) -> PPair {
    let xy = p_mul(f, x, y);
    p_mul(f, p_mul(f, xy, p_inv(f, x)), p_inv(f, y))
}

/// `(a, b) ↦ (λa, λ^(1+θ) b)`, the action of `C(λ)` by conjugation.
pub fn c_act(f: &FieldParams, lambda: FieldElement, x: PPair) -> Result<PPair> {
    if lambda.is_zero() {
        return Err(Error::ZeroScalar);
    }
    Ok(PPair { a: f.mul(lambda, x.a), b: f.mul(f.norm_like(lambda), x.b) })
}

/// `P` as an indexed group: `(a, b)` has index `(a << m) | b`.
#[derive(Clone, Debug)]
pub struct SylowPair {
    field: FieldParams,
}

/// Largest `m` for which the pair groups are indexed.
const MAX_PAIR_DEGREE: u32 = 11;

impl SylowPair {
    pub fn new(m: u32) -> Result<Self> {
        if m > MAX_PAIR_DEGREE {
            return Err(Error::FieldDegree(m));
        }
        Ok(SylowPair { field: FieldParams::new(m)? })
    }

    pub fn field(&self) -> &FieldParams {
        &self.field
    }

    pub fn index(&self, x: PPair) -> usize {
        ((x.a.0 as usize) << self.field.m()) | x.b.0 as usize
    }

    pub fn pair(&self, i: usize) -> PPair {
        let m = self.field.m();
        PPair { a: FieldElement((i >> m) as u32), b: FieldElement((i & ((1 << m) - 1)) as u32) }
    }

    /// Indices of the centre `Z = {(0, b)}`.
    pub fn center_indices(&self) -> impl Iterator<Item = usize> {
        0..self.field.order() as usize
    }
}

impl FiniteGroup for SylowPair {
    fn order(&self) -> usize {
        1 << (2 * self.field.m())
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.index(p_mul(&self.field, self.pair(x), self.pair(y)))
    }

    fn inv(&self, x: usize) -> usize {
        self.index(p_inv(&self.field, self.pair(x)))
    }

    /// `(e_i, 0)` and `(0, e_i)` over the polynomial basis.
    fn generators(&self) -> Vec<usize> {
        let m = self.field.m();
        (0..m).map(|i| (1usize << i) << m).chain((0..m).map(|i| 1usize << i)).collect()
    }
}

/// `Γ = P ⋊ C` in pair form: `x·c_λ` with `λ = ω^k` has index
/// `index(x)·(q − 1) + k`, where `ω` is the least primitive element.
///
/// The multiplication is `(x c_λ)(y c_μ) = (x ∗ act_{λ⁻¹}(y)) c_{λμ}`, which
/// encodes `c_λ⁻¹ x c_λ = act_λ(x)`.
#[derive(Clone, Debug)]
pub struct GammaPair {
    p: SylowPair,
    /// `ω^k` for `k < q − 1`.
    powers: Vec<FieldElement>,
}

impl GammaPair {
    pub fn new(m: u32) -> Result<Self> {
        let p = SylowPair::new(m)?;
        let f = p.field();
        let w = f.primitive_element();
        let n = f.order() as usize - 1;
        let mut powers = Vec::with_capacity(n);
        let mut x = FieldElement::ONE;
        for _ in 0..n {
            powers.push(x);
            x = f.mul(x, w);
        }
        Ok(GammaPair { p, powers })
    }

    pub fn sylow(&self) -> &SylowPair {
        &self.p
    }

    fn torus_order(&self) -> usize {
        self.powers.len()
    }

    /// Index of `x ∈ P` inside `Γ`.
    pub fn embed_p(&self, pidx: usize) -> usize {
        pidx * self.torus_order()
    }

    /// Index of `c_{ω^k}`.
    pub fn torus_element(&self, k: usize) -> usize {
        k % self.torus_order()
    }

    fn split(&self, i: usize) -> (usize, usize) {
        (i / self.torus_order(), i % self.torus_order())
    }
}

impl FiniteGroup for GammaPair {
    fn order(&self) -> usize {
        self.p.order() * self.torus_order()
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let n = self.torus_order();
        let f = self.p.field();
        let (xp, k) = self.split(x);
        let (yp, l) = self.split(y);
        let lam_inv = self.powers[(n - k) % n];
        let moved = c_act(f, lam_inv, self.p.pair(yp)).expect("nonzero power");
        let prod = p_mul(f, self.p.pair(xp), moved);
        self.p.index(prod) * n + (k + l) % n
    }

    fn inv(&self, x: usize) -> usize {
        // (x c_λ)⁻¹ = c_λ⁻¹ x⁻¹ = act_λ(x⁻¹) c_λ⁻¹
        let n = self.torus_order();
        let f = self.p.field();
        let (xp, k) = self.split(x);
        let xi = p_inv(f, self.p.pair(xp));
        let moved = c_act(f, self.powers[k], xi).expect("nonzero power");
        self.p.index(moved) * n + (n - k) % n
    }

    fn generators(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.p.generators().into_iter().map(|x| self.embed_p(x)).collect();
        if self.torus_order() > 1 {
            g.push(self.torus_element(1));
        }
        g
    }
}
