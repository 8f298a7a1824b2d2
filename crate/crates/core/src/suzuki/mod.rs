//! The Suzuki groups `Sz(q)`, `q = 2^m` with `m` odd.
//!
//! The Sylow 2-subgroup `P` and its normaliser `Γ = P ⋊ C` are available in
//! pair form for every supported `m`; the whole group is built from its
//! matrix generators at `m = 3` only.

mod group;
mod matrix;
mod pair;
mod structure;

pub use group::{SzGroup, SZ8_ORDER};
pub use matrix::Matrix4;
pub use pair::{c_act, p_commutator, p_inv, p_mul, GammaPair, PPair, SylowPair};
pub use structure::verify_special_structure;
