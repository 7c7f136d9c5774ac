//! Partial Burnside rings of finite permutation groups.
//!
//! Starting from an element-explicit [`PermGroup`] and a [`Collection`] of
//! subgroups closed under conjugation and intersection, this crate builds
//! the ring `B(G, D)` spanned by the coset sets `[G/H]`, its table of
//! marks, and its unit group. The [`coxeter`] module supplies finite
//! Coxeter groups of types A, B, D and I2(m) with their parabolic
//! collections, and [`product`] relates the ring of a direct product to
//! the rings of its factors.

pub mod collection;
pub mod coxeter;
pub mod error;
pub mod group;
pub mod input;
pub mod perm;
pub mod product;
pub mod report;
pub mod ring;
pub mod units;

pub mod cli;

pub use collection::Collection;
pub use coxeter::{CoxeterSystem, CoxeterType};
pub use error::{Error, Result};
pub use group::{direct_product, DirectProduct, PermGroup, Subgroup};
pub use perm::Perm;
pub use product::ProductContext;
pub use report::{Report, Status};
pub use ring::{MarkMatrix, PbrElement};
pub use units::UnitGroup;

/// Size limits guarding the brute-force algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order that will be enumerated.
    pub max_elements: usize,
    /// Largest number of subgroups in a collection.
    pub max_members: usize,
    /// Largest number of conjugacy classes for unit-group enumeration.
    pub max_classes: usize,
    /// Largest number of direct factors in a product context.
    pub max_factors: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1_000_000,
            max_members: 100_000,
            max_classes: 24,
            max_factors: 4,
        }
    }
}
