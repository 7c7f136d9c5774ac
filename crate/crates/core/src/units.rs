//! Unit groups of partial Burnside rings.
//!
//! An element is a unit exactly when each of its marks is ±1, so the unit
//! group embeds in `{±1}^m` through its sign vector. We enumerate the
//! sign vectors whose preimage under the table of marks is integral.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::ring::PbrElement;
use crate::Limits;

/// Sign vector packed as bits: bit `i` set means the mark at class `i` is −1.
pub type SignMask = u64;

const MAX_MASK_BITS: usize = 63;

#[derive(Debug, Clone)]
pub struct UnitGroup {
    collection: Collection,
    units: Vec<PbrElement>,
    masks: Vec<SignMask>,
    generators: Vec<PbrElement>,
}

impl UnitGroup {
    /// All units of `B(G, D)`, ordered lexicographically by sign vector
    /// with `+1 < −1` and the first class most significant.
    pub fn compute(c: &Collection, limits: &Limits) -> Result<UnitGroup> {
        let m = check_class_cap(c, limits)?;
        let table = c.mark_matrix();
        let mut found: Vec<(SignMask, Vec<BigInt>)> = Vec::new();
        let mut coeffs = vec![BigInt::zero(); m];
        // depth-first from the last column: c_j depends only on v_j..v_{m-1}
        fn descend(
            j: usize,
            mask: SignMask,
            coeffs: &mut [BigInt],
            table: &crate::ring::MarkMatrix,
            found: &mut Vec<(SignMask, Vec<BigInt>)>,
        ) {
            for minus in [false, true] {
                let mut acc = if minus { -BigInt::one() } else { BigInt::one() };
                for (i, ci) in coeffs.iter().enumerate().skip(j + 1) {
                    acc -= ci * table.get(i, j);
                }
                let (q, r) = acc.div_rem(table.get(j, j));
                if !r.is_zero() {
                    continue;
                }
                coeffs[j] = q;
                let mask = if minus { mask | (1 << j) } else { mask };
                if j == 0 {
                    found.push((mask, coeffs.to_vec()));
                } else {
                    descend(j - 1, mask, coeffs, table, found);
                }
            }
            coeffs[j] = BigInt::zero();
        }
        descend(m - 1, 0, &mut coeffs, table, &mut found);
        found.sort_by_key(|(mask, _)| lex_key(*mask, m));
        let (masks, units): (Vec<_>, Vec<_>) = found
            .into_iter()
            .map(|(mask, co)| (mask, PbrElement::from_coeffs(c, co).expect("length m")))
            .unzip();
        Ok(Self::assemble(c, units, masks))
    }

    fn assemble(c: &Collection, units: Vec<PbrElement>, masks: Vec<SignMask>) -> UnitGroup {
        let m = c.class_count();
        let minus_one: SignMask = (1 << m) - 1;
        let mut basis = XorBasis::default();
        let mut generators = Vec::new();
        if let Some(pos) = masks.iter().position(|&x| x == minus_one) {
            basis.insert(minus_one);
            generators.push(units[pos].clone());
        }
        for (u, &mask) in units.iter().zip(&masks) {
            if basis.insert(mask) {
                generators.push(u.clone());
            }
        }
        UnitGroup {
            collection: c.clone(),
            units,
            masks,
            generators,
        }
    }

    pub fn collection(&self) -> &Collection {
        &self.collection
    }

    pub fn order(&self) -> usize {
        self.units.len()
    }

    /// `r` in `|B(G,D)^×| = 2^{r+1}`: the number of generators besides −1.
    pub fn rank(&self) -> usize {
        self.generators.len().saturating_sub(1)
    }

    pub fn units(&self) -> &[PbrElement] {
        &self.units
    }

    pub fn sign_masks(&self) -> &[SignMask] {
        &self.masks
    }

    /// Canonical generating set, beginning with −1.
    pub fn generators(&self) -> &[PbrElement] {
        &self.generators
    }

    pub fn contains(&self, x: &PbrElement) -> bool {
        self.units.contains(x)
    }

    /// Checks `u² = 1` for every unit and closure under multiplication.
    pub fn verify_elementary_abelian(&self) -> bool {
        let set: HashSet<Vec<BigInt>> = self.units.iter().map(|u| u.coeffs().to_vec()).collect();
        if !self.order().is_power_of_two() || set.len() != self.order() {
            return false;
        }
        self.units.iter().all(|u| {
            u.multiply(u).map(|s| s.is_one()).unwrap_or(false)
                && self.units.iter().all(|v| {
                    u.multiply(v)
                        .map(|w| set.contains(w.coeffs()))
                        .unwrap_or(false)
                })
        })
    }
}

fn check_class_cap(c: &Collection, limits: &Limits) -> Result<usize> {
    let m = c.class_count();
    if m > limits.max_classes.min(MAX_MASK_BITS) {
        return Err(Error::ResourceLimit {
            what: "class count for unit enumeration",
            limit: limits.max_classes.min(MAX_MASK_BITS),
        });
    }
    Ok(m)
}

/// Sort key realizing lexicographic order on sign vectors.
fn lex_key(mask: SignMask, m: usize) -> SignMask {
    (0..m).fold(0, |acc, i| (acc << 1) | ((mask >> i) & 1))
}

/// Sign vector of a unit, or `None` when some mark is not ±1.
pub fn sign_mask(u: &PbrElement) -> Option<SignMask> {
    let mut mask = 0;
    for (i, v) in u.marks().iter().enumerate() {
        if *v == -BigInt::one() {
            mask |= 1 << i;
        } else if !v.is_one() {
            return None;
        }
    }
    Some(mask)
}

/// Units found by solving for every one of the `2^m` sign vectors, in the
/// same order as [`UnitGroup::compute`]. Slower; kept as a cross-check.
pub fn units_by_full_scan(c: &Collection, limits: &Limits) -> Result<Vec<PbrElement>> {
    let m = check_class_cap(c, limits)?;
    let mut out = Vec::new();
    for key in 0..(1u64 << m) {
        // key's top bit corresponds to class 0
        let ghost: Vec<BigInt> = (0..m)
            .map(|i| {
                if (key >> (m - 1 - i)) & 1 == 1 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            })
            .collect();
        if let Some(u) = PbrElement::from_marks(c, &ghost) {
            out.push(u);
        }
    }
    Ok(out)
}

/// Subgroup of the units generated by `gens`, closed by repeated ring
/// multiplication and ordered like [`UnitGroup::units`].
pub fn generated_subgroup(c: &Collection, gens: &[PbrElement]) -> Result<Vec<PbrElement>> {
    let m = c.class_count();
    let mut found: BTreeMap<SignMask, PbrElement> = BTreeMap::new();
    let one = PbrElement::one(c);
    found.insert(lex_key(0, m), one.clone());
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.multiply(g)?;
            let mask = sign_mask(&y).ok_or(Error::NonUnit)?;
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(lex_key(mask, m)) {
                e.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Incremental basis of a subspace of `(Z/2)^64`.
#[derive(Default)]
struct XorBasis {
    /// Keyed by leading bit.
    rows: BTreeMap<u32, SignMask>,
}

impl XorBasis {
    /// Adds `v` and returns whether it was independent.
    fn insert(&mut self, mut v: SignMask) -> bool {
        while v != 0 {
            let lead = 63 - v.leading_zeros();
            match self.rows.get(&lead) {
                Some(&r) => v ^= r,
                None => {
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection::fixtures::*;

    #[test]
    fn s3_parabolic_units() {
        let c = s3_parabolic();
        let u = UnitGroup::compute(&c, &Limits::default()).unwrap();
        assert_eq!(u.order(), 4);
        assert_eq!(u.rank(), 1);
        assert!(u.generators()[0] == -&PbrElement::one(&c));
        let eps = PbrElement::from_ints(&c, &[1, -2, 1]).unwrap();
        assert!(u.contains(&eps));
        assert!(u.contains(&-&eps));
        assert!(u.verify_elementary_abelian());
        // lexicographic: (+,+,+) first
        assert!(u.units()[0].is_one());
    }

    #[test]
    fn whole_group_only() {
        let c = Collection::close(&s3(), &[], &Limits::default()).unwrap();
        let u = UnitGroup::compute(&c, &Limits::default()).unwrap();
        assert_eq!(u.order(), 2);
        assert_eq!(u.rank(), 0);
        assert!(u.verify_elementary_abelian());
    }

    #[test]
    fn klein_parabolic_units() {
        let u = UnitGroup::compute(&klein_parabolic(), &Limits::default()).unwrap();
        assert_eq!(u.order(), 8);
        assert_eq!(u.generators().len(), 3);
    }

    #[test]
    fn pruned_search_matches_full_scan() {
        for c in [s3_parabolic(), klein_parabolic(), c2_full()] {
            let u = UnitGroup::compute(&c, &Limits::default()).unwrap();
            assert_eq!(u.units(), units_by_full_scan(&c, &Limits::default()).unwrap().as_slice());
            assert_eq!(generated_subgroup(&c, u.generators()).unwrap(), u.units());
        }
    }

    #[test]
    fn class_cap() {
        let limits = Limits {
            max_classes: 2,
            ..Limits::default()
        };
        assert!(matches!(
            UnitGroup::compute(&s3_parabolic(), &limits),
            Err(Error::ResourceLimit { limit: 2, .. })
        ));
    }

    #[test]
    fn xor_basis_detects_dependence() {
        let mut b = XorBasis::default();
        assert!(b.insert(0b111));
        assert!(b.insert(0b101));
        assert!(!b.insert(0b010));
        assert!(!b.insert(0));
    }

    #[test]
    fn lex_key_orders_first_class_most_significant() {
        assert!(lex_key(0b001, 3) > lex_key(0b110, 3));
    }
}
