//! The partial Burnside ring `B(G, D)`.
//!
//! Elements are integer combinations of the coset sets `[G/H_i]`, one
//! coefficient per class of the collection. Multiplication has two
//! independent routes:
//!
//! * the ghost route (default): map both factors to their mark vectors,
//!   multiply componentwise, and solve back through the triangular table
//!   of marks;
//! * the double-coset route: expand bilinearly using
//!   `[G/H]·[G/K] = Σ_{HgK} [G/(H ∩ gKg⁻¹)]`.
//!
//! [`set_cross_check`] makes every ghost-route product also run the
//! double-coset route and fail on disagreement.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};

static CROSS_CHECK: AtomicBool = AtomicBool::new(false);

/// Enables checking every [`PbrElement::multiply`] against the
/// double-coset route.
pub fn set_cross_check(enabled: bool) {
    CROSS_CHECK.store(enabled, Ordering::Relaxed);
}

pub fn cross_check_enabled() -> bool {
    CROSS_CHECK.load(Ordering::Relaxed)
}

/// Number of cosets `gH` fixed by every element of `K`, i.e. the mark of
/// `K` on the transitive `G`-set `G/H`.
pub fn mark(group: &PermGroup, k: &Subgroup, h: &Subgroup) -> Result<usize> {
    group.check(k)?;
    group.check(h)?;
    Ok(mark_unchecked(group, k, h))
}

fn mark_unchecked(group: &PermGroup, k: &Subgroup, h: &Subgroup) -> usize {
    if k.order() > h.order() || h.order() % k.order() != 0 {
        return 0;
    }
    let in_h = h.membership();
    let k_gens = k.small_generating_set();
    let mut visited = vec![false; group.order()];
    let mut fixed = 0;
    for g in 0..group.order() as u32 {
        if visited[g as usize] {
            continue;
        }
        for &x in h.indices() {
            visited[group.mul(g, x) as usize] = true;
        }
        // k·gH = gH  ⇔  g⁻¹kg ∈ H
        let gi = group.inv(g);
        if k_gens.iter().all(|&y| in_h[group.conj(gi, y) as usize]) {
            fixed += 1;
        }
    }
    fixed
}

/// Table of marks over the ordered classes of a collection: entry
/// `(i, j)` is the number of points of `G/H_i` fixed by `K_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct MarkMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl MarkMatrix {
    pub(crate) fn compute(c: &Collection) -> MarkMatrix {
        let g = c.group();
        let reps: Vec<&Subgroup> = c.classes().iter().map(|k| &k.representative).collect();
        let entries = reps
            .par_iter()
            .map(|h| reps.iter().map(|k| BigInt::from(mark_unchecked(g, k, h))).collect())
            .collect();
        MarkMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row[i + 1..].iter().all(Zero::is_zero))
    }

    pub fn determinant_of_triangle(&self) -> BigInt {
        (0..self.size()).map(|i| self.entries[i][i].clone()).product()
    }
}

impl fmt::Debug for MarkMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// An element of `B(G, D)`.
#[derive(Clone)]
pub struct PbrElement {
    collection: Collection,
    coeffs: Vec<BigInt>,
}

impl PbrElement {
    pub fn from_coeffs(collection: &Collection, coeffs: Vec<BigInt>) -> Result<PbrElement> {
        if coeffs.len() != collection.class_count() {
            return Err(Error::IndexOutOfRange {
                what: "coefficient vector length",
                index: coeffs.len(),
                len: collection.class_count(),
            });
        }
        Ok(PbrElement {
            collection: collection.clone(),
            coeffs,
        })
    }

    pub fn from_ints(collection: &Collection, coeffs: &[i64]) -> Result<PbrElement> {
        Self::from_coeffs(collection, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(collection: &Collection) -> PbrElement {
        PbrElement {
            collection: collection.clone(),
            coeffs: vec![BigInt::zero(); collection.class_count()],
        }
    }

    /// `[G/H_i]`.
    pub fn basis(collection: &Collection, i: usize) -> Result<PbrElement> {
        let m = collection.class_count();
        if i >= m {
            return Err(Error::IndexOutOfRange {
                what: "class",
                index: i,
                len: m,
            });
        }
        let mut x = Self::zero(collection);
        x.coeffs[i] = BigInt::one();
        Ok(x)
    }

    /// `[G/G]`, the one-point set.
    pub fn one(collection: &Collection) -> PbrElement {
        Self::basis(collection, collection.top_class()).expect("collection has a top class")
    }

    pub fn collection(&self) -> &Collection {
        &self.collection
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.collection)
    }

    fn same_ring(&self, other: &PbrElement) -> Result<()> {
        if self.collection.same_as(&other.collection) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Ghost coordinates: the mark of each class representative on `self`.
    pub fn marks(&self) -> Vec<BigInt> {
        let table = self.collection.mark_matrix();
        let m = table.size();
        let mut out = vec![BigInt::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // lower-triangular: row i vanishes past column i
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                *slot += c * table.get(i, j);
            }
        }
        out
    }

    /// Inverts [`PbrElement::marks`]: the unique rational preimage of
    /// `ghost`, returned only when it is integral.
    pub fn from_marks(collection: &Collection, ghost: &[BigInt]) -> Option<PbrElement> {
        let table = collection.mark_matrix();
        let m = table.size();
        if ghost.len() != m {
            return None;
        }
        // Σ_i c_i M[i][j] = v_j with M[i][j] = 0 for j > i: solve from the last column down.
        let mut sol: Vec<BigRational> = vec![BigRational::zero(); m];
        for j in (0..m).rev() {
            let mut acc = BigRational::from_integer(ghost[j].clone());
            for (i, s) in sol.iter().enumerate().skip(j + 1) {
                acc -= s * BigRational::from_integer(table.get(i, j).clone());
            }
            sol[j] = acc / BigRational::from_integer(table.get(j, j).clone());
        }
        if !sol.iter().all(|q| q.is_integer()) {
            return None;
        }
        Some(PbrElement {
            collection: collection.clone(),
            coeffs: sol.into_iter().map(|q| q.to_integer()).collect(),
        })
    }

    /// Product through the ghost ring.
    pub fn multiply(&self, other: &PbrElement) -> Result<PbrElement> {
        self.same_ring(other)?;
        let ghost: Vec<BigInt> = self
            .marks()
            .iter()
            .zip(other.marks())
            .map(|(a, b)| a * b)
            .collect();
        let product = Self::from_marks(&self.collection, &ghost).ok_or_else(|| {
            Error::Internal("product of ghost vectors has no integral preimage".into())
        })?;
        if cross_check_enabled() {
            let oracle = self.multiply_via_double_cosets(other)?;
            if oracle != product {
                return Err(Error::Internal(format!(
                    "multiplication routes disagree: {product:?} vs {oracle:?}"
                )));
            }
        }
        Ok(product)
    }

    /// Product by bilinear expansion over basis double-coset products.
    pub fn multiply_via_double_cosets(&self, other: &PbrElement) -> Result<PbrElement> {
        self.same_ring(other)?;
        let mut out = Self::zero(&self.collection);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let basis = multiply_basis_double_coset(&self.collection, i, j)?;
                for (slot, c) in out.coeffs.iter_mut().zip(basis.coeffs) {
                    *slot += &ab * c;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Result<PbrElement> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.collection);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            base = base.multiply(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Units of `B(G, D)` are exactly the elements whose marks are all ±1.
    pub fn is_unit(&self) -> bool {
        self.marks().iter().all(|v| v.abs().is_one())
    }
}

/// `[G/H_i]·[G/H_j]` summed over double cosets `H_i g H_j`.
pub fn multiply_basis_double_coset(c: &Collection, i: usize, j: usize) -> Result<PbrElement> {
    let g = c.group();
    let h = &c.classes().get(i).ok_or(Error::IndexOutOfRange {
        what: "class",
        index: i,
        len: c.class_count(),
    })?.representative;
    let k = &c.classes().get(j).ok_or(Error::IndexOutOfRange {
        what: "class",
        index: j,
        len: c.class_count(),
    })?.representative;
    let mut out = PbrElement::zero(c);
    for dc in g.double_cosets(h, k)? {
        let meet = h.intersect_unchecked(&g.conjugate_by_index(k, dc.representative));
        let idx = c.class_index(&meet).map_err(|_| {
            Error::Internal(format!(
                "intersection of order {} falls outside the collection",
                meet.order()
            ))
        })?;
        out.coeffs[idx] += 1;
    }
    Ok(out)
}

impl PartialEq for PbrElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.collection.same_as(&other.collection)
    }
}

impl Eq for PbrElement {}

impl fmt::Debug for PbrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coeffs.iter().map(|x| x.to_string()).collect();
        write!(f, "PbrElement({})", cells.join(", "))
    }
}

/// Linear combination of `[G/H]` labels, e.g. `[6:0] - 2[2:1] + [6:2]`.
impl fmt::Display for PbrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.collection.class_label(i);
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "[{label}]")?;
            } else {
                write!(f, "{mag}[{label}]")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn zip_coeffs(a: &PbrElement, b: &PbrElement, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> PbrElement {
    assert!(a.collection.same_as(&b.collection), "elements of different rings");
    PbrElement {
        collection: a.collection.clone(),
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| op(x, y)).collect(),
    }
}

impl Add for &PbrElement {
    type Output = PbrElement;
    fn add(self, rhs: &PbrElement) -> PbrElement {
        zip_coeffs(self, rhs, |x, y| x + y)
    }
}

impl Sub for &PbrElement {
    type Output = PbrElement;
    fn sub(self, rhs: &PbrElement) -> PbrElement {
        zip_coeffs(self, rhs, |x, y| x - y)
    }
}

impl Neg for &PbrElement {
    type Output = PbrElement;
    fn neg(self) -> PbrElement {
        PbrElement {
            collection: self.collection.clone(),
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}
