//! Element-explicit permutation groups and their subgroups.
//!
//! A [`PermGroup`] stores every element, sorted in the canonical
//! permutation order. Subgroups are sorted index lists into that element
//! table, so the index list doubles as the canonical key: comparing two
//! keys lexicographically compares the underlying element sequences.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::Limits;

/// Groups up to this order get a precomputed multiplication table.
const TABLE_MAX_ORDER: usize = 2048;

#[derive(Clone)]
struct GroupData {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    inverses: Vec<u32>,
    table: Option<Vec<u32>>,
    label: Option<String>,
}

/// A finite group of permutations, cheap to clone.
#[derive(Clone)]
pub struct PermGroup {
    data: Arc<GroupData>,
}

impl PermGroup {
    /// Closure of `gens` under composition, with the default element cap.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<PermGroup> {
        Self::generate_with_limit(degree, gens, Limits::default().max_elements)
    }

    pub fn generate_with_limit(degree: usize, gens: &[Perm], max_elements: usize) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= max_elements {
                        return Err(Error::ResourceLimit {
                            what: "group element",
                            limit: max_elements,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self::from_sorted(degree, gens.to_vec(), elements))
    }

    /// `elements` must be sorted, duplicate-free and closed.
    pub(crate) fn from_sorted(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> PermGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let n = elements.len();
        let find = |p: &Perm| elements.binary_search(p).expect("group not closed") as u32;
        let inverses = elements.iter().map(|g| find(&g.inverse())).collect();
        let table = (n <= TABLE_MAX_ORDER).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(find(&a.compose(b)));
                }
            }
            t
        });
        PermGroup {
            data: Arc::new(GroupData {
                degree,
                generators,
                elements,
                inverses,
                table,
                label: None,
            }),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> PermGroup {
        Arc::make_mut(&mut self.data).label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.data.label.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.data.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.data.elements
    }

    pub fn element(&self, index: u32) -> &Perm {
        &self.data.elements[index as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.data.elements.binary_search(p).ok().map(|i| i as u32)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    fn require(&self, p: &Perm) -> Result<u32> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        self.index_of(p).ok_or_else(|| Error::NotInGroup(p.to_string()))
    }

    /// Index of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.data.table {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => {
                let p = self.element(a).compose(self.element(b));
                self.index_of(&p).expect("group not closed")
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.data.inverses[a as usize]
    }

    #[inline]
    pub fn conj(&self, g: u32, h: u32) -> u32 {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.clone(), (0..self.order() as u32).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(self.clone(), vec![0])
    }

    pub(crate) fn check(&self, h: &Subgroup) -> Result<()> {
        if &h.group == self {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Closure of the given element indices.
    pub fn subgroup_from_indices(&self, gens: &[u32]) -> Subgroup {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut found = vec![0u32];
        let mut k = 0;
        while k < found.len() {
            let x = found[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    found.push(y);
                }
            }
            k += 1;
        }
        found.sort_unstable();
        Subgroup::from_sorted(self.clone(), found)
    }

    pub fn subgroup_from_generators(&self, gens: &[Perm]) -> Result<Subgroup> {
        let idx = gens.iter().map(|g| self.require(g)).collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_from_indices(&idx))
    }

    /// `g H g⁻¹` for an element index `g`.
    pub fn conjugate_by_index(&self, h: &Subgroup, g: u32) -> Subgroup {
        let mut elems: Vec<u32> = h.elems.iter().map(|&x| self.conj(g, x)).collect();
        elems.sort_unstable();
        Subgroup::from_sorted(self.clone(), elems)
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: &Perm) -> Result<Subgroup> {
        self.check(h)?;
        let gi = self.require(g)?;
        Ok(self.conjugate_by_index(h, gi))
    }

    pub fn intersect(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.check(h)?;
        self.check(k)?;
        Ok(h.intersect_unchecked(k))
    }

    /// Brute force over all of `G`.
    pub fn are_conjugate(&self, h: &Subgroup, k: &Subgroup) -> Result<bool> {
        self.check(h)?;
        self.check(k)?;
        if h.order() != k.order() {
            return Ok(false);
        }
        Ok((0..self.order() as u32).any(|g| self.conjugate_by_index(h, g) == *k))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check(h)?;
        let member = h.membership();
        let gens = h.small_generating_set();
        let elems = (0..self.order() as u32)
            .filter(|&g| gens.iter().all(|&x| member[self.conj(g, x) as usize]))
            .collect();
        Ok(Subgroup::from_sorted(self.clone(), elems))
    }

    /// Double cosets `H g K`, each represented by its smallest element, in
    /// increasing order of representative.
    pub fn double_cosets(&self, h: &Subgroup, k: &Subgroup) -> Result<Vec<DoubleCoset>> {
        self.check(h)?;
        self.check(k)?;
        let n = self.order();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n as u32 {
            if visited[g as usize] {
                continue;
            }
            let mut size = 0;
            for &x in h.indices() {
                let xg = self.mul(x, g);
                for &y in k.indices() {
                    let z = self.mul(xg, y) as usize;
                    if !visited[z] {
                        visited[z] = true;
                        size += 1;
                    }
                }
            }
            out.push(DoubleCoset {
                representative: g,
                size,
            });
        }
        Ok(out)
    }

    /// Every subgroup of a small group, sorted by order then key.
    ///
    /// Joins cyclic subgroups pairwise until nothing new appears. Meant
    /// for tests and exploration on groups of order at most `max_order`.
    pub fn subgroup_lattice(&self, max_order: usize) -> Result<Vec<Subgroup>> {
        if self.order() > max_order {
            return Err(Error::ResourceLimit {
                what: "subgroup lattice group order",
                limit: max_order,
            });
        }
        let mut all: HashSet<Subgroup> = (0..self.order() as u32)
            .map(|g| self.subgroup_from_indices(&[g]))
            .collect();
        let cyclic: Vec<Subgroup> = all.iter().cloned().collect();
        let mut frontier: Vec<Subgroup> = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for c in &cyclic {
                    let mut gens = a.small_generating_set();
                    gens.extend(c.small_generating_set());
                    let j = self.subgroup_from_indices(&gens);
                    if all.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut v: Vec<Subgroup> = all.into_iter().collect();
        v.sort();
        Ok(v)
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.degree == other.data.degree && self.data.elements == other.data.elements)
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("label", &self.data.label)
            .field("degree", &self.degree())
            .field("order", &self.order())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Element index of the smallest member.
    pub representative: u32,
    pub size: usize,
}

/// A subgroup of a [`PermGroup`], keyed by its sorted element indices.
#[derive(Clone)]
pub struct Subgroup {
    group: PermGroup,
    elems: Arc<[u32]>,
}

impl Subgroup {
    pub(crate) fn from_sorted(group: PermGroup, elems: Vec<u32>) -> Subgroup {
        Subgroup {
            group,
            elems: elems.into(),
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    /// Canonical key: sorted element indices into the parent.
    pub fn indices(&self) -> &[u32] {
        &self.elems
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> + '_ {
        self.elems.iter().map(|&i| self.group.element(i))
    }

    pub fn contains_index(&self, g: u32) -> bool {
        self.elems.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elems.iter().all(|&g| other.contains_index(g))
    }

    pub(crate) fn membership(&self) -> Vec<bool> {
        let mut m = vec![false; self.group.order()];
        for &g in self.elems.iter() {
            m[g as usize] = true;
        }
        m
    }

    pub(crate) fn intersect_unchecked(&self, other: &Subgroup) -> Subgroup {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elems = small.elems.iter().copied().filter(|&g| big.contains_index(g)).collect();
        Subgroup::from_sorted(self.group.clone(), elems)
    }

    /// Greedy generating set: walk elements in canonical order, keeping
    /// each one not already generated by those kept so far.
    pub fn small_generating_set(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut current = self.group.subgroup_from_indices(&[]);
        for &g in self.elems.iter() {
            if current.order() == self.order() {
                break;
            }
            if !current.contains_index(g) {
                gens.push(g);
                current = self.group.subgroup_from_indices(&gens);
            }
        }
        gens
    }

    pub fn generators(&self) -> Vec<Perm> {
        self.small_generating_set()
            .into_iter()
            .map(|g| self.group.element(g).clone())
            .collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems && self.group == other.group
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

/// Orders by subgroup order, then canonical key.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elems.cmp(&other.elems))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.generators())
    }
}

/// An external direct product `G_1 × … × G_ℓ` acting on the disjoint
/// union of the factors' point sets.
///
/// Element indices are mixed-radix numbers with the first factor most
/// significant, which coincides with the canonical order of the product
/// permutations.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    group: PermGroup,
    factors: Vec<PermGroup>,
    offsets: Vec<usize>,
}

impl DirectProduct {
    pub fn new(factors: &[PermGroup], max_elements: usize) -> Result<DirectProduct> {
        if factors.is_empty() {
            return Err(Error::Internal("direct product of zero factors".into()));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
            .filter(|&n| n <= max_elements)
            .ok_or(Error::ResourceLimit {
                what: "group element",
                limit: max_elements,
            })?;
        let degree: usize = factors.iter().map(PermGroup::degree).sum();
        let mut offsets = Vec::with_capacity(factors.len());
        let mut acc = 0;
        for g in factors {
            offsets.push(acc);
            acc += g.degree();
        }
        let mut elements = Vec::with_capacity(order);
        let mut digits = vec![0usize; factors.len()];
        for _ in 0..order {
            let mut images = Vec::with_capacity(degree);
            for (j, g) in factors.iter().enumerate() {
                let off = offsets[j];
                images.extend(g.element(digits[j] as u32).images().iter().map(|&p| p as usize + off));
            }
            elements.push(Perm::from_images(images).expect("product of permutations"));
            for j in (0..factors.len()).rev() {
                digits[j] += 1;
                if digits[j] < factors[j].order() {
                    break;
                }
                digits[j] = 0;
            }
        }
        let generators = factors
            .iter()
            .zip(&offsets)
            .flat_map(|(g, &off)| g.generators().iter().map(move |s| s.shifted(off, degree)))
            .collect();
        let label = factors
            .iter()
            .map(|g| g.label().unwrap_or("G").to_string())
            .collect::<Vec<_>>()
            .join(" x ");
        let group = PermGroup::from_sorted(degree, generators, elements).with_label(label);
        Ok(DirectProduct {
            group,
            factors: factors.to_vec(),
            offsets,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn factors(&self) -> &[PermGroup] {
        &self.factors
    }

    /// First point of factor `j` in the product's point set.
    pub fn offset(&self, j: usize) -> usize {
        self.offsets[j]
    }

    /// Product element index of the tuple `(g_1, …, g_ℓ)`.
    pub fn combine(&self, parts: &[u32]) -> u32 {
        debug_assert_eq!(parts.len(), self.factors.len());
        parts
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&p, g)| acc * g.order() + p as usize) as u32
    }

    pub fn split(&self, index: u32) -> Vec<u32> {
        let mut rest = index as usize;
        let mut parts = vec![0u32; self.factors.len()];
        for j in (0..self.factors.len()).rev() {
            let n = self.factors[j].order();
            parts[j] = (rest % n) as u32;
            rest /= n;
        }
        parts
    }

    /// Image of a factor element under the `j`-th injection.
    pub fn inject(&self, j: usize, g: u32) -> u32 {
        let mut parts = vec![0u32; self.factors.len()];
        parts[j] = g;
        self.combine(&parts)
    }

    /// `H_1 × … × H_ℓ` as a subgroup of the product.
    pub fn product_subgroup(&self, parts: &[&Subgroup]) -> Result<Subgroup> {
        if parts.len() != self.factors.len() {
            return Err(Error::Internal("wrong number of factor subgroups".into()));
        }
        for (h, g) in parts.iter().zip(&self.factors) {
            g.check(h)?;
        }
        let mut elems = vec![0u32];
        for (j, h) in parts.iter().enumerate() {
            let n = self.factors[j].order() as u32;
            elems = elems
                .iter()
                .flat_map(|&acc| h.indices().iter().map(move |&x| acc * n + x))
                .collect();
        }
        // mixed-radix expansion of sorted digit lists is already sorted
        Ok(Subgroup::from_sorted(self.group.clone(), elems))
    }
}

pub fn direct_product(g1: &PermGroup, g2: &PermGroup) -> Result<DirectProduct> {
    DirectProduct::new(&[g1.clone(), g2.clone()], Limits::default().max_elements)
}
