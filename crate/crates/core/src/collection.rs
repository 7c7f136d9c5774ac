//! Collections of subgroups: families containing the whole group and
//! closed under conjugation and pairwise intersection.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{DirectProduct, PermGroup, Subgroup};
use crate::ring::MarkMatrix;
use crate::Limits;

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// Canonically smallest member of the class.
    pub representative: Subgroup,
    /// Positions in [`Collection::members`].
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

struct CollectionData {
    group: PermGroup,
    members: Vec<Subgroup>,
    member_index: HashMap<Subgroup, usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    marks: OnceLock<MarkMatrix>,
}

/// A collection `D` together with its ordered conjugacy classes `D^c`.
///
/// Classes are ordered by the order of their representative, then by its
/// canonical key; this makes the table of marks lower-triangular. Cloning
/// is cheap and clones share the cached table of marks.
#[derive(Clone)]
pub struct Collection {
    data: Arc<CollectionData>,
}

impl Collection {
    /// Smallest collection containing `seeds` and the whole group.
    pub fn close(group: &PermGroup, seeds: &[Subgroup], limits: &Limits) -> Result<Collection> {
        for s in seeds {
            group.check(s)?;
        }
        let mut known: HashSet<Subgroup> = HashSet::new();
        let mut list: Vec<Subgroup> = Vec::new();
        let mut queue: VecDeque<Subgroup> = VecDeque::new();
        let mut add = |h: Subgroup, list: &mut Vec<Subgroup>, queue: &mut VecDeque<Subgroup>| -> Result<()> {
            if known.insert(h.clone()) {
                if known.len() > limits.max_members {
                    return Err(Error::ResourceLimit {
                        what: "collection member",
                        limit: limits.max_members,
                    });
                }
                list.push(h.clone());
                queue.push_back(h);
            }
            Ok(())
        };
        add(group.whole(), &mut list, &mut queue)?;
        for s in seeds {
            add(s.clone(), &mut list, &mut queue)?;
        }
        while let Some(h) = queue.pop_front() {
            for g in 0..group.order() as u32 {
                add(group.conjugate_by_index(&h, g), &mut list, &mut queue)?;
            }
            let existing = list.len();
            for k in 0..existing {
                let meet = h.intersect_unchecked(&list[k]);
                add(meet, &mut list, &mut queue)?;
            }
        }
        Collection::from_members(group, list)
    }

    /// Wraps a conjugation-closed family, computing its classes.
    ///
    /// Intersection closure is not re-checked here; see
    /// [`Collection::axiom_violations`].
    pub fn from_members(group: &PermGroup, mut members: Vec<Subgroup>) -> Result<Collection> {
        for m in &members {
            group.check(m)?;
        }
        members.sort();
        members.dedup();
        let member_index: HashMap<Subgroup, usize> =
            members.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        let mut class_of = vec![usize::MAX; members.len()];
        let mut classes = Vec::new();
        for (i, h) in members.iter().enumerate() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut orbit = Vec::new();
            for g in 0..group.order() as u32 {
                let conj = group.conjugate_by_index(h, g);
                let j = *member_index.get(&conj).ok_or_else(|| {
                    Error::Internal(format!(
                        "family is not closed under conjugation (member of order {})",
                        h.order()
                    ))
                })?;
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    orbit.push(j);
                }
            }
            orbit.sort_unstable();
            classes.push(ConjugacyClass {
                representative: h.clone(),
                members: orbit,
            });
        }
        Ok(Collection {
            data: Arc::new(CollectionData {
                group: group.clone(),
                members,
                member_index,
                classes,
                class_of,
                marks: OnceLock::new(),
            }),
        })
    }

    /// `{H_1 × … × H_ℓ}` inside `product`, plus the pairing from factor
    /// class tuples to product classes.
    ///
    /// Tuples are numbered mixed-radix with the first factor most
    /// significant. Fails if the pairing is not a bijection.
    pub fn product(factors: &[Collection], product: &DirectProduct, limits: &Limits) -> Result<(Collection, Vec<usize>)> {
        if factors.len() != product.factors().len() {
            return Err(Error::Internal("factor count does not match the product group".into()));
        }
        for (c, g) in factors.iter().zip(product.factors()) {
            if c.group() != g {
                return Err(Error::ParentMismatch);
            }
        }
        let total = factors
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.members().len()))
            .filter(|&n| n <= limits.max_members)
            .ok_or(Error::ResourceLimit {
                what: "collection member",
                limit: limits.max_members,
            })?;
        let mut members = Vec::with_capacity(total);
        for_each_tuple(factors.iter().map(|c| c.members().len()), |t| {
            let parts: Vec<&Subgroup> = t.iter().zip(factors).map(|(&i, c)| &c.members()[i]).collect();
            members.push(product.product_subgroup(&parts));
        });
        let members = members.into_iter().collect::<Result<Vec<_>>>()?;
        let coll = Collection::from_members(product.group(), members)?;

        let mut pairing = Vec::new();
        let mut hit = vec![false; coll.class_count()];
        let mut err = None;
        for_each_tuple(factors.iter().map(|c| c.class_count()), |t| {
            let parts: Vec<&Subgroup> = t
                .iter()
                .zip(factors)
                .map(|(&i, c)| &c.classes()[i].representative)
                .collect();
            let k = product
                .product_subgroup(&parts)
                .and_then(|h| coll.class_index(&h));
            match k {
                Ok(k) if !hit[k] => {
                    hit[k] = true;
                    pairing.push(k);
                }
                Ok(_) => {
                    err.get_or_insert(Error::Internal(
                        "product classes are not in bijection with factor class tuples".into(),
                    ));
                }
                Err(e) => {
                    err.get_or_insert(e);
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if pairing.len() != coll.class_count() {
            return Err(Error::Internal(format!(
                "{} product classes but {} factor class tuples",
                coll.class_count(),
                pairing.len()
            )));
        }
        Ok((coll, pairing))
    }

    pub fn group(&self) -> &PermGroup {
        &self.data.group
    }

    /// All members, sorted by order then canonical key.
    pub fn members(&self) -> &[Subgroup] {
        &self.data.members
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.data.classes
    }

    pub fn class_count(&self) -> usize {
        self.data.classes.len()
    }

    pub fn representative(&self, class: usize) -> &Subgroup {
        &self.data.classes[class].representative
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.data.member_index.contains_key(h)
    }

    pub fn class_index(&self, h: &Subgroup) -> Result<usize> {
        self.data
            .member_index
            .get(h)
            .filter(|_| h.group() == self.group())
            .map(|&i| self.data.class_of[i])
            .ok_or(Error::NotInCollection(h.order()))
    }

    /// Index of the class `{G}`, always the last one.
    pub fn top_class(&self) -> usize {
        self.class_count() - 1
    }

    /// Column label `order:index` used in tables.
    pub fn class_label(&self, class: usize) -> String {
        format!("{}:{}", self.representative(class).order(), class)
    }

    pub fn mark_matrix(&self) -> &MarkMatrix {
        self.data.marks.get_or_init(|| MarkMatrix::compute(self))
    }

    /// Checks the defining closure conditions member by member and
    /// returns a description of each violation found.
    pub fn axiom_violations(&self) -> Vec<String> {
        let g = self.group();
        let mut out = Vec::new();
        if !self.contains(&g.whole()) {
            out.push("whole group is not a member".to_string());
        }
        for (i, h) in self.members().iter().enumerate() {
            for k in &self.members()[i..] {
                if !self.contains(&h.intersect_unchecked(k)) {
                    out.push(format!(
                        "intersection of members of orders {} and {} is missing",
                        h.order(),
                        k.order()
                    ));
                }
            }
            for x in 0..g.order() as u32 {
                if !self.contains(&g.conjugate_by_index(h, x)) {
                    out.push(format!("conjugate of a member of order {} is missing", h.order()));
                    break;
                }
            }
        }
        out
    }

    pub(crate) fn same_as(&self, other: &Collection) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.group() == other.group() && self.members() == other.members())
    }
}

impl PartialEq for Collection {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Collection {}

impl fmt::Debug for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Collection")
            .field("group", self.group())
            .field("members", &self.members().len())
            .field("classes", &self.class_count())
            .finish()
    }
}

/// Visits every tuple in `0..r_1 × … × 0..r_ℓ`, last coordinate fastest.
pub(crate) fn for_each_tuple(radices: impl IntoIterator<Item = usize>, mut f: impl FnMut(&[usize])) {
    let radices: Vec<usize> = radices.into_iter().collect();
    if radices.iter().any(|&r| r == 0) {
        return;
    }
    let mut t = vec![0usize; radices.len()];
    loop {
        f(&t);
        let mut j = radices.len();
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            t[j] += 1;
            if t[j] < radices[j] {
                break;
            }
            t[j] = 0;
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::perm::Perm;

    pub fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    pub fn s3() -> PermGroup {
        PermGroup::generate(3, &[p(3, "(1 2)"), p(3, "(2 3)")]).unwrap()
    }

    pub fn klein() -> PermGroup {
        PermGroup::generate(4, &[p(4, "(1 2)"), p(4, "(3 4)")]).unwrap()
    }

    pub fn s3_parabolic() -> Collection {
        let g = s3();
        let h = g.subgroup_from_generators(&[p(3, "(1 2)")]).unwrap();
        Collection::close(&g, &[h], &Limits::default()).unwrap()
    }

    pub fn klein_parabolic() -> Collection {
        let g = klein();
        let a = g.subgroup_from_generators(&[p(4, "(1 2)")]).unwrap();
        let b = g.subgroup_from_generators(&[p(4, "(3 4)")]).unwrap();
        Collection::close(&g, &[a, b], &Limits::default()).unwrap()
    }

    pub fn c2_full() -> Collection {
        let g = PermGroup::generate(2, &[p(2, "(1 2)")]).unwrap();
        let t = g.trivial();
        Collection::close(&g, &[t], &Limits::default()).unwrap()
    }
}
