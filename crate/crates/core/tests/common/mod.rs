//! Naive permutation-group oracles on plain vectors. Nothing here calls into
//! the library; tests compare library output against these.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type P = Vec<usize>;
pub type Set = BTreeSet<P>;

/// (a b)(x) = a(b(x)).
pub fn compose(a: &P, b: &P) -> P {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &P) -> P {
    let mut r = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x] = i;
    }
    r
}

pub fn identity(n: usize) -> P {
    (0..n).collect()
}

/// 0-based cycles to images.
pub fn cycles(n: usize, cs: &[&[usize]]) -> P {
    let mut p = identity(n);
    for c in cs {
        for i in 0..c.len() {
            p[c[i]] = c[(i + 1) % c.len()];
        }
    }
    p
}

/// Closure by repeated multiplication until nothing new appears.
pub fn closure(n: usize, gens: &[P]) -> Set {
    let mut set: Set = [identity(n)].into_iter().collect();
    loop {
        let mut new = Vec::new();
        for a in &set {
            for g in gens {
                let p = compose(a, g);
                if !set.contains(&p) {
                    new.push(p);
                }
            }
        }
        if new.is_empty() {
            return set;
        }
        set.extend(new);
    }
}

pub fn conj_set(g: &P, h: &Set) -> Set {
    let gi = inverse(g);
    h.iter().map(|x| compose(&compose(g, x), &gi)).collect()
}

/// #{g : g^-1 K g in H} / |H|, the number of cosets gH fixed by K.
pub fn mark(group: &Set, k: &Set, h: &Set) -> usize {
    let hits = group
        .iter()
        .filter(|g| conj_set(&inverse(g), k).is_subset(h))
        .count();
    assert_eq!(hits % h.len(), 0);
    hits / h.len()
}

/// Sizes of the double cosets HgK, sorted.
pub fn double_coset_sizes(group: &Set, h: &Set, k: &Set) -> Vec<usize> {
    let mut seen = Set::new();
    let mut sizes = Vec::new();
    for g in group {
        if seen.contains(g) {
            continue;
        }
        let mut dc = Set::new();
        for a in h {
            for b in k {
                dc.insert(compose(&compose(a, g), b));
            }
        }
        sizes.push(dc.len());
        seen.extend(dc);
    }
    sizes.sort();
    sizes
}

/// Smallest set of subgroups containing the seeds and closed under
/// conjugation and pairwise intersection.
pub fn close_collection(group: &Set, seeds: &[Set]) -> BTreeSet<Set> {
    let mut all: BTreeSet<Set> = seeds.iter().cloned().collect();
    all.insert(group.clone());
    loop {
        let mut next = all.clone();
        for h in &all {
            for g in group {
                next.insert(conj_set(g, h));
            }
            for k in &all {
                next.insert(h.intersection(k).cloned().collect());
            }
        }
        if next.len() == all.len() {
            return all;
        }
        all = next;
    }
}

/// Number of conjugacy classes among the members.
pub fn class_count(group: &Set, members: &BTreeSet<Set>) -> usize {
    let mut left = members.clone();
    let mut n = 0;
    while let Some(h) = left.iter().next().cloned() {
        for g in group {
            left.remove(&conj_set(g, &h));
        }
        n += 1;
    }
    n
}

/// Every subgroup, found by closing all subsets of size at most two.
pub fn all_subgroups(n: usize, group: &Set) -> BTreeSet<Set> {
    let elems: Vec<&P> = group.iter().collect();
    let mut out = BTreeSet::new();
    for a in &elems {
        for b in &elems {
            out.insert(closure(n, &[(*a).clone(), (*b).clone()]));
        }
    }
    let mut all = out.clone();
    for h in &out {
        for k in &out {
            let mut gens: Vec<P> = h.iter().cloned().collect();
            gens.extend(k.iter().cloned());
            all.insert(closure(n, &gens));
        }
    }
    all
}
