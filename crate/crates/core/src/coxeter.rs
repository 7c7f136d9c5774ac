//! Finite Coxeter groups of types A, B, D and I2(m), realized as
//! permutation groups, and their parabolic subgroups.
//!
//! * `A_n`: the symmetric group on `n + 1` points, simple reflections the
//!   adjacent transpositions.
//! * `B_n`: signed permutations on `2n` points, point `i` paired with
//!   `i + n`. `s_1 … s_{n-1}` swap adjacent coordinates in both halves and
//!   `s_n` swaps the last pair.
//! * `D_n`: as `B_n`, with `s_n` swapping the last two coordinates while
//!   negating both.
//! * `I2(m)`: the dihedral group on the vertices of an `m`-gon.
//!
//! Reducible types are external direct products, with `S` concatenated
//! factor by factor.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::group::{DirectProduct, PermGroup, Subgroup};
use crate::perm::Perm;
use crate::ring::PbrElement;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterFactor {
    A(usize),
    B(usize),
    D(usize),
    /// Dihedral group of order `2m`.
    I2(usize),
}

impl CoxeterFactor {
    pub fn rank(&self) -> usize {
        match *self {
            CoxeterFactor::A(n) | CoxeterFactor::B(n) | CoxeterFactor::D(n) => n,
            CoxeterFactor::I2(_) => 2,
        }
    }

    /// `|W|`, or `None` on overflow.
    pub fn group_order(&self) -> Option<usize> {
        let fact = |k: usize| (1..=k).try_fold(1usize, |a, i| a.checked_mul(i));
        let pow2 = |k: usize| 1usize.checked_shl(k as u32).filter(|_| k < usize::BITS as usize);
        match *self {
            CoxeterFactor::A(n) => fact(n + 1),
            CoxeterFactor::B(n) => pow2(n)?.checked_mul(fact(n)?),
            CoxeterFactor::D(n) => pow2(n - 1)?.checked_mul(fact(n)?),
            CoxeterFactor::I2(m) => m.checked_mul(2),
        }
    }

    /// Coxeter matrix entry `m_ij` for 0-based simple reflection indices.
    pub fn coxeter_matrix_entry(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        match *self {
            CoxeterFactor::A(_) => {
                if hi - lo == 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterFactor::B(n) => {
                if hi - lo == 1 {
                    if hi == n - 1 {
                        4
                    } else {
                        3
                    }
                } else {
                    2
                }
            }
            CoxeterFactor::D(n) => {
                // s_{n-1} (0-based) hangs off s_{n-3}
                if hi == n - 1 {
                    if lo == n - 3 {
                        3
                    } else {
                        2
                    }
                } else if hi - lo == 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterFactor::I2(m) => m,
        }
    }

    fn degree(&self) -> usize {
        match *self {
            CoxeterFactor::A(n) => n + 1,
            CoxeterFactor::B(n) | CoxeterFactor::D(n) => 2 * n,
            CoxeterFactor::I2(m) => m,
        }
    }

    fn simple_reflections(&self) -> Vec<Perm> {
        let d = self.degree();
        let cyc = |cs: Vec<Vec<usize>>| Perm::from_cycles(d, &cs).expect("valid reflection");
        match *self {
            CoxeterFactor::A(n) => (0..n).map(|i| cyc(vec![vec![i, i + 1]])).collect(),
            CoxeterFactor::B(n) | CoxeterFactor::D(n) => {
                let mut s: Vec<Perm> = (0..n - 1)
                    .map(|i| cyc(vec![vec![i, i + 1], vec![i + n, i + 1 + n]]))
                    .collect();
                if matches!(self, CoxeterFactor::B(_)) {
                    s.push(cyc(vec![vec![n - 1, 2 * n - 1]]));
                } else {
                    s.push(cyc(vec![vec![n - 2, 2 * n - 1], vec![n - 1, 2 * n - 2]]));
                }
                s
            }
            CoxeterFactor::I2(m) => {
                let reflect = |shift: usize| {
                    Perm::from_images((0..m).map(|i| (shift + m - i) % m).collect()).expect("reflection")
                };
                vec![reflect(0), reflect(1)]
            }
        }
    }
}

impl fmt::Display for CoxeterFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxeterFactor::A(n) => write!(f, "A{n}"),
            CoxeterFactor::B(n) => write!(f, "B{n}"),
            CoxeterFactor::D(n) => write!(f, "D{n}"),
            CoxeterFactor::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A Coxeter type such as `A1xB2xI2(5)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    pub factors: Vec<CoxeterFactor>,
}

impl CoxeterType {
    pub fn parse(text: &str) -> Result<CoxeterType> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidType("empty type string".into()));
        }
        let factors = text.split('x').map(parse_factor).collect::<Result<Vec<_>>>()?;
        Ok(CoxeterType { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(CoxeterFactor::rank).sum()
    }

    /// Remarks worth surfacing to a user, such as coincidences with other types.
    pub fn notes(&self) -> Vec<String> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                CoxeterFactor::I2(3) => Some("I2(3) is the same group as A2".to_string()),
                CoxeterFactor::I2(4) => Some("I2(4) is the same group as B2".to_string()),
                _ => None,
            })
            .collect()
    }
}

impl FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CoxeterType::parse(s)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

fn parse_factor(s: &str) -> Result<CoxeterFactor> {
    let s = s.trim();
    let bad = |msg: &str| Error::InvalidType(format!("{s:?}: {msg}"));
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(|| bad("empty factor"))?;
    let rest = chars.as_str();
    let rank = |min: usize| -> Result<usize> {
        let n: usize = rest.parse().map_err(|_| bad("expected a rank after the letter"))?;
        if n < min {
            return Err(bad(&format!("rank must be at least {min}")));
        }
        Ok(n)
    };
    match letter {
        'A' => Ok(CoxeterFactor::A(rank(1)?)),
        'B' => Ok(CoxeterFactor::B(rank(2)?)),
        'D' => Ok(CoxeterFactor::D(rank(4)?)),
        'I' => {
            let m = rest
                .strip_prefix("2(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad("expected I2(m)"))?;
            let m: usize = m.trim().parse().map_err(|_| bad("expected an integer m"))?;
            if m < 3 {
                return Err(bad("m must be at least 3"));
            }
            Ok(CoxeterFactor::I2(m))
        }
        'E' | 'F' | 'H' => Err(Error::UnsupportedType(s.to_string())),
        _ => Err(bad("unknown type letter")),
    }
}

/// A Coxeter system `(W, S)` realized on points.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    ty: CoxeterType,
    product: DirectProduct,
    simple: Vec<u32>,
    boundaries: Vec<Range<usize>>,
}

impl CoxeterSystem {
    pub fn realize(ty: &CoxeterType, limits: &Limits) -> Result<CoxeterSystem> {
        let too_big = Error::ResourceLimit {
            what: "group element",
            limit: limits.max_elements,
        };
        let mut total = 1usize;
        for f in &ty.factors {
            let n = f.group_order().ok_or(too_big.clone())?;
            total = total.checked_mul(n).ok_or(too_big.clone())?;
        }
        if total > limits.max_elements {
            return Err(too_big);
        }

        let mut groups = Vec::new();
        for f in &ty.factors {
            let g = PermGroup::generate_with_limit(f.degree(), &f.simple_reflections(), limits.max_elements)?
                .with_label(f.to_string());
            if Some(g.order()) != f.group_order() {
                return Err(Error::Internal(format!(
                    "{f} realized with order {} instead of {:?}",
                    g.order(),
                    f.group_order()
                )));
            }
            groups.push(g);
        }
        let product = DirectProduct::new(&groups, limits.max_elements)?;
        let mut simple = Vec::new();
        let mut boundaries = Vec::new();
        for (j, g) in groups.iter().enumerate() {
            let start = simple.len();
            for s in g.generators() {
                simple.push(product.inject(j, g.index_of(s).expect("generator in group")));
            }
            boundaries.push(start..simple.len());
        }
        let sys = CoxeterSystem {
            ty: ty.clone(),
            product,
            simple,
            boundaries,
        };
        sys.check_relations()?;
        Ok(sys)
    }

    fn check_relations(&self) -> Result<()> {
        let g = self.group();
        let fail = |msg: String| Err(Error::Internal(msg));
        for (a, ra) in self.boundaries.iter().enumerate() {
            let fa = self.ty.factors[a];
            for i in ra.clone() {
                for j in 0..self.simple.len() {
                    let expected = if ra.contains(&j) {
                        fa.coxeter_matrix_entry(i - ra.start, j - ra.start)
                    } else {
                        2
                    };
                    let prod = g.element(g.mul(self.simple[i], self.simple[j]));
                    if prod.order() != expected {
                        return fail(format!(
                            "(s{} s{}) has order {} instead of {expected}",
                            i + 1,
                            j + 1,
                            prod.order()
                        ));
                    }
                }
            }
        }
        if g.subgroup_from_indices(&self.simple).order() != g.order() {
            return fail("simple reflections do not generate the group".into());
        }
        let parts: Vec<Subgroup> = (0..self.boundaries.len()).map(|a| self.factor_subgroup(a)).collect();
        for a in 0..parts.len() {
            for b in a + 1..parts.len() {
                if !parts[a].intersect_unchecked(&parts[b]).is_trivial() {
                    return fail(format!("factors {a} and {b} intersect nontrivially"));
                }
                for &x in &self.simple[self.boundaries[a].clone()] {
                    for &y in &self.simple[self.boundaries[b].clone()] {
                        if g.mul(x, y) != g.mul(y, x) {
                            return fail(format!("factors {a} and {b} do not commute"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn coxeter_type(&self) -> &CoxeterType {
        &self.ty
    }

    pub fn group(&self) -> &PermGroup {
        self.product.group()
    }

    /// The realization as a product of its irreducible factors.
    pub fn direct_product(&self) -> &DirectProduct {
        &self.product
    }

    /// `S`, concatenated factor by factor.
    pub fn simple_reflections(&self) -> Vec<Perm> {
        self.simple.iter().map(|&i| self.group().element(i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Positions in `S` belonging to each irreducible factor.
    pub fn factor_boundaries(&self) -> &[Range<usize>] {
        &self.boundaries
    }

    /// `W_a`, the subgroup generated by the `a`-th block of `S`.
    pub fn factor_subgroup(&self, a: usize) -> Subgroup {
        self.group().subgroup_from_indices(&self.simple[self.boundaries[a].clone()])
    }

    /// `⟨J⟩` for `J` given by positions in `S`.
    pub fn standard_parabolic(&self, j: &[usize]) -> Result<Subgroup> {
        let gens = j
            .iter()
            .map(|&i| {
                self.simple.get(i).copied().ok_or(Error::IndexOutOfRange {
                    what: "simple reflection",
                    index: i,
                    len: self.simple.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.group().subgroup_from_indices(&gens))
    }

    /// `⟨J⟩` for `J` given as a bit mask over `S`.
    pub fn standard_parabolic_mask(&self, mask: u64) -> Subgroup {
        let gens: Vec<u32> = (0..self.rank()).filter(|i| mask >> i & 1 == 1).map(|i| self.simple[i]).collect();
        self.group().subgroup_from_indices(&gens)
    }

    fn subsets(&self) -> Result<impl Iterator<Item = u64>> {
        if self.rank() >= 63 {
            return Err(Error::ResourceLimit {
                what: "Coxeter rank",
                limit: 62,
            });
        }
        Ok(0..(1u64 << self.rank()))
    }

    /// `P_W`: every conjugate of every standard parabolic subgroup.
    ///
    /// Built by closing the standard parabolics under conjugation and
    /// intersection; fails if closure produces anything that is not
    /// conjugate to a standard parabolic.
    pub fn parabolic_collection(&self, limits: &Limits) -> Result<Collection> {
        let seeds: Vec<Subgroup> = self.subsets()?.map(|m| self.standard_parabolic_mask(m)).collect();
        let c = Collection::close(self.group(), &seeds, limits)?;
        let mut covered = vec![false; c.class_count()];
        for s in &seeds {
            covered[c.class_index(s)?] = true;
        }
        if let Some(k) = covered.iter().position(|&x| !x) {
            return Err(Error::Internal(format!(
                "class {} of the parabolic closure contains no standard parabolic subgroup",
                c.class_label(k)
            )));
        }
        Ok(c)
    }

    /// `ε_W = Σ_{J ⊆ S} (−1)^{|J|} [W/⟨J⟩]`, checked to be a unit whose
    /// mark at `⟨J⟩` is `(−1)^{|J|}`.
    pub fn sign_unit(&self, parabolics: &Collection) -> Result<PbrElement> {
        if parabolics.group() != self.group() {
            return Err(Error::ParentMismatch);
        }
        let mut coeffs = vec![0i64; parabolics.class_count()];
        let mut size_of_class: Vec<Option<u32>> = vec![None; parabolics.class_count()];
        for mask in self.subsets()? {
            let size = mask.count_ones();
            let k = parabolics.class_index(&self.standard_parabolic_mask(mask))?;
            match size_of_class[k] {
                Some(s) if s != size => {
                    return Err(Error::Internal(format!(
                        "standard parabolics of ranks {s} and {size} are conjugate"
                    )))
                }
                _ => size_of_class[k] = Some(size),
            }
            coeffs[k] += if size % 2 == 0 { 1 } else { -1 };
        }
        let eps = PbrElement::from_ints(parabolics, &coeffs)?;
        let marks = eps.marks();
        for (k, size) in size_of_class.iter().enumerate() {
            if let Some(size) = size {
                let expected = if size % 2 == 0 { 1 } else { -1 };
                if marks[k] != expected.into() {
                    return Err(Error::Internal(format!(
                        "sign unit has mark {} at class {}",
                        marks[k],
                        parabolics.class_label(k)
                    )));
                }
            }
        }
        if !eps.is_unit() {
            return Err(Error::Internal("sign unit is not a unit".into()));
        }
        Ok(eps)
    }
}
