//! Partial Burnside rings of direct products.
//!
//! For collections `D_i` of groups `G_i`, the products `H_1 × … × H_ℓ`
//! form a collection of `G = G_1 × … × G_ℓ`, and the classes of that
//! collection are in bijection with tuples of factor classes. Through this
//! pairing the tensor product of the factor rings is identified with
//! `B(G, Π D_i)`; [`ProductContext`] holds the pairing and the factor
//! embeddings `f_j : [G_j/H] ↦ [G/(G_1 × … × H × … × G_ℓ)]`, and checks the
//! identities relating the factor rings to the product ring.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::collection::{for_each_tuple, Collection};
use crate::coxeter::{CoxeterSystem, CoxeterType};
use crate::error::{Error, Result};
use crate::group::DirectProduct;
use crate::report::Report;
use crate::ring::{multiply_basis_double_coset, PbrElement};
use crate::units::{generated_subgroup, UnitGroup};
use crate::Limits;

#[derive(Debug, Clone)]
pub struct ProductContext {
    factors: Vec<Collection>,
    product: DirectProduct,
    collection: Collection,
    /// Tuple index (mixed radix, first factor most significant) to product class.
    pairing: Vec<usize>,
    /// Product class to tuple of factor classes.
    tuples: Vec<Vec<usize>>,
}

impl ProductContext {
    pub fn build(factors: &[Collection], limits: &Limits) -> Result<ProductContext> {
        if factors.is_empty() || factors.len() > limits.max_factors {
            return Err(Error::ResourceLimit {
                what: "direct factor count",
                limit: limits.max_factors,
            });
        }
        let groups: Vec<_> = factors.iter().map(|c| c.group().clone()).collect();
        let product = DirectProduct::new(&groups, limits.max_elements)?;
        Self::build_in(factors, product, limits)
    }

    /// Like [`ProductContext::build`], reusing an existing product group.
    pub fn build_in(factors: &[Collection], product: DirectProduct, limits: &Limits) -> Result<ProductContext> {
        let (collection, pairing) = Collection::product(factors, &product, limits)?;
        let mut tuples = vec![Vec::new(); collection.class_count()];
        let mut n = 0;
        for_each_tuple(factors.iter().map(Collection::class_count), |t| {
            tuples[pairing[n]] = t.to_vec();
            n += 1;
        });
        Ok(ProductContext {
            factors: factors.to_vec(),
            product,
            collection,
            pairing,
            tuples,
        })
    }

    /// Number of factors `ℓ`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Collection] {
        &self.factors
    }

    pub fn product(&self) -> &DirectProduct {
        &self.product
    }

    /// `Π D_i` inside the product group.
    pub fn collection(&self) -> &Collection {
        &self.collection
    }

    /// Product class containing `H_{t_1} × … × H_{t_ℓ}`.
    pub fn pair(&self, tuple: &[usize]) -> usize {
        let idx = tuple
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&t, c)| acc * c.class_count() + t);
        self.pairing[idx]
    }

    /// Factor classes paired with a product class.
    pub fn tuple(&self, class: usize) -> &[usize] {
        &self.tuples[class]
    }

    fn factor(&self, j: usize) -> Result<&Collection> {
        self.factors.get(j).ok_or(Error::IndexOutOfRange {
            what: "factor",
            index: j,
            len: self.factors.len(),
        })
    }

    /// `f_j(x)`: linear extension of `[G_j/H] ↦ [G/Ĥ_j]`.
    pub fn embed(&self, j: usize, x: &PbrElement) -> Result<PbrElement> {
        if !self.factor(j)?.same_as(x.collection()) {
            return Err(Error::RingMismatch);
        }
        let mut tuple: Vec<usize> = self.factors.iter().map(Collection::top_class).collect();
        let mut coeffs = vec![BigInt::zero(); self.collection.class_count()];
        for (c, a) in x.coeffs().iter().enumerate() {
            tuple[j] = c;
            coeffs[self.pair(&tuple)] += a;
        }
        PbrElement::from_coeffs(&self.collection, coeffs)
    }

    /// `ρ^×(u_1, …, u_ℓ) = Π_j f_j(u_j)`.
    pub fn rho_units(&self, units: &[PbrElement]) -> Result<PbrElement> {
        if units.len() != self.len() {
            return Err(Error::IndexOutOfRange {
                what: "unit tuple length",
                index: units.len(),
                len: self.len(),
            });
        }
        let mut acc = PbrElement::one(&self.collection);
        for (j, u) in units.iter().enumerate() {
            if !u.is_unit() {
                return Err(Error::NonUnit);
            }
            acc = acc.multiply(&self.embed(j, u)?)?;
        }
        Ok(acc)
    }

    /// All tuples of factor units sent to 1 by [`ProductContext::rho_units`].
    pub fn kernel_of_rho(&self, unit_groups: &[UnitGroup]) -> Result<Vec<Vec<PbrElement>>> {
        self.check_unit_groups(unit_groups)?;
        let mut kernel = Vec::new();
        let mut err = None;
        for_each_tuple(unit_groups.iter().map(UnitGroup::order), |t| {
            if err.is_some() {
                return;
            }
            let tuple: Vec<PbrElement> = t.iter().zip(unit_groups).map(|(&i, u)| u.units()[i].clone()).collect();
            match self.rho_units(&tuple) {
                Ok(x) if x.is_one() => kernel.push(tuple),
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(kernel),
        }
    }

    fn check_unit_groups(&self, unit_groups: &[UnitGroup]) -> Result<()> {
        if unit_groups.len() != self.len()
            || !unit_groups
                .iter()
                .zip(&self.factors)
                .all(|(u, c)| u.collection().same_as(c))
        {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Every `(j, [G_j/H], (H_1, …, H_ℓ))` triple: the exhaustive sample
    /// set for [`ProductContext::verify_mark_factorization`].
    pub fn exhaustive_mark_samples(&self) -> Vec<MarkSample> {
        let mut out = Vec::new();
        for (j, c) in self.factors.iter().enumerate() {
            for b in 0..c.class_count() {
                let x = PbrElement::basis(c, b).expect("class in range");
                for_each_tuple(self.factors.iter().map(Collection::class_count), |t| {
                    out.push(MarkSample {
                        factor: j,
                        element: x.clone(),
                        tuple: t.to_vec(),
                    });
                });
            }
        }
        out
    }

    /// Checks `φ_{H_1×…×H_ℓ}(f_j(x)) = φ_{H_j}(x)` on each sample.
    pub fn verify_mark_factorization(&self, samples: &[MarkSample]) -> Report {
        let mut report = Report::new("mark factorization through the factor embeddings");
        for s in samples {
            let outcome = self.embed(s.factor, &s.element).map(|fx| {
                let lhs = fx.marks()[self.pair(&s.tuple)].clone();
                let rhs = s.element.marks()[s.tuple[s.factor]].clone();
                (lhs, rhs)
            });
            match outcome {
                Ok((lhs, rhs)) => report.record(lhs == rhs, || {
                    format!(
                        "factor {}, x = {}, tuple {:?}: product mark {lhs}, factor mark {rhs}",
                        s.factor, s.element, s.tuple
                    )
                }),
                Err(e) => report.record(false, || format!("factor {}: {e}", s.factor)),
            }
        }
        report
    }

    /// Compares basis structure constants: multiplying `[G_1/H_1]⊗…⊗[G_ℓ/H_ℓ]`
    /// factorwise and pairing the result must agree with the double-coset
    /// product of the paired basis elements in the product ring.
    pub fn verify_structure_constants(&self) -> Report {
        let mut report = Report::new("tensor product of factor rings matches the product ring");
        let m = self.collection.class_count();
        let ell = self.len();
        // factor basis products, computed once
        let mut factor_products: Vec<Vec<Vec<Result<PbrElement>>>> = Vec::with_capacity(ell);
        for c in &self.factors {
            let k = c.class_count();
            factor_products.push(
                (0..k)
                    .map(|a| {
                        (0..k)
                            .map(|b| {
                                PbrElement::basis(c, a)?.multiply(&PbrElement::basis(c, b)?)
                            })
                            .collect()
                    })
                    .collect(),
            );
        }
        for p in 0..m {
            for q in 0..m {
                let (tp, tq) = (self.tuple(p), self.tuple(q));
                let parts: Result<Vec<&PbrElement>> = (0..ell)
                    .map(|i| factor_products[i][tp[i]][tq[i]].as_ref().map_err(Clone::clone))
                    .collect();
                let expected = parts.map(|parts| self.tensor_to_product(&parts));
                let actual = multiply_basis_double_coset(&self.collection, p, q);
                match (expected, actual) {
                    (Ok(e), Ok(a)) => report.record(e == a, || {
                        format!(
                            "classes {:?} * {:?}: factorwise gives {e}, product ring gives {a}",
                            tp, tq
                        )
                    }),
                    (Err(e), _) | (_, Err(e)) => report.record(false, || e.to_string()),
                }
            }
        }
        report
    }

    /// `x_1 ⊗ … ⊗ x_ℓ`, expanded and mapped through the class pairing.
    pub fn tensor_to_product(&self, parts: &[&PbrElement]) -> PbrElement {
        let mut coeffs = vec![BigInt::zero(); self.collection.class_count()];
        for_each_tuple(self.factors.iter().map(Collection::class_count), |t| {
            let mut c = BigInt::one();
            for (x, &i) in parts.iter().zip(t) {
                c *= &x.coeffs()[i];
                if c.is_zero() {
                    return;
                }
            }
            coeffs[self.pair(t)] += c;
        });
        PbrElement::from_coeffs(&self.collection, coeffs).expect("length matches")
    }

    /// Checks that each `f_j` sends 1 to 1 and respects products of basis elements.
    pub fn verify_embeddings(&self) -> Report {
        let mut report = Report::new("factor embeddings are ring homomorphisms");
        for (j, c) in self.factors.iter().enumerate() {
            let one = self.embed(j, &PbrElement::one(c));
            report.record(matches!(&one, Ok(x) if x.is_one()), || format!("f_{} does not preserve 1", j + 1));
            for a in 0..c.class_count() {
                for b in 0..c.class_count() {
                    let ok = (|| -> Result<bool> {
                        let x = PbrElement::basis(c, a)?;
                        let y = PbrElement::basis(c, b)?;
                        let lhs = self.embed(j, &x.multiply(&y)?)?;
                        let rhs = self.embed(j, &x)?.multiply(&self.embed(j, &y)?)?;
                        Ok(lhs == rhs)
                    })();
                    report.record(matches!(ok, Ok(true)), || {
                        format!("f_{} fails on classes ({a}, {b}): {ok:?}", j + 1)
                    });
                }
            }
        }
        report
    }

    /// Kernel of `ρ^×` against the tuples of ±1 with an even number of −1.
    pub fn verify_kernel(&self, unit_groups: &[UnitGroup]) -> Report {
        let mut report = Report::new("kernel of the unit-tuple map is the even sign tuples");
        let kernel = match self.kernel_of_rho(unit_groups) {
            Ok(k) => k,
            Err(e) => {
                report.record(false, || e.to_string());
                return report;
            }
        };
        let as_keys = |t: &[PbrElement]| -> Vec<Vec<BigInt>> { t.iter().map(|x| x.coeffs().to_vec()).collect() };
        let found: BTreeSet<Vec<Vec<BigInt>>> = kernel.iter().map(|t| as_keys(t)).collect();
        let mut expected = BTreeSet::new();
        for_each_tuple(std::iter::repeat(2).take(self.len()), |signs| {
            if signs.iter().sum::<usize>() % 2 == 0 {
                let t: Vec<PbrElement> = signs
                    .iter()
                    .zip(&self.factors)
                    .map(|(&s, c)| {
                        let one = PbrElement::one(c);
                        if s == 1 {
                            -&one
                        } else {
                            one
                        }
                    })
                    .collect();
                expected.insert(as_keys(&t));
            }
        });
        let want = 1usize << (self.len() - 1);
        report.record(kernel.len() == want, || {
            format!("kernel has {} elements, expected {want}", kernel.len())
        });
        report.record(found == expected, || {
            format!("kernel {:?} differs from the even sign tuples", kernel)
        });
        report
    }

    /// `ρ^×` respects products, on every pair of unit tuples.
    pub fn verify_rho_homomorphism(&self, unit_groups: &[UnitGroup]) -> Report {
        let mut report = Report::new("unit-tuple map is a group homomorphism");
        if let Err(e) = self.check_unit_groups(unit_groups) {
            report.record(false, || e.to_string());
            return report;
        }
        let mut tuples: Vec<Vec<PbrElement>> = Vec::new();
        for_each_tuple(unit_groups.iter().map(UnitGroup::order), |t| {
            tuples.push(t.iter().zip(unit_groups).map(|(&i, u)| u.units()[i].clone()).collect());
        });
        let images: Vec<Result<PbrElement>> = tuples.iter().map(|t| self.rho_units(t)).collect();
        for (a, ia) in tuples.iter().zip(&images) {
            for (b, ib) in tuples.iter().zip(&images) {
                let ok = (|| -> Result<bool> {
                    let ab: Vec<PbrElement> = a
                        .iter()
                        .zip(b)
                        .map(|(x, y)| x.multiply(y))
                        .collect::<Result<_>>()?;
                    let lhs = self.rho_units(&ab)?;
                    let rhs = ia.clone()?.multiply(ib.as_ref().map_err(Clone::clone)?)?;
                    Ok(lhs == rhs)
                })();
                report.record(matches!(ok, Ok(true)), || format!("{a:?} * {b:?}: {ok:?}"));
            }
        }
        report
    }
}

#[derive(Debug, Clone)]
pub struct MarkSample {
    pub factor: usize,
    pub element: PbrElement,
    /// One class index per factor.
    pub tuple: Vec<usize>,
}

/// Everything computed for a reducible Coxeter group and its irreducible
/// factors, relative to their parabolic collections.
#[derive(Debug, Clone)]
pub struct ParabolicProduct {
    pub coxeter_type: CoxeterType,
    pub factor_systems: Vec<CoxeterSystem>,
    pub factor_units: Vec<UnitGroup>,
    pub factor_sign_units: Vec<PbrElement>,
    pub context: ProductContext,
    /// `W` realized as a whole, with its own parabolic closure.
    pub system: CoxeterSystem,
    pub parabolics: Collection,
    pub units: UnitGroup,
    pub sign_unit: PbrElement,
}

impl ParabolicProduct {
    pub fn analyze(ty: &CoxeterType, limits: &Limits) -> Result<ParabolicProduct> {
        let mut factor_systems = Vec::new();
        let mut factor_collections = Vec::new();
        let mut factor_units = Vec::new();
        let mut factor_sign_units = Vec::new();
        for f in &ty.factors {
            let sys = CoxeterSystem::realize(&CoxeterType { factors: vec![*f] }, limits)?;
            let c = sys.parabolic_collection(limits)?;
            factor_units.push(UnitGroup::compute(&c, limits)?);
            factor_sign_units.push(sys.sign_unit(&c)?);
            factor_collections.push(c);
            factor_systems.push(sys);
        }
        let system = CoxeterSystem::realize(ty, limits)?;
        if ty.factors.len() > limits.max_factors {
            return Err(Error::ResourceLimit {
                what: "direct factor count",
                limit: limits.max_factors,
            });
        }
        let context = ProductContext::build_in(&factor_collections, system.direct_product().clone(), limits)?;
        let parabolics = system.parabolic_collection(limits)?;
        let units = UnitGroup::compute(&parabolics, limits)?;
        let sign_unit = system.sign_unit(&parabolics)?;
        Ok(ParabolicProduct {
            coxeter_type: ty.clone(),
            factor_systems,
            factor_units,
            factor_sign_units,
            context,
            system,
            parabolics,
            units,
            sign_unit,
        })
    }

    pub fn len(&self) -> usize {
        self.factor_systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factor_systems.is_empty()
    }

    /// `Π_i f_i(ε_{W_i})` in the product collection.
    pub fn embedded_sign_product(&self) -> Result<PbrElement> {
        let mut acc = PbrElement::one(self.context.collection());
        for (i, e) in self.factor_sign_units.iter().enumerate() {
            acc = acc.multiply(&self.context.embed(i, e)?)?;
        }
        Ok(acc)
    }

    /// Parabolic subgroups of `W` are exactly the products of parabolic
    /// subgroups of the factors, class by class.
    pub fn collections_report(&self) -> Report {
        let mut r = Report::new("parabolic collection of W equals the product of factor collections");
        let prod = self.context.collection();
        r.record(prod.members() == self.parabolics.members(), || {
            format!(
                "{} product members vs {} parabolic subgroups",
                prod.members().len(),
                self.parabolics.members().len()
            )
        });
        let reps = |c: &Collection| -> Vec<_> { c.classes().iter().map(|k| k.representative.clone()).collect() };
        r.record(reps(prod) == reps(&self.parabolics), || {
            format!(
                "{} product classes vs {} parabolic classes",
                prod.class_count(),
                self.parabolics.class_count()
            )
        });
        r
    }

    /// `|B(W,P_W)^×| · 2^{ℓ−1} = Π |B(W_i,P_{W_i})^×|`.
    pub fn unit_order_report(&self) -> Report {
        let mut r = Report::new("unit group order of W is the product of factor orders over 2^(l-1)");
        let factor_orders: Vec<usize> = self.factor_units.iter().map(UnitGroup::order).collect();
        let product: usize = factor_orders.iter().product();
        let lhs = self.units.order() << (self.len() - 1);
        r.record(lhs == product, || {
            format!(
                "|units(W)| = {}, factor orders {:?}, 2^(l-1) = {}",
                self.units.order(),
                factor_orders,
                1usize << (self.len() - 1)
            )
        });
        r
    }

    /// `ε_W = Π_i f_i(ε_{W_i})`, coefficient by coefficient.
    pub fn sign_unit_report(&self) -> Report {
        let mut r = Report::new("sign unit of W is the product of embedded factor sign units");
        match self.embedded_sign_product() {
            Ok(p) => {
                for (k, (a, b)) in self.sign_unit.coeffs().iter().zip(p.coeffs()).enumerate() {
                    r.record(a == b, || {
                        format!(
                            "class {}: sign unit coefficient {a}, embedded product coefficient {b}",
                            self.parabolics.class_label(k)
                        )
                    });
                }
            }
            Err(e) => r.record(false, || e.to_string()),
        }
        r
    }

    /// Order, sign-unit factorization and matching collections together.
    pub fn product_formula_report(&self) -> Report {
        Report::with_parts(
            format!("product structure of B(W,P_W) units for {}", self.coxeter_type),
            [self.collections_report(), self.unit_order_report(), self.sign_unit_report()],
        )
    }

    /// When every factor has exactly four units: `2^{ℓ+1}` units generated
    /// by −1 and the embedded factor sign units, independently.
    pub fn generators_report(&self) -> Report {
        let mut r = Report::new(format!(
            "units of {} are generated by -1 and the embedded sign units",
            self.coxeter_type
        ));
        if let Some(i) = self.factor_units.iter().position(|u| u.order() != 4) {
            r.note(format!(
                "factor {} has {} units, not 4; nothing to check",
                self.coxeter_type.factors[i],
                self.factor_units[i].order()
            ));
            return r;
        }
        let want = 1usize << (self.len() + 1);
        r.record(self.units.order() == want, || {
            format!("{} units, expected {want}", self.units.order())
        });
        let c = self.context.collection();
        let gens = self
            .factor_sign_units
            .iter()
            .enumerate()
            .map(|(i, e)| self.context.embed(i, e))
            .collect::<Result<Vec<_>>>();
        let gens = match gens {
            Ok(mut g) => {
                g.insert(0, -&PbrElement::one(c));
                g
            }
            Err(e) => {
                r.record(false, || e.to_string());
                return r;
            }
        };
        match generated_subgroup(c, &gens) {
            Ok(h) => r.record(h.as_slice() == self.units.units(), || {
                format!("generated subgroup has {} elements, unit group {}", h.len(), self.units.order())
            }),
            Err(e) => r.record(false, || e.to_string()),
        }
        for drop in 1..gens.len() {
            let rest: Vec<PbrElement> = gens
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != drop)
                .map(|(_, g)| g.clone())
                .collect();
            match generated_subgroup(c, &rest) {
                Ok(h) => r.record(2 * h.len() == self.units.order(), || {
                    format!(
                        "dropping f_{}(sign unit) leaves {} of {} units",
                        drop,
                        h.len(),
                        self.units.order()
                    )
                }),
                Err(e) => r.record(false, || e.to_string()),
            }
        }
        r
    }

    pub fn kernel_report(&self) -> Report {
        Report::with_parts(
            format!("unit-tuple map for {}", self.coxeter_type),
            [
                self.context.verify_kernel(&self.factor_units),
                self.context.verify_rho_homomorphism(&self.factor_units),
            ],
        )
    }

    pub fn mark_factorization_report(&self) -> Report {
        self.context
            .verify_mark_factorization(&self.context.exhaustive_mark_samples())
    }

    pub fn structure_constants_report(&self) -> Report {
        Report::with_parts(
            format!("tensor decomposition for {}", self.coxeter_type),
            [
                self.context.verify_structure_constants(),
                self.context.verify_embeddings(),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection::fixtures::*;

    fn analyze(s: &str) -> ParabolicProduct {
        ParabolicProduct::analyze(&s.parse().unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn single_factor_context_is_identity() {
        let c = s3_parabolic();
        let ctx = ProductContext::build(&[c.clone()], &Limits::default()).unwrap();
        assert_eq!(ctx.collection().class_count(), 3);
        for k in 0..3 {
            assert_eq!(ctx.pair(&[k]), k);
        }
        assert!(ctx.verify_structure_constants().passed());
    }

    #[test]
    fn s3_times_c2() {
        let ctx = ProductContext::build(&[s3_parabolic(), c2_full()], &Limits::default()).unwrap();
        assert_eq!(ctx.collection().class_count(), 6);
        let r = ctx.verify_structure_constants();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checked, 36);
        assert!(ctx.verify_embeddings().passed());

        // f_1([S3/<s>]) = [(S3 x C2)/(<s> x C2)]
        let x = PbrElement::basis(&ctx.factors()[0], 1).unwrap();
        let fx = ctx.embed(0, &x).unwrap();
        let want = PbrElement::basis(ctx.collection(), ctx.pair(&[1, 1])).unwrap();
        assert_eq!(fx, want);
        assert!(ctx.embed(1, &PbrElement::one(&ctx.factors()[1])).unwrap().is_one());
        assert_eq!(ctx.embed(2, &x).unwrap_err(), Error::IndexOutOfRange { what: "factor", index: 2, len: 2 });
        assert_eq!(ctx.embed(1, &x).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn factor_cap() {
        let c = c2_full();
        let limits = Limits {
            max_factors: 2,
            ..Limits::default()
        };
        assert!(matches!(
            ProductContext::build(&[c.clone(), c.clone(), c], &limits),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn rho_examples() {
        let a = analyze("A1xA1");
        let ctx = &a.context;
        let ones: Vec<PbrElement> = ctx.factors().iter().map(PbrElement::one).collect();
        assert!(ctx.rho_units(&ones).unwrap().is_one());
        let minus: Vec<PbrElement> = ones.iter().map(|x| -x).collect();
        assert!(ctx.rho_units(&minus).unwrap().is_one());
        assert_eq!(ctx.rho_units(&a.factor_sign_units).unwrap(), a.sign_unit);
        let basis = PbrElement::basis(&ctx.factors()[0], 0).unwrap();
        assert_eq!(ctx.rho_units(&[basis, ones[1].clone()]).unwrap_err(), Error::NonUnit);
        assert_eq!(ctx.kernel_of_rho(&a.factor_units).unwrap().len(), 2);
    }

    #[test]
    fn mark_factorization_examples() {
        let a = analyze("A1xA1");
        let ctx = &a.context;
        // x = sign unit of the first A1, tuple (<s>, 1): both sides -1
        let s = MarkSample {
            factor: 0,
            element: a.factor_sign_units[0].clone(),
            tuple: vec![1, 0],
        };
        assert!(ctx.verify_mark_factorization(&[s.clone()]).passed());
        let lhs = ctx.embed(0, &s.element).unwrap().marks()[ctx.pair(&s.tuple)].clone();
        assert_eq!(lhs, BigInt::from(-1));

        let b = analyze("A2xA1");
        let x = PbrElement::basis(&b.context.factors()[0], 1).unwrap();
        let fx = b.context.embed(0, &x).unwrap();
        assert_eq!(fx.marks()[b.context.pair(&[1, 1])], BigInt::one());
        assert!(b.mark_factorization_report().passed());
    }

    #[test]
    fn product_formula_small_cases() {
        let a = analyze("A2");
        assert_eq!(a.units.order(), 4);
        assert!(a.product_formula_report().passed());
        let b = analyze("A1xA2");
        assert_eq!(b.units.order(), 8);
        let r = b.product_formula_report();
        assert!(r.passed(), "{}", r.to_table());
        assert!(b.generators_report().passed());
        assert!(b.kernel_report().passed());
        assert!(b.structure_constants_report().passed());
    }
}
