use num_bigint::BigInt;
use proptest::prelude::*;
use pbr::units::sign_mask;
use pbr::{Collection, CoxeterSystem, Limits, PbrElement, Perm, PermGroup, UnitGroup};

fn parabolic(ty: &str) -> Collection {
    let w = CoxeterSystem::realize(&ty.parse().unwrap(), &Limits::default()).unwrap();
    w.parabolic_collection(&Limits::default()).unwrap()
}

fn full_lattice(n: usize, gens: &[&str]) -> Collection {
    let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse_cycles(n, s).unwrap()).collect();
    let g = PermGroup::generate(n, &gens).unwrap();
    Collection::close(&g, &g.subgroup_lattice(g.order()).unwrap(), &Limits::default()).unwrap()
}

fn collections() -> Vec<Collection> {
    vec![
        parabolic("A2"),
        parabolic("B2"),
        parabolic("A1xA2"),
        full_lattice(4, &["(1 2 3 4)", "(1 3)"]),
        full_lattice(4, &["(1 2)", "(3 4)"]),
    ]
}

fn element(c: &Collection, v: &[i64]) -> PbrElement {
    let coeffs: Vec<i64> = (0..c.class_count()).map(|i| v[i % v.len()]).collect();
    PbrElement::from_ints(c, &coeffs).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 1..12)
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn marks_are_multiplicative(which in 0usize..5, a in coeffs(), b in coeffs()) {
        let c = &collections()[which];
        let (x, y) = (element(c, &a), element(c, &b));
        let xy = x.multiply(&y).unwrap();
        let want: Vec<BigInt> = x.marks().iter().zip(y.marks()).map(|(p, q)| p * q).collect();
        prop_assert_eq!(xy.marks(), want);
        prop_assert_eq!(&xy, &x.multiply_via_double_cosets(&y).unwrap());
        prop_assert_eq!(&xy, &y.multiply(&x).unwrap());
    }

    #[test]
    fn multiplication_is_associative_and_distributive(which in 0usize..5, a in coeffs(), b in coeffs(), d in coeffs()) {
        let c = &collections()[which];
        let (x, y, z) = (element(c, &a), element(c, &b), element(c, &d));
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let sum = x.multiply(&(&y + &z)).unwrap();
        prop_assert_eq!(sum, &x.multiply(&y).unwrap() + &x.multiply(&z).unwrap());
        prop_assert_eq!(x.multiply(&PbrElement::one(c)).unwrap(), x);
    }

    #[test]
    fn marks_round_trip(which in 0usize..5, a in coeffs()) {
        let c = &collections()[which];
        let x = element(c, &a);
        prop_assert_eq!(PbrElement::from_marks(c, &x.marks()), Some(x));
    }

    #[test]
    fn unit_signs_multiply(which in 0usize..5, i in 0usize..64, j in 0usize..64) {
        let c = &collections()[which];
        let u = UnitGroup::compute(c, &Limits::default()).unwrap();
        let (x, y) = (&u.units()[i % u.order()], &u.units()[j % u.order()]);
        let xy = x.multiply(y).unwrap();
        prop_assert!(u.contains(&xy));
        prop_assert_eq!(sign_mask(&xy), Some(sign_mask(x).unwrap() ^ sign_mask(y).unwrap()));
        prop_assert!(x.multiply(x).unwrap().is_one());
    }

    #[test]
    fn double_coset_sizes_follow_the_intersection_formula(which in 0usize..5, i in 0usize..64, j in 0usize..64) {
        let c = &collections()[which];
        let g = c.group();
        let h = c.representative(i % c.class_count());
        let k = c.representative(j % c.class_count());
        let dcs = g.double_cosets(h, k).unwrap();
        prop_assert_eq!(dcs.iter().map(|d| d.size).sum::<usize>(), g.order());
        for d in dcs {
            let kg = g.conjugate_by_index(k, d.representative);
            let meet = g.intersect(h, &kg).unwrap();
            prop_assert_eq!(d.size * meet.order(), h.order() * k.order());
        }
    }

    #[test]
    fn perm_display_parses_back(p in perm(7)) {
        let text = p.to_string();
        prop_assert_eq!(Perm::parse_cycles(7, &text).unwrap(), p.clone());
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.compose(&Perm::identity(7)) == p);
    }

    #[test]
    fn generated_groups_are_closed(a in perm(5), b in perm(5)) {
        let g = PermGroup::generate(5, &[a, b]).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        for x in g.elements() {
            for y in g.generators() {
                prop_assert!(g.contains(&x.compose(y)));
            }
        }
    }
}

#[test]
fn conjugacy_is_an_equivalence_on_small_lattices() {
    for c in [full_lattice(3, &["(1 2)", "(1 2 3)"]), full_lattice(4, &["(1 2)", "(3 4)"])] {
        let g = c.group();
        let subs = g.subgroup_lattice(g.order()).unwrap();
        for a in &subs {
            assert!(g.are_conjugate(a, a).unwrap());
            for b in &subs {
                let ab = g.are_conjugate(a, b).unwrap();
                assert_eq!(ab, g.are_conjugate(b, a).unwrap());
                for d in &subs {
                    if ab && g.are_conjugate(b, d).unwrap() {
                        assert!(g.are_conjugate(a, d).unwrap());
                    }
                }
            }
        }
    }
}
