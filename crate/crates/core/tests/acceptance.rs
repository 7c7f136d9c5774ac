//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if
//! any criterion fails. All comparisons are exact integer equalities.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pbr::product::ParabolicProduct;
use pbr::ring::multiply_basis_double_coset;
use pbr::units::{generated_subgroup, UnitGroup};
use pbr::{Collection, CoxeterSystem, CoxeterType, Limits, PbrElement, PermGroup, Perm, ProductContext};

const IRREDUCIBLE: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "D4", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(9)",
    "I2(10)",
];
const REDUCIBLE: &[(&str, usize)] = &[
    ("A1xA1", 8),
    ("A1xA2", 8),
    ("A2xA2", 8),
    ("B2xA1", 8),
    ("A1xA1xA1", 16),
];
const IRREDUCIBLE_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn limits() -> Limits {
    Limits::default()
}

fn system(s: &str) -> CoxeterSystem {
    CoxeterSystem::realize(&s.parse().unwrap(), &limits()).unwrap()
}

fn parabolic(s: &str) -> (CoxeterSystem, Collection) {
    let w = system(s);
    let c = w.parabolic_collection(&limits()).unwrap();
    (w, c)
}

fn analyses() -> Vec<ParabolicProduct> {
    REDUCIBLE
        .iter()
        .map(|(s, _)| ParabolicProduct::analyze(&CoxeterType::parse(s).unwrap(), &limits()).unwrap())
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut orders = Vec::new();
    for s in IRREDUCIBLE {
        let (_, c) = parabolic(s);
        let u = UnitGroup::compute(&c, &limits()).map_err(|e| format!("{s}: {e}"))?;
        ensure(u.order() == 4, || format!("{s}: unit group has order {}", u.order()))?;
        orders.push(format!("{s}={}", u.order()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < IRREDUCIBLE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} in {:.2?}", orders.join(" "), elapsed))
}

fn criterion_2(all: &[ParabolicProduct]) -> Outcome {
    let mut seen = Vec::new();
    for (a, (s, want)) in all.iter().zip(REDUCIBLE) {
        let factor: usize = a.factor_units.iter().map(UnitGroup::order).product();
        let ell = a.len() as u32;
        ensure(a.units.order() * 2usize.pow(ell - 1) == factor, || {
            format!("{s}: |U| = {}, product of factor orders {factor}", a.units.order())
        })?;
        ensure(a.units.order() == *want, || format!("{s}: order {} != {want}", a.units.order()))?;
        ensure(a.product_formula_report().passed(), || format!("{s}: {}", a.product_formula_report().to_table()))?;
        seen.push(format!("{s}={}", a.units.order()));
    }
    Ok(seen.join(" "))
}

fn criterion_3(all: &[ParabolicProduct]) -> Outcome {
    for (a, (s, _)) in all.iter().zip(REDUCIBLE) {
        let prod = a.embedded_sign_product().map_err(|e| e.to_string())?;
        // both live on identical class lists; compare coefficient vectors directly
        ensure(a.parabolics.members() == a.context.collection().members(), || format!("{s}: collections differ"))?;
        ensure(a.sign_unit.coeffs() == prod.coeffs(), || {
            format!("{s}: {:?} vs {:?}", a.sign_unit.coeffs(), prod.coeffs())
        })?;
    }
    Ok(format!("{} types, classwise equal", all.len()))
}

fn criterion_4(all: &[ParabolicProduct]) -> Outcome {
    for (a, (s, _)) in all.iter().zip(REDUCIBLE) {
        let c = a.context.collection();
        let mut gens = vec![-&PbrElement::one(c)];
        for (i, e) in a.factor_sign_units.iter().enumerate() {
            gens.push(a.context.embed(i, e).map_err(|e| e.to_string())?);
        }
        let h = generated_subgroup(c, &gens).map_err(|e| e.to_string())?;
        let mut want: Vec<Vec<BigInt>> = a.units.units().iter().map(|u| u.coeffs().to_vec()).collect();
        let mut got: Vec<Vec<BigInt>> = h.iter().map(|u| u.coeffs().to_vec()).collect();
        want.sort();
        got.sort();
        ensure(got == want, || format!("{s}: generated {} elements vs {} units", got.len(), want.len()))?;
        ensure(h.len() == 1 << (a.len() + 1), || format!("{s}: order {}", h.len()))?;
        ensure(a.generators_report().passed(), || a.generators_report().to_table())?;
    }
    Ok("generated subgroup equals the unit group, order 2^(l+1)".into())
}

fn criterion_5() -> Outcome {
    let corpus = ["A1", "A2", "B2"];
    let mut combos: Vec<Vec<&str>> = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            combos.push(vec![corpus[i], corpus[j]]);
            for k in j..3 {
                combos.push(vec![corpus[i], corpus[j], corpus[k]]);
            }
        }
    }
    for combo in &combos {
        let (cols, units): (Vec<Collection>, Vec<UnitGroup>) = combo
            .iter()
            .map(|s| {
                let (_, c) = parabolic(s);
                let u = UnitGroup::compute(&c, &limits()).unwrap();
                (c, u)
            })
            .unzip();
        let ctx = ProductContext::build(&cols, &limits()).map_err(|e| e.to_string())?;
        let kernel = ctx.kernel_of_rho(&units).map_err(|e| e.to_string())?;
        let want = 1 << (combo.len() - 1);
        ensure(kernel.len() == want, || format!("{combo:?}: kernel size {}", kernel.len()))?;
        // exactly the sign tuples with an even number of -1
        for t in &kernel {
            let minus = t.iter().filter(|x| (-*x).is_one()).count();
            let plus = t.iter().filter(|x| x.is_one()).count();
            ensure(minus + plus == t.len() && minus % 2 == 0, || format!("{combo:?}: {t:?}"))?;
        }
        let report = ctx.verify_kernel(&units);
        ensure(report.passed(), || report.to_table())?;
    }
    Ok(format!("{} factor combinations (l = 2, 3)", combos.len()))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for pair in [["A1", "A1"], ["A2", "A1"], ["A2", "B2"]] {
        let cols: Vec<Collection> = pair.iter().map(|s| parabolic(s).1).collect();
        let ctx = ProductContext::build(&cols, &limits()).map_err(|e| e.to_string())?;
        let samples = ctx.exhaustive_mark_samples();
        let r = ctx.verify_mark_factorization(&samples);
        ensure(r.passed() && r.checked == samples.len(), || format!("{pair:?}: {}", r.to_table()))?;
        checked += r.checked;
    }
    Ok(format!("{checked} identities, all hold"))
}

fn criterion_7() -> Outcome {
    let p = |n: usize, s: &str| Perm::parse_cycles(n, s).unwrap();
    let s3 = PermGroup::generate(3, &[p(3, "(1 2)"), p(3, "(1 2 3)")]).unwrap();
    let s = s3.subgroup_from_generators(&[p(3, "(1 2)")]).unwrap();
    let s3_par = Collection::close(&s3, &[s], &limits()).unwrap();
    let c2 = PermGroup::generate(2, &[p(2, "(1 2)")]).unwrap();
    let c2_full = Collection::close(&c2, &[c2.trivial()], &limits()).unwrap();
    let mut checked = 0;
    for cols in [vec![s3_par, c2_full], vec![parabolic("A2").1, parabolic("A1").1]] {
        let ctx = ProductContext::build(&cols, &limits()).map_err(|e| e.to_string())?;
        let r = ctx.verify_structure_constants();
        let m = ctx.collection().class_count();
        ensure(r.passed() && r.checked == m * m && m == 6, || r.to_table())?;
        checked += r.checked;
    }
    Ok(format!("{checked} basis pairs agree"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for s in IRREDUCIBLE {
        let (w, c) = parabolic(s);
        let eps = w.sign_unit(&c).map_err(|e| format!("{s}: {e}"))?;
        let marks = eps.marks();
        for mask in 0u64..(1 << w.rank()) {
            let k = c.class_index(&w.standard_parabolic_mask(mask)).unwrap();
            let want = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            ensure(marks[k] == BigInt::from(want), || format!("{s}: J = {mask:b} has mark {}", marks[k]))?;
            checked += 1;
        }
        ensure(eps.multiply(&eps).unwrap().is_one(), || format!("{s}: sign unit squared is not 1"))?;
    }
    Ok(format!("{checked} subsets J, all marks (-1)^|J|, all squares 1"))
}

fn corpus_collections() -> Vec<(String, Collection)> {
    IRREDUCIBLE
        .iter()
        .chain(REDUCIBLE.iter().map(|(s, _)| s))
        .map(|s| (s.to_string(), parabolic(s).1))
        .collect()
}

fn criterion_9(corpus: &[(String, Collection)]) -> Outcome {
    let mut pairs = 0;
    for (s, c) in corpus {
        let m = c.class_count();
        for i in 0..m {
            for j in 0..m {
                let ghost = PbrElement::basis(c, i).unwrap().multiply(&PbrElement::basis(c, j).unwrap());
                let coset = multiply_basis_double_coset(c, i, j);
                ensure(matches!((&ghost, &coset), (Ok(a), Ok(b)) if a == b), || {
                    format!("{s}: classes ({i}, {j}): {ghost:?} vs {coset:?}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} basis pairs over {} collections", corpus.len()))
}

fn criterion_10(corpus: &[(String, Collection)]) -> Outcome {
    for (s, c) in corpus {
        let t = c.mark_matrix();
        ensure(t.is_lower_triangular(), || format!("{s}: table of marks is not lower-triangular"))?;
        for k in 0..c.class_count() {
            let h = c.representative(k);
            let n = c.group().normalizer(h).unwrap();
            ensure(*t.get(k, k) == BigInt::from(n.order() / h.order()), || {
                format!("{s}: diagonal entry {k} is {}, |N:H| = {}", t.get(k, k), n.order() / h.order())
            })?;
        }
        let u = UnitGroup::compute(c, &limits()).unwrap();
        ensure(u.verify_elementary_abelian(), || format!("{s}: unit group is not elementary abelian"))?;
    }
    for s in IRREDUCIBLE {
        let (w, c) = parabolic(s);
        let standard: Vec<_> = (0u64..(1 << w.rank())).map(|m| w.standard_parabolic_mask(m)).collect();
        for k in 0..c.class_count() {
            let rep = c.representative(k);
            let ok = standard.iter().any(|p| w.group().are_conjugate(rep, p).unwrap());
            ensure(ok, || format!("{s}: class {} is not parabolic", c.class_label(k)))?;
        }
        ensure(c.class_count() <= 1 << w.rank(), || format!("{s}: too many classes"))?;
    }
    Ok(format!("{} collections checked", corpus.len()))
}

fn main() {
    let all = analyses();
    let corpus = corpus_collections();
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "irreducible unit orders are 4", criterion_1()),
        (2, "unit order of W = product of factor orders / 2^(l-1)", criterion_2(&all)),
        (3, "sign unit of W = product of embedded sign units", criterion_3(&all)),
        (4, "units generated by -1 and embedded sign units", criterion_4(&all)),
        (5, "kernel of the unit-tuple map is the even sign tuples", criterion_5()),
        (6, "mark factorization through embeddings", criterion_6()),
        (7, "tensor product matches product ring", criterion_7()),
        (8, "sign unit marks are (-1)^|J|", criterion_8()),
        (9, "ghost and double-coset products agree", criterion_9(&corpus)),
        (10, "structural invariants", criterion_10(&corpus)),
    ];
    let mut failed = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(info) => println!("criterion {n:>2} PASS  {name}: {info}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
