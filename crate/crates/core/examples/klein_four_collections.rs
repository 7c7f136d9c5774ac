//! Closing a set of seed subgroups of the Klein four group and listing the classes.

use pbr::{Collection, Limits, Perm, PermGroup, UnitGroup};

fn main() -> pbr::Result<()> {
    let p = |s: &str| Perm::parse_cycles(4, s);
    let v4 = PermGroup::generate(4, &[p("(1 2)")?, p("(3 4)")?])?;
    let seeds = [
        v4.subgroup_from_generators(&[p("(1 2)")?])?,
        v4.subgroup_from_generators(&[p("(3 4)")?])?,
    ];
    let c = Collection::close(&v4, &seeds, &Limits::default())?;
    for (i, class) in c.classes().iter().enumerate() {
        let gens: Vec<String> = c.representative(i).generators().iter().map(ToString::to_string).collect();
        println!("class {:>4}: size {}, generated by [{}]", c.class_label(i), class.size(), gens.join(", "));
    }
    // (1 2)(3 4) is missing, so the collection is not the full lattice
    println!("closed: {}", c.axiom_violations().is_empty());

    let u = UnitGroup::compute(&c, &Limits::default())?;
    println!("unit group of order {} and rank {}", u.order(), u.rank());
    for x in u.units() {
        println!("  {x}");
    }
    Ok(())
}
