//! Unit groups of the ring of parabolic subgroups for small Coxeter groups.

use pbr::{CoxeterSystem, CoxeterType, Limits, UnitGroup};

fn main() -> pbr::Result<()> {
    let limits = Limits::default();
    for name in ["A1", "A3", "B3", "D4", "I2(5)", "A1xA1", "A1xA2", "A1xA1xA1"] {
        let ty: CoxeterType = name.parse()?;
        let w = CoxeterSystem::realize(&ty, &limits)?;
        let c = w.parabolic_collection(&limits)?;
        let u = UnitGroup::compute(&c, &limits)?;
        println!(
            "{name:>9}: |W| = {:>4}, {:>2} classes, |units| = {:>2}, rank {}",
            w.group().order(),
            c.class_count(),
            u.order(),
            u.rank()
        );
    }
    Ok(())
}
