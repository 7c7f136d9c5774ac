//! Multiplying basis elements through marks and through double cosets.

use pbr::ring::multiply_basis_double_coset;
use pbr::{CoxeterSystem, Limits, PbrElement};

fn main() -> pbr::Result<()> {
    let limits = Limits::default();
    let w = CoxeterSystem::realize(&"A3".parse()?, &limits)?;
    let c = w.parabolic_collection(&limits)?;
    let m = c.class_count();
    for i in 0..m {
        for j in i..m {
            let ghost = PbrElement::basis(&c, i)?.multiply(&PbrElement::basis(&c, j)?)?;
            let direct = multiply_basis_double_coset(&c, i, j)?;
            assert_eq!(ghost, direct);
            println!("[{}] * [{}] = {ghost}", c.class_label(i), c.class_label(j));
        }
    }
    Ok(())
}
