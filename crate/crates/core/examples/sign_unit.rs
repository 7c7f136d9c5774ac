//! The alternating sum over standard parabolics, its marks, and its square.

use pbr::{CoxeterSystem, Limits};

fn main() -> pbr::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let limits = Limits::default();
    let w = CoxeterSystem::realize(&name.parse()?, &limits)?;
    let c = w.parabolic_collection(&limits)?;
    let eps = w.sign_unit(&c)?;
    println!("{name}: {eps}");
    println!("marks: {:?}", eps.marks().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("squares to one: {}", eps.multiply(&eps)?.is_one());
    Ok(())
}
