//! Reading a group and seed subgroups from a text file.

use pbr::input::GroupFile;
use pbr::{Limits, UnitGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/klein.txt").into());
    let file = GroupFile::parse(&std::fs::read_to_string(&path)?)?;
    let (group, c) = file.build(&Limits::default())?;
    println!("{path}: |G| = {}, {} classes", group.order(), c.class_count());
    let u = UnitGroup::compute(&c, &Limits::default())?;
    for x in u.generators() {
        println!("generator {x}");
    }
    Ok(())
}
