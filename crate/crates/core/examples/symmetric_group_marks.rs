//! Table of marks of S3 relative to the collection generated by a transposition.

use pbr::{Collection, Limits, Perm, PermGroup};

fn main() -> pbr::Result<()> {
    let s3 = PermGroup::generate(3, &[Perm::parse_cycles(3, "(1 2)")?, Perm::parse_cycles(3, "(1 2 3)")?])?;
    let t = s3.subgroup_from_generators(&[Perm::parse_cycles(3, "(1 2)")?])?;
    let c = Collection::close(&s3, &[t], &Limits::default())?;

    println!("|G| = {}, {} members, {} classes", s3.order(), c.members().len(), c.class_count());
    for (i, row) in c.mark_matrix().rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        println!("{:>6} {}", c.class_label(i), cells.join(""));
    }
    Ok(())
}
