//! Unit groups of a reducible Coxeter group compared with those of its factors.

use pbr::product::ParabolicProduct;
use pbr::Limits;

fn main() -> pbr::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A1xA2xB2".into());
    let p = ParabolicProduct::analyze(&name.parse()?, &Limits::default())?;
    for r in [
        p.product_formula_report(),
        p.generators_report(),
        p.kernel_report(),
        p.mark_factorization_report(),
        p.structure_constants_report(),
    ] {
        println!("{}", r.to_table());
    }
    Ok(())
}
