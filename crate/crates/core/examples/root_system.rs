//! Builds the F4 root system from its Cartan matrix and prints the positive roots by height.

use aqclass::rootsys::{CartanMatrix, RootSystem};

fn main() -> aqclass::Result<()> {
    let rs = RootSystem::build(CartanMatrix::type_f4())?;
    println!("F4: {} roots, highest root {}", rs.roots().len(), rs.highest_root());
    let mut positive = rs.positive_roots().to_vec();
    positive.sort_by_key(|a| (a.height(), a.clone()));
    for a in positive {
        println!("  height {:2}  {a}", a.height());
    }
    Ok(())
}
