//! Generates the Weyl group of F4 and prints its length distribution
//! (the coefficients of the Poincaré series of the group).

use aqclass::cohomology::Polynomial;
use aqclass::rootsys::{CartanMatrix, RootSystem, WeylGroup};

fn main() -> aqclass::Result<()> {
    let rs = RootSystem::build(CartanMatrix::type_f4())?;
    let w = WeylGroup::generate(&rs)?;
    let lengths = Polynomial::new(w.length_distribution(rs.positive_roots()));
    println!("|W(F4)| = {}", w.order());
    println!("W(q) = {}", lengths.to_string().replace('t', "q"));
    Ok(())
}
