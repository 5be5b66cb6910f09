//! Poincaré polynomials of a few compact duals, computed as
//! W_l(t^2) / W_{l∩k}(t^2) from root data alone.

use aqclass::cohomology::{levi_data, poincare_compact_dual};
use aqclass::posenum::enumerate_positive_systems;
use aqclass::realform::color_roots;
use aqclass::rootsys::{CartanMatrix, RootSystem, WeylGroup};

fn show(name: &str, noncompact: usize, cartan: CartanMatrix) -> aqclass::Result<()> {
    let rs = RootSystem::build(cartan)?;
    let coloring = color_roots(&rs, &[noncompact])?;
    let systems = enumerate_positive_systems(&rs, &WeylGroup::generate(&rs)?, &coloring)?;
    let base = systems.iter().find(|s| s.roots == rs.positive_roots()).expect("base system");
    let levi = levi_data(&rs, &coloring, base, &rs.simple_roots(), rs.roots())?;
    println!("{name:>8} [{}]: {}", levi.type_label, poincare_compact_dual(&levi));
    Ok(())
}

fn main() -> aqclass::Result<()> {
    show("A2, φ1", 0, CartanMatrix::type_a(2)?)?;
    show("B3, φ1", 0, CartanMatrix::type_b(3)?)?;
    show("C3, φ3", 2, CartanMatrix::type_c(3)?)?;
    show("C3, φ2", 1, CartanMatrix::type_c(3)?)?;
    show("G2, φ1", 0, CartanMatrix::type_g2())?;
    show("F4, φ1", 0, CartanMatrix::type_f4())?;
    Ok(())
}
