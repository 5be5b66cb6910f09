//! Lists the positive systems of F4 containing the compact positive roots
//! when φ1 is the noncompact simple root.

use aqclass::posenum::enumerate_positive_systems;
use aqclass::realform::color_roots;
use aqclass::reference::catalogue_row;
use aqclass::rootsys::{CartanMatrix, RootSystem, WeylGroup};

fn main() -> aqclass::Result<()> {
    let rs = RootSystem::build(CartanMatrix::type_f4())?;
    let coloring = color_roots(&rs, &[0])?;
    println!("Δ_n^+ has {} roots:", coloring.noncompact_positive().len());
    for b in coloring.noncompact_positive() {
        println!("  {b}");
    }
    let systems = enumerate_positive_systems(&rs, &WeylGroup::generate(&rs)?, &coloring)?;
    for s in &systems {
        let simple: Vec<String> = s.simple_system.iter().map(ToString::to_string).collect();
        println!("{:2} (catalogue row {:2}): {{{}}}", s.index, catalogue_row(s).unwrap_or(0), simple.join(", "));
    }
    Ok(())
}
