//! Builds θ-stable parabolics from (Φ, Γ) and from an integral functional x,
//! and shows that they give the same Δ(u∩p).

use aqclass::parabolics::{build_parabolic, build_q_x};
use aqclass::posenum::enumerate_positive_systems;
use aqclass::realform::color_roots;
use aqclass::rootsys::{CartanMatrix, Root, RootSystem, WeylGroup};

fn main() -> aqclass::Result<()> {
    let rs = RootSystem::build(CartanMatrix::type_f4())?;
    let coloring = color_roots(&rs, &[0])?;
    let systems = enumerate_positive_systems(&rs, &WeylGroup::generate(&rs)?, &coloring)?;
    let base = systems.iter().find(|s| s.roots == rs.positive_roots()).expect("base system");

    let gamma = [Root::new(vec![0, 0, 0, 1])];
    let d = build_parabolic(&rs, &coloring, base, &gamma)?;
    println!(
        "Γ = {{φ4}}: dim u = {}, R = {}, S = {}, dim l = {}",
        d.u_roots.len(),
        d.r(),
        d.s(),
        d.levi_roots.len() + 4
    );

    // x is the fundamental coweight dual to φ4
    let q = build_q_x(&rs, &coloring, &[0, 0, 0, 1])?;
    println!("x = (0,0,0,1): same Δ(u∩p) as Γ = {{φ4}}: {}", q.u_cap_p == d.u_cap_p);
    for b in d.key() {
        println!("  {b}");
    }
    Ok(())
}
