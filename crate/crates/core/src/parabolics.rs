//! θ-stable parabolic subalgebras and their equivalence classes.
//!
//! A parabolic containing the Borel subalgebra of a positive system `P(Φ)` is
//! given by a subset `Γ ⊆ Φ`: its nilradical `u` holds the roots with a
//! positive coefficient at some element of `Γ` and its Levi factor `l` the
//! roots with zero coefficient at every element of `Γ`. Two such parabolics
//! yield equivalent modules exactly when their sets `Δ(u∩p)` agree, so that
//! set (sorted) is the class key.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::posenum::PositiveSystem;
use crate::realform::Coloring;
use crate::rootsys::{Root, RootSystem, SimpleBasis, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// `(Φ, Γ)` with `Φ` the simple system of positive system `system`.
    Simple { system: usize, gamma: Vec<Root> },
    /// `q_x` for an integer functional `x` dominant on `Δ_k^+`.
    Functional { x: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicDescriptor {
    pub origin: Origin,
    /// `Δ(u)`
    pub u_roots: Vec<Root>,
    /// `Δ(l)`
    pub levi_roots: Vec<Root>,
    /// `Δ(u∩p)`, the class key.
    pub u_cap_p: Vec<Root>,
    /// `Δ(u∩k)`
    pub u_cap_k: Vec<Root>,
    /// `Φ ∖ Γ`, the simple roots of the Levi factor. Empty for `q_x`.
    pub levi_simple: Vec<Root>,
}

impl ParabolicDescriptor {
    /// `R(q) = dim(u∩p)`
    pub fn r(&self) -> usize {
        self.u_cap_p.len()
    }

    /// `S = dim(u∩k)`
    pub fn s(&self) -> usize {
        self.u_cap_k.len()
    }

    pub fn key(&self) -> &[Root] {
        &self.u_cap_p
    }

    fn from_partition(
        origin: Origin,
        coloring: &Coloring,
        u: Vec<Root>,
        levi: Vec<Root>,
        levi_simple: Vec<Root>,
    ) -> Self {
        let (u_cap_k, u_cap_p): (Vec<Root>, Vec<Root>) = u.iter().cloned().partition(|a| coloring.is_compact(a));
        ParabolicDescriptor { origin, u_roots: u, levi_roots: levi, u_cap_p, u_cap_k, levi_simple }
    }
}

pub fn build_parabolic(
    rs: &RootSystem,
    coloring: &Coloring,
    system: &PositiveSystem,
    gamma: &[Root],
) -> Result<ParabolicDescriptor> {
    let positions: Vec<usize> = gamma
        .iter()
        .map(|g| system.simple_system.iter().position(|s| s == g).ok_or(Error::GammaNotSubset))
        .collect::<Result<_>>()?;
    let basis = SimpleBasis::new(&system.simple_system)?;
    let mut u = Vec::new();
    let mut levi = Vec::new();
    for alpha in rs.roots() {
        let coords = basis.coordinates(alpha);
        if !coords.iter().all(|&c| c >= 0) && !coords.iter().all(|&c| c <= 0) {
            return Err(Error::BasisDecompositionFailure(alpha.to_string()));
        }
        if positions.iter().any(|&k| coords[k] > 0) {
            u.push(alpha.clone());
        } else if positions.iter().all(|&k| coords[k] == 0) {
            levi.push(alpha.clone());
        }
    }
    let levi_simple: Vec<Root> = system.simple_system.iter().filter(|s| !gamma.contains(s)).cloned().collect();
    let mut gamma = gamma.to_vec();
    gamma.sort();
    Ok(ParabolicDescriptor::from_partition(
        Origin::Simple { system: system.index, gamma },
        coloring,
        u,
        levi,
        levi_simple,
    ))
}

/// Every `(Φ, Γ)` over every subset `Γ` of every simple system, in system
/// order and then by subset bitmask.
pub fn enumerate_all_parabolics(
    rs: &RootSystem,
    coloring: &Coloring,
    systems: &[PositiveSystem],
) -> Result<Vec<ParabolicDescriptor>> {
    let mut out = Vec::with_capacity(systems.len() << rs.rank());
    for system in systems {
        let n = system.simple_system.len();
        for mask in 0u32..(1 << n) {
            let gamma: Vec<Root> =
                (0..n).filter(|k| mask & (1 << k) != 0).map(|k| system.simple_system[k].clone()).collect();
            out.push(build_parabolic(rs, coloring, system, &gamma)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub system: usize,
    pub gamma: Vec<Root>,
    pub levi_simple: Vec<Root>,
}

/// An equivalence class of `A_q` modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AqClass {
    /// Sorted `Δ(u∩p)`.
    pub key: Vec<Root>,
    pub representatives: Vec<Representative>,
    pub r: usize,
    /// `2δ(u∩p)`, the sum of the roots of the key.
    pub lowest_k_type: Weight,
}

/// Groups descriptors by `Δ(u∩p)`; classes are sorted by `(R, key)`.
/// Descriptors not built from a simple system are ignored.
pub fn dedupe_classes(rank: usize, descriptors: &[ParabolicDescriptor]) -> Vec<AqClass> {
    let mut groups: BTreeMap<(usize, Vec<Root>), Vec<Representative>> = BTreeMap::new();
    for d in descriptors {
        if let Origin::Simple { system, gamma } = &d.origin {
            groups.entry((d.r(), d.u_cap_p.clone())).or_default().push(Representative {
                system: *system,
                gamma: gamma.clone(),
                levi_simple: d.levi_simple.clone(),
            });
        }
    }
    groups
        .into_iter()
        .map(|((r, key), representatives)| AqClass {
            lowest_k_type: Weight::sum_of(rank, &key),
            key,
            representatives,
            r,
        })
        .collect()
}

/// `q_x`: `u = {α : α(x) > 0}`, `l = {α : α(x) = 0}`, where `α(x)` is the
/// dot product of the coefficient vector of `α` with `x`.
pub fn build_q_x(rs: &RootSystem, coloring: &Coloring, x: &[i64]) -> Result<ParabolicDescriptor> {
    if x.len() != rs.rank() {
        return Err(Error::NotDominant(format!("functional has {} entries, expected {}", x.len(), rs.rank())));
    }
    if let Some(bad) = coloring.compact_positive().iter().find(|a| a.evaluate(x) < 0) {
        return Err(Error::NotDominant(format!("{bad} is negative on x")));
    }
    let u: Vec<Root> = rs.roots().iter().filter(|a| a.evaluate(x) > 0).cloned().collect();
    let levi: Vec<Root> = rs.roots().iter().filter(|a| a.evaluate(x) == 0).cloned().collect();
    Ok(ParabolicDescriptor::from_partition(Origin::Functional { x: x.to_vec() }, coloring, u, levi, Vec::new()))
}

/// Result of sweeping `q_x` over integer boxes `[-r, r]^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QxSweep {
    /// Radius at which the key set stopped changing.
    pub radius: i64,
    /// Number of distinct keys found at radius 0, 1, 2, ...
    pub counts: Vec<usize>,
    pub keys: BTreeSet<Vec<Root>>,
    pub stable: bool,
}

fn keys_in_box(rs: &RootSystem, coloring: &Coloring, radius: i64) -> BTreeSet<Vec<Root>> {
    let n = rs.rank();
    let mut keys = BTreeSet::new();
    let mut x = vec![-radius; n];
    loop {
        if coloring.compact_positive().iter().all(|a| a.evaluate(&x) >= 0) {
            let key: Vec<Root> = coloring.noncompact_roots().iter().filter(|a| a.evaluate(&x) > 0).cloned().collect();
            keys.insert(key);
        }
        let mut k = 0;
        loop {
            if k == n {
                return keys;
            }
            if x[k] < radius {
                x[k] += 1;
                break;
            }
            x[k] = -radius;
            k += 1;
        }
    }
}

/// Grows the box radius until two consecutive radii give the same key set,
/// or `max_radius` is reached.
pub fn sweep_q_x(rs: &RootSystem, coloring: &Coloring, max_radius: i64) -> QxSweep {
    let mut counts = Vec::new();
    let mut previous: Option<BTreeSet<Vec<Root>>> = None;
    for radius in 0..=max_radius {
        let keys = keys_in_box(rs, coloring, radius);
        counts.push(keys.len());
        if radius >= 2 && previous.as_ref() == Some(&keys) {
            return QxSweep { radius, counts, keys, stable: true };
        }
        previous = Some(keys);
    }
    QxSweep { radius: max_radius, counts, keys: previous.unwrap_or_default(), stable: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posenum::enumerate_positive_systems;
    use crate::realform::color_roots;
    use crate::rootsys::{CartanMatrix, WeylGroup};

    fn r(v: &[i32]) -> Root {
        Root::new(v.to_vec())
    }

    fn setup(cartan: CartanMatrix) -> (RootSystem, Coloring, Vec<PositiveSystem>) {
        let rs = RootSystem::build(cartan).unwrap();
        let c = color_roots(&rs, &[0]).unwrap();
        let w = WeylGroup::generate(&rs).unwrap();
        let s = enumerate_positive_systems(&rs, &w, &c).unwrap();
        (rs, c, s)
    }

    #[test]
    fn empty_gamma_is_whole_algebra() {
        let (rs, c, systems) = setup(CartanMatrix::type_f4());
        let d = build_parabolic(&rs, &c, &systems[0], &[]).unwrap();
        assert!(d.u_roots.is_empty());
        assert_eq!(d.levi_roots.len(), 48);
        assert_eq!(d.r(), 0);
    }

    #[test]
    fn base_borel_nilradical() {
        let (rs, c, systems) = setup(CartanMatrix::type_f4());
        let base = systems.iter().find(|s| s.roots == rs.positive_roots()).unwrap();
        let d = build_parabolic(&rs, &c, base, &[r(&[1, 0, 0, 0])]).unwrap();
        assert_eq!(d.u_cap_p, c.noncompact_positive());
        assert_eq!(d.r(), 14);
        assert_eq!(d.r() + d.s(), d.u_roots.len());
    }

    #[test]
    fn gamma_must_be_simple() {
        let (rs, c, systems) = setup(CartanMatrix::type_f4());
        let base = systems.iter().find(|s| s.roots == rs.positive_roots()).unwrap();
        let err = build_parabolic(&rs, &c, base, &[r(&[2, 3, 4, 2])]);
        assert_eq!(err.unwrap_err(), Error::GammaNotSubset);
    }

    #[test]
    fn rank_one_classes() {
        let (rs, c, systems) = setup(CartanMatrix::type_a(1).unwrap());
        let all = enumerate_all_parabolics(&rs, &c, &systems).unwrap();
        assert_eq!(all.len(), 4);
        let classes = dedupe_classes(1, &all);
        let keys: Vec<Vec<Root>> = classes.iter().map(|c| c.key.clone()).collect();
        assert_eq!(keys, vec![vec![], vec![r(&[-1])], vec![r(&[1])]]);
        assert_eq!(classes[0].representatives.len(), 2);
    }

    #[test]
    fn q_x_extremes() {
        let (rs, c, _) = setup(CartanMatrix::type_f4());
        let g = build_q_x(&rs, &c, &[0, 0, 0, 0]).unwrap();
        assert!(g.u_cap_p.is_empty());
        let borel = build_q_x(&rs, &c, &[1, 1, 1, 1]).unwrap();
        assert_eq!(borel.u_cap_p, c.noncompact_positive());
        assert!(matches!(build_q_x(&rs, &c, &[0, -1, 0, 0]), Err(Error::NotDominant(_))));
    }
}
