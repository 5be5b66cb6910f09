//! Compact/noncompact coloring of the roots for an equal-rank real form.
//!
//! The real form is given by a set of noncompact simple roots of a base
//! positive system. A root is compact exactly when the sum of its
//! coefficients at the noncompact simple roots is even.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{extract_simple_system, Root, RootSystem, SimpleBasis};

/// `Δ_i`: roots whose coefficient at the single noncompact simple root is `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedLayer {
    pub degree: i32,
    pub roots: Vec<Root>,
}

#[derive(Clone, Debug)]
pub struct Coloring {
    noncompact_simple: Vec<usize>,
    compact: Vec<Root>,
    noncompact: Vec<Root>,
    compact_positive: Vec<Root>,
    noncompact_positive: Vec<Root>,
    compact_set: HashSet<Root>,
    layers: Option<Vec<GradedLayer>>,
}

impl Coloring {
    /// Indices (0-based) of the noncompact simple roots.
    pub fn noncompact_simple(&self) -> &[usize] {
        &self.noncompact_simple
    }

    /// `Δ_k`
    pub fn compact_roots(&self) -> &[Root] {
        &self.compact
    }

    /// `Δ_n`
    pub fn noncompact_roots(&self) -> &[Root] {
        &self.noncompact
    }

    /// `Δ_k^+`
    pub fn compact_positive(&self) -> &[Root] {
        &self.compact_positive
    }

    /// `Δ_n^+`
    pub fn noncompact_positive(&self) -> &[Root] {
        &self.noncompact_positive
    }

    pub fn is_compact(&self, alpha: &Root) -> bool {
        self.compact_set.contains(alpha)
    }

    /// Graded layers, present only for a single noncompact simple root.
    pub fn layers(&self) -> Option<&[GradedLayer]> {
        self.layers.as_deref()
    }

    /// `G/K` is Hermitian symmetric iff some noncompact simple root has
    /// coefficient 1 in the highest root.
    pub fn is_hermitian(&self, rs: &RootSystem) -> bool {
        self.noncompact_simple.iter().any(|&i| rs.highest_root().coeffs()[i] == 1)
    }
}

fn parity_compact(alpha: &Root, noncompact: &[usize]) -> bool {
    noncompact.iter().map(|&i| alpha.coeffs()[i]).sum::<i32>() % 2 == 0
}

pub fn color_roots(rs: &RootSystem, noncompact_simple: &[usize]) -> Result<Coloring> {
    if noncompact_simple.is_empty() {
        return Err(Error::EmptyColoring);
    }
    let mut nc: Vec<usize> = noncompact_simple.to_vec();
    nc.sort_unstable();
    nc.dedup();
    if let Some(&bad) = nc.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::IndexOutOfRange { index: bad, rank: rs.rank() });
    }
    let (compact, noncompact): (Vec<Root>, Vec<Root>) =
        rs.roots().iter().cloned().partition(|a| parity_compact(a, &nc));
    let compact_positive: Vec<Root> = compact.iter().filter(|a| a.is_positive()).cloned().collect();
    let noncompact_positive: Vec<Root> = noncompact.iter().filter(|a| a.is_positive()).cloned().collect();
    let layers = (nc.len() == 1).then(|| {
        let nu = nc[0];
        let top = rs.highest_root().coeffs()[nu];
        (-top..=top)
            .map(|degree| GradedLayer {
                degree,
                roots: rs.roots().iter().filter(|a| a.coeffs()[nu] == degree).cloned().collect(),
            })
            .collect()
    });
    let compact_set = compact.iter().cloned().collect();
    Ok(Coloring {
        noncompact_simple: nc,
        compact,
        noncompact,
        compact_positive,
        noncompact_positive,
        compact_set,
        layers,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BdsKind {
    NotBds,
    HermitianBds,
    NonhermitianBds,
}

impl BdsKind {
    pub fn is_bds(self) -> bool {
        self != BdsKind::NotBds
    }
}

/// The highest root of the positive system with simple system `simple`:
/// the unique root `θ` in `p` with `θ + φ` not a root for every simple `φ`.
pub fn highest_root_of(rs: &RootSystem, p: &[Root], simple: &[Root]) -> Root {
    p.iter()
        .find(|t| simple.iter().all(|s| !rs.contains(&(*t + s))))
        .cloned()
        .expect("a positive system has a highest root")
}

/// Borel-de Siebenthal test: exactly one noncompact simple root `ν` in `p`,
/// with coefficient 1 (Hermitian) or 2 (non-Hermitian) in the highest root of `p`.
pub fn is_borel_de_siebenthal(rs: &RootSystem, coloring: &Coloring, p: &[Root]) -> Result<BdsKind> {
    let simple = extract_simple_system(rs, p)?;
    let members: HashSet<&Root> = p.iter().collect();
    if !coloring.compact_positive().iter().all(|a| members.contains(a)) {
        return Err(Error::DoesNotContainCompactPositive);
    }
    let nc: Vec<usize> = (0..simple.len()).filter(|&k| !coloring.is_compact(&simple[k])).collect();
    if nc.len() != 1 {
        return Ok(BdsKind::NotBds);
    }
    let basis = SimpleBasis::new(&simple)?;
    let theta = highest_root_of(rs, p, &simple);
    Ok(match basis.coordinates(&theta)[nc[0]] {
        1 => BdsKind::HermitianBds,
        2 => BdsKind::NonhermitianBds,
        _ => BdsKind::NotBds,
    })
}
