//! Positive systems containing the compact positive roots.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::Result;
use crate::realform::Coloring;
use crate::rootsys::{extract_simple_system, Root, RootSystem, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveSystem {
    /// 1-based position in the canonical order.
    pub index: usize,
    /// `P(Φ)`, sorted.
    pub roots: Vec<Root>,
    /// `Φ`, sorted.
    pub simple_system: Vec<Root>,
}

impl PositiveSystem {
    pub fn contains(&self, alpha: &Root) -> bool {
        self.roots.binary_search(alpha).is_ok()
    }
}

/// All `w(Δ^+)` for `w` in the Weyl group that contain `Δ_k^+`, deduplicated
/// and ordered by their simple systems.
pub fn enumerate_positive_systems(
    rs: &RootSystem,
    weyl: &WeylGroup,
    coloring: &Coloring,
) -> Result<Vec<PositiveSystem>> {
    let mut images: BTreeSet<Vec<Root>> = BTreeSet::new();
    for w in weyl.elements() {
        let mut image: Vec<Root> = rs.positive_roots().iter().map(|a| w.apply(a)).collect();
        image.sort();
        if coloring.compact_positive().iter().all(|a| image.binary_search(a).is_ok()) {
            images.insert(image);
        }
    }
    let mut systems = images
        .into_iter()
        .map(|roots| {
            let simple_system = extract_simple_system(rs, &roots)?;
            Ok(PositiveSystem { index: 0, roots, simple_system })
        })
        .collect::<Result<Vec<_>>>()?;
    systems.sort_by(|a, b| a.simple_system.cmp(&b.simple_system));
    for (i, s) in systems.iter_mut().enumerate() {
        s.index = i + 1;
    }
    Ok(systems)
}

/// Pairs of roots `(β, γ)` whose negatives must never lie together in a
/// positive system containing `Δ_k^+`.
pub type ForbiddenPair = (Root, Root);

/// Pairs of positive noncompact roots whose sum is a positive compact root.
/// If both negatives were in `P` so would be the negative of a compact
/// positive root.
pub fn forbidden_pairs(rs: &RootSystem, coloring: &Coloring) -> Vec<ForbiddenPair> {
    let compact: HashSet<&Root> = coloring.compact_positive().iter().collect();
    let np = coloring.noncompact_positive();
    let mut out = Vec::new();
    for (i, a) in np.iter().enumerate() {
        for b in &np[i + 1..] {
            let s = a + b;
            if rs.contains(&s) && compact.contains(&s) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternViolation {
    pub system: usize,
    pub pair: ForbiddenPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    pub pairs_checked: usize,
    pub violations: Vec<PatternViolation>,
}

impl PatternReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_forbidden_patterns(systems: &[PositiveSystem], pairs: &[ForbiddenPair]) -> PatternReport {
    let mut violations = Vec::new();
    for s in systems {
        for (a, b) in pairs {
            if a.rank() == s.roots.first().map_or(0, Root::rank) && s.contains(&-a) && s.contains(&-b) {
                violations.push(PatternViolation { system: s.index, pair: (a.clone(), b.clone()) });
            }
        }
    }
    PatternReport { pairs_checked: pairs.len(), violations }
}
