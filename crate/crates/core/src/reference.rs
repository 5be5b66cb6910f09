//! Published catalogue for the split real form of F4 (noncompact `φ1`).
//!
//! Used only to annotate output: the twelve simple systems in catalogue row
//! order, the representative `(row, Γ)` of each of the 46 cases, and the two
//! sum relations `β + γ = δ` between noncompact positive roots.

use crate::posenum::{ForbiddenPair, PositiveSystem};
use crate::realform::Coloring;
use crate::rootsys::{CartanMatrix, Root, RootSystem};

type V = [i32; 4];

const P1: V = [1, 0, 0, 0];
const P2: V = [0, 1, 0, 0];
const P3: V = [0, 0, 1, 0];
const P4: V = [0, 0, 0, 1];
const DELTA: V = [2, 3, 4, 2];

/// Simple systems, catalogue rows 1 through 12.
pub const F4_SIMPLE_SYSTEMS: [[V; 4]; 12] = [
    [P1, P2, P3, P4],
    [[1, 1, 0, 0], [-1, 0, 0, 0], P3, P4],
    [[1, 1, 1, 0], [-1, -1, 0, 0], P2, P4],
    [[1, 1, 2, 0], [1, 1, 1, 1], [-1, -1, -1, 0], P2],
    [[1, 1, 2, 0], [-1, -1, -1, -1], P2, P4],
    [[1, 2, 2, 0], [1, 1, 1, 1], [-1, -1, -2, 0], P3],
    [[1, 1, 1, 1], [-1, -2, -2, 0], P2, P3],
    [[1, 2, 2, 0], [1, 1, 2, 1], [-1, -1, -2, 0], [-1, -1, -1, -1]],
    [[1, 2, 2, 0], [1, 1, 2, 2], [-1, -1, -2, -1], P3],
    [[1, 1, 2, 1], [-1, -2, -2, 0], [-1, -1, -1, -1], P2],
    [DELTA, [-1, -1, -2, -2], P3, P4],
    [DELTA, [-1, -2, -2, 0], [-1, -1, -2, -1], P3],
];

pub struct CatalogueCase {
    pub label: &'static str,
    pub row: usize,
    pub gamma: &'static [V],
}

macro_rules! case {
    ($label:expr, $row:expr, [$($g:expr),*]) => {
        CatalogueCase { label: $label, row: $row, gamma: &[$($g),*] }
    };
}

/// One representative per class, as `(label, catalogue row, Γ)`.
pub const F4_CASES: [CatalogueCase; 46] = [
    case!("1a", 1, []),
    case!("1b", 1, [P1]),
    case!("1c", 1, [P2]),
    case!("1d", 1, [P3]),
    case!("1e", 1, [P4]),
    case!("2a", 2, [[-1, 0, 0, 0]]),
    case!("2b", 2, [[1, 1, 0, 0], [-1, 0, 0, 0]]),
    case!("2c", 2, [[-1, 0, 0, 0], P3]),
    case!("2d", 2, [[-1, 0, 0, 0], P4]),
    case!("3a", 3, [[-1, -1, 0, 0]]),
    case!("3b", 3, [[1, 1, 1, 0], [-1, -1, 0, 0]]),
    case!("3c", 3, [[-1, -1, 0, 0], P4]),
    case!("4a", 4, [[-1, -1, -1, 0]]),
    case!("4b", 4, [[1, 1, 2, 0], [-1, -1, -1, 0]]),
    case!("4c", 4, [[1, 1, 1, 1], [-1, -1, -1, 0]]),
    case!("4d", 4, [[-1, -1, -1, 0], P2]),
    case!("4e", 4, [[1, 1, 2, 0], [1, 1, 1, 1], [-1, -1, -1, 0]]),
    case!("4f", 4, [[1, 1, 1, 1], [-1, -1, -1, 0], P2]),
    case!("5a", 5, [[-1, -1, -1, -1]]),
    case!("5b", 5, [[1, 1, 2, 0], [-1, -1, -1, -1]]),
    case!("5c", 5, [[-1, -1, -1, -1], P4]),
    case!("5d", 5, [[-1, -1, -1, -1], P2]),
    case!("5e", 5, [[-1, -1, -1, -1], P2, P4]),
    case!("6a", 6, [[-1, -1, -2, 0]]),
    case!("6b", 6, [[1, 1, 1, 1], [-1, -1, -2, 0]]),
    case!("6c", 6, [[1, 2, 2, 0], [-1, -1, -2, 0]]),
    case!("6d", 6, [[-1, -1, -2, 0], P3]),
    case!("6e", 6, [[1, 2, 2, 0], [1, 1, 1, 1], [-1, -1, -2, 0]]),
    case!("6f", 6, [[1, 2, 2, 0], [-1, -1, -2, 0], P3]),
    case!("7a", 7, [[-1, -2, -2, 0]]),
    case!("7b", 7, [[1, 1, 1, 1], [-1, -2, -2, 0]]),
    case!("7c", 7, [[-1, -2, -2, 0], P3]),
    case!("7d", 7, [[-1, -2, -2, 0], P2]),
    case!("8a", 8, [[-1, -1, -2, 0], [-1, -1, -1, -1]]),
    case!("8b", 8, [[1, 2, 2, 0], [-1, -1, -2, 0], [-1, -1, -1, -1]]),
    case!("8c", 8, [[1, 1, 2, 1], [-1, -1, -2, 0], [-1, -1, -1, -1]]),
    case!("8d", 8, [[1, 2, 2, 0], [1, 1, 2, 1], [-1, -1, -2, 0], [-1, -1, -1, -1]]),
    case!("9a", 9, [[-1, -1, -2, -1]]),
    case!("9b", 9, [[1, 2, 2, 0], [-1, -1, -2, -1]]),
    case!("9c", 9, [[1, 1, 2, 2], [-1, -1, -2, -1]]),
    case!("9d", 9, [[1, 2, 2, 0], [1, 1, 2, 2], [-1, -1, -2, -1]]),
    case!("10a", 10, [[-1, -2, -2, 0], [-1, -1, -1, -1]]),
    case!("10b", 10, [[-1, -2, -2, 0], [-1, -1, -1, -1], P2]),
    case!("10c", 10, [[1, 1, 2, 1], [-1, -2, -2, 0], [-1, -1, -1, -1]]),
    case!("11a", 11, [[-1, -1, -2, -2]]),
    case!("12a", 12, [[-1, -2, -2, 0], [-1, -1, -2, -1]]),
];

/// The two relations `(φ1+φ2+2φ3+φ4)+(φ1+2φ2+2φ3+φ4) = δ = (φ1+2φ2+2φ3)+(φ1+φ2+2φ3+2φ4)`.
pub fn f4_forbidden_pairs() -> Vec<ForbiddenPair> {
    vec![
        (Root::new(vec![1, 1, 2, 1]), Root::new(vec![1, 2, 2, 1])),
        (Root::new(vec![1, 2, 2, 0]), Root::new(vec![1, 1, 2, 2])),
    ]
}

fn sorted(v: &[V]) -> Vec<Root> {
    let mut out: Vec<Root> = v.iter().map(|c| Root::new(c.to_vec())).collect();
    out.sort();
    out
}

/// Whether this is F4 colored at `φ1`, the configuration the catalogue describes.
pub fn is_f4_split(rs: &RootSystem, coloring: &Coloring) -> bool {
    rs.cartan() == &CartanMatrix::type_f4() && coloring.noncompact_simple() == [0]
}

/// Catalogue row of a positive system, matched by its simple system.
pub fn catalogue_row(system: &PositiveSystem) -> Option<usize> {
    F4_SIMPLE_SYSTEMS.iter().position(|s| sorted(s) == system.simple_system).map(|i| i + 1)
}

/// Catalogue label of the representative `(system, Γ)`, if it is one.
pub fn case_label(system: &PositiveSystem, gamma: &[Root]) -> Option<&'static str> {
    let row = catalogue_row(system)?;
    let mut g = gamma.to_vec();
    g.sort();
    F4_CASES.iter().find(|c| c.row == row && sorted(c.gamma) == g).map(|c| c.label)
}
