//! Shared fixtures: data-file loaders and root-system oracles that do not go
//! through the library's reflection machinery.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use aqclass::classify::{classify, ClassificationReport, RunOptions};
use aqclass::cohomology::Polynomial;
use aqclass::rootsys::{CartanMatrix, Root};

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn data_lines(name: &str) -> Vec<String> {
    std::fs::read_to_string(data_path(name))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

pub fn root(v: &[i32]) -> Root {
    Root::new(v.to_vec())
}

fn parse_coeffs(s: &str) -> Vec<i32> {
    s.split(',').map(|c| c.trim().parse().unwrap()).collect()
}

/// `Δ_n^+` for F4 with `φ1` noncompact, written out by hand.
pub const F4_NONCOMPACT_POSITIVE: [[i32; 4]; 14] = [
    [1, 0, 0, 0],
    [1, 1, 0, 0],
    [1, 1, 1, 0],
    [1, 1, 2, 0],
    [1, 1, 1, 1],
    [1, 2, 2, 0],
    [1, 1, 2, 1],
    [1, 2, 2, 1],
    [1, 1, 2, 2],
    [1, 2, 3, 1],
    [1, 2, 2, 2],
    [1, 2, 3, 2],
    [1, 2, 4, 2],
    [1, 3, 4, 2],
];

pub fn f4_noncompact_positive() -> Vec<Root> {
    let mut v: Vec<Root> = F4_NONCOMPACT_POSITIVE.iter().map(|c| root(c)).collect();
    v.sort();
    v
}

/// The twelve simple systems, sorted, in catalogue row order.
pub fn simple_systems_data() -> Vec<Vec<Root>> {
    data_lines("f4_simple_systems.txt")
        .iter()
        .map(|l| {
            let mut s: Vec<Root> = l.split_whitespace().map(|t| Root::new(parse_coeffs(t))).collect();
            s.sort();
            s
        })
        .collect()
}

pub struct GoldenCase {
    pub label: String,
    pub key: Vec<Root>,
    pub r: usize,
    pub compact_dual: Polynomial,
    pub poincare: Polynomial,
}

fn digits(s: &str) -> Vec<i32> {
    s.chars().map(|c| c.to_digit(10).unwrap() as i32).collect()
}

fn bounds(s: &str) -> Vec<Vec<i32>> {
    if s == "-" {
        Vec::new()
    } else {
        s.split(',').map(digits).collect()
    }
}

fn geq(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// The 46 rows of the transcribed table, keys expanded from their bounds.
pub fn classes_data() -> Vec<GoldenCase> {
    let np = f4_noncompact_positive();
    data_lines("f4_classes.txt")
        .iter()
        .map(|l| {
            let cols: Vec<&str> = l.split('|').map(str::trim).collect();
            assert_eq!(cols.len(), 6, "{l}");
            let (lower, upper) = (bounds(cols[1]), bounds(cols[2]));
            let mut key: Vec<Root> = np.iter().filter(|b| lower.iter().any(|x| geq(b.coeffs(), x))).cloned().collect();
            key.extend(np.iter().filter(|b| upper.iter().any(|y| geq(y, b.coeffs()))).map(|b| -b));
            key.sort();
            GoldenCase {
                label: cols[0].to_string(),
                key,
                r: cols[3].parse().unwrap(),
                compact_dual: cols[4].parse().unwrap(),
                poincare: cols[5].parse().unwrap(),
            }
        })
        .collect()
}

/// The F4 report, computed once per test binary.
pub fn f4_report() -> &'static ClassificationReport {
    static REPORT: OnceLock<ClassificationReport> = OnceLock::new();
    REPORT.get_or_init(|| classify("F4", CartanMatrix::type_f4(), &[0], &RunOptions::default()).unwrap())
}

/// F4 roots from the standard Euclidean model, with doubled coordinates so
/// everything is an integer: `±2e_i`, `±2e_i ± 2e_j`, `(±1, ±1, ±1, ±1)`.
pub fn euclidean_f4_roots() -> Vec<[i32; 4]> {
    let mut out = Vec::new();
    for i in 0..4 {
        for s in [-2, 2] {
            let mut v = [0; 4];
            v[i] = s;
            out.push(v);
        }
        for j in i + 1..4 {
            for si in [-2, 2] {
                for sj in [-2, 2] {
                    let mut v = [0; 4];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
    }
    for mask in 0..16 {
        out.push(std::array::from_fn(|k| if mask & (1 << k) != 0 { -1 } else { 1 }));
    }
    out
}

/// Simple roots `e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2`, doubled.
pub const EUCLIDEAN_F4_SIMPLE: [[i32; 4]; 4] = [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]];

pub fn dot(a: &[i32; 4], b: &[i32; 4]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Coefficients of `v` in the Euclidean simple roots, by exhaustive search.
pub fn euclidean_coefficients(v: &[i32; 4]) -> Option<[i32; 4]> {
    let range = -4..=4;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    let coeffs = [a, b, c, d];
                    let w: [i32; 4] =
                        std::array::from_fn(|k| (0..4).map(|i| coeffs[i] * EUCLIDEAN_F4_SIMPLE[i][k]).sum());
                    if &w == v {
                        return Some(coeffs);
                    }
                }
            }
        }
    }
    None
}

/// Brute force over sign choices on `Δ_n^+`: every subset `S` with
/// `Δ_k^+ ∪ S ∪ -(Δ_n^+ ∖ S)` closed under addition.
pub fn positive_systems_by_signs(
    roots: &[Root],
    compact_positive: &[Root],
    noncompact_positive: &[Root],
) -> Vec<Vec<Root>> {
    let all: HashSet<&Root> = roots.iter().collect();
    let n = noncompact_positive.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let mut p: Vec<Root> = compact_positive.to_vec();
        for (k, b) in noncompact_positive.iter().enumerate() {
            p.push(if mask & (1 << k) != 0 { b.clone() } else { -b });
        }
        let set: HashSet<&Root> = p.iter().collect();
        let closed = p.iter().all(|a| {
            p.iter().all(|b| {
                let s = a + b;
                !all.contains(&s) || set.contains(&s)
            })
        });
        if closed {
            p.sort();
            out.push(p);
        }
    }
    out
}
