//! Levi data and Poincaré polynomials of the compact duals `Y_q`.
//!
//! For an equal-rank pair `(l, l∩k)` the Poincaré polynomial of the compact
//! dual is `W_l(t^2) / W_{l∩k}(t^2)`, where `W(q) = Σ_w q^{ℓ(w)}` is the
//! length generating function of a Weyl group with respect to its own
//! positive roots. Both groups are generated directly inside `Δ(l)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::posenum::PositiveSystem;
use crate::realform::Coloring;
use crate::rootsys::{indecomposables, Root, RootSystem, WeylGroup, DEFAULT_WEYL_BOUND};

/// A polynomial in `t` with nonnegative integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Polynomial(Vec<u64>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn one() -> Self {
        Polynomial(vec![1])
    }

    pub fn monomial(degree: usize) -> Self {
        let mut c = vec![0; degree + 1];
        c[degree] = 1;
        Polynomial(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `c_i = c_{D-i}` over the support `[lowest, D]`.
    pub fn is_palindromic(&self) -> bool {
        let lo = self.lowest_degree().unwrap_or(0);
        let s = &self.0[lo..];
        s.iter().eq(s.iter().rev())
    }

    pub fn has_only_even_degrees(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &c)| c == 0 || i % 2 == 0)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.0);
        Polynomial(c)
    }

    /// Substitutes `t -> t^2`.
    pub fn in_t_squared(&self) -> Self {
        let mut c = vec![0; 2 * self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            c[2 * i] = v;
        }
        Polynomial::new(c)
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial(Vec::new());
        }
        let mut c = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::new(c)
    }

    /// Exact quotient, if `divisor` divides `self` with a nonnegative integer quotient.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.0.len() < divisor.0.len() {
            return None;
        }
        let mut rem: Vec<i128> = self.0.iter().map(|&c| c as i128).collect();
        let d: Vec<i128> = divisor.0.iter().map(|&c| c as i128).collect();
        let lead = *d.last().unwrap();
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![0i128; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + d.len() - 1];
            if top % lead != 0 {
                return None;
            }
            let f = top / lead;
            q[k] = f;
            for (j, dj) in d.iter().enumerate() {
                rem[k + j] -= f * dj;
            }
        }
        if rem.iter().any(|&r| r != 0) || q.iter().any(|&c| c < 0) {
            return None;
        }
        Some(Polynomial::new(q.into_iter().map(|c| c as u64).collect()))
    }

    /// `t^R(...)` with the lowest power factored out, e.g. `t^9(1+t^2+t^4)`.
    pub fn factored(&self) -> String {
        match self.lowest_degree() {
            None | Some(0) => self.to_string(),
            Some(r) => {
                let rest = Polynomial::new(self.0[r..].to_vec());
                let head = if r == 1 { "t".to_string() } else { format!("t^{r}") };
                if rest == Polynomial::one() {
                    head
                } else {
                    format!("{head}({rest})")
                }
            }
        }
    }
}

impl fmt::Display for Polynomial {
    /// Expanded form, e.g. `1+t^4+2t^8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = String;

    /// Parses the expanded form written by `Display`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Polynomial(Vec::new()));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        for term in s.split('+') {
            let (c, deg) = match term.find('t') {
                None => (term, 0usize),
                Some(p) => {
                    let deg = match &term[p + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .and_then(|d| d.parse().ok())
                            .ok_or_else(|| format!("bad term `{term}`"))?,
                    };
                    (&term[..p], deg)
                }
            };
            let c: u64 =
                if c.is_empty() { 1 } else { c.parse().map_err(|_| format!("bad coefficient in `{term}`"))? };
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] += c;
        }
        Ok(Polynomial::new(coeffs))
    }
}

/// Root-level data of the Levi factor `l` of a parabolic and of `l∩k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviData {
    /// `Φ ∖ Γ`
    pub simple_roots: Vec<Root>,
    /// `Δ(l)`
    pub root_subsystem: Vec<Root>,
    /// `Δ(l) ∩ P(Φ)`
    pub positive: Vec<Root>,
    /// `Δ(l) ∩ Δ_k`
    pub compact_subsystem: Vec<Root>,
    pub compact_simple: Vec<Root>,
    /// `|Δ(l) ∩ Δ_n ∩ P(Φ)|`, half the dimension of `Y_q`.
    pub noncompact_count_positive: usize,
    pub center_dim: usize,
    pub weyl_order: usize,
    pub compact_weyl_order: usize,
    /// Coefficients of `W_l(q)`.
    pub weyl_lengths: Vec<u64>,
    /// Coefficients of `W_{l∩k}(q)`.
    pub compact_weyl_lengths: Vec<u64>,
    pub type_label: String,
}

pub fn levi_data(
    rs: &RootSystem,
    coloring: &Coloring,
    system: &PositiveSystem,
    levi_simple: &[Root],
    levi_roots: &[Root],
) -> Result<LeviData> {
    let positive: Vec<Root> = levi_roots.iter().filter(|a| system.contains(a)).cloned().collect();
    let mut simple_roots = levi_simple.to_vec();
    simple_roots.sort();
    if indecomposables(&positive) != simple_roots {
        return Err(Error::NotPositiveSystem("Levi roots are not generated by Φ ∖ Γ".into()));
    }
    let compact_subsystem: Vec<Root> = levi_roots.iter().filter(|a| coloring.is_compact(a)).cloned().collect();
    let compact_positive: Vec<Root> = positive.iter().filter(|a| coloring.is_compact(a)).cloned().collect();
    let compact_simple = indecomposables(&compact_positive);
    let noncompact_count_positive = positive.len() - compact_positive.len();

    let wl = WeylGroup::reflection_subgroup(rs, &simple_roots, DEFAULT_WEYL_BOUND)?;
    let wk = WeylGroup::reflection_subgroup(rs, &compact_simple, DEFAULT_WEYL_BOUND)?;
    let mut data = LeviData {
        center_dim: rs.rank() - simple_roots.len(),
        weyl_order: wl.order(),
        compact_weyl_order: wk.order(),
        weyl_lengths: wl.length_distribution(&positive),
        compact_weyl_lengths: wk.length_distribution(&compact_positive),
        simple_roots,
        root_subsystem: levi_roots.to_vec(),
        positive,
        compact_subsystem,
        compact_simple,
        noncompact_count_positive,
        type_label: String::new(),
    };
    data.type_label = levi_type_label(rs, coloring, &data)?;
    Ok(data)
}

/// `P(Y_q, t) = W_l(t^2) / W_{l∩k}(t^2)`.
pub fn poincare_compact_dual(levi: &LeviData) -> Polynomial {
    let wl = Polynomial::new(levi.weyl_lengths.clone());
    let wk = Polynomial::new(levi.compact_weyl_lengths.clone());
    wl.div_exact(&wk).expect("compact Weyl polynomial divides the Levi Weyl polynomial").in_t_squared()
}

/// `P_q(t) = t^{R(q)} P(Y_q, t)`.
pub fn poincare_aq(r: usize, compact_dual: &Polynomial) -> Polynomial {
    compact_dual.shift(r)
}

/// Closure of `simple` under the reflections in `simple`.
pub fn subsystem_closure(rs: &RootSystem, simple: &[Root]) -> Vec<Root> {
    let mut seen: HashSet<Root> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Root> = simple.iter().cloned().collect();
    while let Some(a) = queue.pop_front() {
        for s in simple {
            let b = rs.reflect(&a, s);
            if seen.insert(b.clone()) {
                queue.push_back(b);
            }
        }
    }
    let mut out: Vec<Root> = seen.into_iter().collect();
    out.sort();
    out
}

/// A connected component of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramComponent {
    pub kind: String,
    pub simple_roots: Vec<Root>,
}

impl DiagramComponent {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }
}

/// Splits `simple` into connected components and names each by Cartan type.
pub fn classify_diagram(rs: &RootSystem, simple: &[Root]) -> Result<Vec<DiagramComponent>> {
    let n = simple.len();
    let a = |i: usize, j: usize| rs.pairing(&simple[j], &simple[i]);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for (j, visited) in seen.iter_mut().enumerate() {
                if !*visited && a(i, j) != 0 {
                    *visited = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let kind = name_component(rs, simple, &comp)?;
        out.push(DiagramComponent { kind, simple_roots: comp.iter().map(|&i| simple[i].clone()).collect() });
    }
    out.sort_by(|x, y| y.rank().cmp(&x.rank()).then_with(|| x.kind.cmp(&y.kind)));
    Ok(out)
}

fn name_component(rs: &RootSystem, simple: &[Root], comp: &[usize]) -> Result<String> {
    let r = comp.len();
    if r == 1 {
        return Ok("A1".into());
    }
    let a = |i: usize, j: usize| rs.pairing(&simple[j], &simple[i]);
    let len = |i: usize| rs.form(&simple[i], &simple[i]);
    let mut degree = vec![0usize; r];
    let mut edges = Vec::new();
    for x in 0..r {
        for y in x + 1..r {
            let m = a(comp[x], comp[y]) * a(comp[y], comp[x]);
            if m != 0 {
                degree[x] += 1;
                degree[y] += 1;
                edges.push((x, y, m));
            }
        }
    }
    if edges.len() != r - 1 {
        return Err(Error::UnrecognizedDiagram);
    }
    let multiple: Vec<&(usize, usize, i32)> = edges.iter().filter(|e| e.2 > 1).collect();
    match multiple.as_slice() {
        [] => {
            let branch: Vec<usize> = (0..r).filter(|&x| degree[x] >= 3).collect();
            match branch.as_slice() {
                [] => Ok(format!("A{r}")),
                [b] if degree[*b] == 3 => {
                    let mut arms: Vec<usize> = edges
                        .iter()
                        .filter_map(|&(x, y, _)| {
                            if x == *b {
                                Some(y)
                            } else if y == *b {
                                Some(x)
                            } else {
                                None
                            }
                        })
                        .map(|start| arm_length(&edges, *b, start))
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => Ok(format!("D{r}")),
                        [1, 2, 2] => Ok("E6".into()),
                        [1, 2, 3] => Ok("E7".into()),
                        [1, 2, 4] => Ok("E8".into()),
                        _ => Err(Error::UnrecognizedDiagram),
                    }
                }
                _ => Err(Error::UnrecognizedDiagram),
            }
        }
        [&(x, y, m)] => {
            if degree.iter().any(|&d| d > 2) {
                return Err(Error::UnrecognizedDiagram);
            }
            match (m, r) {
                (3, 2) => Ok("G2".into()),
                (2, 2) => Ok("B2".into()),
                (2, 4) if degree[x] == 2 && degree[y] == 2 => Ok("F4".into()),
                (2, _) => {
                    let (end, other) = if degree[x] == 1 {
                        (x, y)
                    } else if degree[y] == 1 {
                        (y, x)
                    } else {
                        return Err(Error::UnrecognizedDiagram);
                    };
                    if len(comp[end]) < len(comp[other]) {
                        Ok(format!("B{r}"))
                    } else {
                        Ok(format!("C{r}"))
                    }
                }
                _ => Err(Error::UnrecognizedDiagram),
            }
        }
        _ => Err(Error::UnrecognizedDiagram),
    }
}

fn arm_length(edges: &[(usize, usize, i32)], from: usize, start: usize) -> usize {
    let mut prev = from;
    let mut cur = start;
    let mut n = 1;
    loop {
        let next = edges.iter().find_map(|&(x, y, _)| {
            if x == cur && y != prev {
                Some(y)
            } else if y == cur && x != prev {
                Some(x)
            } else {
                None
            }
        });
        match next {
            Some(nx) => {
                prev = cur;
                cur = nx;
                n += 1;
            }
            None => return n,
        }
    }
}

fn join_types(parts: &[String]) -> String {
    match parts {
        [] => String::new(),
        [one] => one.clone(),
        many => format!("({})", many.join("×")),
    }
}

/// Renders the Levi factor, e.g. `F4/(C3×A1)`, `A1/T1 × A2(c) × T^1`, `T^4`.
///
/// Each simple factor is written `type/compact part`, where the compact part
/// lists the types of its compact roots plus a torus for the rank deficit;
/// factors whose roots are all compact are marked `(c)`.
pub fn levi_type_label(rs: &RootSystem, coloring: &Coloring, levi: &LeviData) -> Result<String> {
    let mut factors = Vec::new();
    for comp in classify_diagram(rs, &levi.simple_roots)? {
        let roots = subsystem_closure(rs, &comp.simple_roots);
        let positive: Vec<Root> = roots.iter().filter(|a| levi.positive.contains(a)).cloned().collect();
        let compact_positive: Vec<Root> = positive.iter().filter(|a| coloring.is_compact(a)).cloned().collect();
        if compact_positive.len() == positive.len() {
            factors.push(format!("{}(c)", comp.kind));
            continue;
        }
        let compact = classify_diagram(rs, &indecomposables(&compact_positive))?;
        let compact_rank: usize = compact.iter().map(DiagramComponent::rank).sum();
        let mut parts: Vec<String> = compact.into_iter().map(|c| c.kind).collect();
        let deficit = comp.rank() - compact_rank;
        if deficit > 0 {
            parts.push(format!("T{deficit}"));
        }
        factors.push(format!("{}/{}", comp.kind, join_types(&parts)));
    }
    if levi.center_dim > 0 {
        factors.push(format!("T^{}", levi.center_dim));
    }
    Ok(factors.join(" × "))
}
