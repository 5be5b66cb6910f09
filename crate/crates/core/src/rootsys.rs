//! Root systems in simple-root coordinates.
//!
//! Every root is an integer vector of coefficients over the base simple roots
//! `φ1, ..., φn`. Reflections act through the Cartan matrix, so no Euclidean
//! embedding and no floating point is ever needed. The Cartan matrix follows
//! the convention `A[i][j] = <φj, φi^∨>`, i.e. `s_i(φj) = φj - A[i][j] φi`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Upper bound on the number of vectors produced by reflection closure.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// Upper bound on the number of Weyl group elements materialized.
pub const DEFAULT_WEYL_BOUND: usize = 500_000;

/// A root written in the base simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The `i`-th simple root (0-based) of a rank `rank` system.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Evaluates the linear functional with coordinates `x` on this root.
    pub fn evaluate(&self, x: &[i64]) -> i64 {
        self.0.iter().zip(x).map(|(&c, &v)| c as i64 * v).sum()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

fn write_combination<T>(f: &mut fmt::Formatter<'_>, coeffs: &[T]) -> fmt::Result
where
    T: Copy + Into<i64>,
{
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        let c: i64 = c.into();
        if c == 0 {
            continue;
        }
        if c < 0 {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        if c.abs() != 1 {
            write!(f, "{}", c.abs())?;
        }
        write!(f, "φ{}", i + 1)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Root {
    /// Inverse of `Display`: parses `φ1+2φ2`, `-(φ1+φ2)` or `0`.
    pub fn parse(text: &str, rank: usize) -> Option<Root> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix("-(").and_then(|t| t.strip_suffix(')')) {
            return Root::parse(inner, rank).map(|r| -r);
        }
        let mut coeffs = vec![0i32; rank];
        if text == "0" {
            return Some(Root(coeffs));
        }
        let mut rest = text;
        while !rest.is_empty() {
            let sign = match rest.as_bytes()[0] {
                b'-' => {
                    rest = &rest[1..];
                    -1
                }
                b'+' => {
                    rest = &rest[1..];
                    1
                }
                _ => 1,
            };
            let phi = rest.find('φ')?;
            let c: i32 = if phi == 0 { 1 } else { rest[..phi].parse().ok()? };
            rest = &rest[phi + 'φ'.len_utf8()..];
            let end = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            let index: usize = rest[..end].parse().ok()?;
            *coeffs.get_mut(index.checked_sub(1)?)? += sign * c;
            rest = &rest[end..];
        }
        Some(Root(coeffs))
    }
}

impl fmt::Display for Root {
    /// Additive notation, e.g. `φ1+2φ2+2φ3` or `-(φ1+φ2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-(")?;
            write_combination(f, &(-self).0)?;
            write!(f, ")")
        } else {
            write_combination(f, &self.0)
        }
    }
}

/// An element of the root lattice that need not be a root (sums of roots,
/// lowest K-type weights, Blattner parameters).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn sum_of<'a>(rank: usize, roots: impl IntoIterator<Item = &'a Root>) -> Self {
        let mut acc = vec![0i64; rank];
        for r in roots {
            for (a, &c) in acc.iter_mut().zip(r.coeffs()) {
                *a += c as i64;
            }
        }
        Weight(acc)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0)
    }
}

/// A validated Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i32>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i32>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!("row {} has length {}, expected {n}", i + 1, row.len())));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {} is {}, expected 2", i + 1, row[i])));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if a > 0 {
                    return Err(Error::InvalidCartan(format!("off-diagonal entry ({}, {}) is positive", i + 1, j + 1)));
                }
                if (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("zero pattern not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i32>] {
        &self.entries
    }

    fn chain(n: usize) -> Vec<Vec<i32>> {
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    }

    pub fn type_a(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::UnknownType(format!("A{n}")));
        }
        Self::new(Self::chain(n))
    }

    /// `B_n`: the last simple root is short.
    pub fn type_b(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnknownType(format!("B{n}")));
        }
        let mut m = Self::chain(n);
        m[n - 1][n - 2] = -2;
        Self::new(m)
    }

    /// `C_n`: the last simple root is long.
    pub fn type_c(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnknownType(format!("C{n}")));
        }
        let mut m = Self::chain(n);
        m[n - 2][n - 1] = -2;
        Self::new(m)
    }

    pub fn type_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::UnknownType(format!("D{n}")));
        }
        let mut m = Self::chain(n);
        m[n - 2][n - 1] = 0;
        m[n - 1][n - 2] = 0;
        m[n - 3][n - 1] = -1;
        m[n - 1][n - 3] = -1;
        Self::new(m)
    }

    /// `G_2` with `φ1` short.
    pub fn type_g2() -> Self {
        CartanMatrix { entries: vec![vec![2, -3], vec![-1, 2]] }
    }

    /// `F_4` numbered `φ1 - φ2 => φ3 - φ4` (φ1, φ2 long), so the highest
    /// root is `2φ1+3φ2+4φ3+2φ4`.
    pub fn type_f4() -> Self {
        CartanMatrix { entries: vec![vec![2, -1, 0, 0], vec![-1, 2, -1, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]] }
    }

    /// Parses names such as `A2`, `b3`, `F4`, `G2`.
    pub fn named(name: &str) -> Result<Self> {
        let name = name.trim();
        let unknown = || Error::UnknownType(name.to_string());
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        match (letter, n) {
            ('A', n) => Self::type_a(n),
            ('B', n) => Self::type_b(n),
            ('C', n) => Self::type_c(n),
            ('D', n) => Self::type_d(n),
            ('F', 4) => Ok(Self::type_f4()),
            ('G', 2) => Ok(Self::type_g2()),
            _ => Err(unknown()),
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, &entry) in self.entries[i].iter().enumerate() {
                if !seen[j] && entry != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Relative squared lengths `l_i` of the simple roots, i.e. positive
    /// integers with `l_i A[i][j] = l_j A[j][i]`.
    pub fn symmetrizer(&self) -> Result<Vec<i64>> {
        let n = self.rank();
        let mut lengths: Vec<Option<Rational64>> = vec![None; n];
        for start in 0..n {
            if lengths[start].is_some() {
                continue;
            }
            lengths[start] = Some(Rational64::from_integer(1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let li = lengths[i].unwrap();
                for (j, slot) in lengths.iter_mut().enumerate() {
                    if i == j || self.entries[i][j] == 0 {
                        continue;
                    }
                    let lj = li * Rational64::new(self.entries[i][j] as i64, self.entries[j][i] as i64);
                    match *slot {
                        None => {
                            *slot = Some(lj);
                            stack.push(j);
                        }
                        Some(existing) if existing != lj => {
                            return Err(Error::NotFiniteType("matrix is not symmetrizable".into()));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let lengths: Vec<Rational64> = lengths.into_iter().map(Option::unwrap).collect();
        let lcm = lengths.iter().fold(1i64, |acc, l| lcm(acc, *l.denom()));
        let ints: Vec<i64> = lengths.iter().map(|l| (l * lcm).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &v| gcd(acc, v));
        Ok(ints.into_iter().map(|v| v / g).collect())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// The full root system of a simple Lie algebra given by its Cartan matrix.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    /// `form[i][j] = l_i A[i][j]`, twice the invariant inner product up to scale.
    form: Vec<Vec<i64>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    positive: Vec<Root>,
    highest: Root,
}

impl RootSystem {
    pub fn build(cartan: CartanMatrix) -> Result<Self> {
        Self::build_with_bound(cartan, DEFAULT_CLOSURE_BOUND)
    }

    /// Generates all roots by closing the simple roots under simple
    /// reflections; gives up with `NotFiniteType` once more than `bound`
    /// vectors have been produced.
    pub fn build_with_bound(cartan: CartanMatrix, bound: usize) -> Result<Self> {
        if !cartan.is_connected() {
            return Err(Error::Reducible);
        }
        let lengths = cartan.symmetrizer()?;
        let n = cartan.rank();
        let form: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| lengths[i] * cartan.entry(i, j) as i64).collect()).collect();

        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let r = Root::simple(n, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(alpha) = queue.pop_front() {
            for i in 0..n {
                let image = reflect_simple(&cartan, i, &alpha);
                if seen.insert(image.clone()) {
                    if seen.len() > bound {
                        return Err(Error::NotFiniteType(format!("reflection closure exceeded {bound} vectors")));
                    }
                    queue.push_back(image);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().collect();
        if let Some(bad) = roots.iter().find(|r| !r.is_positive() && !r.is_negative()) {
            return Err(Error::NotFiniteType(format!("vector {bad} has mixed signs")));
        }
        roots.sort();
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let positive: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();

        let mut rs = RootSystem { cartan, form, roots, index, positive, highest: Root::zero(n) };
        let maximal: Vec<Root> =
            rs.positive.iter().filter(|r| (0..n).all(|i| !rs.contains(&(*r + &Root::simple(n, i))))).cloned().collect();
        if maximal.len() != 1 {
            return Err(Error::NotFiniteType("no unique highest root".into()));
        }
        rs.highest = maximal.into_iter().next().unwrap();
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// All roots in lexicographic order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Roots with nonnegative coefficients, lexicographic order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn contains(&self, alpha: &Root) -> bool {
        self.index.contains_key(alpha)
    }

    pub fn index_of(&self, alpha: &Root) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    /// Twice the invariant form (up to a global scale) between two lattice vectors.
    pub fn form(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += a.0[i] as i64 * self.form[i][j] * b.0[j] as i64;
            }
        }
        acc
    }

    /// `<a, b^∨> = 2 (a, b) / (b, b)`.
    pub fn pairing(&self, a: &Root, b: &Root) -> i32 {
        let num = 2 * self.form(a, b);
        let den = self.form(b, b);
        debug_assert!(den > 0 && num % den == 0);
        (num / den) as i32
    }

    /// `s_i(α) = α - <α, φi^∨> φi`, computed from the Cartan matrix.
    pub fn simple_reflection(&self, i: usize, alpha: &Root) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(reflect_simple(&self.cartan, i, alpha))
    }

    /// Reflection of `alpha` in the hyperplane orthogonal to the root `beta`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Root {
        let k = self.pairing(alpha, beta);
        Root(alpha.0.iter().zip(&beta.0).map(|(a, b)| a - k * b).collect())
    }

    /// Whether `a + b` is a root whenever `a, b` are in `set`, is in `set`.
    pub fn is_closed(&self, set: &HashSet<Root>) -> bool {
        set.iter().all(|a| {
            set.iter().all(|b| {
                let s = a + b;
                !self.contains(&s) || set.contains(&s)
            })
        })
    }
}

fn reflect_simple(cartan: &CartanMatrix, i: usize, alpha: &Root) -> Root {
    let k: i32 = alpha.0.iter().enumerate().map(|(j, &c)| c * cartan.entry(i, j)).sum();
    let mut out = alpha.0.clone();
    out[i] -= k;
    Root(out)
}

/// A Weyl group element, stored as the images of the base simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    images: Vec<Root>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { images: (0..rank).map(|i| Root::simple(rank, i)).collect() }
    }

    pub fn images(&self) -> &[Root] {
        &self.images
    }

    pub fn apply(&self, alpha: &Root) -> Root {
        let n = self.images.len();
        let mut out = vec![0i32; n];
        for (c, img) in alpha.0.iter().zip(&self.images) {
            if *c == 0 {
                continue;
            }
            for (o, v) in out.iter_mut().zip(&img.0) {
                *o += c * v;
            }
        }
        Root(out)
    }

    /// Number of roots of `positive` sent outside of it.
    pub fn length(&self, positive: &HashSet<Root>) -> usize {
        positive.iter().filter(|b| !positive.contains(&self.apply(b))).count()
    }
}

/// A finite reflection group acting on the roots, materialized element by element.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    /// The full Weyl group, by breadth-first closure over simple reflections.
    pub fn generate(rs: &RootSystem) -> Result<Self> {
        Self::reflection_subgroup(rs, &rs.simple_roots(), DEFAULT_WEYL_BOUND)
    }

    /// The subgroup generated by the reflections in `generators`.
    pub fn reflection_subgroup(rs: &RootSystem, generators: &[Root], bound: usize) -> Result<Self> {
        let id = WeylElement::identity(rs.rank());
        let mut seen: HashSet<WeylElement> = HashSet::new();
        seen.insert(id.clone());
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in generators {
                let next = WeylElement { images: w.images.iter().map(|img| rs.reflect(img, g)).collect() };
                if seen.insert(next.clone()) {
                    if seen.len() > bound {
                        return Err(Error::WeylGroupTooLarge(bound));
                    }
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(WeylGroup { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Coefficients of `sum_w q^{l(w)}`, with length measured against `positive`.
    pub fn length_distribution(&self, positive: &[Root]) -> Vec<u64> {
        let pos: HashSet<Root> = positive.iter().cloned().collect();
        let mut counts = vec![0u64; positive.len() + 1];
        for w in &self.elements {
            counts[w.length(&pos)] += 1;
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts
    }
}

/// Elements of `set` that are not the sum of two elements of `set`, sorted.
pub fn indecomposables(set: &[Root]) -> Vec<Root> {
    let members: HashSet<&Root> = set.iter().collect();
    let mut out: Vec<Root> = set.iter().filter(|a| !set.iter().any(|b| members.contains(&(*a - b)))).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// The simple system of the positive system `p`, lexicographically ordered.
pub fn extract_simple_system(rs: &RootSystem, p: &[Root]) -> Result<Vec<Root>> {
    let set: HashSet<Root> = p.iter().cloned().collect();
    if set.len() != p.len() {
        return Err(Error::NotPositiveSystem("duplicate roots".into()));
    }
    if let Some(bad) = p.iter().find(|r| !rs.contains(r)) {
        return Err(Error::NotPositiveSystem(format!("{bad} is not a root")));
    }
    if set.len() * 2 != rs.roots().len() {
        return Err(Error::NotPositiveSystem(format!("has {} roots, expected {}", set.len(), rs.roots().len() / 2)));
    }
    if let Some(bad) = p.iter().find(|r| set.contains(&-*r)) {
        return Err(Error::NotPositiveSystem(format!("contains both ±{bad}")));
    }
    if !rs.is_closed(&set) {
        return Err(Error::NotPositiveSystem("not closed under root addition".into()));
    }
    let simple = indecomposables(p);
    if simple.len() != rs.rank() {
        return Err(Error::NotPositiveSystem(format!("{} indecomposable roots, expected {}", simple.len(), rs.rank())));
    }
    Ok(simple)
}

/// Change of basis from base simple-root coordinates to the coordinates of
/// another simple system. Any simple system is a lattice basis, so the
/// transition matrix is unimodular and every root decomposes integrally.
#[derive(Clone, Debug)]
pub struct SimpleBasis {
    simple: Vec<Root>,
    inverse: Vec<Vec<i64>>,
}

impl SimpleBasis {
    pub fn new(simple: &[Root]) -> Result<Self> {
        let n = simple.len();
        let fail =
            || Error::BasisDecompositionFailure(simple.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "));
        if simple.iter().any(|r| r.rank() != n) {
            return Err(fail());
        }
        // Gauss-Jordan on [M | I], where column k of M is simple[k].
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational64> =
                    (0..n).map(|k| Rational64::from_integer(simple[k].0[r] as i64)).collect();
                row.extend((0..n).map(|k| Rational64::from_integer((k == r) as i64)));
                row
            })
            .collect();
        let mut det = Rational64::from_integer(1);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r][col] != Rational64::from_integer(0)).ok_or_else(fail)?;
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col];
            det *= p;
            for v in m[col].iter_mut() {
                *v /= p;
            }
            for r in 0..n {
                if r != col && m[r][col] != Rational64::from_integer(0) {
                    let factor = m[r][col];
                    let pivot_row = m[col].clone();
                    for (v, pv) in m[r].iter_mut().zip(pivot_row) {
                        *v -= factor * pv;
                    }
                }
            }
        }
        if det != Rational64::from_integer(1) && det != Rational64::from_integer(-1) {
            return Err(fail());
        }
        let inverse = m.into_iter().map(|row| row[n..].iter().map(|v| v.to_integer()).collect()).collect();
        Ok(SimpleBasis { simple: simple.to_vec(), inverse })
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// Coefficients `c` with `alpha = sum_k c[k] simple[k]`.
    pub fn coordinates(&self, alpha: &Root) -> Vec<i64> {
        self.inverse.iter().map(|row| row.iter().zip(&alpha.0).map(|(a, &b)| a * b as i64).sum()).collect()
    }
}
