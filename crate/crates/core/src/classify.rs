//! Discrete-series and Borel-de Siebenthal flags, Blattner parameters, and the
//! assembled classification report with its cross-checks.

use std::collections::{BTreeSet, HashSet};

use num_rational::Rational64;
use serde::Serialize;

use crate::cohomology::{levi_data, poincare_aq, poincare_compact_dual, LeviData, Polynomial};
use crate::error::{Error, Result};
use crate::parabolics::{
    build_parabolic, dedupe_classes, enumerate_all_parabolics, sweep_q_x, AqClass, Representative,
};
use crate::posenum::{enumerate_positive_systems, forbidden_pairs, verify_forbidden_patterns, PositiveSystem};
use crate::realform::{color_roots, is_borel_de_siebenthal, BdsKind, Coloring};
use crate::reference;
use crate::rootsys::{CartanMatrix, Root, RootSystem, Weight, WeylGroup};

/// `Δ_k^+ ∪ Δ(u∩p)`, sorted.
pub fn harish_chandra_candidate(class: &AqClass, coloring: &Coloring) -> Vec<Root> {
    let mut set: Vec<Root> = coloring.compact_positive().iter().chain(&class.key).cloned().collect();
    set.sort();
    set.dedup();
    set
}

/// Positive-system test by cardinality, antisymmetry and additive closure.
pub fn is_positive_system(rs: &RootSystem, set: &[Root]) -> bool {
    let members: HashSet<Root> = set.iter().cloned().collect();
    members.len() == set.len()
        && 2 * set.len() == rs.roots().len()
        && set.iter().all(|a| rs.contains(a) && !members.contains(&-a))
        && rs.is_closed(&members)
}

/// Whether `A_q` is a discrete series: `Δ_k^+ ∪ Δ(u∩p)` is a positive system.
pub fn is_discrete_series(rs: &RootSystem, class: &AqClass, coloring: &Coloring) -> bool {
    is_positive_system(rs, &harish_chandra_candidate(class, coloring))
}

/// The same test, by lookup in the enumerated positive systems.
pub fn is_discrete_series_by_membership(class: &AqClass, coloring: &Coloring, systems: &[PositiveSystem]) -> bool {
    let candidate = harish_chandra_candidate(class, coloring);
    systems.iter().any(|s| s.roots == candidate)
}

/// Borel-de Siebenthal type of the Harish-Chandra order of a discrete series.
pub fn bds_kind(rs: &RootSystem, class: &AqClass, coloring: &Coloring) -> Result<BdsKind> {
    if !is_discrete_series(rs, class, coloring) {
        return Err(Error::NotDiscreteSeries);
    }
    is_borel_de_siebenthal(rs, coloring, &harish_chandra_candidate(class, coloring))
}

pub fn is_bds_discrete_series(rs: &RootSystem, class: &AqClass, coloring: &Coloring) -> Result<bool> {
    bds_kind(rs, class, coloring).map(BdsKind::is_bds)
}

/// `Λ = λ + δ_g + δ_n - δ_k` with `λ = 0`, all half-sums taken over the
/// Harish-Chandra order `Δ_k^+ ∪ Δ(u∩p)`.
pub fn blattner_parameter(rs: &RootSystem, class: &AqClass, coloring: &Coloring) -> Result<Weight> {
    if !is_discrete_series(rs, class, coloring) {
        return Err(Error::NotDiscreteSeries);
    }
    let order = harish_chandra_candidate(class, coloring);
    let (compact, noncompact): (Vec<Root>, Vec<Root>) = order.iter().cloned().partition(|a| coloring.is_compact(a));
    let n = rs.rank();
    let (dg, dn, dk) = (half_sum(n, &order), half_sum(n, &noncompact), half_sum(n, &compact));
    let coeffs = (0..n)
        .map(|i| {
            let c = dg[i] + dn[i] - dk[i];
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NotDiscreteSeries)
            }
        })
        .collect::<Result<Vec<i64>>>()?;
    Ok(Weight::new(coeffs))
}

/// Half the sum of the roots in `p`.
pub fn half_sum(rank: usize, p: &[Root]) -> Vec<Rational64> {
    Weight::sum_of(rank, p).coeffs().iter().map(|&c| Rational64::new(c, 2)).collect()
}

pub fn format_rational_vector(v: &[Rational64]) -> String {
    let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteSeriesData {
    /// `Δ_k^+ ∪ Δ(u∩p)`
    pub harish_chandra_order: Vec<Root>,
    /// Index of the order among the enumerated positive systems.
    pub system: Option<usize>,
    pub blattner: Weight,
    /// `λ = δ_g` for the Harish-Chandra order.
    pub lambda: Vec<Rational64>,
    pub bds: BdsKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub class: AqClass,
    /// The representative the Levi data was computed from.
    pub chosen: Representative,
    /// Catalogue label of the chosen representative (F4 split only).
    pub label: Option<&'static str>,
    pub levi: LeviData,
    /// `P(Y_q, t)`
    pub compact_dual: Polynomial,
    /// `P_q(t)`
    pub poincare: Polynomial,
    pub discrete_series: bool,
    pub bds: bool,
    pub ds_data: Option<DiscreteSeriesData>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub total: usize,
    pub discrete_series: usize,
    pub bds: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CrossCheck {
    pub fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        CrossCheck { name: name.into(), status, detail: detail.into() }
    }

    pub fn skipped(name: &str, detail: impl Into<String>) -> Self {
        CrossCheck { name: name.into(), status: CheckStatus::Skipped, detail: detail.into() }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub algebra: String,
    /// 0-based noncompact simple indices.
    pub noncompact: Vec<usize>,
    pub hermitian: bool,
    /// Whether this is the F4 real form described by [`reference`].
    pub catalogued: bool,
    pub weyl_order: usize,
    pub compact_weyl_order: usize,
    pub noncompact_positive: usize,
    pub positive_systems: Vec<PositiveSystem>,
    pub rows: Vec<ClassRow>,
    pub counts: Counts,
    pub cross_checks: Vec<CrossCheck>,
    pub warnings: Vec<String>,
}

impl ClassificationReport {
    pub fn all_checks_pass(&self) -> bool {
        !self.cross_checks.iter().any(CrossCheck::failed)
    }

    pub fn check(&self, name: &str) -> Option<&CrossCheck> {
        self.cross_checks.iter().find(|c| c.name == name)
    }

    pub fn row_by_label(&self, label: &str) -> Option<&ClassRow> {
        self.rows.iter().find(|r| r.label == Some(label))
    }

    pub fn row_by_key(&self, key: &[Root]) -> Option<&ClassRow> {
        self.rows.iter().find(|r| r.class.key == key)
    }
}

/// Tunables for [`classify`].
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Largest box radius for the `q_x` sweep.
    pub q_x_max_radius: i64,
    /// The sweep is skipped when a single box would exceed this many points.
    pub q_x_max_points: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { q_x_max_radius: 10, q_x_max_points: 5_000_000 }
    }
}

/// Counts and sorts rows into a report; an empty row list yields a warning.
/// `weyl_orders` holds `|W|` and `|W_k|`.
pub fn assemble_report(
    algebra: &str,
    rs: &RootSystem,
    coloring: &Coloring,
    positive_systems: Vec<PositiveSystem>,
    mut rows: Vec<ClassRow>,
    cross_checks: Vec<CrossCheck>,
    weyl_orders: (usize, usize),
) -> ClassificationReport {
    rows.sort_by(|a, b| (a.class.r, &a.class.key).cmp(&(b.class.r, &b.class.key)));
    let counts = Counts {
        total: rows.len(),
        discrete_series: rows.iter().filter(|r| r.discrete_series).count(),
        bds: rows.iter().filter(|r| r.bds).count(),
    };
    let mut warnings = Vec::new();
    if rows.is_empty() {
        warnings.push("no classes: the class list is empty".to_string());
    }
    ClassificationReport {
        algebra: algebra.to_string(),
        noncompact: coloring.noncompact_simple().to_vec(),
        hermitian: coloring.is_hermitian(rs),
        catalogued: reference::is_f4_split(rs, coloring),
        weyl_order: weyl_orders.0,
        compact_weyl_order: weyl_orders.1,
        noncompact_positive: coloring.noncompact_positive().len(),
        positive_systems,
        rows,
        counts,
        cross_checks,
        warnings,
    }
}

fn choose_representative<'a>(
    class: &'a AqClass,
    systems: &[PositiveSystem],
    f4_split: bool,
) -> (&'a Representative, Option<&'static str>) {
    if f4_split {
        for rep in &class.representatives {
            if let Some(label) = reference::case_label(&systems[rep.system - 1], &rep.gamma) {
                return (rep, Some(label));
            }
        }
    }
    (&class.representatives[0], None)
}

fn build_row(
    rs: &RootSystem,
    coloring: &Coloring,
    systems: &[PositiveSystem],
    class: AqClass,
    f4_split: bool,
) -> Result<ClassRow> {
    let (rep, label) = choose_representative(&class, systems, f4_split);
    let rep = rep.clone();
    let system = &systems[rep.system - 1];
    let descriptor = build_parabolic(rs, coloring, system, &rep.gamma)?;
    let levi = levi_data(rs, coloring, system, &descriptor.levi_simple, &descriptor.levi_roots)?;
    let compact_dual = poincare_compact_dual(&levi);
    let poincare = poincare_aq(class.r, &compact_dual);
    let discrete_series = is_discrete_series(rs, &class, coloring);
    let ds_data = if discrete_series {
        let order = harish_chandra_candidate(&class, coloring);
        Some(DiscreteSeriesData {
            system: systems.iter().find(|s| s.roots == order).map(|s| s.index),
            blattner: blattner_parameter(rs, &class, coloring)?,
            lambda: half_sum(rs.rank(), &order),
            bds: bds_kind(rs, &class, coloring)?,
            harish_chandra_order: order,
        })
    } else {
        None
    };
    let bds = ds_data.as_ref().is_some_and(|d| d.bds.is_bds());
    Ok(ClassRow { chosen: rep, label, levi, compact_dual, poincare, discrete_series, bds, ds_data, class })
}

fn all_rows(rows: &[ClassRow], pred: impl Fn(&ClassRow) -> bool) -> (bool, String) {
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !pred(r))
        .map(|r| r.label.map_or_else(|| format!("R={} {:?}", r.class.r, r.class.key), str::to_string))
        .collect();
    if bad.is_empty() {
        (true, format!("{} classes", rows.len()))
    } else {
        (false, format!("failed on {}", bad.join(", ")))
    }
}

/// Runs the full pipeline for one algebra and one set of noncompact simple
/// roots (0-based), including every cross-check.
pub fn classify(
    algebra: &str,
    cartan: CartanMatrix,
    noncompact: &[usize],
    options: &RunOptions,
) -> Result<ClassificationReport> {
    let rs = RootSystem::build(cartan)?;
    let coloring = color_roots(&rs, noncompact)?;
    let weyl = WeylGroup::generate(&rs)?;
    let compact_simple = crate::rootsys::indecomposables(coloring.compact_positive());
    let compact_weyl = WeylGroup::reflection_subgroup(&rs, &compact_simple, crate::rootsys::DEFAULT_WEYL_BOUND)?;
    let systems = enumerate_positive_systems(&rs, &weyl, &coloring)?;
    let f4_split = reference::is_f4_split(&rs, &coloring);

    let descriptors = enumerate_all_parabolics(&rs, &coloring, &systems)?;
    let classes = dedupe_classes(rs.rank(), &descriptors);
    let rows =
        classes.into_iter().map(|c| build_row(&rs, &coloring, &systems, c, f4_split)).collect::<Result<Vec<_>>>()?;

    let mut checks = Vec::new();

    checks.push(CrossCheck::new(
        "positive_system_count",
        systems.len() * compact_weyl.order() == weyl.order(),
        format!("{} systems, |W| = {}, |W_k| = {}", systems.len(), weyl.order(), compact_weyl.order()),
    ));

    let pairs = if f4_split { reference::f4_forbidden_pairs() } else { forbidden_pairs(&rs, &coloring) };
    let pattern = verify_forbidden_patterns(&systems, &pairs);
    checks.push(CrossCheck::new(
        "forbidden_patterns",
        pattern.passed(),
        format!(
            "{} pairs over {} systems, {} violations",
            pattern.pairs_checked,
            systems.len(),
            pattern.violations.len()
        ),
    ));

    if f4_split {
        let rows_found: BTreeSet<usize> = systems.iter().filter_map(reference::catalogue_row).collect();
        checks.push(CrossCheck::new(
            "catalogue_systems",
            rows_found.len() == reference::F4_SIMPLE_SYSTEMS.len() && systems.len() == rows_found.len(),
            format!("{} of {} catalogue simple systems matched", rows_found.len(), reference::F4_SIMPLE_SYSTEMS.len()),
        ));
        let labels: BTreeSet<&str> = rows.iter().filter_map(|r| r.label).collect();
        checks.push(CrossCheck::new(
            "catalogue_cases",
            labels.len() == reference::F4_CASES.len() && rows.len() == labels.len(),
            format!("{} of {} catalogue cases matched to classes", labels.len(), reference::F4_CASES.len()),
        ));
    }

    let (ok, detail) = all_rows(&rows, |r| r.compact_dual.is_palindromic());
    checks.push(CrossCheck::new("palindromic", ok, detail));
    let (ok, detail) = all_rows(&rows, |r| r.compact_dual.has_only_even_degrees());
    checks.push(CrossCheck::new("even_degrees", ok, detail));
    let (ok, detail) =
        all_rows(&rows, |r| r.compact_dual.eval_at_one() as usize * r.levi.compact_weyl_order == r.levi.weyl_order);
    checks.push(CrossCheck::new("euler_count", ok, detail));
    let (ok, detail) = all_rows(&rows, |r| {
        r.poincare.degree() == r.class.r + 2 * r.levi.noncompact_count_positive
            && r.poincare.lowest_degree() == Some(r.class.r)
    });
    checks.push(CrossCheck::new("degree_law", ok, detail));

    let n_plus = coloring.noncompact_positive().len();
    let (ok, detail) = all_rows(&rows, |r| r.discrete_series == (r.class.r == n_plus));
    checks.push(CrossCheck::new("ds_iff_full_r", ok, detail));
    let (ok, detail) =
        all_rows(&rows, |r| r.discrete_series == is_discrete_series_by_membership(&r.class, &coloring, &systems));
    checks.push(CrossCheck::new("ds_routes_agree", ok, detail));
    let (ok, detail) = all_rows(&rows, |r| r.ds_data.as_ref().is_none_or(|d| d.blattner == r.class.lowest_k_type));
    checks.push(CrossCheck::new("blattner_is_lowest_k_type", ok, detail));
    let (ok, detail) = all_rows(&rows, |r| !r.bds || r.discrete_series);
    checks.push(CrossCheck::new("bds_implies_ds", ok, detail));

    let orders: BTreeSet<Vec<Root>> =
        rows.iter().filter_map(|r| r.ds_data.as_ref().map(|d| d.harish_chandra_order.clone())).collect();
    let enumerated: BTreeSet<Vec<Root>> = systems.iter().map(|s| s.roots.clone()).collect();
    let ds_count = rows.iter().filter(|r| r.discrete_series).count();
    checks.push(CrossCheck::new(
        "hc_order_bijection",
        orders == enumerated && ds_count == systems.len(),
        format!("{} discrete series, {} distinct orders, {} systems", ds_count, orders.len(), systems.len()),
    ));

    let mut inconsistent = Vec::new();
    for row in &rows {
        for rep in &row.class.representatives {
            let system = &systems[rep.system - 1];
            let d = build_parabolic(&rs, &coloring, system, &rep.gamma)?;
            let levi = levi_data(&rs, &coloring, system, &d.levi_simple, &d.levi_roots)?;
            if poincare_aq(row.class.r, &poincare_compact_dual(&levi)) != row.poincare {
                inconsistent.push(format!("system {} Γ {:?}", rep.system, rep.gamma));
            }
        }
    }
    checks.push(CrossCheck::new(
        "representative_independence",
        inconsistent.is_empty(),
        if inconsistent.is_empty() {
            format!("{} representatives agree", descriptors.len())
        } else {
            inconsistent.join("; ")
        },
    ));

    let points = (2 * options.q_x_max_radius as u64 + 1).checked_pow(rs.rank() as u32);
    match points {
        Some(p) if p <= options.q_x_max_points => {
            let sweep = sweep_q_x(&rs, &coloring, options.q_x_max_radius);
            let keys: BTreeSet<Vec<Root>> = rows.iter().map(|r| r.class.key.clone()).collect();
            checks.push(CrossCheck::new(
                "q_x_oracle",
                sweep.stable && sweep.keys == keys,
                format!(
                    "{} keys from q_x (stable at radius {}: {}), {} from (Φ, Γ)",
                    sweep.keys.len(),
                    sweep.radius,
                    sweep.stable,
                    keys.len()
                ),
            ));
        }
        _ => checks.push(CrossCheck::skipped("q_x_oracle", "box too large for this rank")),
    }

    let borel_keys: BTreeSet<&Vec<Root>> = rows.iter().filter(|r| r.class.r == n_plus).map(|r| &r.class.key).collect();
    checks.push(CrossCheck::new(
        "borel_keys_distinct",
        borel_keys.len() == rows.iter().filter(|r| r.class.r == n_plus).count(),
        format!("{} classes with R = {}", borel_keys.len(), n_plus),
    ));

    let report = assemble_report(algebra, &rs, &coloring, systems, rows, checks, (weyl.order(), compact_weyl.order()));
    Ok(report)
}
