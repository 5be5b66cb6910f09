//! Command-line front end.
//!
//! ```text
//! aqclass [--algebra NAME | --cartan FILE] --noncompact i[,j...] \
//!         {positive-systems | classify | check [--golden FILE]} \
//!         [--format markdown|csv|json] [--out FILE]
//! ```
//!
//! Noncompact indices are 1-based on the command line. Exit codes: 0 on
//! success, 1 when a check fails, 2 on usage or input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify, CheckStatus, ClassRow, ClassificationReport, CrossCheck, RunOptions};
use crate::error::Error;
use crate::posenum::PositiveSystem;
use crate::reference;
use crate::rootsys::{CartanMatrix, Root};

/// Named types accepted by `--algebra` have rank at most this.
pub const MAX_NAMED_RANK: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid algebra spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Pipeline(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "aqclass", version, about = "Classify cohomological A_q modules of an equal-rank real form")]
pub struct Cli {
    /// Named type: A1..A8, B2..B8, C2..C8, D4..D8, F4, G2.
    #[arg(long, conflicts_with = "cartan")]
    pub algebra: Option<String>,
    /// JSON file: {"type": "F4"} or {"cartan": [[..], ..]}, optionally with "noncompact": [1].
    #[arg(long)]
    pub cartan: Option<PathBuf>,
    /// 1-based indices of the noncompact simple roots.
    #[arg(long, value_delimiter = ',')]
    pub noncompact: Vec<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Markdown, global = true)]
    pub format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the positive systems containing the compact positive roots.
    PositiveSystems,
    /// Classify the A_q modules and their Poincaré polynomials.
    Classify,
    /// Run the invariant suite, optionally against a saved JSON report.
    Check {
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

/// An algebra together with its real form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub label: String,
    pub cartan: CartanMatrix,
    /// 1-based.
    pub noncompact: Vec<usize>,
}

impl AlgebraSpec {
    pub fn named(name: &str, noncompact: &[usize]) -> Result<Self, CliError> {
        let rank: usize = name
            .get(1..)
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| CliError::Spec(format!("unknown type `{name}`")))?;
        if rank > MAX_NAMED_RANK {
            return Err(CliError::Spec(format!("rank {rank} exceeds the supported bound {MAX_NAMED_RANK}")));
        }
        let cartan = CartanMatrix::named(name).map_err(|e| CliError::Spec(e.to_string()))?;
        Self::validated(name.to_ascii_uppercase(), cartan, noncompact)
    }

    /// Parses `{"type": ..}` or `{"cartan": ..}`; `noncompact` on the command
    /// line overrides the document's `"noncompact"`.
    pub fn from_json(text: &str, noncompact: &[usize]) -> Result<Self, CliError> {
        let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Spec(format!("malformed JSON: {e}")))?;
        let listed: Vec<usize> = match doc.get("noncompact") {
            None => Vec::new(),
            Some(v) => serde_json::from_value(v.clone()).map_err(|e| CliError::Spec(format!("noncompact: {e}")))?,
        };
        let noncompact = if noncompact.is_empty() { listed.as_slice() } else { noncompact };
        match (doc.get("type"), doc.get("cartan")) {
            (Some(Value::String(name)), None) => Self::named(name, noncompact),
            (None, Some(m)) => {
                let entries: Vec<Vec<i32>> =
                    serde_json::from_value(m.clone()).map_err(|e| CliError::Spec(format!("cartan: {e}")))?;
                let cartan = CartanMatrix::new(entries).map_err(|e| CliError::Spec(e.to_string()))?;
                Self::validated(format!("custom rank {}", cartan.rank()), cartan, noncompact)
            }
            _ => Err(CliError::Spec("expected exactly one of \"type\" (string) or \"cartan\" (matrix)".into())),
        }
    }

    fn validated(label: String, cartan: CartanMatrix, noncompact: &[usize]) -> Result<Self, CliError> {
        if noncompact.is_empty() {
            return Err(CliError::Spec("no noncompact simple roots given".into()));
        }
        if let Some(&bad) = noncompact.iter().find(|&&i| i == 0 || i > cartan.rank()) {
            return Err(CliError::Spec(format!("noncompact index {bad} out of range 1..={}", cartan.rank())));
        }
        Ok(AlgebraSpec { label, cartan, noncompact: noncompact.to_vec() })
    }

    pub fn zero_based(&self) -> Vec<usize> {
        self.noncompact.iter().map(|i| i - 1).collect()
    }

    pub fn run(&self) -> Result<ClassificationReport, CliError> {
        Ok(classify(&self.label, self.cartan.clone(), &self.zero_based(), &RunOptions::default())?)
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn roots_list(roots: &[Root]) -> String {
    if roots.is_empty() {
        "∅".into()
    } else {
        roots.iter().map(Root::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn coords(roots: &[Root]) -> Value {
    json!(roots.iter().map(|r| r.coeffs().to_vec()).collect::<Vec<_>>())
}

fn catalogue_row(report: &ClassificationReport, system: &PositiveSystem) -> Option<usize> {
    if report.catalogued {
        reference::catalogue_row(system)
    } else {
        None
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn real_form_line(report: &ClassificationReport) -> String {
    let nc: Vec<String> = report.noncompact.iter().map(|i| format!("φ{}", i + 1)).collect();
    format!(
        "{}, noncompact {}, {} (|W| = {}, |W_k| = {}, |Δ_n^+| = {})",
        report.algebra,
        nc.join(", "),
        if report.hermitian { "Hermitian" } else { "non-Hermitian" },
        report.weyl_order,
        report.compact_weyl_order,
        report.noncompact_positive
    )
}

/// One row per positive system.
pub fn render_positive_systems(report: &ClassificationReport, format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Markdown => {
            let mut s = format!("# Positive systems containing Δ_k^+\n\n{}\n\n", real_form_line(report));
            s.push_str("| # | catalogue row | Φ |\n|---|---|---|\n");
            for p in &report.positive_systems {
                let row = catalogue_row(report, p).map_or_else(|| "-".to_string(), |r| r.to_string());
                let _ = writeln!(s, "| {} | {} | {} |", p.index, row, roots_list(&p.simple_system));
            }
            let _ = writeln!(s, "\n{} positive systems", report.positive_systems.len());
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let _ = w.write_record(["index", "catalogue_row", "simple_system"]);
            for p in &report.positive_systems {
                let row = catalogue_row(report, p).map_or_else(String::new, |r| r.to_string());
                let _ = w.write_record([p.index.to_string(), row, roots_list(&p.simple_system)]);
            }
            csv_string(w)
        }
        OutputFormat::Json => {
            let v = json!({
                "algebra": report.algebra,
                "positive_systems": positive_systems_json(report),
            });
            Ok(pretty(&v))
        }
    }
}

fn positive_systems_json(report: &ClassificationReport) -> Value {
    Value::Array(
        report
            .positive_systems
            .iter()
            .map(|p| {
                let mut v = json!({ "index": p.index, "simple_system": coords(&p.simple_system) });
                if let Some(r) = catalogue_row(report, p) {
                    v["catalogue_row"] = json!(r);
                }
                v
            })
            .collect(),
    )
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn class_json(row: &ClassRow) -> Value {
    let mut v = json!({
        "key": coords(&row.class.key),
        "R": row.class.r,
        "levi_type": row.levi.type_label,
        "poincare": row.poincare.coeffs(),
        "poincare_factored": row.poincare.factored(),
        "discrete_series": row.discrete_series,
        "bds": row.bds,
        "lowest_k_type": row.class.lowest_k_type.coeffs(),
        "representatives": row.class.representatives.iter().map(|r| json!({
            "system": r.system,
            "gamma": coords(&r.gamma),
        })).collect::<Vec<_>>(),
    });
    if let Some(label) = row.label {
        v["case"] = json!(label);
    }
    if let Some(d) = &row.ds_data {
        v["harish_chandra_system"] = json!(d.system);
        v["blattner"] = json!(d.blattner.coeffs());
    }
    v
}

/// The full report as a JSON value.
pub fn report_json(report: &ClassificationReport) -> Value {
    json!({
        "algebra": report.algebra,
        "noncompact": report.noncompact.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "positive_systems": positive_systems_json(report),
        "classes": report.rows.iter().map(class_json).collect::<Vec<_>>(),
        "counts": report.counts,
    })
}

/// One row per class, with a totals footer.
pub fn render_classification(report: &ClassificationReport, format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Markdown => {
            let mut s = format!("# A_q classes\n\n{}\n\n", real_form_line(report));
            s.push_str("| # | case | R | Δ(u∩p) | Φ | Γ | Levi | P_q (factored) | P_q (expanded) | DS | BdS |\n");
            s.push_str("|---|---|---|---|---|---|---|---|---|---|---|\n");
            for (i, row) in report.rows.iter().enumerate() {
                let system = &report.positive_systems[row.chosen.system - 1];
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    i + 1,
                    row.label.unwrap_or("-"),
                    row.class.r,
                    roots_list(&row.class.key),
                    roots_list(&system.simple_system),
                    roots_list(&row.chosen.gamma),
                    row.levi.type_label,
                    row.poincare.factored(),
                    row.poincare,
                    flag(row.discrete_series),
                    flag(row.bds)
                );
            }
            for w in &report.warnings {
                let _ = writeln!(s, "\nwarning: {w}");
            }
            let _ = writeln!(
                s,
                "\nclasses / discrete series / Borel-de Siebenthal: {} / {} / {}",
                report.counts.total, report.counts.discrete_series, report.counts.bds
            );
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let _ = w.write_record([
                "index",
                "case",
                "R",
                "key",
                "system",
                "gamma",
                "levi_type",
                "poincare_factored",
                "poincare",
                "discrete_series",
                "bds",
            ]);
            for (i, row) in report.rows.iter().enumerate() {
                let _ = w.write_record([
                    (i + 1).to_string(),
                    row.label.unwrap_or("").to_string(),
                    row.class.r.to_string(),
                    roots_list(&row.class.key),
                    row.chosen.system.to_string(),
                    roots_list(&row.chosen.gamma),
                    row.levi.type_label.clone(),
                    row.poincare.factored(),
                    row.poincare.to_string(),
                    row.discrete_series.to_string(),
                    row.bds.to_string(),
                ]);
            }
            csv_string(w)
        }
        OutputFormat::Json => Ok(pretty(&report_json(report))),
    }
}

/// Differences between the `classes` and `counts` of a saved JSON report and
/// a freshly computed one.
pub fn compare_golden(report: &ClassificationReport, golden: &str) -> Vec<String> {
    let saved: Value = match serde_json::from_str(golden) {
        Ok(v) => v,
        Err(e) => return vec![format!("golden file is not valid JSON: {e}")],
    };
    let current = report_json(report);
    let mut diffs = Vec::new();
    if saved.get("counts") != current.get("counts") {
        diffs.push(format!("counts differ: saved {:?}, computed {}", saved.get("counts"), current["counts"]));
    }
    let project = |v: &Value| -> Vec<(Value, Value, Value)> {
        v.get("classes")
            .and_then(Value::as_array)
            .map(|a| a.iter().map(|c| (c["key"].clone(), c["R"].clone(), c["poincare"].clone())).collect())
            .unwrap_or_default()
    };
    let (a, b) = (project(&saved), project(&current));
    if a.len() != b.len() {
        diffs.push(format!("class count differs: saved {}, computed {}", a.len(), b.len()));
    }
    for (i, (x, y)) in a.iter().zip(&b).enumerate() {
        if x != y {
            diffs.push(format!(
                "class {} differs: saved (R={}, P={}), computed (R={}, P={})",
                i + 1,
                x.1,
                x.2,
                y.1,
                y.2
            ));
        }
    }
    diffs
}

/// Renders the check outcomes; the boolean is whether all passed.
pub fn render_checks(report: &ClassificationReport, extra: &[CrossCheck], format: OutputFormat) -> (String, bool) {
    let checks: Vec<&CrossCheck> = report.cross_checks.iter().chain(extra).collect();
    let passed = !checks.iter().any(|c| c.failed());
    let failures = checks.iter().filter(|c| c.failed()).count();
    let text = match format {
        OutputFormat::Json => pretty(&json!({
            "algebra": report.algebra,
            "checks": checks,
            "counts": report.counts,
            "passed": passed,
        })),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let _ = w.write_record(["check", "status", "detail"]);
            for c in &checks {
                let _ = w.write_record([c.name.as_str(), status_word(c.status), c.detail.as_str()]);
            }
            csv_string(w).unwrap_or_default()
        }
        OutputFormat::Markdown => {
            let mut s = format!("# Checks\n\n{}\n\n", real_form_line(report));
            for c in &checks {
                let _ = writeln!(s, "[{}] {}: {}", status_word(c.status).to_uppercase(), c.name, c.detail);
            }
            if passed {
                let _ = writeln!(s, "\nall {} checks passed", checks.len());
            } else {
                let _ = writeln!(s, "\n{failures} of {} checks failed", checks.len());
            }
            s
        }
    };
    (text, passed)
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Skipped => "skipped",
    }
}

fn resolve_spec(cli: &Cli) -> Result<AlgebraSpec, CliError> {
    match (&cli.algebra, &cli.cartan) {
        (Some(name), None) => AlgebraSpec::named(name, &cli.noncompact),
        (None, Some(path)) => AlgebraSpec::from_json(&read_file(path)?, &cli.noncompact),
        _ => Err(CliError::Usage("exactly one of --algebra or --cartan is required".into())),
    }
}

pub fn cmd_positive_systems(spec: &AlgebraSpec, format: OutputFormat) -> Result<String, CliError> {
    render_positive_systems(&spec.run()?, format)
}

pub fn cmd_classify(spec: &AlgebraSpec, format: OutputFormat) -> Result<String, CliError> {
    render_classification(&spec.run()?, format)
}

/// Returns the rendered outcome and whether every check passed.
pub fn cmd_check(spec: &AlgebraSpec, golden: Option<&str>, format: OutputFormat) -> Result<(String, bool), CliError> {
    let report = spec.run()?;
    let extra: Vec<CrossCheck> = golden
        .map(|g| {
            let diffs = compare_golden(&report, g);
            let detail = if diffs.is_empty() { "matches saved report".to_string() } else { diffs.join("; ") };
            vec![CrossCheck::new("golden", diffs.is_empty(), detail)]
        })
        .unwrap_or_default();
    Ok(render_checks(&report, &extra, format))
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let spec = resolve_spec(cli)?;
    match &cli.command {
        Command::PositiveSystems => cmd_positive_systems(&spec, cli.format),
        Command::Classify => cmd_classify(&spec, cli.format),
        Command::Check { golden } => {
            let golden = golden.as_deref().map(read_file).transpose()?;
            let (text, passed) = cmd_check(&spec, golden.as_deref(), cli.format)?;
            if passed {
                Ok(text)
            } else {
                emit(cli.out.as_deref(), &text)?;
                Err(CliError::CheckFailed("one or more checks failed".into()))
            }
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli).and_then(|text| emit(cli.out.as_deref(), &text)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_specs() {
        assert_eq!(AlgebraSpec::named("F4", &[1]).unwrap().zero_based(), vec![0]);
        assert!(matches!(AlgebraSpec::named("A9", &[1]), Err(CliError::Spec(_))));
        assert!(matches!(AlgebraSpec::named("E6", &[1]), Err(CliError::Spec(_))));
        assert!(matches!(AlgebraSpec::named("F4", &[5]), Err(CliError::Spec(_))));
        assert!(matches!(AlgebraSpec::named("F4", &[0]), Err(CliError::Spec(_))));
        assert!(matches!(AlgebraSpec::named("F4", &[]), Err(CliError::Spec(_))));
    }

    #[test]
    fn json_specs() {
        let s = AlgebraSpec::from_json(r#"{"type": "A2", "noncompact": [2]}"#, &[]).unwrap();
        assert_eq!(s.noncompact, vec![2]);
        let s = AlgebraSpec::from_json(r#"{"cartan": [[2,-1],[-1,2]]}"#, &[1]).unwrap();
        assert_eq!(s.cartan, CartanMatrix::type_a(2).unwrap());
        assert!(AlgebraSpec::from_json("{", &[1]).unwrap_err().to_string().contains("malformed JSON"));
        let reducible = AlgebraSpec::from_json(r#"{"cartan": [[2,0],[0,2]]}"#, &[1]).unwrap();
        assert!(matches!(reducible.run(), Err(CliError::Pipeline(Error::Reducible))));
        assert!(AlgebraSpec::from_json(r#"{"both": 1}"#, &[1]).is_err());
    }

    #[test]
    fn a1_renderings() {
        let spec = AlgebraSpec::named("A1", &[1]).unwrap();
        let md = cmd_positive_systems(&spec, OutputFormat::Markdown).unwrap();
        assert!(md.contains("2 positive systems"));
        let csv = cmd_classify(&spec, OutputFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 4);
        let (text, ok) = cmd_check(&spec, Some("not json"), OutputFormat::Markdown).unwrap();
        assert!(!ok);
        assert!(text.contains("[FAIL] golden"));
    }
}
